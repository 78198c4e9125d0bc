#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "vgr/error.hpp"

namespace vgr {

/// Raised by lb_lambda_refined when the bound's denominator is not positive, i.e. no edge
/// of a vgr graph with these parameters can lie on exactly Lambda girth-cycles.
class NonPositiveDenominator : public Error {
public:
    NonPositiveDenominator() : Error("lower bound denominator is not positive") {}
};

/// Moore bound M(k,g) on the order of a k-regular graph of girth g. Requires k >= 2, g >= 3.
std::int64_t moore_bound(int k, int g);

/// Largest possible number of girth-cycles through a vertex of a (k,g)-graph,
/// k(k-1)^floor(g/2) / 2. Attained exactly by Moore graphs.
std::int64_t lambda_max(int k, int g);

struct NonexistenceVerdict {
    bool impossible = false;
    /// Name of the rule that decided impossibility; empty for NoInfo.
    std::string rule;
};

namespace rule {
inline constexpr const char* kAboveMax = "lambda-above-max";
inline constexpr const char* kGirthThreeGap = "girth3-gap";
inline constexpr const char* kOddGirthGap = "odd-girth-gap";
inline constexpr const char* kEvenGirthGap = "even-girth-gap";
inline constexpr const char* kMooreOrder = "moore-order-divisibility";
inline constexpr const char* kMoore = "moore";
inline constexpr const char* kEven = "even-combinatorial";
inline constexpr const char* kOdd = "odd-combinatorial";
inline constexpr const char* kSignatureAverage = "signature-average";
inline constexpr const char* kSpectral = "spectral";
inline constexpr const char* kDivisibility = "divisibility";
} // namespace rule

/// Closed-form non-existence rules. Requires k >= 3, g >= 3, lambda >= 1.
///
/// Besides the published gap theorems, lambda == lambda_max is decided when the Moore
/// order itself fails the divisibility conditions (a graph attaining lambda_max must be a
/// Moore graph). Otherwise lambda == lambda_max is NoInfo.
NonexistenceVerdict nonexistence_verdict(int k, int g, std::int64_t lambda);

/// Combinatorial bound for even girth through an edge on at most floor(2 lambda/k) girth-cycles.
std::int64_t lb_even(int k, int g, std::int64_t lambda, bool bipartite = false);

/// Combinatorial bound for odd girth.
std::int64_t lb_odd(int k, int g, std::int64_t lambda);

/// Even-girth bound given an edge on exactly `edge_cycles` girth-cycles.
/// Throws NonPositiveDenominator when that edge count is infeasible.
std::int64_t lb_lambda_refined(int k, int g, std::int64_t lambda, std::int64_t edge_cycles);
std::optional<std::int64_t> try_lb_lambda_refined(int k, int g, std::int64_t lambda,
                                                  std::int64_t edge_cycles);

/// Max of lb_lambda_refined over the two integers nearest the signature average 2 lambda/k.
/// nullopt when both are infeasible.
std::optional<std::int64_t> lb_signature_avg(int k, int g, std::int64_t lambda);

/// Number of closed walks of the given length from a vertex of the infinite k-regular tree.
std::int64_t cyclefree_closed_walks(int length, int k);

/// Spectral bound for even girth (bipartite variant when requested). nullopt when the
/// printed expression has a non-positive denominator.
std::optional<std::int64_t> lb_spectral(int k, int g, std::int64_t lambda, bool bipartite = false);

/// Smallest n >= n0 with n*k even and n*lambda divisible by g.
std::int64_t divisibility_refine(int k, int g, std::int64_t lambda, std::int64_t n0);

struct RuleVerdict {
    std::string rule;
    bool impossible = false;
};

struct RuleBound {
    std::string rule;
    std::int64_t value = 0;
};

struct BoundReport {
    int k = 0;
    int g = 0;
    std::int64_t lambda = 0;
    std::int64_t moore = 0;
    std::int64_t lambda_cap = 0;
    std::vector<RuleVerdict> verdicts;
    std::vector<RuleBound> lbs;
    /// nullopt when impossible (infinite).
    std::optional<std::int64_t> best_lb;
    bool impossible = false;
    /// lambda == lambda_cap: any such graph is a Moore graph. Informational.
    bool requires_moore_graph = false;
};

BoundReport best_lower_bound(int k, int g, std::int64_t lambda);

} // namespace vgr
