#include "vgr/bounds.hpp"

#include <algorithm>
#include <limits>
#include <string>
#include <vector>

namespace vgr {

namespace {

using Wide = __int128;

Wide checked_mul(Wide a, Wide b) {
    Wide r;
    if (__builtin_mul_overflow(a, b, &r)) throw ArithmeticOverflow("bound arithmetic overflow");
    return r;
}

Wide checked_add(Wide a, Wide b) {
    Wide r;
    if (__builtin_add_overflow(a, b, &r)) throw ArithmeticOverflow("bound arithmetic overflow");
    return r;
}

Wide power(Wide base, int exp) {
    Wide r = 1;
    for (int i = 0; i < exp; ++i) r = checked_mul(r, base);
    return r;
}

// Ceiling of a / b for b > 0.
Wide ceil_div(Wide a, Wide b) {
    if (a >= 0) return (a + b - 1) / b;
    return -((-a) / b);
}

std::int64_t narrow(Wide x) {
    if (x > std::numeric_limits<std::int64_t>::max() || x < std::numeric_limits<std::int64_t>::min())
        throw ArithmeticOverflow("bound does not fit in 64 bits");
    return static_cast<std::int64_t>(x);
}

void require(bool ok, const char* what) {
    if (!ok) throw PreconditionViolated(what);
}

// Moore-tree part for even girth 2h: 2((k-1)^h - 1)/(k-2).
Wide even_tree_order(int k, int h) { return 2 * (power(k - 1, h) - 1) / (k - 2); }

Wide closed_walks(int length, int k) {
    if (length % 2 == 1) return 0;
    // walks[d] = number of walks of the current length ending at distance d from the root.
    std::vector<Wide> walks(static_cast<std::size_t>(length) + 2, 0);
    walks[0] = 1;
    for (int step = 0; step < length; ++step) {
        std::vector<Wide> next(walks.size(), 0);
        for (std::size_t d = 0; d + 1 < walks.size(); ++d) {
            if (walks[d] == 0) continue;
            if (d == 0) {
                next[1] = checked_add(next[1], checked_mul(walks[0], k));
            } else {
                next[d - 1] = checked_add(next[d - 1], walks[d]);
                next[d + 1] = checked_add(next[d + 1], checked_mul(walks[d], k - 1));
            }
        }
        walks = std::move(next);
    }
    return walks[0];
}

} // namespace

std::int64_t moore_bound(int k, int g) {
    require(k >= 2 && g >= 3, "moore_bound requires k >= 2 and g >= 3");
    Wide total = 0;
    if (g % 2 == 1) {
        total = 1;
        for (int i = 0; i <= (g - 3) / 2; ++i) total = checked_add(total, checked_mul(k, power(k - 1, i)));
    } else {
        for (int i = 0; i <= (g - 2) / 2; ++i) total = checked_add(total, power(k - 1, i));
        total = checked_mul(total, 2);
    }
    return narrow(total);
}

std::int64_t lambda_max(int k, int g) {
    require(k >= 3 && g >= 3, "lambda_max requires k >= 3 and g >= 3");
    const Wide twice = checked_mul(k, power(k - 1, g / 2));
    // One of k, k-1 is even.
    if (twice % 2 != 0) throw ArithmeticOverflow("lambda_max is not integral");
    return narrow(twice / 2);
}

std::int64_t divisibility_refine(int k, int g, std::int64_t lambda, std::int64_t n0) {
    require(n0 >= 1 && g >= 1, "divisibility_refine requires n0 >= 1");
    for (std::int64_t n = n0;; ++n) {
        const bool even_edges = (static_cast<Wide>(n) * k) % 2 == 0;
        const bool whole_cycles = (static_cast<Wide>(n) * lambda) % g == 0;
        if (even_edges && whole_cycles) return n;
    }
}

NonexistenceVerdict nonexistence_verdict(int k, int g, std::int64_t lambda) {
    require(k >= 3 && g >= 3 && lambda >= 1, "nonexistence_verdict requires k >= 3, g >= 3, lambda >= 1");
    const std::int64_t cap = lambda_max(k, g);
    if (lambda > cap) return {true, rule::kAboveMax};
    const std::int64_t gap = cap - lambda;
    if (g == 3 && gap == 1) return {true, rule::kGirthThreeGap};
    if (g % 2 == 1 && g >= 7 && gap > 0 && 2 * gap <= k - 1) return {true, rule::kOddGirthGap};
    if (g % 2 == 0 && gap > 0 && gap < k - 1) return {true, rule::kEvenGirthGap};
    if (gap == 0) {
        const std::int64_t m = moore_bound(k, g);
        if (divisibility_refine(k, g, lambda, m) != m) return {true, rule::kMooreOrder};
    }
    return {};
}

std::int64_t lb_even(int k, int g, std::int64_t lambda, bool bipartite) {
    require(k >= 3 && g >= 4 && g % 2 == 0, "lb_even requires k >= 3 and even g >= 4");
    const int h = g / 2;
    const Wide p = power(k - 1, h);
    const Wide avg_floor = checked_mul(2, lambda) / k;
    if (bipartite) return narrow(even_tree_order(k, h) + 2 * ceil_div(p - avg_floor, k));
    return narrow(even_tree_order(k, h) + ceil_div(2 * p - 2 * avg_floor, k));
}

std::int64_t lb_odd(int k, int g, std::int64_t lambda) {
    require(k >= 3 && g >= 3 && g % 2 == 1, "lb_odd requires k >= 3 and odd g >= 3");
    const int h = g / 2;
    const Wide top = checked_mul(k, power(k - 1, h));
    return narrow((top - 2) / (k - 2) + ceil_div(top - checked_mul(2, lambda), k));
}

std::optional<std::int64_t> try_lb_lambda_refined(int k, int g, std::int64_t lambda,
                                                  std::int64_t edge_cycles) {
    require(k >= 3 && g >= 4 && g % 2 == 0, "lb_lambda_refined requires k >= 3 and even g >= 4");
    const int h = g / 2;
    const Wide p = power(k - 1, h);
    const Wide q = power(k - 1, h - 1);
    const Wide e = edge_cycles;
    require(e >= 0 && e <= p, "lb_lambda_refined requires 0 <= Lambda <= (k-1)^h");
    // ceil(e^2 / (2q) - e/2) = ceil((e^2 - e q) / (2q))
    const Wide pairs = std::max<Wide>(0, ceil_div(checked_mul(e, e) - checked_mul(e, q), 2 * q));
    const Wide den = checked_mul(2, lambda) - 3 * e + p - 2 * pairs;
    if (den <= 0) return std::nullopt;
    return narrow(even_tree_order(k, h) + ceil_div(checked_mul(p - e, p - e), den));
}

std::int64_t lb_lambda_refined(int k, int g, std::int64_t lambda, std::int64_t edge_cycles) {
    auto r = try_lb_lambda_refined(k, g, lambda, edge_cycles);
    if (!r) throw NonPositiveDenominator();
    return *r;
}

std::optional<std::int64_t> lb_signature_avg(int k, int g, std::int64_t lambda) {
    require(k >= 3 && g >= 4 && g % 2 == 0, "lb_signature_avg requires k >= 3 and even g >= 4");
    const std::int64_t lo = 2 * lambda / k;
    const std::int64_t hi = (2 * lambda + k - 1) / k;
    const std::int64_t cap = narrow(power(k - 1, g / 2));
    std::optional<std::int64_t> best;
    for (std::int64_t e : {lo, hi}) {
        if (e > cap) continue;
        if (auto b = try_lb_lambda_refined(k, g, lambda, e); b && (!best || *b > *best)) best = b;
    }
    return best;
}

std::int64_t cyclefree_closed_walks(int length, int k) {
    require(length >= 0 && k >= 2, "cyclefree_closed_walks requires length >= 0 and k >= 2");
    return narrow(closed_walks(length, k));
}

std::optional<std::int64_t> lb_spectral(int k, int g, std::int64_t lambda, bool bipartite) {
    require(k >= 3 && g >= 4 && g % 2 == 0, "lb_spectral requires k >= 3 and even g >= 4");
    const Wide full = closed_walks(g, k);
    const Wide half = closed_walks(g / 2, k);
    const Wide kg = power(k, g);
    const Wide two_lambda = checked_mul(2, lambda);
    Wide num, den;
    if (g % 4 == 0) {
        num = full + two_lambda + kg - 2 * checked_mul(half, power(k, g / 2));
        den = full - checked_mul(half, half) + two_lambda;
        if (bipartite) num = checked_mul(2, num);
    } else {
        den = full + two_lambda;
        num = bipartite ? checked_mul(2, kg) : full + two_lambda + kg;
    }
    if (den <= 0) return std::nullopt;
    return narrow(ceil_div(num, den));
}

BoundReport best_lower_bound(int k, int g, std::int64_t lambda) {
    BoundReport r;
    r.k = k;
    r.g = g;
    r.lambda = lambda;
    r.moore = moore_bound(k, g);
    r.lambda_cap = lambda_max(k, g);
    r.requires_moore_graph = lambda == r.lambda_cap;

    const std::int64_t gap = r.lambda_cap - lambda;
    auto verdict = nonexistence_verdict(k, g, lambda);
    auto record = [&](const char* name, bool applies) {
        if (applies) r.verdicts.push_back({name, verdict.rule == name});
    };
    record(rule::kAboveMax, true);
    record(rule::kGirthThreeGap, g == 3);
    record(rule::kOddGirthGap, g % 2 == 1 && g >= 7);
    record(rule::kEvenGirthGap, g % 2 == 0);
    record(rule::kMooreOrder, gap == 0);
    if (verdict.impossible) {
        r.impossible = true;
        return r;
    }

    r.lbs.push_back({rule::kMoore, r.moore});
    if (g % 2 == 0) {
        r.lbs.push_back({rule::kEven, lb_even(k, g, lambda)});
        if (auto s = lb_signature_avg(k, g, lambda)) r.lbs.push_back({rule::kSignatureAverage, *s});
        if (auto s = lb_spectral(k, g, lambda)) r.lbs.push_back({rule::kSpectral, *s});
    } else {
        r.lbs.push_back({rule::kOdd, lb_odd(k, g, lambda)});
    }
    std::int64_t best = 0;
    for (const auto& b : r.lbs) best = std::max(best, b.value);
    const std::int64_t refined = divisibility_refine(k, g, lambda, best);
    if (refined != best) r.lbs.push_back({rule::kDivisibility, refined});

    // A graph attaining lambda_max has exactly the Moore order.
    if (r.requires_moore_graph && refined > r.moore) {
        for (auto& v : r.verdicts)
            if (v.rule == rule::kMooreOrder) v.impossible = true;
        r.impossible = true;
        return r;
    }
    r.best_lb = refined;
    return r;
}

} // namespace vgr
