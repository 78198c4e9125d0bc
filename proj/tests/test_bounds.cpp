#include <doctest.h>

#include <vgr/bounds.hpp>
#include <vgr/classify.hpp>
#include <vgr/constructions.hpp>

#include "fixtures.hpp"

using namespace vgr;

namespace {

// Closed-walk counts of the infinite k-regular tree, by exhausting walks in a finite
// ball with the tree's branching rule.
std::int64_t walks_by_enumeration(int length, int k) {
    std::int64_t count = 0;
    // Only the distance from the root matters; enumerate move sequences explicitly.
    auto rec = [&](auto&& self, int remaining, int dist, std::int64_t mult) -> void {
        if (remaining == 0) {
            if (dist == 0) count += mult;
            return;
        }
        if (dist > remaining) return;
        if (dist == 0) {
            self(self, remaining - 1, 1, mult * k);
        } else {
            self(self, remaining - 1, dist - 1, mult);
            self(self, remaining - 1, dist + 1, mult * (k - 1));
        }
    };
    rec(rec, length, 0, 1);
    return count;
}

} // namespace

TEST_CASE("Moore bound") {
    CHECK(moore_bound(3, 5) == 10);
    CHECK(moore_bound(3, 6) == 14);
    CHECK(moore_bound(3, 3) == 4);
    CHECK(moore_bound(3, 4) == 6);
    CHECK(moore_bound(4, 5) == 17);
    CHECK(moore_bound(3, 7) == 22);
    CHECK(moore_bound(3, 8) == 30);
    for (int g = 3; g < 12; ++g) CHECK(moore_bound(2, g) == g);
    CHECK_THROWS_AS(moore_bound(1, 5), PreconditionViolated);
}

TEST_CASE("lambda_max") {
    CHECK(lambda_max(3, 5) == 6);
    CHECK(lambda_max(4, 6) == 54);
    CHECK(lambda_max(3, 8) == 24);
    CHECK(lambda_max(3, 3) == 3);
    CHECK(lambda_max(4, 3) == 6);
    // Moore graphs attain it.
    CHECK(vgr_profile(fixture::petersen())->lambda == lambda_max(3, 5));
    CHECK(vgr_profile(fixture::heawood())->lambda == lambda_max(3, 6));
    CHECK(vgr_profile(complete_graph(6))->lambda == lambda_max(5, 3));
    CHECK(vgr_profile(fixture::complete_bipartite(4, 4))->lambda == lambda_max(4, 4));
}

TEST_CASE("non-existence verdicts") {
    CHECK(nonexistence_verdict(3, 3, 2).rule == rule::kGirthThreeGap);
    CHECK(nonexistence_verdict(4, 4, 17).rule == rule::kEvenGirthGap);
    CHECK(nonexistence_verdict(3, 7, 11).rule == rule::kOddGirthGap);
    CHECK(nonexistence_verdict(3, 5, 7).rule == rule::kAboveMax);
    CHECK_FALSE(nonexistence_verdict(4, 6, 51).impossible);
    CHECK_FALSE(nonexistence_verdict(3, 5, 5).impossible);
    CHECK_FALSE(nonexistence_verdict(3, 5, 6).impossible);
    CHECK(nonexistence_verdict(4, 5, 18).rule == rule::kMooreOrder);
    CHECK(nonexistence_verdict(3, 7, 12).rule == rule::kMooreOrder);
    CHECK_THROWS_AS(nonexistence_verdict(3, 5, 0), PreconditionViolated);
}

TEST_CASE("lambda_max with a Moore order passing divisibility is undecided") {
    for (auto [k, g] : {std::pair{3, 5}, {3, 6}, {3, 8}, {4, 4}, {4, 3}, {4, 6}, {3, 4}, {3, 3}, {7, 5}})
        CHECK_FALSE(nonexistence_verdict(k, g, lambda_max(k, g)).impossible);
}

TEST_CASE("lb_even") {
    CHECK(lb_even(3, 8, 1) == 41);
    CHECK(lb_even(4, 4, 1) == 13);
    CHECK(lb_even(4, 4, 1) <= 20);
    for (int k = 3; k <= 6; ++k)
        for (int g = 4; g <= 10; g += 2) CHECK(lb_even(k, g, lambda_max(k, g)) == moore_bound(k, g));
    CHECK(lb_even(3, 6, 12, true) == 14);
    CHECK_THROWS_AS(lb_even(3, 5, 1), PreconditionViolated);
}

TEST_CASE("lb_even is non-increasing in lambda") {
    for (int k = 3; k <= 5; ++k)
        for (int g = 4; g <= 8; g += 2)
            for (std::int64_t l = 1; l < lambda_max(k, g); ++l) {
                CHECK(lb_even(k, g, l + 1) <= lb_even(k, g, l));
                CHECK(lb_even(k, g, l + 1, true) <= lb_even(k, g, l, true));
            }
}

TEST_CASE("lb_odd") {
    CHECK(lb_odd(3, 5, 6) == 10);
    CHECK(lb_odd(3, 5, 1) == 14);
    CHECK(lb_odd(3, 7, 6) == 26);
    CHECK(lb_odd(3, 7, 6) <= 28);
    for (int k = 3; k <= 6; ++k)
        for (int g = 3; g <= 9; g += 2) CHECK(lb_odd(k, g, lambda_max(k, g)) == moore_bound(k, g));
}

TEST_CASE("lb_lambda_refined") {
    // Lambda at its cap: the denominator reduces to 2(lambda - lambda_max) <= 0.
    for (int k = 3; k <= 5; ++k)
        for (int g = 4; g <= 8; g += 2) {
            std::int64_t cap = 1;
            for (int i = 0; i < g / 2; ++i) cap *= k - 1;
            for (std::int64_t l : {std::int64_t{1}, lambda_max(k, g)})
                CHECK_THROWS_AS(lb_lambda_refined(k, g, l, cap), NonPositiveDenominator);
        }
    CHECK(lb_lambda_refined(3, 6, 4, 1) == 18);
    CHECK(lb_lambda_refined(3, 4, 2, 1) == 8);
    CHECK(lb_lambda_refined(3, 4, 2, 1) <= 8);
    // 2*1 - 3*2 + 4 - 2*max(0, ceil((4-4)/4)) = 0.
    CHECK_THROWS_AS(lb_lambda_refined(3, 4, 1, 2), NonPositiveDenominator);
    CHECK_FALSE(try_lb_lambda_refined(3, 4, 1, 2).has_value());
    CHECK_THROWS_AS(lb_lambda_refined(3, 4, 1, 5), PreconditionViolated);
}

TEST_CASE("lb_signature_avg") {
    CHECK(lb_signature_avg(4, 6, 18) == 35);
    CHECK(lb_signature_avg(3, 6, 4) == std::max(*try_lb_lambda_refined(3, 6, 4, 2), *try_lb_lambda_refined(3, 6, 4, 3)));
    // 2*lambda/k integral: a single candidate.
    CHECK(lb_signature_avg(3, 6, 6) == lb_lambda_refined(3, 6, 6, 4));
}

TEST_CASE("closed walks on the regular tree") {
    for (int k = 2; k <= 10; ++k) {
        CHECK(cyclefree_closed_walks(2, k) == k);
        CHECK(cyclefree_closed_walks(0, k) == 1);
        CHECK(cyclefree_closed_walks(5, k) == 0);
        for (int len = 0; len <= 12; ++len) CHECK(cyclefree_closed_walks(len, k) == walks_by_enumeration(len, k));
    }
    CHECK(cyclefree_closed_walks(6, 3) == 87);
    CHECK(cyclefree_closed_walks(8, 4) == 2092);
}

TEST_CASE("spectral bound") {
    // g = 6: 1 + 3^6 / (c(6,3) + 2 lambda) with c(6,3) = 87.
    CHECK(walks_by_enumeration(6, 3) == 87);
    CHECK(lb_spectral(3, 6, 12) == 8);
    CHECK(lb_spectral(3, 6, 12, true) == 14);
    CHECK(lb_spectral(3, 6, 1) == 10);
    CHECK(lb_spectral(3, 6, 1, true) == 17);
    // g = 4: (15 + 8 + 81 - 2*3*9) / (15 - 9 + 8) = 50/14.
    CHECK(lb_spectral(3, 4, 4) == 4);
    CHECK(lb_spectral(3, 4, 4, true) == 8);
    for (int k = 3; k <= 6; ++k) CHECK(*lb_spectral(k, 4, lambda_max(k, 4)) <= moore_bound(k, 4));
}

TEST_CASE("divisibility refinement") {
    CHECK(divisibility_refine(3, 5, 1, 14) == 20);
    CHECK(divisibility_refine(3, 4, 6, 5) == 6);
    CHECK(divisibility_refine(4, 5, 2, 28) == 30);
}

TEST_CASE("best lower bound") {
    const auto r = best_lower_bound(3, 3, 2);
    CHECK(r.impossible);
    CHECK_FALSE(r.best_lb.has_value());
    CHECK(best_lower_bound(3, 6, 12).best_lb == 14);
    CHECK(best_lower_bound(3, 6, 1).best_lb == 24);
    CHECK(best_lower_bound(3, 5, 1).best_lb == 20);
    CHECK(best_lower_bound(3, 4, 4).best_lb == 8);
    CHECK(best_lower_bound(3, 6, 12).requires_moore_graph);
    CHECK(best_lower_bound(4, 5, 18).impossible);
}

TEST_CASE("best lower bound invariants") {
    for (int k = 3; k <= 5; ++k)
        for (int g = 3; g <= 8; ++g)
            for (std::int64_t l = 1; l <= lambda_max(k, g); ++l) {
                const auto r = best_lower_bound(k, g, l);
                if (r.impossible) {
                    CHECK_FALSE(r.best_lb.has_value());
                    continue;
                }
                REQUIRE(r.best_lb.has_value());
                CHECK(*r.best_lb >= r.moore);
                CHECK((*r.best_lb * k) % 2 == 0);
                CHECK((*r.best_lb * l) % g == 0);
                if (g % 2 == 1) {
                    for (const auto& b : r.lbs) CHECK(b.rule != std::string(rule::kSpectral));
                }
            }
}

TEST_CASE("best lower bound never exceeds a known graph") {
    std::vector<Graph> known{fixture::petersen(), fixture::heawood(), fixture::cube(), fixture::octahedron(),
                             fixture::shrikhande(), complete_graph(5), double_complete(3), double_complete(4),
                             double_complete(5), fixture::complete_bipartite(4, 4),
                             cartesian_product(complete_graph(4), complete_graph(4)),
                             generalized_truncation(cycle_graph(5), complete_graph(6)),
                             generalized_truncation(cycle_graph(3), complete_graph(4))};
    for (const auto& g : known) {
        const auto p = vgr_profile(g);
        REQUIRE(p.has_value());
        const auto r = best_lower_bound(p->k, p->g, p->lambda);
        CHECK_FALSE(r.impossible);
        CHECK(*r.best_lb <= p->v);
    }
}

TEST_CASE("overflow is reported, not wrapped") {
    CHECK_THROWS_AS(moore_bound(1000, 40), ArithmeticOverflow);
    CHECK_THROWS_AS(lb_spectral(50, 40, 1), ArithmeticOverflow);
}
