#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "harborth/bounds.hpp"
#include "harborth/numeric.hpp"
#include "harborth/solver.hpp"
#include "test_util.hpp"

using namespace harborth;

TEST_CASE("g1 and g2 closed forms") {
    const BoundReport c5 = BoundsRegistry::g1_g2_values(Group::from_moduli({5}), 2);
    CHECK(c5.exact == 4);

    const BoundReport c2cubed = BoundsRegistry::g1_g2_values(Group::from_moduli({2, 2, 2}), 2);
    CHECK(c2cubed.exact == 9);  // |G| + 1

    const BoundReport g1 = BoundsRegistry::g1_g2_values(Group::from_moduli({2, 12}), 1);
    CHECK(g1.exact == 24);

    CHECK_THROWS_AS(BoundsRegistry::g1_g2_values(Group::from_moduli({5}), 3),
                    std::domain_error);
}

TEST_CASE("g2 for C_2+C_12 via the pair-inverse argument") {
    // order 24 is beyond the brute-force cap; the halving sizes pin the value:
    // a 2-free set holds at most one of each {x, -x} pair plus all of B.
    const Group g = Group::from_moduli({2, 12});
    const auto hd = halving_decomposition(g);
    CHECK(hd.torsion.size() == 4);
    CHECK(hd.half.size() == 10);
    const BoundReport r = BoundsRegistry::g1_g2_values(g, 2);
    CHECK(r.exact == 15);
    REQUIRE(r.witness.has_value());
    CHECK(r.witness->size() == 14);
    CHECK(is_k_zero_sum_free(*r.witness, 2));
    // maximality: every element outside the witness pairs with one inside
    for (std::int64_t x = 0; x < g.order(); ++x) {
        const auto xi = static_cast<std::uint32_t>(x);
        if (!r.witness->contains(xi)) {
            CHECK(r.witness->contains(g.negate(xi)));
        }
    }
}

TEST_CASE("g2 odd-order shortcut agrees with the general formula") {
    for (std::int64_t n : {3, 5, 7, 9, 15, 21, 27}) {
        const Group g = Group::from_moduli({n});
        const BoundReport r = BoundsRegistry::g1_g2_values(g, 2);
        CHECK(r.exact == (g.order() + 3) / 2);
    }
    const BoundReport r33 = BoundsRegistry::g1_g2_values(Group::from_moduli({3, 3}), 2);
    CHECK(r33.exact == (9 + 3) / 2);
}

TEST_CASE("g1_g2 equals the brute-force oracle up to order 18") {
    for (const auto& chain : testutil::all_abelian_groups(18)) {
        const Group g = Group::from_moduli(chain);
        for (int k = 1; k <= 2; ++k) {
            const BoundReport r = BoundsRegistry::g1_g2_values(g, k);
            const ExactResult oracle = brute_force_oracle(g, k);
            REQUIRE(r.exact == oracle.harborth);
        }
    }
}

TEST_CASE("thm311_value spot checks") {
    // k = 4: both residues reduce to ceil((p+15)/4)
    for (std::int64_t p : {5, 7, 11, 13, 17, 19, 23, 29, 31}) {
        const auto r = BoundsRegistry::thm311_value(p, 4);
        REQUIRE(r.has_value());
        CHECK(r->exact == ceil_div(p + 15, 4));
    }
    // k = 3, p = 1 mod 3: exact (p+8)/3
    for (std::int64_t p : {7, 13, 19, 31}) {
        const auto r = BoundsRegistry::thm311_value(p, 3);
        REQUIRE(r.has_value());
        CHECK(r->exact == ceil_div(p + 8, 3));
    }
    // k = 3, p = 2 mod 3: two-point interval
    const auto interval = BoundsRegistry::thm311_value(11, 3);
    REQUIRE(interval.has_value());
    CHECK_FALSE(interval->exact.has_value());
    CHECK(interval->lower == (11 - 2) / 3 + 3);
    CHECK(interval->upper == interval->lower + 1);
    // k = 6, p = 7: below the p > 9 threshold
    CHECK_FALSE(BoundsRegistry::thm311_value(7, 6).has_value());
    // k = 8: threshold p > 16, and the uncovered residue band 2..m
    CHECK_FALSE(BoundsRegistry::thm311_value(11, 8).has_value());
    CHECK_FALSE(BoundsRegistry::thm311_value(19, 8).has_value());  // 19 = 3 mod 8
    REQUIRE(BoundsRegistry::thm311_value(17, 8).has_value());
    CHECK(BoundsRegistry::thm311_value(17, 8)->exact == ceil_div(17 + 63, 8));
}

TEST_CASE("thm311 k=4 reduces to the single ceiling for p up to 10^4") {
    for (std::int64_t p = 5; p <= 10000; ++p) {
        if (!is_prime(p)) continue;
        const auto r = BoundsRegistry::thm311_value(p, 4);
        REQUIRE(r.has_value());
        REQUIRE(r->exact == ceil_div(p + 15, 4));
    }
}

TEST_CASE("dsh_upper examples") {
    CHECK(BoundsRegistry::dsh_upper(13, 4) == 7);
    CHECK(BoundsRegistry::dsh_upper(7, 3) == 5);
    CHECK(BoundsRegistry::dsh_upper(11, 8) == 10);
    CHECK_THROWS_AS(BoundsRegistry::dsh_upper(9, 3), std::domain_error);
    CHECK_THROWS_AS(BoundsRegistry::dsh_upper(7, 7), std::domain_error);
}

TEST_CASE("small_k cyclic bounds") {
    const auto n10 = BoundsRegistry::small_k_cyclic_bounds(10, 3);
    REQUIRE(n10.has_value());
    CHECK(n10->exact == 7);

    const auto n9k4 = BoundsRegistry::small_k_cyclic_bounds(9, 4);
    REQUIRE(n9k4.has_value());
    CHECK(n9k4->lower == 6);
    CHECK(n9k4->upper == 7);
    CHECK_FALSE(n9k4->exact.has_value());

    const auto n18 = BoundsRegistry::small_k_cyclic_bounds(18, 3);
    REQUIRE(n18.has_value());
    CHECK(n18->exact == 10);

    CHECK_FALSE(BoundsRegistry::small_k_cyclic_bounds(3, 3).has_value());
    CHECK_THROWS_AS(BoundsRegistry::small_k_cyclic_bounds(9, 5), std::domain_error);
}

TEST_CASE("lift_bounds doubling transfer") {
    CHECK(BoundsRegistry::lift_bounds(5, 4, 5) == 9);
    CHECK(BoundsRegistry::lift_bounds(7, 4, ceil_div(7 + 15, 4)) == 11);
    CHECK_FALSE(BoundsRegistry::lift_bounds(6, 4, 5).has_value());  // n even
    CHECK_FALSE(BoundsRegistry::lift_bounds(5, 3, 5).has_value());  // k odd
    CHECK_FALSE(BoundsRegistry::lift_bounds(3, 4, 4).has_value());  // n < k
}

TEST_CASE("classical harborth values") {
    CHECK(BoundsRegistry::classical_harborth(Group::from_moduli({2, 6})).exact == 9);
    CHECK(BoundsRegistry::classical_harborth(Group::from_moduli({3, 15})).exact == 18);
    CHECK(BoundsRegistry::classical_harborth(Group::from_moduli({6})).exact == 7);
    CHECK(BoundsRegistry::classical_harborth(Group::from_moduli({2, 2, 2})).exact == 9);
    CHECK(BoundsRegistry::classical_harborth(Group::from_moduli({3, 3})).exact == 5);
    CHECK(BoundsRegistry::classical_harborth(Group::from_moduli({3, 3, 3})).exact == 10);
    CHECK(BoundsRegistry::classical_harborth(Group::from_moduli({3, 9})).exact == 13);
    CHECK(BoundsRegistry::classical_harborth(Group::from_moduli({2, 4})).exact == 6);
    // odd cyclic: the two Kemnitz d=1 bounds meet at n
    CHECK(BoundsRegistry::classical_harborth(Group::from_moduli({9})).exact == 9);
    // an open case keeps an interval
    const BoundReport open_case = BoundsRegistry::classical_harborth(Group::from_moduli({11, 11}));
    CHECK_FALSE(open_case.exact.has_value());
    CHECK(open_case.lower == 21);
}

TEST_CASE("best_bounds on flagship instances") {
    const BoundsRegistry registry;

    const BoundReport c13k4 = registry.best_bounds(Group::from_moduli({13}), 4);
    REQUIRE(c13k4.exact == 7);
    std::set<std::string> sources;
    for (const auto& p : c13k4.provenance) sources.insert(p.source);
    CHECK(sources.contains("thm311"));
    CHECK(sources.contains("dsh_upper"));
    CHECK(sources.contains("prop317"));

    // special value overrides the inapplicable formula for C_11, k = 8
    const BoundReport c11k8 = registry.best_bounds(Group::from_moduli({11}), 8);
    CHECK(c11k8.exact == 10);
    bool special = false;
    for (const auto& p : c11k8.provenance) special |= p.source == "special_value";
    CHECK(special);

    const BoundReport c7k6 = registry.best_bounds(Group::from_moduli({7}), 6);
    CHECK(c7k6.exact == 7);

    // C_2^5, k=4: constructions give lower 8, nothing proves an upper bound
    const Group c25 = Group::from_moduli({2, 2, 2, 2, 2});
    const BoundReport before = registry.best_bounds(c25, 4);
    CHECK(before.lower == 8);
    CHECK_FALSE(before.exact.has_value());

    BoundsRegistry with_solver;
    const ExactResult solved = max_zero_sum_free(c25, 4);
    with_solver.register_exact(c25, 4, solved.harborth, solved.witness);
    const BoundReport after = with_solver.best_bounds(c25, 4);
    CHECK(after.exact == 8);
    REQUIRE(after.witness.has_value());
    CHECK(static_cast<std::int64_t>(after.witness->size()) == 7);
}

TEST_CASE("best_bounds witness attains the lower bound") {
    const BoundsRegistry registry;
    for (std::int64_t n : {8, 10, 12, 13, 18}) {
        for (int k : {2, 3, 4}) {
            const BoundReport r = registry.best_bounds(Group::from_moduli({n}), k);
            if (r.witness) {
                CHECK(static_cast<std::int64_t>(r.witness->size()) == r.lower - 1);
                CHECK(is_k_zero_sum_free(*r.witness, k));
            }
        }
    }
}

TEST_CASE("consistency sweep: cyclic n <= 60, k <= 8") {
    const BoundsRegistry registry;
    for (std::int64_t n = 2; n <= 60; ++n) {
        const Group g = Group::from_moduli({n});
        for (int k = 1; k <= std::min<std::int64_t>(8, n); ++k) {
            const BoundReport r = registry.best_bounds(g, k);  // throws on lower > upper
            CHECK(r.lower <= r.upper);
            for (const auto& p : r.provenance) {
                if (p.kind != BoundKind::upper) CHECK(p.value <= r.upper);
                if (p.kind != BoundKind::lower) CHECK(p.value >= r.lower);
            }
        }
    }
}

TEST_CASE("consistency sweep over small product groups") {
    const BoundsRegistry registry;
    for (const auto& chain : testutil::all_abelian_groups(64)) {
        const Group g = Group::from_moduli(chain);
        for (int k = 1; k <= std::min<std::int64_t>(6, g.order()); ++k) {
            CHECK_NOTHROW(registry.best_bounds(g, k));
        }
    }
}

TEST_CASE("registry exact values agree with the oracle on small groups") {
    const BoundsRegistry registry;
    for (const auto& chain : testutil::all_abelian_groups(16)) {
        const Group g = Group::from_moduli(chain);
        for (int k = 1; k <= std::min<std::int64_t>(6, g.order()); ++k) {
            const BoundReport r = registry.best_bounds(g, k);
            if (!r.exact) continue;
            const ExactResult oracle = brute_force_oracle(g, k);
            REQUIRE(*r.exact == oracle.harborth);
        }
    }
}

TEST_CASE("prop319 lift shows up for doubled odd cyclic groups") {
    const BoundsRegistry registry;
    const BoundReport c10 = registry.best_bounds(Group::from_moduli({10}), 4);
    bool lift = false, cor = false;
    for (const auto& p : c10.provenance) {
        lift |= p.source == "prop319_lift";
        cor |= p.source == "cor320";
    }
    CHECK(lift);
    CHECK(cor);
    CHECK(c10.upper <= 8);  // prop318 beats the lifted bound here
    CHECK(c10.lower >= 6);
}
