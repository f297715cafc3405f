#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "glpath/construct.hpp"
#include "glpath/duality.hpp"
#include "glpath/errors.hpp"

#include "helpers.hpp"
#include "oracles.hpp"

using namespace glpath;
using namespace glpath::testing;

TEST_CASE("single non-null edge: the same path counts twice") {
    STGraph g = G(z2(), {"a", "b"}).e("a", "b", "1").s("a").t("b").done();
    SolveResult r = solve(g);
    CHECK(r.packing.value == 2);
    CHECK(r.hitting.value == 1);
    verify_packing(g, r.packing.paths, g.S(), g.T());
    verify_hitting(g, r.hitting.vertices, g.S(), g.T());
}

TEST_CASE("all-identity labels: nothing to pack or hit") {
    STGraph g = G(z3(), {"a", "b", "c"})
                    .e("a", "b", "0")
                    .e("b", "c", "0")
                    .s("a")
                    .t("c")
                    .done();
    SolveResult r = solve(g);
    CHECK(r.packing.value == 0);
    CHECK(r.packing.paths.empty());
    CHECK(r.hitting.value == 0);
    CHECK(r.hitting.vertices.empty());
}

TEST_CASE("exact values against the oracles on the corpus") {
    for (int i = 0; i < 30; ++i) {
        STGraph g = corpus_instance(i, 7);
        CAPTURE(i);
        SolveResult r = solve(g);
        CHECK(r.packing.value == oracle_max_packing(g));
        CHECK(r.hitting.value == oracle_min_hitting(g));
        verify_packing(g, r.packing.paths, g.S(), g.T());
        verify_hitting(g, r.hitting.vertices, g.S(), g.T());
        CHECK((int)r.packing.paths.size() == r.packing.value);
        CHECK((int)r.hitting.vertices.size() == r.hitting.value);
        // half-integral weak duality
        CHECK(r.packing.value <= 2 * r.hitting.value);
    }
}

TEST_CASE("min_hitting_capped honors its cap") {
    STGraph g = build_figure1(1);
    HittingResult full = min_hitting(g, g.S(), g.T());
    CHECK(full.value == 1);
    CHECK(min_hitting_capped(g, g.S(), g.T(), 0) == std::nullopt);
    auto capped = min_hitting_capped(g, g.S(), g.T(), full.value);
    REQUIRE(capped.has_value());
    CHECK(capped->value == full.value);
}

TEST_CASE("disjoint packing: exact threshold") {
    for (int i = 0; i < 20; ++i) {
        STGraph g = corpus_instance(i, 7);
        CAPTURE(i);
        int best = oracle_max_disjoint(g, g.S(), g.T());
        auto at = disjoint_nonnull_packing(g, g.S(), g.T(), best);
        if (best > 0) {
            REQUIRE(at.has_value());
            CHECK((int)at->size() == best);
            verify_packing(g, *at, g.S(), g.T(), 1);
        }
        CHECK(disjoint_nonnull_packing(g, g.S(), g.T(), best + 1) ==
              std::nullopt);
    }
}

TEST_CASE("figure-1 has no two disjoint non-null paths") {
    STGraph g = build_figure1(1);
    CHECK(disjoint_nonnull_packing(g, g.S(), g.T(), 2) == std::nullopt);
    CHECK(disjoint_nonnull_packing(g, g.S(), g.T(), 1).has_value());
}

TEST_CASE("theorem3 audit: k=1 packs any single non-null path") {
    STGraph g = G(z2(), {"a", "b"}).e("a", "b", "1").s("a").t("b").done();
    Bitset R = Bitset::full(g.n());
    Theorem3Verdict v = check_theorem3(g, R, 1);
    CHECK(v.ok);
    CHECK(v.packing_branch);
    CHECK(v.bound == 0);
    verify_packing(g, v.paths, R, R, 1);
}

TEST_CASE("theorem3 audit: hitting branch on a bottleneck star") {
    // every non-null R-R path passes the hub; k=2 would need two disjoint
    STGraph g = G(z3(), {"h", "x", "y", "z"})
                    .e("h", "x", "1")
                    .e("h", "y", "0")
                    .e("h", "z", "0")
                    .done();
    Bitset R = set_of(g, {"x", "y", "z"});
    Theorem3Verdict v = check_theorem3(g, R, 2);
    CHECK(v.ok);
    CHECK(!v.packing_branch);
    CHECK((int)v.hitting.size() <= v.bound);
    verify_hitting(g, v.hitting, R, R);
}

TEST_CASE("theorem3 audit holds across the corpus") {
    for (int i = 0; i < 30; ++i) {
        STGraph g = corpus_instance(i, 7);
        Bitset R = g.S() | g.T();
        for (int k = 1; k <= 3; ++k) {
            CAPTURE(i);
            CAPTURE(k);
            Theorem3Verdict v = check_theorem3(g, R, k);
            CHECK(v.ok);
            CHECK(v.bound == 2 * k - 2);
            if (v.packing_branch) {
                CHECK((int)v.paths.size() == k);
                verify_packing(g, v.paths, R, R, 1);
            } else {
                CHECK((int)v.hitting.size() <= v.bound);
                verify_hitting(g, v.hitting, R, R);
            }
        }
    }
}

TEST_CASE("verifiers reject corrupt certificates") {
    STGraph g = G(z2(), {"a", "b", "c", "d"})
                    .e("a", "b", "1")
                    .e("a", "c", "1")
                    .e("c", "d", "0")
                    .s("a")
                    .t("b")
                    .t("d")
                    .done();
    SolveResult r = solve(g);

    SUBCASE("congestion overflow") {
        auto paths = r.packing.paths;
        REQUIRE(!paths.empty());
        paths.push_back(paths.front());
        paths.push_back(paths.front());
        CHECK_THROWS_AS(verify_packing(g, paths, g.S(), g.T()),
                        ValidationError);
    }
    SUBCASE("null member") {
        GPath null_path{{g.vertex("c"), g.vertex("d")}, {{2, true}}, 0};
        CHECK_THROWS_AS(verify_packing(g, {null_path}, g.S(), g.T()),
                        ValidationError);
    }
    SUBCASE("endpoint outside from/to") {
        GPath stray{{g.vertex("a"), g.vertex("c")}, {{1, true}}, 1};
        CHECK_THROWS_AS(verify_packing(g, {stray}, g.S(), g.T()),
                        ValidationError);
    }
    SUBCASE("hitting set that misses a path") {
        CHECK_THROWS_AS(verify_hitting(g, {g.vertex("c")}, g.S(), g.T()),
                        ValidationError);
        CHECK_THROWS_AS(verify_hitting(g, {}, g.S(), g.T()), ValidationError);
    }
    SUBCASE("hitting vertex out of range") {
        CHECK_THROWS_AS(verify_hitting(g, {99}, g.S(), g.T()),
                        ValidationError);
    }
}

TEST_CASE("theorem1 audit helper") {
    STGraph g = G(z2(), {"a", "b", "c", "d"})
                    .e("a", "b", "1")
                    .e("c", "d", "1")
                    .s("a")
                    .s("c")
                    .t("b")
                    .t("d")
                    .done();
    Theorem1Verdict v = check_theorem1(g, 4, 2);
    CHECK(v.ok);
    CHECK(v.packing == oracle_max_packing(g));
    CHECK(v.hitting == oracle_min_hitting(g));
    CHECK(v.packing == 4);
    CHECK(v.hitting == 2);
    Theorem1Verdict bad = check_theorem1(g, v.packing + 1, v.hitting - 1);
    CHECK(!bad.ok);
}

TEST_CASE("solve respects the path budget") {
    STGraph g = build_figure1(2);
    CHECK_THROWS_AS(solve(g, 2), BudgetError);
}
