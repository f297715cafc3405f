#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "glpath/connectivity.hpp"
#include "glpath/construct.hpp"
#include "glpath/errors.hpp"
#include "glpath/tripod.hpp"

#include "helpers.hpp"
#include "oracles.hpp"

using namespace glpath;
using namespace glpath::testing;

namespace {

STGraph tripod_playground() {
    // non-null path a-b-c with a spur from b to the target d
    return G(s3(), {"a", "b", "c", "d"})
        .e("a", "b", "102")
        .e("b", "c", "021")
        .e("b", "d", "120")
        .s("a")
        .t("d")
        .done();
}

GPath path_of(const STGraph& g, const std::vector<std::string>& names) {
    GPath p;
    for (const auto& nm : names) p.verts.push_back(g.vertex(nm));
    for (size_t i = 0; i + 1 < p.verts.size(); ++i) {
        bool found = false;
        for (const auto& [nbr, e] : g.adjacent(p.verts[i]))
            if (nbr == p.verts[i + 1] && !found) {
                p.arcs.push_back({e, g.edge(e).u == p.verts[i]});
                found = true;
            }
        REQUIRE(found);
    }
    p.value = path_value(g, p.arcs);
    return p;
}

} // namespace

TEST_CASE("make_tripod splits at the center") {
    STGraph g = tripod_playground();
    GPath P = path_of(g, {"a", "b", "c"});
    GPath Q = path_of(g, {"b", "d"});
    Tripod t = make_tripod(g, P, Q);
    CHECK(t.center == g.vertex("b"));
    CHECK(t.a_leg.verts == std::vector<int>{g.vertex("a"), g.vertex("b")});
    CHECK(t.b_leg.verts == std::vector<int>{g.vertex("c"), g.vertex("b")});
    CHECK(t.a_leg.last() == t.center);
    CHECK(t.b_leg.last() == t.center);
    validate_path(g, t.a_leg);
    validate_path(g, t.b_leg);

    GPath out = claim1_extract(g, t);
    validate_path(g, out);
    CHECK(is_nonnull(g, out));
    CHECK(out.last() == g.vertex("d"));
    CHECK((out.first() == g.vertex("a") || out.first() == g.vertex("c")));
}

TEST_CASE("make_tripod at an endpoint leaves one empty leg") {
    STGraph h = G(z2(), {"a", "b", "d"})
                    .e("a", "b", "1")
                    .e("a", "d", "0")
                    .done();
    GPath P2 = path_of(h, {"a", "b"});
    GPath Q2 = path_of(h, {"a", "d"});
    Tripod t = make_tripod(h, P2, Q2);
    CHECK(t.center == h.vertex("a"));
    CHECK(t.a_leg.length() == 0);
    CHECK(t.b_leg.length() == 1);
    GPath out = claim1_extract(h, t);
    CHECK(is_nonnull(h, out));
}

TEST_CASE("make_tripod validates its preconditions") {
    STGraph g = tripod_playground();
    GPath P = path_of(g, {"a", "b", "c"});
    SUBCASE("null P") {
        STGraph h = G(z2(), {"a", "b", "d"})
                        .e("a", "b", "0")
                        .e("b", "d", "1")
                        .done();
        CHECK_THROWS_AS(
            make_tripod(h, path_of(h, {"a", "b"}), path_of(h, {"b", "d"})),
            ValidationError);
    }
    SUBCASE("Q starts off P") {
        STGraph h = G(z2(), {"a", "b", "c", "d"})
                        .e("a", "b", "1")
                        .e("c", "d", "1")
                        .done();
        CHECK_THROWS_AS(
            make_tripod(h, path_of(h, {"a", "b"}), path_of(h, {"c", "d"})),
            ValidationError);
    }
    SUBCASE("Q meets P twice") {
        GPath Q = path_of(g, {"b", "c"});
        CHECK_THROWS_AS(make_tripod(g, P, Q), ValidationError);
    }
}

TEST_CASE("tripod congestion counter") {
    STGraph g = tripod_playground();
    GPath P = path_of(g, {"a", "b", "c"});
    GPath Q = path_of(g, {"b", "d"});
    Tripod t = make_tripod(g, P, Q);
    CHECK(tripod_congestion_check({t}, g.n()));
    CHECK(tripod_congestion_check({t, t}, g.n()));
    CHECK(!tripod_congestion_check({t, t, t}, g.n()));
}

TEST_CASE("proposition4 input validation") {
    STGraph g = tripod_playground();
    CHECK_THROWS_AS(proposition4(g, 0, 1), ValidationError);
    CHECK_THROWS_AS(proposition4(g, 1, 0), ValidationError);
}

TEST_CASE("proposition4: small T is its own hitting set") {
    STGraph g = G(z2(), {"a", "b", "c"})
                    .e("a", "b", "1")
                    .e("b", "c", "0")
                    .s("a")
                    .t("c")
                    .done();
    DualityCertificate c = proposition4(g, 2, 1);
    CHECK(!c.is_packing);
    CHECK(c.hitting == std::vector<int>{g.vertex("c")});
    verify_hitting(g, c.hitting, g.S(), g.T());
}

TEST_CASE("proposition4 certifies unbreakable corpus instances") {
    int ran = 0;
    for (int i = 0; i < 40 && ran < 20; ++i) {
        STGraph g = corpus_instance(i, 8);
        for (int q = 2; q <= 3; ++q)
            for (int k = 1; k <= 2; ++k) {
                if (!unbreakability(g, q, k).unbreakable) continue;
                CAPTURE(i);
                CAPTURE(q);
                CAPTURE(k);
                DualityCertificate c = proposition4(g, q, k);
                if (c.is_packing) {
                    CHECK((int)c.paths.size() == k);
                    verify_packing(g, c.paths, g.S(), g.T());
                } else {
                    CHECK(c.bound == 4 * q + 2 * k - 6);
                    CHECK((int)c.hitting.size() <= c.bound);
                    verify_hitting(g, c.hitting, g.S(), g.T());
                }
                ++ran;
            }
    }
    // the corpus has to actually exercise the procedure
    CHECK(ran >= 10);
}

TEST_CASE("proposition4 on the half-integral example") {
    STGraph g = build_figure1(1);
    // figure 1 instances are highly connected; q=5 keeps T >= q in play
    UnbreakabilityResult u = unbreakability(g, 5, 2);
    if (u.unbreakable) {
        DualityCertificate c = proposition4(g, 5, 2);
        if (c.is_packing) {
            verify_packing(g, c.paths, g.S(), g.T());
            CHECK((int)c.paths.size() == 2);
        } else {
            CHECK((int)c.hitting.size() <= c.bound);
            verify_hitting(g, c.hitting, g.S(), g.T());
        }
    } else {
        // still a valid exercise: the witness must be genuine
        REQUIRE(u.witness.has_value());
        CHECK(is_separation(g, *u.witness));
        CHECK(u.witness->order() < 2);
    }
}
