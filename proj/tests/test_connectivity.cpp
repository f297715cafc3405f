#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "glpath/connectivity.hpp"
#include "glpath/errors.hpp"

#include "helpers.hpp"
#include "oracles.hpp"

using namespace glpath;
using namespace glpath::testing;

namespace {

// Label-blind reachability over the raw edge list, for auditing cuts.
bool connects(const STGraph& g, const Bitset& X, const Bitset& Y,
              const Bitset& C) {
    Bitset seen = X - C;
    if (seen.intersects(Y)) return true;
    bool grew = true;
    while (grew) {
        grew = false;
        for (int e = 0; e < g.edge_count(); ++e) {
            int u = g.edge(e).u, v = g.edge(e).v;
            for (int rep = 0; rep < 2; ++rep) {
                if (seen.test(u) && !C.test(v) && !seen.test(v)) {
                    seen.set(v);
                    grew = true;
                }
                std::swap(u, v);
            }
        }
    }
    return seen.intersects(Y);
}

// Menger certificate audit: the paths are disjoint X-Y paths, the cut
// separates, and the sizes coincide.
void audit_linkage(const STGraph& g, const Bitset& X, const Bitset& Y,
                   const Linkage& l) {
    Bitset used(g.n());
    for (const GPath& p : l.paths) {
        validate_path(g, p);
        bool fwd = X.test(p.first()) && Y.test(p.last());
        bool bwd = Y.test(p.first()) && X.test(p.last());
        CHECK((fwd || bwd));
        Bitset vs = path_vertex_set(g, p);
        CHECK(!vs.intersects(used));
        used = used | vs;
    }
    CHECK((int)l.cut.size() == l.size());
    Bitset C(g.n());
    for (int v : l.cut) C.set(v);
    CHECK(!connects(g, X, Y, C));
}

} // namespace

TEST_CASE("linkage on hand instances") {
    SUBCASE("two disjoint routes") {
        STGraph g = G(z2(), {"x1", "x2", "m1", "m2", "y1", "y2"})
                        .e("x1", "m1", "0")
                        .e("m1", "y1", "0")
                        .e("x2", "m2", "0")
                        .e("m2", "y2", "0")
                        .done();
        Bitset X = set_of(g, {"x1", "x2"}), Y = set_of(g, {"y1", "y2"});
        Linkage l = max_disjoint_linkage(g, X, Y);
        CHECK(l.size() == 2);
        audit_linkage(g, X, Y, l);
    }
    SUBCASE("bottleneck of one") {
        STGraph g = G(z2(), {"x1", "x2", "b", "y1", "y2"})
                        .e("x1", "b", "0")
                        .e("x2", "b", "0")
                        .e("b", "y1", "0")
                        .e("b", "y2", "0")
                        .done();
        Bitset X = set_of(g, {"x1", "x2"}), Y = set_of(g, {"y1", "y2"});
        Linkage l = max_disjoint_linkage(g, X, Y);
        CHECK(l.size() == 1);
        CHECK(l.cut == std::vector<int>{g.vertex("b")});
        audit_linkage(g, X, Y, l);
    }
    SUBCASE("overlap vertex is a zero-arc path") {
        STGraph g = G(z2(), {"a", "b", "c", "d"})
                        .e("a", "c", "0")
                        .e("c", "d", "0")
                        .done();
        Bitset X = set_of(g, {"a", "b"}), Y = set_of(g, {"b", "d"});
        Linkage l = max_disjoint_linkage(g, X, Y);
        CHECK(l.size() == 2); // the zero-arc path at b plus a-c-d
        bool has_trivial = false;
        for (const GPath& p : l.paths) has_trivial |= (p.length() == 0);
        CHECK(has_trivial);
        audit_linkage(g, X, Y, l);
    }
    SUBCASE("disconnected pair") {
        STGraph g = G(z2(), {"a", "b"}).done();
        Linkage l = max_disjoint_linkage(g, set_of(g, {"a"}), set_of(g, {"b"}));
        CHECK(l.size() == 0);
        CHECK(l.cut.empty());
    }
}

TEST_CASE("linkage size equals the oracle min cut across the corpus") {
    for (int i = 0; i < 35; ++i) {
        STGraph g = corpus_instance(i, 9);
        if (g.S().none() || g.T().none()) continue;
        CAPTURE(i);
        Linkage l = max_disjoint_linkage(g, g.S(), g.T());
        CHECK(l.size() == oracle_min_vertex_cut(g, g.S(), g.T()));
        audit_linkage(g, g.S(), g.T(), l);
    }
}

TEST_CASE("components") {
    STGraph g = G(z2(), {"a", "b", "c", "d", "e"})
                    .e("a", "b", "0")
                    .e("c", "d", "1")
                    .done();
    Bitset none(g.n());
    auto comps = components(g, none);
    REQUIRE(comps.size() == 3);
    CHECK(comps[0] == set_of(g, {"a", "b"}));
    CHECK(comps[1] == set_of(g, {"c", "d"}));
    CHECK(comps[2] == set_of(g, {"e"}));
    Bitset cut(g.n());
    cut.set(g.vertex("a"));
    auto comps2 = components(g, cut);
    REQUIRE(comps2.size() == 3);
    CHECK(comps2[0] == set_of(g, {"b"}));
}

TEST_CASE("unbreakability on hand instances") {
    SUBCASE("path graph splits in the middle") {
        STGraph g = G(z2(), {"a", "b", "c", "d", "e"})
                        .e("a", "b", "0")
                        .e("b", "c", "0")
                        .e("c", "d", "0")
                        .e("d", "e", "0")
                        .done();
        UnbreakabilityResult r = unbreakability(g, 3, 2);
        CHECK(!r.unbreakable);
        REQUIRE(r.witness.has_value());
        CHECK(r.witness->order() < 2);
        CHECK(r.witness->A.count() >= 3);
        CHECK(r.witness->B.count() >= 3);
        CHECK(is_separation(g, *r.witness));
    }
    SUBCASE("a clique never splits") {
        G b(z2(), {"a", "b", "c", "d", "e"});
        std::vector<std::string> names{"a", "b", "c", "d", "e"};
        for (size_t i = 0; i < names.size(); ++i)
            for (size_t j = i + 1; j < names.size(); ++j)
                b.e(names[i], names[j], "1");
        STGraph g = b.done();
        CHECK(unbreakability(g, 2, 2).unbreakable);
        CHECK(unbreakability(g, 3, 3).unbreakable);
    }
}

TEST_CASE("unbreakability agrees with the 3^n oracle") {
    for (int i = 0; i < 25; ++i) {
        STGraph g = corpus_instance(i, 8);
        for (int q = 1; q <= 3; ++q)
            for (int k = 1; k <= 3; ++k) {
                CAPTURE(i);
                CAPTURE(q);
                CAPTURE(k);
                UnbreakabilityResult r = unbreakability(g, q, k);
                CHECK(r.unbreakable == !oracle_breakable(g, q, k));
                if (!r.unbreakable) {
                    REQUIRE(r.witness.has_value());
                    const Separation& s = *r.witness;
                    CHECK(is_separation(g, s));
                    CHECK(s.order() < k);
                    CHECK((int)s.A.count() >= q);
                    CHECK((int)s.B.count() >= q);
                }
            }
    }
}

TEST_CASE("unbreakability work budget") {
    // a clique is unbreakable, so the search must sweep every candidate
    // separator; a tiny budget has to trip first
    std::vector<std::string> names;
    for (int i = 0; i < 12; ++i) names.push_back("v" + std::to_string(i));
    G b(z2(), names);
    for (size_t i = 0; i < names.size(); ++i)
        for (size_t j = i + 1; j < names.size(); ++j)
            b.e(names[i], names[j], "0");
    STGraph g = b.done();
    CHECK_THROWS_AS(unbreakability(g, 2, 6, 10), BudgetError);
}
