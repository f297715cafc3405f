#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "glpath/errors.hpp"
#include "glpath/graph.hpp"
#include "glpath/graph_io.hpp"

#include "helpers.hpp"

using namespace glpath;
using namespace glpath::testing;

TEST_CASE("construction and basic accessors") {
    STGraph g = G(z2(), {"a", "b", "c"})
                    .e("a", "b", "1")
                    .e("b", "c", "0")
                    .s("a")
                    .t("c")
                    .done();
    CHECK(g.n() == 3);
    CHECK(g.edge_count() == 2);
    CHECK(g.vertex("b") == 1);
    CHECK(g.name(2) == "c");
    CHECK(g.has_vertex("a"));
    CHECK(!g.has_vertex("z"));
    CHECK(g.S().test(0));
    CHECK(!g.S().test(1));
    CHECK(g.T().test(2));
    CHECK(!g.has_interface());
}

TEST_CASE("self-loops rejected, parallel edges kept distinct") {
    CHECK_THROWS_AS(G(z2(), {"a"}).e("a", "a", "1").done(), ValidationError);
    STGraph g = G(z2(), {"a", "b"})
                    .e("a", "b", "1")
                    .e("a", "b", "0")
                    .e("a", "b", "1")
                    .done();
    CHECK(g.edge_count() == 3);
    CHECK(g.adjacent(0).size() == 3);
}

TEST_CASE("bad references raise") {
    CHECK_THROWS_AS(G(z2(), {"a"}).e("a", "nope", "1").done(),
                    ValidationError);
    CHECK_THROWS_AS(G(z2(), {"a", "b"}).e("a", "b", "7").done(),
                    ValidationError);
    CHECK_THROWS_AS(G(z2(), {"a", "a"}).done(), ValidationError);
    CHECK_THROWS_AS(G(z2(), {"a"}).s("nope").done(), ValidationError);
}

TEST_CASE("arc labels invert with orientation") {
    STGraph g = G(z3(), {"a", "b"}).e("a", "b", "1").done();
    Arc fwd{0, true}, bwd{0, false};
    CHECK(g.arc_label(fwd) == z3()->elem("1"));
    CHECK(g.arc_label(bwd) == z3()->elem("2"));
    CHECK(g.arc_tail(fwd) == 0);
    CHECK(g.arc_head(fwd) == 1);
    CHECK(g.arc_tail(bwd) == 1);
}

TEST_CASE("interface tuple is ordered and preserved") {
    STGraph g = G(z2(), {"a", "b", "c"})
                    .e("a", "b", "1")
                    .iface({"c", "a"})
                    .done();
    REQUIRE(g.has_interface());
    CHECK(g.interface_tuple() == std::vector<int>{2, 0});
    STGraph h = g.without_interface();
    CHECK(!h.has_interface());
    STGraph k = h.with_interface({0, 1});
    CHECK(k.interface_tuple() == std::vector<int>{0, 1});
}

TEST_CASE("induced subgraph restricts everything by intersection") {
    STGraph g = G(z2(), {"a", "b", "c", "d"})
                    .e("a", "b", "1")
                    .e("b", "c", "0")
                    .e("c", "d", "1")
                    .s("a")
                    .s("c")
                    .t("d")
                    .iface({"b", "d"})
                    .done();
    STGraph h = induced_subgraph(g, set_of(g, {"a", "b", "c"}));
    CHECK(h.n() == 3);
    CHECK(h.edge_count() == 2);
    CHECK(h.S().count() == 2);
    CHECK(h.T().none());
    REQUIRE(h.has_interface());
    // d dropped, order kept
    CHECK(h.interface_tuple() == std::vector<int>{h.vertex("b")});
    CHECK(h.name(0) == "a");
}

TEST_CASE("separations") {
    STGraph g = G(z2(), {"a", "b", "c"})
                    .e("a", "b", "1")
                    .e("b", "c", "1")
                    .done();
    Separation good{set_of(g, {"a", "b"}), set_of(g, {"b", "c"})};
    CHECK(is_separation(g, good));
    CHECK(good.order() == 1);
    // edge a-b crosses between A-B and B-A
    Separation crossing{set_of(g, {"a"}), set_of(g, {"b", "c"})};
    CHECK(!is_separation(g, crossing));
    // not a cover
    Separation partial{set_of(g, {"a"}), set_of(g, {"b"})};
    CHECK(!is_separation(g, partial));
}

TEST_CASE("structural equality ignores the interface") {
    STGraph a = G(z2(), {"x", "y"}).e("x", "y", "1").s("x").done();
    STGraph b = G(z2(), {"x", "y"}).e("x", "y", "1").s("x").done();
    STGraph c = G(z2(), {"x", "y"}).e("x", "y", "0").s("x").done();
    CHECK(a == b);
    CHECK(a != c);
    CHECK(a == b.with_interface({0}));
}

TEST_CASE("JSON round trip is byte-stable") {
    STGraph g = G(klein(), {"p", "q", "r"})
                    .e("p", "q", "(1,0)")
                    .e("q", "r", "(0,1)")
                    .s("p")
                    .t("r")
                    .iface({"q"})
                    .done();
    std::string s1 = save_graph(g);
    STGraph h = load_graph(s1);
    CHECK(g == h);
    CHECK(h.has_interface());
    CHECK(save_graph(h) == s1);
    CHECK(s1.back() == '\n');
}

TEST_CASE("group spec parsing") {
    CHECK(parse_group_spec("{\"kind\":\"cyclic\",\"n\":2}")->order() == 2);
    CHECK(parse_group_spec("{\"kind\":\"symmetric\",\"m\":3}")->order() == 6);
    CHECK(parse_group_spec("{\"kind\":\"product\",\"factors\":[{\"kind\":"
                           "\"cyclic\",\"n\":2},{\"kind\":\"cyclic\",\"n\":2}]"
                           "}")
              ->order() == 4);
    CHECK(parse_group_spec(
              "{\"kind\":\"table\",\"elems\":[\"e\",\"x\"],\"table\":[[0,1],"
              "[1,0]]}")
              ->order() == 2);
    CHECK_THROWS_AS(parse_group_spec("{\"kind\":\"rotation\"}"),
                    ValidationError);
    CHECK_THROWS_AS(parse_group_spec("not json"), ValidationError);
    CHECK_THROWS_AS(load_graph("{\"vertices\":[]}"), ValidationError);
}

TEST_CASE("dot export marks roles") {
    STGraph g = G(z2(), {"a", "b"}).e("a", "b", "1").s("a").t("b").done();
    DotHighlight hl;
    hl.hitting = {0};
    std::string dot = to_dot(g, &hl);
    CHECK(dot.find("graph") != std::string::npos);
    CHECK(dot.find("box") != std::string::npos);
    CHECK(dot.find("diamond") != std::string::npos);
}
