#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "glpath/construct.hpp"
#include "glpath/graph.hpp"
#include "glpath/group.hpp"

namespace glpath::testing {

GroupPtr z2();
GroupPtr z3();
GroupPtr klein();
GroupPtr s3();

/// Terse graph assembly for tests:
///   G(z2(), {"a","b","c"}).e("a","b","1").s("a").t("c").done()
struct G {
    GraphData d;

    G(GroupPtr grp, std::initializer_list<const char*> vs) {
        d.group = std::move(grp);
        for (const char* v : vs) d.vertices.emplace_back(v);
    }
    G(GroupPtr grp, std::vector<std::string> vs) {
        d.group = std::move(grp);
        d.vertices = std::move(vs);
    }
    G& e(const std::string& u, const std::string& v, const std::string& l) {
        d.edges.push_back({u, v, l});
        return *this;
    }
    G& s(const std::string& v) {
        d.S.push_back(v);
        return *this;
    }
    G& t(const std::string& v) {
        d.T.push_back(v);
        return *this;
    }
    G& iface(std::initializer_list<const char*> vs) {
        d.interface_tuple.emplace();
        for (const char* v : vs) d.interface_tuple->emplace_back(v);
        return *this;
    }
    STGraph done() const { return STGraph(d); }
};

Bitset set_of(const STGraph& g, const std::vector<std::string>& names);

/// Seeded corpus instance: cycles through groups and sizes. Every instance
/// has at least one S and one T vertex (memberships forced onto vertex 0/1
/// when the coins left them empty), so solver suites always have work to do.
STGraph corpus_instance(int i, int max_vertices = 9);

} // namespace glpath::testing
