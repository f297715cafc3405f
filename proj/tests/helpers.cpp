#include "helpers.hpp"

#include "glpath/errors.hpp"

namespace glpath::testing {

GroupPtr z2() {
    static GroupPtr g = FiniteGroup::cyclic(2);
    return g;
}

GroupPtr z3() {
    static GroupPtr g = FiniteGroup::cyclic(3);
    return g;
}

GroupPtr klein() {
    static GroupPtr g = FiniteGroup::product({z2(), z2()});
    return g;
}

GroupPtr s3() {
    static GroupPtr g = FiniteGroup::symmetric(3);
    return g;
}

Bitset set_of(const STGraph& g, const std::vector<std::string>& names) {
    Bitset b(g.n());
    for (const std::string& nm : names) b.set(g.vertex(nm));
    return b;
}

STGraph corpus_instance(int i, int max_vertices) {
    GroupPtr groups[3] = {z2(), z3(), klein()};
    RandomSpec spec;
    spec.group = groups[i % 3];
    spec.n_vertices = 3 + (i * 7 + i / 3) % (max_vertices - 2);
    spec.edge_prob = 0.25 + 0.1 * (i % 5);
    spec.s_frac = 0.3;
    spec.t_frac = 0.3;
    spec.seed = 977u * (uint64_t)i + 13;
    STGraph g = random_instance(spec);
    if (g.S().any() && g.T().any()) return g;
    GraphData d = g.data();
    if (d.S.empty()) d.S.push_back(d.vertices[0]);
    if (d.T.empty()) d.T.push_back(d.vertices[d.vertices.size() > 1 ? 1 : 0]);
    return STGraph(d);
}

} // namespace glpath::testing
