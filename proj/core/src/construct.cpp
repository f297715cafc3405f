#include "glpath/construct.hpp"

#include <random>
#include <string>
#include <utility>
#include <vector>

#include "glpath/duality.hpp"
#include "glpath/errors.hpp"
#include "glpath/path.hpp"

namespace glpath {

int figure1_size(int n) { return 4 * n * n + 8 * n + 3; }

std::optional<int> figure1_n_for_size(int vertices) {
    for (int n = 1; figure1_size(n) <= vertices; ++n)
        if (figure1_size(n) == vertices) return n;
    return std::nullopt;
}

STGraph build_figure1(int n) {
    if (n < 1) throw ValidationError("figure1: n must be >= 1");
    const int side = 2 * n + 1;
    GraphData d;
    d.group = FiniteGroup::cyclic(2);
    auto grid = [](int r, int c) {
        return "v" + std::to_string(r) + "_" + std::to_string(c);
    };
    for (int r = 1; r <= side; ++r)
        for (int c = 1; c <= side; ++c) d.vertices.push_back(grid(r, c));
    for (int r = 1; r <= side; r += 2) {
        d.vertices.push_back("s" + std::to_string(r));
        d.S.push_back("s" + std::to_string(r));
    }
    for (int r = 1; r <= side; r += 2) {
        d.vertices.push_back("t" + std::to_string(r));
        d.T.push_back("t" + std::to_string(r));
    }
    for (int c = 1; c <= 2 * n; ++c) d.vertices.push_back("w" + std::to_string(c));

    auto edge = [&d](const std::string& u, const std::string& v) {
        d.edges.push_back({u, v, "1"});
    };
    for (int r = 1; r <= side; ++r)
        for (int c = 1; c < side; ++c) edge(grid(r, c), grid(r, c + 1));
    for (int r = 1; r < side; ++r)
        for (int c = 1; c <= side; ++c) edge(grid(r, c), grid(r + 1, c));
    for (int r = 1; r <= side; r += 2) edge("s" + std::to_string(r), grid(r, 1));
    for (int r = 1; r <= side; r += 2) edge("t" + std::to_string(r), grid(r, side));
    for (int c = 1; c <= 2 * n; ++c) {
        edge("w" + std::to_string(c), grid(1, c));
        edge("w" + std::to_string(c), grid(1, c + 1));
    }
    return STGraph(std::move(d));
}

STGraph random_instance(const RandomSpec& spec) {
    if (!spec.group) throw ValidationError("random_instance: group required");
    if (spec.n_vertices < 1 || spec.n_vertices > 64)
        throw ValidationError("random_instance: n_vertices out of range [1,64]");
    std::mt19937_64 rng(spec.seed);
    auto coin = [&rng](double p) {
        return (static_cast<double>(rng() >> 11) * 0x1.0p-53) < p;
    };
    GraphData d;
    d.group = spec.group;
    for (int i = 0; i < spec.n_vertices; ++i)
        d.vertices.push_back("v" + std::to_string(i));
    const uint64_t order = static_cast<uint64_t>(spec.group->order());
    for (int u = 0; u < spec.n_vertices; ++u)
        for (int v = u + 1; v < spec.n_vertices; ++v)
            if (coin(spec.edge_prob)) {
                int lbl = static_cast<int>(rng() % order);
                d.edges.push_back({d.vertices[u], d.vertices[v], spec.group->name(lbl)});
            }
    for (int i = 0; i < spec.n_vertices; ++i)
        if (coin(spec.s_frac)) d.S.push_back(d.vertices[i]);
    for (int i = 0; i < spec.n_vertices; ++i)
        if (coin(spec.t_frac)) d.T.push_back(d.vertices[i]);
    return STGraph(std::move(d));
}

Figure1Report verify_figure1(const STGraph& g, int n, uint64_t path_budget,
                             bool with_packing) {
    if (n < 1) throw ValidationError("verify_figure1: n must be >= 1");
    const int side = 2 * n + 1;
    Bitset strip(g.n());
    auto pin = [&](const std::string& nm) {
        if (!g.has_vertex(nm))
            throw ValidationError("verify_figure1: vertex '" + nm +
                                  "' missing; not a figure1 instance for n=" +
                                  std::to_string(n));
        strip.set(g.vertex(nm));
    };
    for (int c = 1; c <= side; ++c) pin("v1_" + std::to_string(c));
    for (int c = 1; c <= 2 * n; ++c) pin("w" + std::to_string(c));

    Figure1Report rep;
    rep.n = n;
    rep.top_row_kills = !has_nonnull_path(g, g.S(), g.T(), &strip);

    auto hit = min_hitting(g, g.S(), g.T());
    rep.hitting_exact = hit.value;
    rep.hitting_at_least_n = hit.value >= n;

    rep.no_two_disjoint =
        !disjoint_nonnull_packing(g, g.S(), g.T(), 2, path_budget).has_value();

    if (with_packing) {
        try {
            rep.packing = max_packing(g, g.S(), g.T(), path_budget).value;
        } catch (const BudgetError&) {
            rep.packing = std::nullopt;
        }
    }
    return rep;
}

} // namespace glpath
