#include "glpath/duality.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>

#include "glpath/graph_io.hpp"

namespace glpath {

namespace {

struct PackingSearch {
    const std::vector<std::vector<int>>& pverts; // vertex lists, search order
    std::vector<int> residual;                   // per-vertex capacity left
    int best = 0;
    std::vector<int> best_mult;
    std::vector<int> mult;

    PackingSearch(const std::vector<std::vector<int>>& pverts, int n)
        : pverts(pverts), residual(n, 2), mult(pverts.size(), 0),
          best_mult(pverts.size(), 0) {}

    int max_mult(int i) const {
        int m = 2;
        for (int v : pverts[i]) m = std::min(m, residual[v]);
        return m;
    }

    void rec(int i, int count) {
        if (i == (int)pverts.size()) {
            if (count > best) {
                best = count;
                best_mult = mult;
            }
            return;
        }
        // cheap bound first, sharper capacity bound only when needed
        if (count + 2 * (int)(pverts.size() - i) <= best) return;
        int bound = count;
        for (size_t j = i; j < pverts.size(); ++j) bound += max_mult((int)j);
        if (bound <= best) return;

        for (int m = max_mult(i); m >= 0; --m) {
            mult[i] = m;
            for (int v : pverts[i]) residual[v] -= m;
            rec(i + 1, count + m);
            for (int v : pverts[i]) residual[v] += m;
            mult[i] = 0;
        }
    }
};

} // namespace

PackingResult max_packing(const STGraph& g, const Bitset& from,
                          const Bitset& to, uint64_t path_budget) {
    auto paths = enumerate_nonnull_paths(g, from, to, path_budget);

    // Longest paths first: they constrain the most and fail fast.
    std::vector<int> order(paths.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return paths[a].verts.size() > paths[b].verts.size();
    });
    std::vector<std::vector<int>> pverts;
    for (int idx : order) pverts.push_back(paths[idx].verts);

    PackingSearch search(pverts, g.n());
    // greedy warm start tightens pruning from the first branch
    {
        std::vector<int> greedy(pverts.size(), 0);
        int count = 0;
        for (size_t i = 0; i < pverts.size(); ++i) {
            int m = search.max_mult((int)i);
            greedy[i] = m;
            count += m;
            for (int v : pverts[i]) search.residual[v] -= m;
        }
        search.best = count;
        search.best_mult = greedy;
        for (size_t i = 0; i < pverts.size(); ++i)
            for (int v : pverts[i]) search.residual[v] += greedy[i];
    }
    search.rec(0, 0);

    PackingResult result;
    result.value = search.best;
    for (size_t i = 0; i < pverts.size(); ++i)
        for (int m = 0; m < search.best_mult[i]; ++m)
            result.paths.push_back(paths[order[i]]);
    verify_packing(g, result.paths, from, to, 2);
    return result;
}

namespace {

bool hitting_search(const STGraph& g, const Bitset& from, const Bitset& to,
                    Bitset& X, int budget, std::vector<int>& chosen) {
    auto p = find_nonnull_path(g, from, to, &X);
    if (!p) return true;
    if (budget == 0) return false;
    for (int v : p->verts) {
        X.set(v);
        chosen.push_back(v);
        if (hitting_search(g, from, to, X, budget - 1, chosen)) return true;
        chosen.pop_back();
        X.reset(v);
    }
    return false;
}

} // namespace

std::optional<HittingResult> min_hitting_capped(const STGraph& g,
                                                const Bitset& from,
                                                const Bitset& to, int cap) {
    int upper = std::min((from & g.vertex_set()).count(),
                         (to & g.vertex_set()).count());
    if (cap >= 0) upper = std::min(upper, cap);
    for (int size = 0; size <= upper; ++size) {
        Bitset X(g.n());
        std::vector<int> chosen;
        if (hitting_search(g, from, to, X, size, chosen)) {
            std::sort(chosen.begin(), chosen.end());
            HittingResult r{(int)chosen.size(), chosen};
            verify_hitting(g, r.vertices, from, to);
            return r;
        }
    }
    return std::nullopt;
}

HittingResult min_hitting(const STGraph& g, const Bitset& from,
                          const Bitset& to) {
    auto r = min_hitting_capped(g, from, to, -1);
    if (!r)
        throw ValidationError("internal: hitting search failed below its bound");
    return *r;
}

namespace {

struct DisjointSearch {
    const STGraph& g;
    const std::vector<GPath>& paths;
    std::vector<Bitset> masks;
    int k;
    Bitset used;
    std::vector<int> picked;

    DisjointSearch(const STGraph& g, const std::vector<GPath>& paths, int k)
        : g(g), paths(paths), k(k), used(g.n()) {
        for (auto& p : paths) masks.push_back(path_vertex_set(g, p));
    }

    bool rec(int i, int count) {
        if (count == k) return true;
        if ((int)paths.size() - i < k - count) return false;
        // each further path needs at least two fresh vertices
        if (g.n() - used.count() < 2 * (k - count)) return false;
        for (int j = i; j < (int)paths.size(); ++j) {
            if (used.intersects(masks[j])) continue;
            used |= masks[j];
            picked.push_back(j);
            if (rec(j + 1, count + 1)) return true;
            picked.pop_back();
            used -= masks[j];
        }
        return false;
    }
};

} // namespace

namespace {

// Pair search that never materialises the path list. Paths are grouped by
// their trace on a fixed minimum hitting set H: two disjoint paths must use
// disjoint parts of H, so whole bucket pairs with overlapping traces are
// skipped. Returns the same family the general search would (smallest i with
// a partner, then smallest such j > i in enumeration order).
std::optional<std::vector<GPath>> disjoint_pair_streamed(
    const STGraph& g, const Bitset& from, const Bitset& to,
    const std::vector<int>& H, uint64_t path_budget) {
    std::vector<int> hbit(g.n(), -1);
    for (size_t i = 0; i < H.size(); ++i) hbit[H[i]] = (int)i;

    struct Item {
        uint64_t mask;
        uint32_t idx;
    };
    std::map<uint32_t, std::vector<Item>> buckets;
    std::vector<std::pair<uint64_t, uint32_t>> all; // (mask, trace), stream order

    uint64_t seen = 0;
    for_each_path(g, from, to, [&](const GPath& p) {
        if (++seen > path_budget)
            throw BudgetError("path enumeration exceeded budget of " +
                              std::to_string(path_budget) + " paths");
        if (!is_nonnull(g, p)) return true;
        uint64_t m = 0;
        uint32_t tr = 0;
        for (int v : p.verts) {
            m |= 1ull << v;
            if (hbit[v] >= 0) tr |= 1u << hbit[v];
        }
        buckets[tr].push_back({m, (uint32_t)all.size()});
        all.push_back({m, tr});
        return true;
    });

    for (uint32_t i = 0; i < (uint32_t)all.size(); ++i) {
        const auto [mi, ti] = all[i];
        uint32_t best = UINT32_MAX;
        for (const auto& [tr, vec] : buckets) {
            if (tr & ti) continue;
            auto it = std::upper_bound(
                vec.begin(), vec.end(), i,
                [](uint32_t a, const Item& b) { return a < b.idx; });
            for (; it != vec.end(); ++it) {
                if (it->idx >= best) break;
                if ((it->mask & mi) == 0) {
                    best = it->idx;
                    break;
                }
            }
        }
        if (best == UINT32_MAX) continue;
        GPath p1, p2;
        uint32_t cur = 0;
        for_each_path(g, from, to, [&](const GPath& p) {
            if (!is_nonnull(g, p)) return true;
            if (cur == i) p1 = p;
            if (cur == best) {
                p2 = p;
                return false;
            }
            ++cur;
            return true;
        });
        std::vector<GPath> out{p1, p2};
        verify_packing(g, out, from, to, 1);
        return out;
    }
    return std::nullopt;
}

} // namespace

std::optional<std::vector<GPath>> disjoint_nonnull_packing(const STGraph& g,
                                                           const Bitset& from,
                                                           const Bitset& to,
                                                           int k,
                                                           uint64_t path_budget) {
    if (k <= 0) return std::vector<GPath>{};
    if (k == 2 && g.n() <= 64) {
        auto hit = min_hitting(g, from, to);
        if (hit.value == 0) return std::nullopt;
        if (hit.value <= 16)
            return disjoint_pair_streamed(g, from, to, hit.vertices,
                                          path_budget);
    }
    auto paths = enumerate_nonnull_paths(g, from, to, path_budget);
    DisjointSearch search(g, paths, k);
    if (!search.rec(0, 0)) return std::nullopt;
    std::vector<GPath> out;
    for (int j : search.picked) out.push_back(paths[j]);
    verify_packing(g, out, from, to, 1);
    return out;
}

void verify_packing(const STGraph& g, const std::vector<GPath>& paths,
                    const Bitset& from, const Bitset& to, int congestion) {
    std::vector<int> load(g.n(), 0);
    for (size_t i = 0; i < paths.size(); ++i) {
        const GPath& p = paths[i];
        validate_path(g, p);
        if (!is_nonnull(g, p))
            throw ValidationError("packing: member " + std::to_string(i) +
                                  " has identity value");
        bool fwd = from.test(p.first()) && to.test(p.last());
        bool bwd = to.test(p.first()) && from.test(p.last());
        if (!fwd && !bwd)
            throw ValidationError("packing: member " + std::to_string(i) +
                                  " does not join the two designated sets");
        for (int v : p.verts)
            if (++load[v] > congestion)
                throw ValidationError("packing: vertex '" + g.name(v) +
                                      "' lies on more than " +
                                      std::to_string(congestion) + " members");
    }
}

void verify_hitting(const STGraph& g, const std::vector<int>& X,
                    const Bitset& from, const Bitset& to) {
    Bitset mask(g.n());
    for (int v : X) {
        if (v < 0 || v >= g.n())
            throw ValidationError("hitting: vertex index out of range");
        mask.set(v);
    }
    if (auto p = find_nonnull_path(g, from, to, &mask)) {
        std::string via;
        for (int v : p->verts) via += (via.empty() ? "" : ",") + g.name(v);
        throw ValidationError("hitting: misses non-null path [" + via + "]");
    }
}

SolveResult solve(const STGraph& g, uint64_t path_budget) {
    SolveResult r{max_packing(g, g.S(), g.T(), path_budget),
                  min_hitting(g, g.S(), g.T())};
    return r;
}

Theorem3Verdict check_theorem3(const STGraph& g, const Bitset& R, int k,
                               uint64_t path_budget) {
    if (k < 1) throw ValidationError("check_theorem3: need k >= 1");
    Theorem3Verdict v;
    v.bound = 2 * k - 2;
    if (auto family = disjoint_nonnull_packing(g, R, R, k, path_budget)) {
        v.ok = true;
        v.packing_branch = true;
        v.paths = *family;
        return v;
    }
    auto hit = min_hitting_capped(g, R, R, v.bound);
    if (hit) {
        v.ok = true;
        v.packing_branch = false;
        v.hitting = hit->vertices;
        return v;
    }
    v.ok = false;
    v.packing_branch = false;
    v.detail = "no k disjoint paths and no hitting set within bound; instance:\n" +
               save_graph(g);
    return v;
}

Theorem1Verdict check_theorem1(const STGraph& g, int k, long long f_bound,
                               uint64_t path_budget) {
    auto packing = max_packing(g, g.S(), g.T(), path_budget);
    auto hitting = min_hitting(g, g.S(), g.T());
    Theorem1Verdict v;
    v.packing = packing.value;
    v.hitting = hitting.value;
    v.f_bound = f_bound;
    v.ok = packing.value >= k || hitting.value <= f_bound;
    return v;
}

} // namespace glpath
