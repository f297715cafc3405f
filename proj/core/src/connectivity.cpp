#include "glpath/connectivity.hpp"

#include <algorithm>
#include <deque>

namespace glpath {

namespace {

// Minimal adjacency-list max-flow; capacities are tiny integers.
struct FlowNet {
    struct FArc {
        int to;
        int cap;  // residual capacity
        int orig; // constructed capacity; 0 marks a reverse arc
        int rev;  // index of the reverse arc in arcs[to]
    };
    std::vector<std::vector<FArc>> arcs;

    explicit FlowNet(int nodes) : arcs(nodes) {}

    void add(int a, int b, int cap) {
        arcs[a].push_back(FArc{b, cap, cap, (int)arcs[b].size()});
        arcs[b].push_back(FArc{a, 0, 0, (int)arcs[a].size() - 1});
    }

    // One BFS augmentation of unit flow; returns false when t is unreachable.
    bool augment(int s, int t) {
        std::vector<std::pair<int, int>> pred(arcs.size(), {-1, -1});
        std::deque<int> queue{s};
        pred[s] = {s, -1};
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            if (v == t) break;
            for (int i = 0; i < (int)arcs[v].size(); ++i) {
                const FArc& a = arcs[v][i];
                if (a.cap > 0 && pred[a.to].first < 0) {
                    pred[a.to] = {v, i};
                    queue.push_back(a.to);
                }
            }
        }
        if (pred[t].first < 0) return false;
        for (int v = t; v != s;) {
            auto [pv, pi] = pred[v];
            arcs[pv][pi].cap -= 1;
            arcs[arcs[pv][pi].to][arcs[pv][pi].rev].cap += 1;
            v = pv;
        }
        return true;
    }

    // Net flow on a constructed (forward) arc.
    int flow(const FArc& a) const { return a.orig - a.cap; }

    std::vector<bool> residual_reachable(int s) const {
        std::vector<bool> seen(arcs.size(), false);
        std::deque<int> queue{s};
        seen[s] = true;
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            for (const FArc& a : arcs[v])
                if (a.cap > 0 && !seen[a.to]) {
                    seen[a.to] = true;
                    queue.push_back(a.to);
                }
        }
        return seen;
    }
};

// Smallest edge joining u and v; parallel edges are interchangeable here.
Arc canonical_arc(const STGraph& g, int u, int v) {
    for (const auto& adj : g.adjacent(u))
        if (adj.nbr == v) return Arc{adj.edge, g.edge(adj.edge).u == u};
    throw ValidationError("internal: no edge between linkage path vertices");
}

} // namespace

Linkage max_disjoint_linkage(const STGraph& g, const Bitset& X, const Bitset& Y) {
    int n = g.n();
    auto vin = [](int v) { return 2 * v; };
    auto vout = [](int v) { return 2 * v + 1; };
    int src = 2 * n, snk = 2 * n + 1;
    int inf = n + 2;

    FlowNet net(2 * n + 2);
    for (int v = 0; v < n; ++v) net.add(vin(v), vout(v), 1);
    for (const auto& e : g.edges()) {
        net.add(vout(e.u), vin(e.v), inf);
        net.add(vout(e.v), vin(e.u), inf);
    }
    X.for_each([&](int x) { net.add(src, vin(x), inf); });
    Y.for_each([&](int y) { net.add(vout(y), snk, inf); });

    int total = 0;
    while (net.augment(src, snk)) ++total;

    // remaining[node][i]: units of flow still to route through arc i of node.
    std::vector<std::vector<int>> remaining(net.arcs.size());
    for (size_t v = 0; v < net.arcs.size(); ++v) {
        remaining[v].resize(net.arcs[v].size());
        for (size_t i = 0; i < net.arcs[v].size(); ++i)
            remaining[v][i] = net.arcs[v][i].orig > 0
                                  ? std::max(net.flow(net.arcs[v][i]), 0)
                                  : 0;
    }

    Linkage result;
    for (size_t i = 0; i < net.arcs[src].size(); ++i) {
        while (remaining[src][i] > 0) {
            remaining[src][i] -= 1;
            std::vector<int> seq;
            int node = net.arcs[src][i].to;
            while (node != snk) {
                if (node % 2 == 0 && node < 2 * n) {
                    int v = node / 2;
                    seq.push_back(v);
                }
                bool moved = false;
                for (size_t j = 0; j < net.arcs[node].size(); ++j) {
                    if (remaining[node][j] > 0) {
                        remaining[node][j] -= 1;
                        node = net.arcs[node][j].to;
                        moved = true;
                        break;
                    }
                }
                if (!moved)
                    throw ValidationError("internal: flow decomposition stuck");
            }
            GPath p;
            p.verts.assign(1, seq[0]);
            p.value = g.group()->identity();
            for (size_t k = 1; k < seq.size(); ++k) {
                Arc arc = canonical_arc(g, seq[k - 1], seq[k]);
                p.verts.push_back(seq[k]);
                p.arcs.push_back(arc);
                p.value = g.group()->mul(p.value, g.arc_label(arc));
            }
            result.paths.push_back(std::move(p));
        }
    }

    auto reach = net.residual_reachable(src);
    for (int v = 0; v < n; ++v)
        if (reach[vin(v)] && !reach[vout(v)]) result.cut.push_back(v);

    if ((int)result.paths.size() != total || (int)result.cut.size() != total)
        throw ValidationError("internal: linkage decomposition size mismatch");
    return result;
}

std::vector<Bitset> components(const STGraph& g, const Bitset& X) {
    std::vector<Bitset> comps;
    Bitset seen = X;
    for (int v = 0; v < g.n(); ++v) {
        if (seen.test(v)) continue;
        Bitset comp(g.n());
        std::deque<int> queue{v};
        seen.set(v);
        comp.set(v);
        while (!queue.empty()) {
            int x = queue.front();
            queue.pop_front();
            for (const auto& adj : g.adjacent(x))
                if (!seen.test(adj.nbr)) {
                    seen.set(adj.nbr);
                    comp.set(adj.nbr);
                    queue.push_back(adj.nbr);
                }
        }
        comps.push_back(std::move(comp));
    }
    return comps;
}

namespace {

// Split component sizes into two groups with both sums >= need, preferring
// the smallest feasible left-group sum and then the lexicographically first
// subset achieving it. Returns the chosen subset as component indices.
std::optional<std::vector<int>> split_components(const std::vector<int>& sizes,
                                                 int need, int total) {
    int m = (int)sizes.size();
    std::vector<std::vector<char>> dp(m + 1, std::vector<char>(total + 1, 0));
    dp[0][0] = 1;
    for (int i = 0; i < m; ++i)
        for (int s = 0; s <= total; ++s)
            if (dp[i][s]) {
                dp[i + 1][s] = 1;
                if (s + sizes[i] <= total) dp[i + 1][s + sizes[i]] = 1;
            }
    int lo = std::max(need, 0), hi = total - std::max(need, 0);
    for (int s = lo; s <= hi; ++s) {
        if (!dp[m][s]) continue;
        std::vector<int> subset;
        int cur = s;
        // walking back preferring exclusion yields the lexicographically
        // first subset when read over increasing component index
        for (int i = m; i > 0; --i) {
            if (dp[i - 1][cur]) continue;
            subset.push_back(i - 1);
            cur -= sizes[i - 1];
        }
        std::reverse(subset.begin(), subset.end());
        return subset;
    }
    return std::nullopt;
}

} // namespace

UnbreakabilityResult unbreakability(const STGraph& g, int q, int k,
                                    uint64_t work_budget) {
    if (q < 1 || k < 1) throw ValidationError("unbreakability: need q,k >= 1");
    int n = g.n();
    uint64_t work = 0;

    int max_sep = std::min(k - 1, n);
    std::vector<int> comb;
    for (int size = 0; size <= max_sep; ++size) {
        comb.assign(size, 0);
        for (int i = 0; i < size; ++i) comb[i] = i;
        bool more = size <= n;
        while (more) {
            work += 1 + n;
            if (work > work_budget)
                throw BudgetError("unbreakability exceeded work budget");

            Bitset X(n);
            for (int v : comb) X.set(v);
            auto comps = components(g, X);
            std::vector<int> sizes;
            int total = 0;
            for (auto& c : comps) {
                sizes.push_back(c.count());
                total += sizes.back();
            }
            auto subset = split_components(sizes, q - size, total);
            if (subset) {
                Bitset A = X, B = X;
                Bitset chosen(n);
                for (int idx : *subset) chosen.set(idx);
                for (size_t i = 0; i < comps.size(); ++i) {
                    if (chosen.test((int)i))
                        A |= comps[i];
                    else
                        B |= comps[i];
                }
                return UnbreakabilityResult{false, Separation{A, B}};
            }

            if (size == 0) break;
            int i = size - 1;
            while (i >= 0 && comb[i] == n - size + i) --i;
            if (i < 0) {
                more = false;
            } else {
                ++comb[i];
                for (int j = i + 1; j < size; ++j) comb[j] = comb[j - 1] + 1;
            }
        }
    }
    return UnbreakabilityResult{true, std::nullopt};
}

} // namespace glpath
