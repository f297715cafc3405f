#include "glpath/path.hpp"

namespace glpath {

int path_value(const STGraph& g, const std::vector<Arc>& arcs) {
    int v = g.group()->identity();
    for (Arc a : arcs) v = g.group()->mul(v, g.arc_label(a));
    return v;
}

void validate_path(const STGraph& g, const GPath& p) {
    if (p.verts.empty()) throw ValidationError("path: no vertices");
    if (p.arcs.size() + 1 != p.verts.size())
        throw ValidationError("path: arc/vertex count mismatch");
    Bitset seen(g.n());
    for (int v : p.verts) {
        if (v < 0 || v >= g.n()) throw ValidationError("path: vertex out of range");
        if (seen.test(v))
            throw ValidationError("path: repeated vertex '" + g.name(v) + "'");
        seen.set(v);
    }
    for (size_t i = 0; i < p.arcs.size(); ++i) {
        if (g.arc_tail(p.arcs[i]) != p.verts[i] ||
            g.arc_head(p.arcs[i]) != p.verts[i + 1])
            throw ValidationError("path: arc " + std::to_string(i) +
                                  " does not join its endpoints");
    }
    if (p.value != path_value(g, p.arcs))
        throw ValidationError("path: stored value disagrees with arc labels");
}

GPath make_trivial_path(const STGraph& g, int v) {
    return GPath{{v}, {}, g.group()->identity()};
}

GPath reverse_path(const STGraph& g, const GPath& p) {
    GPath r;
    r.verts.assign(p.verts.rbegin(), p.verts.rend());
    for (auto it = p.arcs.rbegin(); it != p.arcs.rend(); ++it)
        r.arcs.push_back(Arc{it->edge, !it->fwd});
    r.value = g.group()->inv(p.value);
    return r;
}

GPath subpath(const STGraph& g, const GPath& p, int i, int j) {
    if (i < 0 || j >= (int)p.verts.size() || i > j)
        throw ValidationError("subpath: bad range");
    GPath s;
    s.verts.assign(p.verts.begin() + i, p.verts.begin() + j + 1);
    s.arcs.assign(p.arcs.begin() + i, p.arcs.begin() + j);
    s.value = path_value(g, s.arcs);
    return s;
}

GPath concat_paths(const STGraph& g, const GPath& a, const GPath& b) {
    if (a.verts.back() != b.verts.front())
        throw ValidationError("concat: paths do not share a junction vertex");
    GPath c;
    c.verts = a.verts;
    c.verts.insert(c.verts.end(), b.verts.begin() + 1, b.verts.end());
    c.arcs = a.arcs;
    c.arcs.insert(c.arcs.end(), b.arcs.begin(), b.arcs.end());
    c.value = g.group()->mul(a.value, b.value);
    validate_path(g, c); // also catches a non-simple result
    return c;
}

bool is_nonnull(const STGraph& g, const GPath& p) {
    return !g.group()->is_identity(p.value);
}

Bitset path_vertex_set(const STGraph& g, const GPath& p) {
    Bitset b(g.n());
    for (int v : p.verts) b.set(v);
    return b;
}

namespace {

struct PathDfs {
    const STGraph& g;
    const Bitset& from;
    const Bitset& to;
    const Bitset* blocked;
    const std::function<bool(const GPath&)>& visit;

    std::vector<int> verts;
    std::vector<Arc> arcs;
    std::vector<int> vals; // prefix products; vals[i] = value after i arcs
    Bitset onpath;
    bool aborted = false;

    PathDfs(const STGraph& g, const Bitset& from, const Bitset& to,
            const Bitset* blocked, const std::function<bool(const GPath&)>& visit)
        : g(g), from(from), to(to), blocked(blocked), visit(visit),
          onpath(g.n()) {}

    bool usable(int v) const { return !(blocked && blocked->test(v)); }

    // Report only the canonical orientation when the reversal is also a
    // from-to path.
    bool canonical() const {
        int a = verts.front(), b = verts.back();
        if (to.test(a) && from.test(b) && a > b) return false;
        return true;
    }

    void emit() {
        if (!canonical()) return;
        GPath p{verts, arcs, vals.back()};
        if (!visit(p)) aborted = true;
    }

    void extend() {
        if (aborted) return;
        int v = verts.back();
        if (to.test(v)) emit();
        if (aborted) return;
        for (const auto& adj : g.adjacent(v)) {
            if (onpath.test(adj.nbr) || !usable(adj.nbr)) continue;
            Arc a{adj.edge, g.edge(adj.edge).u == v};
            verts.push_back(adj.nbr);
            arcs.push_back(a);
            vals.push_back(g.group()->mul(vals.back(), g.arc_label(a)));
            onpath.set(adj.nbr);
            extend();
            onpath.reset(adj.nbr);
            vals.pop_back();
            arcs.pop_back();
            verts.pop_back();
            if (aborted) return;
        }
    }

    void run() {
        for (int s = 0; s < g.n() && !aborted; ++s) {
            if (!from.test(s) || !usable(s)) continue;
            verts.assign(1, s);
            arcs.clear();
            vals.assign(1, g.group()->identity());
            onpath.set(s);
            extend();
            onpath.reset(s);
        }
    }
};

} // namespace

bool for_each_path(const STGraph& g, const Bitset& from, const Bitset& to,
                   const std::function<bool(const GPath&)>& visit,
                   const Bitset* blocked) {
    PathDfs dfs(g, from, to, blocked, visit);
    dfs.run();
    return !dfs.aborted;
}

std::vector<GPath> enumerate_paths(const STGraph& g, const Bitset& from,
                                   const Bitset& to, const EnumOptions& opts,
                                   const Bitset* blocked) {
    std::vector<GPath> out;
    uint64_t seen = 0;
    for_each_path(
        g, from, to,
        [&](const GPath& p) {
            if (++seen > opts.limit)
                throw BudgetError("path enumeration exceeded budget of " +
                                  std::to_string(opts.limit));
            if (!opts.include_trivial && p.length() == 0) return true;
            if (opts.value_pred && !opts.value_pred(p.value)) return true;
            out.push_back(p);
            return true;
        },
        blocked);
    return out;
}

std::vector<GPath> enumerate_nonnull_paths(const STGraph& g, const Bitset& from,
                                           const Bitset& to, uint64_t limit,
                                           const Bitset* blocked) {
    EnumOptions opts;
    opts.limit = limit;
    opts.include_trivial = false;
    int id = g.group()->identity();
    opts.value_pred = [id](int v) { return v != id; };
    return enumerate_paths(g, from, to, opts, blocked);
}

std::optional<GPath> find_nonnull_path(const STGraph& g, const Bitset& from,
                                       const Bitset& to, const Bitset* blocked) {
    std::optional<GPath> found;
    int id = g.group()->identity();
    for_each_path(
        g, from, to,
        [&](const GPath& p) {
            if (p.value != id) {
                found = p;
                return false;
            }
            return true;
        },
        blocked);
    return found;
}

std::vector<std::string> path_names(const STGraph& g, const GPath& p) {
    std::vector<std::string> out;
    for (int v : p.verts) out.push_back(g.name(v));
    return out;
}

} // namespace glpath
