#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "glpath/graph.hpp"

namespace glpath {

/// A simple path: p+1 distinct vertices joined by p arcs. The value is the
/// ordered product of arc labels (identity for a zero-arc path). Paths are
/// enumerated as unoriented objects but stored in a concrete orientation.
struct GPath {
    std::vector<int> verts;
    std::vector<Arc> arcs;
    int value;

    int first() const { return verts.front(); }
    int last() const { return verts.back(); }
    int length() const { return (int)arcs.size(); }

    bool operator==(const GPath& o) const {
        return verts == o.verts && arcs == o.arcs;
    }
};

/// Ordered product of the arc labels; identity when empty.
int path_value(const STGraph& g, const std::vector<Arc>& arcs);

/// Checks structure (arcs connect consecutive vertices, all vertices
/// distinct, no self-loop arcs) and that the stored value matches.
/// Raises ValidationError otherwise.
void validate_path(const STGraph& g, const GPath& p);

GPath make_trivial_path(const STGraph& g, int v);
GPath reverse_path(const STGraph& g, const GPath& p);
/// Subpath spanning vertex positions i..j of p (i <= j).
GPath subpath(const STGraph& g, const GPath& p, int i, int j);
/// Concatenation at a shared junction vertex (a.last == b.first); the result
/// must again be simple.
GPath concat_paths(const STGraph& g, const GPath& a, const GPath& b);

bool is_nonnull(const STGraph& g, const GPath& p);

Bitset path_vertex_set(const STGraph& g, const GPath& p);

/// Visits every simple path with first vertex in `from` and last vertex in
/// `to` (including zero-arc paths when a vertex lies in both), deduplicated
/// up to reversal whenever the reversed path also qualifies: of the two
/// orientations only the one with first dense index <= last is reported.
/// Order is deterministic: lexicographic in (vertex sequence, edge ids).
/// Vertices in `blocked` (if given) are treated as deleted.
/// The visitor returns false to abort; for_each_path then returns false.
bool for_each_path(const STGraph& g, const Bitset& from, const Bitset& to,
                   const std::function<bool(const GPath&)>& visit,
                   const Bitset* blocked = nullptr);

struct EnumOptions {
    /// Paths counted against the budget are the deduplicated from-to paths
    /// regardless of any value filter; exceeding the budget raises
    /// BudgetError rather than returning a truncated list.
    uint64_t limit = 1000000;
    /// Keep zero-arc paths (only arise when from and to overlap).
    bool include_trivial = true;
    /// Optional filter on the value (element index); nullptr keeps all.
    std::function<bool(int)> value_pred;
};

std::vector<GPath> enumerate_paths(const STGraph& g, const Bitset& from,
                                   const Bitset& to,
                                   const EnumOptions& opts = {},
                                   const Bitset* blocked = nullptr);

/// All non-null from-to paths (at least one arc by construction).
std::vector<GPath> enumerate_nonnull_paths(const STGraph& g, const Bitset& from,
                                           const Bitset& to,
                                           uint64_t limit = 1000000,
                                           const Bitset* blocked = nullptr);

/// First non-null from-to path in canonical DFS order, if any. Exact and
/// exhaustive: no value-state pruning is applied, because reaching a vertex
/// twice with the same accumulated value can still lead to different simple
/// extensions. Worst case exponential; intended for small instances.
std::optional<GPath> find_nonnull_path(const STGraph& g, const Bitset& from,
                                       const Bitset& to,
                                       const Bitset* blocked = nullptr);

inline bool has_nonnull_path(const STGraph& g, const Bitset& from,
                             const Bitset& to, const Bitset* blocked = nullptr) {
    return find_nonnull_path(g, from, to, blocked).has_value();
}

/// Vertex sequence as names, for certificates.
std::vector<std::string> path_names(const STGraph& g, const GPath& p);

} // namespace glpath
