#pragma once

#include <optional>
#include <vector>

#include "glpath/graph.hpp"

namespace glpath::testing {

/// Brute-force reference implementations, written against the raw edge list
/// so they share no traversal code with the library. All exponential; only
/// for corpus-sized graphs.

/// A path as (vertex sequence, edge id sequence) with an explicit label
/// product accumulated manually.
struct OraclePath {
    std::vector<int> verts;
    std::vector<int> edges;
    int value;

    bool operator==(const OraclePath&) const = default;
    bool operator<(const OraclePath& o) const {
        if (verts != o.verts) return verts < o.verts;
        return edges < o.edges;
    }
};

/// Every simple from-to path including zero-arc ones, deduplicated up to
/// reversal with the same canonical-orientation rule the library documents
/// (keep the orientation whose first vertex index is <= the last), sorted.
std::vector<OraclePath> oracle_all_paths(const STGraph& g, const Bitset& from,
                                         const Bitset& to,
                                         const Bitset* blocked = nullptr);

bool oracle_has_nonnull(const STGraph& g, const Bitset& from, const Bitset& to,
                        const Bitset* blocked = nullptr);

/// Exact maximum congestion-2 multiset packing of non-null S-T paths, by
/// exhaustive multiplicity assignment (0..2 per path) over the full list.
int oracle_max_packing(const STGraph& g);

/// Exact minimum hitting set by subset enumeration in size order.
int oracle_min_hitting(const STGraph& g);

/// Largest family of fully vertex-disjoint non-null from-to paths.
int oracle_max_disjoint(const STGraph& g, const Bitset& from,
                        const Bitset& to);

/// Minimum vertex X-Y cut (allowed to use X or Y vertices) by subset
/// enumeration: smallest C with no X-C to Y-C connection in g - C.
int oracle_min_vertex_cut(const STGraph& g, const Bitset& X, const Bitset& Y);

/// Whether a separation of order < k with both sides >= q exists, decided by
/// enumerating all 3^n assignments of vertices to A-only / B-only / both.
bool oracle_breakable(const STGraph& g, int q, int k);

} // namespace glpath::testing
