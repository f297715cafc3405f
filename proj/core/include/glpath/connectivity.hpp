#pragma once

#include <cstdint>
#include <optional>

#include "glpath/graph.hpp"
#include "glpath/path.hpp"

namespace glpath {

/// Maximum family of vertex-disjoint X-Y paths together with a vertex cut of
/// the same size certifying optimality (Menger). A vertex lying in both X and
/// Y counts as a zero-arc path and consumes itself.
struct Linkage {
    std::vector<GPath> paths;
    std::vector<int> cut; // may include vertices of X or Y

    int size() const { return (int)paths.size(); }
};

/// Exact, via unit-capacity max-flow on the split graph (v_in -> v_out arcs
/// of capacity one; everything else unbounded, so the min cut is a vertex
/// cut). Deterministic: augmenting paths and the flow decomposition follow
/// canonical adjacency order.
Linkage max_disjoint_linkage(const STGraph& g, const Bitset& X, const Bitset& Y);

struct UnbreakabilityResult {
    bool unbreakable;
    /// When breakable: a separation of order < k with both sides of size
    /// >= q (the first witness in canonical enumeration order).
    std::optional<Separation> witness;
};

/// Decides (q,k)-unbreakability by enumerating every candidate separator
/// X with |X| < k and asking whether the components of g - X can be split
/// into two groups of size >= q - |X| each. Complete because each component
/// must lie wholly on one side of any separation with separator X.
/// `work_budget` caps the number of candidate separators examined.
UnbreakabilityResult unbreakability(const STGraph& g, int q, int k,
                                    uint64_t work_budget = 50000000);

/// Connected components of g - X (vertex sets, canonically ordered by their
/// smallest vertex).
std::vector<Bitset> components(const STGraph& g, const Bitset& X);

} // namespace glpath
