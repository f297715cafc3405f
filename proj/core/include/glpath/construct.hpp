#pragma once

#include <cstdint>
#include <optional>

#include "glpath/graph.hpp"

namespace glpath {

/// The labelled wall W_n over Z/2Z with every edge labelled 1 (so non-null
/// means odd length): a (2n+1) x (2n+1) grid; an S-pendant attached on the
/// left end of every odd row (rows 1,3,..,2n+1, so n+1 of them) and a
/// T-pendant symmetric on the right; a fresh triangle apex over every edge
/// of the top row. Vertices: grid "v{r}_{c}", pendants "s{r}"/"t{r}",
/// apexes "w{c}". Total count 4n^2+8n+3.
STGraph build_figure1(int n);

int figure1_size(int n);
std::optional<int> figure1_n_for_size(int vertices);

/// Erdos-Renyi style instance, deterministic in the seed (fixed generator and
/// fixed draw order: edge coins with labels pair by pair, then S coins, then
/// T coins). Vertices "v0".."v{n-1}".
struct RandomSpec {
    GroupPtr group;
    int n_vertices = 6;
    double edge_prob = 0.4;
    double s_frac = 0.3;
    double t_frac = 0.3;
    uint64_t seed = 1;
};

STGraph random_instance(const RandomSpec& spec);

/// Checks of the W_n properties on a concrete instance (which must carry the
/// build_figure1 vertex naming so the top row can be located):
///   (a) no two vertex-disjoint non-null S-T paths,
///   (b) every hitting set has size >= n,
///   (d) deleting the whole top strip (top grid row plus apexes) leaves no
///       non-null S-T path.
/// The exact congestion-2 packing value (c) is reported when requested; it
/// is informational and not part of ok().
struct Figure1Report {
    int n;
    bool no_two_disjoint;
    bool hitting_at_least_n;
    int hitting_exact;
    std::optional<int> packing;
    bool top_row_kills;

    bool ok() const {
        return no_two_disjoint && hitting_at_least_n && top_row_kills;
    }
};

Figure1Report verify_figure1(const STGraph& g, int n,
                             uint64_t path_budget = 1000000,
                             bool with_packing = true);

} // namespace glpath
