#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "glpath/bitset.hpp"
#include "glpath/errors.hpp"
#include "glpath/group.hpp"

namespace glpath {

/// One undirected edge, stored once. The label is the group element read when
/// traversing u -> v; the reverse traversal reads its inverse. Keeping a
/// single stored orientation makes the inverse-pairing invariant unviolable.
struct Edge {
    int u;
    int v;
    int label;
};

/// A directed traversal of an edge: fwd means u -> v.
struct Arc {
    int edge;
    bool fwd;

    bool operator==(const Arc& o) const {
        return edge == o.edge && fwd == o.fwd;
    }
};

struct EdgeSpec {
    std::string u, v, label;
};

/// Everything needed to build an STGraph, in terms of vertex names.
struct GraphData {
    GroupPtr group;
    std::vector<std::string> vertices;
    std::vector<std::string> S, T;
    std::vector<EdgeSpec> edges;
    std::optional<std::vector<std::string>> interface_tuple;
};

/// An undirected multigraph with group-labelled edges and two distinguished
/// vertex subsets S and T (which may intersect). Optionally carries an
/// ordered interface tuple used by the type machinery. Vertices are opaque
/// string names mapped to dense indices 0..n-1 in declaration order; all set
/// operations run on bitsets over the dense indices.
///
/// Self-loops are rejected at construction; parallel edges are allowed and
/// kept distinct.
class STGraph {
public:
    explicit STGraph(GraphData data);

    int n() const { return (int)names_.size(); }
    int edge_count() const { return (int)edges_.size(); }
    const GroupPtr& group() const { return group_; }

    const std::string& name(int v) const { return names_[v]; }
    const std::vector<std::string>& names() const { return names_; }
    int vertex(const std::string& name) const;
    bool has_vertex(const std::string& name) const {
        return by_name_.count(name) > 0;
    }

    const Bitset& S() const { return S_; }
    const Bitset& T() const { return T_; }
    Bitset vertex_set() const { return Bitset::full(n()); }

    bool has_interface() const { return interface_.has_value(); }
    const std::vector<int>& interface_tuple() const;

    const Edge& edge(int e) const { return edges_[e]; }
    const std::vector<Edge>& edges() const { return edges_; }

    struct Adj {
        int nbr;
        int edge;
    };
    /// Incident arcs of v as (neighbour, edge id), sorted ascending; the
    /// canonical extension order for all deterministic enumerations.
    const std::vector<Adj>& adjacent(int v) const { return adj_[v]; }

    int arc_tail(Arc a) const { return a.fwd ? edges_[a.edge].u : edges_[a.edge].v; }
    int arc_head(Arc a) const { return a.fwd ? edges_[a.edge].v : edges_[a.edge].u; }
    int arc_label(Arc a) const {
        return a.fwd ? edges_[a.edge].label : group_->inv(edges_[a.edge].label);
    }
    GroupElem arc_label_elem(Arc a) const { return GroupElem(group_, arc_label(a)); }

    /// Copy with S and T replaced (used for role swaps).
    STGraph with_st(const Bitset& S, const Bitset& T) const;
    /// Copy with the interface tuple replaced.
    STGraph with_interface(const std::vector<int>& tuple) const;
    STGraph without_interface() const;

    /// Export back to name-based form.
    GraphData data() const;

private:
    GroupPtr group_;
    std::vector<std::string> names_;
    std::unordered_map<std::string, int> by_name_;
    Bitset S_, T_;
    std::vector<Edge> edges_;
    std::vector<std::vector<Adj>> adj_;
    std::optional<std::vector<int>> interface_;
};

/// An (A,B) pair intended to satisfy A u B = V with no edge between A-B and
/// B-A; validity is checked by is_separation, not by construction.
struct Separation {
    Bitset A, B;

    int order() const { return (A & B).count(); }
};

bool is_separation(const STGraph& g, const Separation& sep);

/// Subgraph induced on A. Vertex names are preserved; S and T restrict by
/// intersection; interface entries outside A are dropped (order kept).
STGraph induced_subgraph(const STGraph& g, const Bitset& A);

/// induced_subgraph on V - X.
STGraph delete_vertices(const STGraph& g, const Bitset& X);

/// Structural equality: same group (by signature), same vertex name set,
/// same S and T name sets, same edge multiset up to flipping an edge to its
/// inverse orientation. The interface tuple is not part of equality.
bool operator==(const STGraph& a, const STGraph& b);
inline bool operator!=(const STGraph& a, const STGraph& b) { return !(a == b); }

} // namespace glpath
