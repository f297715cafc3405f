#include "glpath/graph.hpp"

#include <algorithm>
#include <tuple>

namespace glpath {

STGraph::STGraph(GraphData data) : group_(std::move(data.group)) {
    if (!group_) throw ValidationError("graph: missing group");

    names_ = std::move(data.vertices);
    for (int i = 0; i < (int)names_.size(); ++i) {
        if (names_[i].empty())
            throw ValidationError("graph: empty vertex name at index " +
                                  std::to_string(i));
        if (!by_name_.emplace(names_[i], i).second)
            throw ValidationError("graph: duplicate vertex '" + names_[i] + "'");
    }

    S_ = Bitset(n());
    T_ = Bitset(n());
    for (auto& s : data.S) S_.set(vertex(s));
    for (auto& t : data.T) T_.set(vertex(t));

    for (size_t i = 0; i < data.edges.size(); ++i) {
        const auto& es = data.edges[i];
        int u = vertex(es.u);
        int v = vertex(es.v);
        if (u == v)
            throw ValidationError("graph: self-loop at '" + es.u + "' (edge " +
                                  std::to_string(i) + ")");
        edges_.push_back(Edge{u, v, group_->elem(es.label)});
    }

    if (data.interface_tuple) {
        std::vector<int> tup;
        Bitset seen(n());
        for (auto& nm : *data.interface_tuple) {
            int v = vertex(nm);
            if (seen.test(v))
                throw ValidationError("graph: repeated interface vertex '" + nm +
                                      "'");
            seen.set(v);
            tup.push_back(v);
        }
        interface_ = std::move(tup);
    }

    adj_.assign(n(), {});
    for (int e = 0; e < edge_count(); ++e) {
        adj_[edges_[e].u].push_back(Adj{edges_[e].v, e});
        adj_[edges_[e].v].push_back(Adj{edges_[e].u, e});
    }
    for (auto& lst : adj_)
        std::sort(lst.begin(), lst.end(), [](const Adj& a, const Adj& b) {
            return std::tie(a.nbr, a.edge) < std::tie(b.nbr, b.edge);
        });
}

int STGraph::vertex(const std::string& name) const {
    auto it = by_name_.find(name);
    if (it == by_name_.end())
        throw ValidationError("unknown vertex '" + name + "'");
    return it->second;
}

const std::vector<int>& STGraph::interface_tuple() const {
    if (!interface_)
        throw ValidationError("graph has no interface tuple");
    return *interface_;
}

GraphData STGraph::data() const {
    GraphData d;
    d.group = group_;
    d.vertices = names_;
    S_.for_each([&](int v) { d.S.push_back(names_[v]); });
    T_.for_each([&](int v) { d.T.push_back(names_[v]); });
    for (auto& e : edges_)
        d.edges.push_back(EdgeSpec{names_[e.u], names_[e.v], group_->name(e.label)});
    if (interface_) {
        std::vector<std::string> tup;
        for (int v : *interface_) tup.push_back(names_[v]);
        d.interface_tuple = std::move(tup);
    }
    return d;
}

STGraph STGraph::with_st(const Bitset& S, const Bitset& T) const {
    GraphData d = data();
    d.S.clear();
    d.T.clear();
    S.for_each([&](int v) { d.S.push_back(names_[v]); });
    T.for_each([&](int v) { d.T.push_back(names_[v]); });
    return STGraph(std::move(d));
}

STGraph STGraph::with_interface(const std::vector<int>& tuple) const {
    GraphData d = data();
    std::vector<std::string> tup;
    for (int v : tuple) tup.push_back(names_[v]);
    d.interface_tuple = std::move(tup);
    return STGraph(std::move(d));
}

STGraph STGraph::without_interface() const {
    GraphData d = data();
    d.interface_tuple.reset();
    return STGraph(std::move(d));
}

bool is_separation(const STGraph& g, const Separation& sep) {
    if (sep.A.universe() != g.n() || sep.B.universe() != g.n()) return false;
    if ((sep.A | sep.B) != g.vertex_set()) return false;
    Bitset onlyA = sep.A - sep.B;
    Bitset onlyB = sep.B - sep.A;
    for (auto& e : g.edges()) {
        if ((onlyA.test(e.u) && onlyB.test(e.v)) ||
            (onlyB.test(e.u) && onlyA.test(e.v)))
            return false;
    }
    return true;
}

STGraph induced_subgraph(const STGraph& g, const Bitset& A) {
    GraphData d;
    d.group = g.group();
    for (int v = 0; v < g.n(); ++v)
        if (A.test(v)) d.vertices.push_back(g.name(v));
    (g.S() & A).for_each([&](int v) { d.S.push_back(g.name(v)); });
    (g.T() & A).for_each([&](int v) { d.T.push_back(g.name(v)); });
    for (auto& e : g.edges())
        if (A.test(e.u) && A.test(e.v))
            d.edges.push_back(EdgeSpec{g.name(e.u), g.name(e.v),
                                       g.group()->name(e.label)});
    if (g.has_interface()) {
        std::vector<std::string> tup;
        for (int v : g.interface_tuple())
            if (A.test(v)) tup.push_back(g.name(v));
        d.interface_tuple = std::move(tup);
    }
    return STGraph(std::move(d));
}

STGraph delete_vertices(const STGraph& g, const Bitset& X) {
    return induced_subgraph(g, g.vertex_set() - X);
}

namespace {

std::vector<std::string> sorted_names(const STGraph& g, const Bitset& b) {
    std::vector<std::string> out;
    b.for_each([&](int v) { out.push_back(g.name(v)); });
    std::sort(out.begin(), out.end());
    return out;
}

// Canonical multiset of edges: endpoint names ordered, label flipped to the
// matching orientation.
std::vector<std::tuple<std::string, std::string, int>>
canonical_edges(const STGraph& g) {
    std::vector<std::tuple<std::string, std::string, int>> out;
    for (auto& e : g.edges()) {
        std::string nu = g.name(e.u), nv = g.name(e.v);
        if (nu <= nv)
            out.emplace_back(nu, nv, e.label);
        else
            out.emplace_back(nv, nu, g.group()->inv(e.label));
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

bool operator==(const STGraph& a, const STGraph& b) {
    if (a.group()->signature() != b.group()->signature()) return false;
    std::vector<std::string> na = a.names(), nb = b.names();
    std::sort(na.begin(), na.end());
    std::sort(nb.begin(), nb.end());
    if (na != nb) return false;
    if (sorted_names(a, a.S()) != sorted_names(b, b.S())) return false;
    if (sorted_names(a, a.T()) != sorted_names(b, b.T())) return false;
    return canonical_edges(a) == canonical_edges(b);
}

} // namespace glpath
