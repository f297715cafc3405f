#include "glpath/graph_io.hpp"

#include <sstream>

#include "json.hpp"

namespace glpath {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& msg) {
    throw ValidationError(path + ": " + msg);
}

const json& need(const json& j, const char* key, const std::string& path) {
    if (!j.is_object()) fail(path, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) fail(path, std::string("missing key '") + key + "'");
    return *it;
}

std::string need_string(const json& j, const std::string& path) {
    if (!j.is_string()) fail(path, "expected a string");
    return j.get<std::string>();
}

int need_int(const json& j, const std::string& path) {
    if (!j.is_number_integer()) fail(path, "expected an integer");
    return j.get<int>();
}

std::vector<std::string> need_string_array(const json& j, const std::string& path) {
    if (!j.is_array()) fail(path, "expected an array");
    std::vector<std::string> out;
    for (size_t i = 0; i < j.size(); ++i)
        out.push_back(need_string(j[i], path + "/" + std::to_string(i)));
    return out;
}

GroupPtr group_from_json(const json& j, const std::string& path) {
    std::string kind = need_string(need(j, "kind", path), path + "/kind");
    if (kind == "cyclic")
        return FiniteGroup::cyclic(need_int(need(j, "n", path), path + "/n"));
    if (kind == "symmetric")
        return FiniteGroup::symmetric(need_int(need(j, "m", path), path + "/m"));
    if (kind == "product") {
        const json& f = need(j, "factors", path);
        if (!f.is_array() || f.empty())
            fail(path + "/factors", "expected a non-empty array");
        std::vector<GroupPtr> factors;
        for (size_t i = 0; i < f.size(); ++i)
            factors.push_back(
                group_from_json(f[i], path + "/factors/" + std::to_string(i)));
        return FiniteGroup::product(factors);
    }
    if (kind == "table") {
        auto elems = need_string_array(need(j, "elems", path), path + "/elems");
        const json& t = need(j, "table", path);
        if (!t.is_array()) fail(path + "/table", "expected an array");
        std::vector<std::vector<int>> table;
        for (size_t i = 0; i < t.size(); ++i) {
            const json& row = t[i];
            std::string rp = path + "/table/" + std::to_string(i);
            if (!row.is_array()) fail(rp, "expected an array");
            std::vector<int> r;
            for (size_t k = 0; k < row.size(); ++k)
                r.push_back(need_int(row[k], rp + "/" + std::to_string(k)));
            table.push_back(std::move(r));
        }
        return FiniteGroup::from_table(elems, table);
    }
    fail(path + "/kind", "unknown group kind '" + kind + "'");
}

json parse_text(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ValidationError(std::string("JSON parse error: ") + e.what());
    }
}

} // namespace

GroupPtr parse_group_spec(const std::string& json_text) {
    return group_from_json(parse_text(json_text), "/");
}

STGraph load_graph(const std::string& json_text) {
    json j = parse_text(json_text);
    if (!j.is_object()) fail("/", "expected an object");

    GraphData d;
    d.group = group_from_json(need(j, "group", "/"), "/group");
    d.vertices = need_string_array(need(j, "vertices", "/"), "/vertices");
    d.S = need_string_array(need(j, "S", "/"), "/S");
    d.T = need_string_array(need(j, "T", "/"), "/T");
    if (j.contains("interface"))
        d.interface_tuple = need_string_array(j["interface"], "/interface");

    const json& edges = need(j, "edges", "/");
    if (!edges.is_array()) fail("/edges", "expected an array");
    for (size_t i = 0; i < edges.size(); ++i) {
        std::string ep = "/edges/" + std::to_string(i);
        const json& e = edges[i];
        EdgeSpec es;
        es.u = need_string(need(e, "u", ep), ep + "/u");
        es.v = need_string(need(e, "v", ep), ep + "/v");
        es.label = need_string(need(e, "label", ep), ep + "/label");
        if (!d.group->has_elem(es.label))
            fail(ep + "/label", "unknown group element '" + es.label + "'");
        d.edges.push_back(std::move(es));
    }

    try {
        return STGraph(std::move(d));
    } catch (const ValidationError& e) {
        throw ValidationError(std::string("/: ") + e.what());
    }
}

std::string save_graph(const STGraph& g) {
    GraphData d = g.data();
    json j;
    j["group"] = parse_text(g.group()->spec_json());
    j["vertices"] = d.vertices;
    j["S"] = d.S;
    j["T"] = d.T;
    if (d.interface_tuple) j["interface"] = *d.interface_tuple;
    j["edges"] = json::array();
    for (auto& e : d.edges)
        j["edges"].push_back({{"u", e.u}, {"v", e.v}, {"label", e.label}});
    return j.dump(2) + "\n";
}

namespace {

std::string dot_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    out += '"';
    return out;
}

const char* kPathColors[] = {"red",    "blue",   "darkgreen", "orange",
                             "purple", "brown",  "deeppink",  "teal"};

} // namespace

std::string to_dot(const STGraph& g, const DotHighlight* hl) {
    std::ostringstream os;
    os << "graph G {\n  node [shape=circle];\n";

    Bitset hit(g.n());
    if (hl)
        for (int v : hl->hitting) hit.set(v);

    for (int v = 0; v < g.n(); ++v) {
        bool inS = g.S().test(v), inT = g.T().test(v);
        std::vector<std::string> attrs;
        if (inS && inT)
            attrs.push_back("shape=Msquare");
        else if (inS)
            attrs.push_back("shape=box");
        else if (inT)
            attrs.push_back("shape=diamond");
        if (g.has_interface()) {
            for (int u : g.interface_tuple())
                if (u == v) attrs.push_back("peripheries=2");
        }
        if (hit.test(v)) {
            attrs.push_back("style=filled");
            attrs.push_back("fillcolor=red");
        }
        if (!attrs.empty()) {
            os << "  " << dot_quote(g.name(v)) << " [";
            for (size_t i = 0; i < attrs.size(); ++i)
                os << (i ? ", " : "") << attrs[i];
            os << "];\n";
        }
    }

    // Edge colours: each packing path claims one unused edge between each
    // consecutive vertex pair; an edge on two paths gets a colour list.
    std::vector<std::vector<std::string>> edge_colors(g.edge_count());
    if (hl) {
        for (size_t p = 0; p < hl->packing_paths.size(); ++p) {
            const auto& vs = hl->packing_paths[p];
            const char* color = kPathColors[p % (sizeof(kPathColors) /
                                                 sizeof(kPathColors[0]))];
            for (size_t i = 0; i + 1 < vs.size(); ++i) {
                for (auto& adj : g.adjacent(vs[i])) {
                    if (adj.nbr == vs[i + 1] &&
                        edge_colors[adj.edge].size() < 2) {
                        edge_colors[adj.edge].push_back(color);
                        break;
                    }
                }
            }
        }
    }

    for (int e = 0; e < g.edge_count(); ++e) {
        const Edge& ed = g.edge(e);
        os << "  " << dot_quote(g.name(ed.u)) << " -- " << dot_quote(g.name(ed.v))
           << " [label=" << dot_quote(g.group()->name(ed.label));
        if (!edge_colors[e].empty()) {
            std::string c = edge_colors[e][0];
            for (size_t i = 1; i < edge_colors[e].size(); ++i)
                c += ":" + edge_colors[e][i];
            os << ", color=" << dot_quote(c) << ", penwidth=2";
        }
        os << "];\n";
    }
    os << "}\n";
    return os.str();
}

} // namespace glpath
