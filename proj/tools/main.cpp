// glpath: exact solvers and verifiers for non-null S-T path duality in
// group-labelled graphs. JSON in, JSON out; see --help per subcommand.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "glpath/connectivity.hpp"
#include "glpath/construct.hpp"
#include "glpath/duality.hpp"
#include "glpath/errors.hpp"
#include "glpath/gadget.hpp"
#include "glpath/graph_io.hpp"
#include "glpath/path.hpp"
#include "glpath/tripod.hpp"
#include "glpath/types.hpp"

using nlohmann::json;
using namespace glpath;

namespace {

std::string read_text(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError("cannot open input file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ValidationError("cannot open output file: " + path);
    out << text;
}

json names_of(const STGraph& g, const std::vector<int>& vs) {
    json a = json::array();
    for (int v : vs) a.push_back(g.name(v));
    return a;
}

json paths_json(const STGraph& g, const std::vector<GPath>& ps) {
    json a = json::array();
    for (const GPath& p : ps) a.push_back(path_names(g, p));
    return a;
}

struct Common {
    std::string input = "-";
    std::string output;
    std::string dot;
    uint64_t budget_paths = 1000000;
    uint64_t budget_work = 50000000;
    int r_max = 1;
    uint64_t seed = 1;
};

void add_common(CLI::App* cmd, Common& c) {
    cmd->add_option("--input", c.input, "Input file, - for stdin");
    cmd->add_option("--output", c.output, "Output file, default stdout");
    cmd->add_option("--dot", c.dot, "Also write a GraphViz view here");
    cmd->add_option("--budget-paths", c.budget_paths,
                    "Path enumeration budget");
    cmd->add_option("--budget-work", c.budget_work, "Work budget");
    cmd->add_option("--r-max", c.r_max, "Largest supported interface size");
    cmd->add_option("--seed", c.seed, "RNG seed for randomized commands");
}

void emit(const Common& c, const json& j) {
    write_text(c.output, j.dump(2) + "\n");
}

void emit_dot(const Common& c, const STGraph& g,
              const DotHighlight* hl = nullptr) {
    if (!c.dot.empty()) write_text(c.dot, to_dot(g, hl));
}

/// Interface size of a graph that must carry one; --r, when given, must
/// agree (it is a cross-check, not an override).
int iface_size(const STGraph& g, int r_flag) {
    if (!g.has_interface())
        throw ValidationError("the input graph carries no interface tuple");
    int r = (int)g.interface_tuple().size();
    if (r_flag >= 0 && r_flag != r)
        throw ValidationError("--r disagrees with the graph's interface (" +
                              std::to_string(r_flag) + " vs " +
                              std::to_string(r) + ")");
    return r;
}

/// A group spec document, or a graph document whose group is taken.
GroupPtr group_of_input(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ValidationError(std::string("bad JSON input: ") + e.what());
    }
    if (j.is_object() && j.contains("kind")) return parse_group_spec(text);
    return load_graph(text).group();
}

json certificate_json(const STGraph& g, const DualityCertificate& cert) {
    json j;
    j["kind"] = cert.is_packing ? "packing" : "hitting";
    j["size"] = cert.size();
    j["bound"] = cert.bound;
    j["witness"] = cert.is_packing ? paths_json(g, cert.paths)
                                   : names_of(g, cert.hitting);
    return j;
}

DotHighlight certificate_highlight(const DualityCertificate& cert) {
    DotHighlight hl;
    if (cert.is_packing) {
        for (const GPath& p : cert.paths) hl.packing_paths.push_back(p.verts);
    } else {
        hl.hitting = cert.hitting;
    }
    return hl;
}

int cmd_solve(const Common& c) {
    STGraph g = load_graph(read_text(c.input));
    SolveResult r = solve(g, c.budget_paths);
    verify_packing(g, r.packing.paths, g.S(), g.T(), 2);
    verify_hitting(g, r.hitting.vertices, g.S(), g.T());
    json j;
    j["packing"] = r.packing.value;
    j["packing_witness"] = paths_json(g, r.packing.paths);
    j["hitting"] = r.hitting.value;
    j["hitting_witness"] = names_of(g, r.hitting.vertices);
    emit(c, j);
    DotHighlight hl;
    for (const GPath& p : r.packing.paths) hl.packing_paths.push_back(p.verts);
    hl.hitting = r.hitting.vertices;
    emit_dot(c, g, &hl);
    return 0;
}

int cmd_unbreakable(const Common& c, int q, int k) {
    STGraph g = load_graph(read_text(c.input));
    UnbreakabilityResult r = unbreakability(g, q, k, c.budget_work);
    json j;
    j["q"] = q;
    j["k"] = k;
    j["unbreakable"] = r.unbreakable;
    if (r.witness) {
        json w;
        w["A"] = names_of(g, r.witness->A.to_vector());
        w["B"] = names_of(g, r.witness->B.to_vector());
        w["separator"] = names_of(g, (r.witness->A & r.witness->B).to_vector());
        j["witness"] = w;
    } else {
        j["witness"] = nullptr;
    }
    emit(c, j);
    emit_dot(c, g);
    return 0;
}

int cmd_prop4(const Common& c, int q, int k) {
    STGraph g = load_graph(read_text(c.input));
    DualityCertificate cert = proposition4(g, q, k, c.budget_paths);
    if (cert.is_packing)
        verify_packing(g, cert.paths, g.S(), g.T(), 2);
    else
        verify_hitting(g, cert.hitting, g.S(), g.T());
    json j = certificate_json(g, cert);
    j["q"] = q;
    j["k"] = k;
    j["bound_ok"] = cert.is_packing ? cert.size() >= k
                                    : (long long)cert.size() <= cert.bound;
    emit(c, j);
    DotHighlight hl = certificate_highlight(cert);
    emit_dot(c, g, &hl);
    return 0;
}

int cmd_theorem1(const Common& c, int k, const std::string& catalog_file,
                 int nmax) {
    STGraph g = load_graph(read_text(c.input));
    GadgetCatalog cat =
        catalog_file.empty()
            ? GadgetCatalog::build(g.group(), c.r_max, nmax, c.budget_paths,
                                   c.budget_work)
            : GadgetCatalog::from_json(read_text(catalog_file),
                                       c.budget_paths);
    Theorem1Options opt;
    opt.path_budget = c.budget_paths;
    opt.work_budget = c.budget_work;
    Theorem1Result res = theorem1_procedure(g, k, cat, opt);
    json j = certificate_json(g, res.cert);
    j["k"] = k;
    j["h"] = cat.h();
    json tr = json::array();
    for (const Theorem1Trace& t : res.trace)
        tr.push_back({{"branch", t.branch}, {"k", t.k}, {"n", t.n}});
    j["trace"] = tr;
    emit(c, j);
    DotHighlight hl = certificate_highlight(res.cert);
    emit_dot(c, g, &hl);
    return 0;
}

int cmd_type(const Common& c, int r_flag) {
    STGraph g = load_graph(read_text(c.input));
    int r = iface_size(g, r_flag);
    ProblemUniverse U = ProblemUniverse::build(g.group(), r);
    TypeOptions topt;
    topt.r_max = c.r_max;
    topt.path_budget = c.budget_paths;
    TypeFingerprint fp = compute_type(g, g.interface_tuple(), U, topt);
    emit(c, json::parse(fp.to_json()));
    emit_dot(c, g);
    return 0;
}

int cmd_type_eq(const Common& c, const std::string& file_a,
                const std::string& file_b) {
    STGraph a = load_graph(read_text(file_a));
    STGraph b = load_graph(read_text(file_b));
    TypeOptions topt;
    topt.r_max = c.r_max;
    topt.path_budget = c.budget_paths;
    ProblemUniverse Ua = ProblemUniverse::build(a.group(), iface_size(a, -1));
    ProblemUniverse Ub =
        a.group()->signature() == b.group()->signature() &&
                iface_size(a, -1) == iface_size(b, -1)
            ? Ua
            : ProblemUniverse::build(b.group(), iface_size(b, -1));
    TypeFingerprint fa = compute_type(a, a.interface_tuple(), Ua, topt);
    TypeFingerprint fb = compute_type(b, b.interface_tuple(), Ub, topt);
    json j;
    j["equal"] = fa == fb;
    j["fingerprint_a"] = json::parse(fa.to_json());
    j["fingerprint_b"] = json::parse(fb.to_json());
    emit(c, j);
    return 0;
}

int cmd_gadget_search(const Common& c, int r, int nmax) {
    GroupPtr grp = group_of_input(read_text(c.input));
    GadgetCatalog cat =
        GadgetCatalog::build(grp, r, nmax, c.budget_paths, c.budget_work);
    write_text(c.output, cat.to_json());
    return 0;
}

int cmd_lemma6_audit(const Common& c, int trials,
                     const std::string& catalog_file) {
    GadgetCatalog cat =
        catalog_file.empty()
            ? GadgetCatalog::build(c.input == "-"
                                       ? parse_group_spec(
                                             "{\"kind\":\"cyclic\",\"n\":2}")
                                       : group_of_input(read_text(c.input)),
                                   1, 4, c.budget_paths, c.budget_work)
            : GadgetCatalog::from_json(read_text(catalog_file),
                                       c.budget_paths);
    Lemma6AuditResult r = lemma6_audit(cat, trials, c.seed, c.budget_paths);
    json j;
    j["requested"] = r.requested;
    j["completed"] = r.completed;
    j["passed"] = r.passed;
    j["failed"] = r.failed;
    j["skipped"] = r.skipped;
    j["identity_trials"] = r.identity_trials;
    j["first_failure"] = r.first_failure;
    emit(c, j);
    return r.failed == 0 ? 0 : 1;
}

int cmd_construct_figure1(const Common& c, int n) {
    STGraph g = build_figure1(n);
    write_text(c.output, save_graph(g));
    emit_dot(c, g);
    return 0;
}

int cmd_construct_random(const Common& c, const std::string& group_spec,
                         int nv, double edge_prob, double s_frac,
                         double t_frac) {
    RandomSpec spec;
    spec.group = parse_group_spec(group_spec);
    spec.n_vertices = nv;
    spec.edge_prob = edge_prob;
    spec.s_frac = s_frac;
    spec.t_frac = t_frac;
    spec.seed = c.seed;
    STGraph g = random_instance(spec);
    write_text(c.output, save_graph(g));
    emit_dot(c, g);
    return 0;
}

int cmd_verify_figure1(const Common& c, int n_flag) {
    STGraph g = load_graph(read_text(c.input));
    int n = n_flag;
    if (n < 0) {
        auto guess = figure1_n_for_size(g.n());
        if (!guess)
            throw ValidationError(
                "vertex count matches no figure1 instance; pass --n");
        n = *guess;
    }
    Figure1Report rep = verify_figure1(g, n, c.budget_paths, true);
    json j;
    j["n"] = rep.n;
    j["no_two_disjoint"] = rep.no_two_disjoint;
    j["hitting_at_least_n"] = rep.hitting_at_least_n;
    j["hitting_exact"] = rep.hitting_exact;
    j["packing"] = rep.packing ? json(*rep.packing) : json(nullptr);
    j["top_row_kills"] = rep.top_row_kills;
    j["pass"] = rep.ok();
    emit(c, j);
    emit_dot(c, g);
    return rep.ok() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact packing/hitting duality for non-null S-T paths in "
                 "group-labelled graphs"};
    app.require_subcommand(1);
    Common c;

    auto* solve_cmd = app.add_subcommand("solve",
                                         "Exact packing and hitting values "
                                         "with verified witnesses");
    add_common(solve_cmd, c);

    int q = 2, k = 1;
    auto* unb_cmd =
        app.add_subcommand("unbreakable", "Decide (q,k)-unbreakability");
    add_common(unb_cmd, c);
    unb_cmd->add_option("--q", q, "Block size")->required();
    unb_cmd->add_option("--k", k, "Separator bound")->required();

    auto* prop4_cmd = app.add_subcommand(
        "prop4", "Packing of size k or hitting within 4q+2k-6, for "
                 "(q,k)-unbreakable inputs");
    add_common(prop4_cmd, c);
    prop4_cmd->add_option("--q", q, "Unbreakability block size")->required();
    prop4_cmd->add_option("--k", k, "Target packing size")->required();

    std::string catalog_file;
    int nmax = 4;
    auto* t1_cmd = app.add_subcommand(
        "theorem1", "Run the full recursion: packing of size k or hitting "
                    "within f(k)");
    add_common(t1_cmd, c);
    t1_cmd->add_option("--k", k, "Target packing size")->required();
    t1_cmd->add_option("--catalog", catalog_file,
                       "Gadget catalog JSON (built on the fly if absent)");
    t1_cmd->add_option("--nmax", nmax,
                       "Catalog candidate size cap when building on the fly");

    int r_flag = -1;
    auto* type_cmd = app.add_subcommand(
        "type", "Fingerprint of the graph's type over its interface");
    add_common(type_cmd, c);
    type_cmd->add_option("--r", r_flag,
                         "Cross-check: expected interface size");

    std::string file_a, file_b;
    auto* teq_cmd =
        app.add_subcommand("type-eq", "Compare two graphs' fingerprints");
    add_common(teq_cmd, c);
    teq_cmd->add_option("first", file_a, "First graph file")->required();
    teq_cmd->add_option("second", file_b, "Second graph file")->required();

    int gs_r = 1;
    auto* gs_cmd = app.add_subcommand(
        "gadget-search", "Exhaustively build the (fingerprint -> smallest "
                         "safe graph) catalog");
    add_common(gs_cmd, c);
    gs_cmd->add_option("--r", gs_r, "Interface size")->required();
    gs_cmd->add_option("--nmax", nmax, "Candidate vertex cap")->required();

    int trials = 100;
    auto* audit_cmd = app.add_subcommand(
        "lemma6-audit", "Randomized gadget-replacement audit; fails on any "
                        "packing/hitting divergence");
    add_common(audit_cmd, c);
    audit_cmd->add_option("--trials", trials, "Completed trials required")
        ->required();
    audit_cmd->add_option("--catalog", catalog_file,
                          "Gadget catalog JSON (built on the fly if absent)");

    auto* con_cmd = app.add_subcommand("construct", "Instance generators");
    con_cmd->require_subcommand(1);
    int fig_n = 1;
    auto* fig_cmd =
        con_cmd->add_subcommand("figure1", "The labelled wall family");
    add_common(fig_cmd, c);
    fig_cmd->add_option("--n", fig_n, "Wall parameter (grid is 2n+1 square)")
        ->required();
    std::string group_spec = "{\"kind\":\"cyclic\",\"n\":2}";
    int nv = 6;
    double edge_prob = 0.4, s_frac = 0.3, t_frac = 0.3;
    auto* rnd_cmd = con_cmd->add_subcommand(
        "random", "Seed-deterministic labelled instance");
    add_common(rnd_cmd, c);
    rnd_cmd->add_option("--group", group_spec, "Group spec JSON");
    rnd_cmd->add_option("--nv", nv, "Vertex count");
    rnd_cmd->add_option("--edge-prob", edge_prob, "Edge probability");
    rnd_cmd->add_option("--s-frac", s_frac, "S membership probability");
    rnd_cmd->add_option("--t-frac", t_frac, "T membership probability");

    int vf_n = -1;
    auto* vf_cmd = app.add_subcommand(
        "verify-figure1", "Check the wall properties on a built instance");
    add_common(vf_cmd, c);
    vf_cmd->add_option("--n", vf_n, "Wall parameter (inferred if omitted)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n" << app.help() << std::flush;
        return 1;
    }

    try {
        if (solve_cmd->parsed()) return cmd_solve(c);
        if (unb_cmd->parsed()) return cmd_unbreakable(c, q, k);
        if (prop4_cmd->parsed()) return cmd_prop4(c, q, k);
        if (t1_cmd->parsed()) return cmd_theorem1(c, k, catalog_file, nmax);
        if (type_cmd->parsed()) return cmd_type(c, r_flag);
        if (teq_cmd->parsed()) return cmd_type_eq(c, file_a, file_b);
        if (gs_cmd->parsed()) return cmd_gadget_search(c, gs_r, nmax);
        if (audit_cmd->parsed())
            return cmd_lemma6_audit(c, trials, catalog_file);
        if (con_cmd->parsed()) {
            if (fig_cmd->parsed()) return cmd_construct_figure1(c, fig_n);
            if (rnd_cmd->parsed())
                return cmd_construct_random(c, group_spec, nv, edge_prob,
                                            s_frac, t_frac);
        }
        if (vf_cmd->parsed()) return cmd_verify_figure1(c, vf_n);
        std::cerr << app.help() << std::flush;
        return 1;
    } catch (const BudgetError& e) {
        std::cerr << "budget exhausted: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
