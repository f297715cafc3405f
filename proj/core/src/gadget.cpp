#include "glpath/gadget.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <numeric>
#include <random>
#include <unordered_set>

#include "json.hpp"

#include "glpath/connectivity.hpp"
#include "glpath/duality.hpp"
#include "glpath/errors.hpp"
#include "glpath/graph_io.hpp"

namespace glpath {

bool is_safe(const STGraph& g, const std::vector<int>& iface) {
    Bitset del(g.n());
    for (int v : iface) {
        if (v < 0 || v >= g.n())
            throw ValidationError("is_safe: interface vertex out of range");
        del.set(v);
    }
    return !has_nonnull_path(g, g.S() - del, g.T() - del, &del);
}

uint32_t iface_st_mask(const STGraph& g, const std::vector<int>& iface) {
    if (iface.size() > 15)
        throw ValidationError("interface too wide for the membership mask");
    uint32_t m = 0;
    for (size_t i = 0; i < iface.size(); ++i) {
        if (g.S().test(iface[i])) m |= 1u << (2 * i);
        if (g.T().test(iface[i])) m |= 1u << (2 * i + 1);
    }
    return m;
}

namespace {

/// Candidates on vertices u1..ur, x1..x(n-r) for n = r..n_max: every S/T
/// assignment, every set of labelled edges with at most one copy of a label
/// per vertex pair (a same-label parallel edge never changes a type or
/// safety), visited in size order. A candidate is skipped unless it is the
/// lexicographically least relabelling of its extras (isomorphism dedup
/// with the interface pinned, no seen-set needed) and safe. The visitor
/// returns false to stop. Work counts candidates before the skips.
void for_each_safe_candidate(const GroupPtr& group, int r, int n_max,
                             uint64_t work_budget,
                             const std::function<bool(const STGraph&)>& visit) {
    const int m = group->order();
    if (m > 20) throw ScaleError("gadget enumeration: group too large");
    uint64_t work = 0;
    std::vector<int> iface(r);
    std::iota(iface.begin(), iface.end(), 0);
    for (int n = r; n <= n_max; ++n) {
        std::vector<std::string> names;
        for (int i = 0; i < r; ++i) names.push_back("u" + std::to_string(i + 1));
        for (int i = r; i < n; ++i)
            names.push_back("x" + std::to_string(i - r + 1));
        std::vector<std::pair<int, int>> pairs;
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b) pairs.emplace_back(a, b);
        const int P = (int)pairs.size();
        const uint64_t subsets = uint64_t{1} << m;

        std::vector<std::vector<int>> perms;
        {
            std::vector<int> perm(n - r);
            std::iota(perm.begin(), perm.end(), 0);
            do {
                perms.push_back(perm);
            } while (std::next_permutation(perm.begin(), perm.end()));
        }
        auto newpos = [&](const std::vector<int>& perm, int v) {
            return v < r ? v : r + perm[v - r];
        };
        std::vector<uint64_t> econf(P, 0);
        std::vector<int> st(n, 0);
        auto encode = [&](const std::vector<int>& perm) {
            std::vector<int> code(n);
            for (int v = 0; v < n; ++v) code[newpos(perm, v)] = st[v];
            std::vector<std::array<int, 3>> es;
            for (int p = 0; p < P; ++p) {
                for (int l = 0; l < m; ++l) {
                    if (!((econf[p] >> l) & 1)) continue;
                    int a = newpos(perm, pairs[p].first);
                    int b = newpos(perm, pairs[p].second);
                    if (a < b) es.push_back({a, b, l});
                    else es.push_back({b, a, group->inv(l)});
                }
            }
            std::sort(es.begin(), es.end());
            for (const auto& e : es) {
                code.push_back(e[0]);
                code.push_back(e[1]);
                code.push_back(e[2]);
            }
            return code;
        };
        auto advance = [](std::vector<uint64_t>& digits, uint64_t base) {
            for (size_t i = digits.size(); i-- > 0;) {
                if (++digits[i] < base) return true;
                digits[i] = 0;
            }
            return false;
        };

        std::vector<uint64_t> st64(n, 0);
        bool stop = false;
        do {
            for (int i = 0; i < n; ++i) st[i] = (int)st64[i];
            std::fill(econf.begin(), econf.end(), 0);
            do {
                if (++work > work_budget)
                    throw BudgetError(
                        "gadget enumeration exceeded work budget of " +
                        std::to_string(work_budget) + " candidates");
                bool canonical = true;
                if (perms.size() > 1) {
                    auto base = encode(perms[0]);
                    for (size_t pi = 1; pi < perms.size() && canonical; ++pi)
                        if (encode(perms[pi]) < base) canonical = false;
                }
                if (!canonical) continue;
                GraphData d;
                d.group = group;
                d.vertices = names;
                for (int v = 0; v < n; ++v) {
                    if (st[v] & 1) d.S.push_back(names[v]);
                    if (st[v] & 2) d.T.push_back(names[v]);
                }
                for (int p = 0; p < P; ++p)
                    for (int l = 0; l < m; ++l)
                        if ((econf[p] >> l) & 1)
                            d.edges.push_back({names[pairs[p].first],
                                               names[pairs[p].second],
                                               group->name(l)});
                d.interface_tuple = std::vector<std::string>(
                    names.begin(), names.begin() + r);
                STGraph cand(std::move(d));
                if (!is_safe(cand, iface)) continue;
                if (!visit(cand)) {
                    stop = true;
                    break;
                }
            } while (!stop && P > 0 && advance(econf, subsets));
        } while (!stop && n > 0 && advance(st64, 4));
        if (stop) return;
    }
}

} // namespace

void GadgetCatalog::add_entry(CatalogEntry e) {
    index_[{e.fp.hash(), e.st_mask}].push_back(entries_.size());
    entries_.push_back(std::move(e));
}

int GadgetCatalog::h() const {
    int best = 0;
    for (const auto& e : entries_) best = std::max(best, e.graph.n());
    return best;
}

const STGraph* GadgetCatalog::find(const TypeFingerprint& fp,
                                   uint32_t st_mask) const {
    auto it = index_.find({fp.hash(), st_mask});
    if (it == index_.end()) return nullptr;
    for (size_t i : it->second)
        if (entries_[i].fp == fp) return &entries_[i].graph;
    return nullptr;
}

GadgetCatalog GadgetCatalog::build(GroupPtr group, int r, int n_max,
                                   uint64_t path_budget,
                                   uint64_t work_budget) {
    if (!group) throw ValidationError("catalog: group required");
    if (r < 0) throw ValidationError("catalog: negative interface size");
    if (n_max < r)
        throw ValidationError("catalog: n_max below the interface size");
    GadgetCatalog cat;
    cat.group_ = group;
    cat.r_ = r;
    cat.n_max_ = n_max;
    cat.universe_ = ProblemUniverse::build(group, r);
    TypeOptions topt;
    topt.r_max = r;
    topt.path_budget = path_budget;
    std::vector<int> iface(r);
    std::iota(iface.begin(), iface.end(), 0);
    for_each_safe_candidate(
        group, r, n_max, work_budget, [&](const STGraph& cand) {
            TypeFingerprint fp = compute_type(cand, iface, cat.universe_, topt);
            uint32_t mask = iface_st_mask(cand, iface);
            if (!cat.find(fp, mask))
                cat.add_entry({std::move(fp), mask, cand});
            return true;
        });
    return cat;
}

std::string GadgetCatalog::to_json() const {
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& e : entries_) {
        entries.push_back({
            {"fingerprint", nlohmann::json::parse(e.fp.to_json())},
            {"st_mask", e.st_mask},
            {"graph", nlohmann::json::parse(save_graph(e.graph))},
        });
    }
    nlohmann::json j{
        {"entries", std::move(entries)},
        {"group", nlohmann::json::parse(group_->spec_json())},
        {"h", h()},
        {"n_max", n_max_},
        {"r", r_},
        {"universe_id", universe_.universe_id},
    };
    return j.dump(2) + "\n";
}

GadgetCatalog GadgetCatalog::from_json(const std::string& text,
                                       uint64_t path_budget) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError(std::string("catalog: bad JSON: ") + e.what());
    }
    GadgetCatalog cat;
    try {
        cat.group_ = parse_group_spec(j.at("group").dump());
        cat.r_ = j.at("r").get<int>();
        cat.n_max_ = j.at("n_max").get<int>();
        if (cat.r_ < 0 || cat.n_max_ < cat.r_)
            throw ValidationError("catalog: bad r / n_max");
        cat.universe_ = ProblemUniverse::build(cat.group_, cat.r_);
        if (j.at("universe_id").get<std::string>() !=
            cat.universe_.universe_id)
            throw ValidationError(
                "catalog: universe_id does not match its group and r");
        TypeOptions topt;
        topt.r_max = cat.r_;
        topt.path_budget = path_budget;
        for (const auto& ej : j.at("entries")) {
            STGraph gr = load_graph(ej.at("graph").dump());
            if (gr.group()->signature() != cat.group_->signature())
                throw ValidationError("catalog: entry group differs");
            if (!gr.has_interface() ||
                (int)gr.interface_tuple().size() != cat.r_)
                throw ValidationError("catalog: entry interface arity wrong");
            const std::vector<int>& iface = gr.interface_tuple();
            if (!is_safe(gr, iface))
                throw ValidationError("catalog: entry graph is not safe");
            TypeFingerprint fp = compute_type(gr, iface, cat.universe_, topt);
            if (nlohmann::json::parse(fp.to_json()) != ej.at("fingerprint"))
                throw ValidationError(
                    "catalog: entry fingerprint fails revalidation");
            uint32_t mask = iface_st_mask(gr, iface);
            if (mask != ej.at("st_mask").get<uint32_t>())
                throw ValidationError(
                    "catalog: entry st_mask fails revalidation");
            if (cat.find(fp, mask))
                throw ValidationError("catalog: duplicate entry key");
            cat.add_entry({std::move(fp), mask, std::move(gr)});
        }
        if (j.at("h").get<int>() != cat.h())
            throw ValidationError("catalog: stored h disagrees with entries");
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError(std::string("catalog: bad JSON: ") + e.what());
    }
    return cat;
}

std::optional<STGraph> find_gadget(const STGraph& g,
                                   const std::vector<int>& iface, int n_max,
                                   uint64_t path_budget,
                                   uint64_t work_budget) {
    const int r = (int)iface.size();
    if (!is_safe(g, iface))
        throw ValidationError("find_gadget: the input graph is not safe");
    if (n_max < r)
        throw ValidationError("find_gadget: n_max below the interface size");
    ProblemUniverse U = ProblemUniverse::build(g.group(), r);
    TypeOptions topt;
    topt.r_max = r;
    topt.path_budget = path_budget;
    TypeFingerprint want = compute_type(g, iface, U, topt);
    uint32_t want_mask = iface_st_mask(g, iface);
    std::vector<int> ciface(r);
    std::iota(ciface.begin(), ciface.end(), 0);
    std::optional<STGraph> out;
    for_each_safe_candidate(
        g.group(), r, n_max, work_budget, [&](const STGraph& cand) {
            if (iface_st_mask(cand, ciface) != want_mask) return true;
            if (!(compute_type(cand, ciface, U, topt) == want)) return true;
            out = cand;
            return false;
        });
    return out;
}

namespace {

struct SpliceParts {
    STGraph graph;
    std::vector<int> iface_ids; // in the spliced graph, separator order
    Bitset extras;              // gadget-side non-interface vertices
};

SpliceParts splice_ex(const STGraph& g, const Separation& sep,
                      const STGraph& gadget) {
    if (!is_separation(g, sep))
        throw ValidationError("splice: (A, B) is not a separation");
    Bitset sepset = sep.A & sep.B;
    std::vector<int> ids = sepset.to_vector();
    const int r = (int)ids.size();
    if (r > 0 && !gadget.has_interface())
        throw ValidationError("splice: gadget carries no interface");
    std::vector<int> gif =
        gadget.has_interface() ? gadget.interface_tuple() : std::vector<int>{};
    if ((int)gif.size() != r)
        throw ValidationError("splice: interface arity mismatch");
    if (g.group()->signature() != gadget.group()->signature())
        throw ValidationError("splice: group mismatch");
    for (int i = 0; i < r; ++i)
        if (g.S().test(ids[i]) != gadget.S().test(gif[i]) ||
            g.T().test(ids[i]) != gadget.T().test(gif[i]))
            throw ValidationError(
                "splice: interface S/T membership differs at position " +
                std::to_string(i));
    // edges with both ends on the interface live on the A side of the glue,
    // so the gadget must carry exactly the same multiset (positionally)
    auto inner = [](const STGraph& h, const std::vector<int>& tuple) {
        std::vector<int> pos(h.n(), -1);
        for (size_t i = 0; i < tuple.size(); ++i) pos[tuple[i]] = (int)i;
        std::vector<std::array<int, 3>> out;
        for (const Edge& e : h.edges()) {
            int pu = pos[e.u], pv = pos[e.v];
            if (pu < 0 || pv < 0) continue;
            if (pu < pv) out.push_back({pu, pv, e.label});
            else out.push_back({pv, pu, h.group()->inv(e.label)});
        }
        std::sort(out.begin(), out.end());
        return out;
    };
    if (inner(g, ids) != inner(gadget, gif))
        throw ValidationError("splice: interface-internal edges differ");

    Bitset gifset(std::max(gadget.n(), 1));
    std::vector<int> gpos(gadget.n(), -1);
    for (int i = 0; i < r; ++i) {
        gifset.set(gif[i]);
        gpos[gif[i]] = i;
    }
    GraphData d;
    d.group = g.group();
    std::unordered_set<std::string> used;
    std::vector<int> avx = sep.A.to_vector();
    for (int v : avx) {
        d.vertices.push_back(g.name(v));
        used.insert(g.name(v));
    }
    std::vector<std::string> fresh(gadget.n());
    for (int w = 0; w < gadget.n(); ++w) {
        if (gifset.test(w)) continue;
        std::string nm = gadget.name(w);
        int suffix = 0;
        while (used.count(nm))
            nm = gadget.name(w) + "$" + std::to_string(++suffix);
        fresh[w] = nm;
        if (!used.insert(nm).second)
            throw Error("splice: freshened name collided");
        d.vertices.push_back(nm);
    }
    auto gname = [&](int w) {
        return gpos[w] >= 0 ? g.name(ids[gpos[w]]) : fresh[w];
    };
    for (int v : avx) {
        if (g.S().test(v)) d.S.push_back(g.name(v));
        if (g.T().test(v)) d.T.push_back(g.name(v));
    }
    for (int w = 0; w < gadget.n(); ++w) {
        if (gifset.test(w)) continue;
        if (gadget.S().test(w)) d.S.push_back(fresh[w]);
        if (gadget.T().test(w)) d.T.push_back(fresh[w]);
    }
    for (const Edge& e : g.edges())
        if (sep.A.test(e.u) && sep.A.test(e.v))
            d.edges.push_back(
                {g.name(e.u), g.name(e.v), g.group()->name(e.label)});
    for (const Edge& e : gadget.edges())
        if (!(gifset.test(e.u) && gifset.test(e.v)))
            d.edges.push_back(
                {gname(e.u), gname(e.v), gadget.group()->name(e.label)});
    std::vector<std::string> if_names;
    for (int v : ids) if_names.push_back(g.name(v));
    d.interface_tuple = if_names;

    SpliceParts parts{STGraph(std::move(d)), {}, Bitset()};
    for (const std::string& nm : if_names)
        parts.iface_ids.push_back(parts.graph.vertex(nm));
    parts.extras = Bitset(parts.graph.n());
    for (int w = 0; w < gadget.n(); ++w)
        if (!gifset.test(w)) parts.extras.set(parts.graph.vertex(fresh[w]));
    return parts;
}

} // namespace

STGraph splice(const STGraph& g, const Separation& sep,
               const STGraph& gadget) {
    return splice_ex(g, sep, gadget).graph;
}

Lemma6Verdict verify_lemma6(const STGraph& g, const Separation& sep,
                            const STGraph& gadget, uint64_t path_budget) {
    if (!is_separation(g, sep))
        throw ValidationError("lemma6: (A, B) is not a separation");
    Bitset sepset = sep.A & sep.B;
    std::vector<int> ids = sepset.to_vector();
    const int r = (int)ids.size();
    {
        STGraph off = induced_subgraph(g, sep.B - sep.A);
        if (has_nonnull_path(off, off.S(), off.T()))
            throw ValidationError(
                "lemma6: side B has a non-null S-T path off the interface");
    }
    std::vector<int> gif =
        gadget.has_interface() ? gadget.interface_tuple() : std::vector<int>{};
    if ((int)gif.size() != r)
        throw ValidationError("lemma6: gadget interface arity mismatch");
    if (!is_safe(gadget, gif))
        throw ValidationError("lemma6: gadget is not safe");
    ProblemUniverse U = ProblemUniverse::build(g.group(), r);
    TypeOptions topt;
    topt.r_max = r;
    topt.path_budget = path_budget;
    STGraph GB = induced_subgraph(g.with_interface(ids), sep.B);
    TypeFingerprint fb = compute_type(GB, GB.interface_tuple(), U, topt);
    TypeFingerprint fg = compute_type(gadget, gif, U, topt);
    if (!(fb == fg))
        throw ValidationError("lemma6: side and gadget types differ");

    STGraph spliced = splice(g, sep, gadget);
    SolveResult a = solve(g, path_budget);
    SolveResult b = solve(spliced, path_budget);
    Lemma6Verdict v;
    v.packing_g = a.packing.value;
    v.packing_spliced = b.packing.value;
    v.hitting_g = a.hitting.value;
    v.hitting_spliced = b.hitting.value;
    v.ok = v.packing_g == v.packing_spliced && v.hitting_g == v.hitting_spliced;
    if (!v.ok)
        v.detail =
            "packing/hitting diverged between the instances\noriginal:\n" +
            save_graph(g) + "spliced:\n" + save_graph(spliced);
    return v;
}

Lemma6AuditResult lemma6_audit(const GadgetCatalog& catalog, int trials,
                               uint64_t seed, uint64_t path_budget) {
    if (catalog.r() != 1)
        throw ValidationError(
            "lemma6_audit: the generative harness needs an r = 1 catalog");
    if (catalog.n_max() < 4)
        throw ValidationError("lemma6_audit: catalog n_max must be >= 4");
    const GroupPtr& grp = catalog.group();
    const int m = grp->order();
    std::mt19937_64 rng(seed);
    auto coin = [&](double p) { return (double)(rng() >> 11) * 0x1.0p-53 < p; };
    Lemma6AuditResult res;
    res.requested = trials;
    TypeOptions topt;
    topt.r_max = 1;
    topt.path_budget = path_budget;
    const int max_attempts = trials * 50 + 200;
    for (int attempts = 0; res.completed < trials && attempts < max_attempts;
         ++attempts) {
        // draw order: nA, nB, cut, A edges (coin then label per pair),
        // gadget-side edges likewise, then S and T coins per vertex
        int nA = 2 + (int)(rng() % 5);
        int nB = 1 + (int)(rng() % 3);
        int cut = (int)(rng() % nA);
        GraphData d;
        d.group = grp;
        for (int i = 0; i < nA; ++i)
            d.vertices.push_back("a" + std::to_string(i));
        for (int i = 0; i < nB; ++i)
            d.vertices.push_back("b" + std::to_string(i));
        for (int i = 0; i < nA; ++i)
            for (int j = i + 1; j < nA; ++j)
                if (coin(0.5))
                    d.edges.push_back({d.vertices[i], d.vertices[j],
                                       grp->name((int)(rng() % m))});
        std::vector<int> bside{cut};
        for (int i = 0; i < nB; ++i) bside.push_back(nA + i);
        for (size_t i = 0; i < bside.size(); ++i)
            for (size_t j = i + 1; j < bside.size(); ++j)
                if (coin(0.5))
                    d.edges.push_back({d.vertices[bside[i]],
                                       d.vertices[bside[j]],
                                       grp->name((int)(rng() % m))});
        for (int i = 0; i < nA + nB; ++i) {
            if (coin(0.35)) d.S.push_back(d.vertices[i]);
            if (coin(0.35)) d.T.push_back(d.vertices[i]);
        }
        STGraph g(std::move(d));
        Bitset A(g.n()), B(g.n());
        for (int i = 0; i < nA; ++i) A.set(i);
        B.set(cut);
        for (int i = 0; i < nB; ++i) B.set(nA + i);
        Separation sep{A, B};
        {
            STGraph off = induced_subgraph(g, B - A);
            if (has_nonnull_path(off, off.S(), off.T())) {
                ++res.skipped;
                continue;
            }
        }
        STGraph GB = induced_subgraph(g.with_interface({cut}), B);
        bool identity = (res.completed % 5) == 4;
        Lemma6Verdict v;
        if (identity) {
            ++res.identity_trials;
            v = verify_lemma6(g, sep, GB, path_budget);
        } else {
            TypeFingerprint fp =
                compute_type(GB, GB.interface_tuple(), catalog.universe(),
                             topt);
            uint32_t mask = iface_st_mask(GB, GB.interface_tuple());
            const STGraph* found = catalog.find(fp, mask);
            if (!found)
                throw Error("lemma6_audit: catalog lacks a key realized by a " +
                            std::to_string(GB.n()) + "-vertex side (bug)");
            v = verify_lemma6(g, sep, *found, path_budget);
        }
        ++res.completed;
        if (v.ok) {
            ++res.passed;
        } else {
            ++res.failed;
            if (res.first_failure.empty()) res.first_failure = v.detail;
        }
    }
    if (res.completed < trials)
        throw Error("lemma6_audit: sampling failed to produce enough safe "
                    "sides; loosen the trial parameters");
    return res;
}

FTable f_recurrence(const std::vector<long long>& h_table, int k_max) {
    if (k_max < 0) throw ValidationError("f_recurrence: negative k_max");
    if ((int)h_table.size() < k_max + 1)
        throw ValidationError("f_recurrence: h table must cover 0..k_max");
    FTable t;
    t.h.assign(h_table.begin(), h_table.begin() + k_max + 1);
    t.f.assign(k_max + 1, 0);
    for (int k = 1; k <= k_max; ++k) {
        if (t.h[k] < 0) throw ValidationError("f_recurrence: negative h");
        t.f[k] = std::max(4 * t.h[k] + 2 * k - 2, k - 1 + 2 * t.f[k - 1]);
    }
    return t;
}

namespace {

/// Rebuild a path in another graph by vertex names, re-resolving each arc to
/// the first edge with the same endpoints and oriented label. A simple path
/// never needs two parallel copies, so first-match is safe.
GPath transfer_path(const STGraph& src, const STGraph& dst, const GPath& p) {
    GPath out;
    out.verts.reserve(p.verts.size());
    for (int v : p.verts) {
        const std::string& nm = src.name(v);
        if (!dst.has_vertex(nm))
            throw Error("certificate lift: vertex " + nm +
                        " is missing from the target graph");
        out.verts.push_back(dst.vertex(nm));
    }
    for (size_t i = 0; i < p.arcs.size(); ++i) {
        int tail = out.verts[i], head = out.verts[i + 1];
        int lbl = src.arc_label(p.arcs[i]);
        bool found = false;
        for (const auto& a : dst.adjacent(tail)) {
            if (a.nbr != head) continue;
            Arc arc{a.edge, dst.edge(a.edge).u == tail};
            if (dst.arc_label(arc) == lbl) {
                out.arcs.push_back(arc);
                found = true;
                break;
            }
        }
        if (!found)
            throw Error("certificate lift: no edge matches " +
                        src.name(p.verts[i]) + " -> " +
                        src.name(p.verts[i + 1]));
    }
    out.value = path_value(dst, out.arcs);
    validate_path(dst, out);
    return out;
}

std::vector<int> transfer_vertices(const STGraph& src, const STGraph& dst,
                                   const std::vector<int>& vs) {
    std::vector<int> out;
    for (int v : vs) {
        const std::string& nm = src.name(v);
        if (!dst.has_vertex(nm))
            throw Error("certificate lift: vertex " + nm +
                        " is missing from the target graph");
        out.push_back(dst.vertex(nm));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

struct ReplaceCtx {
    const STGraph& g;  // graph being certified
    const STGraph& gb; // its safe side with interface (G[B])
    const ProblemUniverse& U;
    const SpliceParts& spl;
    uint64_t path_budget;
};

/// Packing lift through a gadget replacement: cut each path into maximal
/// runs of gadget-side arcs (an arc is gadget-side iff an endpoint is a
/// gadget extra), turn every gadget run into a path constraint (exact via
/// set, junction endpoints pinned to their interface positions), solve the
/// one path-system problem this defines in G[B], and splice the solutions
/// back between the untouched runs. Type equality makes the problem
/// solvable; via-exactness pins every junction, so congestion and
/// simplicity carry over. At most 2r pieces exist in total because each
/// consumes interface congestion.
std::vector<GPath> lift_packing(const ReplaceCtx& cx,
                                const std::vector<GPath>& paths) {
    const STGraph& gp = cx.spl.graph;
    const int r = (int)cx.spl.iface_ids.size();
    std::vector<int> pos(gp.n(), -1);
    for (int i = 0; i < r; ++i) pos[cx.spl.iface_ids[i]] = i;

    struct Segment {
        bool gadget;
        GPath a_sub; // in g coordinates when !gadget
        int slot = -1;
    };
    std::vector<std::vector<Segment>> plans(paths.size());
    std::vector<int> cons;
    std::vector<std::pair<int, int>> same_path;
    for (size_t pi = 0; pi < paths.size(); ++pi) {
        GPath p = paths[pi];
        if (!(gp.S().test(p.first()) && gp.T().test(p.last())))
            p = reverse_path(gp, p);
        if (!(gp.S().test(p.first()) && gp.T().test(p.last())))
            throw Error("certificate lift: path is not S-T in either "
                        "orientation");
        const int len = p.length();
        if (len == 0)
            throw Error("certificate lift: zero-arc path in a packing");
        std::vector<char> side(len);
        for (int i = 0; i < len; ++i)
            side[i] = cx.spl.extras.test(p.verts[i]) ||
                      cx.spl.extras.test(p.verts[i + 1]);
        std::vector<int> slots_here;
        int i = 0;
        while (i < len) {
            int j = i;
            while (j < len && side[j] == side[i]) ++j;
            GPath sub = subpath(gp, p, i, j);
            if (!side[i]) {
                plans[pi].push_back({false, transfer_path(gp, cx.g, sub), -1});
            } else {
                uint32_t via = 0;
                for (int v : sub.verts)
                    if (pos[v] >= 0) via |= 1u << pos[v];
                if (!via)
                    throw Error("certificate lift: a gadget piece avoids the "
                                "interface");
                int ea, eb;
                if (pos[sub.first()] >= 0) ea = pos[sub.first()];
                else if (i == 0 && gp.S().test(sub.first())) ea = r;
                else
                    throw Error("certificate lift: gadget piece starts off "
                                "the interface mid-path");
                if (pos[sub.last()] >= 0) eb = pos[sub.last()];
                else if (j == len && gp.T().test(sub.last())) eb = r + 1;
                else
                    throw Error("certificate lift: gadget piece ends off "
                                "the interface mid-path");
                int ci = cx.U.constraint_index({sub.value, ea, eb, via});
                if (ci < 0)
                    throw Error("certificate lift: piece constraint missing "
                                "from the universe");
                int slot = (int)cons.size();
                cons.push_back(ci);
                for (int s : slots_here) same_path.emplace_back(s, slot);
                slots_here.push_back(slot);
                plans[pi].push_back({true, {}, slot});
            }
            i = j;
        }
    }
    if ((int)cons.size() > 2 * r)
        throw Error("certificate lift: more than 2r gadget pieces");
    std::vector<GPath> solved;
    if (!cons.empty()) {
        PathSystemProblem prob{cons, 0};
        const int kk = (int)cons.size();
        for (auto [a, b] : same_path)
            prob.disjoint_mask |= 1u << pair_bit(a, b, kk);
        auto sol = solve_path_system(cx.gb, cx.gb.interface_tuple(), cx.U,
                                     prob, cx.path_budget);
        if (!sol)
            throw Error("certificate lift: piece problem unsolvable; type "
                        "equality is broken");
        for (GPath& q : *sol) solved.push_back(transfer_path(cx.gb, cx.g, q));
    }
    std::vector<GPath> out;
    for (size_t pi = 0; pi < paths.size(); ++pi) {
        std::optional<GPath> acc;
        for (const Segment& s : plans[pi]) {
            const GPath& piece = s.gadget ? solved[s.slot] : s.a_sub;
            acc = acc ? concat_paths(cx.g, *acc, piece) : piece;
        }
        out.push_back(*acc);
    }
    return out;
}

/// Hitting lift: the gadget part of X' becomes a hitting-set problem (level
/// = its size, problems = everything unsolvable in the gadget minus that
/// part) which type equality lets us re-solve inside G[B]. If the gadget
/// part is larger than r, the whole interface replaces it first: still a
/// hitting set, and strictly smaller.
std::vector<int> lift_hitting(const ReplaceCtx& cx, const std::vector<int>& xp) {
    const STGraph& gp = cx.spl.graph;
    const int r = (int)cx.spl.iface_ids.size();
    std::vector<int> xa, xg;
    for (int v : xp) (cx.spl.extras.test(v) ? xg : xa).push_back(v);
    if ((int)xg.size() > r) {
        xg.clear();
        for (int u : cx.spl.iface_ids) xa.push_back(u);
        std::sort(xa.begin(), xa.end());
        xa.erase(std::unique(xa.begin(), xa.end()), xa.end());
    }
    Bitset bhat = cx.spl.extras;
    for (int u : cx.spl.iface_ids) bhat.set(u);
    STGraph ghat =
        induced_subgraph(gp.with_interface(cx.spl.iface_ids), bhat);
    Bitset del(ghat.n());
    for (int v : xg) del.set(ghat.vertex(gp.name(v)));
    SolvabilitySweep sweep(ghat, ghat.interface_tuple(), cx.U, &del, false,
                           cx.path_budget);
    Bitset solv = sweep.solvable();
    HittingSetProblem hp;
    hp.ell = (int)xg.size();
    for (size_t i = 0; i < cx.U.problems.size(); ++i)
        if (!solv.test((int)i)) hp.problems.push_back((int)i);
    auto xb = solve_hitting_problem(cx.gb, cx.gb.interface_tuple(), cx.U, hp,
                                    cx.path_budget);
    if (!xb)
        throw Error("certificate lift: hitting problem unsolvable; type "
                    "equality is broken");
    std::vector<int> out = transfer_vertices(gp, cx.g, xa);
    for (int v : *xb) out.push_back(cx.g.vertex(cx.gb.name(v)));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

struct T1Ctx {
    const GadgetCatalog& cat;
    const Theorem1Options& opt;
    FTable ft;
    std::vector<Theorem1Trace>* trace = nullptr;
};

DualityCertificate theorem1_rec(const STGraph& g, int k, T1Ctx& cx,
                                long long pk, long long pn) {
    if (std::pair<long long, long long>(k, g.n()) >=
        std::pair<long long, long long>(pk, pn))
        throw Error("theorem1: recursion failed to descend on (k, |V|)");
    auto trace_push = [&](const char* b) {
        cx.trace->push_back({k, g.n(), b});
    };
    const long long fk = cx.ft.f[std::max(k, 0)];
    if (k <= 0) {
        trace_push("k0");
        return {true, {}, {}, fk};
    }
    if (k == 1) {
        trace_push("k1");
        auto p = find_nonnull_path(g, g.S(), g.T());
        if (p) {
            std::vector<GPath> fam{*p};
            verify_packing(g, fam, g.S(), g.T(), 2);
            return {true, fam, {}, fk};
        }
        verify_hitting(g, std::vector<int>{}, g.S(), g.T());
        return {false, {}, {}, fk};
    }
    const int q = (int)cx.ft.h[k] + 1;
    auto unb = unbreakability(g, q, k, cx.opt.work_budget);
    if (unb.unbreakable) {
        trace_push("unbreakable");
        DualityCertificate cert = proposition4(g, q, k, cx.opt.path_budget);
        cert.bound = fk;
        if (!cert.is_packing && (long long)cert.hitting.size() > fk)
            throw Error("theorem1: unbreakable-case hitting exceeds f(k)");
        return cert;
    }
    const Separation& w = *unb.witness;
    STGraph ga = induced_subgraph(g, w.A - w.B);
    STGraph gb_off = induced_subgraph(g, w.B - w.A);
    auto pa = find_nonnull_path(ga, ga.S(), ga.T());
    auto pb = find_nonnull_path(gb_off, gb_off.S(), gb_off.T());
    if (pa && pb) {
        trace_push("both-sides");
        const int kb = cx.opt.sharp_sides ? k - 2 : k - 1;
        auto combine = [&](const STGraph& side, const std::vector<GPath>& pack,
                           const STGraph& other, const GPath& opath) {
            std::vector<GPath> fam;
            for (const GPath& p : pack) fam.push_back(transfer_path(side, g, p));
            GPath op = transfer_path(other, g, opath);
            while ((int)fam.size() < k) fam.push_back(op);
            verify_packing(g, fam, g.S(), g.T(), 2);
            return DualityCertificate{true, fam, {}, fk};
        };
        DualityCertificate ca = theorem1_rec(ga, kb, cx, k, g.n());
        if (ca.is_packing) return combine(ga, ca.paths, gb_off, *pb);
        DualityCertificate cb = theorem1_rec(gb_off, kb, cx, k, g.n());
        if (cb.is_packing) return combine(gb_off, cb.paths, ga, *pa);
        std::vector<int> X = (w.A & w.B).to_vector();
        for (int v : ca.hitting) X.push_back(g.vertex(ga.name(v)));
        for (int v : cb.hitting) X.push_back(g.vertex(gb_off.name(v)));
        std::sort(X.begin(), X.end());
        X.erase(std::unique(X.begin(), X.end()), X.end());
        if ((long long)X.size() > fk)
            throw Error("theorem1: combined hitting set exceeds f(k)");
        verify_hitting(g, X, g.S(), g.T());
        return {false, {}, X, fk};
    }
    // a side without internal non-null S-T paths: replace it (or drop it
    // when the separator is empty)
    const bool b_is_safe = !pb;
    Bitset sa = b_is_safe ? w.A : w.B;
    Bitset sb = b_is_safe ? w.B : w.A;
    Bitset sepset = w.A & w.B;
    const int rsep = sepset.count();
    if (rsep == 0) {
        trace_push("drop-side");
        STGraph g2 = induced_subgraph(g, sa);
        if (g2.n() >= g.n())
            throw Error("theorem1: drop-side did not shrink the graph");
        DualityCertificate c2 = theorem1_rec(g2, k, cx, k, g.n());
        if (c2.is_packing) {
            std::vector<GPath> fam;
            for (const GPath& p : c2.paths)
                fam.push_back(transfer_path(g2, g, p));
            verify_packing(g, fam, g.S(), g.T(), 2);
            return {true, fam, {}, fk};
        }
        std::vector<int> X = transfer_vertices(g2, g, c2.hitting);
        verify_hitting(g, X, g.S(), g.T());
        return {false, {}, X, fk};
    }
    if (rsep != cx.cat.r())
        throw ScaleError("theorem1: separation order " + std::to_string(rsep) +
                         " needs a catalog for r = " + std::to_string(rsep) +
                         ", have r = " + std::to_string(cx.cat.r()));
    if (g.group()->signature() != cx.cat.group()->signature())
        throw ValidationError("theorem1: catalog group mismatch");
    std::vector<int> ids = sepset.to_vector();
    STGraph gb = induced_subgraph(g.with_interface(ids), sb);
    TypeOptions topt;
    topt.r_max = rsep;
    topt.path_budget = cx.opt.path_budget;
    TypeFingerprint fp =
        compute_type(gb, gb.interface_tuple(), cx.cat.universe(), topt);
    uint32_t mask = iface_st_mask(gb, gb.interface_tuple());
    const STGraph* gad = cx.cat.find(fp, mask);
    if (!gad) {
        if (gb.n() <= cx.cat.n_max())
            throw Error("theorem1: catalog lacks a key its own enumeration "
                        "realizes (bug)");
        throw ScaleError(
            "theorem1: catalog coverage gap: no gadget within n_max " +
            std::to_string(cx.cat.n_max()) + " matches a safe side of size " +
            std::to_string(gb.n()));
    }
    if (gad->n() >= gb.n())
        throw Error("theorem1: replacement gadget does not shrink the graph");
    trace_push("replace-side");
    SpliceParts spl = splice_ex(g, Separation{sa, sb}, *gad);
    if (spl.graph.n() >= g.n())
        throw Error("theorem1: splice did not shrink the graph");
    DualityCertificate c2 = theorem1_rec(spl.graph, k, cx, k, g.n());
    ReplaceCtx rcx{g, gb, cx.cat.universe(), spl, cx.opt.path_budget};
    if (c2.is_packing) {
        std::vector<GPath> fam = lift_packing(rcx, c2.paths);
        verify_packing(g, fam, g.S(), g.T(), 2);
        return {true, fam, {}, fk};
    }
    std::vector<int> X = lift_hitting(rcx, c2.hitting);
    if ((long long)X.size() > fk)
        throw Error("theorem1: lifted hitting set exceeds f(k)");
    verify_hitting(g, X, g.S(), g.T());
    return {false, {}, X, fk};
}

} // namespace

Theorem1Result theorem1_procedure(const STGraph& g, int k,
                                  const GadgetCatalog& catalog,
                                  const Theorem1Options& opt) {
    if (k > 1000)
        throw ScaleError("theorem1: k out of any practical range");
    const int kk = std::max(k, 0);
    T1Ctx cx{catalog, opt, {}, nullptr};
    cx.ft = f_recurrence(
        std::vector<long long>((size_t)kk + 1, (long long)catalog.h()), kk);
    Theorem1Result res;
    cx.trace = &res.trace;
    res.cert = theorem1_rec(g, k, cx, std::numeric_limits<long long>::max(),
                            std::numeric_limits<long long>::max());
    return res;
}

} // namespace glpath
