#include "glpath/types.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "json.hpp"

#include "glpath/errors.hpp"

namespace glpath {

namespace {

uint64_t fnv64(const std::string& s) {
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string hex64(uint64_t v) {
    static const char* d = "0123456789abcdef";
    std::string s(16, '0');
    for (int i = 15; i >= 0; --i, v >>= 4) s[i] = d[v & 15];
    return s;
}

int lookup_slot(int r, const PathConstraint& c) {
    return ((c.value * (r + 2) + c.end_a) * (r + 2) + c.end_b) * (1 << r) +
           (int)c.via;
}

bool constraint_valid(int r, const PathConstraint& c) {
    if (c.via == 0 || c.via >= (1u << r)) return false;
    if (c.end_a < 0 || c.end_a > r + 1 || c.end_b < 0 || c.end_b > r + 1)
        return false;
    if (c.end_a < r && !((c.via >> c.end_a) & 1)) return false;
    if (c.end_b < r && !((c.via >> c.end_b) & 1)) return false;
    return true;
}

ProblemUniverse finish_universe(GroupPtr group, int r,
                                std::vector<PathConstraint> cs,
                                uint64_t problem_cap, bool restricted) {
    ProblemUniverse U;
    U.group = std::move(group);
    U.r = r;
    U.constraints = std::move(cs);

    const unsigned long long C = U.constraints.size();
    unsigned __int128 total = 0, pow = 1;
    for (int k = 0; k <= 2 * r; ++k) {
        if (k > 0) pow *= C;
        total += pow << (k * (k - 1) / 2);
        if (total > problem_cap)
            throw ScaleError("problem universe exceeds cap of " +
                             std::to_string(problem_cap) + " problems");
    }
    U.problems.reserve((size_t)total);
    for (int k = 0; k <= 2 * r; ++k) {
        if (k > 0 && C == 0) break;
        if (k * (k - 1) / 2 > 31)
            throw ScaleError("disjointness patterns exceed the 32-bit mask");
        std::vector<int> tuple(k, 0);
        const uint32_t masks = 1u << (k * (k - 1) / 2);
        while (true) {
            for (uint32_t m = 0; m < masks; ++m)
                U.problems.push_back({tuple, m});
            int pos = k - 1;
            while (pos >= 0 && tuple[pos] == (int)C - 1) tuple[pos--] = 0;
            if (pos < 0) break;
            ++tuple[pos];
        }
    }

    U.lookup.assign((size_t)U.group->order() * (r + 2) * (r + 2) * (1 << r),
                    -1);
    for (size_t i = 0; i < U.constraints.size(); ++i)
        U.lookup[lookup_slot(r, U.constraints[i])] = (int)i;

    std::string base = U.group->signature() + ";r=" + std::to_string(r) +
                       ";conv=zero-arc-excluded,exact-via,"
                       "any-st-includes-interface";
    if (restricted) {
        std::string b;
        for (const auto& c : U.constraints)
            b += std::to_string(c.value) + "," + std::to_string(c.end_a) +
                 "," + std::to_string(c.end_b) + "," + std::to_string(c.via) +
                 ";";
        base += ";basis=" + hex64(fnv64(b));
    }
    U.universe_id = hex64(fnv64(base));
    return U;
}

} // namespace

int ProblemUniverse::constraint_index(const PathConstraint& c) const {
    if (c.value < 0 || c.value >= group->order()) return -1;
    if (!constraint_valid(r, c)) return -1;
    return lookup[lookup_slot(r, c)];
}

ProblemUniverse ProblemUniverse::build(GroupPtr group, int r,
                                       uint64_t problem_cap) {
    if (!group) throw ValidationError("universe: group required");
    if (r < 0 || r > 8) throw ValidationError("universe: r out of range [0,8]");
    std::vector<PathConstraint> cs;
    for (int v = 0; v < group->order(); ++v)
        for (int ea = 0; ea <= r + 1; ++ea)
            for (int eb = 0; eb <= r + 1; ++eb)
                for (uint32_t via = 1; via < (1u << r); ++via) {
                    PathConstraint c{v, ea, eb, via};
                    if (constraint_valid(r, c)) cs.push_back(c);
                }
    return finish_universe(std::move(group), r, std::move(cs), problem_cap,
                           false);
}

ProblemUniverse ProblemUniverse::build_restricted(
    GroupPtr group, int r, std::vector<PathConstraint> basis,
    uint64_t problem_cap) {
    if (!group) throw ValidationError("universe: group required");
    if (r < 0 || r > 8) throw ValidationError("universe: r out of range [0,8]");
    for (size_t i = 0; i < basis.size(); ++i) {
        const auto& c = basis[i];
        if (c.value < 0 || c.value >= group->order() ||
            !constraint_valid(r, c))
            throw ValidationError("universe: basis constraint " +
                                  std::to_string(i) + " is invalid");
        for (size_t j = 0; j < i; ++j)
            if (basis[j] == c)
                throw ValidationError("universe: duplicate basis constraint " +
                                      std::to_string(i));
    }
    return finish_universe(std::move(group), r, std::move(basis), problem_cap,
                           true);
}

SolvabilitySweep::SolvabilitySweep(const STGraph& g,
                                   const std::vector<int>& iface,
                                   const ProblemUniverse& U,
                                   const Bitset* deleted, bool keep_paths,
                                   uint64_t path_budget)
    : U_(U), n_(g.n()) {
    const int r = U.r;
    if ((int)iface.size() != r)
        throw ValidationError("sweep: interface size does not match universe");
    if (g.group()->signature() != U.group->signature())
        throw ValidationError("sweep: graph group does not match universe");
    cand_masks_.resize(U.constraints.size());
    if (keep_paths) cand_paths_.resize(U.constraints.size());
    std::vector<int> ipos(g.n(), -1);
    for (int i = 0; i < r; ++i) {
        int v = iface[i];
        if (v < 0 || v >= g.n())
            throw ValidationError("sweep: interface vertex out of range");
        if (ipos[v] != -1)
            throw ValidationError("sweep: repeated interface vertex");
        ipos[v] = i;
    }
    if (r == 0) return;

    Bitset ends = g.S() | g.T();
    for (int i = 0; i < r; ++i) ends.set(iface[i]);
    if (deleted) ends -= *deleted;

    uint64_t seen = 0;
    auto file_under = [&](int u, int w, int val, uint32_t via,
                          const Bitset& mask, const GPath& oriented,
                          std::vector<int>& got) {
        int ua[3], na = 0, wa[3], nw = 0;
        if (ipos[u] >= 0) ua[na++] = ipos[u];
        if (g.S().test(u)) ua[na++] = r;
        if (g.T().test(u)) ua[na++] = r + 1;
        if (ipos[w] >= 0) wa[nw++] = ipos[w];
        if (g.S().test(w)) wa[nw++] = r;
        if (g.T().test(w)) wa[nw++] = r + 1;
        for (int a = 0; a < na; ++a)
            for (int b = 0; b < nw; ++b) {
                int ci = U.constraint_index({val, ua[a], wa[b], via});
                if (ci < 0) continue;
                if (std::find(got.begin(), got.end(), ci) != got.end())
                    continue;
                got.push_back(ci);
                cand_masks_[ci].push_back(mask);
                if (keep_paths) cand_paths_[ci].push_back(oriented);
            }
    };
    for_each_path(
        g, ends, ends,
        [&](const GPath& p) {
            if (++seen > path_budget)
                throw BudgetError("type sweep exceeded budget of " +
                                  std::to_string(path_budget) + " paths");
            if (p.length() == 0) return true;
            uint32_t via = 0;
            for (int v : p.verts)
                if (ipos[v] >= 0) via |= 1u << ipos[v];
            if (!via) return true;
            Bitset mask = path_vertex_set(g, p);
            std::vector<int> got;
            file_under(p.first(), p.last(), p.value, via, mask, p, got);
            GPath rev;
            if (keep_paths) rev = reverse_path(g, p);
            int ival = g.group()->inv(p.value);
            file_under(p.last(), p.first(), ival, via, mask, rev, got);
            return true;
        },
        deleted);
}

bool SolvabilitySweep::pair_disjoint(int c1, int c2) const {
    const size_t C = U_.constraints.size();
    if (disjoint_cache_.empty()) disjoint_cache_.assign(C * C, -1);
    signed char& m = disjoint_cache_[c1 * C + c2];
    if (m >= 0) return m != 0;
    bool found = false;
    for (const Bitset& a : cand_masks_[c1]) {
        for (const Bitset& b : cand_masks_[c2])
            if (!a.intersects(b)) {
                found = true;
                break;
            }
        if (found) break;
    }
    m = found ? 1 : 0;
    disjoint_cache_[c2 * C + c1] = m;
    return found;
}

bool SolvabilitySweep::backtrack(const PathSystemProblem& p, size_t slot,
                                 std::vector<int>& pick,
                                 std::vector<int>& load) const {
    const size_t k = p.constraints.size();
    if (slot == k) return true;
    const auto& cands = cand_masks_[p.constraints[slot]];
    for (size_t idx = 0; idx < cands.size(); ++idx) {
        const Bitset& mask = cands[idx];
        bool ok = true;
        for (size_t prev = 0; prev < slot && ok; ++prev)
            if ((p.disjoint_mask >>
                 pair_bit((int)prev, (int)slot, (int)k)) &
                1u)
                if (mask.intersects(
                        cand_masks_[p.constraints[prev]][pick[prev]]))
                    ok = false;
        if (ok)
            mask.for_each([&](int v) {
                if (load[v] >= 2) ok = false;
            });
        if (!ok) continue;
        mask.for_each([&](int v) { ++load[v]; });
        pick[slot] = (int)idx;
        if (backtrack(p, slot + 1, pick, load)) return true;
        mask.for_each([&](int v) { --load[v]; });
    }
    return false;
}

bool SolvabilitySweep::problem_solvable(const PathSystemProblem& p) const {
    const size_t k = p.constraints.size();
    if (k == 0) return true;
    if (k == 1) return !cand_masks_[p.constraints[0]].empty();
    if (k == 2) {
        int c1 = p.constraints[0], c2 = p.constraints[1];
        if (p.disjoint_mask & 1u) return pair_disjoint(c1, c2);
        return !cand_masks_[c1].empty() && !cand_masks_[c2].empty();
    }
    std::vector<int> pick(k, -1), load(n_, 0);
    return backtrack(p, 0, pick, load);
}

Bitset SolvabilitySweep::solvable() const {
    Bitset out(U_.problems.size());
    for (size_t i = 0; i < U_.problems.size(); ++i)
        if (problem_solvable(U_.problems[i])) out.set(i);
    return out;
}

std::optional<std::vector<GPath>> SolvabilitySweep::solve(
    const PathSystemProblem& p) const {
    if (cand_paths_.size() != cand_masks_.size())
        throw Error("sweep: witnesses were not kept");
    const size_t k = p.constraints.size();
    std::vector<int> pick(k, -1), load(n_, 0);
    if (!backtrack(p, 0, pick, load)) return std::nullopt;
    std::vector<GPath> out;
    for (size_t i = 0; i < k; ++i)
        out.push_back(cand_paths_[p.constraints[i]][pick[i]]);
    return out;
}

namespace {

void check_problem_shape(const ProblemUniverse& U, const PathSystemProblem& p) {
    const int k = (int)p.constraints.size();
    if (k > 2 * U.r)
        throw ValidationError("path system problem has more than 2r paths");
    for (int ci : p.constraints)
        if (ci < 0 || ci >= (int)U.constraints.size())
            throw ValidationError("path system problem names an unknown "
                                  "constraint");
    const int bits = k * (k - 1) / 2;
    if (bits < 32 && (p.disjoint_mask >> bits) != 0)
        throw ValidationError("disjointness mask has bits beyond C(k,2)");
}

void verify_constraint_path(const STGraph& g, const std::vector<int>& iface,
                            const ProblemUniverse& U, int ci, const GPath& p) {
    validate_path(g, p);
    const PathConstraint& c = U.constraints[ci];
    if (p.length() == 0)
        throw ValidationError("constraint witness is a zero-arc path");
    if (p.value != c.value)
        throw ValidationError("constraint witness has the wrong value");
    auto end_ok = [&](int spec, int v) {
        if (spec < U.r) return v == iface[spec];
        return spec == U.r ? g.S().test(v) : g.T().test(v);
    };
    if (!end_ok(c.end_a, p.first()) || !end_ok(c.end_b, p.last()))
        throw ValidationError("constraint witness has wrong endpoints");
    uint32_t via = 0;
    for (int v : p.verts)
        for (int i = 0; i < U.r; ++i)
            if (iface[i] == v) via |= 1u << i;
    if (via != c.via)
        throw ValidationError("constraint witness visits the wrong interface "
                              "set");
}

} // namespace

std::optional<std::vector<GPath>> solve_path_system(
    const STGraph& g, const std::vector<int>& iface, const ProblemUniverse& U,
    const PathSystemProblem& prob, uint64_t path_budget) {
    check_problem_shape(U, prob);
    SolvabilitySweep sweep(g, iface, U, nullptr, true, path_budget);
    auto sol = sweep.solve(prob);
    if (!sol) return std::nullopt;
    const size_t k = prob.constraints.size();
    std::vector<int> load(g.n(), 0);
    for (size_t i = 0; i < k; ++i) {
        verify_constraint_path(g, iface, U, prob.constraints[i], (*sol)[i]);
        for (int v : (*sol)[i].verts)
            if (++load[v] > 2)
                throw Error("path system solution exceeds congestion 2");
    }
    for (size_t i = 0; i < k; ++i)
        for (size_t j = i + 1; j < k; ++j)
            if ((prob.disjoint_mask >> pair_bit((int)i, (int)j, (int)k)) & 1u)
                if (path_vertex_set(g, (*sol)[i])
                        .intersects(path_vertex_set(g, (*sol)[j])))
                    throw Error("path system solution breaks a disjointness "
                                "requirement");
    return sol;
}

namespace {

// Size-ascending, then lexicographic, enumeration of subsets of {0..n-1}.
// Returns false when sizes are exhausted.
bool next_subset(std::vector<int>& combo, int n, int max_size) {
    const int m = (int)combo.size();
    int pos = m - 1;
    while (pos >= 0 && combo[pos] == n - (m - pos)) --pos;
    if (pos >= 0) {
        ++combo[pos];
        for (int i = pos + 1; i < m; ++i) combo[i] = combo[i - 1] + 1;
        return true;
    }
    if (m + 1 > max_size || m + 1 > n) return false;
    combo.resize(m + 1);
    for (int i = 0; i <= m; ++i) combo[i] = i;
    return true;
}

} // namespace

std::optional<std::vector<int>> solve_hitting_problem(
    const STGraph& g, const std::vector<int>& iface, const ProblemUniverse& U,
    const HittingSetProblem& hp, uint64_t path_budget) {
    if (hp.ell < 0 || hp.ell > U.r)
        throw ValidationError("hitting problem level out of range [0,r]");
    for (int pi : hp.problems)
        if (pi < 0 || pi >= (int)U.problems.size())
            throw ValidationError("hitting problem names an unknown problem");
    std::vector<int> combo; // empty set first
    do {
        Bitset X = Bitset::of(g.n(), combo);
        SolvabilitySweep sweep(g, iface, U, &X, false, path_budget);
        bool blocked_all = true;
        for (int pi : hp.problems)
            if (sweep.problem_solvable(U.problems[pi])) {
                blocked_all = false;
                break;
            }
        if (blocked_all) return combo;
    } while (next_subset(combo, g.n(), hp.ell));
    return std::nullopt;
}

bool TypeFingerprint::predicts_solvable(const HittingSetProblem& hp,
                                        int n_problems) const {
    if (hp.ell < 0 || hp.ell > r)
        throw ValidationError("hitting problem level out of range [0,r]");
    Bitset P(n_problems);
    for (int pi : hp.problems) P.set(pi);
    for (const Bitset& M : minimal[hp.ell])
        if (!M.intersects(P)) return true;
    return false;
}

std::string TypeFingerprint::to_json() const {
    nlohmann::json levels = nlohmann::json::array();
    for (const auto& anti : minimal) {
        nlohmann::json level = nlohmann::json::array();
        for (const Bitset& M : anti) level.push_back(M.to_vector());
        levels.push_back(std::move(level));
    }
    nlohmann::json j{{"levels", std::move(levels)},
                     {"r", r},
                     {"universe_id", universe_id}};
    return j.dump();
}

uint64_t TypeFingerprint::hash() const { return fnv64(to_json()); }

namespace {

std::vector<Bitset> antichain_min(std::vector<Bitset> sets) {
    std::sort(sets.begin(), sets.end(), [](const Bitset& a, const Bitset& b) {
        size_t ca = a.count(), cb = b.count();
        if (ca != cb) return ca < cb;
        return a < b;
    });
    std::vector<Bitset> kept;
    for (const Bitset& s : sets) {
        bool dominated = false;
        for (const Bitset& k : kept)
            if (k.subset_of(s)) {
                dominated = true;
                break;
            }
        if (!dominated) kept.push_back(s);
    }
    return kept;
}

} // namespace

TypeFingerprint compute_type(const STGraph& g, const std::vector<int>& iface,
                             const ProblemUniverse& U, const TypeOptions& opt) {
    const int r = (int)iface.size();
    if (r > opt.r_max)
        throw ScaleError("interface size " + std::to_string(r) +
                         " above r_max " + std::to_string(opt.r_max));
    if (U.r != r)
        throw ValidationError("universe was built for a different interface "
                              "size");
    std::vector<std::vector<Bitset>> sols(r + 1);
    std::vector<int> combo;
    do {
        Bitset X = Bitset::of(g.n(), combo);
        SolvabilitySweep sweep(g, iface, U, &X, false, opt.path_budget);
        sols[combo.size()].push_back(sweep.solvable());
    } while (next_subset(combo, g.n(), r));

    TypeFingerprint fp;
    fp.r = r;
    fp.universe_id = U.universe_id;
    fp.minimal.resize(r + 1);
    std::vector<Bitset> acc;
    for (int l = 0; l <= r; ++l) {
        acc.insert(acc.end(), sols[l].begin(), sols[l].end());
        fp.minimal[l] = antichain_min(acc);
    }
    return fp;
}

Lemma5Counts lemma5_counts(const GroupPtr& group, int r) {
    if (!group) throw ValidationError("lemma5_counts: group required");
    if (r < 0 || r > 20)
        throw ValidationError("lemma5_counts: r out of range [0,20]");
    Lemma5Counts out{};
    const unsigned long long gamma = (unsigned long long)group->order();
    out.alpha = gamma * (unsigned long long)(r + 2) * (r + 2) * (1ull << r);

    auto summed = [&](unsigned long long base) -> unsigned long long {
        unsigned long long total = 0;
        unsigned __int128 pow = 1;
        for (int k = 0; k <= 2 * r; ++k) {
            if (k > 0) {
                pow *= base;
                if (pow > ~0ull)
                    throw ScaleError("lemma5_counts: sum overflows 64 bits");
            }
            const int shift = k * (k - 1) / 2;
            if (shift >= 64)
                throw ScaleError("lemma5_counts: sum overflows 64 bits");
            const unsigned __int128 term = pow << shift;
            if (term > (unsigned __int128)(~0ull - total))
                throw ScaleError("lemma5_counts: sum overflows 64 bits");
            total += (unsigned long long)term;
        }
        return total;
    };
    out.beta = summed(out.alpha);

    unsigned long long cc = 0;
    for (unsigned long long v = 0; v < gamma; ++v)
        for (int ea = 0; ea <= r + 1; ++ea)
            for (int eb = 0; eb <= r + 1; ++eb)
                for (uint32_t via = 1; via < (1u << r); ++via)
                    if (constraint_valid(r, {(int)v, ea, eb, via})) ++cc;
    out.constraint_count = cc;
    out.problem_count = summed(cc);

    // digits of (2r)^2 * 2^beta; the quantity itself overflows immediately
    long double lg = 0;
    if (r > 0) lg = std::log10((long double)(2 * r) * (2 * r));
    lg += (long double)out.beta * std::log10(2.0L);
    out.hp_bound_digits = (long long)lg + 1;
    return out;
}

} // namespace glpath
