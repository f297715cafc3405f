#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "glpath/bitset.hpp"
#include "glpath/graph.hpp"
#include "glpath/path.hpp"

namespace glpath {

/// Endpoint specs 0..r-1 name an interface position; r matches any S-vertex
/// and r+1 any T-vertex (interface vertices lying in S or T included).
struct PathConstraint {
    int value;
    int end_a;
    int end_b;
    uint32_t via; // non-empty bitmask of interface positions, exact-set

    bool operator==(const PathConstraint&) const = default;
};

struct PathSystemProblem {
    std::vector<int> constraints; // indices into the universe constraint list
    uint32_t disjoint_mask = 0;   // bit pair_bit(i,j) => paths i and j disjoint
};

struct HittingSetProblem {
    int ell;
    std::vector<int> problems; // indices into the universe problem list
};

/// Bit position of the unordered pair (i, j), i < j, among k items.
inline int pair_bit(int i, int j, int k) {
    return i * (2 * k - i - 1) / 2 + (j - i - 1);
}

/// Canonical enumeration of all constraints and all k-path-system problems
/// (k <= 2r, ordered constraint tuples, every disjointness pattern). The id
/// hashes the group, r, and the solution-semantics conventions (a zero-arc
/// path never satisfies a constraint; the via set is exact; the ANY-S/ANY-T
/// markers include interface vertices lying in S/T), so fingerprints built
/// under different readings can never compare equal.
struct ProblemUniverse {
    GroupPtr group;
    int r = 0;
    std::vector<PathConstraint> constraints;
    std::vector<PathSystemProblem> problems;
    std::string universe_id;
    // (value, end_a, end_b, via) mixed-radix -> constraint index, -1 invalid
    std::vector<int> lookup;

    int constraint_index(const PathConstraint& c) const;

    static ProblemUniverse build(GroupPtr group, int r,
                                 uint64_t problem_cap = 2000000);
    /// Restricted constraint basis, for r >= 2 where the full universe is out
    /// of reach. Sound only for comparing graphs that share the basis; the id
    /// embeds the basis so nothing else ever compares equal.
    static ProblemUniverse build_restricted(GroupPtr group, int r,
                                            std::vector<PathConstraint> basis,
                                            uint64_t problem_cap = 2000000);
};

/// Candidate paths per constraint in g - deleted, plus solvability over the
/// whole problem universe. One sweep per deleted set is the workhorse of
/// compute_type, solve_hitting_problem and the catalog search. Candidates
/// are simple paths with at least one arc, both ends in iface|S|T, touching
/// the interface; each is filed under every constraint it satisfies (both
/// orientations tried).
class SolvabilitySweep {
  public:
    SolvabilitySweep(const STGraph& g, const std::vector<int>& iface,
                     const ProblemUniverse& U, const Bitset* deleted,
                     bool keep_paths, uint64_t path_budget);

    Bitset solvable() const; // bitvector over U.problems
    bool problem_solvable(const PathSystemProblem& p) const;
    /// First solution in candidate-list order; requires keep_paths.
    std::optional<std::vector<GPath>> solve(const PathSystemProblem& p) const;

    const std::vector<Bitset>& candidates(int constraint) const {
        return cand_masks_[constraint];
    }

  private:
    const ProblemUniverse& U_;
    int n_;
    std::vector<std::vector<Bitset>> cand_masks_;
    std::vector<std::vector<GPath>> cand_paths_;
    mutable std::vector<signed char> disjoint_cache_;

    bool pair_disjoint(int c1, int c2) const;
    bool backtrack(const PathSystemProblem& p, size_t slot,
                   std::vector<int>& pick, std::vector<int>& load) const;
};

/// Per level l in 0..r, the antichain of inclusion-minimal solvable-sets of
/// G - X over all |X| <= l. Two graphs have equal fingerprints iff they have
/// equal types: an (l, P)-hitting-set problem is solvable iff some stored
/// minimal set at level l avoids P, and conversely the antichains are
/// recoverable from that predicate.
struct TypeFingerprint {
    int r = 0;
    std::string universe_id;
    std::vector<std::vector<Bitset>> minimal;

    bool operator==(const TypeFingerprint& o) const {
        return r == o.r && universe_id == o.universe_id && minimal == o.minimal;
    }
    bool predicts_solvable(const HittingSetProblem& hp, int n_problems) const;
    std::string to_json() const;
    uint64_t hash() const;
};

struct TypeOptions {
    int r_max = 1;
    uint64_t path_budget = 1000000;
};

TypeFingerprint compute_type(const STGraph& g, const std::vector<int>& iface,
                             const ProblemUniverse& U,
                             const TypeOptions& opt = {});

std::optional<std::vector<GPath>> solve_path_system(
    const STGraph& g, const std::vector<int>& iface, const ProblemUniverse& U,
    const PathSystemProblem& prob, uint64_t path_budget = 1000000);

std::optional<std::vector<int>> solve_hitting_problem(
    const STGraph& g, const std::vector<int>& iface, const ProblemUniverse& U,
    const HittingSetProblem& hp, uint64_t path_budget = 1000000);

struct Lemma5Counts {
    unsigned long long alpha;      // |Gamma| * (r+2)^2 * 2^r
    unsigned long long beta;       // sum over k<=2r of alpha^k * 2^C(k,2)
    long long hp_bound_digits;     // decimal digits of (2r)^2 * 2^beta
    unsigned long long constraint_count; // valid constraints after filtering
    unsigned long long problem_count;    // same sum over the actual count
};

Lemma5Counts lemma5_counts(const GroupPtr& group, int r);

} // namespace glpath
