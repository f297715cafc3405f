#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "glpath/graph.hpp"
#include "glpath/tripod.hpp"
#include "glpath/types.hpp"

namespace glpath {

/// True iff deleting the interface leaves no non-null S-T path.
bool is_safe(const STGraph& g, const std::vector<int>& iface);

/// Interface S/T membership packed two bits per position: bit 2i set iff
/// u_i is in S, bit 2i+1 iff u_i is in T. Catalog lookups key on this pair
/// with the fingerprint: the fingerprint alone does not determine it (an
/// edgeless side has one fingerprint whatever the memberships are), while
/// splicing needs positional agreement for S and T to glue consistently.
uint32_t iface_st_mask(const STGraph& g, const std::vector<int>& iface);

struct CatalogEntry {
    TypeFingerprint fp;
    uint32_t st_mask = 0;
    STGraph graph; // canonical names u1..ur, x1..xm; carries its interface
};

/// Smallest safe realizer per (fingerprint, interface-membership) pair,
/// from exhaustive enumeration of candidates on at most n_max vertices
/// (interface plus up to n_max - r extras, every S/T assignment, every
/// edge-label multiset without same-label parallels, deduplicated under
/// isomorphism fixing the interface pointwise). h() is the largest entry
/// size: the empirical bound every replacement stays within.
class GadgetCatalog {
  public:
    static GadgetCatalog build(GroupPtr group, int r, int n_max,
                               uint64_t path_budget = 1000000,
                               uint64_t work_budget = 50000000);
    /// Parses and revalidates: every entry is rebuilt, checked safe and its
    /// fingerprint recomputed; a mismatch is a ValidationError.
    static GadgetCatalog from_json(const std::string& text,
                                   uint64_t path_budget = 1000000);
    std::string to_json() const;

    const GroupPtr& group() const { return group_; }
    int r() const { return r_; }
    int n_max() const { return n_max_; }
    const ProblemUniverse& universe() const { return universe_; }
    const std::vector<CatalogEntry>& entries() const { return entries_; }
    /// Largest entry vertex count; 0 for an empty or r=0 catalog.
    int h() const;
    const STGraph* find(const TypeFingerprint& fp, uint32_t st_mask) const;

  private:
    GadgetCatalog() = default;

    GroupPtr group_;
    int r_ = 0;
    int n_max_ = 0;
    ProblemUniverse universe_;
    std::vector<CatalogEntry> entries_;
    std::map<std::pair<uint64_t, uint32_t>, std::vector<size_t>> index_;

    void add_entry(CatalogEntry e);
};

/// First safe candidate in size order whose fingerprint and interface
/// membership match g's. g itself guarantees existence when its size is
/// within n_max; nullopt is "not found within n_max", never a disproof.
std::optional<STGraph> find_gadget(const STGraph& g,
                                   const std::vector<int>& iface, int n_max,
                                   uint64_t path_budget = 1000000,
                                   uint64_t work_budget = 50000000);

/// G[A] glued to the gadget along the interface. The order of sep's
/// separator in g is its sorted vertex ids; position i of the gadget's
/// interface tuple corresponds to position i of that order. Gadget extras
/// get fresh names; the result carries the interface. Preconditions
/// (separation validity, interface arity, positional S/T agreement,
/// matching interface-internal edge multisets) raise ValidationError.
STGraph splice(const STGraph& g, const Separation& sep, const STGraph& gadget);

struct Lemma6Verdict {
    bool ok = false;
    int packing_g = 0, packing_spliced = 0;
    int hitting_g = 0, hitting_spliced = 0;
    std::string detail; // dump of both instances on failure
};

/// Checks packing(G) == packing(G') and hitting(G) == hitting(G') for
/// G' = splice(g, sep, gadget), after verifying the Lemma 6 preconditions
/// (type equality, both sides safe). Precondition violations raise
/// ValidationError; an inequality comes back as ok = false, which would
/// witness an implementation bug, not a property of the inputs.
Lemma6Verdict verify_lemma6(const STGraph& g, const Separation& sep,
                            const STGraph& gadget,
                            uint64_t path_budget = 1000000);

struct Lemma6AuditResult {
    int requested = 0;
    int completed = 0; // non-skipped triples
    int passed = 0;
    int failed = 0;
    int skipped = 0;         // degenerate samples (no safe side found)
    int identity_trials = 0; // triples where the gadget was the side itself
    std::string first_failure;
};

/// Generative audit: random two-block instances glued at one cut vertex,
/// the safe side replaced by its catalog gadget (every fifth trial by
/// itself, as an identity-splice control), each triple run through
/// verify_lemma6. Runs until `trials` triples completed.
Lemma6AuditResult lemma6_audit(const GadgetCatalog& catalog, int trials,
                               uint64_t seed, uint64_t path_budget = 1000000);

struct FTable {
    std::vector<long long> h; // h[k] for k = 0..k_max; h[0] unused
    std::vector<long long> f; // f[0] = 0; f[k] = max(4h(k)+2k-2, k-1+2f(k-1))
};

FTable f_recurrence(const std::vector<long long>& h_table, int k_max);

struct Theorem1Options {
    uint64_t path_budget = 1000000;
    uint64_t work_budget = 50000000;
    /// Use the k-2 side budget (the packing may reuse the opposite side's
    /// witness path twice) instead of the default k-1.
    bool sharp_sides = false;
};

struct Theorem1Trace {
    int k = 0;
    int n = 0;
    std::string branch; // "k0", "k1", "unbreakable", "both-sides",
                        // "drop-side", "replace-side"
};

struct Theorem1Result {
    DualityCertificate cert;
    std::vector<Theorem1Trace> trace;
};

/// The induction of the main theorem, run as an algorithm: unbreakable
/// graphs go to proposition4 with q = h+1; a witness separation either
/// recurses into both sides or replaces the safe side by a catalog gadget
/// (certificates lifted back through the replacement). Every certificate is
/// re-verified at every level, and the (k, vertex count) pair decreases
/// strictly along the recursion. Catalog gaps raise ScaleError.
Theorem1Result theorem1_procedure(const STGraph& g, int k,
                                  const GadgetCatalog& catalog,
                                  const Theorem1Options& opt = {});

} // namespace glpath
