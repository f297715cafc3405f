#pragma once

#include <cstdint>
#include <vector>

#include "glpath/duality.hpp"
#include "glpath/graph.hpp"
#include "glpath/path.hpp"

namespace glpath {

/// Certificate produced by the constructive procedures: either a congestion-2
/// packing of non-null S-T paths or a hitting set, together with the bound
/// the hitting side was promised to satisfy.
struct DualityCertificate {
    bool is_packing = false;
    std::vector<GPath> paths;
    std::vector<int> hitting;
    long long bound = 0;

    int size() const {
        return is_packing ? (int)paths.size() : (int)hitting.size();
    }
};

/// A non-null same-side path P together with a path Q to the target set that
/// meets P exactly in the center. The two legs are the halves of P, oriented
/// from their endpoint towards the center, so that leg + Q concatenates
/// directly into an endpoint-to-target path.
struct Tripod {
    GPath P;
    GPath Q; // oriented center -> target
    int center;
    GPath a_leg; // first half of P, oriented endpoint -> center
    GPath b_leg; // second half of P, oriented endpoint -> center
};

/// Q.first() must lie on P and be their only common vertex.
Tripod make_tripod(const STGraph& g, const GPath& P, const GPath& Q);

/// One of leg+Q is non-null because lambda(P) = lambda(A) * lambda(B)^-1 != 1
/// forces lambda(A) != lambda(B). Returns the first non-null composite
/// (A-side preferred). Throws if both are null: impossible for a genuine
/// tripod, so it signals a bug upstream.
GPath claim1_extract(const STGraph& g, const Tripod& t);

/// True iff every vertex lies in at most two of the tripods.
bool tripod_congestion_check(const std::vector<Tripod>& ts, int n);

/// The unbreakable-case procedure. Caller guarantees g is (q,k)-unbreakable;
/// the only place that assumption is consumed (the center-to-target linkage)
/// throws a ValidationError naming the precondition if it fails. Returns a
/// congestion-2 packing of k non-null S-T paths or a hitting set of size
/// <= 4q+2k-6.
DualityCertificate proposition4(const STGraph& g, int q, int k,
                                uint64_t path_budget = 1000000);

} // namespace glpath
