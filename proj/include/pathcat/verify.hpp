#pragma once

#include <string>
#include <vector>

#include "pathcat/cubical.hpp"
#include "pathcat/refine.hpp"
#include "pathcat/simplicial.hpp"

namespace pathcat {

// Result of an oracle run: every checked hom pair that failed the bijection
// (or an iso/coequalizer check that failed) produces one failure line.
struct VerifyResult {
    int checked_pairs = 0;
    std::vector<std::string> failures;

    bool ok() const { return failures.empty(); }
    void merge(const VerifyResult& other);
};

// Fully-faithful contract: hom sets of a full subcomplex agree with the
// ambient ones, and representatives map to distinct classes.
VerifyResult check_fully_faithful(const SimplicialComplex& sub, const SimplicialComplex& full,
                                  const std::string& tag);

// interval_restriction over all vertex pairs of L.
VerifyResult verify_interval_pass(const SimplicialComplex& l);

// One round of source/sink deletion, plus the minimal-path-subcomplex
// fixed point against the direct path-span construction.
VerifyResult verify_source_sink_pass(const SimplicialComplex& l);

// Single corner removals and the full corner_reduce sweep.
VerifyResult verify_corner_pass(const CubicalComplex& k);

// Refinement along a poset monomorphism, checked by relabeling
// representatives through alpha.
VerifyResult verify_refine_pass(const CubicalComplex& k, const PosetMono& alpha);

// Coequalizer reassembly at every admissible cut.
VerifyResult verify_frontier_pass(const CubicalComplex& k);

// Level subcomplex triangulation isomorphism for all (r,s).
VerifyResult verify_level_pass(const CubicalComplex& k);

// Hom sets unchanged when the triangulation carries explicit 3-simplices
// before the skeleton restriction.
VerifyResult verify_skeleton_pass(const CubicalComplex& k);

} // namespace pathcat
