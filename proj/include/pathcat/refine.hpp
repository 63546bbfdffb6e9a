#pragma once

#include <string>
#include <vector>

#include "pathcat/cubical.hpp"

namespace pathcat {

// A meet/join-preserving poset monomorphism P({1..m}) -> P({1..n}),
// determined by its values on the empty set and the singletons: nonempty
// sets map to the union of their singleton images.
struct PosetMono {
    int source_dim = 0; // m
    int target_dim = 0; // n
    Vset image_of_empty = 0;
    std::vector<Vset> singleton_images; // index i-1 holds alpha({i})

    Vset apply(Vset a) const;

    static PosetMono identity(int n);
};

std::vector<std::string> validate_mono(const PosetMono& alpha);

Interval apply_mono(const PosetMono& alpha, const Interval& cell);

// K_alpha: the subcomplex of the target cube generated by the images of the
// cells of K.
CubicalComplex refine(const CubicalComplex& k, const PosetMono& alpha);

// True iff every cell of K_alpha is a cell of L.
bool is_refinement(const CubicalComplex& k, const PosetMono& alpha, const CubicalComplex& l);

} // namespace pathcat
