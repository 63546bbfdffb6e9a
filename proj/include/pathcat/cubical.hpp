#pragma once

#include <string>
#include <vector>

#include "pathcat/vertexset.hpp"

namespace pathcat {

// A cell [A,B] = { F | A <= F <= B } of the subset poset of {1..n}.
struct Interval {
    Vset lower = 0;
    Vset upper = 0;

    int dim() const { return vset_size(upper) - vset_size(lower); }
    bool contains_vertex(Vset f) const { return vset_subset(lower, f) && vset_subset(f, upper); }
    bool operator==(const Interval&) const = default;
};

// [A,B] subset of [C,D] iff C <= A and B <= D.
inline bool interval_subset(const Interval& inner, const Interval& outer) {
    return vset_subset(outer.lower, inner.lower) && vset_subset(inner.upper, outer.upper);
}

bool interval_canonical_less(const Interval& a, const Interval& b);

// A finite cubical complex inside the standard n-cell, stored as its list of
// maximal cells; closure under subintervals is implicit.
struct CubicalComplex {
    int ambient = 1;
    std::vector<Interval> maximal_cells; // maximalized, canonically sorted

    bool operator==(const CubicalComplex&) const = default;
};

// Drops cells contained in another and sorts canonically.
std::vector<Interval> maximalize(std::vector<Interval> cells);

CubicalComplex make_cubical(int ambient, std::vector<Interval> cells);

std::vector<Vset> interval_members(const Interval& cell);

bool complex_contains(const CubicalComplex& k, const Interval& cell);

// All cubical vertices F with [F,F] in K, in canonical order.
std::vector<Vset> complex_vertices(const CubicalComplex& k);

std::vector<std::string> validate(const CubicalComplex& k);

// The single maximal cell [{}, {1..n}].
CubicalComplex hypercube(int n);

} // namespace pathcat
