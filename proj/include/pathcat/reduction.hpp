#pragma once

#include <set>
#include <string>
#include <vector>

#include "pathcat/cubical.hpp"
#include "pathcat/simplicial.hpp"

namespace pathcat {

// Audit trail for an iterative reduction pass.
struct ReductionReport {
    std::string pass;
    std::vector<std::string> removed; // vertex names, in removal order
    int iterations = 0;
    std::size_t input_vertices = 0;
    std::size_t output_vertices = 0;
};

// L0 is full in L iff it is path-closed and contains every simplex of L
// whose vertices it contains. Throws if L0 is not a subcomplex of L.
bool is_full_subcomplex(const SimplicialComplex& l0, const SimplicialComplex& l);

// L[i,j]: simplices with all vertices in the label interval [i,j].
SimplicialComplex interval_restriction(const SimplicialComplex& l, int i, int j);

std::pair<std::set<int>, std::set<int>> sources_and_sinks(const SimplicialComplex& l);

// L(-S): simplices with no vertex in S.
SimplicialComplex delete_vertices(const SimplicialComplex& l, const std::set<int>& s);

// Starts from L[v,w] and deletes sources/sinks other than v,w until the
// process stabilizes; the result is L(v,w).
std::pair<SimplicialComplex, ReductionReport>
minimal_path_subcomplex(const SimplicialComplex& l, int v, int w);

// Independent construction of L(v,w): the full subcomplex on the vertices
// that lie on some directed path from v to w. Used as a cross-check.
SimplicialComplex path_span_subcomplex(const SimplicialComplex& l, int v, int w);

// Cubical corner removal (vertices lying in exactly one maximal cell).
std::vector<Vset> corners(const CubicalComplex& k);
CubicalComplex remove_corner(const CubicalComplex& k, Vset x);
std::pair<CubicalComplex, ReductionReport>
corner_reduce(const CubicalComplex& k, const std::set<Vset>& protected_vertices);

} // namespace pathcat
