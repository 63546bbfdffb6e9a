#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "pathcat/cubical.hpp"
#include "pathcat/pathcat.hpp"
#include "pathcat/triangulate.hpp"

namespace pathcat {

// Split of K along the size cut M: A = K(0,M), B = K(M+1,n), plus the
// triangulation edges and 2-simplices straddling the cut.
struct FrontierDecomposition {
    int cut = 0;
    CubicalComplex lower; // A
    CubicalComplex upper; // B
    std::vector<std::pair<Vset, Vset>> crossing_edges;         // (x,y), |x| <= M < |y|
    std::vector<std::array<Vset, 3>> relation_generators;      // (a,b,c), |a| <= M < |c|
};

struct SummandStat {
    std::pair<Vset, Vset> edge;
    std::size_t a_count = 0; // |P(A)(u,x)|
    std::size_t b_count = 0; // |P(B)(y,v)|
};

struct FrontierHomResult {
    HomSet hom;                      // labels of triangulate_sk2(K)
    std::vector<SummandStat> summands;
    double a_side_ms = 0;
    double b_side_ms = 0;
};

// K(r,s): maximal subintervals [A',B'] of cells of K with r <= |A'|, |B'| <= s.
CubicalComplex level_subcomplex(const CubicalComplex& k, int r, int s);

// Checks that |K(r,s)| agrees with the full subcomplex of |K| on vertices of
// size in [r,s], and that the latter is full in |K|.
bool level_triangulation_iso_check(const CubicalComplex& k, int r, int s);

FrontierDecomposition frontier_split(const CubicalComplex& k, int m);

// Computes P(K)(u,v) as the coequalizer over the frontier at cut M, with the
// A-side and B-side hom sets computed independently (concurrently when
// parallel is set).
FrontierHomResult frontier_hom(const CubicalComplex& k, int m, Vset u, Vset v,
                               bool parallel = false);

// Cut minimizing the crossing-edge count among cuts separating u from v.
int heuristic_cut(const CubicalComplex& k, Vset u, Vset v);

} // namespace pathcat
