#pragma once

#include <unordered_map>

#include "pathcat/cubical.hpp"
#include "pathcat/simplicial.hpp"

namespace pathcat {

// The 2-skeleton of the triangulation of a cubical complex, together with
// the relabeling between cubical vertices and simplicial labels.
struct Triangulation {
    SimplicialComplex complex;          // labels 0..V-1
    std::vector<Vset> label_to_set;     // canonical linear extension
    std::unordered_map<Vset, int> set_to_label;

    int label_of(Vset f) const;
    Vset set_of(int label) const;
};

// Vertices: all F with [F,F] in K, labeled by the (cardinality, lex) linear
// extension. Edges: pairs F < G with [F,G] a cell of K, including the
// "missing" diagonal edges. Triangles: chains F < G < H with [F,H] in K.
Triangulation triangulate_sk2(const CubicalComplex& k);

} // namespace pathcat
