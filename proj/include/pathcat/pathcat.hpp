#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "pathcat/simplicial.hpp"

namespace pathcat {

// A directed edge path, stored as its strictly increasing vertex sequence.
// A single vertex encodes the identity path.
using EdgePath = std::vector<int>;

struct Morphism {
    int source = 0;
    int target = 0;
    int class_id = 0;
    EdgePath representative; // lexicographically least path in the class
};

// A hom set P(L)(source, target): the partition of all edge paths into
// elementary-homotopy classes.
struct HomSet {
    int source = 0;
    int target = 0;
    std::vector<Morphism> classes;          // ordered by representative
    std::map<EdgePath, int> membership;     // every enumerated path -> class_id

    std::size_t size() const { return classes.size(); }
    int class_of(const EdgePath& p) const;
};

struct PathCategory {
    std::vector<int> objects;
    std::map<std::pair<int, int>, HomSet> homs; // keyed by (v,w), v <= w

    const HomSet& hom(int v, int w) const;
};

// All directed edge paths v -> w in depth-first order with ascending
// next-vertex tie-break. Contains the identity path iff v == w.
std::vector<EdgePath> enumerate_paths(const SimplicialComplex& l, int v, int w);

// One-move neighbors of p: triangle contractions and expansions.
std::vector<EdgePath> elementary_homotopies(const SimplicialComplex& l, const EdgePath& p);

HomSet hom_set(const SimplicialComplex& l, int v, int w);

// |hom_set(l,v,w)| without materializing representatives. Restricts to the
// minimal path subcomplex first; when no 2-simplex survives, classes are
// singletons and the count is a DAG path count.
std::uint64_t hom_count(const SimplicialComplex& l, int v, int w);

PathCategory path_category(const SimplicialComplex& l);

Morphism compose(const PathCategory& c, const Morphism& f, const Morphism& g);

} // namespace pathcat
