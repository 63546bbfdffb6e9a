#pragma once

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace pathcat {

// A finite simplicial complex on totally ordered integer vertex labels.
// The face closure is stored explicitly up to dimension 2; higher maximal
// simplices are kept as written so that sk2 is observable, but only the
// 2-skeleton ever matters for path categories.
struct SimplicialComplex {
    std::vector<int> vertices;                       // sorted ascending
    std::vector<std::pair<int, int>> edges;          // (a,b) with a < b, sorted
    std::vector<std::array<int, 3>> triangles;       // a < b < c, sorted
    std::vector<std::vector<int>> maximal_simplices; // any dimension, sorted

    bool has_vertex(int v) const;
    bool has_edge(int a, int b) const;
    bool has_triangle(int a, int b, int c) const;

    // Face-set equality; the maximal-simplex presentation is ignored.
    bool same_faces(const SimplicialComplex& other) const {
        return vertices == other.vertices && edges == other.edges && triangles == other.triangles;
    }
};

// Builds the closure of a family of simplices given by maximal faces
// (plus optional isolated vertices). Tuples must be strictly increasing.
SimplicialComplex make_simplicial(std::vector<std::vector<int>> maximal,
                                  std::vector<int> extra_vertices = {});

// Rebuilds a complex from an explicit (already closed) face family.
SimplicialComplex from_faces(std::vector<int> vertices,
                             std::vector<std::pair<int, int>> edges,
                             std::vector<std::array<int, 3>> triangles);

// Drops simplices of dimension > 2. The face closure is unchanged.
SimplicialComplex sk2(const SimplicialComplex& l);

std::vector<std::string> validate(const SimplicialComplex& l);

// Successor adjacency of the edge graph; edges always point label-upward,
// so this graph is a DAG.
std::map<int, std::vector<int>> successors(const SimplicialComplex& l);
std::map<int, std::vector<int>> predecessors(const SimplicialComplex& l);

// Standard small complexes, used heavily in tests.
SimplicialComplex simplex(int n);          // Delta^n on 0..n
SimplicialComplex boundary_simplex(int n); // dDelta^n
SimplicialComplex horn(int n, int k);      // Lambda^n_k

} // namespace pathcat
