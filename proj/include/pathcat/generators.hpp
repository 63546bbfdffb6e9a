#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "pathcat/cubical.hpp"
#include "pathcat/refine.hpp"
#include "pathcat/simplicial.hpp"

namespace pathcat {

// k glued copies of dDelta^2 on vertices 0..2k: bead i contributes edges
// (2i,2i+1), (2i+1,2i+2) and the chord (2i,2i+2).
SimplicialComplex necklace(int beads);

// Grid of w x h unit squares embedded in the (w+h)-cube via
// (i,j) -> {1..i} u {w+1..w+j}. Holes drop squares (named by lower-left
// corner); missing edges drop 1-cells that are not faces of a kept square.
struct GridSpec {
    int width = 1;
    int height = 1;
    std::vector<std::pair<int, int>> holes;
    std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>> missing_edges;
};
CubicalComplex grid_complex(const GridSpec& spec);
Vset grid_vertex(const GridSpec& spec, int i, int j);

// The 4x4-vertex example with a forbidden centre: four corner squares plus
// the boundary edges, embedded in the 6-cube. Two morphism classes run from
// the initial vertex {} to the terminal vertex {1..6}.
CubicalComplex swiss_flag();

// Five-vertex zigzag with two sources and two sinks whose iterated
// source/sink deletion empties out; labels: 0 -> 1, 0 -> 2, 2 -> 4, 3 -> 4.
SimplicialComplex zigzag();
// Query pair (v0, v4) of that example under the relabeling above.
inline std::pair<int, int> zigzag_query() { return {1, 3}; }

// Seeded random instances for property runs.
SimplicialComplex random_simplicial(std::mt19937& rng, int max_vertices = 8);
CubicalComplex random_cubical(std::mt19937& rng, int max_ambient = 4);
PosetMono random_mono(std::mt19937& rng, int source_dim, int max_target = 5);

} // namespace pathcat
