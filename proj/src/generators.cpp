#include "pathcat/generators.hpp"

#include <algorithm>
#include <numeric>

#include "pathcat/common.hpp"

namespace pathcat {

SimplicialComplex necklace(int beads) {
    if (beads < 1) throw invalid_input("necklace needs at least one bead");
    std::vector<std::vector<int>> faces;
    for (int i = 0; i < beads; ++i) {
        int a = 2 * i;
        faces.push_back({a, a + 1});
        faces.push_back({a + 1, a + 2});
        faces.push_back({a, a + 2});
    }
    return make_simplicial(std::move(faces));
}

Vset grid_vertex(const GridSpec& spec, int i, int j) {
    if (i < 0 || i > spec.width || j < 0 || j > spec.height)
        throw invalid_input("grid vertex out of range");
    Vset f = 0;
    for (int a = 1; a <= i; ++a) f |= Vset{1} << (a - 1);
    for (int b = 1; b <= j; ++b) f |= Vset{1} << (spec.width + b - 1);
    return f;
}

CubicalComplex grid_complex(const GridSpec& spec) {
    if (spec.width < 1 || spec.height < 1) throw invalid_input("grid needs positive size");
    auto hole = [&](int i, int j) {
        return std::find(spec.holes.begin(), spec.holes.end(), std::make_pair(i, j)) !=
               spec.holes.end();
    };
    auto missing = [&](std::pair<int, int> a, std::pair<int, int> b) {
        return std::find(spec.missing_edges.begin(), spec.missing_edges.end(),
                         std::make_pair(a, b)) != spec.missing_edges.end();
    };
    for (auto [i, j] : spec.holes)
        if (i < 0 || i >= spec.width || j < 0 || j >= spec.height)
            throw invalid_input("hole out of range");

    std::vector<Interval> cells;
    for (int i = 0; i < spec.width; ++i)
        for (int j = 0; j < spec.height; ++j)
            if (!hole(i, j))
                cells.push_back({grid_vertex(spec, i, j), grid_vertex(spec, i + 1, j + 1)});
    for (int i = 0; i <= spec.width; ++i)
        for (int j = 0; j <= spec.height; ++j) {
            if (i < spec.width && !missing({i, j}, {i + 1, j}))
                cells.push_back({grid_vertex(spec, i, j), grid_vertex(spec, i + 1, j)});
            if (j < spec.height && !missing({i, j}, {i, j + 1}))
                cells.push_back({grid_vertex(spec, i, j), grid_vertex(spec, i, j + 1)});
            cells.push_back({grid_vertex(spec, i, j), grid_vertex(spec, i, j)});
        }
    return make_cubical(spec.width + spec.height, std::move(cells));
}

CubicalComplex swiss_flag() {
    GridSpec spec;
    spec.width = spec.height = 3;
    spec.holes = {{1, 0}, {0, 1}, {1, 1}, {2, 1}, {1, 2}};
    spec.missing_edges = {{{1, 1}, {2, 1}}, {{1, 2}, {2, 2}}, {{1, 1}, {1, 2}}, {{2, 1}, {2, 2}}};
    return grid_complex(spec);
}

SimplicialComplex zigzag() {
    return make_simplicial({{0, 1}, {0, 2}, {2, 4}, {3, 4}});
}

SimplicialComplex random_simplicial(std::mt19937& rng, int max_vertices) {
    std::uniform_int_distribution<int> nv(3, max_vertices);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    int v = nv(rng);
    std::vector<std::vector<int>> faces;
    for (int a = 0; a < v; ++a)
        for (int b = a + 1; b < v; ++b)
            for (int c = b + 1; c < v; ++c)
                if (coin(rng) < 0.12) faces.push_back({a, b, c});
    for (int a = 0; a < v; ++a)
        for (int b = a + 1; b < v; ++b)
            if (coin(rng) < 0.25) faces.push_back({a, b});
    std::vector<int> all(static_cast<std::size_t>(v));
    std::iota(all.begin(), all.end(), 0);
    return make_simplicial(std::move(faces), all);
}

CubicalComplex random_cubical(std::mt19937& rng, int max_ambient) {
    std::uniform_int_distribution<int> na(1, max_ambient);
    int n = na(rng);
    std::uniform_int_distribution<int> ncells(1, 4);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::vector<Interval> cells;
    int count = ncells(rng);
    for (int c = 0; c < count; ++c) {
        Vset lower = 0, diff = 0;
        for (int i = 0; i < n; ++i) {
            double r = coin(rng);
            if (r < 0.3) lower |= Vset{1} << i;
            else if (r < 0.75 && vset_size(diff) < 3) diff |= Vset{1} << i;
        }
        cells.push_back({lower, lower | diff});
    }
    return make_cubical(n, std::move(cells));
}

PosetMono random_mono(std::mt19937& rng, int source_dim, int max_target) {
    int m = source_dim;
    std::uniform_int_distribution<int> ns(m, std::max(m, max_target));
    int n = std::max(m, ns(rng));
    std::vector<int> elems(static_cast<std::size_t>(n));
    std::iota(elems.begin(), elems.end(), 1);
    std::shuffle(elems.begin(), elems.end(), rng);

    PosetMono a;
    a.source_dim = m;
    a.target_dim = n;
    a.singleton_images.assign(static_cast<std::size_t>(m), 0);
    std::size_t pos = 0;
    // one mandatory element per block
    for (int i = 0; i < m; ++i)
        a.singleton_images[static_cast<std::size_t>(i)] |= Vset{1} << (elems[pos++] - 1);
    // distribute the rest between blocks, the image of {} and "unused"
    std::uniform_int_distribution<int> pickblock(0, m + 1);
    for (; pos < elems.size(); ++pos) {
        int slot = pickblock(rng);
        Vset bit = Vset{1} << (elems[pos] - 1);
        if (slot < m) a.singleton_images[static_cast<std::size_t>(slot)] |= bit;
        else if (slot == m) a.image_of_empty |= bit;
    }
    for (auto& img : a.singleton_images) img |= a.image_of_empty;
    return a;
}

} // namespace pathcat
