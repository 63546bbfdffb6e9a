#include "pathcat/triangulate.hpp"

#include "pathcat/common.hpp"

namespace pathcat {

int Triangulation::label_of(Vset f) const {
    auto it = set_to_label.find(f);
    if (it == set_to_label.end())
        throw invalid_input("vertex " + vset_to_string(f) + " not in triangulation");
    return it->second;
}

Vset Triangulation::set_of(int label) const {
    if (label < 0 || label >= static_cast<int>(label_to_set.size()))
        throw invalid_input("label " + std::to_string(label) + " not in triangulation");
    return label_to_set[static_cast<std::size_t>(label)];
}

Triangulation triangulate_sk2(const CubicalComplex& k) {
    Triangulation t;
    t.label_to_set = complex_vertices(k);
    for (std::size_t i = 0; i < t.label_to_set.size(); ++i)
        t.set_to_label[t.label_to_set[i]] = static_cast<int>(i);

    const int v = static_cast<int>(t.label_to_set.size());
    std::vector<int> labels(v);
    for (int i = 0; i < v; ++i) labels[i] = i;

    std::vector<std::pair<int, int>> edges;
    std::vector<std::array<int, 3>> triangles;
    for (int i = 0; i < v; ++i) {
        for (int j = i + 1; j < v; ++j) {
            Vset f = t.label_to_set[i], g = t.label_to_set[j];
            if (!vset_subset(f, g)) continue; // canonical order refines inclusion
            if (!complex_contains(k, Interval{f, g})) continue;
            edges.emplace_back(i, j);
            // Middles: any G strictly between F and H lies in the same cell.
            Vset diff = g & ~f;
            for (Vset m = (diff - 1) & diff; m; m = (m - 1) & diff)
                triangles.push_back({i, t.label_of(f | m), j});
        }
    }
    t.complex = from_faces(labels, std::move(edges), std::move(triangles));
    return t;
}

} // namespace pathcat
