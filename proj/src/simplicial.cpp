#include "pathcat/simplicial.hpp"

#include <algorithm>
#include <set>

#include "pathcat/common.hpp"

namespace pathcat {

bool SimplicialComplex::has_vertex(int v) const {
    return std::binary_search(vertices.begin(), vertices.end(), v);
}

bool SimplicialComplex::has_edge(int a, int b) const {
    return std::binary_search(edges.begin(), edges.end(), std::make_pair(a, b));
}

bool SimplicialComplex::has_triangle(int a, int b, int c) const {
    return std::binary_search(triangles.begin(), triangles.end(), std::array<int, 3>{a, b, c});
}

namespace {

std::vector<std::vector<int>> maximalize_simplices(std::vector<std::vector<int>> simps) {
    std::sort(simps.begin(), simps.end());
    simps.erase(std::unique(simps.begin(), simps.end()), simps.end());
    std::vector<std::vector<int>> out;
    for (const auto& s : simps) {
        bool dominated = false;
        for (const auto& t : simps) {
            if (s.size() >= t.size() || dominated) continue;
            if (std::includes(t.begin(), t.end(), s.begin(), s.end())) dominated = true;
        }
        if (!dominated) out.push_back(s);
    }
    return out;
}

} // namespace

SimplicialComplex make_simplicial(std::vector<std::vector<int>> maximal,
                                  std::vector<int> extra_vertices) {
    std::set<int> vs(extra_vertices.begin(), extra_vertices.end());
    std::set<std::pair<int, int>> es;
    std::set<std::array<int, 3>> ts;
    for (const auto& s : maximal) {
        for (std::size_t i = 1; i < s.size(); ++i)
            if (s[i - 1] >= s[i])
                throw invalid_input("simplex vertices must be strictly increasing");
        for (std::size_t i = 0; i < s.size(); ++i) {
            vs.insert(s[i]);
            for (std::size_t j = i + 1; j < s.size(); ++j) {
                es.insert({s[i], s[j]});
                for (std::size_t k = j + 1; k < s.size(); ++k)
                    ts.insert({s[i], s[j], s[k]});
            }
        }
    }
    for (int v : vs) maximal.push_back({v});
    SimplicialComplex l;
    l.vertices.assign(vs.begin(), vs.end());
    l.edges.assign(es.begin(), es.end());
    l.triangles.assign(ts.begin(), ts.end());
    l.maximal_simplices = maximalize_simplices(std::move(maximal));
    return l;
}

SimplicialComplex from_faces(std::vector<int> vertices,
                             std::vector<std::pair<int, int>> edges,
                             std::vector<std::array<int, 3>> triangles) {
    std::vector<std::vector<int>> maximal;
    for (int v : vertices) maximal.push_back({v});
    for (const auto& [a, b] : edges) maximal.push_back({a, b});
    for (const auto& t : triangles) maximal.push_back({t[0], t[1], t[2]});
    return make_simplicial(std::move(maximal));
}

SimplicialComplex sk2(const SimplicialComplex& l) {
    std::vector<std::vector<int>> capped;
    for (const auto& s : l.maximal_simplices) {
        if (s.size() <= 3) {
            capped.push_back(s);
            continue;
        }
        // all 2-faces of a higher simplex
        for (std::size_t i = 0; i < s.size(); ++i)
            for (std::size_t j = i + 1; j < s.size(); ++j)
                for (std::size_t k = j + 1; k < s.size(); ++k)
                    capped.push_back({s[i], s[j], s[k]});
    }
    return make_simplicial(std::move(capped), l.vertices);
}

std::vector<std::string> validate(const SimplicialComplex& l) {
    std::vector<std::string> bad;
    for (const auto& [a, b] : l.edges) {
        if (a == b) bad.push_back("degenerate edge (" + std::to_string(a) + "," + std::to_string(b) + ")");
        else if (a > b)
            bad.push_back("edge not increasing (" + std::to_string(a) + "," + std::to_string(b) + ")");
        if (!l.has_vertex(a) || !l.has_vertex(b))
            bad.push_back("edge endpoint not a vertex (" + std::to_string(a) + "," + std::to_string(b) + ")");
    }
    for (const auto& t : l.triangles) {
        if (!(t[0] < t[1] && t[1] < t[2]))
            bad.push_back("triangle not strictly increasing");
        for (auto [a, b] : {std::pair{t[0], t[1]}, {t[0], t[2]}, {t[1], t[2]}})
            if (!l.has_edge(a, b))
                bad.push_back("triangle face missing: (" + std::to_string(a) + "," + std::to_string(b) + ")");
    }
    return bad;
}

std::map<int, std::vector<int>> successors(const SimplicialComplex& l) {
    std::map<int, std::vector<int>> adj;
    for (int v : l.vertices) adj[v]; // ensure every vertex has an entry
    for (const auto& [a, b] : l.edges) adj[a].push_back(b);
    for (auto& [v, nb] : adj) std::sort(nb.begin(), nb.end());
    return adj;
}

std::map<int, std::vector<int>> predecessors(const SimplicialComplex& l) {
    std::map<int, std::vector<int>> adj;
    for (int v : l.vertices) adj[v];
    for (const auto& [a, b] : l.edges) adj[b].push_back(a);
    for (auto& [v, nb] : adj) std::sort(nb.begin(), nb.end());
    return adj;
}

SimplicialComplex simplex(int n) {
    std::vector<int> all(n + 1);
    for (int i = 0; i <= n; ++i) all[i] = i;
    return make_simplicial({all});
}

SimplicialComplex boundary_simplex(int n) {
    std::vector<std::vector<int>> faces;
    for (int omit = 0; omit <= n; ++omit) {
        std::vector<int> f;
        for (int i = 0; i <= n; ++i)
            if (i != omit) f.push_back(i);
        faces.push_back(std::move(f));
    }
    return make_simplicial(std::move(faces));
}

SimplicialComplex horn(int n, int k) {
    if (k < 0 || k > n) throw invalid_input("horn index out of range");
    std::vector<std::vector<int>> faces;
    for (int omit = 0; omit <= n; ++omit) {
        if (omit == k) continue;
        std::vector<int> f;
        for (int i = 0; i <= n; ++i)
            if (i != omit) f.push_back(i);
        faces.push_back(std::move(f));
    }
    return make_simplicial(std::move(faces));
}

} // namespace pathcat
