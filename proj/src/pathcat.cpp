#include "pathcat/pathcat.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "pathcat/common.hpp"
#include "pathcat/reduction.hpp"

namespace pathcat {

int HomSet::class_of(const EdgePath& p) const {
    auto it = membership.find(p);
    if (it == membership.end()) throw invalid_input("path is not a member of this hom set");
    return it->second;
}

const HomSet& PathCategory::hom(int v, int w) const {
    auto it = homs.find({v, w});
    if (it == homs.end()) throw invalid_input("hom set not present in category");
    return it->second;
}

std::vector<EdgePath> enumerate_paths(const SimplicialComplex& l, int v, int w) {
    if (!l.has_vertex(v)) throw invalid_input("unknown vertex " + std::to_string(v));
    if (!l.has_vertex(w)) throw invalid_input("unknown vertex " + std::to_string(w));
    std::vector<EdgePath> out;
    if (w < v) return out;
    auto adj = successors(l);
    EdgePath cur{v};
    std::function<void()> dfs = [&]() {
        int x = cur.back();
        if (x == w) out.push_back(cur);
        for (int y : adj[x]) {
            if (y > w) break;
            cur.push_back(y);
            dfs();
            cur.pop_back();
        }
    };
    dfs();
    return out;
}

std::vector<EdgePath> elementary_homotopies(const SimplicialComplex& l, const EdgePath& p) {
    std::vector<EdgePath> out;
    // contractions: (a,b,c) -> (a,c) when the triangle and the edge exist
    for (std::size_t i = 0; i + 2 < p.size(); ++i) {
        if (l.has_triangle(p[i], p[i + 1], p[i + 2]) && l.has_edge(p[i], p[i + 2])) {
            EdgePath q(p);
            q.erase(q.begin() + static_cast<std::ptrdiff_t>(i) + 1);
            out.push_back(std::move(q));
        }
    }
    // expansions: (a,c) -> (a,b,c) for every triangle over the edge
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
        for (const auto& t : l.triangles) {
            if (t[0] == p[i] && t[2] == p[i + 1]) {
                EdgePath q(p);
                q.insert(q.begin() + static_cast<std::ptrdiff_t>(i) + 1, t[1]);
                out.push_back(std::move(q));
            }
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

namespace {

struct Dsu {
    std::vector<int> parent;
    explicit Dsu(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

} // namespace

HomSet hom_set(const SimplicialComplex& l, int v, int w) {
    auto paths = enumerate_paths(l, v, w);
    std::map<EdgePath, int> index;
    for (std::size_t i = 0; i < paths.size(); ++i) index[paths[i]] = static_cast<int>(i);

    Dsu dsu(paths.size());
    // Contractions alone generate the same components: every expansion of p
    // is a contraction from the expanded path, which is also enumerated.
    for (std::size_t i = 0; i < paths.size(); ++i) {
        const EdgePath& p = paths[i];
        for (std::size_t j = 0; j + 2 < p.size(); ++j) {
            if (l.has_triangle(p[j], p[j + 1], p[j + 2]) && l.has_edge(p[j], p[j + 2])) {
                EdgePath q(p);
                q.erase(q.begin() + static_cast<std::ptrdiff_t>(j) + 1);
                dsu.unite(static_cast<int>(i), index.at(q));
            }
        }
    }

    // canonical representative: lexicographically least member
    std::map<int, EdgePath> reps;
    for (std::size_t i = 0; i < paths.size(); ++i) {
        int r = dsu.find(static_cast<int>(i));
        auto it = reps.find(r);
        if (it == reps.end() || paths[i] < it->second) reps[r] = paths[i];
    }
    std::vector<EdgePath> ordered;
    for (auto& [r, rep] : reps) ordered.push_back(rep);
    std::sort(ordered.begin(), ordered.end());

    HomSet h;
    h.source = v;
    h.target = w;
    std::map<EdgePath, int> class_by_rep;
    for (std::size_t c = 0; c < ordered.size(); ++c) {
        class_by_rep[ordered[c]] = static_cast<int>(c);
        h.classes.push_back(Morphism{v, w, static_cast<int>(c), ordered[c]});
    }
    for (std::size_t i = 0; i < paths.size(); ++i)
        h.membership[paths[i]] = class_by_rep.at(reps.at(dsu.find(static_cast<int>(i))));
    return h;
}

std::uint64_t hom_count(const SimplicialComplex& l, int v, int w) {
    if (!l.has_vertex(v) || !l.has_vertex(w)) throw invalid_input("unknown query vertex");
    if (w < v) return 0;
    auto [core, report] = minimal_path_subcomplex(l, v, w);
    if (!core.triangles.empty()) return hom_set(core, v, w).size();
    // No relations: classes are singletons, so count paths by DAG dynamic
    // programming over the (finite, label-increasing) edge graph.
    auto adj = successors(core);
    std::map<int, std::uint64_t> memo;
    std::function<std::uint64_t(int)> count = [&](int x) -> std::uint64_t {
        if (x == w) return 1;
        auto it = memo.find(x);
        if (it != memo.end()) return it->second;
        std::uint64_t total = 0;
        for (int y : adj[x])
            if (y <= w) total += count(y);
        return memo[x] = total;
    };
    return core.has_vertex(v) && core.has_vertex(w) ? count(v) : 0;
}

PathCategory path_category(const SimplicialComplex& l) {
    PathCategory c;
    c.objects = l.vertices;
    for (std::size_t i = 0; i < l.vertices.size(); ++i)
        for (std::size_t j = i; j < l.vertices.size(); ++j) {
            int v = l.vertices[i], w = l.vertices[j];
            c.homs.emplace(std::make_pair(v, w), hom_set(l, v, w));
        }
    return c;
}

Morphism compose(const PathCategory& c, const Morphism& f, const Morphism& g) {
    if (f.target != g.source) throw invalid_input("morphisms are not composable");
    const HomSet& h = c.hom(f.source, g.target);
    EdgePath concat = f.representative;
    concat.insert(concat.end(), g.representative.begin() + 1, g.representative.end());
    int cls = h.class_of(concat);
    return h.classes[static_cast<std::size_t>(cls)];
}

} // namespace pathcat
