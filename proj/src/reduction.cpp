#include "pathcat/reduction.hpp"

#include <algorithm>
#include <functional>

#include "pathcat/common.hpp"

namespace pathcat {

namespace {

bool is_subcomplex(const SimplicialComplex& l0, const SimplicialComplex& l) {
    for (int v : l0.vertices)
        if (!l.has_vertex(v)) return false;
    for (auto [a, b] : l0.edges)
        if (!l.has_edge(a, b)) return false;
    for (auto t : l0.triangles)
        if (!l.has_triangle(t[0], t[1], t[2])) return false;
    return true;
}

} // namespace

bool is_full_subcomplex(const SimplicialComplex& l0, const SimplicialComplex& l) {
    if (!is_subcomplex(l0, l)) throw invalid_input("first complex is not a subcomplex of the second");

    // condition 2: simplices of L spanned by L0 vertices are in L0
    for (auto [a, b] : l.edges)
        if (l0.has_vertex(a) && l0.has_vertex(b) && !l0.has_edge(a, b)) return false;
    for (auto t : l.triangles)
        if (l0.has_vertex(t[0]) && l0.has_vertex(t[1]) && l0.has_vertex(t[2]) &&
            !l0.has_triangle(t[0], t[1], t[2]))
            return false;

    // condition 1: no path of L between L0 vertices leaves L0. DFS states
    // (vertex, escaped); reaching an L0 vertex with escaped set is a failure.
    auto adj = successors(l);
    for (int u : l0.vertices) {
        std::map<std::pair<int, bool>, bool> seen;
        bool ok = true;
        std::function<void(int, bool)> dfs = [&](int x, bool escaped) {
            if (!ok || seen[{x, escaped}]) return;
            seen[{x, escaped}] = true;
            for (int y : adj[x]) {
                bool y_inside = l0.has_vertex(y);
                if (escaped && y_inside) {
                    ok = false;
                    return;
                }
                dfs(y, escaped || !y_inside);
            }
        };
        dfs(u, false);
        if (!ok) return false;
    }
    return true;
}

SimplicialComplex interval_restriction(const SimplicialComplex& l, int i, int j) {
    if (i > j) throw invalid_input("interval restriction requires i <= j");
    auto in = [&](int v) { return i <= v && v <= j; };
    std::vector<int> vs;
    std::vector<std::pair<int, int>> es;
    std::vector<std::array<int, 3>> ts;
    for (int v : l.vertices)
        if (in(v)) vs.push_back(v);
    for (auto [a, b] : l.edges)
        if (in(a) && in(b)) es.emplace_back(a, b);
    for (auto t : l.triangles)
        if (in(t[0]) && in(t[2])) ts.push_back(t);
    return from_faces(std::move(vs), std::move(es), std::move(ts));
}

std::pair<std::set<int>, std::set<int>> sources_and_sinks(const SimplicialComplex& l) {
    std::set<int> sources(l.vertices.begin(), l.vertices.end());
    std::set<int> sinks(l.vertices.begin(), l.vertices.end());
    for (auto [a, b] : l.edges) {
        sources.erase(b);
        sinks.erase(a);
    }
    return {sources, sinks};
}

SimplicialComplex delete_vertices(const SimplicialComplex& l, const std::set<int>& s) {
    auto out = [&](int v) { return !s.count(v); };
    std::vector<int> vs;
    std::vector<std::pair<int, int>> es;
    std::vector<std::array<int, 3>> ts;
    for (int v : l.vertices)
        if (out(v)) vs.push_back(v);
    for (auto [a, b] : l.edges)
        if (out(a) && out(b)) es.emplace_back(a, b);
    for (auto t : l.triangles)
        if (out(t[0]) && out(t[1]) && out(t[2])) ts.push_back(t);
    return from_faces(std::move(vs), std::move(es), std::move(ts));
}

std::pair<SimplicialComplex, ReductionReport>
minimal_path_subcomplex(const SimplicialComplex& l, int v, int w) {
    if (!l.has_vertex(v) || !l.has_vertex(w)) throw invalid_input("unknown query vertex");
    if (v > w) throw invalid_input("query requires v <= w");
    ReductionReport report;
    report.pass = "source-sink";
    report.input_vertices = l.vertices.size();

    SimplicialComplex cur = interval_restriction(l, v, w);
    while (true) {
        auto [sources, sinks] = sources_and_sinks(cur);
        std::set<int> s;
        s.insert(sources.begin(), sources.end());
        s.insert(sinks.begin(), sinks.end());
        s.erase(v);
        s.erase(w);
        if (s.empty()) break;
        for (int x : s) report.removed.push_back(std::to_string(x));
        cur = delete_vertices(cur, s);
        ++report.iterations;
    }
    report.output_vertices = cur.vertices.size();
    return {std::move(cur), std::move(report)};
}

SimplicialComplex path_span_subcomplex(const SimplicialComplex& l, int v, int w) {
    if (!l.has_vertex(v) || !l.has_vertex(w)) throw invalid_input("unknown query vertex");
    auto fwd = successors(l);
    auto bwd = predecessors(l);
    auto reach = [](std::map<int, std::vector<int>>& adj, int start) {
        std::set<int> seen{start};
        std::vector<int> stack{start};
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (int y : adj[x])
                if (seen.insert(y).second) stack.push_back(y);
        }
        return seen;
    };
    auto below = reach(fwd, v);
    auto above = reach(bwd, w);
    std::set<int> span;
    for (int x : below)
        if (above.count(x)) span.insert(x);
    // every vertex on a path is in span, and any simplex spanned by such
    // vertices already sits on a combined path through its own edges
    std::vector<int> vs(span.begin(), span.end());
    std::vector<std::pair<int, int>> es;
    std::vector<std::array<int, 3>> ts;
    for (auto [a, b] : l.edges)
        if (span.count(a) && span.count(b)) es.emplace_back(a, b);
    for (auto t : l.triangles)
        if (span.count(t[0]) && span.count(t[1]) && span.count(t[2])) ts.push_back(t);
    return from_faces(std::move(vs), std::move(es), std::move(ts));
}

std::vector<Vset> corners(const CubicalComplex& k) {
    std::vector<Vset> out;
    for (Vset f : complex_vertices(k)) {
        int hits = 0;
        for (const auto& c : k.maximal_cells)
            if (c.contains_vertex(f)) ++hits;
        if (hits == 1) out.push_back(f);
    }
    return out;
}

CubicalComplex remove_corner(const CubicalComplex& k, Vset x) {
    auto cs = corners(k);
    if (std::find(cs.begin(), cs.end(), x) == cs.end())
        throw invalid_input("vertex " + vset_to_string(x) + " is not a corner");
    std::vector<Interval> cells;
    for (const auto& c : k.maximal_cells) {
        if (!c.contains_vertex(x)) {
            cells.push_back(c);
            continue;
        }
        // maximal subintervals of [A,B] avoiding x: raise the lower bound by
        // an element outside x, or drop an element of x from the upper bound
        Vset outside = c.upper & ~x;
        for (Vset m = outside; m; m &= m - 1)
            cells.push_back(Interval{c.lower | (m & (~m + 1)), c.upper});
        Vset inside = x & ~c.lower;
        for (Vset m = inside; m; m &= m - 1)
            cells.push_back(Interval{c.lower, c.upper & ~(m & (~m + 1))});
    }
    return CubicalComplex{k.ambient, maximalize(std::move(cells))};
}

std::pair<CubicalComplex, ReductionReport>
corner_reduce(const CubicalComplex& k, const std::set<Vset>& protected_vertices) {
    ReductionReport report;
    report.pass = "corner";
    report.input_vertices = complex_vertices(k).size();
    CubicalComplex cur = k;
    while (true) {
        auto cs = corners(cur); // canonical order
        Vset pick = 0;
        bool found = false;
        for (Vset c : cs) {
            if (!protected_vertices.count(c)) {
                pick = c;
                found = true;
                break;
            }
        }
        if (!found) break;
        cur = remove_corner(cur, pick);
        report.removed.push_back(vset_to_string(pick));
        ++report.iterations;
    }
    report.output_vertices = complex_vertices(cur).size();
    return {std::move(cur), std::move(report)};
}

} // namespace pathcat
