#include "pathcat/frontier.hpp"

#include <algorithm>
#include <chrono>
#include <future>
#include <map>
#include <set>

#include "pathcat/common.hpp"
#include "pathcat/reduction.hpp"

namespace pathcat {

namespace {

// all ways to pick `want` elements from elems[from..], appended to acc
void choose(const std::vector<int>& elems, std::size_t from, int want, std::vector<int>& acc,
            std::vector<std::vector<int>>& out) {
    if (want == 0) {
        out.push_back(acc);
        return;
    }
    if (elems.size() - from < static_cast<std::size_t>(want)) return;
    for (std::size_t i = from; i < elems.size(); ++i) {
        acc.push_back(elems[i]);
        choose(elems, i + 1, want - 1, acc, out);
        acc.pop_back();
    }
}

Vset mask_of(const std::vector<int>& bits) {
    Vset m = 0;
    for (int b : bits) m |= Vset{1} << b;
    return m;
}

} // namespace

CubicalComplex level_subcomplex(const CubicalComplex& k, int r, int s) {
    if (r > s) throw invalid_input("level subcomplex requires r <= s");
    std::vector<Interval> cells;
    for (const auto& c : k.maximal_cells) {
        int la = vset_size(c.lower), lb = vset_size(c.upper);
        if (std::max(r, la) > std::min(s, lb)) continue;
        int need_add = std::max(r - la, 0);
        int need_drop = std::max(lb - s, 0);
        if (need_add == 0 && need_drop == 0) {
            cells.push_back(c);
            continue;
        }
        std::vector<int> diff_bits;
        for (Vset m = c.upper & ~c.lower; m; m &= m - 1) diff_bits.push_back(std::countr_zero(m));
        std::vector<std::vector<int>> adds;
        std::vector<int> acc;
        choose(diff_bits, 0, need_add, acc, adds);
        for (const auto& x : adds) {
            Vset xm = mask_of(x);
            std::vector<int> rest;
            for (int b : diff_bits)
                if (!(xm >> b & 1)) rest.push_back(b);
            std::vector<std::vector<int>> drops;
            choose(rest, 0, need_drop, acc, drops);
            for (const auto& y : drops)
                cells.push_back(Interval{c.lower | xm, c.upper & ~mask_of(y)});
        }
    }
    return CubicalComplex{k.ambient, maximalize(std::move(cells))};
}

bool level_triangulation_iso_check(const CubicalComplex& k, int r, int s) {
    if (r > s) return true; // both sides empty
    Triangulation tk = triangulate_sk2(k);
    auto in_range = [&](int label) {
        int sz = vset_size(tk.set_of(label));
        return r <= sz && sz <= s;
    };
    // full sub-simplicial-complex of |K| on the in-range vertices
    std::vector<int> vs;
    std::vector<std::pair<int, int>> es;
    std::vector<std::array<int, 3>> ts;
    for (int label : tk.complex.vertices)
        if (in_range(label)) vs.push_back(label);
    for (auto [a, b] : tk.complex.edges)
        if (in_range(a) && in_range(b)) es.emplace_back(a, b);
    for (auto t : tk.complex.triangles)
        if (in_range(t[0]) && in_range(t[2])) ts.push_back(t);
    SimplicialComplex sub = from_faces(vs, es, ts);

    if (!is_full_subcomplex(sub, tk.complex)) return false;

    // compare with the triangulation of K(r,s) under the identity on masks
    Triangulation tl = triangulate_sk2(level_subcomplex(k, r, s));
    std::set<Vset> va, vb;
    std::set<std::pair<Vset, Vset>> ea, eb;
    std::set<std::array<Vset, 3>> ta, tb;
    for (int l : tl.complex.vertices) va.insert(tl.set_of(l));
    for (int l : sub.vertices) vb.insert(tk.set_of(l));
    for (auto [a, b] : tl.complex.edges) ea.insert({tl.set_of(a), tl.set_of(b)});
    for (auto [a, b] : sub.edges) eb.insert({tk.set_of(a), tk.set_of(b)});
    for (auto t : tl.complex.triangles) ta.insert({tl.set_of(t[0]), tl.set_of(t[1]), tl.set_of(t[2])});
    for (auto t : sub.triangles) tb.insert({tk.set_of(t[0]), tk.set_of(t[1]), tk.set_of(t[2])});
    return va == vb && ea == eb && ta == tb;
}

FrontierDecomposition frontier_split(const CubicalComplex& k, int m) {
    if (m < 0 || m >= k.ambient) throw invalid_input("cut must satisfy 0 <= M < n");
    FrontierDecomposition d;
    d.cut = m;
    d.lower = level_subcomplex(k, 0, m);
    d.upper = level_subcomplex(k, m + 1, k.ambient);
    Triangulation tk = triangulate_sk2(k);
    for (auto [a, b] : tk.complex.edges) {
        Vset x = tk.set_of(a), y = tk.set_of(b);
        if (vset_size(x) <= m && vset_size(y) > m) d.crossing_edges.emplace_back(x, y);
    }
    for (auto t : tk.complex.triangles) {
        Vset a = tk.set_of(t[0]), b = tk.set_of(t[1]), c = tk.set_of(t[2]);
        if (vset_size(a) <= m && vset_size(c) > m) d.relation_generators.push_back({a, b, c});
    }
    return d;
}

namespace {

struct Dsu {
    std::vector<int> parent;
    explicit Dsu(std::size_t n) : parent(n) {
        for (std::size_t i = 0; i < n; ++i) parent[i] = static_cast<int>(i);
    }
    int find(int a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

EdgePath relabel(const Triangulation& from, const Triangulation& to, const EdgePath& p) {
    EdgePath out;
    out.reserve(p.size());
    for (int l : p) out.push_back(to.label_of(from.set_of(l)));
    return out;
}

} // namespace

FrontierHomResult frontier_hom(const CubicalComplex& k, int m, Vset u, Vset v, bool parallel) {
    FrontierDecomposition d = frontier_split(k, m);
    if (!complex_contains(k, Interval{u, u}) || !complex_contains(k, Interval{v, v}))
        throw invalid_input("query vertex not in complex");
    if (!(vset_size(u) <= m && m < vset_size(v)))
        throw invalid_input("cut does not separate the query vertices");

    Triangulation tk = triangulate_sk2(k);
    Triangulation ta = triangulate_sk2(d.lower);
    Triangulation tb = triangulate_sk2(d.upper);

    std::set<Vset> xs, ys;
    for (auto [x, y] : d.crossing_edges) {
        xs.insert(x);
        ys.insert(y);
    }

    using Clock = std::chrono::steady_clock;
    std::map<Vset, HomSet> hom_a, hom_b;
    double a_ms = 0, b_ms = 0;
    auto run_a = [&]() {
        auto t0 = Clock::now();
        std::map<Vset, HomSet> out;
        for (Vset x : xs) out.emplace(x, hom_set(ta.complex, ta.label_of(u), ta.label_of(x)));
        a_ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
        return out;
    };
    auto run_b = [&]() {
        auto t0 = Clock::now();
        std::map<Vset, HomSet> out;
        for (Vset y : ys) out.emplace(y, hom_set(tb.complex, tb.label_of(y), tb.label_of(v)));
        b_ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
        return out;
    };
    if (parallel) {
        auto fa = std::async(std::launch::async, run_a);
        hom_b = run_b();
        hom_a = fa.get();
    } else {
        hom_a = run_a();
        hom_b = run_b();
    }

    // materialize the disjoint union of summands
    std::map<std::tuple<std::size_t, int, int>, int> element_id; // (edge idx, a class, b class)
    std::vector<EdgePath> element_path;                          // in |K| labels
    FrontierHomResult result;
    for (std::size_t e = 0; e < d.crossing_edges.size(); ++e) {
        auto [x, y] = d.crossing_edges[e];
        const HomSet& ha = hom_a.at(x);
        const HomSet& hb = hom_b.at(y);
        result.summands.push_back(SummandStat{d.crossing_edges[e], ha.size(), hb.size()});
        for (const auto& p : ha.classes) {
            for (const auto& q : hb.classes) {
                EdgePath full = relabel(ta, tk, p.representative);
                EdgePath tail = relabel(tb, tk, q.representative);
                full.insert(full.end(), tail.begin(), tail.end());
                element_id[{e, p.class_id, q.class_id}] = static_cast<int>(element_path.size());
                element_path.push_back(std::move(full));
            }
        }
    }

    std::map<std::pair<Vset, Vset>, std::size_t> edge_index;
    for (std::size_t e = 0; e < d.crossing_edges.size(); ++e) edge_index[d.crossing_edges[e]] = e;

    Dsu dsu(element_path.size());
    for (const auto& gen : d.relation_generators) {
        Vset a = gen[0], b = gen[1], c = gen[2];
        if (vset_size(b) <= m) {
            // a,b on the A side: (p.(a->b), q) in summand (b,c) ~ (p, q) in (a,c)
            const HomSet& ha_a = hom_a.at(a);
            const HomSet& ha_b = hom_a.at(b);
            const HomSet& hb_c = hom_b.at(c);
            std::size_t e_bc = edge_index.at({b, c});
            std::size_t e_ac = edge_index.at({a, c});
            for (const auto& p : ha_a.classes) {
                EdgePath ext = p.representative;
                ext.push_back(ta.label_of(b));
                int pb = ha_b.class_of(ext);
                for (const auto& q : hb_c.classes)
                    dsu.unite(element_id.at({e_bc, pb, q.class_id}),
                              element_id.at({e_ac, p.class_id, q.class_id}));
            }
        } else {
            // b,c on the B side: (p, (b->c).q) in summand (a,b) ~ (p, q) in (a,c)
            const HomSet& ha_a = hom_a.at(a);
            const HomSet& hb_b = hom_b.at(b);
            const HomSet& hb_c = hom_b.at(c);
            std::size_t e_ab = edge_index.at({a, b});
            std::size_t e_ac = edge_index.at({a, c});
            for (const auto& q : hb_c.classes) {
                EdgePath ext{tb.label_of(b)};
                ext.insert(ext.end(), q.representative.begin(), q.representative.end());
                int qb = hb_b.class_of(ext);
                for (const auto& p : ha_a.classes)
                    dsu.unite(element_id.at({e_ab, p.class_id, qb}),
                              element_id.at({e_ac, p.class_id, q.class_id}));
            }
        }
    }

    // collapse to classes with canonical (least) representatives
    std::map<int, EdgePath> reps;
    for (std::size_t i = 0; i < element_path.size(); ++i) {
        int r = dsu.find(static_cast<int>(i));
        auto it = reps.find(r);
        if (it == reps.end() || element_path[i] < it->second) reps[r] = element_path[i];
    }
    std::vector<EdgePath> ordered;
    for (auto& [r, rep] : reps) ordered.push_back(rep);
    std::sort(ordered.begin(), ordered.end());

    HomSet h;
    h.source = tk.label_of(u);
    h.target = tk.label_of(v);
    std::map<EdgePath, int> class_by_rep;
    for (std::size_t cidx = 0; cidx < ordered.size(); ++cidx) {
        class_by_rep[ordered[cidx]] = static_cast<int>(cidx);
        h.classes.push_back(Morphism{h.source, h.target, static_cast<int>(cidx), ordered[cidx]});
    }
    for (std::size_t i = 0; i < element_path.size(); ++i)
        h.membership[element_path[i]] = class_by_rep.at(reps.at(dsu.find(static_cast<int>(i))));

    result.hom = std::move(h);
    result.a_side_ms = a_ms;
    result.b_side_ms = b_ms;
    return result;
}

int heuristic_cut(const CubicalComplex& k, Vset u, Vset v) {
    int best = -1;
    std::size_t best_count = 0;
    for (int m = vset_size(u); m < vset_size(v) && m < k.ambient; ++m) {
        FrontierDecomposition d = frontier_split(k, m);
        if (best < 0 || d.crossing_edges.size() < best_count) {
            best = m;
            best_count = d.crossing_edges.size();
        }
    }
    if (best < 0) throw invalid_input("no cut separates the query vertices");
    return best;
}

} // namespace pathcat
