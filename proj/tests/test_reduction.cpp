#include <doctest.h>

#include <algorithm>
#include <random>

#include "pathcat/common.hpp"
#include "pathcat/generators.hpp"
#include "pathcat/pathcat.hpp"
#include "pathcat/reduction.hpp"
#include "pathcat/triangulate.hpp"
#include "pathcat/verify.hpp"

using namespace pathcat;

namespace {

Vset vs(std::initializer_list<int> elems, int ambient = 8) {
    return vset_from_elements(std::vector<int>(elems), ambient);
}

} // namespace

TEST_CASE("full subcomplex detection") {
    auto h30 = horn(3, 0);
    auto face = make_simplicial({{1, 2}, {1, 3}, {2, 3}});
    CHECK(is_full_subcomplex(face, h30));

    // spanning condition: {0,2} misses the edge (0,2) of the 2-simplex
    auto d2 = simplex(2);
    auto pair02 = make_simplicial({}, {0, 2});
    CHECK_FALSE(is_full_subcomplex(pair02, d2));

    // path closure: 0 -> 1 -> 2 escapes {0,2} when 1 is dropped
    auto chain = make_simplicial({{0, 1}, {1, 2}});
    CHECK_FALSE(is_full_subcomplex(pair02, chain));

    CHECK(is_full_subcomplex(chain, chain));
    CHECK_THROWS_AS(is_full_subcomplex(make_simplicial({{0, 3}}), chain), invalid_input);
}

TEST_CASE("interval restriction") {
    auto r = interval_restriction(necklace(3), 0, 2);
    CHECK(r.same_faces(make_simplicial({{0, 1}, {0, 2}, {1, 2}})));
    CHECK(interval_restriction(simplex(2), 0, 2).same_faces(simplex(2)));
    auto single = interval_restriction(simplex(2), 1, 1);
    CHECK(single.vertices == std::vector<int>{1});
    CHECK(single.edges.empty());
    CHECK_THROWS_AS(interval_restriction(simplex(2), 2, 1), invalid_input);
}

TEST_CASE("interval restrictions are full subcomplexes") {
    std::mt19937 rng(31);
    for (int t = 0; t < 20; ++t) {
        auto l = random_simplicial(rng);
        auto r = verify_interval_pass(l);
        CHECK_MESSAGE(r.ok(), (r.failures.empty() ? "" : r.failures.front()));
        CHECK(r.checked_pairs > 0);
    }
}

TEST_CASE("sources and sinks") {
    auto [src, snk] = sources_and_sinks(zigzag());
    CHECK(src == std::set<int>{0, 3});
    CHECK(snk == std::set<int>{1, 4});

    auto [s1, k1] = sources_and_sinks(interval_restriction(simplex(2), 1, 1));
    CHECK(s1 == std::set<int>{1}); // an isolated vertex is both
    CHECK(k1 == std::set<int>{1});

    auto [s2, k2] = sources_and_sinks(horn(3, 0));
    CHECK(s2 == std::set<int>{0});
    CHECK(k2 == std::set<int>{3});
}

TEST_CASE("vertex deletion") {
    auto del = delete_vertices(zigzag(), {0, 4});
    CHECK(del.vertices == std::vector<int>{1, 2, 3});
    CHECK(del.edges.empty());
    CHECK(delete_vertices(zigzag(), {}).same_faces(zigzag()));
    auto e = delete_vertices(boundary_simplex(2), {1});
    CHECK(e.same_faces(make_simplicial({{0, 2}})));
}

TEST_CASE("minimal path subcomplex") {
    auto [core, report] = minimal_path_subcomplex(horn(3, 0), 1, 3);
    CHECK(core.same_faces(make_simplicial({{1, 2}, {1, 3}, {2, 3}})));
    CHECK(report.removed.empty()); // the interval restriction already drops 0
    CHECK(report.pass == "source-sink");

    auto [zz, zrep] = minimal_path_subcomplex(zigzag(), 1, 3);
    CHECK(zz.edges.empty());
    for (int v : zz.vertices) CHECK((v == 1 || v == 3));

    auto [d2, drep] = minimal_path_subcomplex(simplex(2), 0, 2);
    CHECK(d2.same_faces(simplex(2)));
    CHECK(drep.iterations == 0);
}

TEST_CASE("iterated deletion agrees with the path-span construction") {
    std::mt19937 rng(41);
    for (int t = 0; t < 60; ++t) {
        auto l = random_simplicial(rng);
        int v = l.vertices.front(), w = l.vertices.back();
        auto [core, report] = minimal_path_subcomplex(l, v, w);
        auto span = path_span_subcomplex(l, v, w);
        // they may differ only in the isolated protected endpoints
        auto strip = [&](SimplicialComplex c) {
            std::set<int> isolated;
            for (int x : {v, w}) {
                bool touched = false;
                for (auto [a, b] : c.edges)
                    if (a == x || b == x) touched = true;
                if (c.has_vertex(x) && !touched) isolated.insert(x);
            }
            return delete_vertices(c, isolated);
        };
        CHECK(strip(core).same_faces(strip(span)));
        CHECK(hom_set(core, v, w).size() == hom_set(l, v, w).size());
    }
}

TEST_CASE("one-round source and sink deletion preserves interior homs") {
    std::mt19937 rng(43);
    for (int t = 0; t < 25; ++t) {
        auto l = random_simplicial(rng);
        auto r = verify_source_sink_pass(l);
        CHECK_MESSAGE(r.ok(), (r.failures.empty() ? "" : r.failures.front()));
    }
}

TEST_CASE("corner detection") {
    auto cube_corners = corners(hypercube(2));
    CHECK(cube_corners.size() == 4);

    GridSpec g21{2, 1, {}, {}};
    auto k = grid_complex(g21);
    auto cs = corners(k);
    CHECK(cs.size() == 4);
    CHECK(std::find(cs.begin(), cs.end(), grid_vertex(g21, 1, 0)) == cs.end());
    CHECK(std::find(cs.begin(), cs.end(), grid_vertex(g21, 0, 0)) != cs.end());

    auto flag_corners = corners(swiss_flag());
    CHECK(flag_corners.size() == 8);
}

TEST_CASE("single corner removal") {
    auto k = remove_corner(hypercube(2), vs({1}, 2));
    CHECK(k.maximal_cells ==
          std::vector<Interval>{{vs({}, 2), vs({2}, 2)}, {vs({2}, 2), vs({1, 2}, 2)}});

    auto k0 = remove_corner(hypercube(1), vs({1}, 1));
    CHECK(k0.maximal_cells == std::vector<Interval>{{0, 0}});

    GridSpec g21{2, 1, {}, {}};
    CHECK_THROWS_AS(remove_corner(grid_complex(g21), grid_vertex(g21, 1, 0)), invalid_input);
}

TEST_CASE("corner_reduce respects protected vertices") {
    Vset lo = 0, hi = vset_universe(2);
    auto [fixed, rep0] = corner_reduce(hypercube(2), {lo, vs({1}, 2), vs({2}, 2), hi});
    CHECK(fixed == hypercube(2));
    CHECK(rep0.iterations == 0);

    auto [reduced, rep] = corner_reduce(hypercube(2), {lo, hi});
    CHECK(!rep.removed.empty());
    auto verts = complex_vertices(reduced);
    CHECK(std::find(verts.begin(), verts.end(), lo) != verts.end());
    CHECK(std::find(verts.begin(), verts.end(), hi) != verts.end());
    auto t = triangulate_sk2(reduced);
    CHECK(hom_set(t.complex, t.label_of(lo), t.label_of(hi)).size() == 1);
}

TEST_CASE("corner removal preserves endpoint homs") {
    std::mt19937 rng(47);
    int done = 0;
    for (int t = 0; done < 20 && t < 200; ++t) {
        auto k = random_cubical(rng);
        if (complex_vertices(k).size() > 14) continue;
        auto r = verify_corner_pass(k);
        CHECK_MESSAGE(r.ok(), (r.failures.empty() ? "" : r.failures.front()));
        ++done;
    }
    CHECK(done == 20);

    for (int n = 1; n <= 3; ++n) {
        auto r = verify_corner_pass(hypercube(n));
        CHECK_MESSAGE(r.ok(), (r.failures.empty() ? "" : r.failures.front()));
    }
}
