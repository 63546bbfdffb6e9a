#include <doctest.h>

#include <random>

#include "pathcat/common.hpp"
#include "pathcat/generators.hpp"
#include "pathcat/json_io.hpp"
#include "pathcat/pathcat.hpp"

using namespace pathcat;

TEST_CASE("cubical complexes round-trip through JSON") {
    std::mt19937 rng(73);
    for (int t = 0; t < 40; ++t) {
        CubicalComplex k = random_cubical(rng);
        json j = to_json(k);
        CHECK(j["type"] == "cubical");
        auto back = parse_cubical(json::parse(j.dump()));
        CHECK(back == k);
    }
    CHECK(std::get<CubicalComplex>(parse_complex(to_json(swiss_flag()))) == swiss_flag());
}

TEST_CASE("simplicial complexes round-trip through JSON") {
    std::mt19937 rng(79);
    for (int t = 0; t < 40; ++t) {
        SimplicialComplex l = random_simplicial(rng);
        auto back = parse_simplicial(json::parse(to_json(l).dump()));
        CHECK(back.same_faces(l));
        CHECK(back.maximal_simplices == l.maximal_simplices);
    }
}

TEST_CASE("poset monomorphisms round-trip through JSON") {
    std::mt19937 rng(83);
    for (int t = 0; t < 30; ++t) {
        PosetMono a = random_mono(rng, 1 + static_cast<int>(rng() % 3));
        PosetMono back = parse_mono(json::parse(to_json(a).dump()));
        CHECK(back.source_dim == a.source_dim);
        CHECK(back.target_dim == a.target_dim);
        CHECK(back.image_of_empty == a.image_of_empty);
        CHECK(back.singleton_images == a.singleton_images);
    }
}

TEST_CASE("invalid encodings are rejected") {
    CHECK_THROWS_AS(parse_complex(json::parse(R"({"vertices":[]})")), invalid_input);
    CHECK_THROWS_AS(parse_complex(json::parse(R"({"type":"poset"})")), invalid_input);
    CHECK_THROWS_AS(
        parse_cubical(json::parse(R"({"type":"cubical","ambient":2,
                                      "maximal_cells":[{"A":[1,1],"B":[1,2]}]})")),
        invalid_input);
    CHECK_THROWS_AS(
        parse_cubical(json::parse(R"({"type":"cubical","ambient":2,
                                      "maximal_cells":[{"A":[2,1],"B":[1,2]}]})")),
        invalid_input);
    CHECK_THROWS_AS(
        parse_cubical(json::parse(R"({"type":"cubical","ambient":1,
                                      "maximal_cells":[{"A":[1],"B":[]}]})")),
        invalid_input);
    CHECK_THROWS_AS(
        parse_simplicial(json::parse(R"({"type":"simplicial","vertices":[0,1],
                                         "maximal_simplices":[[0,2]]})")),
        invalid_input);
    CHECK_THROWS_AS(
        parse_mono(json::parse(R"({"m":2,"n":2,"singletons":{"1":[1,2],"2":[2]}})")),
        invalid_input);
}

TEST_CASE("reduction reports and decompositions serialize") {
    ReductionReport rep;
    rep.pass = "corner";
    rep.removed = {"{}", "{1}"};
    rep.iterations = 2;
    json j = to_json(rep);
    CHECK(j["pass"] == "corner");
    CHECK(j["removed"].size() == 2);
    CHECK(j["iterations"] == 2);
}

TEST_CASE("category serialization") {
    auto c = path_category(boundary_simplex(2));
    std::vector<HomSet> homs;
    for (const auto& [key, h] : c.homs) homs.push_back(h);
    json j = category_json(c.objects, homs, false);
    CHECK(j["objects"] == json({0, 1, 2}));
    // (0,0),(0,1),(0,2),(1,1),(1,2),(2,2) all non-empty
    CHECK(j["homs"].size() == 6);
    for (const auto& h : j["homs"])
        CHECK(h["representatives"].size() == h["count"].get<std::size_t>());
    json counts = category_json(c.objects, homs, true);
    for (const auto& h : counts["homs"]) CHECK(!h.contains("representatives"));
}
