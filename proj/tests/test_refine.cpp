#include <doctest.h>

#include <random>

#include "pathcat/common.hpp"
#include "pathcat/generators.hpp"
#include "pathcat/refine.hpp"
#include "pathcat/verify.hpp"

using namespace pathcat;

namespace {

PosetMono doubling() {
    PosetMono a;
    a.source_dim = 1;
    a.target_dim = 2;
    a.image_of_empty = 0;
    a.singleton_images = {vset_universe(2)}; // {1} -> {1,2}
    return a;
}

} // namespace

TEST_CASE("monomorphism validation") {
    CHECK(validate_mono(doubling()).empty());
    CHECK(validate_mono(PosetMono::identity(4)).empty());

    PosetMono overlap;
    overlap.source_dim = overlap.target_dim = 2;
    overlap.singleton_images = {vset_universe(2), vset_universe(2)};
    CHECK_FALSE(validate_mono(overlap).empty()); // blocks intersect

    PosetMono empty_block;
    empty_block.source_dim = 1;
    empty_block.target_dim = 2;
    empty_block.image_of_empty = vset_from_elements({1}, 2);
    empty_block.singleton_images = {vset_from_elements({1}, 2)};
    CHECK_FALSE(validate_mono(empty_block).empty());

    PosetMono not_monotone;
    not_monotone.source_dim = 1;
    not_monotone.target_dim = 2;
    not_monotone.image_of_empty = vset_from_elements({1}, 2);
    not_monotone.singleton_images = {vset_from_elements({2}, 2)}; // drops alpha({})
    CHECK_FALSE(validate_mono(not_monotone).empty());
}

TEST_CASE("valid monos preserve meets, joins and are injective") {
    std::mt19937 rng(53);
    for (int t = 0; t < 30; ++t) {
        int m = 1 + static_cast<int>(rng() % 3);
        PosetMono a = random_mono(rng, m);
        REQUIRE(validate_mono(a).empty());
        Vset top = vset_universe(m);
        for (Vset x = 0; x <= top; ++x)
            for (Vset y = 0; y <= top; ++y) {
                CHECK(a.apply(x & y) == (a.apply(x) & a.apply(y)));
                CHECK(a.apply(x | y) == (a.apply(x) | a.apply(y)));
                if (x != y) CHECK(a.apply(x) != a.apply(y));
            }
    }
}

TEST_CASE("cell images") {
    PosetMono a = doubling();
    CHECK(apply_mono(a, Interval{0, vset_universe(1)}) == Interval{0, vset_universe(2)});
    CHECK_THROWS_AS(apply_mono(a, Interval{0, vset_universe(2)}), invalid_input);
}

TEST_CASE("refinement of complexes") {
    CHECK(refine(hypercube(1), doubling()) == hypercube(2));
    CHECK(refine(hypercube(3), PosetMono::identity(3)) == hypercube(3));
    CHECK_THROWS_AS(refine(hypercube(2), doubling()), invalid_input);

    CHECK(is_refinement(hypercube(1), doubling(), hypercube(2)));
    // the refined square is not contained in a complex missing the 2-cell
    CubicalComplex hollow = make_cubical(
        2, {{0, vset_from_elements({1}, 2)}, {vset_from_elements({1}, 2), vset_universe(2)}});
    CHECK_FALSE(is_refinement(hypercube(1), doubling(), hollow));
}

TEST_CASE("refinement composes functorially") {
    std::mt19937 rng(59);
    for (int t = 0; t < 25; ++t) {
        auto k = random_cubical(rng, 3);
        PosetMono a = random_mono(rng, k.ambient, 4);
        PosetMono b = random_mono(rng, a.target_dim, 6);

        PosetMono ba;
        ba.source_dim = a.source_dim;
        ba.target_dim = b.target_dim;
        ba.image_of_empty = b.apply(a.image_of_empty);
        for (Vset img : a.singleton_images) ba.singleton_images.push_back(b.apply(img));
        REQUIRE(validate_mono(ba).empty());

        CHECK(refine(refine(k, a), b) == refine(k, ba));
    }
}

TEST_CASE("refinement preserves hom sets") {
    std::mt19937 rng(61);
    for (int t = 0; t < 15; ++t) {
        auto k = random_cubical(rng, 3);
        PosetMono a = random_mono(rng, k.ambient, 5);
        auto r = verify_refine_pass(k, a);
        CHECK_MESSAGE(r.ok(), (r.failures.empty() ? "" : r.failures.front()));
    }
    auto r = verify_refine_pass(hypercube(1), doubling());
    CHECK_MESSAGE(r.ok(), (r.failures.empty() ? "" : r.failures.front()));
}
