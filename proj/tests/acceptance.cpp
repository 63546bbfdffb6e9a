// Acceptance gate: one pass/fail line per criterion, nonzero exit on any
// failure. Each criterion carries its own wall-clock budget.
#include <chrono>
#include <cstdio>
#include <random>
#include <set>
#include <string>

#include "pathcat/frontier.hpp"
#include "pathcat/generators.hpp"
#include "pathcat/pathcat.hpp"
#include "pathcat/reduction.hpp"
#include "pathcat/triangulate.hpp"
#include "pathcat/verify.hpp"

using namespace pathcat;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

struct Criterion {
    const char* name;
    double budget_s;
    Clock::time_point start = Clock::now();

    Criterion(const char* n, double budget) : name(n), budget_s(budget) {}

    void finish(bool ok, const std::string& detail) {
        double s = std::chrono::duration<double>(Clock::now() - start).count();
        if (s > budget_s) ok = false;
        std::printf("%s %s: %s (%.2fs, budget %.0fs)\n", ok ? "PASS" : "FAIL", name,
                    detail.c_str(), s, budget_s);
        if (!ok) ++failures;
    }
};

std::string first_failure(const VerifyResult& r) {
    return r.failures.empty() ? std::string() : " | " + r.failures.front();
}

void criterion_necklace() {
    Criterion c("1 necklace counts", 310); // 10s for k<=12, 300s for k=20
    bool ok = true;
    std::string detail;
    auto t0 = Clock::now();
    for (int k = 1; k <= 12 && ok; ++k) {
        auto l = necklace(k);
        std::uint64_t got = hom_set(l, 0, 2 * k).size();
        if (got != (std::uint64_t{1} << k)) {
            ok = false;
            detail = "k=" + std::to_string(k) + " gave " + std::to_string(got);
        }
    }
    double small_s = std::chrono::duration<double>(Clock::now() - t0).count();
    if (ok && small_s > 10) {
        ok = false;
        detail = "k<=12 sweep exceeded 10s";
    }
    std::uint64_t big = 0;
    if (ok) {
        big = hom_count(necklace(20), 0, 40);
        if (big != 1048576) {
            ok = false;
            detail = "k=20 count " + std::to_string(big);
        }
    }
    if (ok)
        detail = "2^k for k=1..12 (" + std::to_string(small_s).substr(0, 4) +
                 "s), k=20 count 1048576";
    c.finish(ok, detail);
}

void criterion_swiss_flag() {
    Criterion c("2 swiss flag", 60);
    CubicalComplex k = swiss_flag();
    Vset init = 0, term = vset_universe(6);
    bool ok = true;
    std::string detail;

    auto tk = triangulate_sk2(k);
    std::size_t before = hom_set(tk.complex, tk.label_of(init), tk.label_of(term)).size();
    if (before != 2) {
        ok = false;
        detail = "direct count " + std::to_string(before);
    }

    auto cs = corners(k);
    std::size_t aside = 0;
    for (Vset f : cs)
        if (f != init && f != term) ++aside;
    if (ok && aside < 6) {
        ok = false;
        detail = "only " + std::to_string(aside) + " corners aside from the endpoints";
    }

    auto [src, snk] = sources_and_sinks(tk.complex);
    if (ok && (src.size() != 2 || snk.size() != 2)) {
        ok = false;
        detail = "expected one extra source and one extra sink";
    }

    std::size_t after = 0;
    if (ok) {
        auto [reduced, report] = corner_reduce(k, {init, term});
        auto tr = triangulate_sk2(reduced);
        after = hom_set(tr.complex, tr.label_of(init), tr.label_of(term)).size();
        if (after != 2) {
            ok = false;
            detail = "count after corner_reduce " + std::to_string(after);
        }
    }
    if (ok)
        detail = "2 classes before and after corner_reduce, " + std::to_string(aside) +
                 " corners aside from endpoints, 1 extra source and sink";
    c.finish(ok, detail);
}

void criterion_cube_poset() {
    Criterion c("3 cube posets", 30);
    bool ok = true;
    std::string detail;
    std::size_t checked = 0;
    for (int n = 1; n <= 4 && ok; ++n) {
        auto t = triangulate_sk2(hypercube(n));
        int count = static_cast<int>(t.complex.vertices.size());
        for (int v = 0; v < count && ok; ++v)
            for (int w = v; w < count && ok; ++w) {
                std::size_t got = hom_set(t.complex, v, w).size();
                bool comparable = vset_subset(t.set_of(v), t.set_of(w));
                ++checked;
                if (got != (comparable ? 1u : 0u)) {
                    ok = false;
                    detail = "n=" + std::to_string(n) + " pair (" + std::to_string(v) + "," +
                             std::to_string(w) + ") count " + std::to_string(got);
                }
            }
    }
    if (ok) detail = "all " + std::to_string(checked) + " hom sets of size [F<=G]";
    c.finish(ok, detail);
}

void criterion_two_source_example() {
    Criterion c("4 two-source example", 10);
    auto l = zigzag();
    auto [v, w] = zigzag_query();
    bool ok = hom_set(l, v, w).size() == 0;
    auto [core, report] = minimal_path_subcomplex(l, v, w);
    if (!core.edges.empty()) ok = false;
    for (int x : core.vertices)
        if (x != v && x != w) ok = false;
    c.finish(ok, ok ? "empty hom set and the deletion process empties the complex"
                    : "unexpected surviving structure");
}

void criterion_fully_faithful_suite() {
    Criterion c("5 fully faithful suite", 300);
    bool ok = true;
    std::string detail;

    std::mt19937 rng(1234);
    VerifyResult total;
    for (int t = 0; t < 200 && ok; ++t) {
        auto l = random_simplicial(rng);
        auto r1 = verify_interval_pass(l);
        auto r2 = verify_source_sink_pass(l);
        total.merge(r1);
        total.merge(r2);
        if (!r1.ok() || !r2.ok()) {
            ok = false;
            detail = "simplicial seed run " + std::to_string(t) +
                     first_failure(r1.ok() ? r2 : r1);
        }
    }
    std::mt19937 rng_c(4321);
    for (int t = 0; t < 100 && ok; ++t) {
        auto k = random_cubical(rng_c, 4);
        auto r = verify_corner_pass(k);
        total.merge(r);
        if (!r.ok()) {
            ok = false;
            detail = "cubical run " + std::to_string(t) + first_failure(r);
        }
    }
    std::mt19937 rng_m(2468);
    for (int t = 0; t < 50 && ok; ++t) {
        auto k = random_cubical(rng_m, 3);
        auto alpha = random_mono(rng_m, k.ambient, 5);
        auto r = verify_refine_pass(k, alpha);
        total.merge(r);
        if (!r.ok()) {
            ok = false;
            detail = "refine run " + std::to_string(t) + first_failure(r);
        }
    }
    if (ok)
        detail = "200 simplicial x {interval, source-sink}, 100 cubical x corner, "
                 "50 refinements; " +
                 std::to_string(total.checked_pairs) + " hom pairs bijective";
    c.finish(ok, detail);
}

void criterion_coequalizer_suite() {
    Criterion c("6 coequalizer suite", 300);
    bool ok = true;
    std::string detail;
    VerifyResult total;

    std::vector<std::pair<std::string, CubicalComplex>> fixtures;
    for (int n = 1; n <= 4; ++n)
        fixtures.emplace_back("hypercube " + std::to_string(n), hypercube(n));
    fixtures.emplace_back("swiss flag", swiss_flag());
    fixtures.emplace_back("grid 2x2", grid_complex(GridSpec{2, 2, {}, {}}));
    for (auto& [name, k] : fixtures) {
        auto r = verify_frontier_pass(k);
        total.merge(r);
        if (!r.ok()) {
            ok = false;
            detail = name + first_failure(r);
            break;
        }
    }
    std::mt19937 rng(97531);
    for (int t = 0; t < 50 && ok; ++t) {
        auto r = verify_frontier_pass(random_cubical(rng, 5));
        total.merge(r);
        if (!r.ok()) {
            ok = false;
            detail = "random run " + std::to_string(t) + first_failure(r);
        }
    }
    if (ok)
        detail = "fixtures + 50 random complexes, all cuts and separated pairs; " +
                 std::to_string(total.checked_pairs) + " pairs agree";
    c.finish(ok, detail);
}

void criterion_level_suite() {
    Criterion c("7 level subcomplex suite", 300);
    bool ok = true;
    std::string detail;
    VerifyResult total;

    std::vector<CubicalComplex> fixtures;
    for (int n = 1; n <= 4; ++n) fixtures.push_back(hypercube(n));
    fixtures.push_back(swiss_flag());
    fixtures.push_back(grid_complex(GridSpec{2, 2, {}, {}}));
    std::mt19937 rng(86420);
    for (int t = 0; t < 100; ++t) fixtures.push_back(random_cubical(rng, 5));

    for (std::size_t i = 0; i < fixtures.size() && ok; ++i) {
        auto r = verify_level_pass(fixtures[i]);
        total.merge(r);
        if (!r.ok()) {
            ok = false;
            detail = "fixture " + std::to_string(i) + first_failure(r);
        }
    }
    if (ok)
        detail = "all (r,s) on fixtures + 100 random complexes; " +
                 std::to_string(total.checked_pairs) + " checks";
    c.finish(ok, detail);
}

void criterion_skeleton_suite() {
    Criterion c("8 skeleton suite", 120);
    bool ok = true;
    std::string detail;
    VerifyResult total;

    std::vector<std::pair<std::string, CubicalComplex>> fixtures;
    for (int n = 1; n <= 3; ++n)
        fixtures.emplace_back("hypercube " + std::to_string(n), hypercube(n));
    fixtures.emplace_back("grid 2x1", grid_complex(GridSpec{2, 1, {}, {}}));
    std::mt19937 rng(13579);
    for (int t = 0; t < 20; ++t)
        fixtures.emplace_back("random " + std::to_string(t), random_cubical(rng, 3));

    for (auto& [name, k] : fixtures) {
        auto r = verify_skeleton_pass(k);
        total.merge(r);
        if (!r.ok()) {
            ok = false;
            detail = name + first_failure(r);
            break;
        }
    }
    if (ok)
        detail = "2-skeletal and 3-simplex-extended triangulations agree; " +
                 std::to_string(total.checked_pairs) + " hom pairs";
    c.finish(ok, detail);
}

} // namespace

int main() {
    criterion_necklace();
    criterion_swiss_flag();
    criterion_cube_poset();
    criterion_two_source_example();
    criterion_fully_faithful_suite();
    criterion_coequalizer_suite();
    criterion_level_suite();
    criterion_skeleton_suite();
    std::printf("%s: %d criterion(s) failed\n", failures == 0 ? "ALL PASS" : "FAILED", failures);
    return failures == 0 ? 0 : 1;
}
