#include "pathcat/cubical.hpp"

#include <algorithm>
#include <set>

#include "pathcat/common.hpp"

namespace pathcat {

bool interval_canonical_less(const Interval& a, const Interval& b) {
    if (a.lower != b.lower) return vset_canonical_less(a.lower, b.lower);
    if (a.upper != b.upper) return vset_canonical_less(a.upper, b.upper);
    return false;
}

std::vector<Interval> maximalize(std::vector<Interval> cells) {
    std::sort(cells.begin(), cells.end(), interval_canonical_less);
    cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
    std::vector<Interval> out;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        bool dominated = false;
        for (std::size_t j = 0; j < cells.size() && !dominated; ++j)
            if (i != j && interval_subset(cells[i], cells[j]) && cells[i] != cells[j])
                dominated = true;
        if (!dominated) out.push_back(cells[i]);
    }
    return out;
}

CubicalComplex make_cubical(int ambient, std::vector<Interval> cells) {
    if (ambient < 1 || ambient > kMaxAmbient)
        throw invalid_input("ambient dimension must be in 1.." + std::to_string(kMaxAmbient));
    Vset universe = vset_universe(ambient);
    for (const auto& c : cells) {
        if (!vset_subset(c.lower, c.upper))
            throw invalid_input("interval lower bound not contained in upper bound");
        if (!vset_subset(c.upper, universe))
            throw invalid_input("interval exceeds ambient dimension");
    }
    return CubicalComplex{ambient, maximalize(std::move(cells))};
}

std::vector<Vset> interval_members(const Interval& cell) {
    Vset diff = cell.upper & ~cell.lower;
    std::vector<Vset> out;
    // Enumerate subsets of upper \ lower via the standard submask walk.
    Vset sub = 0;
    while (true) {
        out.push_back(cell.lower | sub);
        if (sub == diff) break;
        sub = (sub - diff) & diff;
    }
    std::sort(out.begin(), out.end(), vset_canonical_less);
    return out;
}

bool complex_contains(const CubicalComplex& k, const Interval& cell) {
    if (!vset_subset(cell.upper, vset_universe(k.ambient)))
        throw invalid_input("cell references elements outside 1.." + std::to_string(k.ambient));
    for (const auto& m : k.maximal_cells)
        if (interval_subset(cell, m)) return true;
    return false;
}

std::vector<Vset> complex_vertices(const CubicalComplex& k) {
    std::set<Vset> seen;
    for (const auto& c : k.maximal_cells)
        for (Vset f : interval_members(c)) seen.insert(f);
    std::vector<Vset> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end(), vset_canonical_less);
    return out;
}

std::vector<std::string> validate(const CubicalComplex& k) {
    std::vector<std::string> bad;
    if (k.ambient < 1 || k.ambient > kMaxAmbient)
        bad.push_back("ambient dimension outside 1.." + std::to_string(kMaxAmbient));
    Vset universe = vset_universe(std::clamp(k.ambient, 1, kMaxAmbient));
    for (const auto& c : k.maximal_cells) {
        if (!vset_subset(c.lower, c.upper))
            bad.push_back("lower not contained in upper: [" + vset_to_string(c.lower) + "," +
                          vset_to_string(c.upper) + "]");
        if (!vset_subset(c.upper, universe))
            bad.push_back("cell outside ambient poset: [" + vset_to_string(c.lower) + "," +
                          vset_to_string(c.upper) + "]");
    }
    for (std::size_t i = 0; i < k.maximal_cells.size(); ++i)
        for (std::size_t j = 0; j < k.maximal_cells.size(); ++j)
            if (i != j && interval_subset(k.maximal_cells[i], k.maximal_cells[j]))
                bad.push_back("maximal cell contained in another: [" +
                              vset_to_string(k.maximal_cells[i].lower) + "," +
                              vset_to_string(k.maximal_cells[i].upper) + "]");
    return bad;
}

CubicalComplex hypercube(int n) {
    return make_cubical(n, {Interval{0, vset_universe(n)}});
}

} // namespace pathcat
