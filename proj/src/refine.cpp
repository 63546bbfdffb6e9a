#include "pathcat/refine.hpp"

#include "pathcat/common.hpp"

namespace pathcat {

Vset PosetMono::apply(Vset a) const {
    Vset out = image_of_empty;
    Vset m = a;
    while (m) {
        int i = std::countr_zero(m);
        out |= singleton_images[static_cast<std::size_t>(i)];
        m &= m - 1;
    }
    return out;
}

PosetMono PosetMono::identity(int n) {
    PosetMono a;
    a.source_dim = a.target_dim = n;
    a.image_of_empty = 0;
    for (int i = 1; i <= n; ++i) a.singleton_images.push_back(Vset{1} << (i - 1));
    return a;
}

std::vector<std::string> validate_mono(const PosetMono& alpha) {
    std::vector<std::string> bad;
    if (alpha.source_dim < 1 || alpha.source_dim > kMaxAmbient)
        bad.push_back("source dimension out of range");
    if (alpha.target_dim < 1 || alpha.target_dim > kMaxAmbient)
        bad.push_back("target dimension out of range");
    if (static_cast<int>(alpha.singleton_images.size()) != alpha.source_dim)
        bad.push_back("expected one singleton image per source element");
    if (!bad.empty()) return bad;

    Vset universe = vset_universe(alpha.target_dim);
    if (!vset_subset(alpha.image_of_empty, universe))
        bad.push_back("image of empty set outside target poset");
    Vset used = 0;
    for (int i = 1; i <= alpha.source_dim; ++i) {
        Vset img = alpha.singleton_images[static_cast<std::size_t>(i - 1)];
        if (!vset_subset(img, universe))
            bad.push_back("image of {" + std::to_string(i) + "} outside target poset");
        if (!vset_subset(alpha.image_of_empty, img))
            bad.push_back("image of {" + std::to_string(i) + "} does not contain the image of {}");
        Vset block = img & ~alpha.image_of_empty;
        if (block == 0)
            bad.push_back("block of {" + std::to_string(i) + "} is empty");
        if (block & used)
            bad.push_back("block of {" + std::to_string(i) + "} intersects an earlier block");
        used |= block;
    }
    return bad;
}

Interval apply_mono(const PosetMono& alpha, const Interval& cell) {
    if (!validate_mono(alpha).empty()) throw invalid_input("invalid poset monomorphism");
    if (!vset_subset(cell.upper, vset_universe(alpha.source_dim)))
        throw invalid_input("cell outside the source poset of the monomorphism");
    return Interval{alpha.apply(cell.lower), alpha.apply(cell.upper)};
}

CubicalComplex refine(const CubicalComplex& k, const PosetMono& alpha) {
    if (k.ambient != alpha.source_dim)
        throw invalid_input("ambient dimension of the complex does not match the monomorphism");
    std::vector<Interval> cells;
    for (const auto& c : k.maximal_cells) cells.push_back(apply_mono(alpha, c));
    return make_cubical(alpha.target_dim, std::move(cells));
}

bool is_refinement(const CubicalComplex& k, const PosetMono& alpha, const CubicalComplex& l) {
    if (l.ambient != alpha.target_dim)
        throw invalid_input("target complex ambient does not match the monomorphism");
    CubicalComplex ka = refine(k, alpha);
    for (const auto& c : ka.maximal_cells)
        if (!complex_contains(l, c)) return false;
    return true;
}

} // namespace pathcat
