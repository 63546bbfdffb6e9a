#include "pathcat/vertexset.hpp"

#include "pathcat/common.hpp"

namespace pathcat {

Vset vset_from_elements(const std::vector<int>& elems, int ambient) {
    Vset f = 0;
    for (int e : elems) {
        if (e < 1 || e > ambient)
            throw invalid_input("vertex element " + std::to_string(e) +
                                " outside 1.." + std::to_string(ambient));
        Vset bit = Vset{1} << (e - 1);
        if (f & bit)
            throw invalid_input("duplicate element " + std::to_string(e) + " in vertex set");
        f |= bit;
    }
    return f;
}

std::vector<int> vset_elements(Vset f) {
    std::vector<int> out;
    while (f) {
        int i = std::countr_zero(f);
        out.push_back(i + 1);
        f &= f - 1;
    }
    return out;
}

std::string vset_to_string(Vset f) {
    std::string s = "{";
    bool first = true;
    for (int e : vset_elements(f)) {
        if (!first) s += ",";
        s += std::to_string(e);
        first = false;
    }
    return s + "}";
}

bool vset_canonical_less(Vset a, Vset b) {
    int sa = vset_size(a), sb = vset_size(b);
    if (sa != sb) return sa < sb;
    // Lexicographic comparison of sorted element lists: repeatedly compare
    // the smallest remaining element.
    Vset x = a, y = b;
    while (x && y) {
        int ex = std::countr_zero(x), ey = std::countr_zero(y);
        if (ex != ey) return ex < ey;
        x &= x - 1;
        y &= y - 1;
    }
    return false; // equal cardinality, identical prefixes => equal sets
}

} // namespace pathcat
