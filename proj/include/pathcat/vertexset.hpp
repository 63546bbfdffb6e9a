#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace pathcat {

// A vertex of the ambient cube: a subset of {1,...,n}, n <= 64, packed as a
// bit mask with element i stored in bit (i-1).
using Vset = std::uint64_t;

constexpr int kMaxAmbient = 64;

inline int vset_size(Vset f) { return std::popcount(f); }

inline bool vset_subset(Vset a, Vset b) { return (a & ~b) == 0; }

inline Vset vset_universe(int n) {
    return n == 64 ? ~Vset{0} : ((Vset{1} << n) - 1);
}

Vset vset_from_elements(const std::vector<int>& elems, int ambient);
std::vector<int> vset_elements(Vset f);
std::string vset_to_string(Vset f);

// Linear extension of the subset order: first by cardinality, ties broken
// lexicographically on the sorted element lists.
bool vset_canonical_less(Vset a, Vset b);

} // namespace pathcat
