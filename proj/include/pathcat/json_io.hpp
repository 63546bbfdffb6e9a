#pragma once

#include <variant>

#include <json.hpp>

#include "pathcat/cubical.hpp"
#include "pathcat/frontier.hpp"
#include "pathcat/pathcat.hpp"
#include "pathcat/reduction.hpp"
#include "pathcat/refine.hpp"
#include "pathcat/simplicial.hpp"

namespace pathcat {

using json = nlohmann::json;
using AnyComplex = std::variant<CubicalComplex, SimplicialComplex>;

json to_json(const CubicalComplex& k);
json to_json(const SimplicialComplex& l);
json to_json(const PosetMono& alpha);
json to_json(const ReductionReport& report);
json to_json(const FrontierDecomposition& d, const std::vector<SummandStat>& summands);

// Dispatches on the "type" field; rejects invalid encodings (duplicate or
// unsorted set elements, bad intervals) with invalid_input.
AnyComplex parse_complex(const json& j);
CubicalComplex parse_cubical(const json& j);
SimplicialComplex parse_simplicial(const json& j);
PosetMono parse_mono(const json& j);

// {"objects":[...],"homs":[{"from","to","count","representatives"}]}
// Representatives are omitted when counts_only is set. Empty hom sets are
// not listed.
json category_json(const std::vector<int>& objects, const std::vector<HomSet>& homs,
                   bool counts_only);

} // namespace pathcat
