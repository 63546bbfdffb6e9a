#include "pathcat/json_io.hpp"

#include <algorithm>

#include "pathcat/common.hpp"

namespace pathcat {

namespace {

json elements_json(Vset f) { return json(vset_elements(f)); }

std::vector<int> int_list(const json& j, const char* what) {
    if (!j.is_array()) throw invalid_input(std::string(what) + " must be an array");
    std::vector<int> out;
    for (const auto& e : j) {
        if (!e.is_number_integer()) throw invalid_input(std::string(what) + " must hold integers");
        out.push_back(e.get<int>());
    }
    for (std::size_t i = 1; i < out.size(); ++i)
        if (out[i - 1] >= out[i])
            throw invalid_input(std::string(what) + " must be sorted ascending without duplicates");
    return out;
}

} // namespace

json to_json(const CubicalComplex& k) {
    json cells = json::array();
    for (const auto& c : k.maximal_cells)
        cells.push_back({{"A", elements_json(c.lower)}, {"B", elements_json(c.upper)}});
    return json{{"type", "cubical"}, {"ambient", k.ambient}, {"maximal_cells", cells}};
}

json to_json(const SimplicialComplex& l) {
    json simps = json::array();
    for (const auto& s : l.maximal_simplices) simps.push_back(json(s));
    return json{{"type", "simplicial"}, {"vertices", json(l.vertices)}, {"maximal_simplices", simps}};
}

json to_json(const PosetMono& alpha) {
    json singles = json::object();
    for (int i = 1; i <= alpha.source_dim; ++i)
        singles[std::to_string(i)] =
            elements_json(alpha.singleton_images[static_cast<std::size_t>(i - 1)]);
    return json{{"m", alpha.source_dim},
                {"n", alpha.target_dim},
                {"empty", elements_json(alpha.image_of_empty)},
                {"singletons", singles}};
}

json to_json(const ReductionReport& report) {
    return json{{"pass", report.pass}, {"removed", json(report.removed)},
                {"iterations", report.iterations}};
}

json to_json(const FrontierDecomposition& d, const std::vector<SummandStat>& summands) {
    json edges = json::array();
    for (auto [x, y] : d.crossing_edges)
        edges.push_back(json::array({elements_json(x), elements_json(y)}));
    json sums = json::array();
    for (const auto& s : summands)
        sums.push_back({{"edge", json::array({elements_json(s.edge.first), elements_json(s.edge.second)})},
                        {"a_count", s.a_count},
                        {"b_count", s.b_count}});
    return json{{"cut", d.cut}, {"crossing_edges", edges}, {"summands", sums}};
}

CubicalComplex parse_cubical(const json& j) {
    if (!j.contains("ambient") || !j["ambient"].is_number_integer())
        throw invalid_input("cubical complex needs an integer \"ambient\" field");
    int ambient = j["ambient"].get<int>();
    if (ambient < 1 || ambient > kMaxAmbient)
        throw invalid_input("ambient dimension must be in 1.." + std::to_string(kMaxAmbient));
    if (!j.contains("maximal_cells"))
        throw invalid_input("cubical complex needs a \"maximal_cells\" field");
    std::vector<Interval> cells;
    for (const auto& c : j["maximal_cells"]) {
        if (!c.contains("A") || !c.contains("B"))
            throw invalid_input("each cell needs \"A\" and \"B\"");
        Vset a = vset_from_elements(int_list(c["A"], "cell bound A"), ambient);
        Vset b = vset_from_elements(int_list(c["B"], "cell bound B"), ambient);
        if (!vset_subset(a, b)) throw invalid_input("cell lower bound not contained in upper bound");
        cells.push_back({a, b});
    }
    return make_cubical(ambient, std::move(cells));
}

SimplicialComplex parse_simplicial(const json& j) {
    if (!j.contains("vertices")) throw invalid_input("simplicial complex needs \"vertices\"");
    std::vector<int> vertices = int_list(j["vertices"], "vertices");
    std::vector<std::vector<int>> maximal;
    if (j.contains("maximal_simplices"))
        for (const auto& s : j["maximal_simplices"]) maximal.push_back(int_list(s, "simplex"));
    SimplicialComplex l = make_simplicial(std::move(maximal), vertices);
    for (int v : l.vertices)
        if (!std::binary_search(vertices.begin(), vertices.end(), v))
            throw invalid_input("simplex uses undeclared vertex " + std::to_string(v));
    return l;
}

AnyComplex parse_complex(const json& j) {
    if (!j.is_object() || !j.contains("type") || !j["type"].is_string())
        throw invalid_input("complex file needs a \"type\" field");
    std::string type = j["type"].get<std::string>();
    if (type == "cubical") return parse_cubical(j);
    if (type == "simplicial") return parse_simplicial(j);
    throw invalid_input("unknown complex type: " + type);
}

PosetMono parse_mono(const json& j) {
    if (!j.contains("m") || !j.contains("n"))
        throw invalid_input("poset monomorphism needs \"m\" and \"n\"");
    PosetMono a;
    a.source_dim = j["m"].get<int>();
    a.target_dim = j["n"].get<int>();
    if (a.source_dim < 1 || a.target_dim < 1 || a.target_dim > kMaxAmbient)
        throw invalid_input("monomorphism dimensions out of range");
    a.image_of_empty =
        j.contains("empty") ? vset_from_elements(int_list(j["empty"], "empty image"), a.target_dim) : 0;
    a.singleton_images.assign(static_cast<std::size_t>(a.source_dim), 0);
    if (!j.contains("singletons")) throw invalid_input("poset monomorphism needs \"singletons\"");
    for (int i = 1; i <= a.source_dim; ++i) {
        std::string key = std::to_string(i);
        if (!j["singletons"].contains(key))
            throw invalid_input("missing singleton image for " + key);
        a.singleton_images[static_cast<std::size_t>(i - 1)] =
            vset_from_elements(int_list(j["singletons"][key], "singleton image"), a.target_dim);
    }
    auto bad = validate_mono(a);
    if (!bad.empty()) throw invalid_input("invalid poset monomorphism: " + bad.front());
    return a;
}

json category_json(const std::vector<int>& objects, const std::vector<HomSet>& homs,
                   bool counts_only) {
    json hs = json::array();
    for (const auto& h : homs) {
        if (h.classes.empty()) continue;
        json entry{{"from", h.source}, {"to", h.target}, {"count", h.classes.size()}};
        if (!counts_only) {
            json reps = json::array();
            for (const auto& m : h.classes) reps.push_back(json(m.representative));
            entry["representatives"] = reps;
        }
        hs.push_back(entry);
    }
    return json{{"objects", json(objects)}, {"homs", hs}};
}

} // namespace pathcat
