#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pathcat/common.hpp"
#include "pathcat/frontier.hpp"
#include "pathcat/generators.hpp"
#include "pathcat/json_io.hpp"
#include "pathcat/pathcat.hpp"
#include "pathcat/reduction.hpp"
#include "pathcat/refine.hpp"
#include "pathcat/triangulate.hpp"
#include "pathcat/verify.hpp"

namespace py = pybind11;
using namespace pathcat;

namespace {

std::vector<int> to_elems(Vset f) { return vset_elements(f); }

Vset from_elems(const std::vector<int>& e, int ambient) {
    std::vector<int> sorted = e;
    std::sort(sorted.begin(), sorted.end());
    return vset_from_elements(sorted, ambient);
}

CubicalComplex cubical_from_lists(int ambient,
                                  const std::vector<std::pair<std::vector<int>, std::vector<int>>>& cells) {
    std::vector<Interval> ivs;
    for (const auto& [a, b] : cells) ivs.push_back({from_elems(a, ambient), from_elems(b, ambient)});
    return make_cubical(ambient, std::move(ivs));
}

} // namespace

PYBIND11_MODULE(_pathcat, m) {
    m.doc() = "path categories of finite cubical and simplicial complexes";

    py::register_exception<invalid_input>(m, "InvalidInput", PyExc_ValueError);

    py::class_<SimplicialComplex>(m, "SimplicialComplex")
        .def(py::init([](const std::vector<std::vector<int>>& maximal,
                         const std::vector<int>& vertices) {
                 return make_simplicial(maximal, vertices);
             }),
             py::arg("maximal_simplices"), py::arg("vertices") = std::vector<int>{})
        .def_readonly("vertices", &SimplicialComplex::vertices)
        .def_readonly("edges", &SimplicialComplex::edges)
        .def_readonly("triangles", &SimplicialComplex::triangles)
        .def_readonly("maximal_simplices", &SimplicialComplex::maximal_simplices)
        .def("__eq__", [](const SimplicialComplex& a, const SimplicialComplex& b) {
            return a.same_faces(b);
        })
        .def("__repr__", [](const SimplicialComplex& l) {
            return "<SimplicialComplex " + std::to_string(l.vertices.size()) + " vertices, " +
                   std::to_string(l.edges.size()) + " edges, " +
                   std::to_string(l.triangles.size()) + " triangles>";
        });

    py::class_<CubicalComplex>(m, "CubicalComplex")
        .def(py::init(&cubical_from_lists), py::arg("ambient"), py::arg("maximal_cells"))
        .def_readonly("ambient", &CubicalComplex::ambient)
        .def_property_readonly("maximal_cells",
                               [](const CubicalComplex& k) {
                                   std::vector<std::pair<std::vector<int>, std::vector<int>>> out;
                                   for (const auto& c : k.maximal_cells)
                                       out.emplace_back(to_elems(c.lower), to_elems(c.upper));
                                   return out;
                               })
        .def_property_readonly("vertices",
                               [](const CubicalComplex& k) {
                                   std::vector<std::vector<int>> out;
                                   for (Vset f : complex_vertices(k)) out.push_back(to_elems(f));
                                   return out;
                               })
        .def("__eq__", [](const CubicalComplex& a, const CubicalComplex& b) { return a == b; })
        .def("__repr__", [](const CubicalComplex& k) {
            return "<CubicalComplex ambient " + std::to_string(k.ambient) + ", " +
                   std::to_string(k.maximal_cells.size()) + " maximal cells>";
        });

    py::class_<Triangulation>(m, "Triangulation")
        .def_readonly("complex", &Triangulation::complex)
        .def_property_readonly("vertex_sets",
                               [](const Triangulation& t) {
                                   std::vector<std::vector<int>> out;
                                   for (Vset f : t.label_to_set) out.push_back(to_elems(f));
                                   return out;
                               })
        .def("label_of", [](const Triangulation& t, const std::vector<int>& f) {
            return t.label_of(from_elems(f, 64));
        })
        .def("set_of", [](const Triangulation& t, int label) { return to_elems(t.set_of(label)); });

    py::class_<PosetMono>(m, "PosetMono")
        .def(py::init([](int source_dim, int target_dim, const std::vector<int>& empty,
                         const std::vector<std::vector<int>>& singletons) {
                 PosetMono a;
                 a.source_dim = source_dim;
                 a.target_dim = target_dim;
                 a.image_of_empty = from_elems(empty, target_dim);
                 for (const auto& s : singletons) a.singleton_images.push_back(from_elems(s, target_dim));
                 auto bad = validate_mono(a);
                 if (!bad.empty()) throw invalid_input(bad.front());
                 return a;
             }),
             py::arg("source_dim"), py::arg("target_dim"), py::arg("empty"), py::arg("singletons"))
        .def_readonly("source_dim", &PosetMono::source_dim)
        .def_readonly("target_dim", &PosetMono::target_dim)
        .def("apply", [](const PosetMono& a, const std::vector<int>& f) {
            return to_elems(a.apply(from_elems(f, a.source_dim)));
        });

    // generators
    m.def("necklace", &necklace, py::arg("beads"));
    m.def("hypercube", &hypercube, py::arg("n"));
    m.def("simplex", &simplex, py::arg("n"));
    m.def("boundary_simplex", &boundary_simplex, py::arg("n"));
    m.def("horn", &horn, py::arg("n"), py::arg("k"));
    m.def("zigzag", &zigzag);
    m.def("swiss_flag", &swiss_flag);
    m.def(
        "grid",
        [](int w, int h, const std::vector<std::pair<int, int>>& holes,
           const std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>>& missing) {
            GridSpec spec;
            spec.width = w;
            spec.height = h;
            spec.holes = holes;
            spec.missing_edges = missing;
            return grid_complex(spec);
        },
        py::arg("width"), py::arg("height"), py::arg("holes") = std::vector<std::pair<int, int>>{},
        py::arg("missing_edges") =
            std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>>{});

    // path category engine
    m.def("triangulate_sk2", &triangulate_sk2, py::arg("k"));
    m.def("sk2", py::overload_cast<const SimplicialComplex&>(&sk2), py::arg("l"));
    m.def("enumerate_paths", &enumerate_paths, py::arg("l"), py::arg("v"), py::arg("w"));
    m.def("elementary_homotopies", &elementary_homotopies, py::arg("l"), py::arg("p"));
    m.def(
        "hom_classes",
        [](const SimplicialComplex& l, int v, int w) {
            std::vector<EdgePath> reps;
            for (const auto& c : hom_set(l, v, w).classes) reps.push_back(c.representative);
            return reps;
        },
        py::arg("l"), py::arg("v"), py::arg("w"),
        "canonical representatives of the morphism classes v -> w");
    m.def("hom_count", &hom_count, py::arg("l"), py::arg("v"), py::arg("w"));

    // reductions
    m.def("is_full_subcomplex", &is_full_subcomplex, py::arg("sub"), py::arg("full"));
    m.def("interval_restriction", &interval_restriction, py::arg("l"), py::arg("i"), py::arg("j"));
    m.def("sources_and_sinks", &sources_and_sinks, py::arg("l"));
    m.def("delete_vertices", &delete_vertices, py::arg("l"), py::arg("s"));
    m.def(
        "minimal_path_subcomplex",
        [](const SimplicialComplex& l, int v, int w) {
            auto [out, report] = minimal_path_subcomplex(l, v, w);
            return py::make_tuple(out, report.removed, report.iterations);
        },
        py::arg("l"), py::arg("v"), py::arg("w"));
    m.def("corners", [](const CubicalComplex& k) {
        std::vector<std::vector<int>> out;
        for (Vset f : corners(k)) out.push_back(to_elems(f));
        return out;
    });
    m.def(
        "remove_corner",
        [](const CubicalComplex& k, const std::vector<int>& x) {
            return remove_corner(k, from_elems(x, k.ambient));
        },
        py::arg("k"), py::arg("x"));
    m.def(
        "corner_reduce",
        [](const CubicalComplex& k, const std::vector<std::vector<int>>& protected_vertices) {
            std::set<Vset> prot;
            for (const auto& p : protected_vertices) prot.insert(from_elems(p, k.ambient));
            auto [out, report] = corner_reduce(k, prot);
            return py::make_tuple(out, report.removed, report.iterations);
        },
        py::arg("k"), py::arg("protected_vertices"));

    // refinement
    m.def("refine", &refine, py::arg("k"), py::arg("alpha"));
    m.def("is_refinement", &is_refinement, py::arg("k"), py::arg("alpha"), py::arg("l"));

    // frontier
    m.def("level_subcomplex", &level_subcomplex, py::arg("k"), py::arg("r"), py::arg("s"));
    m.def("level_triangulation_iso_check", &level_triangulation_iso_check, py::arg("k"),
          py::arg("r"), py::arg("s"));
    m.def(
        "frontier_hom_count",
        [](const CubicalComplex& k, int cut, const std::vector<int>& u, const std::vector<int>& v,
           bool parallel) {
            return frontier_hom(k, cut, from_elems(u, k.ambient), from_elems(v, k.ambient), parallel)
                .hom.size();
        },
        py::arg("k"), py::arg("cut"), py::arg("u"), py::arg("v"), py::arg("parallel") = true);

    // JSON round trips
    m.def("dumps", [](const CubicalComplex& k) { return to_json(k).dump(2); });
    m.def("dumps", [](const SimplicialComplex& l) { return to_json(l).dump(2); });
    m.def("loads", [](const std::string& text) -> py::object {
        AnyComplex c = parse_complex(json::parse(text));
        if (auto* k = std::get_if<CubicalComplex>(&c)) return py::cast(*k);
        return py::cast(std::get<SimplicialComplex>(c));
    });
}
