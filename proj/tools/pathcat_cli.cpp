// pathcat: path categories of finite cubical and simplicial complexes.
//
// Subcommands: gen, compute, reduce, verify, bench. All I/O is UTF-8 JSON
// on files or stdin/stdout. Exit codes: 0 success, 1 verification mismatch,
// 2 invalid input or usage.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "pathcat/common.hpp"
#include "pathcat/frontier.hpp"
#include "pathcat/generators.hpp"
#include "pathcat/json_io.hpp"
#include "pathcat/pathcat.hpp"
#include "pathcat/reduction.hpp"
#include "pathcat/refine.hpp"
#include "pathcat/triangulate.hpp"
#include "pathcat/verify.hpp"

namespace pc = pathcat;
using pc::json;

namespace {

json read_json(const std::string& path) {
    json j;
    try {
        if (path == "-") {
            std::cin >> j;
        } else {
            std::ifstream in(path);
            if (!in) throw pc::invalid_input("cannot open " + path);
            in >> j;
        }
    } catch (const json::parse_error& e) {
        throw pc::invalid_input(std::string("JSON parse error: ") + e.what());
    }
    return j;
}

void write_output(const json& j, const std::string& path) {
    if (path.empty() || path == "-") {
        std::cout << j.dump(2) << "\n";
    } else {
        std::ofstream out(path);
        if (!out) throw pc::invalid_input("cannot open " + path + " for writing");
        out << j.dump(2) << "\n";
    }
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep))
        if (!cur.empty()) out.push_back(cur);
    return out;
}

int parse_int(const std::string& s, const char* what) {
    try {
        std::size_t pos = 0;
        int v = std::stoi(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw pc::invalid_input(std::string("expected an integer for ") + what + ", got \"" + s + "\"");
    }
}

std::pair<int, int> parse_range(const std::string& s) {
    auto dots = s.find("..");
    if (dots == std::string::npos) {
        int v = parse_int(s, "range");
        return {v, v};
    }
    return {parse_int(s.substr(0, dots), "range start"), parse_int(s.substr(dots + 2), "range end")};
}

pc::Vset resolve_cubical_vertex(const pc::CubicalComplex& k, const std::string& s) {
    auto vs = pc::complex_vertices(k);
    if (vs.empty()) throw pc::invalid_input("complex has no vertices");
    if (s == "init") return vs.front();
    if (s == "term") return vs.back();
    pc::Vset f = 0;
    if (!(s == "empty" || s == "{}")) {
        std::vector<int> elems;
        for (const auto& tok : split(s, ',')) elems.push_back(parse_int(tok, "vertex element"));
        std::sort(elems.begin(), elems.end());
        f = pc::vset_from_elements(elems, k.ambient);
    }
    if (!pc::complex_contains(k, pc::Interval{f, f}))
        throw pc::invalid_input("vertex " + pc::vset_to_string(f) + " not in complex");
    return f;
}

int resolve_simplicial_vertex(const pc::SimplicialComplex& l, const std::string& s) {
    int v;
    if (s == "init") {
        if (l.vertices.empty()) throw pc::invalid_input("complex has no vertices");
        v = l.vertices.front();
    } else if (s == "term") {
        if (l.vertices.empty()) throw pc::invalid_input("complex has no vertices");
        v = l.vertices.back();
    } else {
        v = parse_int(s, "vertex");
    }
    if (!l.has_vertex(v)) throw pc::invalid_input("vertex " + std::to_string(v) + " not in complex");
    return v;
}

struct PipelinePass {
    std::string name;
    std::vector<std::string> args;
};

std::vector<PipelinePass> parse_pipeline(const std::string& spec) {
    std::vector<PipelinePass> out;
    for (const auto& tok : split(spec, ',')) {
        auto parts = split(tok, ':');
        PipelinePass p;
        p.name = parts[0];
        p.args.assign(parts.begin() + 1, parts.end());
        static const std::set<std::string> known{"sk2", "interval", "source-sink", "corner",
                                                "refine", "frontier"};
        if (!known.count(p.name)) throw pc::invalid_input("unknown pipeline pass: " + p.name);
        out.push_back(std::move(p));
    }
    return out;
}

// ---------------------------------------------------------------- gen ----

int run_gen(const std::string& family, const std::vector<std::string>& params,
            const std::string& holes, const std::string& missing, const std::string& output) {
    auto need = [&](std::size_t n) {
        if (params.size() != n)
            throw pc::invalid_input(family + " expects " + std::to_string(n) + " parameter(s)");
    };
    json j;
    if (family == "necklace") {
        need(1);
        j = pc::to_json(pc::necklace(parse_int(params[0], "bead count")));
    } else if (family == "hypercube") {
        need(1);
        j = pc::to_json(pc::hypercube(parse_int(params[0], "dimension")));
    } else if (family == "simplex") {
        need(1);
        j = pc::to_json(pc::simplex(parse_int(params[0], "dimension")));
    } else if (family == "boundary") {
        need(1);
        j = pc::to_json(pc::boundary_simplex(parse_int(params[0], "dimension")));
    } else if (family == "horn") {
        need(2);
        j = pc::to_json(pc::horn(parse_int(params[0], "dimension"), parse_int(params[1], "horn index")));
    } else if (family == "zigzag") {
        need(0);
        j = pc::to_json(pc::zigzag());
    } else if (family == "swiss-flag") {
        need(0);
        j = pc::to_json(pc::swiss_flag());
    } else if (family == "grid") {
        need(2);
        pc::GridSpec spec;
        spec.width = parse_int(params[0], "grid width");
        spec.height = parse_int(params[1], "grid height");
        for (const auto& h : split(holes, ';')) {
            auto xy = split(h, ',');
            if (xy.size() != 2) throw pc::invalid_input("hole must be i,j");
            spec.holes.emplace_back(parse_int(xy[0], "hole i"), parse_int(xy[1], "hole j"));
        }
        for (const auto& e : split(missing, ';')) {
            auto ends = split(e, '-');
            if (ends.size() != 2) throw pc::invalid_input("missing edge must be i,j-i,j");
            auto a = split(ends[0], ','), b = split(ends[1], ',');
            if (a.size() != 2 || b.size() != 2) throw pc::invalid_input("missing edge must be i,j-i,j");
            spec.missing_edges.push_back({{parse_int(a[0], "i"), parse_int(a[1], "j")},
                                          {parse_int(b[0], "i"), parse_int(b[1], "j")}});
        }
        j = pc::to_json(pc::grid_complex(spec));
    } else {
        throw pc::invalid_input("unknown family: " + family);
    }
    write_output(j, output);
    return 0;
}

// ------------------------------------------------------- compute/reduce ----

struct PipelineResult {
    std::optional<pc::CubicalComplex> cubical;     // present until triangulated
    pc::SimplicialComplex simplicial;              // valid once triangulated
    std::optional<pc::Triangulation> triangulation;
    json reports = json::array();
    std::optional<int> frontier_cut;               // set when frontier:<M|auto> requested
    bool triangulated = false;
};

// Applies the pipeline. Cubical passes (corner, refine) run first; a
// simplicial pass or hom computation triggers triangulation.
PipelineResult apply_pipeline(pc::AnyComplex input, const std::vector<PipelinePass>& passes,
                              std::optional<std::string> from, std::optional<std::string> to,
                              bool want_frontier_arg_ok) {
    PipelineResult r;
    std::optional<pc::Vset> qu, qv;
    if (auto* k = std::get_if<pc::CubicalComplex>(&input)) {
        r.cubical = *k;
        if (from) qu = resolve_cubical_vertex(*k, *from);
        if (to) qv = resolve_cubical_vertex(*k, *to);
    } else {
        r.simplicial = std::get<pc::SimplicialComplex>(input);
        r.triangulated = true;
    }

    auto triangulate_now = [&]() {
        if (r.triangulated) return;
        r.triangulation = pc::triangulate_sk2(*r.cubical);
        r.simplicial = r.triangulation->complex;
        r.triangulated = true;
    };

    for (const auto& p : passes) {
        if (p.name == "corner" || p.name == "refine" || p.name == "frontier") {
            if (!r.cubical || r.triangulated)
                throw pc::invalid_input("pass " + p.name + " needs a cubical complex");
            if (p.name == "corner") {
                std::set<pc::Vset> protect;
                if (qu) protect.insert(*qu);
                if (qv) protect.insert(*qv);
                if (protect.empty())
                    throw pc::invalid_input("corner pass needs --from/--to to know what to protect");
                auto [reduced, report] = pc::corner_reduce(*r.cubical, protect);
                r.cubical = reduced;
                r.reports.push_back(pc::to_json(report));
            } else if (p.name == "refine") {
                if (p.args.size() != 1) throw pc::invalid_input("refine pass needs refine:<mono.json>");
                pc::PosetMono alpha = pc::parse_mono(read_json(p.args[0]));
                r.cubical = pc::refine(*r.cubical, alpha);
                if (qu) qu = alpha.apply(*qu);
                if (qv) qv = alpha.apply(*qv);
            } else {
                if (!want_frontier_arg_ok)
                    throw pc::invalid_input("frontier is a compute strategy, not a reduce pass");
                if (p.args.size() != 1)
                    throw pc::invalid_input("frontier pass needs frontier:<M|auto>");
                if (!qu || !qv) throw pc::invalid_input("frontier needs --from and --to");
                int cut = p.args[0] == "auto" ? pc::heuristic_cut(*r.cubical, *qu, *qv)
                                              : parse_int(p.args[0], "cut");
                r.frontier_cut = cut;
            }
        } else {
            triangulate_now();
            if (p.name == "sk2") {
                r.simplicial = pc::sk2(r.simplicial);
            } else if (p.name == "interval") {
                if (p.args.size() != 2) throw pc::invalid_input("interval pass needs interval:<i>:<j>");
                r.simplicial = pc::interval_restriction(r.simplicial, parse_int(p.args[0], "i"),
                                                        parse_int(p.args[1], "j"));
            } else if (p.name == "source-sink") {
                int v, w;
                if (!from || !to) throw pc::invalid_input("source-sink pass needs --from and --to");
                if (r.triangulation) {
                    v = r.triangulation->label_of(*qu);
                    w = r.triangulation->label_of(*qv);
                } else {
                    v = resolve_simplicial_vertex(r.simplicial, *from);
                    w = resolve_simplicial_vertex(r.simplicial, *to);
                }
                auto [reduced, report] = pc::minimal_path_subcomplex(r.simplicial, v, w);
                r.simplicial = reduced;
                r.reports.push_back(pc::to_json(report));
            }
        }
    }
    if (!r.frontier_cut) triangulate_now();
    return r;
}

int run_compute(const std::string& input_path, std::optional<std::string> from,
                std::optional<std::string> to, bool all, bool count_only, bool report,
                const std::string& pipeline, const std::string& output) {
    if (!all && (!from || !to))
        throw pc::invalid_input("compute needs --from and --to, or --all");
    pc::AnyComplex input = pc::parse_complex(read_json(input_path));
    PipelineResult pr = apply_pipeline(std::move(input), parse_pipeline(pipeline), from, to, true);

    json out;
    if (pr.frontier_cut) {
        pc::Vset u = resolve_cubical_vertex(*pr.cubical, *from);
        pc::Vset v = resolve_cubical_vertex(*pr.cubical, *to);
        pc::FrontierHomResult fr = pc::frontier_hom(*pr.cubical, *pr.frontier_cut, u, v, true);
        if (count_only) {
            out = json{{"count", fr.hom.size()}};
        } else {
            pc::Triangulation tk = pc::triangulate_sk2(*pr.cubical);
            out = pc::category_json(tk.complex.vertices, {fr.hom}, false);
        }
        if (report) {
            pc::FrontierDecomposition d = pc::frontier_split(*pr.cubical, *pr.frontier_cut);
            json rep = pc::to_json(d, fr.summands);
            rep["a_side_ms"] = fr.a_side_ms;
            rep["b_side_ms"] = fr.b_side_ms;
            pr.reports.push_back(rep);
        }
    } else {
        const pc::SimplicialComplex& l = pr.simplicial;
        std::vector<pc::HomSet> homs;
        if (all) {
            for (std::size_t i = 0; i < l.vertices.size(); ++i)
                for (std::size_t j = i; j < l.vertices.size(); ++j)
                    homs.push_back(pc::hom_set(l, l.vertices[i], l.vertices[j]));
            out = pc::category_json(l.vertices, homs, count_only);
        } else {
            int v, w;
            if (pr.triangulation) {
                v = pr.triangulation->label_of(resolve_cubical_vertex(*pr.cubical, *from));
                w = pr.triangulation->label_of(resolve_cubical_vertex(*pr.cubical, *to));
            } else {
                v = resolve_simplicial_vertex(l, *from);
                w = resolve_simplicial_vertex(l, *to);
            }
            if (count_only) {
                out = json{{"count", pc::hom_count(l, v, w)}};
            } else {
                homs.push_back(pc::hom_set(l, v, w));
                out = pc::category_json(l.vertices, homs, false);
            }
        }
    }
    if (report) out["reports"] = pr.reports;
    write_output(out, output);
    return 0;
}

int run_reduce(const std::string& input_path, std::optional<std::string> from,
               std::optional<std::string> to, bool report, const std::string& pipeline,
               const std::string& output) {
    pc::AnyComplex input = pc::parse_complex(read_json(input_path));
    auto passes = parse_pipeline(pipeline);
    bool cubical_only = true;
    for (const auto& p : passes)
        if (p.name != "corner" && p.name != "refine") cubical_only = false;
    bool input_cubical = std::holds_alternative<pc::CubicalComplex>(input);

    PipelineResult pr = apply_pipeline(std::move(input), passes, from, to, false);
    json out = (input_cubical && cubical_only) ? pc::to_json(*pr.cubical) : pc::to_json(pr.simplicial);
    if (report) out["reports"] = pr.reports;
    write_output(out, output);
    return 0;
}

// ------------------------------------------------------------- verify ----

int run_verify(const std::string& input_path, const std::string& pass, int random_count,
               unsigned seed, const std::string& mono_path, int max_ambient) {
    bool needs_simplicial = pass == "interval" || pass == "source-sink";
    std::mt19937 rng(seed);

    int failures = 0;
    int instance = 0;
    auto report = [&](const pc::VerifyResult& r, const std::string& name) {
        if (r.ok()) {
            std::cout << name << ": OK (" << r.checked_pairs << " pairs)\n";
        } else {
            failures += static_cast<int>(r.failures.size());
            for (const auto& f : r.failures) std::cout << name << ": FAIL " << f << "\n";
        }
    };

    auto run_on_simplicial = [&](const pc::SimplicialComplex& l, const std::string& name) {
        if (pass == "interval") report(pc::verify_interval_pass(l), name);
        else if (pass == "source-sink") report(pc::verify_source_sink_pass(l), name);
        else throw pc::invalid_input("pass " + pass + " needs a cubical complex");
    };
    auto run_on_cubical = [&](const pc::CubicalComplex& k, const std::string& name) {
        if (pass == "corner") report(pc::verify_corner_pass(k), name);
        else if (pass == "frontier") report(pc::verify_frontier_pass(k), name);
        else if (pass == "level") report(pc::verify_level_pass(k), name);
        else if (pass == "skeleton") report(pc::verify_skeleton_pass(k), name);
        else if (pass == "refine") {
            pc::PosetMono alpha = mono_path.empty() ? pc::random_mono(rng, k.ambient, 5)
                                                    : pc::parse_mono(read_json(mono_path));
            report(pc::verify_refine_pass(k, alpha), name);
        } else if (needs_simplicial) {
            run_on_simplicial(pc::triangulate_sk2(k).complex, name);
        } else {
            throw pc::invalid_input("unknown verify pass: " + pass);
        }
    };

    if (random_count > 0) {
        for (instance = 0; instance < random_count; ++instance) {
            std::string name = "random " + std::to_string(instance);
            if (needs_simplicial) run_on_simplicial(pc::random_simplicial(rng, 8), name);
            else run_on_cubical(pc::random_cubical(rng, max_ambient), name);
        }
    } else {
        if (input_path.empty()) throw pc::invalid_input("verify needs an input file or --random");
        pc::AnyComplex input = pc::parse_complex(read_json(input_path));
        if (auto* k = std::get_if<pc::CubicalComplex>(&input)) run_on_cubical(*k, input_path);
        else run_on_simplicial(std::get<pc::SimplicialComplex>(input), input_path);
    }
    if (failures) {
        std::cout << failures << " failure(s)\n";
        return 1;
    }
    return 0;
}

// -------------------------------------------------------------- bench ----

int run_bench(const std::string& family, const std::vector<std::string>& params) {
    using Clock = std::chrono::steady_clock;
    std::cout << "instance,pipeline,count,ms\n";
    auto row = [&](const std::string& inst, const std::string& pipe, std::uint64_t count,
                   double ms) {
        std::cout << inst << "," << pipe << "," << count << "," << ms << "\n";
    };
    auto timed = [&](auto&& fn) {
        auto t0 = Clock::now();
        std::uint64_t c = fn();
        double ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
        return std::pair<std::uint64_t, double>(c, ms);
    };

    if (family == "necklace") {
        if (params.size() != 1) throw pc::invalid_input("bench necklace expects a range");
        auto [lo, hi] = parse_range(params[0]);
        for (int k = lo; k <= hi; ++k) {
            pc::SimplicialComplex l = pc::necklace(k);
            std::string inst = "necklace" + std::to_string(k);
            auto [c1, t1] = timed([&] { return pc::hom_set(l, 0, 2 * k).size(); });
            row(inst, "direct", c1, t1);
            auto [c2, t2] = timed([&] { return pc::hom_count(l, 0, 2 * k); });
            row(inst, "count", c2, t2);
        }
    } else if (family == "hypercube") {
        if (params.size() != 1) throw pc::invalid_input("bench hypercube expects a range");
        auto [lo, hi] = parse_range(params[0]);
        for (int n = lo; n <= hi; ++n) {
            pc::CubicalComplex k = pc::hypercube(n);
            pc::Triangulation tk = pc::triangulate_sk2(k);
            int v = tk.label_of(0), w = tk.label_of(pc::vset_universe(n));
            std::string inst = "hypercube" + std::to_string(n);
            auto [c1, t1] = timed([&] { return pc::hom_set(tk.complex, v, w).size(); });
            row(inst, "direct", c1, t1);
            if (n >= 2) {
                auto [c2, t2] = timed([&] {
                    int cut = pc::heuristic_cut(k, 0, pc::vset_universe(n));
                    return pc::frontier_hom(k, cut, 0, pc::vset_universe(n), true).hom.size();
                });
                row(inst, "frontier", c2, t2);
            }
        }
    } else if (family == "grid") {
        if (params.size() != 2) throw pc::invalid_input("bench grid expects width and height");
        pc::GridSpec spec;
        spec.width = parse_int(params[0], "width");
        spec.height = parse_int(params[1], "height");
        pc::CubicalComplex k = pc::grid_complex(spec);
        pc::Vset u = 0, v = pc::grid_vertex(spec, spec.width, spec.height);
        pc::Triangulation tk = pc::triangulate_sk2(k);
        std::string inst = "grid" + std::to_string(spec.width) + "x" + std::to_string(spec.height);
        auto [c1, t1] = timed([&] { return pc::hom_set(tk.complex, tk.label_of(u), tk.label_of(v)).size(); });
        row(inst, "direct", c1, t1);
        auto [c2, t2] = timed([&] { return pc::hom_count(tk.complex, tk.label_of(u), tk.label_of(v)); });
        row(inst, "count", c2, t2);
        auto [c3, t3] = timed([&] {
            int cut = pc::heuristic_cut(k, u, v);
            return pc::frontier_hom(k, cut, u, v, true).hom.size();
        });
        row(inst, "frontier", c3, t3);
        if (c1 != c3) throw pc::invalid_input("internal cross-check failed: direct vs frontier");
    } else {
        throw pc::invalid_input("unknown bench family: " + family);
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"path categories of finite cubical and simplicial complexes"};
    app.require_subcommand(1);

    std::string input_path, output, pipeline, from_s, to_s, holes, missing, mono_path;
    bool all = false, count_only = false, report = false;
    int random_count = 0, max_ambient = 4;
    unsigned seed = 0;
    std::string family, pass;
    std::vector<std::string> params;

    auto* gen = app.add_subcommand("gen", "generate a fixture family");
    gen->add_option("family", family)->required();
    gen->add_option("params", params);
    gen->add_option("--holes", holes);
    gen->add_option("--missing-edges", missing);
    gen->add_option("--output,-o", output);

    auto* compute = app.add_subcommand("compute", "compute hom sets of the path category");
    compute->add_option("input", input_path)->required();
    compute->add_option("--from", from_s);
    compute->add_option("--to", to_s);
    compute->add_flag("--all", all);
    compute->add_flag("--count-only", count_only);
    compute->add_flag("--report", report);
    compute->add_option("--pipeline", pipeline);
    compute->add_option("--output,-o", output);

    auto* reduce = app.add_subcommand("reduce", "apply a reduction pipeline and emit the complex");
    reduce->add_option("input", input_path)->required();
    reduce->add_option("--from", from_s);
    reduce->add_option("--to", to_s);
    reduce->add_flag("--report", report);
    reduce->add_option("--pipeline", pipeline)->required();
    reduce->add_option("--output,-o", output);

    auto* verify = app.add_subcommand("verify", "check a pass against the brute-force oracle");
    verify->add_option("input", input_path);
    verify->add_option("--pass", pass)->required();
    verify->add_option("--random", random_count);
    verify->add_option("--seed", seed);
    verify->add_option("--mono", mono_path);
    verify->add_option("--max-ambient", max_ambient);

    auto* bench = app.add_subcommand("bench", "timing table for direct vs reduced strategies");
    bench->add_option("family", family)->required();
    bench->add_option("params", params);

    try {
        app.parse(argc, argv);
        auto opt = [](const std::string& s) {
            return s.empty() ? std::nullopt : std::optional<std::string>(s);
        };
        if (gen->parsed()) return run_gen(family, params, holes, missing, output);
        if (compute->parsed())
            return run_compute(input_path, opt(from_s), opt(to_s), all, count_only, report,
                               pipeline, output);
        if (reduce->parsed())
            return run_reduce(input_path, opt(from_s), opt(to_s), report, pipeline, output);
        if (verify->parsed())
            return run_verify(input_path, pass, random_count, seed, mono_path, max_ambient);
        if (bench->parsed()) return run_bench(family, params);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const pc::invalid_input& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
