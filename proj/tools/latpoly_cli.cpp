#include <iostream>
#include <random>
#include <set>

#include "CLI11.hpp"
#include "json.hpp"
#include "latpoly/error.hpp"
#include "latpoly/geometry.hpp"
#include "latpoly/io.hpp"
#include "latpoly/oracle.hpp"
#include "latpoly/reduced_graph.hpp"
#include "latpoly/render.hpp"

using namespace latpoly;

namespace {

std::string arc_text(Arc a) { return "(" + std::to_string(a.a) + "," + std::to_string(a.b) + ")"; }

ChordDiagram load_chord(const std::string& path) { return parse_chord(read_file(path)); }

LatticePolytope load_polytope(const std::string& path) {
    auto text = read_file(path);
    if (detect_kind(text) != FileKind::polytope) throw Error(ErrorKind::usage, "'" + path + "' is not a polytope file");
    return parse_polytope_json(text);
}

int classify(const std::string& path) {
    auto d = load_chord(path);
    const auto& arcs = d.arcs();
    for (std::size_t i = 0; i < arcs.size(); ++i)
        for (std::size_t j = i + 1; j < arcs.size(); ++j)
            std::cout << arc_text(arcs[i]) << " " << arc_text(arcs[j]) << " " << to_string(classify_arc_pair(arcs[i], arcs[j]))
                      << "\n";
    auto w = max_crossing_witness(d);
    std::cout << "max_crossing " << w.k << "\n";
    std::cout << "witness";
    for (auto a : w.arcs) std::cout << " " << arc_text(a);
    std::cout << "\n";
    for (std::size_t i = 0; i < arcs.size(); ++i)
        for (std::size_t j = i + 1; j < arcs.size(); ++j)
            if (classify_arc_pair(arcs[i], arcs[j]) == ArcPairClass::crossing)
                std::cout << "crossing_pair " << arc_text(arcs[i]) << " " << arc_text(arcs[j]) << "\n";
    return 0;
}

int area(const std::string& path, bool as_json) {
    auto p = load_polytope(path);
    auto a = arrangement(p.edges());
    if (as_json) {
        std::cout << format_arrangement_json(a);
        return 0;
    }
    std::cout << "area_signed " << area_signed(a) << "\narea_abs " << area_abs(a) << "\n";
    std::cout << "x0\tx1\ty0\ty1\tomega\n";
    for (std::size_t i = 0; i < a.nx(); ++i)
        for (std::size_t j = 0; j < a.ny(); ++j)
            if (a.omega(i, j) != 0)
                std::cout << a.xs[i] << "\t" << a.xs[i + 1] << "\t" << a.ys[j] << "\t" << a.ys[j + 1] << "\t" << a.omega(i, j)
                          << "\n";
    return 0;
}

int minimize(const std::vector<std::string>& inputs, const std::string& method) {
    if (inputs.size() == 1) {
        auto p = load_polytope(inputs[0]);
        if (method == "construct") {
            if (satisfies_condition1(p) || satisfies_condition2(p)) {
                std::cout << format_sequence_json(minimal_transformation(p));
                return 0;
            }
            std::cerr << "warning: construction conditions fail; using the exact oracle\n";
        }
        std::cout << format_sequence_json(min_area_polytope(p).witness);
        return 0;
    }
    auto d = to_lattice_presentation(load_chord(inputs[0]));
    auto d2 = to_lattice_presentation(load_chord(inputs[1]));
    if (method == "construct") {
        if (auto s = construct_chord_transformation(d, d2)) {
            std::cout << format_sequence_json(*s);
            return 0;
        }
        std::cerr << "warning: no associated polytope meets the construction conditions; using the exact oracle\n";
    }
    std::cout << format_sequence_json(min_area_chord(d, d2).witness);
    return 0;
}

int reduce_cmd(const std::string& path, std::optional<std::uint64_t> seed, int orders) {
    auto g = from_polytope(load_polytope(path));
    std::optional<std::mt19937_64> rng;
    if (seed) rng.emplace(*seed);
    auto r = reduce(g, rng ? &*rng : nullptr);
    nlohmann::json out;
    out["empty"] = r.graph.empty();
    out["trace"] = nlohmann::json::array();
    for (auto k : r.trace) out["trace"].push_back(to_string(k));
    out["canonical_form"] = canonical_form(r.graph);
    out["graph"] = nlohmann::json::parse(dump_json(r.graph));
    if (orders > 0) {
        std::mt19937_64 gen(seed.value_or(0));
        std::set<std::string> forms;
        for (int t = 0; t < orders; ++t) forms.insert(canonical_form(reduce(g, &gen).graph));
        out["orders"] = orders;
        out["distinct_forms"] = forms.size();
    }
    std::cout << out.dump(2) << "\n";
    return 0;
}

int render_cmd(const std::vector<std::string>& inputs, const std::string& out_path, const RenderSpec& spec,
               std::optional<std::size_t> division) {
    auto text = read_file(inputs[0]);
    std::string svg;
    switch (detect_kind(text)) {
        case FileKind::polytope: {
            auto p = parse_polytope_json(text);
            if (division) {
                auto ds = enumerate_divisions(p);
                if (*division < 1 || *division > ds.size())
                    throw Error(ErrorKind::usage, "division index must lie in 1.." + std::to_string(ds.size()));
                svg = render_division(p, ds[*division - 1], spec);
            } else {
                svg = render_polytope(p, spec);
            }
            break;
        }
        case FileKind::sequence: svg = render_sequence(parse_sequence_json(text), spec); break;
        default: {
            auto d = to_lattice_presentation(parse_chord(text));
            if (inputs.size() > 1) {
                auto d2 = to_lattice_presentation(load_chord(inputs[1]));
                svg = render_presentation(d, spec, &d2);
            } else {
                svg = render_presentation(d, spec);
            }
        }
    }
    if (out_path.empty() || out_path == "-") std::cout << svg;
    else write_file(out_path, svg);
    return 0;
}

int exit_code(ErrorKind k) {
    switch (k) {
        case ErrorKind::domain: return 1;
        case ErrorKind::usage: return 2;
        case ErrorKind::resource: return 3;
    }
    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Lattice presentations, lattice polytopes and minimal-area transformations"};
    app.require_subcommand(1);
    app.fallthrough();
    std::optional<std::uint64_t> seed;
    app.add_option("--seed", seed, "seed for randomized reduction orders");

    std::string chord_path, poly_path, other_path, out_path, strategy = "lex", method = "construct";
    std::vector<std::string> inputs;
    bool as_json = false;
    int orders = 0, census_n = 3;

    auto* c_classify = app.add_subcommand("classify", "pair classes and maximal crossing of a chord diagram");
    c_classify->add_option("chord", chord_path)->required();

    auto* c_present = app.add_subcommand("present", "lattice presentation of a chord diagram");
    c_present->add_option("chord", chord_path)->required();

    auto* c_polytope = app.add_subcommand("polytope", "associated lattice polytopes of two chord diagrams");
    c_polytope->add_option("a", chord_path)->required();
    c_polytope->add_option("b", other_path)->required();
    c_polytope->add_option("--strategy", strategy)->check(CLI::IsMember({"lex", "disjoint", "all"}));

    auto* c_area = app.add_subcommand("area", "signed and absolute area with the winding table");
    c_area->add_option("polytope", poly_path)->required();
    c_area->add_flag("--json", as_json, "dump the arrangement");

    auto* c_min = app.add_subcommand("minimize", "minimal-area transformation of a polytope or of two chord diagrams");
    c_min->add_option("inputs", inputs)->required()->expected(1, 2);
    c_min->add_option("--method", method)->check(CLI::IsMember({"construct", "exact"}));

    auto* c_reduce = app.add_subcommand("reduce", "reduced graph and emptiness verdict");
    c_reduce->add_option("polytope", poly_path)->required();
    c_reduce->add_option("--orders", orders, "count canonical forms over this many random orders")->check(CLI::NonNegativeNumber);

    auto* c_count = app.add_subcommand("count", "number of minimal-area transformations");
    c_count->add_option("polytope", poly_path)->required();

    auto* c_equiv = app.add_subcommand("equiv", "equivalence of two polytopes");
    c_equiv->add_option("p1", poly_path)->required();
    c_equiv->add_option("p2", other_path)->required();

    auto* c_census = app.add_subcommand("census", "oracle census over all instances of one size");
    c_census->add_option("--n", census_n)->required()->check(CLI::PositiveNumber);
    c_census->add_option("-o,--output", out_path);

    RenderSpec spec;
    bool no_labels = false;
    std::optional<std::size_t> division;
    auto* c_render = app.add_subcommand("render", "SVG figure of a chord, polytope or sequence file");
    c_render->add_option("inputs", inputs)->required()->expected(1, 2);
    c_render->add_option("-o,--output", out_path);
    c_render->add_option("--scale", spec.scale)->check(CLI::PositiveNumber);
    c_render->add_flag("--no-labels", no_labels);
    c_render->add_flag("--mirror", spec.show_mirror);
    c_render->add_option("--division", division, "render the k-th division of a simple polygon");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    spec.show_labels = !no_labels;

    try {
        if (*c_classify) return classify(chord_path);
        if (*c_present) {
            std::cout << format_presentation_json(load_chord(chord_path));
            return 0;
        }
        if (*c_polytope) {
            auto d = to_lattice_presentation(load_chord(chord_path));
            auto d2 = to_lattice_presentation(load_chord(other_path));
            for (const auto& pair : associated_polytopes(d, d2, parse_strategy(strategy))) std::cout << format_polytope_json(pair.p);
            return 0;
        }
        if (*c_area) return area(poly_path, as_json);
        if (*c_min) return minimize(inputs, method);
        if (*c_reduce) return reduce_cmd(poly_path, seed, orders);
        if (*c_count) {
            std::cout << count_minimal(load_polytope(poly_path)) << "\n";
            return 0;
        }
        if (*c_equiv) {
            std::cout << (equivalent(load_polytope(poly_path), load_polytope(other_path)) ? "true" : "false") << "\n";
            return 0;
        }
        if (*c_census) {
            auto table = census_table(census(census_n));
            if (out_path.empty()) std::cout << table;
            else write_file(out_path, table);
            return 0;
        }
        if (*c_render) return render_cmd(inputs, out_path, spec, division);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code(e.kind());
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
