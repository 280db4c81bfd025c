// Command-line front end: reads JSON inputs, runs one command, prints the
// result as plain text, LaTeX or JSON.

#include <hyperform/canonical.hpp>
#include <hyperform/checks.hpp>
#include <hyperform/error.hpp>
#include <hyperform/serialize.hpp>

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

using namespace hyperform;

namespace {

struct Options {
    std::vector<std::string> inputs;
    std::vector<std::string> regions;
    int hyperplane = 0;
    std::string order;
    std::string format = "plain";
    int degree = -1;
    std::string suite = "all";
};

std::string require_input(const Options& o, std::size_t k, const char* what) {
    if (o.inputs.size() <= k) fail(ErrorKind::validation, std::string("missing --input for the ") + what);
    return o.inputs[k];
}

// Re-raises errors with the file name prefixed.
template <class F>
auto from_file(const std::string& path, F parse) {
    Json j = read_json_file(path);
    try {
        return parse(j);
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::internal) throw;
        throw Error(e.kind(), path + ": " + e.what());
    }
}

std::vector<int> parse_order(const std::string& text, int size) {
    std::vector<int> order;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            int v = std::stoi(item, &used);
            if (used != item.size()) throw std::invalid_argument(item);
            order.push_back(v - 1);
        } catch (const std::exception&) {
            fail(ErrorKind::validation, "--order: '" + item + "' is not an index");
        }
    }
    std::vector<int> sorted = order;
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < static_cast<int>(sorted.size()); ++i)
        if (sorted[i] != i || static_cast<int>(sorted.size()) != size)
            fail(ErrorKind::validation, "--order must be a permutation of 1.." + std::to_string(size));
    return order;
}

Arrangement load_arrangement(const Options& o, std::size_t k = 0) {
    Arrangement arr = from_file(require_input(o, k, "arrangement"), arrangement_from_json);
    if (!o.order.empty()) arr = arr.permuted(parse_order(o.order, arr.size()));
    return arr;
}

// --region is a JSON file or an inline point "1/3,1/7".
Region load_region(const Arrangement& arr, const Options& o, std::size_t k = 0) {
    if (o.regions.size() <= k) fail(ErrorKind::validation, "missing --region");
    const std::string& spec = o.regions[k];
    if (spec.find(".json") != std::string::npos)
        return from_file(spec, [&](const Json& j) { return region_from_json(arr, j); });
    Point p;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            p.push_back(parse_rational(item));
        } catch (const Error& e) {
            fail(ErrorKind::validation, "--region: " + std::string(e.what()));
        }
    }
    if (static_cast<int>(p.size()) != arr.dim())
        fail(ErrorKind::validation, "--region: expected " + std::to_string(arr.dim()) + " coordinates");
    return region_from_point(arr, p);
}

int hyperplane_index(const Arrangement& arr, const Options& o) {
    if (o.hyperplane < 1 || o.hyperplane > arr.size())
        fail(ErrorKind::validation, "--hyperplane must lie in 1.." + std::to_string(arr.size()));
    return o.hyperplane - 1;
}

// Element to act on: a second --input holding an OSElement, else the
// canonical form of --region.
OSElement subject(const OrlikSolomon& os, const Options& o) {
    const Arrangement& arr = os.arrangement();
    if (o.inputs.size() > 1)
        return from_file(o.inputs[1], [&](const Json& j) { return os_element_from_json(j, arr.size()); });
    return canonical_form_nbc(os, load_region(arr, o));
}

void print(const Json& j) { std::cout << dump(j); }

void emit_sets(const std::vector<IndexSet>& sets, Format f) {
    if (f == Format::json) return print(index_sets_to_json(sets));
    for (const auto& s : sets) std::cout << format_index_set(s) << "\n";
}

void emit_element(const OSElement& x, Format f) {
    if (f == Format::json) return print(to_json(x));
    std::cout << os_to_string(x, f == Format::latex) << "\n";
}

void emit_dlog(const DlogCombination& x, const std::string& var, Format f) {
    if (f == Format::json) return print(to_json(x));
    std::string s = x.to_string(var);
    if (f == Format::latex) {
        std::string out;
        for (std::size_t i = 0; i < s.size(); ++i) out += s.compare(i, 4, "dlog") == 0 ? (i += 3, "\\operatorname{dlog}") : std::string(1, s[i]);
        s = out;
    }
    std::cout << s << "\n";
}

void emit_scalar(const std::string& key, const std::string& value, Format f) {
    if (f == Format::json) return print(Json{{key, value}});
    std::cout << value << "\n";
}

void emit_long(const std::string& key, long long value, Format f) {
    if (f == Format::json) return print(Json{{key, value}});
    std::cout << value << "\n";
}

int run(const std::string& cmd, const Options& o) {
    Format f = parse_format(o.format);
    if (cmd == "poset") {
        Arrangement arr = load_arrangement(o);
        FlatPoset p = build_flat_poset(arr);
        if (f == Format::json) {
            print(to_json(p, arr));
        } else {
            for (std::size_t i = 0; i < p.flats.size(); ++i)
                std::cout << "codim " << p.flats[i].codim << " " << format_index_set(p.flats[i].closure, arr.size()) << " mu "
                          << p.moebius[i] << "\n";
        }
    } else if (cmd == "moebius") {
        Arrangement arr = load_arrangement(o);
        // mu(0, 1) = (-1)^(n-1) cr; zero when the arrangement is not essential
        long long cr = combinatorial_rank(arr);
        emit_long("moebius", arr.dim() % 2 == 1 ? cr : -cr, f);
    } else if (cmd == "rank") {
        emit_long("rank", combinatorial_rank(load_arrangement(o)), f);
    } else if (cmd == "circuits") {
        emit_sets(circuits(load_arrangement(o)), f);
    } else if (cmd == "nbc") {
        Arrangement arr = load_arrangement(o);
        int k = o.degree < 0 ? arr.dim() : o.degree;
        if (k > arr.dim()) fail(ErrorKind::validation, "--degree exceeds the dimension");
        emit_sets(nbc_sets(arr, k), f);
    } else if (cmd == "regions") {
        auto cells = regions(load_arrangement(o));
        if (f == Format::json) return print(to_json(cells)), 0;
        for (const auto& c : cells) {
            std::string signs;
            for (int s : c.signs) signs += s > 0 ? '+' : '-';
            std::cout << signs << (c.bounded ? " bounded" : " unbounded") << "\n";
        }
    } else if (cmd == "canonical") {
        Arrangement arr = load_arrangement(o);
        OrlikSolomon os(arr);
        emit_element(canonical_form_nbc(os, load_region(arr, o)), f);
    } else if (cmd == "residue") {
        Arrangement arr = load_arrangement(o);
        OrlikSolomon os(arr);
        ResidueResult r = residue(os, subject(os, o), hyperplane_index(arr, o));
        if (f == Format::json)
            print({{"arrangement", to_json(r.restriction.arrangement)}, {"element", to_json(r.element)}});
        else
            emit_element(r.element, f);
    } else if (cmd == "corners") {
        Arrangement arr = load_arrangement(o);
        OrlikSolomon os(arr);
        auto corners = corner_residues(os, subject(os, o));
        if (f == Format::json) return print(corner_residues_to_json(corners)), 0;
        for (const auto& [s, v] : corners) std::cout << format_index_set(s) << " " << (f == Format::latex ? to_latex(v) : to_string(v)) << "\n";
    } else if (cmd == "adjoint") {
        Arrangement arr = load_arrangement(o);
        OrlikSolomon os(arr);
        MultiPoly adj = adjoint_polynomial(arr, to_rational_form(arr, subject(os, o)));
        if (f == Format::json) return print(to_json(adj)), 0;
        std::vector<std::string> vars{"x0"};
        vars.insert(vars.end(), arr.variables().begin(), arr.variables().end());
        std::cout << poly_to_string(adj, vars, f == Format::latex) << "\n";
    } else if (cmd == "product") {
        Arrangement a = load_arrangement(o, 0), b = from_file(require_input(o, 1, "second factor"), arrangement_from_json);
        OSElement x = canonical_form_nbc(OrlikSolomon(a), load_region(a, o, 0));
        OSElement y = canonical_form_nbc(OrlikSolomon(b), load_region(b, o, 1));
        ProductResult p = product_form(a, x, b, y);
        if (f == Format::json)
            print({{"arrangement", to_json(p.arrangement)}, {"element", to_json(p.element)}});
        else
            emit_element(p.element, f);
    } else if (cmd == "push" || cmd == "pull") {
        DlogCombination x = from_file(require_input(o, 0, "dlog combination"), dlog_from_json);
        if (o.degree < 1) fail(ErrorKind::validation, "--degree N >= 1 is required");
        if (cmd == "push")
            emit_dlog(pushforward_power(x, o.degree), "z", f);
        else
            emit_dlog(pullback_power(x, o.degree), "w", f);
    } else if (cmd == "complex") {
        StrataInput s = from_file(require_input(o, 0, "strata"), strata_from_json);
        DeltaComplex c = dual_complex(s);
        HomologyResult h = reduced_homology(c);
        if (f == Format::json) {
            Json counts = Json::array();
            for (int k = 0; k <= c.dim(); ++k) counts.push_back(c.count(k));
            Json j = to_json(h);
            j["simplices"] = counts;
            return print(j), 0;
        }
        for (int k = 0; k <= c.dim(); ++k) std::cout << "simplices " << k << " " << c.count(k) << "\n";
        for (std::size_t k = 0; k < h.reduced.size(); ++k) std::cout << "reduced H" << k << " " << h.reduced[k] << "\n";
        std::cout << "euler " << h.euler_characteristic << "\n";
    } else if (cmd == "curve") {
        // {"branches": [2, ...], "components": k, "points": s}
        Json j = read_json_file(require_input(o, 0, "curve data"));
        std::vector<int> branches;
        if (j.contains("branches")) branches = j["branches"].get<std::vector<int>>();
        long cr = curve_rank(branches, j.value("components", 1));
        if (j.contains("points")) cr = curve_rank_relative(cr, j["points"].get<int>());
        emit_long("rank", cr, f);
    } else if (cmd == "genus") {
        // {"plane_curve": {"degree": d, "deltas": [...]}} or {"union": [...]} or
        // {"hypersurface": {"n": n, "degree": d}} or {"ncd": {"n": n, "degree": d}}
        Json j = read_json_file(require_input(o, 0, "genus data"));
        auto plane = [](const Json& c) { return PlaneCurveComponent{c.at("degree").get<int>(), c.value("deltas", std::vector<int>{})}; };
        if (j.contains("plane_curve")) {
            PlaneCurveComponent c = plane(j["plane_curve"]);
            emit_long("genus", genus_plane_curve(c.degree, c.deltas), f);
        } else if (j.contains("union")) {
            std::vector<PlaneCurveComponent> cs;
            for (const auto& c : j["union"]) cs.push_back(plane(c));
            emit_long("genus", genus_plane_curve_union(cs), f);
        } else if (j.contains("hypersurface")) {
            emit_scalar("genus", genus_smooth_hypersurface(j["hypersurface"].at("n"), j["hypersurface"].at("degree")).get_str(), f);
        } else if (j.contains("ncd")) {
            emit_scalar("rank", logforms_dim_ncd(j["ncd"].at("n"), j["ncd"].at("degree")).get_str(), f);
        } else {
            fail(ErrorKind::validation, "genus input needs plane_curve, union, hypersurface or ncd");
        }
    } else if (cmd == "check") {
        std::string path = require_input(o, 0, "check");
        Json j = read_json_file(path);
        CheckReport r;
        if (j.contains("components")) {
            r = run_checks(from_file(path, strata_from_json), o.suite);
        } else {
            Arrangement arr = load_arrangement(o);
            std::optional<Region> reg;
            if (!o.regions.empty()) reg = load_region(arr, o);
            r = run_checks(arr, reg, o.suite);
        }
        std::cout << r.to_string();
        if (const CheckOutcome* bad = r.first_failure()) {
            std::cerr << "hyperform: invariant violated: " << bad->suite << "/" << bad->invariant << ": " << bad->detail << "\n";
            return 3;
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Canonical forms of hyperplane arrangements and polytopes"};
    app.require_subcommand(1);
    Options o;
    struct Spec {
        const char* name;
        const char* help;
        bool region, hyperplane, degree, suite, order;
    };
    const Spec specs[] = {
        {"poset", "intersection poset with Moebius values", false, false, false, false, true},
        {"moebius", "mu(0, 1) of the projective arrangement", false, false, false, false, true},
        {"rank", "combinatorial rank (-1)^(n-1) mu(0, 1)", false, false, false, false, true},
        {"circuits", "minimal dependent intersecting sets", false, false, false, false, true},
        {"nbc", "no-broken-circuit sets of a given degree", false, false, true, false, true},
        {"regions", "real cells with boundedness", false, false, false, false, true},
        {"canonical", "canonical form of a region in the nbc basis", true, false, false, false, true},
        {"residue", "residue of a canonical form along a hyperplane", true, true, false, false, true},
        {"corners", "iterated residues at every nbc corner", true, false, false, false, true},
        {"adjoint", "homogenized adjoint numerator", true, false, false, false, true},
        {"product", "canonical form of a product of two regions", true, false, false, false, true},
        {"push", "pushforward of a dlog combination along w -> w^N", false, false, true, false, false},
        {"pull", "pullback of a dlog combination along z = w^N", false, false, true, false, false},
        {"complex", "dual complex and its reduced homology", false, false, false, false, false},
        {"curve", "combinatorial rank of a plane curve", false, false, false, false, false},
        {"genus", "genus formulas", false, false, false, false, false},
        {"check", "run invariant suites", true, false, false, true, true},
    };
    for (const auto& s : specs) {
        CLI::App* sub = app.add_subcommand(s.name, s.help);
        sub->add_option("--input", o.inputs, "JSON input file (repeatable)")->required();
        sub->add_option("--format", o.format, "plain, latex or json");
        if (s.region) sub->add_option("--region", o.regions, "region JSON file or inline point p1,p2,...");
        if (s.hyperplane) sub->add_option("--hyperplane", o.hyperplane, "1-based hyperplane index")->required();
        if (s.degree) sub->add_option("--degree", o.degree, "degree k, or the power N for push/pull");
        if (s.suite) sub->add_option("--suite", o.suite, "suite name or all");
        if (s.order) sub->add_option("--order", o.order, "1-based permutation applied before computing");
    }
    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }
    try {
        return run(app.get_subcommands().front()->get_name(), o);
    } catch (const Error& e) {
        std::cerr << "hyperform: " << kind_name(e.kind()) << ": " << e.what() << "\n";
        return exit_status(e.kind());
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "hyperform: validation error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "hyperform: internal inconsistency: " << e.what() << "\n";
        return 3;
    }
}
