#include <hyperform/error.hpp>
#include <hyperform/serialize.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>

namespace hyperform {

namespace {

[[noreturn]] void bad(const std::string& path, const std::string& rule) {
    fail(ErrorKind::validation, "field " + path + ": " + rule);
}

const Json& field(const Json& j, const char* key, const std::string& path) {
    if (!j.is_object()) bad(path, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) bad(path.empty() ? key : path + "." + key, "missing");
    return *it;
}

std::string sub(const std::string& path, const std::string& key) { return path.empty() ? key : path + "." + key; }
std::string at(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

const Json& array_of(const Json& j, const std::string& path) {
    if (!j.is_array()) bad(path, "expected an array");
    return j;
}

int int_from_json(const Json& j, const std::string& path) {
    if (!j.is_number_integer()) bad(path, "expected an integer");
    return j.get<int>();
}

std::string string_from_json(const Json& j, const std::string& path) {
    if (!j.is_string()) bad(path, "expected a string");
    return j.get<std::string>();
}

Vector vector_from_json(const Json& j, std::size_t size, const std::string& path) {
    array_of(j, path);
    if (j.size() != size) bad(path, "expected " + std::to_string(size) + " entries");
    Vector v;
    for (std::size_t i = 0; i < j.size(); ++i) v.push_back(rational_from_json(j[i], at(path, i)));
    return v;
}

Json vector_to_json(const Vector& v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(to_json(x));
    return a;
}

// 1-based JSON index list to a sorted 0-based set
IndexSet indices_from_json(const Json& j, int bound, const std::string& path) {
    array_of(j, path);
    IndexSet s;
    for (std::size_t i = 0; i < j.size(); ++i) {
        int v = int_from_json(j[i], at(path, i));
        if (v < 1 || v > bound) bad(at(path, i), "index out of range 1.." + std::to_string(bound));
        s.push_back(v - 1);
    }
    return s;
}

Json indices_to_json(const IndexSet& s) {
    Json a = Json::array();
    for (int i : s) a.push_back(i + 1);
    return a;
}

std::string key_of(const IndexSet& s) {
    std::string out = "[";
    for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
    return out + "]";
}

IndexSet key_from_string(const std::string& key, const std::string& path) {
    Json j;
    try {
        j = Json::parse(key);
    } catch (const Json::parse_error&) {
        bad(path, "key '" + key + "' is not an index list");
    }
    array_of(j, path);
    IndexSet s;
    for (std::size_t i = 0; i < j.size(); ++i) s.push_back(int_from_json(j[i], path));
    return s;
}

std::string signed_join(const std::vector<std::pair<Rational, std::string>>& terms, bool latex) {
    if (terms.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [c, body] : terms) {
        Rational mag = c < 0 ? Rational(-c) : c;
        if (latex)
            out += c < 0 ? "-" : (first ? "" : "+");
        else if (first)
            out += c < 0 ? "-" : "";
        else
            out += c < 0 ? " - " : " + ";
        std::string coeff = latex ? to_latex(mag) : to_string(mag);
        if (body.empty())
            out += coeff;
        else if (mag == 1)
            out += body;
        else
            out += coeff + (latex ? "\\," : "*") + body;
        first = false;
    }
    return out;
}

std::string monomial_body(const Exponent& e, const std::vector<std::string>& vars, bool latex) {
    std::string body;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!body.empty() && !latex) body += "*";
        body += vars[i];
        if (e[i] > 1) body += latex ? "^{" + std::to_string(e[i]) + "}" : "^" + std::to_string(e[i]);
    }
    return body;
}

std::vector<std::string> latex_vars(const std::vector<std::string>& vars) {
    std::vector<std::string> out;
    for (const auto& v : vars) {
        // z1 -> z_{1}
        std::size_t k = v.find_first_of("0123456789");
        out.push_back(k == std::string::npos || k == 0 ? v : v.substr(0, k) + "_{" + v.substr(k) + "}");
    }
    return out;
}

}  // namespace

Format parse_format(const std::string& name) {
    if (name == "plain") return Format::plain;
    if (name == "latex") return Format::latex;
    if (name == "json") return Format::json;
    fail(ErrorKind::validation, "unknown format '" + name + "' (plain, latex, json)");
}

Json to_json(const Rational& q) { return to_string(q); }

Rational rational_from_json(const Json& j, const std::string& path) {
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (!j.is_string()) bad(path, "expected a rational string \"p/q\"");
    try {
        return parse_rational(j.get<std::string>());
    } catch (const Error& e) {
        bad(path, e.what());
    }
}

Json to_json(const MultiPoly& p) {
    Json a = Json::array();
    for (const auto& [e, c] : p.terms()) a.push_back({{"exp", e}, {"coeff", to_json(c)}});
    return a;
}

MultiPoly poly_from_json(const Json& j, int num_vars, const std::string& path) {
    array_of(j, path);
    MultiPoly p(num_vars);
    for (std::size_t i = 0; i < j.size(); ++i) {
        std::string tp = at(path, i);
        const Json& e = field(j[i], "exp", tp);
        array_of(e, sub(tp, "exp"));
        if (static_cast<int>(e.size()) != num_vars) bad(sub(tp, "exp"), "expected " + std::to_string(num_vars) + " exponents");
        Exponent ex;
        for (std::size_t k = 0; k < e.size(); ++k) {
            int v = int_from_json(e[k], at(sub(tp, "exp"), k));
            if (v < 0) bad(at(sub(tp, "exp"), k), "exponents must be nonnegative");
            ex.push_back(v);
        }
        p.add_term(ex, rational_from_json(field(j[i], "coeff", tp), sub(tp, "coeff")));
    }
    return p;
}

Json to_json(const LinearFunctional& f) {
    return {{"constant", to_json(f.constant())}, {"linear", vector_to_json(f.gradient())}};
}

LinearFunctional functional_from_json(const Json& j, int num_vars, const std::string& path) {
    Rational c = rational_from_json(field(j, "constant", path), sub(path, "constant"));
    Vector g = vector_from_json(field(j, "linear", path), num_vars, sub(path, "linear"));
    return LinearFunctional(c, g);
}

Json to_json(const Arrangement& arr) {
    Json j;
    j["ambient_dim"] = arr.dim();
    j["variables"] = arr.variables();
    Json hs = Json::array();
    for (int i = 0; i < arr.size(); ++i) {
        Json h;
        h["name"] = arr.names()[i];
        h["constant"] = to_json(arr[i].constant());
        h["linear"] = vector_to_json(arr[i].gradient());
        hs.push_back(h);
    }
    j["hyperplanes"] = hs;
    switch (arr.infinity().kind) {
    case InfinityKind::generic: j["infinity"] = "generic"; break;
    case InfinityKind::projective_closure: j["infinity"] = "projective_closure"; break;
    case InfinityKind::explicit_plane: j["infinity"] = {{"explicit", to_json(*arr.infinity().f0)}}; break;
    }
    return j;
}

Arrangement arrangement_from_json(const Json& j) {
    int n = int_from_json(field(j, "ambient_dim", ""), "ambient_dim");
    if (n < 0) bad("ambient_dim", "must be nonnegative");
    std::vector<std::string> vars;
    if (j.contains("variables")) {
        const Json& v = array_of(j["variables"], "variables");
        for (std::size_t i = 0; i < v.size(); ++i) vars.push_back(string_from_json(v[i], at("variables", i)));
        if (static_cast<int>(vars.size()) != n) bad("variables", "expected " + std::to_string(n) + " names");
    }
    const Json& hs = array_of(field(j, "hyperplanes", ""), "hyperplanes");
    std::vector<LinearFunctional> fs;
    std::vector<std::string> names;
    for (std::size_t i = 0; i < hs.size(); ++i) {
        std::string p = at("hyperplanes", i);
        fs.push_back(functional_from_json(hs[i], n, p));
        names.push_back(hs[i].contains("name") ? string_from_json(hs[i]["name"], sub(p, "name")) : "H" + std::to_string(i + 1));
    }
    Infinity inf;
    if (j.contains("infinity")) {
        const Json& v = j["infinity"];
        if (v == "generic")
            inf = Infinity::generic();
        else if (v == "projective_closure")
            inf = Infinity::projective_closure();
        else if (v.is_object() && v.contains("explicit"))
            inf = Infinity::explicit_plane(functional_from_json(v["explicit"], n, "infinity.explicit"));
        else
            bad("infinity", "expected \"generic\", \"projective_closure\" or {\"explicit\": {...}}");
    }
    try {
        return Arrangement(n, std::move(fs), std::move(inf), std::move(names), std::move(vars));
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::internal) throw;
        fail(e.kind(), std::string("arrangement: ") + e.what());
    }
}

Json region_to_json(const Point& point, int orientation) {
    return {{"point", vector_to_json(point)}, {"orientation", orientation}};
}

Region region_from_json(const Arrangement& arr, const Json& j) {
    Point p = vector_from_json(field(j, "point", ""), arr.dim(), "point");
    int o = j.contains("orientation") ? int_from_json(j["orientation"], "orientation") : 1;
    if (o != 1 && o != -1) bad("orientation", "must be 1 or -1");
    return region_from_point(arr, p, o);
}

Json to_json(const OSElement& x) {
    Json terms = Json::array();
    for (const auto& [s, c] : x.terms()) terms.push_back({{"indices", indices_to_json(s)}, {"coeff", to_json(c)}});
    return {{"degree", x.degree()}, {"terms", terms}};
}

OSElement os_element_from_json(const Json& j, int num_hyperplanes) {
    int k = int_from_json(field(j, "degree", ""), "degree");
    if (k < 0) bad("degree", "must be nonnegative");
    const Json& terms = array_of(field(j, "terms", ""), "terms");
    OSElement x(k);
    for (std::size_t i = 0; i < terms.size(); ++i) {
        std::string p = at("terms", i);
        IndexSet s = indices_from_json(field(terms[i], "indices", p), num_hyperplanes, sub(p, "indices"));
        if (static_cast<int>(s.size()) != k) bad(sub(p, "indices"), "expected " + std::to_string(k) + " indices");
        x += OSElement::monomial(s, rational_from_json(field(terms[i], "coeff", p), sub(p, "coeff")));
    }
    return x;
}

Json to_json(const RationalForm& f) {
    Json den = Json::array();
    for (const auto& fac : f.denominator()) {
        Json d = to_json(fac.functional);
        d["exponent"] = fac.exponent;
        den.push_back(d);
    }
    Json comps = Json::array();
    for (const auto& [s, num] : f.components()) {
        Json ds = Json::array();
        for (int i : s) ds.push_back(i + 1);
        comps.push_back({{"differentials", ds}, {"numerator", to_json(num)}});
    }
    return {{"chart_dim", f.chart_dim()}, {"degree", f.degree()}, {"denominator", den}, {"components", comps}};
}

RationalForm rational_form_from_json(const Json& j) {
    int n = int_from_json(field(j, "chart_dim", ""), "chart_dim");
    int k = int_from_json(field(j, "degree", ""), "degree");
    if (n < 0 || k < 0 || k > n) bad("degree", "must lie between 0 and chart_dim");
    std::vector<Factor> den;
    const Json& d = array_of(field(j, "denominator", ""), "denominator");
    for (std::size_t i = 0; i < d.size(); ++i) {
        std::string p = at("denominator", i);
        int e = d[i].contains("exponent") ? int_from_json(d[i]["exponent"], sub(p, "exponent")) : 1;
        den.push_back({functional_from_json(d[i], n, p), e});
    }
    RationalForm::Components comps;
    const Json& c = array_of(field(j, "components", ""), "components");
    for (std::size_t i = 0; i < c.size(); ++i) {
        std::string p = at("components", i);
        IndexSet s = indices_from_json(field(c[i], "differentials", p), n, sub(p, "differentials"));
        if (comps.count(s)) bad(p, "repeated differential set");
        comps[s] = poly_from_json(field(c[i], "numerator", p), n, sub(p, "numerator"));
    }
    try {
        return RationalForm::from_components(n, k, comps, den);
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::internal) throw;
        fail(e.kind(), std::string("rational form: ") + e.what());
    }
}

Json to_json(const DlogCombination& x) {
    Json terms = Json::array();
    for (const auto& [a, c] : x.terms())
        terms.push_back({{"power", a.power}, {"shift", to_json(a.shift)}, {"coeff", to_json(c)}});
    return {{"terms", terms}};
}

DlogCombination dlog_from_json(const Json& j) {
    const Json& terms = array_of(field(j, "terms", ""), "terms");
    DlogCombination x;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        std::string p = at("terms", i);
        int power = terms[i].contains("power") ? int_from_json(terms[i]["power"], sub(p, "power")) : 1;
        if (power < 1) bad(sub(p, "power"), "must be positive");
        x.add({power, rational_from_json(field(terms[i], "shift", p), sub(p, "shift"))},
              rational_from_json(field(terms[i], "coeff", p), sub(p, "coeff")));
    }
    return x;
}

Json to_json(const StrataInput& s) {
    Json strata = Json::object();
    for (const auto& [key, list] : s.strata) {
        Json arr = Json::array();
        for (const auto& st : list) {
            Json faces = Json::object();
            for (const auto& [fk, name] : st.faces) faces[key_of(fk)] = name;
            arr.push_back({{"name", st.name}, {"faces", faces}});
        }
        strata[key_of(key)] = arr;
    }
    return {{"components", s.components}, {"strata", strata}};
}

StrataInput strata_from_json(const Json& j) {
    StrataInput s;
    const Json& comps = array_of(field(j, "components", ""), "components");
    for (std::size_t i = 0; i < comps.size(); ++i) s.components.push_back(string_from_json(comps[i], at("components", i)));
    if (!j.contains("strata")) return s;
    const Json& strata = j["strata"];
    if (!strata.is_object()) bad("strata", "expected an object keyed by index lists");
    for (auto it = strata.begin(); it != strata.end(); ++it) {
        std::string p = "strata." + it.key();
        IndexSet key = key_from_string(it.key(), p);
        auto& list = s.strata[key];
        const Json& arr = array_of(it.value(), p);
        for (std::size_t i = 0; i < arr.size(); ++i) {
            std::string sp = at(p, i);
            Stratum st{string_from_json(field(arr[i], "name", sp), sub(sp, "name")), {}};
            if (arr[i].contains("faces")) {
                const Json& faces = arr[i]["faces"];
                if (!faces.is_object()) bad(sub(sp, "faces"), "expected an object");
                for (auto f = faces.begin(); f != faces.end(); ++f)
                    st.faces[key_from_string(f.key(), sub(sp, "faces"))] = string_from_json(f.value(), sub(sp, "faces." + f.key()));
            }
            list.push_back(st);
        }
    }
    return s;
}

Json to_json(const HomologyResult& h) {
    return {{"reduced", h.reduced}, {"euler_characteristic", h.euler_characteristic}};
}

Json to_json(const FlatPoset& poset, const Arrangement& arr) {
    Json flats = Json::array();
    for (std::size_t i = 0; i < poset.flats.size(); ++i) {
        const Flat& f = poset.flats[i];
        Json closure = Json::array();
        for (int k : f.closure) closure.push_back(k == arr.size() ? 0 : k + 1);
        Json jf{{"closure", closure}, {"codim", f.codim}, {"moebius", poset.moebius[i]}};
        if (f.basepoint) jf["basepoint"] = vector_to_json(*f.basepoint);
        flats.push_back(jf);
    }
    return {{"essential", poset.essential}, {"flats", flats}};
}

Json to_json(const std::vector<Cell>& cells) {
    Json a = Json::array();
    for (const auto& c : cells) {
        std::string signs;
        for (int s : c.signs) signs += s > 0 ? '+' : '-';
        a.push_back({{"signs", signs}, {"witness", vector_to_json(c.witness)}, {"bounded", c.bounded}});
    }
    return a;
}

Json index_sets_to_json(const std::vector<IndexSet>& sets) {
    Json a = Json::array();
    for (const auto& s : sets) a.push_back(indices_to_json(s));
    return a;
}

Json corner_residues_to_json(const std::vector<std::pair<IndexSet, Rational>>& corners) {
    Json o = Json::object();
    for (const auto& [s, v] : corners) {
        std::string key;
        for (std::size_t i = 0; i < s.size(); ++i) key += (i ? "," : "") + std::to_string(s[i] + 1);
        o[key] = to_json(v);
    }
    return o;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json parse_json_text(const std::string& text, const std::string& source) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        fail(ErrorKind::validation, source + ": " + e.what());
    }
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorKind::validation, path + ": cannot open file");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_json_text(ss.str(), path);
}

std::string to_latex(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    std::string sgn = q < 0 ? "-" : "";
    Integer num = abs(q.get_num());
    return sgn + "\\frac{" + num.get_str() + "}{" + q.get_den().get_str() + "}";
}

std::string poly_to_string(const MultiPoly& p, const std::vector<std::string>& vars, bool latex) {
    std::vector<std::string> names = latex ? latex_vars(vars) : vars;
    std::vector<std::pair<Rational, std::string>> terms;
    for (const auto& [e, c] : p.terms()) terms.emplace_back(c, monomial_body(e, names, latex));
    return signed_join(terms, latex);
}

std::string functional_to_string(const LinearFunctional& f, const std::vector<std::string>& vars, bool latex) {
    return poly_to_string(f.to_poly(), vars, latex);
}

std::string os_to_string(const OSElement& x, bool latex) {
    std::vector<std::pair<Rational, std::string>> terms;
    for (const auto& [s, c] : x.terms()) {
        std::string body;
        for (std::size_t i = 0; i < s.size(); ++i) {
            std::string idx = std::to_string(s[i] + 1);
            if (latex)
                body += (i ? "\\wedge" : "") + ("\\omega_{" + idx + "}");
            else
                body += (i ? "^" : "") + ("w" + idx);
        }
        terms.emplace_back(c, body);
    }
    return signed_join(terms, latex);
}

std::string rational_form_to_string(const RationalForm& f, const Arrangement& arr, bool latex) {
    if (f.is_zero()) return "0";
    std::vector<std::string> names = latex ? latex_vars(arr.variables()) : arr.variables();
    if (static_cast<int>(names.size()) != f.chart_dim()) {
        names.clear();
        for (int i = 0; i < f.chart_dim(); ++i) names.push_back(latex ? "z_{" + std::to_string(i + 1) + "}" : "z" + std::to_string(i + 1));
    }
    // rescale every factor that is a named hyperplane back to the given functional
    Rational scale = 1;
    std::vector<std::pair<int, std::string>> labelled;  // arrangement position, text
    for (const auto& fac : f.denominator()) {
        std::string label;
        int pos = arr.size();
        for (int i = 0; i < arr.size() && label.empty(); ++i) {
            if (arr[i].num_vars() != f.chart_dim() || !arr[i].same_hyperplane(fac.functional)) continue;
            auto [normal, s] = arr[i].normalized();
            for (int e = 0; e < fac.exponent; ++e) scale *= s;
            label = latex ? latex_vars({arr.names()[i]})[0] : arr.names()[i];
            pos = i;
        }
        if (label.empty()) label = functional_to_string(fac.functional, arr.variables().size() == names.size() ? arr.variables() : names, latex);
        std::string power = fac.exponent == 1 ? "" : (latex ? "^{" + std::to_string(fac.exponent) + "}" : "^" + std::to_string(fac.exponent));
        labelled.emplace_back(pos, "(" + label + ")" + power);
    }
    std::stable_sort(labelled.begin(), labelled.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    std::string den;
    for (const auto& [pos, text] : labelled) den += (den.empty() || latex ? "" : "*") + text;
    std::string out;
    bool first = true;
    for (const auto& [s, num] : f.components()) {
        std::string diff;
        for (std::size_t i = 0; i < s.size(); ++i)
            diff += (i ? (latex ? "\\wedge " : "^") : "") + std::string("d") + names[s[i]];
        std::string top = poly_to_string(num * scale, names, latex);
        std::string term;
        if (latex)
            term = den.empty() ? "(" + top + ")" : "\\frac{" + top + "}{" + den + "}";
        else
            term = den.empty() ? "(" + top + ")" : "(" + top + ") / (" + den + ")";
        if (!diff.empty()) term += (latex ? "\\," : " ") + diff;
        out += (first ? "" : (latex ? "+" : " + ")) + term;
        first = false;
    }
    return out;
}

}  // namespace hyperform
