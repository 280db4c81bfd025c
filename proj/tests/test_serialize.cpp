#include <catch_amalgamated.hpp>

#include "fixtures.hpp"

#include <hyperform/canonical.hpp>
#include <hyperform/error.hpp>
#include <hyperform/serialize.hpp>

using namespace hyperform;
using namespace fixtures;

namespace {

// emit(parse(text)) must reproduce the canonical text exactly
template <class Parse, class Emit>
void check_round_trip(const std::string& text, Parse parse, Emit emit) {
    Json j = parse_json_text(text, "inline");
    std::string once = dump(emit(parse(j)));
    CHECK(once == dump(j));
    CHECK(dump(emit(parse(parse_json_text(once, "again")))) == once);
}

}  // namespace

TEST_CASE("arrangement round trip") {
    const std::string text = R"({
  "ambient_dim": 2,
  "variables": ["x", "y"],
  "hyperplanes": [
    {"name": "H1", "constant": "0", "linear": ["1", "0"]},
    {"name": "H2", "constant": "-1/3", "linear": ["0", "1"]},
    {"name": "L", "constant": "1", "linear": ["-1", "-1"]}
  ],
  "infinity": "generic"
})";
    check_round_trip(text, arrangement_from_json, [](const Arrangement& a) { return to_json(a); });
    Arrangement a = arrangement_from_json(parse_json_text(text, "inline"));
    CHECK(a.size() == 3);
    CHECK(a[1].constant() == q("-1/3"));

    Arrangement ex(2, unit_triangle().hyperplanes(), Infinity::explicit_plane(lf(3, {-1, -1})));
    Json j = to_json(ex);
    CHECK(dump(to_json(arrangement_from_json(j))) == dump(j));
    CHECK(arrangement_from_json(j).infinity().kind == InfinityKind::explicit_plane);
    Arrangement pc(2, unit_triangle().hyperplanes(), Infinity::projective_closure());
    CHECK(dump(to_json(arrangement_from_json(to_json(pc)))) == dump(to_json(pc)));
}

TEST_CASE("schema violations name the field") {
    auto message = [](const std::string& text) {
        try {
            arrangement_from_json(parse_json_text(text, "inline"));
        } catch (const Error& e) {
            CHECK(exit_status(e.kind()) == 1);
            return std::string(e.what());
        }
        return std::string("no error");
    };
    CHECK_THAT(message(R"({"hyperplanes": []})"), Catch::Matchers::ContainsSubstring("ambient_dim"));
    CHECK_THAT(message(R"({"ambient_dim": 1, "hyperplanes": [{"constant": "0.5", "linear": ["1"]}]})"),
               Catch::Matchers::ContainsSubstring("hyperplanes[0].constant"));
    CHECK_THAT(message(R"({"ambient_dim": 2, "hyperplanes": [{"constant": "1", "linear": ["1"]}]})"),
               Catch::Matchers::ContainsSubstring("hyperplanes[0].linear"));
    CHECK_THAT(message(R"({"ambient_dim": 1, "hyperplanes": [], "infinity": "sideways"})"),
               Catch::Matchers::ContainsSubstring("infinity"));
    CHECK_THROWS_AS(parse_json_text("{", "broken.json"), Error);
}

TEST_CASE("os element, rational form, dlog and strata round trips") {
    check_round_trip(R"({"degree": 2, "terms": [{"indices": [1, 2], "coeff": "-1"}, {"indices": [1, 3], "coeff": "3/2"}]})",
                     [](const Json& j) { return os_element_from_json(j, 3); },
                     [](const OSElement& x) { return to_json(x); });
    CHECK_THROWS_AS(os_element_from_json(parse_json_text(R"({"degree": 1, "terms": [{"indices": [4], "coeff": "1"}]})", "x"), 3),
                    Error);
    // unsorted indices pick up the permutation sign
    OSElement x = os_element_from_json(parse_json_text(R"({"degree": 2, "terms": [{"indices": [2, 1], "coeff": "1"}]})", "x"), 3);
    CHECK(x == OSElement::monomial({0, 1}, -1));

    RationalForm f = to_rational_form(cube(2), canonical_form_nbc(OrlikSolomon(cube(2)), region_from_point(cube(2), cube_point(2))));
    Json fj = to_json(f);
    CHECK(rational_form_from_json(fj) == f);
    CHECK(dump(to_json(rational_form_from_json(fj))) == dump(fj));
    RationalForm one = RationalForm::dlog(lf(1, {2, -1}));
    CHECK(rational_form_from_json(to_json(one)) == one);

    DlogCombination d = pullback_power(DlogCombination::atom(1, 1) + DlogCombination::atom(1, 0, -1), 3);
    CHECK(dlog_from_json(to_json(d)) == d);
    check_round_trip(R"({"terms": [{"power": 1, "shift": "0", "coeff": "-1"}, {"power": 1, "shift": "1", "coeff": "1"}]})",
                     dlog_from_json, [](const DlogCombination& y) { return to_json(y); });

    check_round_trip(R"({
  "components": ["C", "L1", "L2"],
  "strata": {
    "[0,1]": [{"name": "p01", "faces": {"[0]": "C", "[1]": "L1"}}],
    "[1,2]": [{"name": "p12", "faces": {"[1]": "L1", "[2]": "L2"}}]
  }
})",
                     strata_from_json, [](const StrataInput& s) { return to_json(s); });
}

TEST_CASE("text emitters") {
    OSElement w = OSElement::monomial({0}, -1) + OSElement::monomial({1});
    CHECK(os_to_string(w, true) == "-\\omega_{1}+\\omega_{2}");
    CHECK(os_to_string(w) == "-w1 + w2");
    CHECK(os_to_string(OSElement::monomial({0, 1, 4}, Rational(-3, 7)), true) == "-\\frac{3}{7}\\,\\omega_{1}\\wedge\\omega_{2}\\wedge\\omega_{5}");
    CHECK(os_to_string(OSElement(2)) == "0");
    CHECK(to_string(Rational(-3, 7)) == "-3/7");
    CHECK(to_latex(Rational(-3, 7)) == "-\\frac{3}{7}");

    OSElement py = canonical_form_nbc(OrlikSolomon(pyramid()), region_from_point(pyramid(), pyramid_point()));
    CHECK(os_to_string(py, true) ==
          "-\\omega_{1}\\wedge\\omega_{2}\\wedge\\omega_{3}+\\omega_{1}\\wedge\\omega_{2}\\wedge\\omega_{5}"
          "-\\omega_{1}\\wedge\\omega_{3}\\wedge\\omega_{4}-\\omega_{1}\\wedge\\omega_{4}\\wedge\\omega_{5}"
          "+\\omega_{2}\\wedge\\omega_{3}\\wedge\\omega_{5}+\\omega_{3}\\wedge\\omega_{4}\\wedge\\omega_{5}");

    Arrangement tri(2, unit_triangle().hyperplanes(), {}, {"a", "b", "c"}, {"x", "y"});
    RationalForm t = to_rational_form(tri, canonical_form_nbc(OrlikSolomon(tri), region_from_point(tri, {q("1/4"), q("1/4")})));
    CHECK(rational_form_to_string(t, tri) == "(-1) / ((a)*(b)*(c)) dx^dy");
    CHECK(rational_form_to_string(t, tri, true) == "\\frac{-1}{(a)(b)(c)}\\,dx\\wedge dy");
    CHECK(poly_to_string(lf(1, {-1, -1}).to_poly(), {"x", "y"}) == "-x - y + 1");

    Json c = corner_residues_to_json({{{0, 1, 2}, -1}, {{0, 1, 3}, 0}});
    CHECK(c.dump() == R"({"1,2,3":"-1","1,2,4":"0"})");
}
