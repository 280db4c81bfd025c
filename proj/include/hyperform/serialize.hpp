#pragma once

#include <hyperform/arrangement.hpp>
#include <hyperform/dlog.hpp>
#include <hyperform/orlik_solomon.hpp>
#include <hyperform/region.hpp>
#include <hyperform/strata.hpp>

#include <json.hpp>

#include <string>

namespace hyperform {

using Json = nlohmann::ordered_json;

enum class Format { plain, latex, json };

Format parse_format(const std::string& name);

// Every parser throws a validation error naming the offending field path.
// Hyperplane and monomial indices are 1-based in JSON; strata keys are
// 0-based component positions.

Json to_json(const Rational& q);
Rational rational_from_json(const Json& j, const std::string& path);

Json to_json(const MultiPoly& p);
MultiPoly poly_from_json(const Json& j, int num_vars, const std::string& path);

Json to_json(const LinearFunctional& f);
LinearFunctional functional_from_json(const Json& j, int num_vars, const std::string& path);

Json to_json(const Arrangement& arr);
Arrangement arrangement_from_json(const Json& j);

/// {"point": [...], "orientation": 1}
Json region_to_json(const Point& point, int orientation);
Region region_from_json(const Arrangement& arr, const Json& j);

Json to_json(const OSElement& x);
OSElement os_element_from_json(const Json& j, int num_hyperplanes);

Json to_json(const RationalForm& f);
RationalForm rational_form_from_json(const Json& j);

Json to_json(const DlogCombination& x);
DlogCombination dlog_from_json(const Json& j);

Json to_json(const StrataInput& s);
StrataInput strata_from_json(const Json& j);

Json to_json(const HomologyResult& h);
Json to_json(const FlatPoset& poset, const Arrangement& arr);
Json to_json(const std::vector<Cell>& cells);
Json index_sets_to_json(const std::vector<IndexSet>& sets);
/// {"1,2,3": "-1", ...} in the given order.
Json corner_residues_to_json(const std::vector<std::pair<IndexSet, Rational>>& corners);

/// Two-space indented, stable key order, trailing newline.
std::string dump(const Json& j);
Json parse_json_text(const std::string& text, const std::string& source);
Json read_json_file(const std::string& path);

// Text emitters.
std::string poly_to_string(const MultiPoly& p, const std::vector<std::string>& vars, bool latex = false);
std::string functional_to_string(const LinearFunctional& f, const std::vector<std::string>& vars, bool latex = false);
std::string to_latex(const Rational& q);
/// "-w1^w2 + w1^w3", or "-\omega_{1}\wedge\omega_{2}+\omega_{1}\wedge\omega_{3}".
std::string os_to_string(const OSElement& x, bool latex = false);
/// Numerator over the product of the arrangement's named functionals.
std::string rational_form_to_string(const RationalForm& f, const Arrangement& arr, bool latex = false);

}  // namespace hyperform
