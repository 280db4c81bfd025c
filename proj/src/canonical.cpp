#include <hyperform/canonical.hpp>
#include <hyperform/error.hpp>
#include <hyperform/lp.hpp>

#include <algorithm>

namespace hyperform {

namespace {

void require_same_arrangement(const OrlikSolomon& os, const Region& region) {
    if (os.arrangement().hyperplanes() != region.arrangement.hyperplanes() || os.arrangement().dim() != region.arrangement.dim())
        fail(ErrorKind::mismatch, "region belongs to a different arrangement");
}

void require_bounded(const Region& region, const char* what) {
    if (!is_bounded(region.inward(), region.arrangement.dim()))
        fail(ErrorKind::precondition, std::string(what) + " needs a bounded region");
}

// With an explicit H0 the region must be bounded and avoid H0.
void check_explicit_region(const Region& region) {
    const Arrangement& arr = region.arrangement;
    if (arr.infinity().kind != InfinityKind::explicit_plane) return;
    require_bounded(region, "explicit infinity");
    const LinearFunctional& f0 = *arr.infinity().f0;
    int s = sign(f0(region.witness));
    auto lo = lp_min_over(f0 * Rational(s), region.inward(), arr.dim());
    if (s == 0 || !lo || *lo <= 0) fail(ErrorKind::precondition, "region meets the explicit hyperplane at infinity");
}

}  // namespace

OSElement canonical_form_nbc(const OrlikSolomon& os, const Region& region, const BoundaryOptions& options) {
    require_same_arrangement(os, region);
    check_explicit_region(region);
    int n = region.arrangement.dim();
    OSElement out(n);
    for (const auto& s : os.nbc(n)) {
        Flat f = affine_flat(region.arrangement, s);
        if (!f.basepoint) continue;  // meets only at the standard infinity
        int c = iterated_boundary(region, s, options);
        if (c != 0) out.add(s, c);
    }
    return out;
}

OSElement canonical_form_polygon(const OrlikSolomon& os, const Region& region, const std::vector<int>& ccw_sides) {
    require_same_arrangement(os, region);
    const Arrangement& arr = region.arrangement;
    if (arr.dim() != 2) fail(ErrorKind::dimension, "polygon formula needs a planar region");
    require_bounded(region, "polygon formula");
    IndexSet sides = facets(region);
    IndexSet given = ccw_sides;
    std::sort(given.begin(), given.end());
    if (given != sides || given.size() != ccw_sides.size())
        fail(ErrorKind::mismatch, "side list " + format_index_set(given) + " does not match the facets " + format_index_set(sides));
    // consecutive sides must meet at vertices that wind counterclockwise
    std::size_t m = ccw_sides.size();
    std::vector<Point> corners;
    for (std::size_t k = 0; k < m; ++k) {
        IndexSet pair{ccw_sides[k], ccw_sides[(k + 1) % m]};
        std::sort(pair.begin(), pair.end());
        Flat f = affine_flat(arr, pair);
        if (!f.basepoint || f.codim != 2)
            fail(ErrorKind::mismatch, "sides " + format_index_set(pair) + " are not adjacent");
        corners.push_back(*f.basepoint);
    }
    Rational area = 0;
    for (std::size_t k = 0; k < m; ++k) {
        const Point& a = corners[k];
        const Point& b = corners[(k + 1) % m];
        area += a[0] * b[1] - a[1] * b[0];
    }
    if (area <= 0) fail(ErrorKind::mismatch, "side list is not counterclockwise");
    OSElement sum(2);
    for (std::size_t k = 0; k < m; ++k) sum += OSElement::monomial({ccw_sides[k], ccw_sides[(k + 1) % m]}, -1);
    return os.normalize(sum * Rational(region.orientation));
}

OSElement canonical_form_simple_polytope(const OrlikSolomon& os, const Region& region) {
    require_same_arrangement(os, region);
    check_explicit_region(region);
    require_bounded(region, "simple-polytope formula");
    int n = region.arrangement.dim();
    OSElement sum(n);
    for (const auto& v : vertices(region)) {
        if (static_cast<int>(v.facets.size()) != n)
            fail(ErrorKind::precondition, "vertex " + format_index_set(v.facets) + " is not simple");
        sum.add(v.facets, vertex_sign_shortcut(region, v.facets));
    }
    return os.normalize(sum);
}

MultiPoly adjoint_polynomial(const Arrangement& arr, const RationalForm& form) {
    int n = arr.dim();
    if (form.chart_dim() != n || form.degree() != n) fail(ErrorKind::dimension, "adjoint needs a top form on the arrangement");
    RationalForm c = form.cancelled();
    // numerator over prod of normalized functionals ...
    MultiPoly num = c.top_numerator();
    std::vector<bool> used(arr.size(), false);
    for (const auto& f : c.denominator()) {
        if (f.exponent > 1) fail(ErrorKind::validation, "form has a pole of order " + std::to_string(f.exponent));
        auto it = std::find_if(arr.hyperplanes().begin(), arr.hyperplanes().end(),
                               [&](const LinearFunctional& h) { return h.same_hyperplane(f.functional); });
        if (it == arr.hyperplanes().end()) fail(ErrorKind::validation, "form has a pole off the arrangement");
        used[it - arr.hyperplanes().begin()] = true;
    }
    // ... then over prod f_i with the functionals exactly as given
    for (int i = 0; i < arr.size(); ++i) {
        auto [normal, scale] = arr[i].normalized();
        num *= scale;
        if (!used[i]) num = num * normal.to_poly();
    }
    int target = arr.size() - n - 1;
    if (num.degree() > target)
        fail(ErrorKind::precondition, "numerator degree " + std::to_string(num.degree()) + " exceeds " + std::to_string(target) +
                                          "; the form has a pole at infinity");
    if (target < 0) return MultiPoly(n + 1);
    return num.homogenize(target);
}

Arrangement product_arrangement(const Arrangement& a, const Arrangement& b) {
    int p = a.dim(), q = b.dim();
    auto kind_a = a.infinity().kind, kind_b = b.infinity().kind;
    if (kind_a == InfinityKind::explicit_plane || kind_b == InfinityKind::explicit_plane || kind_a != kind_b)
        fail(ErrorKind::precondition, "products need both factors in the same generic or projective-closure mode");
    std::vector<LinearFunctional> hs;
    std::vector<std::string> names, vars;
    for (int i = 0; i < a.size(); ++i) {
        Vector g = a[i].gradient();
        g.resize(p + q, Rational(0));
        hs.emplace_back(a[i].constant(), g);
        names.push_back(a.names()[i]);
    }
    for (int i = 0; i < b.size(); ++i) {
        Vector g(p, Rational(0));
        g.insert(g.end(), b[i].gradient().begin(), b[i].gradient().end());
        hs.emplace_back(b[i].constant(), g);
        names.push_back(b.names()[i]);
    }
    vars = a.variables();
    vars.insert(vars.end(), b.variables().begin(), b.variables().end());
    // fall back to default labels when the factors reuse a name
    auto has_duplicates = [](std::vector<std::string> v) {
        std::sort(v.begin(), v.end());
        return std::adjacent_find(v.begin(), v.end()) != v.end();
    };
    if (has_duplicates(vars)) vars.clear();
    if (has_duplicates(names)) names.clear();
    return Arrangement(p + q, std::move(hs), a.infinity(), std::move(names), std::move(vars));
}

ProductResult product_form(const Arrangement& a, const OSElement& x, const Arrangement& b, const OSElement& y) {
    int p = a.dim(), q = b.dim();
    if (x.degree() != p || y.degree() != q) fail(ErrorKind::dimension, "product factors must be top-degree elements");
    Arrangement prod = product_arrangement(a, b);
    OSElement shifted(q);
    for (const auto& [s, c] : y.terms()) {
        IndexSet t;
        for (int i : s) t.push_back(i + a.size());
        shifted.add(t, c);
    }
    OSElement w = wedge(x, shifted) * Rational((p * q) % 2 == 0 ? 1 : -1);
    OrlikSolomon os(prod);
    return {prod, os.normalize(w)};
}

}  // namespace hyperform
