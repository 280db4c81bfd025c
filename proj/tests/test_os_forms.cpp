#include <catch_amalgamated.hpp>

#include "fixtures.hpp"

#include <hyperform/canonical.hpp>

#include <algorithm>
#include <cmath>
#include <numeric>

using namespace hyperform;
using namespace fixtures;

namespace {

OSElement term(IndexSet s, Rational c) { return OSElement::monomial(s, c); }

Arrangement interval(Rational a, Rational b) { return Arrangement(1, {lf(-a, {1}), lf(-b, {1})}); }

// prod over i of dz_i / (z_i (1 - z_i)) times a sign.
RationalForm cube_form(int n, int sign) {
    std::vector<Factor> den;
    for (int i = 0; i < n; ++i) {
        Vector g(n, Rational(0));
        g[i] = 1;
        den.push_back({lf(0, g), 1});
        g[i] = -1;
        den.push_back({lf(1, g), 1});
    }
    return RationalForm::top(n, MultiPoly::constant(n, sign), den);
}

int quadrant_sign(int n) { return (n * (n + 1) / 2) % 2 == 0 ? 1 : -1; }

// Sides of a planar region in counterclockwise order of their outward normals.
std::vector<int> ccw_sides(const Region& r) {
    std::vector<std::pair<double, int>> ang;
    for (int j : facets(r)) {
        const auto& g = r.arrangement[j].gradient();
        double x = -r.signs[j] * g[0].get_d(), y = -r.signs[j] * g[1].get_d();
        ang.emplace_back(std::atan2(y, x), j);
    }
    std::sort(ang.begin(), ang.end());
    std::vector<int> out;
    for (auto& [a, j] : ang) out.push_back(j);
    return out;
}

}  // namespace

TEST_CASE("OS element arithmetic") {
    CHECK(OSElement::monomial({2, 1}) == term({1, 2}, -1));
    CHECK(OSElement::monomial({1, 1}).is_zero());
    CHECK(wedge(term({0}, 1), term({1}, 1)) == term({0, 1}, 1));
    CHECK(wedge(term({1}, 1), term({0}, 1)) == term({0, 1}, -1));
    CHECK(os_boundary({0, 1, 2}) == term({1, 2}, 1) - term({0, 2}, 1) + term({0, 1}, 1));
}

TEST_CASE("normalization in the pyramid") {
    OrlikSolomon os(pyramid());
    CHECK(os.normalize(term({1, 2, 3}, 1)) == term({0, 1, 2}, 1) - term({0, 1, 3}, 1) + term({0, 2, 3}, 1));
    CHECK(os.normalize(term({1, 3, 4}, 1)).is_zero());
    for (const auto& s : os.nbc(3)) CHECK(os.normalize(term(s, 3)) == term(s, 3));
    OSElement x = term({1, 2, 3}, 2) + term({0, 2, 4}, 5) + term({0, 1, 4}, -1);
    CHECK(os.normalize(os.normalize(x)) == os.normalize(x));
    CHECK(os.is_normal(os.normalize(x)));
    for (int k = 0; k <= 3; ++k) CHECK(os.nbc(k).size() == std::vector<std::size_t>{1, 5, 10, 7}[k]);
}

TEST_CASE("relations are zero as rational forms") {
    std::mt19937 rng(4);
    std::vector<Arrangement> arrs{pyramid(), four_lines(), five_lines()};
    for (int t = 0; t < 3; ++t) arrs.push_back(random_polytope(rng, 2 + t % 2, 5));
    for (const auto& arr : arrs) {
        OrlikSolomon os(arr);
        for (int k = 1; k <= arr.dim(); ++k)
            for (const auto& r : os.relations(k)) CHECK(to_rational_form(arr, r).is_zero());
    }
}

TEST_CASE("normal forms agree with rational forms") {
    std::mt19937 rng(12);
    for (int t = 0; t < 6; ++t) {
        Arrangement arr = random_polytope(rng, 2 + t % 2, 5 + t % 2);
        OrlikSolomon os(arr);
        int n = arr.dim();
        for (int trial = 0; trial < 5; ++trial) {
            IndexSet s;
            std::vector<int> all(arr.size());
            std::iota(all.begin(), all.end(), 0);
            std::shuffle(all.begin(), all.end(), rng);
            s.assign(all.begin(), all.begin() + n);
            OSElement x = OSElement::monomial(s);
            CHECK(to_rational_form(arr, x).equals(to_rational_form(arr, os.normalize(x))));
        }
    }
}

TEST_CASE("canonical forms by the nbc formula") {
    OrlikSolomon py(pyramid());
    OSElement expected = term({0, 1, 2}, -1) + term({0, 2, 3}, -1) + term({0, 1, 4}, 1) + term({1, 2, 4}, 1) +
                         term({2, 3, 4}, 1) + term({0, 3, 4}, -1);
    Region p = region_from_point(pyramid(), pyramid_point());
    CHECK(canonical_form_nbc(py, p) == expected);
    CHECK(canonical_form_nbc(py, p.reversed()) == -expected);

    OrlikSolomon iv(interval(0, 1));
    CHECK(canonical_form_nbc(iv, region_from_point(interval(0, 1), {q("1/2")})) == term({0}, -1) + term({1}, 1));

    OrlikSolomon tri(unit_triangle());
    OSElement w = canonical_form_nbc(tri, region_from_point(unit_triangle(), {q("1/4"), q("1/4")}));
    CHECK(w == term({0, 1}, -1) + term({0, 2}, 1) + term({1, 2}, -1));
}

TEST_CASE("rational forms of basic regions") {
    // (b - a) dz / ((z - a)(z - b))
    for (auto [a, b] : std::vector<std::pair<Rational, Rational>>{{0, 1}, {q("-2/3"), 5}}) {
        Arrangement arr = interval(a, b);
        RationalForm f = to_rational_form(arr, term({0}, -1) + term({1}, 1));
        CHECK(f.equals(RationalForm::top(1, MultiPoly::constant(1, b - a), {{lf(-a, {1}), 1}, {lf(-b, {1}), 1}})));
    }
    RationalForm t = to_rational_form(unit_triangle(), term({0, 1}, -1) + term({0, 2}, 1) + term({1, 2}, -1));
    CHECK(t.equals(RationalForm::top(2, MultiPoly::constant(2, -1), {{lf(0, {1, 0}), 1}, {lf(0, {0, 1}), 1}, {lf(1, {-1, -1}), 1}})));
    CHECK(t.denominator().size() == 3);

    OrlikSolomon sq(cube(2));
    OSElement ws = canonical_form_nbc(sq, region_from_point(cube(2), cube_point(2)));
    CHECK(to_rational_form(cube(2), ws).equals(cube_form(2, -1)));
}

TEST_CASE("polygon formula") {
    OrlikSolomon tri(unit_triangle());
    Region r = region_from_point(unit_triangle(), {q("1/4"), q("1/4")});
    OSElement poly = canonical_form_polygon(tri, r, {1, 2, 0});
    CHECK(poly == tri.normalize(-(term({1, 2}, 1) + term({2, 0}, 1) + term({0, 1}, 1))));
    CHECK(poly == canonical_form_nbc(tri, r));
    CHECK_THROWS_AS(canonical_form_polygon(tri, r, {2, 1, 0}), Error);
    CHECK_THROWS_AS(canonical_form_polygon(tri, r, {1, 2}), Error);

    Region sq = region_from_point(cube(2), cube_point(2));
    OrlikSolomon os(cube(2));
    CHECK(canonical_form_polygon(os, sq, ccw_sides(sq)) == canonical_form_nbc(os, sq));

    // pentagon with rational approximations of the regular normals
    std::vector<LinearFunctional> hs;
    for (int k = 0; k < 5; ++k) {
        double th = 2 * M_PI * k / 5;
        hs.push_back(lf(1, {Rational(static_cast<int>(std::lround(-100 * std::cos(th))), 100),
                            Rational(static_cast<int>(std::lround(-100 * std::sin(th))), 100)}));
    }
    Arrangement pent(2, hs);
    Region pr = region_from_point(pent, {0, 0});
    OrlikSolomon po(pent);
    CHECK(canonical_form_polygon(po, pr, ccw_sides(pr)) == canonical_form_nbc(po, pr));
    CHECK(canonical_form_polygon(po, pr.reversed(), ccw_sides(pr)) == -canonical_form_nbc(po, pr));
}

TEST_CASE("simple polytope formula") {
    for (int n = 1; n <= 4; ++n) {
        OrlikSolomon os(cube(n));
        Region r = region_from_point(cube(n), cube_point(n));
        OSElement w = canonical_form_simple_polytope(os, r);
        CHECK(w == canonical_form_nbc(os, r));
        CHECK(to_rational_form(cube(n), w).equals(cube_form(n, quadrant_sign(n))));
    }
    OrlikSolomon py(pyramid());
    CHECK_THROWS_AS(canonical_form_simple_polytope(py, region_from_point(pyramid(), pyramid_point())), Error);
    std::mt19937 rng(17);
    for (int t = 0; t < 15; ++t) {
        int n = 1 + t % 3;
        Arrangement arr = random_polytope(rng, n, n + 2 + t % 3);
        OrlikSolomon os(arr);
        Region r = region_from_point(arr, Point(n, Rational(0)));
        bool simple = true;
        for (const auto& v : vertices(r)) simple = simple && static_cast<int>(v.facets.size()) == n;
        if (!simple) continue;
        CHECK(canonical_form_simple_polytope(os, r) == canonical_form_nbc(os, r));
    }
}

TEST_CASE("residues") {
    Arrangement sq = cube(2);
    OrlikSolomon os(sq);
    Region r = region_from_point(sq, cube_point(2));
    ResidueResult res = residue(os, canonical_form_nbc(os, r), 3);
    // -dlog((z1 - 1)/z1) = w1 - w2 on {z1, 1 - z1}
    CHECK(res.element == term({0}, 1) - term({1}, 1));
    CHECK(residue(os, term({0, 2}, 1), 3).element.is_zero());

    // polygon: Res_{L_i} = (w_{i+1} - w_{i-1}) restricted
    OrlikSolomon tri(unit_triangle());
    OSElement w = canonical_form_nbc(tri, region_from_point(unit_triangle(), {q("1/4"), q("1/4")}));
    std::vector<int> ccw{1, 2, 0};
    for (int k = 0; k < 3; ++k) {
        int i = ccw[k], next = ccw[(k + 1) % 3], prev = ccw[(k + 2) % 3];
        ResidueResult rr = residue(tri, w, i);
        OSElement expected = term({rr.restriction.index_map[next]}, 1) - term({rr.restriction.index_map[prev]}, 1);
        CHECK(rr.element == OrlikSolomon(rr.restriction.arrangement).normalize(expected));
    }
}

TEST_CASE("recursion: residues are canonical forms of facets") {
    std::mt19937 rng(31);
    for (int t = 0; t < 12; ++t) {
        int n = 1 + t % 3;
        Arrangement arr = random_polytope(rng, n, n + 2 + t % 3);
        OrlikSolomon os(arr);
        Region r = region_from_point(arr, Point(n, Rational(0)), t % 2 ? -1 : 1);
        OSElement w = canonical_form_nbc(os, r);
        for (int i = 0; i < arr.size(); ++i) {
            ResidueResult res = residue(os, w, i);
            auto fr = facet_region(r, i);
            if (!fr) {
                CHECK(res.element.is_zero());
                continue;
            }
            OrlikSolomon sub(fr->first.arrangement);
            CHECK(res.element == canonical_form_nbc(sub, fr->second));
        }
    }
}

TEST_CASE("corner residues") {
    OrlikSolomon py(pyramid());
    Region p = region_from_point(pyramid(), pyramid_point());
    auto c = corner_residues(py, canonical_form_nbc(py, p));
    std::vector<Rational> got;
    for (auto& [s, v] : c) got.push_back(v);
    // lexicographic nbc order: 123, 124, 125, 134, 145, 235, 345
    CHECK(got == std::vector<Rational>{-1, 0, 1, -1, -1, 1, 1});
    for (const auto& j : py.nbc(3))
        for (auto& [s, v] : corner_residues(py, term(j, 1))) CHECK(v == (s == j ? 1 : 0));
    for (auto& [s, v] : corner_residues(py, OSElement(3))) CHECK(v == 0);
}

TEST_CASE("wedge commutes with conversion to rational forms") {
    std::mt19937 rng(2);
    Arrangement arr = random_polytope(rng, 3, 6);
    std::uniform_int_distribution<int> pick(0, arr.size() - 1);
    for (int t = 0; t < 20; ++t) {
        OSElement x = term({pick(rng)}, 1);
        OSElement y = OSElement::monomial({pick(rng), pick(rng)});
        RationalForm lhs = to_rational_form(arr, wedge(x, y));
        RationalForm rhs = wedge(to_rational_form(arr, x), to_rational_form(arr, y));
        CHECK(lhs.equals(rhs));
    }
}

TEST_CASE("triangulation and order independence") {
    std::mt19937 rng(41);
    for (int t = 0; t < 8; ++t) {
        int n = 2 + t % 2;
        Arrangement arr = random_polytope(rng, n, n + 2);
        Region r = region_from_point(arr, Point(n, Rational(0)));
        RationalForm whole = to_rational_form(arr, canonical_form_nbc(OrlikSolomon(arr), r));
        Vector g(n);
        std::uniform_int_distribution<int> d(-3, 3);
        for (auto& v : g) v = d(rng);
        if (is_zero(g)) g[0] = 1;
        LinearFunctional h = lf(Rational(d(rng), 7), g);
        CutResult cut = cut_region(r, h);
        OrlikSolomon os(cut.arrangement);
        RationalForm sum = to_rational_form(cut.arrangement, canonical_form_nbc(os, cut.positive)) +
                           to_rational_form(cut.arrangement, canonical_form_nbc(os, cut.negative));
        CHECK(sum.equals(whole));
        CHECK_FALSE(sum.cancelled().has_factor(h));

        std::vector<int> order(arr.size());
        std::iota(order.begin(), order.end(), 0);
        std::shuffle(order.begin(), order.end(), rng);
        Arrangement perm = arr.permuted(order);
        RationalForm again = to_rational_form(perm, canonical_form_nbc(OrlikSolomon(perm), region_from_point(perm, r.witness)));
        CHECK(again == whole);
    }
}

TEST_CASE("adjoints") {
    for (int n = 1; n <= 4; ++n) {
        Arrangement s = ordered_simplex(n);
        OrlikSolomon os(s);
        RationalForm f = to_rational_form(s, canonical_form_nbc(os, region_from_point(s, ordered_simplex_point(n))));
        MultiPoly adj = adjoint_polynomial(s, f);
        CHECK(adj == MultiPoly::constant(n + 1, quadrant_sign(n)));
    }
    RationalForm sq = cube_form(2, -1);
    MultiPoly adj = adjoint_polynomial(cube(2), sq);
    CHECK(adj.degree() == 1);
    CHECK(adj == MultiPoly::variable(3, 0) * Rational(-1));

    OrlikSolomon py(pyramid());
    RationalForm pf = to_rational_form(pyramid(), canonical_form_nbc(py, region_from_point(pyramid(), pyramid_point())));
    MultiPoly pa = adjoint_polynomial(pyramid(), pf);
    CHECK(pa.num_vars() == 4);
    CHECK(pa.degree() == 1);
    CHECK(pa.is_homogeneous());

    RationalForm doubled = RationalForm::top(1, MultiPoly::constant(1, 1), {{lf(0, {1}), 2}});
    CHECK_THROWS_AS(adjoint_polynomial(Arrangement(1, {lf(0, {1})}), doubled), Error);
}

TEST_CASE("products") {
    Arrangement i1 = cube(1);
    OrlikSolomon o1(i1);
    OSElement w1 = canonical_form_nbc(o1, region_from_point(i1, cube_point(1)));
    ProductResult sq = product_form(i1, w1, i1, w1);
    OrlikSolomon o2(cube(2));
    CHECK(sq.element == canonical_form_nbc(o2, region_from_point(cube(2), cube_point(2))));
    CHECK(to_rational_form(sq.arrangement, sq.element).equals(cube_form(2, -1)));

    Arrangement point(0, {});
    ProductResult same = product_form(i1, w1, point, OSElement::one());
    CHECK(same.element == w1);

    ProductResult cube3 = product_form(cube(2), sq.element, i1, w1);
    OrlikSolomon o3(cube(3));
    CHECK(cube3.element == canonical_form_simple_polytope(o3, region_from_point(cube(3), cube_point(3))));
}

TEST_CASE("explicit infinity gives the same rational form") {
    Arrangement sq = cube(2);
    Arrangement ex(2, sq.hyperplanes(), Infinity::explicit_plane(lf(3, {-1, -1})));
    OrlikSolomon oe(ex), og(sq);
    Region re = region_from_point(ex, cube_point(2)), rg = region_from_point(sq, cube_point(2));
    CHECK(to_rational_form(ex, canonical_form_nbc(oe, re)).equals(to_rational_form(sq, canonical_form_nbc(og, rg))));
    // H0 through the region is rejected
    Arrangement bad(2, sq.hyperplanes(), Infinity::explicit_plane(lf(-1, {1, 1})));
    CHECK_THROWS_AS(canonical_form_nbc(OrlikSolomon(bad), region_from_point(bad, {q("1/4"), q("1/4")})), Error);
}
