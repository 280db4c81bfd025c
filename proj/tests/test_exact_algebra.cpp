#include <catch_amalgamated.hpp>

#include <hyperform/error.hpp>
#include <hyperform/lp.hpp>
#include <hyperform/matrix.hpp>
#include <hyperform/polynomial.hpp>
#include <hyperform/rational_form.hpp>

#include <algorithm>
#include <random>

using namespace hyperform;

namespace {

Rational q(const char* s) { return parse_rational(s); }

LinearFunctional lf(Rational c, Vector g) { return {std::move(c), std::move(g)}; }

// Maximum of c.x over {A x <= b} in the plane by trying every pair of
// constraint lines. Only valid when the region is bounded and nonempty.
std::optional<Rational> brute_max_2d(const Vector& c, const std::vector<Vector>& a, const Vector& b) {
    std::optional<Rational> best;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = i + 1; j < a.size(); ++j) {
            Rational det = a[i][0] * a[j][1] - a[i][1] * a[j][0];
            if (det == 0) continue;
            Point x{(b[i] * a[j][1] - a[i][1] * b[j]) / det, (a[i][0] * b[j] - b[i] * a[j][0]) / det};
            bool feasible = true;
            for (std::size_t k = 0; k < a.size(); ++k)
                if (dot(a[k], x) > b[k]) feasible = false;
            if (!feasible) continue;
            Rational v = dot(c, x);
            if (!best || v > *best) best = v;
        }
    return best;
}

}  // namespace

TEST_CASE("rational parsing is strict and canonical") {
    CHECK(to_string(q("6/4")) == "3/2");
    CHECK(to_string(q("-0/5")) == "0");
    CHECK(to_string(q("+7")) == "7");
    CHECK_THROWS_AS(q("0.5"), Error);
    CHECK_THROWS_AS(q("1/0"), Error);
    CHECK_THROWS_AS(q(""), Error);
    CHECK_THROWS_AS(q("1/-2"), Error);
}

TEST_CASE("polynomial arithmetic") {
    MultiPoly x = MultiPoly::variable(2, 0), y = MultiPoly::variable(2, 1);
    MultiPoly p = (x + y).pow(2);
    CHECK(p.coefficient({1, 1}) == 2);
    CHECK(p.degree() == 2);
    CHECK(p.is_homogeneous());
    CHECK((p - x * x - y * y - x * y * Rational(2)).is_zero());
    CHECK(p.evaluate({q("1/2"), q("1/3")}) == q("25/36"));
    MultiPoly h = (x + MultiPoly::constant(2, 1)).homogenize(2);
    CHECK(h.num_vars() == 3);
    CHECK(h.is_homogeneous());
    CHECK(h.coefficient({1, 1, 0}) == 1);
    CHECK(h.coefficient({2, 0, 0}) == 1);
    CHECK(h.coefficient({0, 2, 0}) == 0);
    CHECK_THROWS_AS(p.homogenize(1), Error);
    CHECK_THROWS_AS(p + MultiPoly::variable(3, 0), Error);
}

TEST_CASE("exact division round-trips products of linear forms") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> d(-4, 4);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 1 + trial % 3;
        auto rand_lin = [&] {
            Vector g(n);
            for (auto& v : g) v = d(rng);
            if (is_zero(g)) g[0] = 1;
            return lf(d(rng), g);
        };
        LinearFunctional a = rand_lin(), b = rand_lin(), c = rand_lin();
        MultiPoly prod = a.to_poly() * b.to_poly() * c.to_poly();
        auto quot = exact_divide(prod, b);
        REQUIRE(quot);
        CHECK(*quot == a.to_poly() * c.to_poly());
        // Adding a nonzero constant breaks divisibility unless b itself is constant on its zero set.
        auto bad = exact_divide(prod + MultiPoly::constant(n, 1), b);
        CHECK_FALSE(bad);
    }
}

TEST_CASE("rref, rank, kernel and determinant agree") {
    ExactMatrix m = ExactMatrix::from_rows({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}}, 3);
    CHECK(rank(m) == 2);
    CHECK(determinant(m) == 0);
    auto ker = kernel_basis(m);
    REQUIRE(ker.size() == 1);
    for (std::size_t r = 0; r < 3; ++r) CHECK(dot(m.row(r), ker[0]) == 0);
    ExactMatrix v = ExactMatrix::from_rows({{2, 1}, {1, 3}}, 2);
    CHECK(determinant(v) == 5);
    CHECK(determinant(v.transpose()) == 5);
    auto co = coordinates_in({{1, 0, 1}, {0, 1, 1}}, {2, 3, 5});
    REQUIRE(co);
    CHECK(*co == Vector{2, 3});
    CHECK_FALSE(coordinates_in({{1, 0, 1}}, {0, 1, 0}));
    auto empty = coordinates_in({}, {0, 0});
    REQUIRE(empty);
    CHECK(empty->empty());
    CHECK_FALSE(coordinates_in({}, {0, 1}));
}

TEST_CASE("simplex matches vertex enumeration on random polygons") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> d(-5, 5);
    int checked = 0;
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<Vector> a;
        Vector b;
        int m = 3 + trial % 5;
        for (int i = 0; i < m; ++i) {
            a.push_back({d(rng), d(rng)});
            b.push_back(d(rng));
        }
        // box keeps the region bounded
        for (int s : {1, -1}) {
            a.push_back({s, 0});
            a.push_back({0, s});
            b.push_back(6);
            b.push_back(6);
        }
        Vector c{d(rng), d(rng)};
        auto expected = brute_max_2d(c, a, b);
        LpResult r = lp_maximize(c, ExactMatrix::from_rows(a, 2), b);
        if (!expected) {
            CHECK(r.status == LpStatus::infeasible);
            continue;
        }
        REQUIRE(r.status == LpStatus::optimal);
        CHECK(r.value == *expected);
        CHECK(dot(c, r.x) == r.value);
        for (std::size_t k = 0; k < a.size(); ++k) CHECK(dot(a[k], r.x) <= b[k]);
        ++checked;
    }
    CHECK(checked > 50);
}

TEST_CASE("LP helpers") {
    // unit triangle x >= 0, y >= 0, 1 - x - y >= 0
    std::vector<LinearFunctional> tri{lf(0, {1, 0}), lf(0, {0, 1}), lf(1, {-1, -1})};
    auto p = strict_interior_point(tri, 2);
    REQUIRE(p);
    for (const auto& f : tri) CHECK(f(*p) > 0);
    CHECK(is_bounded(tri, 2));
    CHECK(*lp_max_over(lf(0, {1, 1}), tri, 2) == 1);
    CHECK(*lp_min_over(lf(3, {1, 1}), tri, 2) == 3);
    std::vector<LinearFunctional> quadrant{lf(0, {1, 0}), lf(0, {0, 1})};
    CHECK_FALSE(is_bounded(quadrant, 2));
    CHECK_FALSE(lp_max_over(lf(0, {1, 0}), quadrant, 2));
    // a line segment has no strict interior
    std::vector<LinearFunctional> flat{lf(0, {1, 0}), lf(0, {-1, 0}), lf(0, {0, 1})};
    CHECK_FALSE(strict_interior_point(flat, 2));
    CHECK_FALSE(lp_maximize({1}, ExactMatrix::from_rows({{1}, {-1}}, 1), {-1, -1}).status == LpStatus::optimal);
    CHECK(lp_maximize({1}, ExactMatrix::from_rows({{-1}}, 1), {0}).status == LpStatus::unbounded);
}

TEST_CASE("shuffle sign is permutation parity") {
    CHECK(shuffle_sign({0}, {1}) == 1);
    CHECK(shuffle_sign({1}, {0}) == -1);
    CHECK(shuffle_sign({0, 2}, {1}) == -1);
    CHECK(shuffle_sign({1, 2}, {0}) == 1);
    CHECK(shuffle_sign({0, 1}, {1}) == 0);
}

TEST_CASE("wedge of dlogs gives the unit triangle form") {
    LinearFunctional x = lf(0, {1, 0}), y = lf(0, {0, 1}), z = lf(1, {-1, -1});
    // dlog x ^ dlog y - dlog x ^ dlog z + dlog y ^ dlog z
    RationalForm dx = RationalForm::dlog(x), dy = RationalForm::dlog(y), dz = RationalForm::dlog(z);
    RationalForm omega = wedge(dx, dy) - wedge(dx, dz) + wedge(dy, dz);
    // expected 1 / (x y (1 - x - y)) dx dy
    RationalForm expected = RationalForm::top(2, MultiPoly::constant(2, 1), {{x, 1}, {y, 1}, {z, 1}});
    CHECK(omega.equals(expected));
    CHECK(omega.cancelled().denominator().size() == 3);
    auto val = omega.evaluate({q("1/4"), q("1/4")});
    CHECK(val.at({0, 1}) == q("32"));
    CHECK(wedge(dx, dx).is_zero());
    CHECK(wedge(dx, dy).equals(-wedge(dy, dx)));
}

TEST_CASE("cancellation removes exact factors only") {
    LinearFunctional x = lf(0, {1}), xm1 = lf(-1, {1});
    // (x - 1) / (x (x - 1)) dx == 1/x dx
    RationalForm f = RationalForm::top(1, xm1.to_poly(), {{x, 1}, {xm1, 1}});
    RationalForm c = f.cancelled();
    CHECK(c.denominator().size() == 1);
    CHECK(c.equals(RationalForm::dlog(x)));
    CHECK(c == RationalForm::dlog(x));
    // scaling of a factor is absorbed into the numerator
    RationalForm g = RationalForm::top(1, MultiPoly::constant(1, 1), {{x * Rational(2), 1}});
    CHECK(g.equals(RationalForm::dlog(x) * q("1/2")));
    CHECK_THROWS_AS(RationalForm::top(1, MultiPoly::constant(1, 1), {{lf(1, {0}), 1}}), Error);
}
