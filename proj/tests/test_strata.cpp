#include <catch_amalgamated.hpp>

#include <hyperform/error.hpp>
#include <hyperform/strata.hpp>

using namespace hyperform;

namespace {

// A conic C and two lines meeting at a point p on C; each line meets C once more.
StrataInput conic_and_two_lines() {
    StrataInput in;
    in.components = {"C", "L1", "L2"};
    in.strata[{0, 1}] = {{"p01", {{{0}, "C"}, {{1}, "L1"}}}, {"q1", {{{0}, "C"}, {{1}, "L1"}}}};
    in.strata[{0, 2}] = {{"p02", {{{0}, "C"}, {{2}, "L2"}}}, {"q2", {{{0}, "C"}, {{2}, "L2"}}}};
    in.strata[{1, 2}] = {{"p12", {{{1}, "L1"}, {{2}, "L2"}}}};
    in.strata[{0, 1, 2}] = {{"p", {{{1, 2}, "p12"}, {{0, 2}, "p02"}, {{0, 1}, "p01"}}}};
    return in;
}

}  // namespace

TEST_CASE("conic plus two lines") {
    DeltaComplex c = dual_complex(conic_and_two_lines());
    CHECK(c.count(0) == 3);
    CHECK(c.count(1) == 5);
    CHECK(c.count(2) == 1);
    HomologyResult h = reduced_homology(c);
    CHECK(h.reduced == std::vector<long>{0, 2, 0});
    CHECK(h.euler_characteristic == -1);
}

TEST_CASE("simple complexes") {
    StrataInput two;
    two.components = {"H1", "H2"};
    DeltaComplex c = dual_complex(two);
    CHECK(c.count(0) == 2);
    CHECK(c.count(1) == 0);
    CHECK(reduced_homology(c).reduced == std::vector<long>{1});

    StrataInput one;
    one.components = {"P"};
    CHECK(reduced_homology(dual_complex(one)).reduced == std::vector<long>{0});
    CHECK(reduced_homology(DeltaComplex()).reduced.empty());
}

TEST_CASE("simplex boundaries are spheres") {
    for (int n = 1; n <= 5; ++n) {
        std::vector<std::string> names;
        for (int i = 0; i <= n; ++i) names.push_back("H" + std::to_string(i + 1));
        DeltaComplex c = dual_complex(complete_strata(names, n));
        CHECK(c.dim() == n - 1);
        std::vector<long> expected(n, 0);
        expected[n - 1] = 1;
        CHECK(reduced_homology(c).reduced == expected);
    }
}

TEST_CASE("generic lines give a wedge of circles") {
    for (int d = 3; d <= 7; ++d) {
        std::vector<std::string> names(d);
        for (int i = 0; i < d; ++i) names[i] = "L" + std::to_string(i + 1);
        HomologyResult h = reduced_homology(dual_complex(complete_strata(names, 2)));
        CHECK(h.reduced[1] == logforms_dim_ncd(2, d));
    }
}

TEST_CASE("boundary squares to zero") {
    DeltaComplex c = dual_complex(complete_strata({"a", "b", "c", "d", "e"}, 4));
    for (int k = 2; k <= c.dim(); ++k) {
        ExactMatrix dd = c.boundary(k - 1) * c.boundary(k);
        for (std::size_t r = 0; r < dd.rows(); ++r)
            for (std::size_t s = 0; s < dd.cols(); ++s) CHECK(dd(r, s) == 0);
    }
}

TEST_CASE("inconsistent strata are rejected") {
    StrataInput bad = conic_and_two_lines();
    bad.strata[{0, 1, 2}][0].faces[{0, 1}] = "nowhere";
    CHECK_THROWS_AS(dual_complex(bad), Error);

    // the triple point lies in two different components of Y_{01} depending on the route
    StrataInput four = complete_strata({"a", "b", "c", "d"}, 4);
    CHECK_NOTHROW(dual_complex(four));
    four.strata[{0, 1}].push_back({"alt", {{{0}, "a"}, {{1}, "b"}}});
    four.strata[{0, 1, 2}].push_back({"z", {{{1, 2}, "Y{2,3}"}, {{0, 2}, "Y{1,3}"}, {{0, 1}, "alt"}}});
    CHECK_NOTHROW(dual_complex(four));
    four.strata[{0, 1, 2, 3}][0].faces[{0, 1, 2}] = "z";
    CHECK_THROWS_AS(dual_complex(four), Error);

    StrataInput missing = conic_and_two_lines();
    missing.strata[{0, 1, 2}][0].faces.erase({0, 2});
    CHECK_THROWS_AS(dual_complex(missing), Error);

    StrataInput unsorted = conic_and_two_lines();
    unsorted.strata[{1, 0}] = {};
    CHECK_THROWS_AS(dual_complex(unsorted), Error);

    DeltaComplex ok({{{"v", {}}}, {{"e", {0, 0}}}});
    CHECK(reduced_homology(ok).reduced == std::vector<long>{0, 1});
    CHECK_THROWS_AS(DeltaComplex({{{"v", {}}}, {{"e", {0, 3}}}}), Error);
}

TEST_CASE("curve ranks") {
    CHECK(curve_rank({2}, 1) == 1);
    CHECK(curve_rank({1, 1, 1}, 1) == 0);
    CHECK(curve_rank({3}, 3) == 0);
    CHECK_THROWS_AS(curve_rank({2}, 0), Error);
    CHECK(curve_rank_relative(0, 2) == 1);
    CHECK(curve_rank_relative(0, 3) == 2);
    CHECK(curve_rank_relative(0, 1) == 0);
    try {
        curve_rank_relative(1, 0);
        FAIL("expected the absolute case");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::absolute_case);
    }
}

TEST_CASE("genus formulas") {
    CHECK(genus_plane_curve(3, {}) == 1);
    CHECK(genus_plane_curve(3, {1}) == 0);
    CHECK(genus_plane_curve(1, {}) == 0);
    CHECK(genus_plane_curve(4, {1, 1}) == 1);
    try {
        genus_plane_curve(3, {1, 1});
        FAIL("expected inconsistent input");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::inconsistent_input);
    }
    CHECK(genus_plane_curve_union({{3, {}}, {3, {1}}, {1, {}}}) == 1);
    CHECK(genus_plane_curve_union({{2, {}}, {1, {}}, {3, {1}}}) == 0);

    CHECK(genus_smooth_hypersurface(4, 3) == 0);
    CHECK(genus_smooth_hypersurface(2, 4) == 3);
    CHECK(genus_smooth_hypersurface(3, 1) == 0);
    for (int n = 1; n <= 4; ++n)
        for (int d = 1; d <= n; ++d) CHECK(genus_smooth_hypersurface(n, d) == 0);

    CHECK(logforms_dim_ncd(2, 3) == 1);
    CHECK(logforms_dim_ncd(2, 4) == 3);
    for (int n = 1; n <= 4; ++n) CHECK(logforms_dim_ncd(n, n + 1) == 1);
    CHECK_THROWS_AS(logforms_dim_ncd(0, 3), Error);
}
