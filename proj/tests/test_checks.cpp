#include <catch_amalgamated.hpp>

#include "fixtures.hpp"

#include <hyperform/checks.hpp>
#include <hyperform/error.hpp>

using namespace hyperform;
using namespace fixtures;

namespace {

void require_clean(const CheckReport& r) {
    INFO(r.to_string());
    CHECK(r.ok());
}

int count(const CheckReport& r, CheckStatus s) {
    return static_cast<int>(std::count_if(r.outcomes.begin(), r.outcomes.end(), [&](const CheckOutcome& o) { return o.status == s; }));
}

}  // namespace

TEST_CASE("all suites pass on the test geometries") {
    require_clean(run_checks(cube(2), std::nullopt, "all"));
    require_clean(run_checks(unit_triangle(), std::nullopt, "all"));
    require_clean(run_checks(four_lines(), region_from_point(four_lines(), {q("1/4"), q("1/4")}), "all"));
    require_clean(run_checks(five_lines(), std::nullopt, "all"));
    require_clean(run_checks(pyramid(), region_from_point(pyramid(), pyramid_point()), "all"));
    Arrangement ex(2, cube(2).hyperplanes(), Infinity::explicit_plane(lf(3, {-1, -1})));
    require_clean(run_checks(ex, region_from_point(ex, cube_point(2)), "all"));
    Arrangement pc(2, unit_triangle().hyperplanes(), Infinity::projective_closure());
    require_clean(run_checks(pc, std::nullopt, "all"));
    std::mt19937 rng(3);
    for (int t = 0; t < 3; ++t) require_clean(run_checks(random_generic(rng, 2 + t % 2, 4), std::nullopt, "all"));
}

TEST_CASE("suite selection and reporting") {
    CheckReport r = run_checks(unit_triangle(), std::nullopt, "strata");
    REQUIRE(r.outcomes.size() == 1);
    CHECK(r.outcomes[0].status == CheckStatus::passed);
    CHECK(r.to_string().rfind("PASS strata/", 0) == 0);

    // the pyramid base has parallel sides, so the generic-infinity invariants skip
    CheckReport p = run_checks(pyramid(), std::nullopt, "arrangement");
    CHECK(p.ok());
    CHECK(count(p, CheckStatus::skipped) == 1);

    CHECK_THROWS_AS(run_checks(cube(2), std::nullopt, "nonsense"), Error);

    StrataInput s = complete_strata({"a", "b", "c"}, 2);
    CheckReport sr = run_checks(s, "all");
    CHECK(sr.ok());
    CHECK(count(sr, CheckStatus::passed) == 3);
    CHECK_THROWS_AS(run_checks(s, "boundary"), Error);
}
