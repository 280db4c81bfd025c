#pragma once

#include <hyperform/region.hpp>
#include <hyperform/strata.hpp>

#include <optional>
#include <string>
#include <vector>

namespace hyperform {

enum class CheckStatus { passed, failed, skipped };

struct CheckOutcome {
    std::string suite;
    std::string invariant;
    CheckStatus status = CheckStatus::passed;
    std::string detail;
};

struct CheckReport {
    std::vector<CheckOutcome> outcomes;

    bool ok() const;
    /// First failed invariant, for diagnostics.
    const CheckOutcome* first_failure() const;
    /// One "PASS|FAIL|SKIP suite/invariant: detail" line per outcome.
    std::string to_string() const;
};

/// algebra, arrangement, boundary, os_forms, strata.
const std::vector<std::string>& check_suites();

/// Runs one suite or "all" on an arrangement. Without a region, region-based
/// invariants use the first bounded cell (or the first cell).
CheckReport run_checks(const Arrangement& arr, const std::optional<Region>& region, const std::string& suite);

/// Strata suite on user-supplied strata data.
CheckReport run_checks(const StrataInput& strata, const std::string& suite);

}  // namespace hyperform
