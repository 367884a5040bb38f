#pragma once

#include <string>
#include <vector>

#include "fpd/core.hpp"

namespace fpd {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

/// Outcome of validate_all: the effectiveness divisor that was factored out,
/// the individual checks in fixed order, and their conjunction.
struct ValidationReport {
    Int divisor = 1;
    std::vector<CheckResult> checks;
    bool overall = true;

    std::string failed_names() const;
};

// Each check returns true when the necessary condition holds (vacuously true
// where its precondition does not apply).

/// #{eps = +1} == #{eps = -1}.
bool check_sign_balance(const FixedPointData& data);

/// Every weight value occurs an even number of times over all points.
bool check_weight_parity(const FixedPointData& data);

/// Multiplicities of the smallest weight agree between the '+' and '-' side.
bool check_smallest_weight_balance(const FixedPointData& data);

/// At the biggest weight l > 1 of effective data: counts of {+,l,l,a} and
/// {-,l,l,a} agree for every a, and no point has weights {l,l,l}.
bool check_top_weight_double(const FixedPointData& data);

/// The signature identity numerator is the zero polynomial.
bool check_signature_zero(const FixedPointData& data);

/// Data with exactly two points must pair equal weights with opposite signs.
bool check_two_points(const FixedPointData& data);

/// Normalizes to an effective action, then runs all checks in fixed order.
ValidationReport validate_all(const FixedPointData& data);

}  // namespace fpd
