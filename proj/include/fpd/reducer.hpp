#pragma once

#include <string>
#include <utility>
#include <vector>

#include "fpd/core.hpp"
#include "fpd/generators.hpp"

namespace fpd {

/// The seven rewriting operations. OP3P and OP4P are the primed variants of
/// OP3 and OP4 (the side condition flips which subtraction stays positive).
enum class OperationKind { op1, op2, op3, op3p, op4, op4p, op5 };

std::string kind_name(OperationKind k);
OperationKind kind_from_name(const std::string& name);  // throws ParseError

/// One application of an operation: template parameters, the two removed
/// points, the added points (0, 2, 4 or 8 of them, every added weight
/// strictly below the top parameter C), and the model manifold the step
/// connect-sums with.
struct ReductionStep {
    OperationKind kind = OperationKind::op1;
    std::vector<Int> params;          // (A,B,C) for OP1/2/3/3P, (A,C) for OP4/4P/5
    std::vector<FixedPoint> removed;  // exactly 2, canonical order
    std::vector<FixedPoint> added;    // canonical order
    GeneratorLabel generator;

    friend bool operator==(const ReductionStep&, const ReductionStep&) = default;
};

/// Replayable witness that `initial` reduces to the empty multiset: divide
/// all weights by `divisor`, then apply the steps in order.
struct CobordismCertificate {
    FixedPointData initial;
    Int divisor = 1;
    std::vector<ReductionStep> steps;

    friend bool operator==(const CobordismCertificate&, const CobordismCertificate&) = default;
};

enum class PartnerKind {
    same,        // opposite sign, identical weights
    complement,  // opposite sign, both non-top weights complemented to l
    mixed,       // equal sign, exactly one non-top weight complemented
};

/// Result of the partner search at the biggest weight.
struct PartnerCase {
    PartnerKind kind = PartnerKind::same;
    FixedPoint partner;
    // mixed only: p's non-top weights split as {shared, complemented}; the
    // partner carries {top, shared, top - complemented}.
    Int mixed_shared = 0;
    Int mixed_complemented = 0;
};

/// Replays one step on the data: checks the side conditions, that removed and
/// added match the step's template exactly, and that the removed points are
/// present. Throws NotApplicable otherwise.
FixedPointData apply_operation(const FixedPointData& data, const ReductionStep& step);

/// Locates a partner for p (which must carry the biggest weight `top` > 1 of
/// normalized data) in priority order same > complement > mixed. When the
/// same/complement patterns coincide as multisets ({x,y} = {l-x,l-y}), the
/// tie resolves to `same` when x == y or when every point of the data has
/// p's weights, and to `complement` otherwise. Throws NotRealizable when no
/// pattern matches.
PartnerCase find_partner(const FixedPointData& data, const FixedPoint& p, const Int& top);

/// Performs one reduction step on non-empty, effective, validated data and
/// returns the new data together with the step taken.
std::pair<FixedPointData, ReductionStep> reduce_once(const FixedPointData& data);

/// Validates, normalizes and reduces data all the way to the empty multiset.
/// Throws InvalidInput when validation fails, NotRealizable when the
/// strategy finds no applicable operation, MaxStepsExceeded if the
/// step cap fires.
CobordismCertificate reduce_to_empty(const FixedPointData& data);

/// Replays a certificate via apply_operation only: checks the divisor, that
/// each step names the generator whose data equals mirror(removed) + added,
/// that every intermediate state validates, and that the final state is
/// empty. Returns false (with a diagnostic) on the first failure.
bool verify_certificate(const CobordismCertificate& cert, std::string* diagnostic = nullptr);

}  // namespace fpd
