#include "fpd/reducer.hpp"

#include <algorithm>
#include <sstream>

#include "fpd/validator.hpp"

namespace fpd {

namespace {

std::string describe(const FixedPoint& p) {
    std::ostringstream os;
    os << "{" << sign_char(p.sign()) << "," << p.weights()[0] << "," << p.weights()[1] << ","
       << p.weights()[2] << "}";
    return os.str();
}

struct OperationTemplate {
    std::vector<FixedPoint> removed;
    std::vector<FixedPoint> added;
};

void check_side_conditions(OperationKind kind, const std::vector<Int>& P) {
    const std::size_t want = (kind == OperationKind::op4 || kind == OperationKind::op4p ||
                              kind == OperationKind::op5)
                                 ? 2
                                 : 3;
    if (P.size() != want)
        throw NotApplicable(kind_name(kind) + ": wrong parameter count");
    for (const Int& v : P) {
        if (v < 1) throw NotApplicable(kind_name(kind) + ": parameters must be >= 1");
    }
    switch (kind) {
        case OperationKind::op1:
            break;
        case OperationKind::op2:
        case OperationKind::op3:
            if (!(P[0] < P[1] && P[1] < P[2]))
                throw NotApplicable(kind_name(kind) + ": need A < B < C");
            break;
        case OperationKind::op3p:
            if (!(P[1] < P[0] && P[0] < P[2]))
                throw NotApplicable(kind_name(kind) + ": need B < A < C");
            break;
        case OperationKind::op4:
            if (!(2 * P[0] < P[1])) throw NotApplicable("OP4: need 2A < C");
            break;
        case OperationKind::op4p:
            if (!(P[0] < P[1] && P[1] < 2 * P[0]))
                throw NotApplicable("OP4P: need A < C < 2A");
            break;
        case OperationKind::op5:
            if (!(2 * P[0] < P[1])) throw NotApplicable("OP5: need 2A < C");
            break;
    }
}

/// The removal/addition lists of the operation table, with the template's
/// upper sign bound to s.
OperationTemplate instantiate(OperationKind kind, const std::vector<Int>& P, Sign s) {
    const Sign o = opposite(s);
    OperationTemplate t;
    switch (kind) {
        case OperationKind::op1: {
            const Int &A = P[0], &B = P[1], &C = P[2];
            t.removed = {FixedPoint(s, A, B, C), FixedPoint(o, A, B, C)};
            break;
        }
        case OperationKind::op2: {
            const Int &A = P[0], &B = P[1], &C = P[2];
            t.removed = {FixedPoint(s, A, B, C), FixedPoint(o, C - A, C - B, C)};
            t.added = {FixedPoint(s, A, B - A, C - A), FixedPoint(o, B, B - A, C - B)};
            break;
        }
        case OperationKind::op3: {
            const Int &A = P[0], &B = P[1], &C = P[2];
            t.removed = {FixedPoint(s, A, B, C), FixedPoint(s, A, C - B, C)};
            t.added = {FixedPoint(s, C - B, C - A, A), FixedPoint(s, C - B, B, A),
                       FixedPoint(o, C - B, B - A, A), FixedPoint(s, C - A, B - A, A)};
            break;
        }
        case OperationKind::op3p: {
            const Int &A = P[0], &B = P[1], &C = P[2];
            t.removed = {FixedPoint(s, A, B, C), FixedPoint(s, A, C - B, C)};
            t.added = {FixedPoint(s, C - B, C - A, A), FixedPoint(s, C - B, B, A),
                       FixedPoint(s, C - B, A - B, A), FixedPoint(o, C - A, A - B, A)};
            break;
        }
        case OperationKind::op4: {
            const Int &A = P[0], &C = P[1];
            t.removed = {FixedPoint(s, A, A, C), FixedPoint(s, A, C - A, C)};
            t.added = {FixedPoint(s, C - A, C - 2 * A, A), FixedPoint(s, C - A, A, A),
                       FixedPoint(s, C - A, A, A), FixedPoint(o, C - 2 * A, A, A)};
            break;
        }
        case OperationKind::op4p: {
            const Int &A = P[0], &C = P[1];
            t.removed = {FixedPoint(s, A, A, C), FixedPoint(s, A, C - A, C)};
            t.added = {FixedPoint(o, C - A, 2 * A - C, A), FixedPoint(s, C - A, A, A),
                       FixedPoint(s, C - A, A, A), FixedPoint(s, 2 * A - C, A, A)};
            break;
        }
        case OperationKind::op5: {
            const Int &A = P[0], &C = P[1];
            t.removed = {FixedPoint(s, C, A, A), FixedPoint(o, C, C - A, C - A)};
            t.added = {FixedPoint(s, C - A, C - 2 * A, A),     FixedPoint(s, C - A, A, A),
                       FixedPoint(s, C - A, A, A),             FixedPoint(o, C - 2 * A, A, A),
                       FixedPoint(s, A, C - 2 * A, C - A),     FixedPoint(o, A, C - A, C - A),
                       FixedPoint(o, A, C - A, C - A),         FixedPoint(o, C - 2 * A, C - A, C - A)};
            break;
        }
    }
    std::sort(t.removed.begin(), t.removed.end());
    std::sort(t.added.begin(), t.added.end());
    return t;
}

bool same_multiset(std::vector<FixedPoint> a, const std::vector<FixedPoint>& b) {
    if (a.size() != b.size()) return false;
    std::sort(a.begin(), a.end());
    std::vector<FixedPoint> bs = b;
    std::sort(bs.begin(), bs.end());
    return a == bs;
}

bool all_points_share_weights(const FixedPointData& data, const FixedPoint& p) {
    return std::all_of(data.begin(), data.end(),
                       [&](const FixedPoint& q) { return q.weights() == p.weights(); });
}

/// Carrier of the biggest weight with the largest weight tuple, preferring
/// '+' on ties. Weight-major selection keeps the whole reduction equivariant
/// under orientation reversal.
const FixedPoint& select_top_carrier(const FixedPointData& data, const Int& top) {
    const FixedPoint* best = nullptr;
    for (const FixedPoint& p : data) {
        if (p.weight_count(top) == 0) continue;
        if (best == nullptr || p.weights() > best->weights()) best = &p;
    }
    if (best == nullptr) throw Error("select_top_carrier: no point carries the top weight");
    return *best;
}

/// Heaviest point overall (largest weight tuple, '+' preferred on ties);
/// used by the pairing branch for biggest weight <= 2.
const FixedPoint& select_heaviest(const FixedPointData& data) {
    const FixedPoint* best = nullptr;
    for (const FixedPoint& p : data) {
        if (best == nullptr || p.weights() > best->weights()) best = &p;
    }
    return *best;
}

ReductionStep make_op1(const FixedPoint& p, const FixedPoint& partner) {
    ReductionStep step;
    step.kind = OperationKind::op1;
    step.params = {p.weights()[2], p.weights()[1], p.weights()[0]};
    step.removed = {p, partner};
    std::sort(step.removed.begin(), step.removed.end());
    step.generator = {GeneratorFamily::s6,
                      {p.weights()[0], p.weights()[1], p.weights()[2]},
                      false};
    return step;
}

ReductionStep dispatch(const FixedPointData& data, const FixedPoint& p, const Int& top) {
    const PartnerCase pc = find_partner(data, p, top);
    const Sign e = p.sign();
    ReductionStep step;
    step.removed = {p, pc.partner};
    std::sort(step.removed.begin(), step.removed.end());

    switch (pc.kind) {
        case PartnerKind::same:
            return make_op1(p, pc.partner);

        case PartnerKind::complement: {
            const Int& x = p.weights()[1];
            const Int& y = p.weights()[2];
            if (x != y) {
                // OP2 with A < B the non-top weights of p, C the top weight.
                step.kind = OperationKind::op2;
                step.params = {y, x, top};
                step.added = instantiate(step.kind, step.params, e).added;
                step.generator = {GeneratorFamily::cp3, step.params, e == Sign::plus};
            } else {
                // x == y with 2x != top (2x == top resolves to `same`).
                const Int A = std::min(x, Int(top - x));
                const Sign carrier = x < top - x ? e : opposite(e);
                step.kind = OperationKind::op5;
                step.params = {A, top};
                step.added = instantiate(step.kind, step.params, carrier).added;
                step.generator = {GeneratorFamily::z2sum, {top, A}, carrier == Sign::plus};
            }
            return step;
        }

        case PartnerKind::mixed: {
            const Int& A = pc.mixed_shared;
            const Int& B = pc.mixed_complemented;
            if (A != B) {
                step.kind = A < B ? OperationKind::op3 : OperationKind::op3p;
                step.params = {A, B, top};
                step.added = instantiate(step.kind, step.params, e).added;
                step.generator = {GeneratorFamily::z1, {top, B, A}, e == Sign::plus};
            } else {
                if (2 * A == top)
                    throw NotRealizable("point " + describe(p) +
                                        " has weights {2x,x,x} with x > 1 in effective data");
                step.kind = 2 * A < top ? OperationKind::op4 : OperationKind::op4p;
                step.params = {A, top};
                step.added = instantiate(step.kind, step.params, e).added;
                step.generator = {GeneratorFamily::z2, {top, A, A}, e == Sign::plus};
            }
            return step;
        }
    }
    throw Error("dispatch: unreachable");
}

}  // namespace

std::string kind_name(OperationKind k) {
    switch (k) {
        case OperationKind::op1: return "OP1";
        case OperationKind::op2: return "OP2";
        case OperationKind::op3: return "OP3";
        case OperationKind::op3p: return "OP3P";
        case OperationKind::op4: return "OP4";
        case OperationKind::op4p: return "OP4P";
        case OperationKind::op5: return "OP5";
    }
    throw Error("unknown operation kind");
}

OperationKind kind_from_name(const std::string& name) {
    if (name == "OP1") return OperationKind::op1;
    if (name == "OP2") return OperationKind::op2;
    if (name == "OP3") return OperationKind::op3;
    if (name == "OP3P") return OperationKind::op3p;
    if (name == "OP4") return OperationKind::op4;
    if (name == "OP4P") return OperationKind::op4p;
    if (name == "OP5") return OperationKind::op5;
    throw ParseError("unknown operation kind: " + name);
}

FixedPointData apply_operation(const FixedPointData& data, const ReductionStep& step) {
    check_side_conditions(step.kind, step.params);
    if (step.removed.size() != 2) throw NotApplicable("a step removes exactly two points");

    bool matched = false;
    for (Sign s : {Sign::plus, Sign::minus}) {
        const OperationTemplate t = instantiate(step.kind, step.params, s);
        if (same_multiset(t.removed, step.removed) && same_multiset(t.added, step.added)) {
            matched = true;
            break;
        }
    }
    if (!matched)
        throw NotApplicable(kind_name(step.kind) +
                            ": removed/added lists do not match the operation template");

    FixedPointData out = data;
    for (const FixedPoint& r : step.removed) {
        if (!out.remove(r))
            throw NotApplicable("removed point " + describe(r) + " not present in data");
    }
    for (const FixedPoint& a : step.added) out.insert(a);
    return out;
}

PartnerCase find_partner(const FixedPointData& data, const FixedPoint& p, const Int& top) {
    if (top <= 1) throw Error("find_partner: biggest weight must exceed 1");
    if (!data.contains(p)) throw Error("find_partner: p not in data");

    const auto present = [&](const FixedPoint& v) {
        std::size_t c = data.count(v);
        if (v == p) --c;  // p itself never partners with itself
        return c > 0;
    };

    const int mult = p.weight_count(top);
    if (mult == 0) throw Error("find_partner: p does not carry the biggest weight");
    if (mult == 3)
        throw NotRealizable("point " + describe(p) + " carries the biggest weight three times");

    if (mult == 2) {
        const FixedPoint partner(opposite(p.sign()), top, top, p.weights()[2]);
        if (present(partner)) return {PartnerKind::same, partner, 0, 0};
        throw NotRealizable("no partner " + describe(partner) + " for " + describe(p));
    }

    const Int& x = p.weights()[1];
    const Int& y = p.weights()[2];
    const FixedPoint va(opposite(p.sign()), top, x, y);
    const FixedPoint vb(opposite(p.sign()), top, top - x, top - y);

    if (va == vb && present(va)) {
        // {x,y} = {l-x,l-y}: the same point matches both patterns. Equal
        // non-top weights force the sphere pairing; so does data whose
        // points all share one weight multiset. Otherwise the complement
        // reading applies.
        if (x == y || all_points_share_weights(data, p))
            return {PartnerKind::same, va, 0, 0};
        return {PartnerKind::complement, vb, 0, 0};
    }
    if (present(va)) return {PartnerKind::same, va, 0, 0};
    if (present(vb)) return {PartnerKind::complement, vb, 0, 0};

    const FixedPoint vc(p.sign(), top, x, top - y);
    if (present(vc)) return {PartnerKind::mixed, vc, x, y};
    if (x != y) {
        const FixedPoint vd(p.sign(), top, top - x, y);
        if (present(vd)) return {PartnerKind::mixed, vd, y, x};
    }
    throw NotRealizable("no partner for " + describe(p) + " at biggest weight " + top.str());
}

std::pair<FixedPointData, ReductionStep> reduce_once(const FixedPointData& data) {
    if (data.empty()) throw EmptyData("reduce_once: no points");
    const Int top = max_weight(data);
    ReductionStep step;
    if (top <= 2) {
        // Every multiset pairs across signs here; peel the heaviest first.
        const FixedPoint p = select_heaviest(data);
        const FixedPoint partner = p.opposite_sign();
        if (!data.contains(partner))
            throw NotRealizable("no opposite-sign point with weights of " + describe(p) +
                                " at biggest weight <= 2");
        step = make_op1(p, partner);
    } else {
        for (const FixedPoint& q : data) {
            if (q.weight_count(top) == 3)
                throw NotRealizable("point " + describe(q) +
                                    " carries the biggest weight three times");
        }
        const FixedPoint p = select_top_carrier(data, top);
        step = dispatch(data, p, top);
    }
    return {apply_operation(data, step), step};
}

CobordismCertificate reduce_to_empty(const FixedPointData& data) {
    const ValidationReport report = validate_all(data);
    if (!report.overall)
        throw InvalidInput("input data fails validation: " + report.failed_names());

    CobordismCertificate cert;
    cert.initial = data;
    if (data.empty()) return cert;

    auto [state, divisor] = normalize_effective(data);
    cert.divisor = divisor;

    // 4 x total weight multiplicity; unreachable by the termination measure.
    const std::size_t cap = 12 * state.size();
    while (!state.empty()) {
        if (cert.steps.size() >= cap)
            throw MaxStepsExceeded("reduction exceeded the step cap");
        auto [next, step] = reduce_once(state);
        state = std::move(next);
        cert.steps.push_back(std::move(step));
    }
    return cert;
}

bool verify_certificate(const CobordismCertificate& cert, std::string* diagnostic) {
    const auto fail = [&](const std::string& msg) {
        if (diagnostic) *diagnostic = msg;
        return false;
    };
    try {
        FixedPointData state = cert.initial;
        if (cert.divisor < 1) return fail("divisor must be >= 1");
        if (state.empty()) {
            if (cert.divisor != 1) return fail("empty data must carry divisor 1");
        } else {
            if (overall_gcd(state) != cert.divisor)
                return fail("divisor is not the gcd of all weights");
            state = normalize_effective(state).first;
        }
        if (!validate_all(state).overall) return fail("initial data fails validation");

        for (std::size_t i = 0; i < cert.steps.size(); ++i) {
            const ReductionStep& step = cert.steps[i];
            const std::string at = "step " + std::to_string(i + 1) + " (" +
                                   kind_name(step.kind) + ")";

            // The named generator must be the manifold the step glues in:
            // its data is the mirrored removed pair plus the added points.
            FixedPointData expected;
            for (const FixedPoint& r : step.removed) expected.insert(r.opposite_sign());
            for (const FixedPoint& a : step.added) expected.insert(a);
            if (generator_data(step.generator) != expected)
                return fail(at + ": generator label does not realize the step");

            state = apply_operation(state, step);
            if (!validate_all(state).overall)
                return fail(at + ": intermediate data fails validation");
        }
        if (!state.empty()) return fail("replay did not end at the empty multiset");
        return true;
    } catch (const Error& e) {
        return fail(e.what());
    }
}

}  // namespace fpd
