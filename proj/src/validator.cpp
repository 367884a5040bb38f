#include "fpd/validator.hpp"

#include <map>
#include <sstream>

#include "fpd/signature.hpp"

namespace fpd {

namespace {

const char* kNotApplicable = "not applicable";

CheckResult run_sign_balance(const FixedPointData& data) {
    std::size_t plus = 0, minus = 0;
    for (const FixedPoint& p : data) (p.sign() == Sign::plus ? plus : minus)++;
    std::ostringstream os;
    os << plus << " positive vs " << minus << " negative points";
    return {"sign_balance", plus == minus, os.str()};
}

CheckResult run_weight_parity(const FixedPointData& data) {
    std::map<Int, std::size_t> occ;
    for (const FixedPoint& p : data) {
        for (const Int& w : p.weights()) occ[w]++;
    }
    for (const auto& [w, n] : occ) {
        if (n % 2 != 0) {
            std::ostringstream os;
            os << "weight " << w << " occurs " << n << " times (odd)";
            return {"weight_parity", false, os.str()};
        }
    }
    return {"weight_parity", true,
            occ.empty() ? kNotApplicable : "every weight value occurs an even number of times"};
}

CheckResult run_smallest_weight_balance(const FixedPointData& data) {
    if (data.empty()) return {"smallest_weight_balance", true, kNotApplicable};
    Int a = data.points().front().weights()[2];
    for (const FixedPoint& p : data) a = std::min(a, p.weights()[2]);
    Int plus = 0, minus = 0;
    for (const FixedPoint& p : data)
        (p.sign() == Sign::plus ? plus : minus) += p.weight_count(a);
    std::ostringstream os;
    os << "smallest weight " << a << ": multiplicity " << plus << " on '+' vs " << minus
       << " on '-'";
    return {"smallest_weight_balance", plus == minus, os.str()};
}

CheckResult run_top_weight_double(const FixedPointData& data) {
    if (data.empty()) return {"top_weight_double", true, kNotApplicable};
    const Int l = max_weight(data);
    if (l <= 1) return {"top_weight_double", true, kNotApplicable};
    std::map<Int, std::pair<std::size_t, std::size_t>> pairs;  // third weight -> (+ count, - count)
    for (const FixedPoint& p : data) {
        const int m = p.weight_count(l);
        if (m == 3) {
            std::ostringstream os;
            os << "point with weights {" << l << "," << l << "," << l
               << "} cannot occur in effective data";
            return {"top_weight_double", false, os.str()};
        }
        if (m == 2) {
            const Int& a = p.weights()[2];
            auto& c = pairs[a];
            (p.sign() == Sign::plus ? c.first : c.second)++;
        }
    }
    for (const auto& [a, c] : pairs) {
        if (c.first != c.second) {
            std::ostringstream os;
            os << "{+," << l << "," << l << "," << a << "} occurs " << c.first << " times but {-,"
               << l << "," << l << "," << a << "} occurs " << c.second << " times";
            return {"top_weight_double", false, os.str()};
        }
    }
    return {"top_weight_double", true,
            pairs.empty() ? kNotApplicable : "double-top-weight points pair across signs"};
}

CheckResult run_signature_zero(const FixedPointData& data) {
    if (data.empty()) return {"signature_zero", true, kNotApplicable};
    // Mirror-symmetric multisets cancel termwise; this also decides data
    // whose weights are too large for the dense expansion.
    if (reverse_orientation(data) == data)
        return {"signature_zero", true, "mirror-symmetric data cancels termwise"};
    const IntPolynomial num = signature_identity_poly(data);
    if (num.is_zero()) return {"signature_zero", true, "signature identity numerator vanishes"};
    std::ostringstream os;
    os << "signature identity numerator is nonzero (degree " << num.degree() << ")";
    return {"signature_zero", false, os.str()};
}

CheckResult run_two_points(const FixedPointData& data) {
    if (data.size() != 2) return {"two_points", true, kNotApplicable};
    const FixedPoint& p = data.points()[0];
    const FixedPoint& q = data.points()[1];
    if (p.weights() != q.weights())
        return {"two_points", false, "two fixed points with different weights"};
    if (p.sign() == q.sign()) return {"two_points", false, "two fixed points with equal signs"};
    return {"two_points", true, "equal weights, opposite signs"};
}

}  // namespace

bool check_sign_balance(const FixedPointData& d) { return run_sign_balance(d).passed; }
bool check_weight_parity(const FixedPointData& d) { return run_weight_parity(d).passed; }
bool check_smallest_weight_balance(const FixedPointData& d) {
    return run_smallest_weight_balance(d).passed;
}
bool check_top_weight_double(const FixedPointData& d) { return run_top_weight_double(d).passed; }
bool check_signature_zero(const FixedPointData& d) { return run_signature_zero(d).passed; }
bool check_two_points(const FixedPointData& d) { return run_two_points(d).passed; }

std::string ValidationReport::failed_names() const {
    std::string out;
    for (const CheckResult& c : checks) {
        if (c.passed) continue;
        if (!out.empty()) out += ", ";
        out += c.name;
    }
    return out;
}

ValidationReport validate_all(const FixedPointData& data) {
    ValidationReport report;
    FixedPointData effective = data;
    if (!data.empty()) {
        auto [normalized, divisor] = normalize_effective(data);
        effective = std::move(normalized);
        report.divisor = divisor;
    }
    report.checks.push_back(run_sign_balance(effective));
    report.checks.push_back(run_weight_parity(effective));
    report.checks.push_back(run_smallest_weight_balance(effective));
    report.checks.push_back(run_top_weight_double(effective));
    report.checks.push_back(run_signature_zero(effective));
    report.checks.push_back(run_two_points(effective));
    report.overall = true;
    for (const CheckResult& c : report.checks) report.overall = report.overall && c.passed;
    return report;
}

}  // namespace fpd
