#include "fpd/generators.hpp"

#include <sstream>

namespace fpd {

std::string family_name(GeneratorFamily f) {
    switch (f) {
        case GeneratorFamily::s6: return "S6";
        case GeneratorFamily::cp3: return "CP3";
        case GeneratorFamily::z1: return "Z1";
        case GeneratorFamily::z2: return "Z2";
        case GeneratorFamily::z2sum: return "Z2SUM";
    }
    throw Error("unknown generator family");
}

GeneratorFamily family_from_name(const std::string& name) {
    if (name == "S6") return GeneratorFamily::s6;
    if (name == "CP3") return GeneratorFamily::cp3;
    if (name == "Z1") return GeneratorFamily::z1;
    if (name == "Z2") return GeneratorFamily::z2;
    if (name == "Z2SUM") return GeneratorFamily::z2sum;
    throw ParseError("unknown generator family: " + name);
}

FixedPoint complex_to_real(const ComplexWeights& cw) {
    int negatives = 0;
    for (const Int& w : cw) {
        if (w == 0) throw ZeroWeight("complex weight must be nonzero");
        if (w < 0) negatives++;
    }
    const Sign s = negatives % 2 == 0 ? Sign::plus : Sign::minus;
    return FixedPoint(s, abs(cw[0]), abs(cw[1]), abs(cw[2]));
}

FixedPointData gen_s6(const Int& a, const Int& b, const Int& c) {
    if (a < 1 || b < 1 || c < 1) throw NonPositiveWeight("gen_s6: weights must be >= 1");
    FixedPointData data;
    data.insert(FixedPoint(Sign::plus, a, b, c));
    data.insert(FixedPoint(Sign::minus, a, b, c));
    return data;
}

FixedPointData gen_cp3(const Int& a, const Int& b, const Int& c) {
    if (!(0 < a && a < b && b < c)) throw ParameterOrder("gen_cp3: need 0 < a < b < c");
    FixedPointData data;
    data.insert(FixedPoint(Sign::plus, a, b, c));
    data.insert(FixedPoint(Sign::minus, a, b - a, c - a));
    data.insert(FixedPoint(Sign::plus, b, b - a, c - b));
    data.insert(FixedPoint(Sign::minus, c, c - a, c - b));
    return data;
}

FixedPointData gen_zn(const Int& n, const Int& a, const Int& b, const Int& c) {
    if (a < 1 || b < 1 || c < 1)
        throw DegenerateParameters("gen_zn: a, b, c must be >= 1");
    const Int nc = n * c;
    if (b == a) throw DegenerateParameters("gen_zn: need b - a != 0");
    if (nc == a) throw DegenerateParameters("gen_zn: need nc - a != 0");
    if (nc == b) throw DegenerateParameters("gen_zn: need nc - b != 0");
    const std::array<ComplexWeights, 6> triples = {{
        {b - a, -a, c},
        {b - a, nc - a, -c},
        {a - b, -b, c},
        {a - b, nc - b, -c},
        {a, b, c},
        {a - nc, b - nc, -c},
    }};
    FixedPointData data;
    for (const ComplexWeights& t : triples) data.insert(complex_to_real(t));
    return data;
}

FixedPointData gen_z2sum(const Int& a, const Int& e) {
    if (!(0 < e && 2 * e < a)) throw DegenerateParameters("gen_z2sum: need 0 < 2e < a");
    const FixedPointData first = gen_zn(2, a, e, e);
    const FixedPointData second = reverse_orientation(gen_zn(2, a, a - e, a - e));
    const FixedPoint glue_m(Sign::plus, a, a - e, e);
    return connected_sum(first, second, {{glue_m, glue_m.opposite_sign()}});
}

FixedPointData connected_sum(const FixedPointData& m, const FixedPointData& n,
                             const std::vector<std::pair<FixedPoint, FixedPoint>>& pairs) {
    FixedPointData left = m;
    FixedPointData right = n;
    for (const auto& [p, q] : pairs) {
        if (p.weights() != q.weights()) {
            std::ostringstream os;
            os << "connected_sum: paired points carry different weights";
            throw WeightMismatch(os.str());
        }
        if (p.sign() == q.sign())
            throw SignMismatch("connected_sum: paired points must have opposite signs");
        if (!left.remove(p))
            throw PairNotPresent("connected_sum: left point not present (with multiplicity)");
        if (!right.remove(q))
            throw PairNotPresent("connected_sum: right point not present (with multiplicity)");
    }
    for (const FixedPoint& p : right) left.insert(p);
    return left;
}

FixedPointData generator_data(const GeneratorLabel& label) {
    auto need = [&](std::size_t k) {
        if (label.params.size() != k)
            throw DegenerateParameters(family_name(label.family) + ": wrong parameter count");
    };
    FixedPointData data;
    switch (label.family) {
        case GeneratorFamily::s6:
            need(3);
            data = gen_s6(label.params[0], label.params[1], label.params[2]);
            break;
        case GeneratorFamily::cp3:
            need(3);
            data = gen_cp3(label.params[0], label.params[1], label.params[2]);
            break;
        case GeneratorFamily::z1:
            need(3);
            data = gen_zn(1, label.params[0], label.params[1], label.params[2]);
            break;
        case GeneratorFamily::z2:
            need(3);
            data = gen_zn(2, label.params[0], label.params[1], label.params[2]);
            break;
        case GeneratorFamily::z2sum:
            need(2);
            data = gen_z2sum(label.params[0], label.params[1]);
            break;
    }
    return label.reversed ? reverse_orientation(data) : data;
}

}  // namespace fpd
