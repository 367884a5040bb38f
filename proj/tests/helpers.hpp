#pragma once

#include <initializer_list>
#include <tuple>
#include <vector>

#include "fpd/core.hpp"

namespace fpdtest {

inline fpd::FixedPoint pt(char sign, long w1, long w2, long w3) {
    return fpd::FixedPoint(sign == '+' ? fpd::Sign::plus : fpd::Sign::minus, w1, w2, w3);
}

using PointTuple = std::tuple<char, long, long, long>;

inline fpd::FixedPointData data(std::initializer_list<PointTuple> entries) {
    std::vector<fpd::FixedPoint> points;
    for (const auto& [s, a, b, c] : entries) points.push_back(pt(s, a, b, c));
    return fpd::FixedPointData(std::move(points));
}

}  // namespace fpdtest
