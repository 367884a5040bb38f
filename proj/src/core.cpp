#include "fpd/core.hpp"

#include <algorithm>

#include <boost/multiprecision/integer.hpp>

namespace fpd {

FixedPoint::FixedPoint(Sign sign, Int w1, Int w2, Int w3)
    : sign_(sign), weights_{std::move(w1), std::move(w2), std::move(w3)} {
    for (const Int& w : weights_) {
        if (w < 1) throw NonPositiveWeight("fixed point weight must be >= 1");
    }
    std::sort(weights_.begin(), weights_.end(), [](const Int& a, const Int& b) { return a > b; });
}

int FixedPoint::weight_count(const Int& w) const {
    return static_cast<int>(std::count(weights_.begin(), weights_.end(), w));
}

FixedPoint FixedPoint::opposite_sign() const {
    return FixedPoint(opposite(sign_), weights_[0], weights_[1], weights_[2]);
}

FixedPoint make_fixed_point(Sign sign, Int w1, Int w2, Int w3) {
    return FixedPoint(sign, std::move(w1), std::move(w2), std::move(w3));
}

FixedPointData::FixedPointData(std::vector<FixedPoint> points) : points_(std::move(points)) {
    std::sort(points_.begin(), points_.end());
}

std::size_t FixedPointData::count(const FixedPoint& p) const {
    auto [lo, hi] = std::equal_range(points_.begin(), points_.end(), p);
    return static_cast<std::size_t>(hi - lo);
}

void FixedPointData::insert(const FixedPoint& p) {
    points_.insert(std::upper_bound(points_.begin(), points_.end(), p), p);
}

bool FixedPointData::remove(const FixedPoint& p) {
    auto it = std::lower_bound(points_.begin(), points_.end(), p);
    if (it == points_.end() || *it != p) return false;
    points_.erase(it);
    return true;
}

FixedPointData reverse_orientation(const FixedPointData& data) {
    std::vector<FixedPoint> flipped;
    flipped.reserve(data.size());
    for (const FixedPoint& p : data) flipped.push_back(p.opposite_sign());
    return FixedPointData(std::move(flipped));
}

Int overall_gcd(const FixedPointData& data) {
    if (data.empty()) throw EmptyData("overall_gcd: no points");
    Int g = 0;
    for (const FixedPoint& p : data) {
        for (const Int& w : p.weights()) g = boost::multiprecision::gcd(g, w);
    }
    return g;
}

std::pair<FixedPointData, Int> normalize_effective(const FixedPointData& data) {
    Int g = overall_gcd(data);
    if (g == 1) return {data, g};
    std::vector<FixedPoint> scaled;
    scaled.reserve(data.size());
    for (const FixedPoint& p : data) {
        const auto& w = p.weights();
        scaled.emplace_back(p.sign(), w[0] / g, w[1] / g, w[2] / g);
    }
    return {FixedPointData(std::move(scaled)), g};
}

Int max_weight(const FixedPointData& data) {
    if (data.empty()) throw EmptyData("max_weight: no points");
    Int m = 0;
    for (const FixedPoint& p : data) m = std::max(m, p.top_weight());
    return m;
}

Int total_weight_sum(const FixedPointData& data) {
    Int s = 0;
    for (const FixedPoint& p : data) {
        for (const Int& w : p.weights()) s += w;
    }
    return s;
}

}  // namespace fpd
