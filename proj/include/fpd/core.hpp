#pragma once

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "fpd/errors.hpp"

namespace fpd {

using Int = boost::multiprecision::cpp_int;

enum class Sign : std::int8_t { plus = +1, minus = -1 };

constexpr Sign opposite(Sign s) { return s == Sign::plus ? Sign::minus : Sign::plus; }
constexpr int sign_value(Sign s) { return s == Sign::plus ? +1 : -1; }
constexpr char sign_char(Sign s) { return s == Sign::plus ? '+' : '-'; }

/// One isolated fixed point: a sign and three positive weights. Weights are
/// stored in non-increasing order, so two points compare equal exactly when
/// their signs agree and their weight multisets agree.
class FixedPoint {
public:
    FixedPoint(Sign sign, Int w1, Int w2, Int w3);

    Sign sign() const { return sign_; }
    const std::array<Int, 3>& weights() const { return weights_; }
    const Int& top_weight() const { return weights_[0]; }

    /// Multiplicity of w among the three weights (0..3).
    int weight_count(const Int& w) const;

    /// Same weights, flipped sign.
    FixedPoint opposite_sign() const;

    friend bool operator==(const FixedPoint& a, const FixedPoint& b) {
        return a.sign_ == b.sign_ && a.weights_ == b.weights_;
    }
    friend bool operator!=(const FixedPoint& a, const FixedPoint& b) { return !(a == b); }

    // Canonical order: '+' before '-', then larger weight tuple first.
    friend bool operator<(const FixedPoint& a, const FixedPoint& b) {
        if (a.sign_ != b.sign_) return a.sign_ == Sign::plus;
        return b.weights_ < a.weights_;
    }

private:
    Sign sign_;
    std::array<Int, 3> weights_;
};

FixedPoint make_fixed_point(Sign sign, Int w1, Int w2, Int w3);

/// Multiset of fixed points kept in canonical order ('+' block first, each
/// block by descending weight tuple). Duplicates are meaningful.
class FixedPointData {
public:
    FixedPointData() = default;
    explicit FixedPointData(std::vector<FixedPoint> points);

    bool empty() const { return points_.empty(); }
    std::size_t size() const { return points_.size(); }
    const std::vector<FixedPoint>& points() const { return points_; }
    auto begin() const { return points_.begin(); }
    auto end() const { return points_.end(); }

    std::size_t count(const FixedPoint& p) const;
    bool contains(const FixedPoint& p) const { return count(p) > 0; }

    void insert(const FixedPoint& p);
    /// Removes one copy of p; returns false if p is absent.
    bool remove(const FixedPoint& p);

    friend bool operator==(const FixedPointData& a, const FixedPointData& b) {
        return a.points_ == b.points_;
    }
    friend bool operator!=(const FixedPointData& a, const FixedPointData& b) {
        return !(a == b);
    }

private:
    std::vector<FixedPoint> points_;
};

/// Flips the sign of every point; an involution.
FixedPointData reverse_orientation(const FixedPointData& data);

/// gcd of all weights over all points. Throws EmptyData on empty input.
Int overall_gcd(const FixedPointData& data);

/// Divides every weight by overall_gcd; returns (normalized data, divisor).
std::pair<FixedPointData, Int> normalize_effective(const FixedPointData& data);

/// Largest weight over all points. Throws EmptyData on empty input.
Int max_weight(const FixedPointData& data);

/// Sum of all weights over all points (degree bound for the signature
/// identity); 0 for empty data.
Int total_weight_sum(const FixedPointData& data);

}  // namespace fpd
