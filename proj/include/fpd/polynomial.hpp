#pragma once

#include <cstddef>
#include <vector>

#include "fpd/core.hpp"

namespace fpd {

/// Converts a weight to a coefficient index, rejecting values too large for
/// dense storage (well beyond desk scale).
std::size_t weight_to_index(const Int& w);

/// Dense univariate polynomial with arbitrary-precision integer
/// coefficients; index = degree, trailing zeros trimmed. The zero polynomial
/// stores no coefficients and reports degree -1 (sentinel for -infinity).
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<Int> coeffs);
    static IntPolynomial constant(Int c);

    bool is_zero() const { return coeffs_.empty(); }
    std::ptrdiff_t degree() const { return static_cast<std::ptrdiff_t>(coeffs_.size()) - 1; }
    Int coeff(std::size_t d) const;
    const std::vector<Int>& coefficients() const { return coeffs_; }

    IntPolynomial& operator+=(const IntPolynomial& o);
    IntPolynomial& operator-=(const IntPolynomial& o);
    friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
    friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);

    friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) {
        return a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const IntPolynomial& a, const IntPolynomial& b) { return !(a == b); }

    // Binomial helpers used by the signature identity; all in place.
    void mul_one_plus_t_pow(std::size_t w);
    void mul_one_minus_t_pow(std::size_t w);
    /// Exact division by (1 - t^w); throws Error when the division leaves a
    /// remainder.
    void div_one_minus_t_pow_exact(std::size_t w);

private:
    void trim();
    std::vector<Int> coeffs_;
};

IntPolynomial poly_add(const IntPolynomial& a, const IntPolynomial& b);
IntPolynomial poly_mul(const IntPolynomial& a, const IntPolynomial& b);

/// 1 + t^w, resp. 1 - t^w, for w >= 1; otherwise NonPositiveWeight.
IntPolynomial one_plus_t_pow(const Int& w);
IntPolynomial one_minus_t_pow(const Int& w);

/// Power series truncated at a fixed degree; coefficients 0..N are stored.
/// Arithmetic requires both operands to share the truncation degree.
class TruncatedSeries {
public:
    explicit TruncatedSeries(std::size_t truncation_degree);
    TruncatedSeries(std::size_t truncation_degree, std::vector<Int> coeffs);
    static TruncatedSeries one(std::size_t truncation_degree);

    std::size_t truncation_degree() const { return coeffs_.size() - 1; }
    const Int& coeff(std::size_t d) const { return coeffs_.at(d); }
    const std::vector<Int>& coefficients() const { return coeffs_; }
    bool is_zero() const;

    TruncatedSeries& operator+=(const TruncatedSeries& o);
    TruncatedSeries& operator-=(const TruncatedSeries& o);
    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);

    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
        return a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const TruncatedSeries& a, const TruncatedSeries& b) { return !(a == b); }

private:
    std::vector<Int> coeffs_;  // size = truncation degree + 1
};

}  // namespace fpd
