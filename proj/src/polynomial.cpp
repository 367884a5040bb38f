#include "fpd/polynomial.hpp"

#include <algorithm>

namespace fpd {

namespace {
// Dense storage cap: far above anything the test suites touch, low enough to
// fail cleanly instead of exhausting memory on absurd weights.
constexpr std::size_t kMaxIndex = std::size_t(1) << 20;
}  // namespace

std::size_t weight_to_index(const Int& w) {
    if (w < 1) throw NonPositiveWeight("weight must be >= 1");
    if (w > kMaxIndex) throw Error("weight too large for dense polynomial expansion");
    return w.convert_to<std::size_t>();
}

IntPolynomial::IntPolynomial(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPolynomial IntPolynomial::constant(Int c) {
    IntPolynomial p;
    if (c != 0) p.coeffs_.push_back(std::move(c));
    return p;
}

Int IntPolynomial::coeff(std::size_t d) const {
    return d < coeffs_.size() ? coeffs_[d] : Int(0);
}

void IntPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return IntPolynomial();
    std::vector<Int> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            if (b.coeffs_[j] == 0) continue;
            out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return IntPolynomial(std::move(out));
}

void IntPolynomial::mul_one_plus_t_pow(std::size_t w) {
    if (is_zero() || w == 0) return;
    const std::size_t old = coeffs_.size();
    coeffs_.resize(old + w);
    for (std::size_t i = coeffs_.size(); i-- > w;) {
        Int high = i < old ? std::move(coeffs_[i]) : Int(0);
        coeffs_[i] = std::move(high) + coeffs_[i - w];
    }
    trim();
}

void IntPolynomial::mul_one_minus_t_pow(std::size_t w) {
    if (is_zero() || w == 0) return;
    const std::size_t old = coeffs_.size();
    coeffs_.resize(old + w);
    for (std::size_t i = coeffs_.size(); i-- > w;) {
        Int high = i < old ? std::move(coeffs_[i]) : Int(0);
        coeffs_[i] = std::move(high) - coeffs_[i - w];
    }
    trim();
}

void IntPolynomial::div_one_minus_t_pow_exact(std::size_t w) {
    if (is_zero() || w == 0) return;
    if (coeffs_.size() <= w) throw Error("inexact division by 1 - t^w");
    for (std::size_t i = w; i < coeffs_.size(); ++i) coeffs_[i] += coeffs_[i - w];
    for (std::size_t i = coeffs_.size() - w; i < coeffs_.size(); ++i) {
        if (coeffs_[i] != 0) throw Error("inexact division by 1 - t^w");
    }
    coeffs_.resize(coeffs_.size() - w);
    trim();
}

IntPolynomial poly_add(const IntPolynomial& a, const IntPolynomial& b) { return a + b; }
IntPolynomial poly_mul(const IntPolynomial& a, const IntPolynomial& b) { return a * b; }

IntPolynomial one_plus_t_pow(const Int& w) {
    std::size_t d = weight_to_index(w);
    std::vector<Int> c(d + 1);
    c[0] = 1;
    c[d] = 1;
    return IntPolynomial(std::move(c));
}

IntPolynomial one_minus_t_pow(const Int& w) {
    std::size_t d = weight_to_index(w);
    std::vector<Int> c(d + 1);
    c[0] = 1;
    c[d] = -1;
    return IntPolynomial(std::move(c));
}

TruncatedSeries::TruncatedSeries(std::size_t truncation_degree)
    : coeffs_(truncation_degree + 1) {}

TruncatedSeries::TruncatedSeries(std::size_t truncation_degree, std::vector<Int> coeffs)
    : coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != truncation_degree + 1)
        throw Error("truncated series needs exactly N+1 coefficients");
}

TruncatedSeries TruncatedSeries::one(std::size_t truncation_degree) {
    TruncatedSeries s(truncation_degree);
    s.coeffs_[0] = 1;
    return s;
}

bool TruncatedSeries::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Int& c) { return c == 0; });
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
    if (coeffs_.size() != o.coeffs_.size())
        throw Error("truncated series arithmetic requires equal truncation degrees");
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& o) {
    if (coeffs_.size() != o.coeffs_.size())
        throw Error("truncated series arithmetic requires equal truncation degrees");
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.coeffs_.size() != b.coeffs_.size())
        throw Error("truncated series arithmetic requires equal truncation degrees");
    const std::size_t n = a.coeffs_.size();
    TruncatedSeries out(n - 1);
    for (std::size_t i = 0; i < n; ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; i + j < n; ++j) {
            if (b.coeffs_[j] == 0) continue;
            out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return out;
}

}  // namespace fpd
