#include "fpd/signature.hpp"

namespace fpd {

IntPolynomial signature_identity_poly(const FixedPointData& data) {
    if (data.empty()) throw EmptyData("signature_identity_poly: no points");

    // weight_to_index caps each factor; the full product degree is the sum of
    // all weights, so guard that too.
    weight_to_index(total_weight_sum(data));

    IntPolynomial denom = IntPolynomial::constant(1);
    for (const FixedPoint& p : data) {
        for (const Int& w : p.weights()) denom.mul_one_minus_t_pow(weight_to_index(w));
    }

    IntPolynomial acc;
    for (const FixedPoint& p : data) {
        IntPolynomial term = denom;
        for (const Int& w : p.weights()) term.div_one_minus_t_pow_exact(weight_to_index(w));
        for (const Int& w : p.weights()) term.mul_one_plus_t_pow(weight_to_index(w));
        if (p.sign() == Sign::plus)
            acc += term;
        else
            acc -= term;
    }
    return acc;
}

TruncatedSeries signature_series(const FixedPointData& data, std::size_t n) {
    if (data.empty()) throw EmptyData("signature_series: no points");

    TruncatedSeries acc(n);
    for (const FixedPoint& p : data) {
        TruncatedSeries term = TruncatedSeries::one(n);
        for (const Int& wi : p.weights()) {
            // (1 + t^w) * sum_j t^{jw} = 1 + 2 t^w + 2 t^{2w} + ...
            const std::size_t w = weight_to_index(wi);
            std::vector<Int> factor(n + 1);
            factor[0] = 1;
            for (std::size_t k = w; k <= n; k += w) factor[k] = 2;
            term = term * TruncatedSeries(n, std::move(factor));
        }
        if (p.sign() == Sign::plus)
            acc += term;
        else
            acc -= term;
    }
    return acc;
}

}  // namespace fpd
