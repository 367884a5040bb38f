#pragma once

#include "fpd/core.hpp"
#include "fpd/polynomial.hpp"

namespace fpd {

/// Numerator of the signature identity after clearing denominators:
///
///   sum_p eps(p) * prod_i (1 + t^{w_{p,i}}) * prod_{q != p} prod_j (1 - t^{w_{q,j}})
///
/// For data coming from a closed oriented 6-manifold the signature vanishes,
/// so this polynomial must be identically zero. Throws EmptyData.
IntPolynomial signature_identity_poly(const FixedPointData& data);

/// Coefficients 0..n of sum_p eps(p) prod_i (1 + t^{w_i}) / (1 - t^{w_i})
/// via geometric series expansion. Independent oracle for
/// signature_identity_poly. Throws EmptyData.
TruncatedSeries signature_series(const FixedPointData& data, std::size_t n);

}  // namespace fpd
