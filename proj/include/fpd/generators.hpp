#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "fpd/core.hpp"

namespace fpd {

/// Weights of a complex S^1-representation at a fixed point of a complex
/// manifold; entries may be negative but never zero.
using ComplexWeights = std::array<Int, 3>;

enum class GeneratorFamily { s6, cp3, z1, z2, z2sum };

std::string family_name(GeneratorFamily f);
GeneratorFamily family_from_name(const std::string& name);  // throws ParseError

/// Names the model manifold a reduction step connect-sums with.
struct GeneratorLabel {
    GeneratorFamily family = GeneratorFamily::s6;
    std::vector<Int> params;
    bool reversed = false;

    friend bool operator==(const GeneratorLabel&, const GeneratorLabel&) = default;
};

/// Real form of a complex fixed point: sign = (-1)^{#negative entries},
/// weights = absolute values. Throws ZeroWeight.
FixedPoint complex_to_real(const ComplexWeights& cw);

/// Rotation of the 6-sphere: {+,a,b,c}, {-,a,b,c}.
FixedPointData gen_s6(const Int& a, const Int& b, const Int& c);

/// Standard action on complex projective 3-space, 0 < a < b < c:
/// {+,a,b,c}, {-,a,b-a,c-a}, {+,b,b-a,c-b}, {-,c,c-a,c-b}.
FixedPointData gen_cp3(const Int& a, const Int& b, const Int& c);

/// Six-dimensional analogue of the Hirzebruch surfaces, a hypersurface in
/// CP^3 x CP^1; requires b != a, nc != a, nc != b. The six points are the
/// real forms of the complex weight triples at its six fixed points.
FixedPointData gen_zn(const Int& n, const Int& a, const Int& b, const Int& c);

/// Z_2(a,e,e) glued to orientation-reversed Z_2(a,a-e,a-e) at the fixed
/// points sharing weights {a, a-e, e}; requires 0 < 2e < a. Ten points.
FixedPointData gen_z2sum(const Int& a, const Int& e);

/// Equivariant connected sum on data: every pair (p, q) must have p in m and
/// q in n (with multiplicity, accounting for earlier pairs), equal weight
/// multisets and opposite signs; the result drops all paired points.
FixedPointData connected_sum(const FixedPointData& m, const FixedPointData& n,
                             const std::vector<std::pair<FixedPoint, FixedPoint>>& pairs);

/// Realizes a generator label as data (applies the orientation reversal).
FixedPointData generator_data(const GeneratorLabel& label);

}  // namespace fpd
