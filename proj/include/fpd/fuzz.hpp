#pragma once

#include <cstdint>
#include <ostream>
#include <random>
#include <string>

#include "fpd/core.hpp"

namespace fpd {

struct FuzzOptions {
    std::uint64_t seed = 0;
    int iterations = 100;
    int max_summands = 6;
    int max_param = 8;
};

struct FuzzOutcome {
    int total = 0;
    int failures = 0;
    std::string first_failure;

    bool ok() const { return failures == 0; }
};

/// Data of an iterated equivariant connected sum of up to max_summands model
/// manifolds with parameters in [1, max_param]; each summand glues at one or
/// two matching fixed point pairs, so the result is always the data of an
/// actual closed connected oriented 6-manifold.
FixedPointData random_realizable_data(std::mt19937_64& rng, int max_summands, int max_param);

/// Stable per-iteration generator: identical (seed, index) pairs replay the
/// same data regardless of iteration order.
std::mt19937_64 iteration_rng(std::uint64_t seed, int index);

/// Reduces and replays `iterations` random connected sums; every failure is
/// logged (when a log stream is given) with its seed and index.
FuzzOutcome run_fuzz(const FuzzOptions& options, std::ostream* log = nullptr);

}  // namespace fpd
