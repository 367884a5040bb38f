#include "fpd/fuzz.hpp"

#include <functional>
#include <vector>

#include "fpd/generators.hpp"
#include "fpd/reducer.hpp"
#include "fpd/textio.hpp"

namespace fpd {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

// Uniform in [lo, hi]; modulo bias is irrelevant here and keeps the stream
// identical across standard library implementations.
int pick(std::mt19937_64& rng, int lo, int hi) {
    return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

FixedPointData random_generator_instance(std::mt19937_64& rng, int max_param) {
    const int p = std::max(max_param, 1);
    for (;;) {
        switch (pick(rng, 0, 4)) {
            case 0:
                return gen_s6(pick(rng, 1, p), pick(rng, 1, p), pick(rng, 1, p));
            case 1: {
                if (p < 3) continue;
                int a = pick(rng, 1, p - 2);
                int b = pick(rng, a + 1, p - 1);
                int c = pick(rng, b + 1, p);
                return gen_cp3(a, b, c);
            }
            case 2: {
                if (p < 3) continue;
                int a = pick(rng, 1, p), b = pick(rng, 1, p), c = pick(rng, 1, p);
                if (b == a || c == a || c == b) continue;
                return gen_zn(1, a, b, c);
            }
            case 3: {
                if (p < 2) continue;
                int a = pick(rng, 1, p), b = pick(rng, 1, p), c = pick(rng, 1, p);
                if (b == a || 2 * c == a || 2 * c == b) continue;
                return gen_zn(2, a, b, c);
            }
            default: {
                if (p < 3) continue;
                int a = pick(rng, 3, p);
                int e_max = (a - 1) / 2;
                if (e_max < 1) continue;
                return gen_z2sum(a, pick(rng, 1, e_max));
            }
        }
    }
}

/// Model manifolds whose data contains a point with the given weights (the
/// '+' copy; the caller reverses when the '-' copy is needed).
std::vector<std::function<FixedPointData()>> glue_candidates(const FixedPoint& p) {
    const Int& w0 = p.weights()[0];
    const Int& w1 = p.weights()[1];
    const Int& w2 = p.weights()[2];
    std::vector<std::function<FixedPointData()>> out;
    out.push_back([=] { return gen_s6(w0, w1, w2); });
    if (w0 > w1 && w1 > w2) out.push_back([=] { return gen_cp3(w2, w1, w0); });
    if (w0 != w1 && w1 != w2 && w0 != w2)
        out.push_back([=] { return gen_zn(1, w0, w1, w2); });
    if (w1 == w2 && w0 != w1 && w0 != 2 * w1)
        out.push_back([=] { return gen_zn(2, w0, w1, w1); });
    if (w0 == w1 && w0 != w2 && w2 != 2 * w0)
        out.push_back([=] { return gen_zn(2, w2, w0, w0); });
    if (w1 == w2 && 2 * w2 < w0) out.push_back([=] { return gen_z2sum(w0, w2); });
    if (w1 == w2 && w2 < w0 && w0 < 2 * w2) out.push_back([=] { return gen_z2sum(w0, w0 - w1); });
    return out;
}

}  // namespace

std::mt19937_64 iteration_rng(std::uint64_t seed, int index) {
    return std::mt19937_64(splitmix64(seed ^ splitmix64(static_cast<std::uint64_t>(index))));
}

FixedPointData random_realizable_data(std::mt19937_64& rng, int max_summands, int max_param) {
    const int summands = pick(rng, 1, std::max(max_summands, 1));
    FixedPointData data = random_generator_instance(rng, max_param);
    for (int i = 1; i < summands && !data.empty(); ++i) {
        const FixedPoint& at = data.points()[static_cast<std::size_t>(
            pick(rng, 0, static_cast<int>(data.size()) - 1))];
        const auto candidates = glue_candidates(at);
        FixedPointData summand =
            candidates[static_cast<std::size_t>(pick(rng, 0, static_cast<int>(candidates.size()) - 1))]();
        const FixedPoint mirror = at.opposite_sign();
        if (!summand.contains(mirror)) summand = reverse_orientation(summand);

        std::vector<std::pair<FixedPoint, FixedPoint>> pairs = {{at, mirror}};
        if (pick(rng, 0, 3) == 0) {
            // Occasionally glue at a second matching pair.
            FixedPointData rest_data = data;
            rest_data.remove(at);
            FixedPointData rest_summand = summand;
            rest_summand.remove(mirror);
            for (const FixedPoint& q : rest_data) {
                if (rest_summand.contains(q.opposite_sign())) {
                    pairs.emplace_back(q, q.opposite_sign());
                    break;
                }
            }
        }
        data = connected_sum(data, summand, pairs);
    }
    return data;
}

FuzzOutcome run_fuzz(const FuzzOptions& options, std::ostream* log) {
    FuzzOutcome outcome;
    for (int i = 0; i < options.iterations; ++i) {
        ++outcome.total;
        std::mt19937_64 rng = iteration_rng(options.seed, i);
        const FixedPointData data =
            random_realizable_data(rng, options.max_summands, options.max_param);
        std::string failure;
        try {
            const CobordismCertificate cert = reduce_to_empty(data);
            std::string diag;
            if (!verify_certificate(cert, &diag)) failure = "certificate replay failed: " + diag;
        } catch (const Error& e) {
            failure = e.what();
        }
        if (!failure.empty()) {
            ++outcome.failures;
            if (outcome.first_failure.empty()) outcome.first_failure = failure;
            if (log) {
                *log << "fuzz iteration " << i << " (seed " << options.seed << ") failed: "
                     << failure << "\n"
                     << print_data(data);
            }
        }
    }
    return outcome;
}

}  // namespace fpd
