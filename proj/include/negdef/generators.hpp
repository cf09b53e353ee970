#pragma once

#include "negdef/stratified.hpp"
#include "negdef/toric.hpp"

#include <cstdint>
#include <random>

namespace negdef::gen {

/// Seeded generator with platform-independent draws. std::mt19937_64 output
/// is fully specified by the standard; the distributions below avoid the
/// implementation-defined std:: distributions so that seeded runs are
/// reproducible everywhere.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform in [0, bound), bound > 0.
    std::uint64_t below(std::uint64_t bound);
    /// Uniform in [lo, hi].
    std::int64_t between(std::int64_t lo, std::int64_t hi);
    bool chance(std::uint64_t numerator, std::uint64_t denominator) {
        return below(denominator) < numerator;
    }

private:
    std::mt19937_64 engine_;
};

std::uint64_t splitmix64(std::uint64_t x);

/// Seed for the k-th sub-stream of `seed`, independent of evaluation order.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0,
                          std::uint64_t c = 0);

/// Forest-shaped system: diagonal in [-2 - extra_depth, -2], each curve
/// meeting at most one earlier curve with intersection 1. Redrawn until
/// negative definite.
CurveSystem random_curve_system(Rng& rng, std::size_t max_order, int extra_depth = 3);

/// 1 to 4 strata with e drawn from [0, dimension-2], at most `max_order`
/// curves each; cross pairings from higher to lower strata are random
/// integers in [0, 4].
StratifiedSystem random_stratified_system(Rng& rng, std::size_t max_order = 4);

/// Coefficients p/q with 1 <= q <= max_den and |p/q| <= max_abs on every ray.
toric::ToricDivisor random_toric_divisor(const toric::ResolutionFan& fan, Rng& rng,
                                         std::int64_t max_den = 6, std::int64_t max_abs = 3);

}  // namespace negdef::gen
