#include "negdef/generators.hpp"

#include <limits>

namespace negdef::gen {

std::uint64_t Rng::below(std::uint64_t bound) {
    // Rejection sampling on the top of the range to stay unbiased.
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t draw = engine_();
    while (draw >= limit) {
        draw = engine_();
    }
    return draw % bound;
}

std::int64_t Rng::between(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b, std::uint64_t c) {
    std::uint64_t h = splitmix64(seed);
    h = splitmix64(h ^ a);
    h = splitmix64(h ^ b);
    return splitmix64(h ^ c);
}

CurveSystem random_curve_system(Rng& rng, std::size_t max_order, int extra_depth) {
    while (true) {
        const auto order = static_cast<std::size_t>(rng.between(1, static_cast<std::int64_t>(max_order)));
        QMatrix g(order);
        for (std::size_t i = 0; i < order; ++i) {
            g(i, i) = Rat(-2 - rng.between(0, extra_depth));
            if (i > 0 && rng.chance(3, 4)) {
                const auto parent = static_cast<std::size_t>(rng.below(i));
                g(i, parent) = 1;
                g(parent, i) = 1;
            }
        }
        if (is_negative_definite(g).negative_definite) {
            return CurveSystem(std::move(g));
        }
    }
}

StratifiedSystem random_stratified_system(Rng& rng, std::size_t max_order) {
    const int dimension = static_cast<int>(rng.between(2, 6));
    std::vector<Stratum> strata;
    for (int e = 0; e <= dimension - 2; ++e) {
        if (rng.chance(2, 3)) {
            strata.push_back({e, random_curve_system(rng, max_order)});
        }
    }
    if (strata.empty()) {
        strata.push_back({static_cast<int>(rng.between(0, dimension - 2)),
                          random_curve_system(rng, max_order)});
    }
    std::vector<CrossPairing> cross;
    for (std::size_t from = 0; from < strata.size(); ++from) {
        for (std::size_t to = 0; to < from; ++to) {
            CrossPairing c{strata[from].e, strata[to].e, {}};
            for (std::size_t k = 0; k < strata[from].system.size(); ++k) {
                std::vector<Rat> row;
                for (std::size_t i = 0; i < strata[to].system.size(); ++i) {
                    row.emplace_back(rng.chance(1, 2) ? rng.between(0, 4) : 0);
                }
                c.values.push_back(std::move(row));
            }
            cross.push_back(std::move(c));
        }
    }
    return StratifiedSystem(dimension, std::move(strata), std::move(cross));
}

toric::ToricDivisor random_toric_divisor(const toric::ResolutionFan& fan, Rng& rng,
                                         std::int64_t max_den, std::int64_t max_abs) {
    toric::ToricDivisor d = toric::ToricDivisor::zero(fan);
    for (auto& c : d.d) {
        const std::int64_t den = rng.between(1, max_den);
        const std::int64_t num = rng.between(-max_abs * den, max_abs * den);
        c = make_rat(num, den);
    }
    return d;
}

}  // namespace negdef::gen
