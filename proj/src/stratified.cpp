#include "negdef/stratified.hpp"

#include <string>

namespace negdef {

StratifiedSystem::StratifiedSystem(int dimension, std::vector<Stratum> strata,
                                   std::vector<CrossPairing> cross)
    : dimension_(dimension), strata_(std::move(strata)) {
    if (dimension_ < 2) {
        throw InvalidInput("ambient dimension must be at least 2");
    }
    for (std::size_t s = 0; s < strata_.size(); ++s) {
        const int e = strata_[s].e;
        if (e < 0 || e > dimension_ - 2) {
            throw InvalidInput("stratum e = " + std::to_string(e) + " outside [0, " +
                               std::to_string(dimension_ - 2) + "]");
        }
        if (s > 0 && e <= strata_[s - 1].e) {
            throw InvalidInput("strata must have strictly increasing e");
        }
    }

    const std::size_t count = strata_.size();
    blocks_.assign(count, std::vector<std::vector<Rat>>(count));
    for (std::size_t a = 0; a < count; ++a) {
        for (std::size_t b = 0; b < count; ++b) {
            blocks_[a][b].assign(strata_[a].system.size() * strata_[b].system.size(), Rat(0));
        }
    }

    auto index_of = [&](int e) {
        for (std::size_t s = 0; s < count; ++s) {
            if (strata_[s].e == e) {
                return s;
            }
        }
        throw InvalidInput("cross pairing refers to missing stratum e = " + std::to_string(e));
    };

    std::vector<std::vector<bool>> seen(count, std::vector<bool>(count, false));
    for (const auto& c : cross) {
        const std::size_t from = index_of(c.from_e);
        const std::size_t to = index_of(c.to_e);
        if (from == to) {
            throw InvalidInput("cross pairing within a single stratum e = " + std::to_string(c.from_e));
        }
        if (seen[from][to]) {
            throw InvalidInput("duplicate cross pairing " + std::to_string(c.from_e) + " -> " +
                               std::to_string(c.to_e));
        }
        seen[from][to] = true;
        const std::size_t rows = strata_[from].system.size();
        const std::size_t cols = strata_[to].system.size();
        if (c.values.size() != rows) {
            throw InvalidInput("cross pairing " + std::to_string(c.from_e) + " -> " +
                               std::to_string(c.to_e) + " needs " + std::to_string(rows) + " rows");
        }
        for (std::size_t k = 0; k < rows; ++k) {
            if (c.values[k].size() != cols) {
                throw InvalidInput("cross pairing " + std::to_string(c.from_e) + " -> " +
                                   std::to_string(c.to_e) + " needs " + std::to_string(cols) +
                                   " columns");
            }
            for (std::size_t i = 0; i < cols; ++i) {
                const Rat& v = c.values[k][i];
                // Lower-stratum divisors miss the higher-stratum curves entirely.
                if (c.from_e < c.to_e && sgn(v) != 0) {
                    throw InvalidInput("pairing of stratum " + std::to_string(c.from_e) +
                                       " divisor with stratum " + std::to_string(c.to_e) +
                                       " curve must be 0");
                }
                if (c.from_e > c.to_e && sgn(v) < 0) {
                    throw InvalidInput("pairing of stratum " + std::to_string(c.from_e) +
                                       " divisor with stratum " + std::to_string(c.to_e) +
                                       " curve must be >= 0");
                }
                blocks_[from][to][k * cols + i] = v;
            }
        }
    }
}

const Rat& StratifiedSystem::pairing(std::size_t from, std::size_t k, std::size_t to,
                                     std::size_t i) const {
    if (from == to) {
        return strata_[from].system.matrix()(k, i);
    }
    return blocks_[from][to][k * strata_[to].system.size() + i];
}

PairingVector StratifiedSystem::combination_pairing(std::size_t from, const RatVector& coeffs,
                                                    std::size_t to) const {
    const std::size_t rows = strata_[from].system.size();
    const std::size_t cols = strata_[to].system.size();
    if (coeffs.size() != rows) {
        throw InvalidInput("coefficient vector does not match stratum size");
    }
    PairingVector out(cols);
    for (std::size_t k = 0; k < rows; ++k) {
        if (sgn(coeffs[k]) == 0) {
            continue;
        }
        for (std::size_t i = 0; i < cols; ++i) {
            out[i] += coeffs[k] * pairing(from, k, to, i);
        }
    }
    return out;
}

namespace {

RatVector as_rats(const std::vector<Int>& values) {
    return RatVector(values.begin(), values.end());
}

}  // namespace

std::vector<StratumCombination> stratified_combination(const StratifiedSystem& ss) {
    const std::size_t count = ss.stratum_count();
    std::vector<StratumCombination> out(count);
    std::vector<RatVector> integral(count);
    for (std::size_t s = 0; s < count; ++s) {
        out[s].e = ss.stratum(s).e;
        out[s].combination = find_negative_combination(ss.stratum(s).system);
        integral[s] = as_rats(out[s].combination.integral);
    }

    for (std::size_t s = count; s-- > 0;) {
        const std::size_t curves = ss.stratum(s).system.size();
        if (s + 1 == count || curves == 0) {
            out[s].multiplier = 1;
            continue;
        }
        Rat spill = 0;
        for (std::size_t higher = s + 1; higher < count; ++higher) {
            const PairingVector p = ss.combination_pairing(higher, integral[higher], s);
            Rat worst = 0;
            for (const auto& v : p) {
                if (v > worst) {
                    worst = v;
                }
            }
            spill += Rat(out[higher].multiplier) * worst;
        }
        const PairingVector own = ss.combination_pairing(s, integral[s], s);
        Rat weakest = -own.front();
        for (const auto& v : own) {
            if (-v < weakest) {
                weakest = -v;
            }
        }
        out[s].multiplier = 1 + ceil_of(spill / weakest);
    }

    for (std::size_t s = 0; s < count; ++s) {
        PairingVector totals(ss.stratum(s).system.size());
        for (std::size_t from = 0; from < count; ++from) {
            const PairingVector p = ss.combination_pairing(from, integral[from], s);
            for (std::size_t i = 0; i < totals.size(); ++i) {
                totals[i] += Rat(out[from].multiplier) * p[i];
            }
        }
        for (const auto& t : totals) {
            if (sgn(t) >= 0) {
                throw InvariantBroken("stratified combination does not pair negatively");
            }
        }
        out[s].totals = std::move(totals);
    }
    return out;
}

DescentResult effectivity_descent(const StratifiedSystem& ss,
                                  const std::vector<PairingVector>& d_per_stratum,
                                  const std::vector<PairingVector>& b_per_stratum) {
    const std::size_t count = ss.stratum_count();
    if (d_per_stratum.size() != count || b_per_stratum.size() != count) {
        throw InvalidInput("need one d and one b vector per stratum");
    }
    for (std::size_t s = 0; s < count; ++s) {
        const std::size_t curves = ss.stratum(s).system.size();
        if (d_per_stratum[s].size() != curves || b_per_stratum[s].size() != curves) {
            throw InvalidInput("pairing vector length does not match stratum e = " +
                               std::to_string(ss.stratum(s).e));
        }
        for (std::size_t i = 0; i < curves; ++i) {
            if (sgn(d_per_stratum[s][i]) > 0) {
                throw HypothesisViolated("D.C is positive on stratum e = " +
                                         std::to_string(ss.stratum(s).e));
            }
            if (sgn(b_per_stratum[s][i]) < 0) {
                throw HypothesisViolated("B.C is negative on stratum e = " +
                                         std::to_string(ss.stratum(s).e));
            }
        }
    }

    DescentResult out;
    out.coefficients.resize(count);
    out.strictly_positive.assign(count, false);
    for (std::size_t s = count; s-- > 0;) {
        PairingVector b = b_per_stratum[s];
        for (std::size_t higher = s + 1; higher < count; ++higher) {
            const PairingVector p = ss.combination_pairing(higher, out.coefficients[higher], s);
            for (std::size_t i = 0; i < b.size(); ++i) {
                b[i] += p[i];
            }
        }
        const PairingVector& d = d_per_stratum[s];
        bool strict = true;
        for (const auto& v : d) {
            strict = strict && sgn(v) < 0;
        }
        const NegativityResult r = negativity_coefficients(ss.stratum(s).system, d, b, strict);
        out.coefficients[s] = r.coefficients;
        out.strictly_positive[s] = r.strictly_positive;
    }
    return out;
}

}  // namespace negdef
