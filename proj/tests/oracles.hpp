#pragma once

// Independent reference computations for the tests. Nothing here calls the
// elimination, active-set or interval-scanning code paths of the library.

#include "negdef/matrix.hpp"
#include "negdef/toric.hpp"

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

namespace oracle {

using negdef::QMatrix;
using negdef::Rat;
using negdef::RatVector;

/// Laplace expansion along rows, memoized on the set of used columns. Zero
/// entries are skipped, so sparse Dynkin-shaped matrices up to order ~24 are
/// cheap.
inline Rat cofactor_det(const QMatrix& m) {
    const std::size_t n = m.order();
    std::unordered_map<std::uint32_t, Rat> memo;
    // det of rows [row, n) against the columns not in `used`.
    auto rec = [&](auto&& self, std::size_t row, std::uint32_t used) -> Rat {
        if (row == n) {
            return Rat(1);
        }
        if (auto it = memo.find(used); it != memo.end()) {
            return it->second;
        }
        Rat acc = 0;
        int parity = 0;  // number of unused columns before j
        for (std::size_t j = 0; j < n; ++j) {
            if (used & (1U << j)) {
                continue;
            }
            if (sgn(m(row, j)) != 0) {
                const Rat minor = self(self, row + 1, used | (1U << j));
                if (parity % 2 == 0) {
                    acc += m(row, j) * minor;
                } else {
                    acc -= m(row, j) * minor;
                }
            }
            ++parity;
        }
        memo.emplace(used, acc);
        return acc;
    };
    return rec(rec, 0, 0);
}

/// Cramer's rule on cofactor determinants; nullopt when singular.
inline std::optional<RatVector> cramer_solve(const QMatrix& m, const RatVector& v) {
    const Rat d = cofactor_det(m);
    if (sgn(d) == 0) {
        return std::nullopt;
    }
    RatVector x(m.order());
    for (std::size_t j = 0; j < m.order(); ++j) {
        QMatrix replaced = m;
        for (std::size_t i = 0; i < m.order(); ++i) {
            replaced(i, j) = v[i];
        }
        x[j] = cofactor_det(replaced) / d;
    }
    return x;
}

inline RatVector mat_vec(const QMatrix& m, const RatVector& x) {
    RatVector y(m.order());
    for (std::size_t i = 0; i < m.order(); ++i) {
        for (std::size_t j = 0; j < m.order(); ++j) {
            y[i] += m(i, j) * x[j];
        }
    }
    return y;
}

/// Every complementary feasible point of { e >= 0, G e + d <= 0 } found by
/// trying each active set S: solve on S, zero elsewhere, keep what is
/// feasible.
inline std::vector<RatVector> complementary_solutions(const QMatrix& g, const RatVector& d) {
    const std::size_t n = g.order();
    std::vector<RatVector> out;
    for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
        std::vector<std::size_t> idx;
        for (std::size_t j = 0; j < n; ++j) {
            if (mask & (1U << j)) {
                idx.push_back(j);
            }
        }
        RatVector e(n);
        if (!idx.empty()) {
            QMatrix sub(idx.size());
            RatVector rhs;
            for (std::size_t a = 0; a < idx.size(); ++a) {
                for (std::size_t b = 0; b < idx.size(); ++b) {
                    sub(a, b) = g(idx[a], idx[b]);
                }
                rhs.push_back(-d[idx[a]]);
            }
            const auto sol = cramer_solve(sub, rhs);
            if (!sol) {
                continue;
            }
            for (std::size_t a = 0; a < idx.size(); ++a) {
                e[idx[a]] = (*sol)[a];
            }
        }
        bool feasible = true;
        const RatVector r = mat_vec(g, e);
        for (std::size_t j = 0; j < n; ++j) {
            feasible = feasible && sgn(e[j]) >= 0 && sgn(r[j] + d[j]) <= 0;
        }
        if (feasible) {
            out.push_back(e);
        }
    }
    return out;
}

/// b_1 - 1/(b_2 - 1/(...)) evaluated from the tail.
inline Rat continued_fraction(const std::vector<std::int64_t>& b) {
    Rat value = Rat(b.back());
    for (std::size_t i = b.size() - 1; i-- > 0;) {
        value = Rat(b[i]) - 1 / value;
    }
    return value;
}

/// Point-by-point membership check over the whole window.
inline std::vector<negdef::toric::LatticePoint> brute_sections(
    const negdef::toric::ResolutionFan& fan, const negdef::toric::ToricDivisor& d, const Rat& t,
    bool boundary_only, const negdef::toric::Window& w) {
    std::vector<negdef::toric::LatticePoint> out;
    for (std::int64_t x = w.x_min; x <= w.x_max; ++x) {
        for (std::int64_t y = w.y_min; y <= w.y_max; ++y) {
            bool inside = true;
            for (std::size_t r = 0; r < fan.ray_count() && inside; ++r) {
                if (boundary_only && fan.is_exceptional(r)) {
                    continue;
                }
                const auto& v = fan.rays()[r];
                const Rat lhs = Rat(x * v.x + y * v.y);
                // <m, v> + floor(t d) >= 0
                inside = lhs + Rat(negdef::floor_of(t * d.d[r])) >= 0;
            }
            if (inside) {
                out.push_back({x, y});
            }
        }
    }
    return out;
}

}  // namespace oracle
