#pragma once

#include "negdef/curve_system.hpp"
#include "negdef/divisor.hpp"

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace negdef::toric {

class InvalidE : public Error {
public:
    using Error::Error;
};

/// Cyclic quotient singularity of type (n, q): 0 < q < n, gcd(n, q) = 1.
struct CyclicQuotient {
    std::int64_t n = 2;
    std::int64_t q = 1;

    /// Throws InvalidInput when the parameters are out of range or not coprime.
    static CyclicQuotient make(std::int64_t n, std::int64_t q);
};

/// Continued fraction n/q = b_1 - 1/(b_2 - 1/(...)) with every b_i >= 2.
std::vector<std::int64_t> hj_expand(std::int64_t n, std::int64_t q);

struct Ray {
    std::int64_t x = 0;
    std::int64_t y = 0;
    friend bool operator==(const Ray&, const Ray&) = default;
};

/// Fan of the minimal resolution of a cyclic quotient singularity.
///
/// Rays v_0 = (0,1), v_1 = (1,0), v_{i+1} = b_i v_i - v_{i-1}, ending at
/// v_{s+1} = (n, -q). Rays v_1..v_s are the exceptional curves; v_0 and
/// v_{s+1} are the two boundary divisors.
class ResolutionFan {
public:
    const CyclicQuotient& singularity() const { return cq_; }
    const std::vector<Ray>& rays() const { return rays_; }
    const std::vector<std::int64_t>& self_intersections() const { return b_; }

    std::size_t ray_count() const { return rays_.size(); }
    std::size_t exceptional_count() const { return b_.size(); }
    bool is_exceptional(std::size_t ray) const { return ray > 0 && ray + 1 < rays_.size(); }

    /// "v0", "v1", ...
    static std::string ray_label(std::size_t ray);

private:
    friend ResolutionFan build_fan(std::int64_t n, std::int64_t q);
    CyclicQuotient cq_;
    std::vector<Ray> rays_;
    std::vector<std::int64_t> b_;
};

ResolutionFan build_fan(std::int64_t n, std::int64_t q);

/// Tridiagonal matrix with -b_i on the diagonal and 1 next to it.
CurveSystem curve_matrix(const ResolutionFan& fan);

/// Torus-invariant Q-divisor, one coefficient per ray.
struct ToricDivisor {
    RatVector d;

    static ToricDivisor zero(const ResolutionFan& fan);
    /// Keys must be ray labels of `fan`; missing rays get coefficient 0.
    static ToricDivisor from_rdivisor(const ResolutionFan& fan, const RDivisor& divisor);
    /// Places `exceptional` on v_1..v_s and zero on the boundary rays.
    static ToricDivisor from_exceptional(const ResolutionFan& fan, const RatVector& exceptional);

    RDivisor to_rdivisor() const;
    /// Coefficients on v_1..v_s.
    RatVector exceptional_part() const;

    friend bool operator==(const ToricDivisor&, const ToricDivisor&) = default;
};

ToricDivisor operator+(const ToricDivisor& a, const ToricDivisor& b);

/// D . C_i = d_{i-1} - b_i d_i + d_{i+1} for every exceptional curve.
PairingVector pairing(const ResolutionFan& fan, const ToricDivisor& divisor);

struct LatticePoint {
    std::int64_t x = 0;
    std::int64_t y = 0;
    friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
};

/// Closed integer box.
struct Window {
    std::int64_t x_min = 0;
    std::int64_t x_max = 0;
    std::int64_t y_min = 0;
    std::int64_t y_max = 0;

    static Window square(std::int64_t radius) { return {-radius, radius, -radius, radius}; }
    bool contains(const LatticePoint& m) const {
        return x_min <= m.x && m.x <= x_max && y_min <= m.y && m.y <= y_max;
    }
    friend bool operator==(const Window&, const Window&) = default;
};

enum class RaySet { all, boundary_only };

/// Lower bounds -floor(t * d_rho) for <m, v_rho>, one per ray.
std::vector<std::int64_t> section_bounds(const ToricDivisor& divisor, const Rat& t);

/// Exponents m in `window` with <m, v_rho> >= -floor(t d_rho) for every
/// selected ray, in lexicographic order. These are the characters chi^m that
/// are sections of O(floor(tD)) over the selected part of the fan;
/// boundary_only gives the sections of the reflexive hull of the pushforward.
std::vector<LatticePoint> sections(const ResolutionFan& fan, const ToricDivisor& divisor,
                                   const Rat& t, RaySet rays, const Window& window);

/// A point of the reflexive-hull side missing from the other side.
struct Witness {
    Rat t;
    LatticePoint m;
    std::size_t ray = 0;         ///< first violated exceptional ray
    std::int64_t value = 0;      ///< <m, v_ray>
    std::int64_t bound = 0;      ///< required lower bound for value
};

struct Verdict {
    bool pass = true;
    RatVector t_samples;
    Window window;
    std::optional<Witness> witness;
};

/// Breakpoint grid {k/L : 1 <= k <= L*tmax} U {(2k+1)/(2L) : 0 <= k < L*tmax}
/// in increasing order, where L is the lcm of the denominators of D and D+E.
RatVector t_grid(const ToricDivisor& d, const ToricDivisor& e, std::int64_t tmax);

/// Square radius ceil(tmax * (1 + max |d + e|) * (n + 2)).
std::int64_t default_window_radius(const ResolutionFan& fan, const ToricDivisor& d,
                                   const ToricDivisor& e, std::int64_t tmax);

/// For each t compares sections(D, t, boundary_only) with
/// sections(D + E, t, all) inside the window. Fails with the lexicographically
/// smallest missing point at the first failing t. Throws InvalidE unless E is
/// effective and supported on exceptional rays.
Verdict verify_nakayama(const ResolutionFan& fan, const ToricDivisor& d, const ToricDivisor& e,
                        const RatVector& t_samples, const Window& window);

/// sections(D, 1, all) == sections(D, 1, boundary_only) inside the window.
/// Throws HypothesisViolated when some D . C_i > 0.
Verdict verify_reflexive(const ResolutionFan& fan, const ToricDivisor& d, const Window& window);

/// Dynkin family of an ADE configuration of (-2)-curves.
enum class AdeFamily { A, D, E };

/// Throws InvalidInput for ranks outside A >= 1, D >= 4, E in {6, 7, 8}.
CurveSystem ade_matrix(AdeFamily family, int rank);

}  // namespace negdef::toric
