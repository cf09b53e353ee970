#pragma once

#include "negdef/curve_system.hpp"

#include <vector>

namespace negdef {

/// Curves of exceptional divisors whose images have dimension `e`.
struct Stratum {
    int e = 0;
    CurveSystem system;
};

/// Pairings E_k . C_i of each divisor k of stratum `from_e` against each curve
/// i of stratum `to_e`; rows follow the `from_e` labels, columns the `to_e`
/// labels.
struct CrossPairing {
    int from_e = 0;
    int to_e = 0;
    std::vector<std::vector<Rat>> values;
};

/// Curve systems grouped by image dimension, with the cross-stratum pairings.
///
/// Validation enforces the sign pattern that slicing by general hyperplanes
/// produces: divisors of a lower stratum pair to zero with curves of a higher
/// stratum, and divisors of a higher stratum pair nonnegatively with curves of
/// a lower one. Cross blocks that are not supplied are zero.
class StratifiedSystem {
public:
    /// `dimension` is the ambient dimension n; every e must lie in [0, n-2].
    /// Strata must be given in strictly increasing e.
    StratifiedSystem(int dimension, std::vector<Stratum> strata, std::vector<CrossPairing> cross);

    int dimension() const { return dimension_; }
    std::size_t stratum_count() const { return strata_.size(); }
    const Stratum& stratum(std::size_t index) const { return strata_[index]; }
    const std::vector<Stratum>& strata() const { return strata_; }

    /// E_k . C_i for divisor k of stratum `from` and curve i of stratum `to`
    /// (indices into strata()). For from == to this is the stratum's own
    /// intersection matrix.
    const Rat& pairing(std::size_t from, std::size_t k, std::size_t to, std::size_t i) const;

    /// (sum_k coeffs_k E_k) . C_i over the curves i of stratum `to`, where the
    /// divisors E_k are those of stratum `from`.
    PairingVector combination_pairing(std::size_t from, const RatVector& coeffs, std::size_t to) const;

private:
    int dimension_ = 2;
    std::vector<Stratum> strata_;
    // blocks_[from][to] is |from| x |to|, row-major.
    std::vector<std::vector<std::vector<Rat>>> blocks_;
};

struct StratumCombination {
    int e = 0;
    NegativeCombination combination;  ///< E^e, using the integral vector
    Int multiplier;                   ///< m_e
    PairingVector totals;             ///< E . C_i for the curves of this stratum
};

/// Combines the per-stratum negative combinations E^e with multipliers m_e
/// chosen from the largest e downwards:
///   m_top = 1,
///   m_e = 1 + ceil( sum_{e' > e} m_{e'} * max_i max(0, E^{e'} . C_i)
///                   / min_i |E^e . C_i| ),
/// with i ranging over the curves of stratum e. The total E = sum m_e E^e
/// pairs negatively with every curve; this is checked.
std::vector<StratumCombination> stratified_combination(const StratifiedSystem& ss);

struct DescentResult {
    std::vector<RatVector> coefficients;  ///< per stratum, all >= 0
    std::vector<bool> strictly_positive;
};

/// Effectivity of D = B + sum a_k E_k from d = D.C and b = B.C given per
/// stratum. Strata are solved from the largest e down; divisors of strata
/// already solved are moved to the B side of the lower strata, where they pair
/// nonnegatively.
DescentResult effectivity_descent(const StratifiedSystem& ss,
                                  const std::vector<PairingVector>& d_per_stratum,
                                  const std::vector<PairingVector>& b_per_stratum);

}  // namespace negdef
