#pragma once

#include "negdef/matrix.hpp"

#include <string>
#include <vector>

namespace negdef {

/// Pairing numbers D.C_i of some divisor against the curves of a system,
/// indexed like the system's labels.
using PairingVector = RatVector;

/// A validated intersection matrix (C_i . C_j) of exceptional curves:
/// symmetric, nonnegative off the diagonal, and negative definite.
class CurveSystem {
public:
    /// The empty system (no curves).
    CurveSystem() = default;

    /// Validates and throws on failure: InvalidInput for label problems,
    /// negative off-diagonal entries or a matrix that is not negative
    /// definite; NonSymmetric for asymmetric input.
    CurveSystem(std::vector<std::string> labels, QMatrix matrix);

    /// Labels default to "C1", "C2", ...
    explicit CurveSystem(QMatrix matrix);

    std::size_t size() const { return labels_.size(); }
    const std::vector<std::string>& labels() const { return labels_; }
    const QMatrix& matrix() const { return matrix_; }
    const DefinitenessCertificate& certificate() const { return certificate_; }

private:
    std::vector<std::string> labels_;
    QMatrix matrix_;
    DefinitenessCertificate certificate_{true, {}, {}};
};

/// Coefficients a with D = B + sum a_i C_i, given d_i = D.C_i and b_i = B.C_i.
struct NegativityResult {
    RatVector coefficients;
    bool nonnegative = false;
    bool strictly_positive = false;
};

/// Solves G a = d - b under the sign hypotheses d <= 0 (d < 0 when `strict`)
/// and b >= 0, throwing HypothesisViolated otherwise. The conclusion a >= 0
/// (a > 0 when strict) is checked and a violation raises InvariantBroken.
NegativityResult negativity_coefficients(const CurveSystem& sys, const PairingVector& d,
                                         const PairingVector& b, bool strict);

struct NegativeCombination {
    RatVector x;              ///< G x = (-1, ..., -1)
    std::vector<Int> integral;///< smallest positive integer multiple of x
    Int self_pairing;         ///< G * integral = (-self_pairing, ..., -self_pairing)
};

/// Effective combination of all curves that pairs negatively with each of
/// them. Every entry of x is strictly positive.
NegativeCombination find_negative_combination(const CurveSystem& sys);

enum class CompletionMode { scaled, minimal };

struct CompletionResult {
    CompletionMode mode = CompletionMode::scaled;
    RatVector e;
    RatVector residuals;   ///< G e + d, all <= 0
    Int multiplier;        ///< scaled mode: e = multiplier * integral combination
    std::vector<std::size_t> active_set;  ///< minimal mode: final active indices
    std::size_t iterations = 0;
};

/// Effective exceptional correction e >= 0 with G e + d <= 0.
///
/// scaled:  e = m * (integral negative combination) with the smallest m >= 0
///          that works.
/// minimal: the coefficient-wise least such e, found by growing an active set
///          from e = 0; satisfies e_j = 0 or (G e + d)_j = 0 for every j.
CompletionResult exceptional_completion(const CurveSystem& sys, const PairingVector& d,
                                        CompletionMode mode);

}  // namespace negdef
