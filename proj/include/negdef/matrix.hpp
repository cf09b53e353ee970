#pragma once

#include "negdef/rational.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace negdef {

/// Square matrix of exact rationals, stored row-major.
///
/// An order-0 matrix is allowed; it stands for an empty system of curves and
/// has determinant 1.
class QMatrix {
public:
    QMatrix() = default;
    explicit QMatrix(std::size_t order);

    /// Throws InvalidInput unless every row has as many entries as there are
    /// rows.
    explicit QMatrix(const std::vector<std::vector<Rat>>& rows);

    static QMatrix identity(std::size_t order);

    std::size_t order() const { return order_; }

    const Rat& operator()(std::size_t i, std::size_t j) const { return entries_[i * order_ + j]; }
    Rat& operator()(std::size_t i, std::size_t j) { return entries_[i * order_ + j]; }

    /// Recomputed on every call.
    bool is_symmetric() const;

    /// Principal submatrix on the given (sorted, distinct) indices.
    QMatrix principal(std::span<const std::size_t> indices) const;

    std::vector<std::vector<Rat>> rows() const;

    friend bool operator==(const QMatrix&, const QMatrix&) = default;

private:
    std::size_t order_ = 0;
    std::vector<Rat> entries_;
};

RatVector multiply(const QMatrix& m, std::span<const Rat> x);

/// x^T M x.
Rat quadratic_form(const QMatrix& m, std::span<const Rat> x);

/// Exact determinant by fraction-free (Bareiss) elimination on the
/// denominator-cleared integer matrix.
Rat det(const QMatrix& m);

/// Pivots of ordinary rational Gaussian elimination with row swaps. The
/// determinant is `sign * product(pivots)`; when the matrix is singular the
/// pivot list stops short of the order.
struct EliminationPivots {
    int sign = 1;
    RatVector pivots;
};
EliminationPivots elimination_pivots(const QMatrix& m);

/// Leading principal minors det(M_1), ..., det(M_k) from Bareiss elimination
/// without row exchanges. The list stops at the first zero minor (inclusive).
RatVector leading_minors(const QMatrix& m);

/// Sylvester certificate for negative definiteness: `signed_minors[k]` is
/// (-1)^(k+1) det(M_{k+1}), and the matrix is negative definite iff all of
/// them are positive.
struct DefinitenessCertificate {
    bool negative_definite = false;
    RatVector minors;
    RatVector signed_minors;
};

/// Throws NonSymmetric for non-symmetric input; nothing is symmetrized.
DefinitenessCertificate is_negative_definite(const QMatrix& m);

/// Exact solution of M x = v. Throws SingularMatrix when det(M) = 0 and
/// InvalidInput on a dimension mismatch.
RatVector solve_linear(const QMatrix& m, std::span<const Rat> v);

}  // namespace negdef
