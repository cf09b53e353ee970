#include "negdef/matrix.hpp"

#include <string>
#include <utility>

namespace negdef {

QMatrix::QMatrix(std::size_t order) : order_(order), entries_(order * order) {}

QMatrix::QMatrix(const std::vector<std::vector<Rat>>& rows) : QMatrix(rows.size()) {
    for (std::size_t i = 0; i < order_; ++i) {
        if (rows[i].size() != order_) {
            throw InvalidInput("matrix is not square: row " + std::to_string(i) + " has " +
                               std::to_string(rows[i].size()) + " entries, expected " +
                               std::to_string(order_));
        }
        for (std::size_t j = 0; j < order_; ++j) {
            (*this)(i, j) = rows[i][j];
        }
    }
}

QMatrix QMatrix::identity(std::size_t order) {
    QMatrix m(order);
    for (std::size_t i = 0; i < order; ++i) {
        m(i, i) = 1;
    }
    return m;
}

bool QMatrix::is_symmetric() const {
    for (std::size_t i = 0; i < order_; ++i) {
        for (std::size_t j = i + 1; j < order_; ++j) {
            if ((*this)(i, j) != (*this)(j, i)) {
                return false;
            }
        }
    }
    return true;
}

QMatrix QMatrix::principal(std::span<const std::size_t> indices) const {
    QMatrix sub(indices.size());
    for (std::size_t a = 0; a < indices.size(); ++a) {
        for (std::size_t b = 0; b < indices.size(); ++b) {
            sub(a, b) = (*this)(indices[a], indices[b]);
        }
    }
    return sub;
}

std::vector<std::vector<Rat>> QMatrix::rows() const {
    std::vector<std::vector<Rat>> out(order_, std::vector<Rat>(order_));
    for (std::size_t i = 0; i < order_; ++i) {
        for (std::size_t j = 0; j < order_; ++j) {
            out[i][j] = (*this)(i, j);
        }
    }
    return out;
}

RatVector multiply(const QMatrix& m, std::span<const Rat> x) {
    if (x.size() != m.order()) {
        throw InvalidInput("vector length does not match matrix order");
    }
    RatVector y(m.order());
    for (std::size_t i = 0; i < m.order(); ++i) {
        for (std::size_t j = 0; j < m.order(); ++j) {
            if (sgn(m(i, j)) != 0 && sgn(x[j]) != 0) {
                y[i] += m(i, j) * x[j];
            }
        }
    }
    return y;
}

Rat quadratic_form(const QMatrix& m, std::span<const Rat> x) {
    const RatVector mx = multiply(m, x);
    Rat acc;
    for (std::size_t i = 0; i < mx.size(); ++i) {
        acc += x[i] * mx[i];
    }
    return acc;
}

namespace {

// Integer matrix L*M together with the scale L > 0 (lcm of all denominators).
struct ScaledIntMatrix {
    std::size_t order = 0;
    std::vector<Int> a;
    Int scale = 1;

    Int& at(std::size_t i, std::size_t j) { return a[i * order + j]; }
};

ScaledIntMatrix clear_denominators(const QMatrix& m) {
    ScaledIntMatrix s;
    s.order = m.order();
    for (std::size_t i = 0; i < m.order(); ++i) {
        for (std::size_t j = 0; j < m.order(); ++j) {
            mpz_lcm(s.scale.get_mpz_t(), s.scale.get_mpz_t(), m(i, j).get_den_mpz_t());
        }
    }
    s.a.resize(s.order * s.order);
    for (std::size_t i = 0; i < s.order; ++i) {
        for (std::size_t j = 0; j < s.order; ++j) {
            const Rat& v = m(i, j);
            s.at(i, j) = v.get_num() * (s.scale / v.get_den());
        }
    }
    return s;
}

// One Bareiss step on pivot k. Zero entries in a row with zero multiplier stay
// zero, which keeps banded matrices cheap.
void bareiss_step(ScaledIntMatrix& s, std::size_t k, const Int& prev) {
    const std::size_t n = s.order;
    const Int pivot = s.at(k, k);
    Int tmp;
    for (std::size_t i = k + 1; i < n; ++i) {
        const Int factor = s.at(i, k);
        const bool zero_factor = sgn(factor) == 0;
        for (std::size_t j = k + 1; j < n; ++j) {
            Int& x = s.at(i, j);
            if (zero_factor) {
                if (sgn(x) == 0) {
                    continue;
                }
                x *= pivot;
            } else {
                x *= pivot;
                tmp = factor * s.at(k, j);
                x -= tmp;
            }
            mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), prev.get_mpz_t());
        }
        s.at(i, k) = 0;
    }
}

Rat unscale(const Int& value, const Int& scale, std::size_t power) {
    Int denom;
    mpz_pow_ui(denom.get_mpz_t(), scale.get_mpz_t(), power);
    Rat r(value, denom);
    r.canonicalize();
    return r;
}

}  // namespace

Rat det(const QMatrix& m) {
    const std::size_t n = m.order();
    if (n == 0) {
        return Rat(1);
    }
    ScaledIntMatrix s = clear_denominators(m);
    int sign_flip = 1;
    Int prev = 1;
    for (std::size_t k = 0; k < n; ++k) {
        if (sgn(s.at(k, k)) == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && sgn(s.at(swap_row, k)) == 0) {
                ++swap_row;
            }
            if (swap_row == n) {
                return Rat(0);
            }
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(s.at(k, j), s.at(swap_row, j));
            }
            sign_flip = -sign_flip;
        }
        bareiss_step(s, k, prev);
        prev = s.at(k, k);
    }
    return unscale(sign_flip * s.at(n - 1, n - 1), s.scale, n);
}

RatVector leading_minors(const QMatrix& m) {
    const std::size_t n = m.order();
    RatVector minors;
    minors.reserve(n);
    ScaledIntMatrix s = clear_denominators(m);
    Int prev = 1;
    for (std::size_t k = 0; k < n; ++k) {
        // After k Bareiss steps the (k, k) entry is the leading (k+1)-minor of L*M.
        minors.push_back(unscale(s.at(k, k), s.scale, k + 1));
        if (sgn(s.at(k, k)) == 0) {
            break;
        }
        bareiss_step(s, k, prev);
        prev = s.at(k, k);
    }
    return minors;
}

EliminationPivots elimination_pivots(const QMatrix& m) {
    const std::size_t n = m.order();
    QMatrix a = m;
    EliminationPivots out;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t row = k;
        while (row < n && sgn(a(row, k)) == 0) {
            ++row;
        }
        if (row == n) {
            return out;
        }
        if (row != k) {
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a(k, j), a(row, j));
            }
            out.sign = -out.sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            if (sgn(a(i, k)) == 0) {
                continue;
            }
            const Rat factor = a(i, k) / a(k, k);
            for (std::size_t j = k; j < n; ++j) {
                if (sgn(a(k, j)) != 0) {
                    a(i, j) -= factor * a(k, j);
                }
            }
        }
        out.pivots.push_back(a(k, k));
    }
    return out;
}

DefinitenessCertificate is_negative_definite(const QMatrix& m) {
    if (!m.is_symmetric()) {
        throw NonSymmetric("negative definiteness requires a symmetric matrix");
    }
    DefinitenessCertificate cert;
    cert.minors = leading_minors(m);
    cert.negative_definite = cert.minors.size() == m.order();
    for (std::size_t k = 0; k < cert.minors.size(); ++k) {
        // Order k+1 minor must have sign (-1)^(k+1).
        const Rat signed_minor = (k % 2 == 0) ? Rat(-cert.minors[k]) : cert.minors[k];
        cert.signed_minors.push_back(signed_minor);
        if (sgn(signed_minor) <= 0) {
            cert.negative_definite = false;
        }
    }
    return cert;
}

RatVector solve_linear(const QMatrix& m, std::span<const Rat> v) {
    const std::size_t n = m.order();
    if (v.size() != n) {
        throw InvalidInput("right-hand side has length " + std::to_string(v.size()) +
                           ", matrix order is " + std::to_string(n));
    }
    QMatrix a = m;
    RatVector b(v.begin(), v.end());
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t row = k;
        while (row < n && sgn(a(row, k)) == 0) {
            ++row;
        }
        if (row == n) {
            throw SingularMatrix("matrix is singular");
        }
        if (row != k) {
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a(k, j), a(row, j));
            }
            std::swap(b[k], b[row]);
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            if (sgn(a(i, k)) == 0) {
                continue;
            }
            const Rat factor = a(i, k) / a(k, k);
            for (std::size_t j = k; j < n; ++j) {
                if (sgn(a(k, j)) != 0) {
                    a(i, j) -= factor * a(k, j);
                }
            }
            b[i] -= factor * b[k];
        }
    }
    RatVector x(n);
    for (std::size_t k = n; k-- > 0;) {
        Rat acc = b[k];
        for (std::size_t j = k + 1; j < n; ++j) {
            if (sgn(a(k, j)) != 0) {
                acc -= a(k, j) * x[j];
            }
        }
        x[k] = acc / a(k, k);
    }
    return x;
}

}  // namespace negdef
