#include "negdef/curve_system.hpp"

#include <algorithm>
#include <set>

namespace negdef {

namespace {

std::vector<std::string> default_labels(std::size_t count) {
    std::vector<std::string> labels;
    labels.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        labels.push_back("C" + std::to_string(i + 1));
    }
    return labels;
}

void require_length(const CurveSystem& sys, const PairingVector& v, const char* what) {
    if (v.size() != sys.size()) {
        throw InvalidInput(std::string(what) + " has length " + std::to_string(v.size()) +
                           ", system has " + std::to_string(sys.size()) + " curves");
    }
}

}  // namespace

CurveSystem::CurveSystem(std::vector<std::string> labels, QMatrix matrix)
    : labels_(std::move(labels)), matrix_(std::move(matrix)) {
    if (labels_.size() != matrix_.order()) {
        throw InvalidInput("label count " + std::to_string(labels_.size()) +
                           " does not match matrix order " + std::to_string(matrix_.order()));
    }
    if (std::set<std::string>(labels_.begin(), labels_.end()).size() != labels_.size()) {
        throw InvalidInput("curve labels must be unique");
    }
    if (!matrix_.is_symmetric()) {
        throw NonSymmetric("intersection matrix is not symmetric");
    }
    for (std::size_t i = 0; i < matrix_.order(); ++i) {
        for (std::size_t j = 0; j < matrix_.order(); ++j) {
            if (i != j && sgn(matrix_(i, j)) < 0) {
                throw InvalidInput("negative off-diagonal entry " + to_string(matrix_(i, j)) +
                                   " between " + labels_[i] + " and " + labels_[j]);
            }
        }
    }
    certificate_ = is_negative_definite(matrix_);
    if (!certificate_.negative_definite) {
        throw InvalidInput("intersection matrix is not negative definite");
    }
}

CurveSystem::CurveSystem(QMatrix matrix)
    : CurveSystem(default_labels(matrix.order()), std::move(matrix)) {}

NegativityResult negativity_coefficients(const CurveSystem& sys, const PairingVector& d,
                                         const PairingVector& b, bool strict) {
    require_length(sys, d, "d");
    require_length(sys, b, "b");
    for (std::size_t j = 0; j < d.size(); ++j) {
        const int s = sgn(d[j]);
        if (s > 0 || (strict && s == 0)) {
            throw HypothesisViolated("D.C" + std::to_string(j + 1) + " = " + to_string(d[j]) +
                                     (strict ? " is not < 0" : " is not <= 0"));
        }
        if (sgn(b[j]) < 0) {
            throw HypothesisViolated("B.C" + std::to_string(j + 1) + " = " + to_string(b[j]) +
                                     " is negative");
        }
    }
    RatVector rhs(d.size());
    for (std::size_t j = 0; j < d.size(); ++j) {
        rhs[j] = d[j] - b[j];
    }
    NegativityResult result;
    result.coefficients = solve_linear(sys.matrix(), rhs);
    result.nonnegative = std::all_of(result.coefficients.begin(), result.coefficients.end(),
                                     [](const Rat& a) { return sgn(a) >= 0; });
    result.strictly_positive = std::all_of(result.coefficients.begin(), result.coefficients.end(),
                                           [](const Rat& a) { return sgn(a) > 0; });
    if (!result.nonnegative || (strict && !result.strictly_positive)) {
        throw InvariantBroken("negativity lemma conclusion violated");
    }
    return result;
}

NegativeCombination find_negative_combination(const CurveSystem& sys) {
    NegativeCombination out;
    const PairingVector minus_ones(sys.size(), Rat(-1));
    out.x = negativity_coefficients(sys, minus_ones, PairingVector(sys.size()), true).coefficients;

    const Int l = lcm_of_denominators(out.x);
    Int g = 0;
    out.integral.reserve(out.x.size());
    for (const auto& xi : out.x) {
        out.integral.push_back(xi.get_num() * (l / xi.get_den()));
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), out.integral.back().get_mpz_t());
    }
    Int scale = l;
    if (g > 1) {
        for (auto& v : out.integral) {
            mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
        }
        mpz_divexact(scale.get_mpz_t(), scale.get_mpz_t(), g.get_mpz_t());
    }
    // integral = scale * x, so G * integral = -scale everywhere.
    out.self_pairing = sys.size() == 0 ? Int(0) : scale;
    return out;
}

namespace {

RatVector residuals_of(const CurveSystem& sys, const RatVector& e, const PairingVector& d) {
    RatVector r = multiply(sys.matrix(), e);
    for (std::size_t j = 0; j < r.size(); ++j) {
        r[j] += d[j];
    }
    return r;
}

CompletionResult complete_scaled(const CurveSystem& sys, const PairingVector& d) {
    CompletionResult out;
    out.mode = CompletionMode::scaled;
    const NegativeCombination comb = find_negative_combination(sys);
    // (G * m * integral)_j = -m * self_pairing, so m must be >= d_j / self_pairing.
    Int m = 0;
    for (const auto& dj : d) {
        const Int need = ceil_of(dj / Rat(comb.self_pairing));
        if (need > m) {
            m = need;
        }
    }
    out.multiplier = m;
    out.e.reserve(sys.size());
    for (const auto& c : comb.integral) {
        out.e.emplace_back(m * c);
    }
    out.residuals = residuals_of(sys, out.e, d);
    return out;
}

CompletionResult complete_minimal(const CurveSystem& sys, const PairingVector& d) {
    CompletionResult out;
    out.mode = CompletionMode::minimal;
    const std::size_t n = sys.size();
    RatVector e(n);
    std::vector<bool> active(n, false);
    while (true) {
        const RatVector r = residuals_of(sys, e, d);
        bool grew = false;
        for (std::size_t j = 0; j < n; ++j) {
            if (sgn(r[j]) > 0) {
                if (active[j]) {
                    throw InvariantBroken("active constraint is not tight");
                }
                active[j] = true;
                grew = true;
            }
        }
        if (!grew) {
            out.residuals = r;
            break;
        }
        ++out.iterations;
        std::vector<std::size_t> idx;
        for (std::size_t j = 0; j < n; ++j) {
            if (active[j]) {
                idx.push_back(j);
            }
        }
        // Inactive coefficients are zero, so they contribute nothing to the
        // active rows.
        RatVector rhs;
        rhs.reserve(idx.size());
        for (std::size_t j : idx) {
            rhs.push_back(-d[j]);
        }
        const RatVector sub = solve_linear(sys.matrix().principal(idx), rhs);
        for (std::size_t a = 0; a < idx.size(); ++a) {
            if (sub[a] < e[idx[a]]) {
                throw InvariantBroken("active-set iterate decreased");
            }
            e[idx[a]] = sub[a];
        }
    }
    for (std::size_t j = 0; j < n; ++j) {
        if (active[j]) {
            out.active_set.push_back(j);
        }
    }
    out.e = std::move(e);
    return out;
}

}  // namespace

CompletionResult exceptional_completion(const CurveSystem& sys, const PairingVector& d,
                                        CompletionMode mode) {
    require_length(sys, d, "d");
    CompletionResult out =
        mode == CompletionMode::scaled ? complete_scaled(sys, d) : complete_minimal(sys, d);
    for (std::size_t j = 0; j < out.e.size(); ++j) {
        if (sgn(out.e[j]) < 0 || sgn(out.residuals[j]) > 0) {
            throw InvariantBroken("completion is not feasible");
        }
    }
    return out;
}

}  // namespace negdef
