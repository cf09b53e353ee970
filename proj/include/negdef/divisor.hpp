#pragma once

#include "negdef/rational.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace negdef {

/// Sparse Q-divisor: a finite sum of prime divisors with nonzero rational
/// coefficients. Primes are opaque identifiers; iteration order is sorted by
/// identifier.
class RDivisor {
public:
    using Map = std::map<std::string, Rat>;

    RDivisor() = default;
    /// Zero coefficients in the input are dropped.
    explicit RDivisor(const Map& coeffs);

    const Map& coeffs() const { return coeffs_; }
    bool empty() const { return coeffs_.empty(); }
    std::size_t size() const { return coeffs_.size(); }

    /// Coefficient of `prime`, zero when absent.
    Rat coefficient(const std::string& prime) const;
    void set(const std::string& prime, const Rat& value);

    std::vector<std::string> support() const;
    bool is_effective() const;
    bool is_integral() const;

    friend bool operator==(const RDivisor&, const RDivisor&) = default;

private:
    Map coeffs_;
};

/// Coefficient-wise floor.
RDivisor round_down(const RDivisor& d);

/// (D+, D-), both effective, with D = D+ - D-.
std::pair<RDivisor, RDivisor> pos_neg_parts(const RDivisor& d);

/// c1*D1 + c2*D2.
RDivisor axpy(const Rat& c1, const RDivisor& d1, const Rat& c2, const RDivisor& d2);

RDivisor scale(const Rat& c, const RDivisor& d);

/// a <= b coefficient-wise over the union of supports.
bool leq(const RDivisor& a, const RDivisor& b);

}  // namespace negdef
