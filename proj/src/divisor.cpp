#include "negdef/divisor.hpp"

namespace negdef {

RDivisor::RDivisor(const Map& coeffs) {
    for (const auto& [prime, value] : coeffs) {
        set(prime, value);
    }
}

Rat RDivisor::coefficient(const std::string& prime) const {
    const auto it = coeffs_.find(prime);
    return it == coeffs_.end() ? Rat(0) : it->second;
}

void RDivisor::set(const std::string& prime, const Rat& value) {
    if (sgn(value) == 0) {
        coeffs_.erase(prime);
    } else {
        coeffs_[prime] = value;
    }
}

std::vector<std::string> RDivisor::support() const {
    std::vector<std::string> out;
    out.reserve(coeffs_.size());
    for (const auto& [prime, value] : coeffs_) {
        out.push_back(prime);
    }
    return out;
}

bool RDivisor::is_effective() const {
    for (const auto& [prime, value] : coeffs_) {
        if (sgn(value) < 0) {
            return false;
        }
    }
    return true;
}

bool RDivisor::is_integral() const {
    for (const auto& [prime, value] : coeffs_) {
        if (value.get_den() != 1) {
            return false;
        }
    }
    return true;
}

RDivisor round_down(const RDivisor& d) {
    RDivisor out;
    for (const auto& [prime, value] : d.coeffs()) {
        out.set(prime, Rat(floor_of(value)));
    }
    return out;
}

std::pair<RDivisor, RDivisor> pos_neg_parts(const RDivisor& d) {
    RDivisor pos;
    RDivisor neg;
    for (const auto& [prime, value] : d.coeffs()) {
        if (sgn(value) > 0) {
            pos.set(prime, value);
        } else {
            neg.set(prime, -value);
        }
    }
    return {pos, neg};
}

RDivisor axpy(const Rat& c1, const RDivisor& d1, const Rat& c2, const RDivisor& d2) {
    RDivisor out;
    if (sgn(c1) != 0) {
        for (const auto& [prime, value] : d1.coeffs()) {
            out.set(prime, c1 * value);
        }
    }
    if (sgn(c2) != 0) {
        for (const auto& [prime, value] : d2.coeffs()) {
            out.set(prime, out.coefficient(prime) + c2 * value);
        }
    }
    return out;
}

RDivisor scale(const Rat& c, const RDivisor& d) {
    return axpy(c, d, Rat(0), RDivisor{});
}

bool leq(const RDivisor& a, const RDivisor& b) {
    return axpy(Rat(1), b, Rat(-1), a).is_effective();
}

}  // namespace negdef
