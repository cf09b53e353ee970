#include "negdef/rational.hpp"

#include <cctype>

namespace negdef {

namespace {

bool is_decimal_integer(std::string_view text) {
    if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
        text.remove_prefix(1);
    }
    if (text.empty()) {
        return false;
    }
    for (char c : text) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            return false;
        }
    }
    return true;
}

Int parse_int(std::string_view text) {
    if (!is_decimal_integer(text)) {
        throw InvalidInput("not a decimal integer: '" + std::string(text) + "'");
    }
    if (text.front() == '+') {
        text.remove_prefix(1);
    }
    return Int(std::string(text), 10);
}

}  // namespace

Rat make_rat(long num, long den) {
    if (den == 0) {
        throw InvalidInput("zero denominator");
    }
    Rat r(num, den);
    r.canonicalize();
    return r;
}

Rat parse_rat(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return Rat(parse_int(text));
    }
    const Int num = parse_int(text.substr(0, slash));
    const std::string_view den_text = text.substr(slash + 1);
    if (!den_text.empty() && den_text.front() == '-') {
        throw InvalidInput("denominator must be positive: '" + std::string(text) + "'");
    }
    const Int den = parse_int(den_text);
    if (den == 0) {
        throw InvalidInput("zero denominator: '" + std::string(text) + "'");
    }
    Rat r(num, den);
    r.canonicalize();
    return r;
}

std::string to_string(const Rat& value) {
    if (value.get_den() == 1) {
        return value.get_num().get_str();
    }
    return value.get_num().get_str() + "/" + value.get_den().get_str();
}

Int floor_of(const Rat& value) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
    return q;
}

Int ceil_of(const Rat& value) {
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
    return q;
}

std::int64_t to_int64(const Int& value) {
    if (!value.fits_slong_p()) {
        throw InvalidInput("integer out of 64-bit range: " + value.get_str());
    }
    return static_cast<std::int64_t>(value.get_si());
}

int sign(const Rat& value) {
    return sgn(value);
}

Int lcm_of_denominators(const RatVector& values) {
    Int l = 1;
    for (const auto& v : values) {
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
    }
    return l;
}

}  // namespace negdef
