#include "sr/field.hpp"

#include "sr/error.hpp"

namespace sr {

namespace {

bool is_prime(long long p) {
    if (p < 2) return false;
    for (long long q = 2; q * q <= p; ++q)
        if (p % q == 0) return false;
    return true;
}

} // namespace

FieldSpec FieldSpec::gf(long long p) {
    if (p < 2 || p >= (1ll << 31) || !is_prime(p))
        fail(ErrorCode::ParameterRange,
             "GF(p) requires a prime 2 <= p < 2^31, got " + std::to_string(p));
    return FieldSpec{Kind::PrimeField, p};
}

std::string FieldSpec::str() const {
    if (is_rationals()) return "q";
    return "gf:" + std::to_string(modulus);
}

FieldSpec FieldSpec::parse(const std::string& text) {
    if (text == "q" || text == "Q") return rationals();
    if (text.rfind("gf:", 0) == 0) {
        try {
            size_t used = 0;
            long long p = std::stoll(text.substr(3), &used);
            if (used == text.size() - 3) return gf(p);
        } catch (const std::logic_error&) {
        }
    }
    fail(ErrorCode::ParameterRange,
         "field must be 'q' or 'gf:<prime>', got '" + text + "'");
}

long long rat_floor(const Rat& r) {
    Int num = boost::multiprecision::numerator(r);
    Int den = boost::multiprecision::denominator(r); // always positive
    Int q = num / den;
    if (num < 0 && q * den != num) q -= 1;
    return q.convert_to<long long>();
}

} // namespace sr
