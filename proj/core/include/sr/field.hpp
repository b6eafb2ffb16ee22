#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace sr {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/**
 * Coefficient field selector: the rationals, or GF(p) for a prime p.
 * Every homological quantity in the library is computed relative to one
 * of these, and results carry the field they were computed over.
 */
struct FieldSpec {
    enum class Kind { Rationals, PrimeField };

    Kind kind = Kind::Rationals;
    long long modulus = 0; // prime p for PrimeField, 0 otherwise

    static FieldSpec rationals() { return FieldSpec{Kind::Rationals, 0}; }
    static FieldSpec gf(long long p); // validates primality, 2 <= p < 2^31

    bool is_rationals() const { return kind == Kind::Rationals; }

    bool operator==(const FieldSpec& o) const {
        return kind == o.kind && modulus == o.modulus;
    }
    bool operator!=(const FieldSpec& o) const { return !(*this == o); }

    // "q" for the rationals, "gf:p" for GF(p); the CLI uses the same syntax.
    std::string str() const;
    static FieldSpec parse(const std::string& text);
};

// floor of an exact rational
long long rat_floor(const Rat& r);

} // namespace sr
