#pragma once

#include <cstdint>
#include <string>
#include <variant>

#include <gmpxx.h>

#include "halg/error.hpp"

namespace halg {

using Int = mpz_class;
using Rat = mpq_class;

// Element of GF(p); the modulus lives in the enclosing ScalarRing.
struct GFp {
    std::uint64_t v = 0;
    friend bool operator==(const GFp&, const GFp&) = default;
};

// A scalar is an element of one of the coefficient domains ZZ, QQ, GF(p).
using Scalar = std::variant<Int, Rat, GFp>;

enum class ScalarTag { ZZ, QQ, GFp };

// Deterministic 64-bit primality check (Miller-Rabin with a base set that
// is exact below 2^64).
bool is_prime_u64(std::uint64_t n);

// Arithmetic on one of the three base domains. Moduli are capped below 2^61
// so products reduce inside unsigned 128-bit intermediates.
struct ScalarRing {
    ScalarTag tag = ScalarTag::QQ;
    std::uint64_t p = 0;  // modulus when tag == GFp

    static constexpr std::uint64_t kMaxModulus = (std::uint64_t{1} << 61);

    static ScalarRing ZZ() { return {ScalarTag::ZZ, 0}; }
    static ScalarRing QQ() { return {ScalarTag::QQ, 0}; }
    static ScalarRing GF(std::uint64_t p);

    bool operator==(const ScalarRing&) const = default;

    bool is_field() const { return tag != ScalarTag::ZZ; }

    Scalar zero() const;
    Scalar one() const;
    Scalar from_int(long n) const;
    Scalar from_mpz(const Int& n) const;

    bool is_zero(const Scalar& a) const;
    bool eq(const Scalar& a, const Scalar& b) const;

    Scalar add(const Scalar& a, const Scalar& b) const;
    Scalar sub(const Scalar& a, const Scalar& b) const;
    Scalar mul(const Scalar& a, const Scalar& b) const;
    Scalar neg(const Scalar& a) const;

    bool is_unit(const Scalar& a) const;
    Scalar inv(const Scalar& a) const;  // units only
    // Exact division; fails when b does not divide a (relevant over ZZ).
    bool divide_exact(const Scalar& a, const Scalar& b, Scalar& out) const;

    // gcd for ZZ (canonical nonnegative); for fields gcd(a,b) is 1 unless both 0.
    Scalar gcd(const Scalar& a, const Scalar& b) const;

    std::string show(const Scalar& a) const;
};

}  // namespace halg
