#include "halg/scalar.hpp"

namespace halg {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>((u128)a * b % m); }

u64 powmod(u64 a, u64 e, u64 m) {
    u64 r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

u64 inv_mod(u64 a, u64 p) {
    // p prime, a != 0 mod p
    return powmod(a, p - 2, p);
}

const GFp& as_gf(const Scalar& s) { return std::get<GFp>(s); }
const Int& as_z(const Scalar& s) { return std::get<Int>(s); }
const Rat& as_q(const Scalar& s) { return std::get<Rat>(s); }

}  // namespace

bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    for (u64 q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % q == 0) return n == q;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) d >>= 1, ++s;
    // This base set decides primality exactly for all n < 2^64.
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

ScalarRing ScalarRing::GF(u64 p) {
    require(p < kMaxModulus, ErrorCode::Capability, "prime modulus must be < 2^61");
    require(is_prime_u64(p), ErrorCode::Capability, "GF modulus must be prime");
    return {ScalarTag::GFp, p};
}

Scalar ScalarRing::zero() const {
    switch (tag) {
        case ScalarTag::ZZ: return Int(0);
        case ScalarTag::QQ: return Rat(0);
        case ScalarTag::GFp: return GFp{0};
    }
    raise(ErrorCode::Internal, "bad scalar tag");
}

Scalar ScalarRing::one() const { return from_int(1); }

Scalar ScalarRing::from_int(long n) const {
    switch (tag) {
        case ScalarTag::ZZ: return Int(n);
        case ScalarTag::QQ: return Rat(n);
        case ScalarTag::GFp: {
            long r = n % static_cast<long>(p);
            if (r < 0) r += static_cast<long>(p);
            return GFp{static_cast<u64>(r)};
        }
    }
    raise(ErrorCode::Internal, "bad scalar tag");
}

Scalar ScalarRing::from_mpz(const Int& n) const {
    switch (tag) {
        case ScalarTag::ZZ: return n;
        case ScalarTag::QQ: return Rat(n);
        case ScalarTag::GFp: {
            Int r = n % Int(static_cast<unsigned long>(p));
            if (r < 0) r += Int(static_cast<unsigned long>(p));
            return GFp{r.get_ui()};
        }
    }
    raise(ErrorCode::Internal, "bad scalar tag");
}

bool ScalarRing::is_zero(const Scalar& a) const {
    switch (tag) {
        case ScalarTag::ZZ: return sgn(as_z(a)) == 0;
        case ScalarTag::QQ: return sgn(as_q(a)) == 0;
        case ScalarTag::GFp: return as_gf(a).v == 0;
    }
    return false;
}

bool ScalarRing::eq(const Scalar& a, const Scalar& b) const {
    switch (tag) {
        case ScalarTag::ZZ: return as_z(a) == as_z(b);
        case ScalarTag::QQ: return as_q(a) == as_q(b);
        case ScalarTag::GFp: return as_gf(a).v == as_gf(b).v;
    }
    return false;
}

Scalar ScalarRing::add(const Scalar& a, const Scalar& b) const {
    switch (tag) {
        case ScalarTag::ZZ: return Int(as_z(a) + as_z(b));
        case ScalarTag::QQ: return Rat(as_q(a) + as_q(b));
        case ScalarTag::GFp: {
            u64 s = as_gf(a).v + as_gf(b).v;  // both < 2^61, no overflow
            if (s >= p) s -= p;
            return GFp{s};
        }
    }
    raise(ErrorCode::Internal, "bad scalar tag");
}

Scalar ScalarRing::sub(const Scalar& a, const Scalar& b) const {
    switch (tag) {
        case ScalarTag::ZZ: return Int(as_z(a) - as_z(b));
        case ScalarTag::QQ: return Rat(as_q(a) - as_q(b));
        case ScalarTag::GFp: {
            u64 x = as_gf(a).v, y = as_gf(b).v;
            return GFp{x >= y ? x - y : x + p - y};
        }
    }
    raise(ErrorCode::Internal, "bad scalar tag");
}

Scalar ScalarRing::mul(const Scalar& a, const Scalar& b) const {
    switch (tag) {
        case ScalarTag::ZZ: return Int(as_z(a) * as_z(b));
        case ScalarTag::QQ: return Rat(as_q(a) * as_q(b));
        case ScalarTag::GFp: return GFp{mulmod(as_gf(a).v, as_gf(b).v, p)};
    }
    raise(ErrorCode::Internal, "bad scalar tag");
}

Scalar ScalarRing::neg(const Scalar& a) const {
    switch (tag) {
        case ScalarTag::ZZ: return Int(-as_z(a));
        case ScalarTag::QQ: return Rat(-as_q(a));
        case ScalarTag::GFp: {
            u64 x = as_gf(a).v;
            return GFp{x == 0 ? 0 : p - x};
        }
    }
    raise(ErrorCode::Internal, "bad scalar tag");
}

bool ScalarRing::is_unit(const Scalar& a) const {
    switch (tag) {
        case ScalarTag::ZZ: return as_z(a) == 1 || as_z(a) == -1;
        default: return !is_zero(a);
    }
}

Scalar ScalarRing::inv(const Scalar& a) const {
    require(is_unit(a), ErrorCode::Capability, "scalar is not a unit");
    switch (tag) {
        case ScalarTag::ZZ: return as_z(a);  // +-1 are self-inverse
        case ScalarTag::QQ: return Rat(1 / as_q(a));
        case ScalarTag::GFp: return GFp{inv_mod(as_gf(a).v, p)};
    }
    raise(ErrorCode::Internal, "bad scalar tag");
}

bool ScalarRing::divide_exact(const Scalar& a, const Scalar& b, Scalar& out) const {
    if (is_zero(b)) return false;
    switch (tag) {
        case ScalarTag::ZZ: {
            if (!mpz_divisible_p(as_z(a).get_mpz_t(), as_z(b).get_mpz_t())) return false;
            Int q;
            mpz_divexact(q.get_mpz_t(), as_z(a).get_mpz_t(), as_z(b).get_mpz_t());
            out = q;
            return true;
        }
        case ScalarTag::QQ:
            out = Rat(as_q(a) / as_q(b));
            return true;
        case ScalarTag::GFp:
            out = mul(a, inv(b));
            return true;
    }
    return false;
}

Scalar ScalarRing::gcd(const Scalar& a, const Scalar& b) const {
    switch (tag) {
        case ScalarTag::ZZ: {
            Int g;
            mpz_gcd(g.get_mpz_t(), as_z(a).get_mpz_t(), as_z(b).get_mpz_t());
            return g;
        }
        default:
            return (is_zero(a) && is_zero(b)) ? zero() : one();
    }
}

std::string ScalarRing::show(const Scalar& a) const {
    switch (tag) {
        case ScalarTag::ZZ: return as_z(a).get_str();
        case ScalarTag::QQ: return as_q(a).get_str();
        case ScalarTag::GFp: return std::to_string(as_gf(a).v);
    }
    return "?";
}

}  // namespace halg
