#pragma once

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "halg/poly.hpp"

namespace halg {

enum class RingTag { ZZ, QQ, GF, Poly };

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

// Element of a runtime-described ring. Scalars carry their own payload;
// polynomials carry coefficients of the base scalar ring.
struct Elem {
    std::variant<Scalar, Poly> v;

    const Scalar& scalar() const { return std::get<Scalar>(v); }
    const Poly& poly() const { return std::get<Poly>(v); }
    bool holds_poly() const { return std::holds_alternative<Poly>(v); }
};

// Runtime ring descriptor: ZZ, QQ, GF(p), or a polynomial ring over one of
// those. Capabilities gate the algorithms an operation may rely on.
class Ring : public std::enable_shared_from_this<Ring> {
public:
    static RingPtr ZZ();
    static RingPtr QQ();
    static RingPtr GF(std::uint64_t p);
    static RingPtr poly_over(const RingPtr& base, std::vector<std::string> vars,
                             OrderTag order = OrderTag::DegRevLex);

    RingTag tag() const { return tag_; }
    bool is_poly() const { return tag_ == RingTag::Poly; }
    const PolyCtx& ctx() const { return ctx_; }
    const ScalarRing& scalar_ring() const { return ctx_.coeff; }
    std::uint64_t modulus() const { return ctx_.coeff.p; }
    const std::vector<std::string>& vars() const { return ctx_.vars; }
    OrderTag order() const { return ctx_.order; }
    // Scalar ring the polynomial coefficients live in, as a Ring.
    RingPtr base_ring() const;

    // Capabilities.
    bool is_field() const;
    bool is_euclidean() const;   // ZZ, fields, univariate polys over a field
    bool has_groebner() const;   // polys over a field
    bool is_domain() const { return true; }

    bool same_ring(const Ring& other) const;
    std::string name() const;

    // Element algebra.
    Elem zero() const;
    Elem one() const;
    Elem from_int(long n) const;
    Elem from_scalar(const Scalar& s) const;  // embeds constants into poly rings
    bool is_zero(const Elem& a) const;
    bool is_one(const Elem& a) const;
    bool eq(const Elem& a, const Elem& b) const;
    Elem add(const Elem& a, const Elem& b) const;
    Elem sub(const Elem& a, const Elem& b) const;
    Elem mul(const Elem& a, const Elem& b) const;
    Elem neg(const Elem& a) const;
    Elem pow(const Elem& a, unsigned long k) const;

    bool is_unit(const Elem& a) const;
    Elem inv(const Elem& a) const;
    bool divide_exact(const Elem& a, const Elem& b, Elem& out) const;

    // Euclidean structure (requires is_euclidean()).
    // a = q*b + r with norm(r) < norm(b).
    std::pair<Elem, Elem> divmod(const Elem& a, const Elem& b) const;
    // Norm used for pivot selection: |a| over ZZ, degree+1 over k[x], 1 over fields.
    Int euclidean_norm(const Elem& a) const;
    // Canonical associate (positive over ZZ, monic over k[x]); returns the
    // unit u with a = u * canonical(a).
    Elem canonical_associate(const Elem& a, Elem* unit = nullptr) const;

    std::string show(const Elem& a) const;
    Elem parse(const std::string& text) const;

private:
    Ring(RingTag tag, PolyCtx ctx) : tag_(tag), ctx_(std::move(ctx)) {}
    static RingPtr make(RingTag tag, PolyCtx ctx);

    RingTag tag_ = RingTag::QQ;
    PolyCtx ctx_;  // for scalar rings: nvars == 0, coeff = the scalar ring
};

// gcd with Bezout certificate over a euclidean ring:
// returns (g, u, v) with u*a + v*b = g, g the canonical associate.
struct Bezout {
    Elem g, u, v;
};
Bezout gcd_bezout(const Ring& R, const Elem& a, const Elem& b);

}  // namespace halg
