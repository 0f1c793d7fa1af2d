#include "halg/ring.hpp"

#include <sstream>

namespace halg {

RingPtr Ring::make(RingTag tag, PolyCtx ctx) {
    return std::shared_ptr<const Ring>(new Ring(tag, std::move(ctx)));
}

RingPtr Ring::ZZ() { return make(RingTag::ZZ, PolyCtx{ScalarRing::ZZ(), {}, OrderTag::DegRevLex}); }
RingPtr Ring::QQ() { return make(RingTag::QQ, PolyCtx{ScalarRing::QQ(), {}, OrderTag::DegRevLex}); }
RingPtr Ring::GF(std::uint64_t p) {
    return make(RingTag::GF, PolyCtx{ScalarRing::GF(p), {}, OrderTag::DegRevLex});
}

RingPtr Ring::poly_over(const RingPtr& base, std::vector<std::string> vars, OrderTag order) {
    require(base && !base->is_poly(), ErrorCode::Capability,
            "polynomial rings take ZZ, QQ or GF(p) coefficients");
    require(!vars.empty(), ErrorCode::Capability, "polynomial ring needs at least one variable");
    for (std::size_t i = 0; i < vars.size(); ++i)
        for (std::size_t j = i + 1; j < vars.size(); ++j)
            require(vars[i] != vars[j], ErrorCode::Parse, "duplicate variable name");
    return make(RingTag::Poly, PolyCtx{base->scalar_ring(), std::move(vars), order});
}

RingPtr Ring::base_ring() const {
    switch (scalar_ring().tag) {
        case ScalarTag::ZZ: return ZZ();
        case ScalarTag::QQ: return QQ();
        case ScalarTag::GFp: return GF(scalar_ring().p);
    }
    raise(ErrorCode::Internal, "bad scalar tag");
}

bool Ring::is_field() const { return !is_poly() && scalar_ring().is_field(); }

bool Ring::is_euclidean() const {
    if (!is_poly()) return true;  // ZZ, QQ, GF(p)
    return ctx_.nvars() == 1 && scalar_ring().is_field();
}

bool Ring::has_groebner() const { return is_poly() && scalar_ring().is_field(); }

bool Ring::same_ring(const Ring& other) const { return tag_ == other.tag_ && ctx_ == other.ctx_; }

std::string Ring::name() const {
    std::string base;
    switch (scalar_ring().tag) {
        case ScalarTag::ZZ: base = "ZZ"; break;
        case ScalarTag::QQ: base = "QQ"; break;
        case ScalarTag::GFp: base = "GF(" + std::to_string(scalar_ring().p) + ")"; break;
    }
    if (!is_poly()) return base;
    std::string s = base + "[";
    for (std::size_t i = 0; i < vars().size(); ++i) {
        if (i) s += ",";
        s += vars()[i];
    }
    s += "]";
    return s;
}

Elem Ring::zero() const {
    return is_poly() ? Elem{poly_zero()} : Elem{scalar_ring().zero()};
}
Elem Ring::one() const { return from_int(1); }

Elem Ring::from_int(long n) const {
    if (is_poly()) return Elem{poly_const(ctx_, scalar_ring().from_int(n))};
    return Elem{scalar_ring().from_int(n)};
}

Elem Ring::from_scalar(const Scalar& s) const {
    if (is_poly()) return Elem{poly_const(ctx_, s)};
    return Elem{s};
}

bool Ring::is_zero(const Elem& a) const {
    return is_poly() ? a.poly().is_zero() : scalar_ring().is_zero(a.scalar());
}
bool Ring::is_one(const Elem& a) const { return eq(a, one()); }

bool Ring::eq(const Elem& a, const Elem& b) const {
    return is_poly() ? poly_eq(ctx_, a.poly(), b.poly()) : scalar_ring().eq(a.scalar(), b.scalar());
}

Elem Ring::add(const Elem& a, const Elem& b) const {
    return is_poly() ? Elem{poly_add(ctx_, a.poly(), b.poly())}
                     : Elem{scalar_ring().add(a.scalar(), b.scalar())};
}
Elem Ring::sub(const Elem& a, const Elem& b) const {
    return is_poly() ? Elem{poly_sub(ctx_, a.poly(), b.poly())}
                     : Elem{scalar_ring().sub(a.scalar(), b.scalar())};
}
Elem Ring::mul(const Elem& a, const Elem& b) const {
    return is_poly() ? Elem{poly_mul(ctx_, a.poly(), b.poly())}
                     : Elem{scalar_ring().mul(a.scalar(), b.scalar())};
}
Elem Ring::neg(const Elem& a) const {
    return is_poly() ? Elem{poly_neg(ctx_, a.poly())} : Elem{scalar_ring().neg(a.scalar())};
}

Elem Ring::pow(const Elem& a, unsigned long k) const {
    if (is_poly()) return Elem{poly_pow(ctx_, a.poly(), k)};
    Elem r = one(), base = a;
    while (k) {
        if (k & 1) r = mul(r, base);
        k >>= 1;
        if (k) base = mul(base, base);
    }
    return r;
}

bool Ring::is_unit(const Elem& a) const {
    if (!is_poly()) return scalar_ring().is_unit(a.scalar());
    // In a polynomial ring over a domain, units are constant units.
    return poly_is_constant(a.poly()) && !a.poly().is_zero() &&
           scalar_ring().is_unit(a.poly().lead().c);
}

Elem Ring::inv(const Elem& a) const {
    require(is_unit(a), ErrorCode::Capability, "element is not a unit");
    if (!is_poly()) return Elem{scalar_ring().inv(a.scalar())};
    return Elem{poly_const(ctx_, scalar_ring().inv(a.poly().lead().c))};
}

bool Ring::divide_exact(const Elem& a, const Elem& b, Elem& out) const {
    if (is_poly()) {
        Poly q;
        if (!poly_divide_exact(ctx_, a.poly(), b.poly(), q)) return false;
        out = Elem{std::move(q)};
        return true;
    }
    Scalar s;
    if (!scalar_ring().divide_exact(a.scalar(), b.scalar(), s)) return false;
    out = Elem{std::move(s)};
    return true;
}

std::pair<Elem, Elem> Ring::divmod(const Elem& a, const Elem& b) const {
    require(is_euclidean(), ErrorCode::Capability, name() + " is not euclidean");
    require(!is_zero(b), ErrorCode::Generic, "euclidean division by zero");
    if (is_poly()) {
        auto [q, r] = poly_divmod_uni(ctx_, a.poly(), b.poly());
        return {Elem{std::move(q)}, Elem{std::move(r)}};
    }
    switch (scalar_ring().tag) {
        case ScalarTag::ZZ: {
            // round-to-zero quotient; remainder may be negative but |r| < |b|
            Int q, r;
            mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), std::get<Int>(a.scalar()).get_mpz_t(),
                        std::get<Int>(b.scalar()).get_mpz_t());
            return {Elem{Scalar(q)}, Elem{Scalar(r)}};
        }
        default:
            return {mul(a, inv(b)), zero()};
    }
}

Int Ring::euclidean_norm(const Elem& a) const {
    require(is_euclidean(), ErrorCode::Capability, name() + " is not euclidean");
    if (is_zero(a)) return 0;
    if (is_poly()) return Int(static_cast<unsigned long>(poly_degree_uni(a.poly()) + 1));
    if (scalar_ring().tag == ScalarTag::ZZ) return abs(std::get<Int>(a.scalar()));
    return 1;
}

Elem Ring::canonical_associate(const Elem& a, Elem* unit) const {
    if (is_zero(a)) {
        if (unit) *unit = one();
        return a;
    }
    if (is_poly()) {
        require(scalar_ring().is_field(), ErrorCode::Capability,
                "canonical associate needs field coefficients");
        Scalar lead = a.poly().lead().c;
        if (unit) *unit = Elem{poly_const(ctx_, lead)};
        return Elem{poly_monic(ctx_, a.poly())};
    }
    switch (scalar_ring().tag) {
        case ScalarTag::ZZ: {
            const Int& z = std::get<Int>(a.scalar());
            if (sgn(z) < 0) {
                if (unit) *unit = from_int(-1);
                return Elem{Scalar(Int(-z))};
            }
            if (unit) *unit = one();
            return a;
        }
        default:
            if (unit) *unit = a;
            return one();
    }
}

std::string Ring::show(const Elem& a) const {
    return is_poly() ? poly_show(ctx_, a.poly()) : scalar_ring().show(a.scalar());
}

Elem Ring::parse(const std::string& text) const {
    Poly p = poly_parse(ctx_, text);
    if (is_poly()) return Elem{std::move(p)};
    // zero-variable rings reuse the polynomial grammar for constants
    return p.is_zero() ? zero() : Elem{p.lead().c};
}

Bezout gcd_bezout(const Ring& R, const Elem& a, const Elem& b) {
    require(R.is_euclidean(), ErrorCode::Capability, R.name() + " is not euclidean");
    // iterative extended euclid
    Elem r0 = a, r1 = b;
    Elem u0 = R.one(), u1 = R.zero();
    Elem v0 = R.zero(), v1 = R.one();
    while (!R.is_zero(r1)) {
        auto [q, r] = R.divmod(r0, r1);
        Elem u2 = R.sub(u0, R.mul(q, u1));
        Elem v2 = R.sub(v0, R.mul(q, v1));
        r0 = r1;
        r1 = r;
        u0 = u1;
        u1 = u2;
        v0 = v1;
        v1 = v2;
    }
    // normalize to the canonical associate
    Elem unit;
    Elem g = R.canonical_associate(r0, &unit);
    if (!R.is_zero(g) && !R.is_one(unit)) {
        Elem w = R.inv(unit);
        u0 = R.mul(u0, w);
        v0 = R.mul(v0, w);
    }
    return {g, u0, v0};
}

}  // namespace halg
