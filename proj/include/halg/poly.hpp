#pragma once

#include <string>
#include <utility>
#include <vector>

#include "halg/monomial.hpp"
#include "halg/scalar.hpp"

namespace halg {

// Shared, immutable description of a polynomial ring k[x_1..x_n] with a
// fixed monomial order. Plain scalars live in a ring with zero variables.
struct PolyCtx {
    ScalarRing coeff;
    std::vector<std::string> vars;
    OrderTag order = OrderTag::DegRevLex;

    std::size_t nvars() const { return vars.size(); }
    bool operator==(const PolyCtx&) const = default;
};

struct PTerm {
    Scalar c;
    Monomial m;
};

// Terms strictly descending in the ring's order; no zero coefficients;
// the zero polynomial is the empty term list.
struct Poly {
    std::vector<PTerm> t;

    bool is_zero() const { return t.empty(); }
    const PTerm& lead() const { return t.front(); }
    std::size_t nterms() const { return t.size(); }
};

Poly poly_zero();
Poly poly_const(const PolyCtx& cx, const Scalar& c);
Poly poly_var(const PolyCtx& cx, std::size_t i, std::uint32_t k = 1);
Poly poly_term(const PolyCtx& cx, const Scalar& c, const Monomial& m);

bool poly_eq(const PolyCtx& cx, const Poly& a, const Poly& b);
Poly poly_add(const PolyCtx& cx, const Poly& a, const Poly& b);
Poly poly_sub(const PolyCtx& cx, const Poly& a, const Poly& b);
Poly poly_neg(const PolyCtx& cx, const Poly& a);
Poly poly_mul(const PolyCtx& cx, const Poly& a, const Poly& b);
Poly poly_scale(const PolyCtx& cx, const Scalar& c, const Poly& a);
Poly poly_mul_term(const PolyCtx& cx, const Scalar& c, const Monomial& m, const Poly& a);
Poly poly_pow(const PolyCtx& cx, const Poly& a, unsigned long k);

std::uint64_t poly_total_degree(const Poly& a);  // zero poly reports 0
bool poly_is_constant(const Poly& a);

// Exact division a / b; false when b does not divide a. Requires field
// coefficients or ZZ (where coefficient divisibility is checked).
bool poly_divide_exact(const PolyCtx& cx, const Poly& a, const Poly& b, Poly& out);

// Univariate division with remainder over field coefficients:
// a = q*b + r with deg r < deg b.
std::pair<Poly, Poly> poly_divmod_uni(const PolyCtx& cx, const Poly& a, const Poly& b);

std::uint64_t poly_degree_uni(const Poly& a);  // degree in the single variable; 0 for zero poly

// Scale to the canonical associate (monic over fields; positive primitive
// leading form over ZZ is not needed, ZZ polys keep unit +-1 freedom).
Poly poly_monic(const PolyCtx& cx, const Poly& a);

// Over QQ: rescale so coefficients become coprime integers with positive
// leading sign. Returns a together with the applied factor u (a_out = u * a).
Poly poly_primitive(const PolyCtx& cx, const Poly& a, Rat* factor = nullptr);

std::string poly_show(const PolyCtx& cx, const Poly& a);

// Parses the shared polynomial syntax: identifiers, `^` power, `*` product,
// integer/rational literals, `+`/`-`, parentheses. Throws Error{Parse} with
// position info on malformed input.
Poly poly_parse(const PolyCtx& cx, const std::string& text);

}  // namespace halg
