#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "halg/ring.hpp"

namespace halg::gb {

// Element of the free module R^m over a polynomial ring, as one polynomial
// per component. Scalars are the m == 1 case. The module order is
// position-over-term: smaller component index is more significant.
using VecPoly = std::vector<Poly>;

constexpr std::size_t kNoLead = static_cast<std::size_t>(-1);

bool vec_is_zero(const VecPoly& v);
std::size_t lead_pos(const VecPoly& v);
VecPoly vec_zero(std::size_t m);
VecPoly vec_add(const PolyCtx& cx, const VecPoly& a, const VecPoly& b);
VecPoly vec_sub(const PolyCtx& cx, const VecPoly& a, const VecPoly& b);
VecPoly vec_neg(const PolyCtx& cx, const VecPoly& a);
VecPoly vec_mul_term(const PolyCtx& cx, const Scalar& c, const Monomial& mono, const VecPoly& a);
VecPoly vec_mul_poly(const PolyCtx& cx, const Poly& p, const VecPoly& a);
bool vec_eq(const PolyCtx& cx, const VecPoly& a, const VecPoly& b);

// Generalized division: f = sum_i quotients[i] * G[i] + remainder, no
// remainder term divisible by a leading term of G. Deterministic: always
// rewrites the current lead term with the first matching divisor.
struct Reduction {
    VecPoly remainder;
    std::vector<Poly> quotients;
};
Reduction reduce(const RingPtr& ring, std::size_t m, const VecPoly& f,
                 const std::vector<VecPoly>& G);

struct BasisOptions {
    // Hard cap on processed S-pairs; exceeding it raises BudgetExceeded and
    // never yields a wrong answer.
    std::size_t pair_budget = 200000;
};

// Reduced Groebner basis of a submodule of R^m with the change of basis in
// both directions: basis = to_gens * gens, gens = from_gens * basis
// (rows index the left list, entries are ring elements).
struct Basis {
    RingPtr ring;
    std::size_t m = 1;
    std::vector<VecPoly> gens;
    std::vector<VecPoly> basis;
    std::vector<std::vector<Poly>> to_gens;
    std::vector<std::vector<Poly>> from_gens;

    Reduction reduce_by_basis(const VecPoly& f) const;
    // Certificate coefficients over the original generators, or nullopt.
    std::optional<std::vector<Poly>> member(const VecPoly& f) const;
};

Basis buchberger(const RingPtr& ring, std::size_t m, std::vector<VecPoly> gens,
                 const BasisOptions& opt = {});

// Every S-polynomial of `basis` reduces to zero (the Buchberger criterion);
// exposed so callers can re-verify a basis independently of its construction.
bool spoly_criterion(const Basis& b);

// Generating set of { s in R^k : sum_i s[i] * gens[i] = 0 } (Schreyer-style,
// complete relative to the computed basis). Every row is re-verified to
// annihilate the generators before being returned.
std::vector<std::vector<Poly>> syzygies(const RingPtr& ring, std::size_t m,
                                        const std::vector<VecPoly>& gens,
                                        const BasisOptions& opt = {});

// Ideal membership over a groebner-capable ring with expansion-checked
// certificate: f = sum_i h[i] * gens[i].
std::optional<std::vector<Poly>> ideal_membership(const RingPtr& ring, const Poly& f,
                                                  const std::vector<Poly>& gens,
                                                  const BasisOptions& opt = {});

// Writes f in R[all vars] as sum_m c_m(other vars) * m(split vars); returns
// the split monomials with their nonzero coefficients in the base ring
// (polynomial ring on the remaining variables, or the scalar ring when the
// split covers everything).
struct SplitCoefficients {
    RingPtr base;                 // ring of the coefficients
    std::vector<Monomial> monos;  // monomials in the split variables (full width)
    std::vector<Elem> coeffs;     // matching coefficients, elements of base
};
SplitCoefficients coefficients_wrt(const RingPtr& ring, const Poly& f,
                                   const std::vector<std::size_t>& split_vars);

}  // namespace halg::gb
