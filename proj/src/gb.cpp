#include "halg/gb.hpp"

#include <algorithm>
#include <set>
#include <tuple>

namespace halg::gb {

namespace {

void check_groebner_ring(const Ring& R) {
    require(R.has_groebner(), ErrorCode::Capability,
            "operation needs a polynomial ring over a field, got " + R.name());
}

// (position, monomial) of the module leading term under POT.
struct Lead {
    std::size_t pos;
    Monomial mono;
    Scalar coeff;
};

std::optional<Lead> lead_of(const VecPoly& v) {
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (!v[i].is_zero()) return Lead{i, v[i].lead().m, v[i].lead().c};
    }
    return std::nullopt;
}

}  // namespace

bool vec_is_zero(const VecPoly& v) {
    for (const auto& p : v)
        if (!p.is_zero()) return false;
    return true;
}

std::size_t lead_pos(const VecPoly& v) {
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) return i;
    return kNoLead;
}

VecPoly vec_zero(std::size_t m) { return VecPoly(m); }

VecPoly vec_add(const PolyCtx& cx, const VecPoly& a, const VecPoly& b) {
    VecPoly r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = poly_add(cx, a[i], b[i]);
    return r;
}

VecPoly vec_sub(const PolyCtx& cx, const VecPoly& a, const VecPoly& b) {
    VecPoly r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = poly_sub(cx, a[i], b[i]);
    return r;
}

VecPoly vec_neg(const PolyCtx& cx, const VecPoly& a) {
    VecPoly r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = poly_neg(cx, a[i]);
    return r;
}

VecPoly vec_mul_term(const PolyCtx& cx, const Scalar& c, const Monomial& mono, const VecPoly& a) {
    VecPoly r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = poly_mul_term(cx, c, mono, a[i]);
    return r;
}

VecPoly vec_mul_poly(const PolyCtx& cx, const Poly& p, const VecPoly& a) {
    VecPoly r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = poly_mul(cx, p, a[i]);
    return r;
}

bool vec_eq(const PolyCtx& cx, const VecPoly& a, const VecPoly& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!poly_eq(cx, a[i], b[i])) return false;
    return true;
}

Reduction reduce(const RingPtr& ring, std::size_t m, const VecPoly& f,
                 const std::vector<VecPoly>& G) {
    check_groebner_ring(*ring);
    require(!G.empty(), ErrorCode::Generic, "reduction needs at least one divisor");
    const PolyCtx& cx = ring->ctx();
    for (const auto& g : G)
        require(g.size() == m, ErrorCode::Dimension, "divisor has wrong module rank");
    require(f.size() == m, ErrorCode::Dimension, "dividend has wrong module rank");

    std::vector<std::optional<Lead>> leads(G.size());
    for (std::size_t i = 0; i < G.size(); ++i) leads[i] = lead_of(G[i]);

    Reduction out;
    out.remainder = vec_zero(m);
    out.quotients.assign(G.size(), poly_zero());
    VecPoly work = f;

    while (true) {
        auto lw = lead_of(work);
        if (!lw) break;
        bool rewrote = false;
        for (std::size_t i = 0; i < G.size(); ++i) {
            if (!leads[i] || leads[i]->pos != lw->pos) continue;
            if (!mono_divides(leads[i]->mono, lw->mono)) continue;
            Scalar c = cx.coeff.mul(lw->coeff, cx.coeff.inv(leads[i]->coeff));
            Monomial mm = mono_div(lw->mono, leads[i]->mono);
            out.quotients[i] = poly_add(cx, out.quotients[i], poly_term(cx, c, mm));
            work = vec_sub(cx, work, vec_mul_term(cx, c, mm, G[i]));
            rewrote = true;
            break;
        }
        if (!rewrote) {
            // move the irreducible lead term to the remainder
            out.remainder[lw->pos] =
                poly_add(cx, out.remainder[lw->pos], poly_term(cx, lw->coeff, lw->mono));
            work[lw->pos] = poly_sub(cx, work[lw->pos], poly_term(cx, lw->coeff, lw->mono));
        }
    }
    return out;
}

namespace {

struct Tracked {
    VecPoly v;
    std::vector<Poly> combo;  // over the input generators
};

// One full reduction of `t.v` by the tracked basis, keeping the combo in sync.
void reduce_tracked(const PolyCtx& cx, Tracked& t, const std::vector<Tracked>& basis) {
    VecPoly rem = vec_zero(t.v.size());
    while (true) {
        auto lw = lead_of(t.v);
        if (!lw) break;
        bool rewrote = false;
        for (const auto& g : basis) {
            auto lg = lead_of(g.v);
            if (!lg || lg->pos != lw->pos || !mono_divides(lg->mono, lw->mono)) continue;
            Scalar c = cx.coeff.mul(lw->coeff, cx.coeff.inv(lg->coeff));
            Monomial mm = mono_div(lw->mono, lg->mono);
            t.v = vec_sub(cx, t.v, vec_mul_term(cx, c, mm, g.v));
            for (std::size_t k = 0; k < t.combo.size(); ++k)
                t.combo[k] = poly_sub(cx, t.combo[k], poly_mul_term(cx, c, mm, g.combo[k]));
            rewrote = true;
            break;
        }
        if (!rewrote) {
            rem[lw->pos] = poly_add(cx, rem[lw->pos], poly_term(cx, lw->coeff, lw->mono));
            t.v[lw->pos] = poly_sub(cx, t.v[lw->pos], poly_term(cx, lw->coeff, lw->mono));
        }
    }
    t.v = std::move(rem);
}

void scale_tracked(const PolyCtx& cx, Tracked& t, const Scalar& u) {
    for (auto& p : t.v) p = poly_scale(cx, u, p);
    for (auto& p : t.combo) p = poly_scale(cx, u, p);
}

// Content removal over QQ keeps intermediate coefficients small; the combo
// is scaled alongside so the certificate stays exact.
void normalize_tracked(const PolyCtx& cx, Tracked& t) {
    auto l = lead_of(t.v);
    if (!l) return;
    if (cx.coeff.tag == ScalarTag::QQ) {
        Int den_lcm = 1, num_gcd = 0;
        for (const auto& p : t.v)
            for (const auto& term : p.t)
                mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(),
                        std::get<Rat>(term.c).get_den().get_mpz_t());
        for (const auto& p : t.v)
            for (const auto& term : p.t) {
                Rat scaled = std::get<Rat>(term.c) * Rat(den_lcm);
                mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled.get_num().get_mpz_t());
            }
        Rat u(den_lcm, num_gcd);
        u.canonicalize();
        if (sgn(std::get<Rat>(l->coeff)) < 0) u = -u;
        scale_tracked(cx, t, u);
    } else {
        scale_tracked(cx, t, cx.coeff.inv(l->coeff));
    }
}

}  // namespace

Basis buchberger(const RingPtr& ring, std::size_t m, std::vector<VecPoly> gens,
                 const BasisOptions& opt) {
    check_groebner_ring(*ring);
    const PolyCtx& cx = ring->ctx();
    for (const auto& g : gens)
        require(g.size() == m, ErrorCode::Dimension, "generator has wrong module rank");

    Basis out;
    out.ring = ring;
    out.m = m;
    out.gens = gens;

    std::vector<Tracked> basis;
    auto unit_combo = [&](std::size_t i) {
        std::vector<Poly> c(gens.size(), poly_zero());
        c[i] = poly_const(cx, cx.coeff.one());
        return c;
    };

    // seed with the nonzero generators, reduced against what is already there
    using PairKey = std::tuple<std::uint64_t, std::size_t, std::size_t>;  // (lcm degree, i, j)
    std::set<PairKey> pairs;
    auto push_pairs_for = [&](std::size_t k) {
        auto lk = lead_of(basis[k].v);
        for (std::size_t i = 0; i < k; ++i) {
            auto li = lead_of(basis[i].v);
            if (!li || li->pos != lk->pos) continue;
            Monomial l = mono_lcm(li->mono, lk->mono);
            pairs.insert({l.degree(), i, k});
        }
    };

    for (std::size_t i = 0; i < gens.size(); ++i) {
        Tracked t{gens[i], unit_combo(i)};
        if (!basis.empty()) reduce_tracked(cx, t, basis);
        if (vec_is_zero(t.v)) continue;
        normalize_tracked(cx, t);
        basis.push_back(std::move(t));
        push_pairs_for(basis.size() - 1);
    }

    std::size_t processed = 0;
    while (!pairs.empty()) {
        if (++processed > opt.pair_budget)
            raise(ErrorCode::BudgetExceeded, "groebner pair budget exceeded");
        auto it = pairs.begin();  // normal strategy: smallest lcm degree, then indices
        auto [deg, i, j] = *it;
        pairs.erase(it);

        auto li = lead_of(basis[i].v);
        auto lj = lead_of(basis[j].v);
        Monomial l = mono_lcm(li->mono, lj->mono);
        Monomial mi = mono_div(l, li->mono);
        Monomial mj = mono_div(l, lj->mono);

        Tracked s;
        s.v = vec_sub(cx, vec_mul_term(cx, cx.coeff.inv(li->coeff), mi, basis[i].v),
                      vec_mul_term(cx, cx.coeff.inv(lj->coeff), mj, basis[j].v));
        s.combo.assign(gens.size(), poly_zero());
        for (std::size_t k = 0; k < gens.size(); ++k) {
            Poly a = poly_mul_term(cx, cx.coeff.inv(li->coeff), mi, basis[i].combo[k]);
            Poly b = poly_mul_term(cx, cx.coeff.inv(lj->coeff), mj, basis[j].combo[k]);
            s.combo[k] = poly_sub(cx, a, b);
        }
        reduce_tracked(cx, s, basis);
        if (vec_is_zero(s.v)) continue;
        normalize_tracked(cx, s);
        basis.push_back(std::move(s));
        push_pairs_for(basis.size() - 1);
    }

    // autoreduction: monic leads, minimal lead set, reduced tails
    for (auto& t : basis) {
        auto l = lead_of(t.v);
        scale_tracked(cx, t, cx.coeff.inv(l->coeff));
    }
    std::vector<bool> keep(basis.size(), true);
    for (std::size_t a = 0; a < basis.size(); ++a) {
        auto la = lead_of(basis[a].v);
        for (std::size_t b = 0; b < basis.size() && keep[a]; ++b) {
            if (a == b || !keep[b]) continue;
            auto lb = lead_of(basis[b].v);
            if (lb->pos != la->pos || !mono_divides(lb->mono, la->mono)) continue;
            if (lb->mono == la->mono && b > a) continue;  // keep the earlier of equal leads
            keep[a] = false;
        }
    }
    std::vector<Tracked> reduced;
    for (std::size_t a = 0; a < basis.size(); ++a)
        if (keep[a]) reduced.push_back(std::move(basis[a]));

    for (std::size_t a = 0; a < reduced.size(); ++a) {
        std::vector<Tracked> others;
        others.reserve(reduced.size() - 1);
        for (std::size_t b = 0; b < reduced.size(); ++b)
            if (b != a) others.push_back(reduced[b]);
        if (!others.empty()) reduce_tracked(cx, reduced[a], others);
        auto l = lead_of(reduced[a].v);
        scale_tracked(cx, reduced[a], cx.coeff.inv(l->coeff));
    }

    // canonical output order: descending module lead
    std::sort(reduced.begin(), reduced.end(), [&](const Tracked& x, const Tracked& y) {
        auto lx = lead_of(x.v), ly = lead_of(y.v);
        if (lx->pos != ly->pos) return lx->pos < ly->pos;
        return mono_cmp(cx.order, lx->mono, ly->mono) > 0;
    });

    for (auto& t : reduced) {
        out.basis.push_back(t.v);
        out.to_gens.push_back(t.combo);
    }

    // express the inputs in the basis
    out.from_gens.assign(gens.size(), {});
    for (std::size_t i = 0; i < gens.size(); ++i) {
        Reduction r = reduce(ring, m, gens[i], out.basis);
        require(vec_is_zero(r.remainder), ErrorCode::Internal,
                "input generator does not reduce to zero modulo its own basis");
        out.from_gens[i] = std::move(r.quotients);
    }
    return out;
}

Reduction Basis::reduce_by_basis(const VecPoly& f) const {
    if (basis.empty()) {
        Reduction r;
        r.remainder = f;
        return r;
    }
    return reduce(ring, m, f, basis);
}

std::optional<std::vector<Poly>> Basis::member(const VecPoly& f) const {
    const PolyCtx& cx = ring->ctx();
    Reduction r = reduce_by_basis(f);
    if (!vec_is_zero(r.remainder)) return std::nullopt;
    std::vector<Poly> h(gens.size(), poly_zero());
    for (std::size_t j = 0; j < basis.size(); ++j) {
        if (r.quotients.size() <= j || r.quotients[j].is_zero()) continue;
        for (std::size_t k = 0; k < gens.size(); ++k)
            h[k] = poly_add(cx, h[k], poly_mul(cx, r.quotients[j], to_gens[j][k]));
    }
    return h;
}

bool spoly_criterion(const Basis& b) {
    if (b.basis.empty()) return true;
    const PolyCtx& cx = b.ring->ctx();
    for (std::size_t i = 0; i < b.basis.size(); ++i) {
        auto li = lead_of(b.basis[i]);
        for (std::size_t j = i + 1; j < b.basis.size(); ++j) {
            auto lj = lead_of(b.basis[j]);
            if (li->pos != lj->pos) continue;
            Monomial l = mono_lcm(li->mono, lj->mono);
            VecPoly s = vec_sub(
                cx, vec_mul_term(cx, cx.coeff.inv(li->coeff), mono_div(l, li->mono), b.basis[i]),
                vec_mul_term(cx, cx.coeff.inv(lj->coeff), mono_div(l, lj->mono), b.basis[j]));
            Reduction r = reduce(b.ring, b.m, s, b.basis);
            if (!vec_is_zero(r.remainder)) return false;
        }
    }
    return true;
}

std::vector<std::vector<Poly>> syzygies(const RingPtr& ring, std::size_t m,
                                        const std::vector<VecPoly>& gens, const BasisOptions& opt) {
    check_groebner_ring(*ring);
    const PolyCtx& cx = ring->ctx();
    if (gens.empty()) return {};

    Basis b = buchberger(ring, m, gens, opt);
    std::vector<std::vector<Poly>> rows;

    auto verify_and_push = [&](std::vector<Poly> row) {
        bool nonzero = false;
        for (const auto& p : row)
            if (!p.is_zero()) nonzero = true;
        if (!nonzero) return;
        VecPoly acc = vec_zero(m);
        for (std::size_t k = 0; k < gens.size(); ++k)
            acc = vec_add(cx, acc, vec_mul_poly(cx, row[k], gens[k]));
        require(vec_is_zero(acc), ErrorCode::Internal, "syzygy candidate does not annihilate");
        rows.push_back(std::move(row));
    };

    // Schreyer generators from the S-pairs of the reduced basis.
    for (std::size_t i = 0; i < b.basis.size(); ++i) {
        auto li = lead_of(b.basis[i]);
        for (std::size_t j = i + 1; j < b.basis.size(); ++j) {
            auto lj = lead_of(b.basis[j]);
            if (li->pos != lj->pos) continue;
            Monomial l = mono_lcm(li->mono, lj->mono);
            Monomial mi = mono_div(l, li->mono);
            Monomial mj = mono_div(l, lj->mono);
            VecPoly s = vec_sub(cx, vec_mul_term(cx, cx.coeff.inv(li->coeff), mi, b.basis[i]),
                                vec_mul_term(cx, cx.coeff.inv(lj->coeff), mj, b.basis[j]));
            Reduction r = b.reduce_by_basis(s);
            require(vec_is_zero(r.remainder), ErrorCode::Internal, "basis is not a groebner basis");
            // sigma over basis indices: (1/ci) mi e_i - (1/cj) mj e_j - quotients
            std::vector<Poly> sigma(b.basis.size(), poly_zero());
            sigma[i] = poly_term(cx, cx.coeff.inv(li->coeff), mi);
            sigma[j] = poly_neg(cx, poly_term(cx, cx.coeff.inv(lj->coeff), mj));
            for (std::size_t k = 0; k < b.basis.size(); ++k)
                sigma[k] = poly_sub(cx, sigma[k], r.quotients[k]);
            // map back to generator coordinates through to_gens
            std::vector<Poly> row(gens.size(), poly_zero());
            for (std::size_t k = 0; k < b.basis.size(); ++k) {
                if (sigma[k].is_zero()) continue;
                for (std::size_t g = 0; g < gens.size(); ++g)
                    row[g] = poly_add(cx, row[g], poly_mul(cx, sigma[k], b.to_gens[k][g]));
            }
            verify_and_push(std::move(row));
        }
    }

    // rows of (Id - from_gens * to_gens)
    for (std::size_t i = 0; i < gens.size(); ++i) {
        std::vector<Poly> row(gens.size(), poly_zero());
        row[i] = poly_const(cx, cx.coeff.one());
        for (std::size_t k = 0; k < b.basis.size(); ++k) {
            if (b.from_gens[i][k].is_zero()) continue;
            for (std::size_t g = 0; g < gens.size(); ++g)
                row[g] = poly_sub(cx, row[g], poly_mul(cx, b.from_gens[i][k], b.to_gens[k][g]));
        }
        verify_and_push(std::move(row));
    }
    return rows;
}

std::optional<std::vector<Poly>> ideal_membership(const RingPtr& ring, const Poly& f,
                                                  const std::vector<Poly>& gens,
                                                  const BasisOptions& opt) {
    std::vector<VecPoly> g1;
    g1.reserve(gens.size());
    for (const auto& g : gens) g1.push_back(VecPoly{g});
    Basis b = buchberger(ring, 1, g1, opt);
    auto h = b.member(VecPoly{f});
    if (!h) return std::nullopt;
    // expansion check before anything is returned
    const PolyCtx& cx = ring->ctx();
    Poly acc = poly_zero();
    for (std::size_t i = 0; i < gens.size(); ++i)
        acc = poly_add(cx, acc, poly_mul(cx, (*h)[i], gens[i]));
    require(poly_eq(cx, acc, f), ErrorCode::Internal, "membership certificate failed expansion");
    return h;
}

SplitCoefficients coefficients_wrt(const RingPtr& ring, const Poly& f,
                                   const std::vector<std::size_t>& split_vars) {
    require(ring->is_poly(), ErrorCode::Capability, "coefficient split needs a polynomial ring");
    const PolyCtx& cx = ring->ctx();
    std::vector<bool> in_split(cx.nvars(), false);
    for (auto v : split_vars) {
        require(v < cx.nvars(), ErrorCode::Dimension, "split variable outside the ring");
        in_split[v] = true;
    }

    std::vector<std::string> base_vars;
    std::vector<std::size_t> base_index(cx.nvars(), 0);
    for (std::size_t i = 0; i < cx.nvars(); ++i) {
        if (!in_split[i]) {
            base_index[i] = base_vars.size();
            base_vars.push_back(cx.vars[i]);
        }
    }

    RingPtr scalar_base;
    switch (cx.coeff.tag) {
        case ScalarTag::ZZ: scalar_base = Ring::ZZ(); break;
        case ScalarTag::QQ: scalar_base = Ring::QQ(); break;
        case ScalarTag::GFp: scalar_base = Ring::GF(cx.coeff.p); break;
    }
    RingPtr base = base_vars.empty() ? scalar_base
                                     : Ring::poly_over(scalar_base, base_vars, cx.order);

    SplitCoefficients out;
    out.base = base;
    for (const auto& term : f.t) {
        Monomial split_part(cx.nvars());
        Monomial rest(base_vars.size());
        for (std::size_t i = 0; i < cx.nvars(); ++i) {
            if (in_split[i])
                split_part.e[i] = term.m.e[i];
            else
                rest.e[base_index[i]] = term.m.e[i];
        }
        Elem contrib = base->is_poly() ? Elem{poly_term(base->ctx(), term.c, rest)}
                                       : Elem{term.c};
        std::size_t slot = out.monos.size();
        for (std::size_t k = 0; k < out.monos.size(); ++k) {
            if (out.monos[k] == split_part) {
                slot = k;
                break;
            }
        }
        if (slot == out.monos.size()) {
            out.monos.push_back(split_part);
            out.coeffs.push_back(contrib);
        } else {
            out.coeffs[slot] = base->add(out.coeffs[slot], contrib);
        }
    }
    // drop coefficients that cancelled to zero
    SplitCoefficients clean;
    clean.base = base;
    for (std::size_t k = 0; k < out.monos.size(); ++k) {
        if (!base->is_zero(out.coeffs[k])) {
            clean.monos.push_back(out.monos[k]);
            clean.coeffs.push_back(out.coeffs[k]);
        }
    }
    return clean;
}

}  // namespace halg::gb
