#include "halg/tor.hpp"

namespace halg {

namespace {

ModuleHom free_hom(const RingPtr& R, const Matrix& m) {
    return ModuleHom(PresentedModule::free_module(R, m.rows()),
                     PresentedModule::free_module(R, m.cols()), m);
}

}  // namespace

Complex tensor_resolution(const Resolution& R, const PresentedModule& N) {
    const RingPtr& ring = R.target.ring();
    std::vector<PresentedModule> modules;
    std::vector<ModuleHom> diffs;
    for (std::size_t k = 0; k < R.ranks.size(); ++k)
        modules.push_back(tensor_product(PresentedModule::free_module(ring, R.ranks[k]), N).module);
    for (std::size_t k = 0; k < R.diffs.size(); ++k) {
        ModuleHom dk = tensor_hom(free_hom(ring, R.diffs[k]), N);
        // re-anchor endpoints on the shared presentations built above
        diffs.push_back(ModuleHom(modules[k + 1], modules[k], dk.matrix()));
    }
    return Complex(0, std::move(modules), std::move(diffs));
}

ComplexHom tensor_lift(const ResolutionLift& lift, const Resolution& RM, const Resolution& RN,
                       const PresentedModule& N) {
    const RingPtr& ring = N.ring();
    Complex src = tensor_resolution(RM, N);
    Complex tgt = tensor_resolution(RN, N);
    std::map<long, ModuleHom> maps;
    for (std::size_t k = 0; k < lift.maps.size(); ++k) {
        ModuleHom tk = tensor_hom(free_hom(ring, lift.maps[k]), N);
        maps.emplace(static_cast<long>(k),
                     ModuleHom(src.module_at(static_cast<long>(k)),
                               tgt.module_at(static_cast<long>(k)), tk.matrix()));
    }
    return ComplexHom(src, tgt, std::move(maps));
}

TorResult tor(const PresentedModule& M, const PresentedModule& N, std::size_t n) {
    Resolution R = free_resolution(M, n + 1);
    Complex T = tensor_resolution(R, N);
    CohomologyAt H = cohomology_at(T, static_cast<long>(n));
    return TorResult{M, N, n, H.H, std::move(R)};
}

Tor0Identification tor0_vs_tensor(const PresentedModule& M, const PresentedModule& N) {
    TorResult t0 = tor(M, N, 0);
    TensorProduct tp = tensor_product(M, N);
    // same generators (pairs); relation spans agree, so identity matrices
    // are mutually inverse isos once well-definedness certifies both ways
    const RingPtr& ring = M.ring();
    require(t0.value.gens() == tp.module.gens(), ErrorCode::Internal,
            "Tor_0 and the tensor product disagree on generators");
    ModuleHom to(t0.value, tp.module, Matrix::identity(ring, tp.module.gens()));
    ModuleHom from(tp.module, t0.value, Matrix::identity(ring, tp.module.gens()));
    require(hom_equal(compose(to, from), ModuleHom::identity(t0.value)) &&
                hom_equal(compose(from, to), ModuleHom::identity(tp.module)),
            ErrorCode::Internal, "Tor_0 identification is not an isomorphism");
    return Tor0Identification{std::move(to), std::move(from)};
}

TorIndependence tor_independence_check(const PresentedModule& M, const PresentedModule& N,
                                       std::size_t n, const Resolution& R1,
                                       const Resolution& R2) {
    require(R1.target.same_presentation(M) && R2.target.same_presentation(M),
            ErrorCode::Dimension, "both resolutions must resolve M");
    ModuleHom id_m = ModuleHom::identity(M);
    ResolutionLift f12 = lift_hom(id_m, R1, R2);
    ResolutionLift f21 = lift_hom(id_m, R2, R1);
    ComplexHom t12 = tensor_lift(f12, R1, R2, N);
    ComplexHom t21 = tensor_lift(f21, R2, R1, N);

    ModuleHom fwd = induced_map(t12, static_cast<long>(n));
    ModuleHom bwd = induced_map(t21, static_cast<long>(n));
    require(hom_equal(compose(fwd, bwd), ModuleHom::identity(fwd.source())),
            ErrorCode::Internal, "resolution comparison is not left-invertible on Tor");
    require(hom_equal(compose(bwd, fwd), ModuleHom::identity(bwd.source())),
            ErrorCode::Internal, "resolution comparison is not right-invertible on Tor");
    return TorIndependence{std::move(fwd), std::move(bwd)};
}

TorLes tor_les(const ModuleHom& inject, const ModuleHom& project, const PresentedModule& N,
               std::size_t max_degree, int sign) {
    std::size_t L = max_degree + 1;
    Resolution RA = free_resolution(inject.source(), L);
    Resolution RC = free_resolution(project.target(), L);
    Horseshoe hs = horseshoe(inject, project, RA, RC);

    // tensor the three columns and the block maps with N
    const RingPtr& ring = N.ring();
    Complex TA = tensor_resolution(RA, N);
    Complex TB = [&] {
        std::vector<PresentedModule> modules;
        std::vector<ModuleHom> diffs;
        for (std::size_t k = 0; k < hs.middle.ranks.size(); ++k)
            modules.push_back(
                tensor_product(PresentedModule::free_module(ring, hs.middle.ranks[k]), N).module);
        for (std::size_t k = 0; k < hs.middle.diffs.size(); ++k) {
            ModuleHom dk = tensor_hom(free_hom(ring, hs.middle.diffs[k]), N);
            diffs.push_back(ModuleHom(modules[k + 1], modules[k], dk.matrix()));
        }
        return Complex(0, std::move(modules), std::move(diffs));
    }();
    Complex TC = tensor_resolution(RC, N);

    std::map<long, ModuleHom> incl, proj;
    for (long k = 0; k <= static_cast<long>(L); ++k) {
        ModuleHom in_k = tensor_hom(
            ModuleHom(hs.columns.inject().source().module_at(k),
                      hs.columns.inject().target().module_at(k),
                      hs.columns.inject().map_at(k).matrix()),
            N);
        ModuleHom pr_k = tensor_hom(
            ModuleHom(hs.columns.project().source().module_at(k),
                      hs.columns.project().target().module_at(k),
                      hs.columns.project().map_at(k).matrix()),
            N);
        incl.emplace(k, ModuleHom(TA.module_at(k), TB.module_at(k), in_k.matrix()));
        proj.emplace(k, ModuleHom(TB.module_at(k), TC.module_at(k), pr_k.matrix()));
    }
    SesOfComplexes tensored(ComplexHom(TA, TB, std::move(incl)),
                            ComplexHom(TB, TC, std::move(proj)));
    return TorLes{long_exact_sequence(tensored, sign), std::move(hs)};
}

std::vector<FlatProbeEntry> flat_tor_probe(const PresentedModule& M,
                                           const std::vector<std::vector<Elem>>& ideals) {
    std::vector<FlatProbeEntry> out;
    for (const auto& gens : ideals) {
        PresentedModule quot = PresentedModule::cyclic(M.ring(), gens);
        TorResult t = tor(quot, M, 1);
        out.push_back(FlatProbeEntry{gens, t.value, t.vanishes()});
    }
    return out;
}

FlatnessReport hypersurface_flat_check(const RingPtr& S, const Poly& f,
                                       const std::vector<std::size_t>& split_vars) {
    require(S->is_poly(), ErrorCode::Capability, "hypersurface check needs a polynomial ring");
    require(!f.is_zero(), ErrorCode::Generic, "f must be a nonzero non-zerodivisor");

    gb::SplitCoefficients sc = gb::coefficients_wrt(S, f, split_vars);
    FlatnessReport rep;
    rep.base = sc.base;
    rep.coefficients = sc.coeffs;
    const Ring& B = *sc.base;

    if (!B.is_poly()) {
        // coefficients in a field or ZZ: unit ideal iff some coefficient is a unit
        // (fields: any nonzero coefficient; ZZ: gcd certificate)
        if (B.is_field()) {
            rep.flat = true;  // f != 0 has a nonzero coefficient
            std::size_t lead = 0;
            rep.combination.assign(sc.coeffs.size(), B.zero());
            rep.combination[lead] = B.inv(sc.coeffs[lead]);
            rep.detail = "coefficient ideal contains a unit";
        } else {
            // iterated Bezout over ZZ
            Elem g = B.zero();
            std::vector<Elem> combo;
            for (const auto& c : sc.coeffs) {
                if (combo.empty()) {
                    g = c;
                    combo.push_back(B.one());
                } else {
                    Bezout bz = gcd_bezout(B, g, c);
                    for (auto& u : combo) u = B.mul(u, bz.u);
                    combo.push_back(bz.v);
                    g = bz.g;
                }
            }
            if (B.is_unit(g)) {
                rep.flat = true;
                Elem gi = B.inv(g);
                for (auto& u : combo) u = B.mul(u, gi);
                rep.combination = std::move(combo);
                rep.detail = "gcd of the coefficients is a unit";
            } else {
                rep.flat = false;
                rep.ideal_basis = {g};
                rep.detail = "coefficient gcd " + B.show(g) + " is not a unit";
            }
        }
    } else {
        // polynomial base ring: decide 1 in (coefficients) by groebner basis
        std::vector<Poly> gens;
        for (const auto& c : sc.coeffs) gens.push_back(c.poly());
        auto member = gb::ideal_membership(sc.base, poly_const(sc.base->ctx(),
                                                               B.scalar_ring().one()),
                                           gens);
        if (member) {
            rep.flat = true;
            for (auto& h : *member) rep.combination.push_back(Elem{h});
            rep.detail = "unit ideal membership certificate verified by expansion";
        } else {
            rep.flat = false;
            std::vector<gb::VecPoly> v;
            for (const auto& p : gens) v.push_back(gb::VecPoly{p});
            gb::Basis basis = gb::buchberger(sc.base, 1, v);
            for (const auto& b : basis.basis) rep.ideal_basis.push_back(Elem{b[0]});
            rep.detail = "1 does not reduce to 0 modulo the coefficient ideal basis";
        }
    }

    // re-verify a FLAT certificate by expansion before returning it
    if (rep.flat) {
        Elem acc = B.zero();
        for (std::size_t i = 0; i < sc.coeffs.size(); ++i)
            acc = B.add(acc, B.mul(rep.combination[i], sc.coeffs[i]));
        require(B.is_one(acc), ErrorCode::Internal, "flatness combination failed expansion");
    }
    return rep;
}

PresentedModule hypersurface_truncation(const RingPtr& S, const Poly& f, std::size_t split_var,
                                        std::size_t degree_bound) {
    require(S->is_poly() && split_var < S->ctx().nvars(), ErrorCode::Dimension,
            "split variable outside the ring");
    require(!f.is_zero(), ErrorCode::Generic, "f must be nonzero");

    // degree of f in the split variable
    std::uint32_t df = 0;
    for (const auto& t : f.t) df = std::max(df, t.m.e[split_var]);
    require(degree_bound >= df, ErrorCode::Dimension,
            "truncation bound must reach the split degree of f");

    gb::SplitCoefficients probe = gb::coefficients_wrt(S, f, {split_var});
    const RingPtr& base = probe.base;
    const PolyCtx& cx = S->ctx();

    // generators y^0..y^D; one relation per f*y^j that stays within the bound
    std::size_t gens = degree_bound + 1;
    std::vector<std::vector<Elem>> rows;
    for (std::size_t j = 0; j + df <= degree_bound; ++j) {
        Poly shifted = poly_mul_term(cx, cx.coeff.one(), Monomial::var(cx.nvars(), split_var,
                                                                       static_cast<std::uint32_t>(j)),
                                     f);
        gb::SplitCoefficients sc = gb::coefficients_wrt(S, shifted, {split_var});
        std::vector<Elem> row(gens, base->zero());
        for (std::size_t k = 0; k < sc.monos.size(); ++k) {
            std::size_t deg = sc.monos[k].e[split_var];
            require(deg < gens, ErrorCode::Internal, "truncation row escaped the bound");
            row[deg] = sc.coeffs[k];
        }
        rows.push_back(std::move(row));
    }
    return PresentedModule(base, gens, Matrix::from_rows(base, rows, gens));
}

}  // namespace halg
