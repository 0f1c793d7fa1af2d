#include "halg/complex.hpp"

namespace halg {

Complex::Complex(long lo, std::vector<PresentedModule> modules, std::vector<ModuleHom> diffs)
    : lo_(lo), modules_(std::move(modules)), diffs_(std::move(diffs)) {
    require(!modules_.empty(), ErrorCode::Dimension, "complex needs at least one module");
    require(diffs_.size() + 1 == modules_.size(), ErrorCode::Dimension,
            "complex needs one differential per adjacent pair");
    for (std::size_t k = 0; k < diffs_.size(); ++k) {
        require(diffs_[k].source().same_presentation(modules_[k + 1]) &&
                    diffs_[k].target().same_presentation(modules_[k]),
                ErrorCode::Dimension, "differential endpoints do not match the modules");
    }
    for (std::size_t k = 0; k + 1 < diffs_.size(); ++k) {
        require(compose(diffs_[k + 1], diffs_[k]).is_zero_hom(), ErrorCode::Generic,
                "d o d is nonzero at degree " + std::to_string(lo_ + static_cast<long>(k) + 2));
    }
}

const PresentedModule& Complex::module_at(long i) const {
    require(in_range(i), ErrorCode::Dimension, "degree outside the complex");
    return modules_[static_cast<std::size_t>(i - lo_)];
}

const ModuleHom& Complex::diff(long i) const {
    require(i > lo() && i <= hi(), ErrorCode::Dimension, "no differential at this degree");
    return diffs_[static_cast<std::size_t>(i - lo_ - 1)];
}

Complex Complex::single(const PresentedModule& M, long degree) {
    return Complex(degree, {M}, {});
}

ComplexHom::ComplexHom(Complex source, Complex target, std::map<long, ModuleHom> maps)
    : src_(std::move(source)), tgt_(std::move(target)), maps_(std::move(maps)) {
    require(src_.lo() == tgt_.lo() && src_.hi() == tgt_.hi(), ErrorCode::Dimension,
            "complex hom needs aligned degree ranges");
    for (long i = src_.lo(); i <= src_.hi(); ++i) {
        require(maps_.count(i) == 1, ErrorCode::Dimension,
                "complex hom needs a component at every degree");
        const ModuleHom& f = maps_.at(i);
        require(f.source().same_presentation(src_.module_at(i)) &&
                    f.target().same_presentation(tgt_.module_at(i)),
                ErrorCode::Dimension, "component endpoints do not match at degree " +
                                          std::to_string(i));
    }
    // squares commute: phi_{i-1} o d_i = d_i o phi_i
    for (long i = src_.lo() + 1; i <= src_.hi(); ++i) {
        ModuleHom lhs = compose(src_.diff(i), maps_.at(i - 1));
        ModuleHom rhs = compose(maps_.at(i), tgt_.diff(i));
        require(hom_equal(lhs, rhs), ErrorCode::Generic,
                "complex hom square does not commute at degree " + std::to_string(i));
    }
}

ModuleHom ComplexHom::map_at(long i) const {
    auto it = maps_.find(i);
    require(it != maps_.end(), ErrorCode::Dimension, "no component at this degree");
    return it->second;
}

ComplexHom ComplexHom::identity(const Complex& C) {
    std::map<long, ModuleHom> maps;
    for (long i = C.lo(); i <= C.hi(); ++i) maps.emplace(i, ModuleHom::identity(C.module_at(i)));
    return ComplexHom(C, C, std::move(maps));
}

ComplexHom ComplexHom::zero(const Complex& src, const Complex& tgt) {
    std::map<long, ModuleHom> maps;
    for (long i = src.lo(); i <= src.hi(); ++i)
        maps.emplace(i, ModuleHom::zero(src.module_at(i), tgt.module_at(i)));
    return ComplexHom(src, tgt, std::move(maps));
}

ComplexHom complex_hom_add(const ComplexHom& a, const ComplexHom& b) {
    std::map<long, ModuleHom> maps;
    for (long i = a.source().lo(); i <= a.source().hi(); ++i)
        maps.emplace(i, hom_add(a.map_at(i), b.map_at(i)));
    return ComplexHom(a.source(), a.target(), std::move(maps));
}

namespace {

// k_{i-1} o d_i + d_{i+1} o k_i as a hom M_i -> N_i (zero outside ranges)
ModuleHom homotopy_boundary(const Complex& src, const Complex& tgt, const Homotopy& k, long i) {
    ModuleHom acc = ModuleHom::zero(src.module_at(i), tgt.module_at(i));
    if (i > src.lo() && k.maps.count(i - 1))
        acc = hom_add(acc, compose(src.diff(i), k.maps.at(i - 1)));
    if (i < src.hi() && k.maps.count(i))
        acc = hom_add(acc, compose(k.maps.at(i), tgt.diff(i + 1)));
    return acc;
}

}  // namespace

bool homotopy_certifies(const ComplexHom& phi, const ComplexHom& psi, const Homotopy& k) {
    const Complex& src = phi.source();
    const Complex& tgt = phi.target();
    for (long i = src.lo(); i <= src.hi(); ++i) {
        ModuleHom delta = hom_sub(phi.map_at(i), psi.map_at(i));
        if (!hom_equal(delta, homotopy_boundary(src, tgt, k, i))) return false;
    }
    return true;
}

ComplexHom perturb_by_homotopy(const ComplexHom& phi, const Homotopy& k) {
    std::map<long, ModuleHom> maps;
    const Complex& src = phi.source();
    const Complex& tgt = phi.target();
    for (long i = src.lo(); i <= src.hi(); ++i)
        maps.emplace(i, hom_add(phi.map_at(i), homotopy_boundary(src, tgt, k, i)));
    return ComplexHom(src, tgt, std::move(maps));
}

SesOfComplexes::SesOfComplexes(ComplexHom inject, ComplexHom project)
    : inject_(std::move(inject)), project_(std::move(project)) {
    require(inject_.target().lo() == project_.source().lo() &&
                inject_.target().hi() == project_.source().hi(),
            ErrorCode::Dimension, "injection and projection do not share the middle complex");
    for (long i = B().lo(); i <= B().hi(); ++i) {
        const ModuleHom& f = inject_.map_at(i);
        const ModuleHom& g = project_.map_at(i);
        require(f.target().same_presentation(g.source()), ErrorCode::Dimension,
                "middle modules disagree at degree " + std::to_string(i));
        require(kernel(f).module.is_zero_module(), ErrorCode::Generic,
                "injection is not mono at degree " + std::to_string(i));
        require(cokernel(g).module.is_zero_module(), ErrorCode::Generic,
                "projection is not epi at degree " + std::to_string(i));
        require(is_exact_pair(f, g), ErrorCode::Generic,
                "im != ker in the middle at degree " + std::to_string(i));
    }
}

ModuleElement CohomologyAt::classify(const ModuleElement& cycle_in_Mi) const {
    // write the cycle over the cycle generators modulo M_i's relations
    const PresentedModule& Mi = cycle_inclusion.target();
    require(cycle_in_Mi.parent.same_presentation(Mi), ErrorCode::Dimension,
            "element does not live in the complex module at this degree");
    std::vector<std::vector<Elem>> rows;
    for (std::size_t a = 0; a < cycles.gens(); ++a) rows.push_back(cycle_inclusion.matrix().row(a));
    auto rel = Mi.relation_rows();
    rows.insert(rows.end(), rel.begin(), rel.end());
    auto lift = lift_through_rows(Mi.ring(), rows, Mi.gens(), cycle_in_Mi.coeffs);
    require(lift.has_value(), ErrorCode::Generic, "element is not a cycle at this degree");
    std::vector<Elem> coords(lift->begin(), lift->begin() + cycles.gens());
    return element(H, std::move(coords));
}

ModuleElement CohomologyAt::representative(std::size_t k) const {
    require(k < H.gens(), ErrorCode::Dimension, "no such cohomology generator");
    const PresentedModule& Mi = cycle_inclusion.target();
    return element(Mi, cycle_inclusion.matrix().row(k));
}

CohomologyAt cohomology_at(const Complex& C, long i) {
    require(C.in_range(i), ErrorCode::Dimension, "degree outside the complex");
    const PresentedModule& Mi = C.module_at(i);

    // cycles: kernel of the outgoing differential (everything at the bottom)
    PresentedModule cycles = Mi;
    ModuleHom inclusion = ModuleHom::identity(Mi);
    if (i > C.lo()) {
        KernelResult k = kernel(C.diff(i));
        cycles = k.module;
        inclusion = k.inclusion;
    }

    // boundaries: classify the image generators of d_{i+1} through the inclusion
    std::vector<std::vector<Elem>> boundary_rows;
    if (i < C.hi()) {
        const ModuleHom& din = C.diff(i + 1);
        std::vector<std::vector<Elem>> rows;
        for (std::size_t a = 0; a < cycles.gens(); ++a) rows.push_back(inclusion.matrix().row(a));
        auto rel = Mi.relation_rows();
        rows.insert(rows.end(), rel.begin(), rel.end());
        for (std::size_t b = 0; b < din.source().gens(); ++b) {
            auto lift = lift_through_rows(Mi.ring(), rows, Mi.gens(), din.matrix().row(b));
            require(lift.has_value(), ErrorCode::Internal,
                    "boundary is not a cycle; the input is not a complex");
            boundary_rows.push_back(
                std::vector<Elem>(lift->begin(), lift->begin() + cycles.gens()));
        }
    }

    Matrix rel = cycles.relations();
    if (!boundary_rows.empty())
        rel = rel.vcat(Matrix::from_rows(C.ring(), boundary_rows, cycles.gens()));
    CohomologyAt out;
    out.degree = i;
    out.H = PresentedModule(C.ring(), cycles.gens(), std::move(rel));
    out.cycles = cycles;
    out.cycle_inclusion = inclusion;
    return out;
}

ModuleHom induced_map(const ComplexHom& phi, long i) {
    CohomologyAt src = cohomology_at(phi.source(), i);
    CohomologyAt tgt = cohomology_at(phi.target(), i);
    const ModuleHom& component = phi.map_at(i);

    Matrix m(phi.source().ring(), src.H.gens(), tgt.H.gens());
    for (std::size_t k = 0; k < src.H.gens(); ++k) {
        ModuleElement rep = src.representative(k);
        ModuleElement img = component.apply(rep);
        ModuleElement cls = tgt.classify(img);
        m.set_row(k, cls.coeffs);
    }
    return ModuleHom(src.H, tgt.H, std::move(m));
}

ModuleHom connecting_map(const SesOfComplexes& S, long i, int sign) {
    require(sign == 1 || sign == -1, ErrorCode::Generic, "sign parameter must be +1 or -1");
    require(i > S.B().lo() && i <= S.B().hi(), ErrorCode::Dimension,
            "connecting map needs degrees i and i-1 in range");
    const RingPtr& ring = S.B().ring();

    CohomologyAt HC = cohomology_at(S.C(), i);
    CohomologyAt HA = cohomology_at(S.A(), i - 1);

    const ModuleHom& psi_i = S.project().map_at(i);
    const ModuleHom& phi_prev = S.inject().map_at(i - 1);
    const ModuleHom& dB = S.B().diff(i);

    Matrix delta(ring, HC.H.gens(), HA.H.gens());
    for (std::size_t k = 0; k < HC.H.gens(); ++k) {
        ModuleElement c = HC.representative(k);

        // lift c through the degreewise surjection psi_i
        std::vector<std::vector<Elem>> rows;
        for (std::size_t a = 0; a < psi_i.source().gens(); ++a)
            rows.push_back(psi_i.matrix().row(a));
        auto relC = psi_i.target().relation_rows();
        rows.insert(rows.end(), relC.begin(), relC.end());
        auto lift_b = lift_through_rows(ring, rows, psi_i.target().gens(), c.coeffs);
        require(lift_b.has_value(), ErrorCode::Internal,
                "projection is not surjective; invalid SES certificate");
        std::vector<Elem> b(lift_b->begin(), lift_b->begin() + psi_i.source().gens());

        // push down the differential of B
        std::vector<Elem> db = row_times_matrix(b, dB.matrix());

        // pull back through the injection phi_{i-1}
        std::vector<std::vector<Elem>> rows2;
        for (std::size_t a = 0; a < phi_prev.source().gens(); ++a)
            rows2.push_back(phi_prev.matrix().row(a));
        auto relB = phi_prev.target().relation_rows();
        rows2.insert(rows2.end(), relB.begin(), relB.end());
        auto lift_a = lift_through_rows(ring, rows2, phi_prev.target().gens(), db);
        require(lift_a.has_value(), ErrorCode::Internal,
                "d(lift) does not pull back through the injection; invalid SES certificate");
        std::vector<Elem> a(lift_a->begin(), lift_a->begin() + phi_prev.source().gens());

        ModuleElement cls = HA.classify(element(S.A().module_at(i - 1), a));
        if (sign < 0) cls = element_scale(ring->from_int(-1), cls);
        delta.set_row(k, cls.coeffs);
    }
    // well-definedness of the hom doubles as the independence check on classes
    return ModuleHom(HC.H, HA.H, std::move(delta));
}

LongExactSequence long_exact_sequence(const SesOfComplexes& S, int sign) {
    // nodes in descending order: h_i(A), h_i(B), h_i(C), h_{i-1}(A), ...
    std::vector<PresentedModule> modules;
    std::vector<ModuleHom> maps;  // maps[k]: modules[k+1] -> modules[k]
    std::vector<std::string> labels;

    long lo = S.B().lo(), hi = S.B().hi();
    for (long i = hi; i >= lo; --i) {
        CohomologyAt HA = cohomology_at(S.A(), i);
        CohomologyAt HB = cohomology_at(S.B(), i);
        CohomologyAt HC = cohomology_at(S.C(), i);
        ModuleHom a = induced_map(S.inject(), i);
        ModuleHom b = induced_map(S.project(), i);
        if (!modules.empty()) maps.push_back(connecting_map(S, i + 1, sign));
        modules.push_back(HA.H);
        labels.push_back("h_" + std::to_string(i) + "(A)");
        modules.push_back(HB.H);
        labels.push_back("h_" + std::to_string(i) + "(B)");
        maps.push_back(a);
        modules.push_back(HC.H);
        labels.push_back("h_" + std::to_string(i) + "(C)");
        maps.push_back(b);
    }

    // assemble as a complex with the top node at the highest index
    std::vector<PresentedModule> ascending(modules.rbegin(), modules.rend());
    std::vector<ModuleHom> diffs(maps.rbegin(), maps.rend());
    LongExactSequence out{Complex(0, std::move(ascending), std::move(diffs)),
                          std::vector<std::string>(labels.rbegin(), labels.rend()),
                          {},
                          true};

    const Complex& L = out.sequence;
    out.exact_at.assign(static_cast<std::size_t>(L.hi() - L.lo() + 1), true);
    for (long k = L.lo() + 1; k < L.hi(); ++k) {
        bool ok = is_exact_pair(L.diff(k + 1), L.diff(k));
        out.exact_at[static_cast<std::size_t>(k - L.lo())] = ok;
        if (!ok) out.exact = false;
    }
    return out;
}

}  // namespace halg
