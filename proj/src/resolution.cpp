#include "halg/resolution.hpp"

namespace halg {

namespace {

std::vector<std::vector<Elem>> matrix_rows(const Matrix& m) {
    std::vector<std::vector<Elem>> rows;
    rows.reserve(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(m.row(i));
    return rows;
}

// exact row-span lift of every row of `targets` through `rows`
Matrix lift_rows_exact(const RingPtr& ring, const Matrix& targets, const Matrix& rows,
                       const std::string& what) {
    Matrix out(ring, targets.rows(), rows.rows());
    auto row_list = matrix_rows(rows);
    for (std::size_t i = 0; i < targets.rows(); ++i) {
        auto lift = lift_through_rows(ring, row_list, rows.cols(), targets.row(i));
        require(lift.has_value(), ErrorCode::Internal, what);
        out.set_row(i, *lift);
    }
    return out;
}

}  // namespace

Complex Resolution::as_complex() const {
    const RingPtr& R = target.ring();
    std::vector<PresentedModule> modules;
    for (std::size_t k = 0; k < ranks.size(); ++k)
        modules.push_back(PresentedModule::free_module(R, ranks[k]));
    std::vector<ModuleHom> dd;
    for (std::size_t k = 0; k < diffs.size(); ++k)
        dd.push_back(ModuleHom(modules[k + 1], modules[k], diffs[k]));
    return Complex(0, std::move(modules), std::move(dd));
}

ModuleHom Resolution::augmentation() const {
    const RingPtr& R = target.ring();
    PresentedModule F0 = PresentedModule::free_module(R, ranks[0]);
    return ModuleHom(F0, target, Matrix::identity(R, ranks[0]));
}

Resolution free_resolution(const PresentedModule& M, std::size_t length) {
    require(length >= 1, ErrorCode::Generic, "resolution length must be at least 1");
    const RingPtr& R = M.ring();

    Resolution out;
    out.target = M;
    out.ranks.push_back(M.gens());

    Matrix current = M.relations();  // rows generate ker(F_0 -> M)
    for (std::size_t k = 1; k <= length; ++k) {
        out.ranks.push_back(current.rows());
        out.diffs.push_back(current);
        if (current.rows() == 0) {
            out.complete = true;
            // zero tail: remaining terms are zero modules
            for (std::size_t j = k + 1; j <= length; ++j) {
                out.ranks.push_back(0);
                out.diffs.push_back(Matrix(R, 0, out.ranks[j - 1]));
            }
            break;
        }
        auto syz = row_syzygies(R, matrix_rows(current), current.cols());
        current = Matrix::from_rows(R, syz, current.rows());
    }
    if (!out.complete) {
        auto syz = row_syzygies(R, matrix_rows(out.diffs.back()), out.diffs.back().cols());
        out.complete = syz.empty();
    }

    // exactness verification: syzygies of d_k land in the row span of d_{k+1}
    for (std::size_t k = 0; k + 1 < out.diffs.size(); ++k) {
        auto syz = row_syzygies(R, matrix_rows(out.diffs[k]), out.diffs[k].cols());
        auto next_rows = matrix_rows(out.diffs[k + 1]);
        for (const auto& s : syz) {
            require(lift_through_rows(R, next_rows, out.diffs[k].rows(), s).has_value(),
                    ErrorCode::Internal, "resolution failed the syzygy-of-syzygy exactness test");
        }
    }
    return out;
}

Resolution padded_resolution(const Resolution& R0, std::size_t at) {
    require(at >= 1 && at <= R0.length(), ErrorCode::Dimension,
            "padding degree must lie inside the resolution");
    const RingPtr& R = R0.target.ring();
    Resolution out = R0;
    out.complete = R0.complete;

    // splice the trivial complex 0 -> R -> R -> 0 across degrees at+1, at
    std::size_t r_hi = out.ranks[at] + 1;  // F_at gains a generator
    // d_at : F_at -> F_{at-1} gains a zero row
    Matrix d_at = out.diffs[at - 1];
    Matrix extra_row(R, 1, d_at.cols());
    out.diffs[at - 1] = d_at.vcat(extra_row);
    out.ranks[at] = r_hi;

    if (at < out.diffs.size()) {
        // d_{at+1} : F_{at+1} -> F_at gains the identity block
        Matrix d_next = out.diffs[at];
        Matrix widened(R, d_next.rows() + 1, d_next.cols() + 1);
        for (std::size_t i = 0; i < d_next.rows(); ++i)
            for (std::size_t j = 0; j < d_next.cols(); ++j) widened.at(i, j) = d_next.at(i, j);
        widened.at(d_next.rows(), d_next.cols()) = R->one();
        out.diffs[at] = widened;
        out.ranks[at + 1] += 1;
        if (at + 1 < out.diffs.size()) {
            // d_{at+2} gains a zero column
            Matrix d2 = out.diffs[at + 1];
            Matrix col(R, d2.rows(), 1);
            out.diffs[at + 1] = d2.hcat(col);
        }
    } else {
        // padding the top: append the new partner term
        Matrix top(R, 1, r_hi);
        top.at(0, r_hi - 1) = R->one();
        out.diffs.push_back(top);
        out.ranks.push_back(1);
    }
    // re-verify by round-tripping through the complex constructor
    out.as_complex();
    return out;
}

ResolutionLift lift_hom(const ModuleHom& f, const Resolution& RM, const Resolution& RN) {
    require(f.source().same_presentation(RM.target) && f.target().same_presentation(RN.target),
            ErrorCode::Dimension, "lift endpoints do not match the resolutions");
    require(RM.length() == RN.length(), ErrorCode::Dimension,
            "lift needs resolutions of equal length");
    const RingPtr& R = f.source().ring();

    ResolutionLift out;
    out.maps.push_back(f.matrix());  // f_0 on the coordinate augmentations
    for (std::size_t k = 1; k <= RM.length(); ++k) {
        // need f_k with f_k * d^N_k = d^M_k * f_{k-1}
        Matrix target = RM.diffs[k - 1].mul(out.maps[k - 1]);
        Matrix fk(R, RM.ranks[k], RN.ranks[k]);
        if (RM.ranks[k] > 0) {
            if (k == 1) {
                // rows must land in ker(F^N_0 -> N) = span(d^N_1) + relations of N
                std::vector<std::vector<Elem>> rows = matrix_rows(RN.diffs[0]);
                auto extra = RN.target.relation_rows();
                // d^N_1 rows and the relation rows of N agree as spans; keep d rows only
                (void)extra;
                for (std::size_t i = 0; i < target.rows(); ++i) {
                    auto lift = lift_through_rows(R, rows, RN.ranks[0], target.row(i));
                    require(lift.has_value(), ErrorCode::Internal,
                            "chain lift failed at degree 1");
                    fk.set_row(i, *lift);
                }
            } else {
                fk = lift_rows_exact(R, target, RN.diffs[k - 1],
                                     "chain lift failed at degree " + std::to_string(k));
            }
        }
        out.maps.push_back(std::move(fk));
    }
    return out;
}

std::vector<Matrix> lift_homotopy(const ModuleHom& f, const Resolution& RM, const Resolution& RN,
                                  const ResolutionLift& a, const ResolutionLift& b) {
    (void)f;
    const RingPtr& R = RM.target.ring();
    std::vector<Matrix> k;
    // K_0 with K_0 d^N_1 = a_0 - b_0
    Matrix delta0 = a.maps[0].add(b.maps[0].neg());
    k.push_back(RM.ranks[0] == 0 || RN.ranks[1] == 0
                    ? Matrix(R, RM.ranks[0], RN.ranks[1])
                    : lift_rows_exact(R, delta0, RN.diffs[0],
                                      "homotopy base step has no lift"));
    for (std::size_t i = 1; i <= RM.length(); ++i) {
        Matrix delta = a.maps[i].add(b.maps[i].neg());
        Matrix residue = delta.add(RM.diffs[i - 1].mul(k[i - 1]).neg());
        std::size_t next_rank = (i + 1 <= RN.length()) ? RN.ranks[i + 1] : 0;
        if (next_rank == 0) {
            require(residue.is_zero(), ErrorCode::Internal,
                    "homotopy construction hit a nonzero residue past the resolution");
            k.push_back(Matrix(R, RM.ranks[i], 0));
        } else {
            k.push_back(lift_rows_exact(R, residue, RN.diffs[i],
                                        "homotopy step " + std::to_string(i) + " has no lift"));
        }
    }
    return k;
}

Horseshoe horseshoe(const ModuleHom& inject, const ModuleHom& project, const Resolution& RA,
                    const Resolution& RC) {
    const RingPtr& R = inject.source().ring();
    require(inject.target().same_presentation(project.source()), ErrorCode::Dimension,
            "SES maps do not share the middle module");
    require(RA.target.same_presentation(inject.source()) &&
                RC.target.same_presentation(project.target()),
            ErrorCode::Dimension, "resolutions do not resolve the SES ends");
    require(RA.length() == RC.length(), ErrorCode::Dimension,
            "horseshoe needs resolutions of equal length");
    require(kernel(inject).module.is_zero_module() && cokernel(project).module.is_zero_module() &&
                is_exact_pair(inject, project),
            ErrorCode::Generic, "input is not a short exact sequence");

    const PresentedModule& B = inject.target();
    std::size_t L = RA.length();

    // beta_0 : F^C_0 -> B lifting the augmentation of C through the projection
    Matrix beta0(R, RC.ranks[0], B.gens());
    {
        std::vector<std::vector<Elem>> rows;
        for (std::size_t a = 0; a < project.source().gens(); ++a)
            rows.push_back(project.matrix().row(a));
        auto relC = project.target().relation_rows();
        rows.insert(rows.end(), relC.begin(), relC.end());
        for (std::size_t j = 0; j < RC.ranks[0]; ++j) {
            std::vector<Elem> cj(RC.target.gens(), R->zero());
            cj[j] = R->one();
            auto lift = lift_through_rows(R, rows, project.target().gens(), cj);
            require(lift.has_value(), ErrorCode::Internal,
                    "projection failed to lift a generator of C");
            beta0.set_row(j, std::vector<Elem>(lift->begin(), lift->begin() + B.gens()));
        }
    }

    Resolution mid;
    mid.target = B;
    // middle F_0 has one generator per generator of A's F_0 and C's F_0, but
    // the augmentation to B is not the coordinate map, so present B on those
    // images: epsilon_B = [f; beta0]
    Matrix epsB = inject.matrix().vcat(beta0);

    // exactness bookkeeping uses the actual presentation of B; the middle
    // resolution is produced over the direct-sum generators with theta blocks
    std::vector<Matrix> theta(L + 1, Matrix());  // theta[k] : F^C_k -> F^A_{k-1}, k >= 1

    // theta_1: rows t with t * d^A_... : constructed from epsilon_B lifts
    // requirement: (theta_1 row) * f + (d^C_1 row) * beta0 = 0 in B
    {
        std::vector<std::vector<Elem>> rows;
        for (std::size_t a = 0; a < inject.source().gens(); ++a)
            rows.push_back(inject.matrix().row(a));
        auto relB = B.relation_rows();
        rows.insert(rows.end(), relB.begin(), relB.end());
        Matrix th(R, RC.ranks[1], RA.ranks[0]);
        for (std::size_t e = 0; e < RC.ranks[1]; ++e) {
            std::vector<Elem> w = RC.diffs[0].row(e);  // in F^C_0
            std::vector<Elem> t = row_times_matrix(w, beta0);
            for (auto& x : t) x = R->neg(x);
            auto lift = lift_through_rows(R, rows, B.gens(), t);
            require(lift.has_value(), ErrorCode::Internal,
                    "horseshoe theta_1 lift failed (exactness of the SES is broken)");
            th.set_row(e, std::vector<Elem>(lift->begin(),
                                            lift->begin() + inject.source().gens()));
        }
        theta[1] = std::move(th);
    }

    // theta_k for k >= 2: theta_k * d^A_{k-1} = -(d^C_k * theta_{k-1})
    for (std::size_t k = 2; k <= L; ++k) {
        Matrix rhs = RC.diffs[k - 1].mul(theta[k - 1]).neg();
        theta[k] = RA.ranks[k - 1] == 0
                       ? Matrix(R, RC.ranks[k], RA.ranks[k - 1])
                       : lift_rows_exact(R, rhs, RA.diffs[k - 2],
                                         "horseshoe theta lift failed at degree " +
                                             std::to_string(k));
        if (RA.ranks[k - 1] == 0)
            require(rhs.is_zero(), ErrorCode::Internal, "horseshoe hit a nonzero residue");
    }

    // assemble middle differentials d^B_k = [[d^A_k, 0], [theta_k, d^C_k]]
    mid.ranks.push_back(RA.ranks[0] + RC.ranks[0]);
    for (std::size_t k = 1; k <= L; ++k) {
        mid.ranks.push_back(RA.ranks[k] + RC.ranks[k]);
        Matrix d(R, RA.ranks[k] + RC.ranks[k], RA.ranks[k - 1] + RC.ranks[k - 1]);
        for (std::size_t i = 0; i < RA.ranks[k]; ++i)
            for (std::size_t j = 0; j < RA.ranks[k - 1]; ++j)
                d.at(i, j) = RA.diffs[k - 1].at(i, j);
        for (std::size_t i = 0; i < RC.ranks[k]; ++i) {
            for (std::size_t j = 0; j < RA.ranks[k - 1]; ++j)
                d.at(RA.ranks[k] + i, j) = theta[k].at(i, j);
            for (std::size_t j = 0; j < RC.ranks[k - 1]; ++j)
                d.at(RA.ranks[k] + i, RA.ranks[k - 1] + j) = RC.diffs[k - 1].at(i, j);
        }
        mid.diffs.push_back(std::move(d));
    }
    mid.complete = RA.complete && RC.complete;

    // the middle column is NOT a coordinate-augmented resolution of B; build
    // its complex and verify exactness directly against epsilon_B
    Complex midC = mid.as_complex();
    ModuleHom eps(midC.module_at(0), B, epsB);
    require(cokernel(eps).module.is_zero_module(), ErrorCode::Internal,
            "middle augmentation is not surjective");
    require(is_exact_pair(midC.diff(1), eps), ErrorCode::Internal,
            "middle column fails exactness at degree 0");
    for (long i = 1; i < midC.hi(); ++i)
        require(is_exact_pair(midC.diff(i + 1), midC.diff(i)), ErrorCode::Internal,
                "middle column fails exactness at degree " + std::to_string(i));

    // block inclusion and projection as a degreewise split-exact SES
    Complex ac = RA.as_complex(), cc = RC.as_complex();
    std::map<long, ModuleHom> incl, proj;
    for (std::size_t k = 0; k <= L; ++k) {
        Matrix in(R, RA.ranks[k], mid.ranks[k]);
        for (std::size_t i = 0; i < RA.ranks[k]; ++i) in.at(i, i) = R->one();
        Matrix pr(R, mid.ranks[k], RC.ranks[k]);
        for (std::size_t i = 0; i < RC.ranks[k]; ++i) pr.at(RA.ranks[k] + i, i) = R->one();
        incl.emplace(static_cast<long>(k),
                     ModuleHom(ac.module_at(k), midC.module_at(k), std::move(in)));
        proj.emplace(static_cast<long>(k),
                     ModuleHom(midC.module_at(k), cc.module_at(k), std::move(pr)));
    }
    SesOfComplexes columns(ComplexHom(ac, midC, std::move(incl)),
                           ComplexHom(midC, cc, std::move(proj)));
    return Horseshoe{std::move(mid), std::move(columns)};
}

}  // namespace halg
