#pragma once

#include "halg/complex.hpp"

namespace halg {

// Free resolution ... -> F_1 -> F_0 -> M -> 0 with F_0 = R^gens(M) and the
// coordinate augmentation F_0 -> M. diffs[k] is d_{k+1}: F_{k+1} -> F_k.
// Exactness at every computed degree is verified at construction.
struct Resolution {
    PresentedModule target;
    std::vector<std::size_t> ranks;  // ranks of F_0 .. F_len
    std::vector<Matrix> diffs;       // d_1 .. d_len

    std::size_t length() const { return diffs.size(); }
    // the next syzygy module after the last computed term was zero
    bool complete = false;

    Complex as_complex() const;  // free modules over degrees [0, length]
    ModuleHom augmentation() const;  // F_0 -> M
};

Resolution free_resolution(const PresentedModule& M, std::size_t length);

// Same module, redundantly resolved: a trivial R -> R summand is spliced in
// between degrees at+1 and at (at >= 1 keeps the augmentation intact).
Resolution padded_resolution(const Resolution& R, std::size_t at);

// Chain lift of f : M -> N over resolutions of equal length, with
// f_0 = matrix(f) and commuting squares (exact matrix identities).
struct ResolutionLift {
    std::vector<Matrix> maps;  // maps[k] : F^M_k -> F^N_k
};
ResolutionLift lift_hom(const ModuleHom& f, const Resolution& RM, const Resolution& RN);

// Homotopy between two lifts of the same hom: maps k_i : F^M_i -> F^N_{i+1}
// with a_i - b_i = d^M_i k_{i-1} + k_i d^N_{i+1}, built degree by degree.
std::vector<Matrix> lift_homotopy(const ModuleHom& f, const Resolution& RM, const Resolution& RN,
                                  const ResolutionLift& a, const ResolutionLift& b);

// Horseshoe construction over a short exact sequence 0 -> A -> B -> C -> 0:
// middle resolution on F^A (+) F^C with verified exact middle column and a
// degreewise split-exact SES of complexes of frees.
struct Horseshoe {
    Resolution middle;
    SesOfComplexes columns;
};
Horseshoe horseshoe(const ModuleHom& inject, const ModuleHom& project, const Resolution& RA,
                    const Resolution& RC);

}  // namespace halg
