#pragma once

#include "halg/gb.hpp"
#include "halg/resolution.hpp"

namespace halg {

// F_* (x) N as a complex of presented modules over degrees [0, length].
Complex tensor_resolution(const Resolution& R, const PresentedModule& N);

// Chain lift tensored with N, as a hom of the tensored complexes.
ComplexHom tensor_lift(const ResolutionLift& lift, const Resolution& RM, const Resolution& RN,
                       const PresentedModule& N);

struct TorResult {
    PresentedModule left, right;
    std::size_t degree = 0;
    PresentedModule value;
    Resolution resolution;  // provenance: the resolution of `left` that was used
    bool vanishes() const { return value.is_zero_module(); }
};

// Tor_n(M, N): resolve the first argument, tensor with the second, take
// cohomology at degree n.
TorResult tor(const PresentedModule& M, const PresentedModule& N, std::size_t n);

// Tor_0(M, N) = M (x) N, certified by an explicit pair of mutually inverse
// homs between the two presentations.
struct Tor0Identification {
    ModuleHom to_tensor, from_tensor;
};
Tor0Identification tor0_vs_tensor(const PresentedModule& M, const PresentedModule& N);

// Comparison isomorphism on Tor_n induced by lifting id_M across two
// resolutions; both composites are verified to be identities on cohomology.
struct TorIndependence {
    ModuleHom forward, backward;
};
TorIndependence tor_independence_check(const PresentedModule& M, const PresentedModule& N,
                                       std::size_t n, const Resolution& R1, const Resolution& R2);

// Long exact Tor sequence of 0 -> A -> B -> C -> 0 against N, assembled via
// the horseshoe and the connecting maps of the tensored columns.
struct TorLes {
    LongExactSequence les;
    Horseshoe horseshoe_data;
};
TorLes tor_les(const ModuleHom& inject, const ModuleHom& project, const PresentedModule& N,
               std::size_t max_degree, int sign);

// Tor_1(R/I, M) for each supplied finitely generated ideal; a finite sample,
// not a flatness decision.
struct FlatProbeEntry {
    std::vector<Elem> ideal;
    PresentedModule tor1;
    bool vanishes = false;
};
std::vector<FlatProbeEntry> flat_tor_probe(const PresentedModule& M,
                                           const std::vector<std::vector<Elem>>& ideals);

// Flatness of S/(f) over the coefficient-side subring: extract the
// coefficients of f with respect to the split variables and decide whether
// they generate the unit ideal, with a certificate either way.
struct FlatnessReport {
    bool flat = false;
    RingPtr base;                     // ring of the coefficients
    std::vector<Elem> coefficients;   // nonzero coefficients of f
    std::vector<Elem> combination;    // flat: 1 = sum combination[i]*coefficients[i]
    std::vector<Elem> ideal_basis;    // not flat: groebner/gcd basis of the coefficient ideal
    std::string detail;
};
FlatnessReport hypersurface_flat_check(const RingPtr& S, const Poly& f,
                                       const std::vector<std::size_t>& split_vars);

// Finitely presented degree-truncated model of S/(f) as a module over the
// coefficient ring, used to witness nonzero Tor_1 for non-flat hypersurfaces.
PresentedModule hypersurface_truncation(const RingPtr& S, const Poly& f, std::size_t split_var,
                                        std::size_t degree_bound);

}  // namespace halg
