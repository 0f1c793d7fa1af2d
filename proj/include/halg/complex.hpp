#pragma once

#include <map>

#include "halg/module.hpp"

namespace halg {

// Bounded complex of presented modules with descending differentials
// d_i : M_i -> M_{i-1}; d_i o d_{i+1} = 0 is checked at construction.
class Complex {
public:
    Complex(long lo, std::vector<PresentedModule> modules, std::vector<ModuleHom> diffs);

    long lo() const { return lo_; }
    long hi() const { return lo_ + static_cast<long>(modules_.size()) - 1; }
    bool in_range(long i) const { return i >= lo() && i <= hi(); }

    const RingPtr& ring() const { return modules_.front().ring(); }
    const PresentedModule& module_at(long i) const;
    // d_i for i in [lo+1, hi]
    const ModuleHom& diff(long i) const;

    static Complex single(const PresentedModule& M, long degree);

private:
    long lo_;
    std::vector<PresentedModule> modules_;
    std::vector<ModuleHom> diffs_;  // diffs_[k] = d_{lo+1+k} : M_{lo+1+k} -> M_{lo+k}
};

// Degreewise homs commuting with the differentials (checked at construction).
class ComplexHom {
public:
    ComplexHom(Complex source, Complex target, std::map<long, ModuleHom> maps);

    const Complex& source() const { return src_; }
    const Complex& target() const { return tgt_; }
    // zero hom outside the stored range
    ModuleHom map_at(long i) const;

    static ComplexHom identity(const Complex& C);
    static ComplexHom zero(const Complex& src, const Complex& tgt);

private:
    Complex src_, tgt_;
    std::map<long, ModuleHom> maps_;
};

ComplexHom complex_hom_add(const ComplexHom& a, const ComplexHom& b);

// Degree-raising maps k_i : M_i -> N_{i+1} certifying phi - psi =
// d o k + k o d. verify checks the identity at every degree.
struct Homotopy {
    std::map<long, ModuleHom> maps;
};

bool homotopy_certifies(const ComplexHom& phi, const ComplexHom& psi, const Homotopy& k);

// phi shifted by the boundaries of k: a complex hom homotopic to phi.
ComplexHom perturb_by_homotopy(const ComplexHom& phi, const Homotopy& k);

// Short exact sequence of complexes: degreewise mono/epi/im=ker, verified.
class SesOfComplexes {
public:
    SesOfComplexes(ComplexHom inject, ComplexHom project);

    const Complex& A() const { return inject_.source(); }
    const Complex& B() const { return inject_.target(); }
    const Complex& C() const { return project_.target(); }
    const ComplexHom& inject() const { return inject_; }
    const ComplexHom& project() const { return project_; }

private:
    ComplexHom inject_, project_;
};

// Cohomology at one degree with the classifying interface.
struct CohomologyAt {
    long degree = 0;
    PresentedModule H;
    PresentedModule cycles;
    ModuleHom cycle_inclusion;  // cycles -> M_i

    // class of a cycle (throws when the element is not a cycle)
    ModuleElement classify(const ModuleElement& cycle_in_Mi) const;
    // representing cycle in M_i of the k-th generator of H
    ModuleElement representative(std::size_t k) const;
};

CohomologyAt cohomology_at(const Complex& C, long i);

// Map induced on cohomology by a complex hom (classes of phi_i(representatives)).
ModuleHom induced_map(const ComplexHom& phi, long i);

// Connecting homomorphism of the diagram chase, multiplied by the explicit
// sign parameter: lift through the projection, apply d, pull back through
// the injection, classify.
ModuleHom connecting_map(const SesOfComplexes& S, long i, int sign);

struct LongExactSequence {
    Complex sequence;  // assembled ... -> h_i(A) -> h_i(B) -> h_i(C) -> h_{i-1}(A) -> ...
    std::vector<std::string> node_labels;  // aligned with degrees hi..lo of `sequence`
    std::vector<bool> exact_at;            // interior nodes, same alignment
    bool exact = true;
};

LongExactSequence long_exact_sequence(const SesOfComplexes& S, int sign);

}  // namespace halg
