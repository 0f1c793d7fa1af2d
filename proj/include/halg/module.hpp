#pragma once

#include <functional>
#include <memory>
#include <optional>

#include "halg/linsolve.hpp"

namespace halg {

// Finitely presented module: cokernel of the map R^relations -> R^gens,
// encoded by the relation matrix (one relation per row). Elements are
// coefficient row vectors over the generators; equality is membership of
// the difference in the relation row span.
class PresentedModule {
public:
    PresentedModule() = default;
    PresentedModule(RingPtr ring, std::size_t gens, Matrix relations);

    static PresentedModule free_module(const RingPtr& ring, std::size_t rank);
    static PresentedModule zero_module(const RingPtr& ring);
    // R / (a_1, ..., a_k) on one generator.
    static PresentedModule cyclic(const RingPtr& ring, const std::vector<Elem>& annihilators);

    const RingPtr& ring() const { return d_->ring; }
    std::size_t gens() const { return d_->gens; }
    const Matrix& relations() const { return d_->relations; }
    std::vector<std::vector<Elem>> relation_rows() const;

    bool in_relation_span(const std::vector<Elem>& v) const;
    std::optional<std::vector<Elem>> relation_certificate(const std::vector<Elem>& v) const;

    bool is_zero_module() const;
    bool is_free_presentation() const { return d_->relations.rows() == 0; }
    bool same_presentation(const PresentedModule& other) const;

    std::string show() const;

private:
    struct Data {
        RingPtr ring;
        std::size_t gens = 0;
        Matrix relations;
    };
    std::shared_ptr<const Data> d_;
};

struct ModuleElement {
    PresentedModule parent;
    std::vector<Elem> coeffs;
};

ModuleElement element(const PresentedModule& M, std::vector<Elem> coeffs);
ModuleElement zero_element(const PresentedModule& M);
ModuleElement element_add(const ModuleElement& a, const ModuleElement& b);
ModuleElement element_sub(const ModuleElement& a, const ModuleElement& b);
ModuleElement element_scale(const Elem& r, const ModuleElement& a);
bool element_is_zero(const ModuleElement& a);
bool element_equal(const ModuleElement& a, const ModuleElement& b);

// Homomorphism between presented modules, a gens(src) x gens(tgt) matrix
// acting on coefficient rows. Well-definedness (every source relation maps
// into the target relation span) is certified at construction; the
// certificate re-verifies independently of how the hom was produced.
class ModuleHom {
public:
    ModuleHom() = default;
    ModuleHom(PresentedModule src, PresentedModule tgt, Matrix mat);

    static ModuleHom identity(const PresentedModule& M);
    static ModuleHom zero(const PresentedModule& src, const PresentedModule& tgt);

    const PresentedModule& source() const { return src_; }
    const PresentedModule& target() const { return tgt_; }
    const Matrix& matrix() const { return mat_; }
    // rows of the certificate: lift of (relation row * mat) through target relations
    const std::vector<std::vector<Elem>>& certificate() const { return cert_; }
    bool verify_certificate() const;

    ModuleElement apply(const ModuleElement& x) const;
    bool is_zero_hom() const;

private:
    PresentedModule src_, tgt_;
    Matrix mat_;
    std::vector<std::vector<Elem>> cert_;
};

ModuleHom compose(const ModuleHom& f, const ModuleHom& g);  // f then g
ModuleHom hom_add(const ModuleHom& f, const ModuleHom& g);
ModuleHom hom_sub(const ModuleHom& f, const ModuleHom& g);
ModuleHom hom_neg(const ModuleHom& f);
bool hom_equal(const ModuleHom& f, const ModuleHom& g);

struct KernelResult {
    PresentedModule module;
    ModuleHom inclusion;  // module -> source of f
};
KernelResult kernel(const ModuleHom& f);

struct CokernelResult {
    PresentedModule module;
    ModuleHom projection;  // target of f -> module (surjective by construction)
};
CokernelResult cokernel(const ModuleHom& f);

struct ImageResult {
    PresentedModule module;   // presented on the images of the source generators
    ModuleHom embedding;      // module -> target
    ModuleHom onto;           // source -> module
};
ImageResult image(const ModuleHom& f);

// im(f) = ker(g) as submodules of the middle module: g o f = 0 and every
// kernel generator of g lies in the span of im(f) + relations.
bool is_exact_pair(const ModuleHom& f, const ModuleHom& g);

struct DirectSum {
    PresentedModule module;
    ModuleHom inj1, inj2;    // summand -> sum
    ModuleHom proj1, proj2;  // sum -> summand
};
DirectSum direct_sum(const PresentedModule& M1, const PresentedModule& M2);

struct TensorProduct {
    PresentedModule module;  // generators e_i (x) f_j at index i*gens(N)+j
    PresentedModule left, right;

    std::size_t pair_index(std::size_t i, std::size_t j) const;
    // bilinear pairing on elements
    ModuleElement pair(const ModuleElement& m, const ModuleElement& n) const;
};
TensorProduct tensor_product(const PresentedModule& M, const PresentedModule& N);

// f (x) N for f : M -> M'.
ModuleHom tensor_hom(const ModuleHom& f, const PresentedModule& N);

// Universal factorization: a bilinear map given by its values on generator
// pairs induces a verified hom out of the tensor product.
ModuleHom factor_bilinear(const TensorProduct& T, const PresentedModule& L,
                          const std::function<std::vector<Elem>(std::size_t, std::size_t)>& beta);

// Equational zero certificate for sum_i m_i (x) n_i with n_i generator
// indices of N. Generators of N missing from the input are appended with
// zero partners, which leaves the element unchanged but makes the witness
// kernel computation range over all of N.
struct TensorZeroCertificate {
    bool zero = false;
    // over the extended pair list: a[i][j] with sum_j a[i][j]*mprime[j] = m_i
    // in M and sum_i a[i][j]*n_i = 0 in N
    std::vector<std::pair<ModuleElement, std::size_t>> pairs;  // extended list
    std::vector<std::vector<Elem>> a;
    std::vector<std::vector<Elem>> mprime;  // rows are elements of M
};
TensorZeroCertificate tensor_zero_certificate(
    const PresentedModule& M, const PresentedModule& N,
    const std::vector<std::pair<ModuleElement, std::size_t>>& pairs);

// The element of tensor_product(M, N) described by the same pair list.
ModuleElement pairs_as_tensor_element(const TensorProduct& T,
                                      const std::vector<std::pair<ModuleElement, std::size_t>>& pairs);

}  // namespace halg
