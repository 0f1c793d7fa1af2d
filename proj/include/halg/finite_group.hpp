#pragma once

#include <optional>
#include <vector>

#include "halg/finite.hpp"
#include "halg/words.hpp"

namespace halg::grp {

// Finite monoid as a Cayley table. Associativity and neutrality are checked
// at construction, so a live object always satisfies the axioms.
class FiniteMonoid {
public:
    FiniteMonoid(fin::FiniteSet carrier, std::vector<std::size_t> table, std::size_t identity);

    std::size_t size() const { return carrier_.size(); }
    const fin::FiniteSet& carrier() const { return carrier_; }
    std::size_t identity() const { return identity_; }
    std::size_t op(std::size_t a, std::size_t b) const { return table_[a * size() + b]; }
    bool is_commutative() const;

    static FiniteMonoid cyclic_add(std::size_t n);  // Z/n additive

protected:
    fin::FiniteSet carrier_;
    std::vector<std::size_t> table_;
    std::size_t identity_;
};

class FiniteGroup : public FiniteMonoid {
public:
    FiniteGroup(fin::FiniteSet carrier, std::vector<std::size_t> table, std::size_t identity);

    std::size_t inverse(std::size_t a) const { return inv_[a]; }

    static FiniteGroup cyclic(std::size_t n);
    static FiniteGroup symmetric(std::size_t n);  // S_n on permutation labels

private:
    std::vector<std::size_t> inv_;
};

// Map on carriers; hom property is verified by verify_hom.
struct MonoidHom {
    std::vector<std::size_t> images;  // index map source -> target
};

bool verify_monoid_hom(const FiniteMonoid& M, const FiniteMonoid& N, const MonoidHom& f);

// Unique homomorphic extension of h: letters -> M to words (List(A) -> M).
std::size_t free_monoid_extend(const FiniteMonoid& M, const std::vector<std::size_t>& h,
                               const Word& w);

// Smallest congruence containing `pairs`: an equivalence closed under
// x ~ x', y ~ y' => x*y ~ x'*y'. The quotient Cayley table is well-defined
// on the returned partition.
fin::Partition congruence_closure(const FiniteMonoid& M,
                                  const std::vector<std::pair<std::size_t, std::size_t>>& pairs);

bool is_congruence(const FiniteMonoid& M, const fin::Partition& part);

// Quotient monoid on the blocks of a congruence.
struct QuotientMonoid {
    FiniteMonoid quotient;
    MonoidHom projection;
};
QuotientMonoid quotient_by_congruence(const FiniteMonoid& M, const fin::Partition& part);

// Subgroups are element subsets closed under op/inverse and containing e.
bool is_subgroup(const FiniteGroup& G, const std::vector<std::size_t>& subset);
bool is_normal_subgroup(const FiniteGroup& G, const std::vector<std::size_t>& subset);
std::vector<std::size_t> subgroup_generated(const FiniteGroup& G,
                                            const std::vector<std::size_t>& gens);
// Smallest normal subgroup containing S (closure under conjugation).
std::vector<std::size_t> normal_closure(const FiniteGroup& G, const std::vector<std::size_t>& S);

struct QuotientGroup {
    FiniteGroup quotient;
    MonoidHom projection;             // G -> quotient
    std::vector<std::size_t> kernel;  // sorted element list, equals H when H is normal
    bool closed_to_normal = false;    // input subgroup was not normal; its closure was used
};
QuotientGroup quotient_group(const FiniteGroup& G, const std::vector<std::size_t>& H);

std::vector<std::size_t> hom_kernel(const FiniteGroup& G, const FiniteGroup& H, const MonoidHom& f);
std::vector<std::size_t> hom_image(const FiniteGroup& G, const FiniteGroup& H, const MonoidHom& f);

// G/ker(f) -> im(f) is a bijective homomorphism; false would mean a broken
// engine rather than bad input.
bool first_iso_check(const FiniteGroup& G, const FiniteGroup& H, const MonoidHom& f);

}  // namespace halg::grp
