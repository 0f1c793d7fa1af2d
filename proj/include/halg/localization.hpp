#pragma once

#include <functional>
#include <optional>

#include "halg/ring.hpp"

namespace halg::loc {

// Fraction over a localized domain. The denominator is always the literal
// product of the generator powers in `exp`, so membership of denominators
// in the multiplicative set is certified by construction.
struct Fraction {
    Elem num;
    std::vector<unsigned> exp;
};

// Localization of an integral domain at the multiplicative monoid generated
// by finitely many nonzero elements (so 0 is never in the set and fraction
// equality is plain cross-multiplication).
class Localization {
public:
    Localization(RingPtr ring, std::vector<Elem> generators);

    const RingPtr& ring() const { return ring_; }
    const std::vector<Elem>& generators() const { return gens_; }

    Elem denominator_of(const std::vector<unsigned>& exp) const;
    // Expresses d as unit * product of generator powers, or nullopt.
    struct Witness {
        std::vector<unsigned> exp;
        Elem unit;
    };
    std::optional<Witness> witness(const Elem& d) const;

    Fraction make(Elem num, std::vector<unsigned> exp) const;
    Fraction from_ring(const Elem& r) const;  // r / 1
    Fraction inv_generator(std::size_t i) const;

    Fraction add(const Fraction& a, const Fraction& b) const;
    Fraction mul(const Fraction& a, const Fraction& b) const;
    Fraction neg(const Fraction& a) const;
    Fraction sub(const Fraction& a, const Fraction& b) const;
    std::optional<Fraction> invert(const Fraction& a) const;

    bool equal(const Fraction& a, const Fraction& b) const;
    bool is_zero(const Fraction& a) const;
    bool is_one(const Fraction& a) const;

    std::string show(const Fraction& a) const;
    // `(x+1)/x^2` style literals: numerator / denominator polynomials, where
    // the denominator must factor over the generators up to a unit.
    Fraction parse(const std::string& text) const;

private:
    RingPtr ring_;
    std::vector<Elem> gens_;
};

// The three Strickland clauses checked on sampled data for a candidate map
// q : R -> fractions. The default map r -> r/1 passes; a corrupted map is
// flagged with a violation per failing clause.
struct StricklandReport {
    bool units_ok = true;        // q(s) is a unit for every generator s
    bool fractions_ok = true;    // each sample fraction equals q(num) * q(den)^-1
    bool kernel_ok = true;       // q(r) = 0 iff r = 0 (Ann(S) = 0 in a domain)
    std::vector<std::string> violations;

    bool ok() const { return units_ok && fractions_ok && kernel_ok; }
};

StricklandReport strickland_verify(
    const Localization& L, const std::vector<Elem>& ring_samples,
    const std::vector<Fraction>& fraction_samples,
    const std::function<Fraction(const Elem&)>* map_override = nullptr);

// Universal factorization through a ring map f : R -> T sending the
// generators to units, with supplied inverse witnesses. Returns the images
// g(r/s) = f(r) * f(s)^-1 of the sample fractions and re-verifies both the
// witness equations and well-definedness on equal sample pairs.
struct UniversalFactorResult {
    RingPtr target;
    std::vector<Elem> images;  // one per sample fraction
};

UniversalFactorResult universal_factor(const Localization& L, const RingPtr& target,
                                       const std::function<Elem(const Elem&)>& f,
                                       const std::vector<Elem>& generator_inverses,
                                       const std::vector<Fraction>& samples);

}  // namespace halg::loc
