#pragma once

#include "halg/snf.hpp"
#include "halg/words.hpp"

namespace halg::grp {

// Finitely presented group <generators | relators>.
struct FpGroupPresentation {
    Alphabet generators;
    std::vector<SignedWord> relators;
};

// `<a,b | a b a^-1 b^-1, a^3>` syntax.
FpGroupPresentation presentation_parse(const std::string& text);
std::string presentation_show(const FpGroupPresentation& p);

// G/[G,G] decomposed as Z^rank + sum Z/d_i via the Smith form of the
// relator exponent-sum matrix. Trivial factors d = 1 are dropped.
struct Abelianization {
    std::size_t free_rank = 0;
    std::vector<Int> torsion;  // nontrivial invariant factors, d_1 | d_2 | ...
    Matrix exponent_matrix;    // relators x generators over ZZ
};

Abelianization abelianization(const FpGroupPresentation& p);

std::string abelianization_show(const Abelianization& a);  // e.g. "Z^2", "Z/3", "Z + Z/2"

}  // namespace halg::grp
