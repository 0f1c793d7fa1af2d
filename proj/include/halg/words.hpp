#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "halg/error.hpp"

namespace halg::grp {

// Ordered alphabet; letters are interned indices so normal forms are
// canonical by construction.
struct Alphabet {
    std::vector<std::string> letters;

    std::size_t size() const { return letters.size(); }
    std::size_t index_of(const std::string& name) const;
    bool has(const std::string& name) const;
};

// Free-monoid word.
struct Word {
    std::vector<std::size_t> letters;
};

// Letter with a sign; reduced sequences present free-group elements.
struct SignedLetter {
    std::size_t letter;
    int sign;  // +1 or -1
    friend bool operator==(const SignedLetter&, const SignedLetter&) = default;
};

struct SignedWord {
    std::vector<SignedLetter> seq;
    friend bool operator==(const SignedWord&, const SignedWord&) = default;
};

// Cancel adjacent a a^-1 / a^-1 a pairs until none remain; the result is
// independent of cancellation order.
SignedWord reduce_word(const SignedWord& w);
bool is_reduced(const SignedWord& w);

SignedWord word_concat(const SignedWord& a, const SignedWord& b);
SignedWord word_inverse(const SignedWord& a);
// concatenate-then-reduce: the free-group product.
SignedWord word_mul(const SignedWord& a, const SignedWord& b);

// `a b^-1 a` token syntax.
std::string word_show(const Alphabet& alpha, const SignedWord& w);
SignedWord word_parse(const Alphabet& alpha, const std::string& text);

}  // namespace halg::grp
