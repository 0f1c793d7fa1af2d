#include "halg/words.hpp"

#include <cctype>
#include <sstream>

namespace halg::grp {

std::size_t Alphabet::index_of(const std::string& name) const {
    for (std::size_t i = 0; i < letters.size(); ++i)
        if (letters[i] == name) return i;
    raise(ErrorCode::Parse, "unknown letter '" + name + "'");
}

bool Alphabet::has(const std::string& name) const {
    for (const auto& l : letters)
        if (l == name) return true;
    return false;
}

SignedWord reduce_word(const SignedWord& w) {
    SignedWord out;
    for (const auto& sl : w.seq) {
        if (!out.seq.empty() && out.seq.back().letter == sl.letter &&
            out.seq.back().sign == -sl.sign) {
            out.seq.pop_back();
        } else {
            out.seq.push_back(sl);
        }
    }
    return out;
}

bool is_reduced(const SignedWord& w) {
    for (std::size_t i = 0; i + 1 < w.seq.size(); ++i) {
        if (w.seq[i].letter == w.seq[i + 1].letter && w.seq[i].sign == -w.seq[i + 1].sign)
            return false;
    }
    return true;
}

SignedWord word_concat(const SignedWord& a, const SignedWord& b) {
    SignedWord r = a;
    r.seq.insert(r.seq.end(), b.seq.begin(), b.seq.end());
    return r;
}

SignedWord word_inverse(const SignedWord& a) {
    SignedWord r;
    r.seq.reserve(a.seq.size());
    for (std::size_t i = a.seq.size(); i-- > 0;) r.seq.push_back({a.seq[i].letter, -a.seq[i].sign});
    return r;
}

SignedWord word_mul(const SignedWord& a, const SignedWord& b) {
    return reduce_word(word_concat(a, b));
}

std::string word_show(const Alphabet& alpha, const SignedWord& w) {
    if (w.seq.empty()) return "1";
    std::ostringstream os;
    for (std::size_t i = 0; i < w.seq.size(); ++i) {
        if (i) os << " ";
        os << alpha.letters[w.seq[i].letter];
        if (w.seq[i].sign < 0) os << "^-1";
    }
    return os.str();
}

SignedWord word_parse(const Alphabet& alpha, const std::string& text) {
    SignedWord w;
    std::size_t i = 0;
    auto skip = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    while (true) {
        skip();
        if (i >= text.size()) break;
        if (text[i] == '1' && w.seq.empty()) {  // the empty word literal
            ++i;
            skip();
            require(i >= text.size(), ErrorCode::Parse, "unexpected input after '1'");
            break;
        }
        require(std::isalpha(static_cast<unsigned char>(text[i])) || text[i] == '_',
                ErrorCode::Parse, "expected a letter at column " + std::to_string(i + 1));
        std::size_t start = i;
        while (i < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_'))
            ++i;
        std::size_t letter = alpha.index_of(text.substr(start, i - start));
        int sign = 1;
        long exp = 1;
        skip();
        if (i < text.size() && text[i] == '^') {
            ++i;
            skip();
            bool negative = false;
            if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
                negative = text[i] == '-';
                ++i;
            }
            std::size_t ds = i;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
            require(i > ds, ErrorCode::Parse, "expected an exponent");
            exp = std::stol(text.substr(ds, i - ds));
            if (negative) sign = -1;
        }
        for (long k = 0; k < exp; ++k) w.seq.push_back({letter, sign});
    }
    return w;
}

}  // namespace halg::grp
