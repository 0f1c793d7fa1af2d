#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

namespace halg {

// Exponent vector of fixed length (one entry per ring variable).
struct Monomial {
    std::vector<std::uint32_t> e;

    explicit Monomial(std::size_t nvars = 0) : e(nvars, 0) {}
    static Monomial var(std::size_t nvars, std::size_t i, std::uint32_t k = 1) {
        Monomial m(nvars);
        m.e[i] = k;
        return m;
    }

    std::size_t nvars() const { return e.size(); }
    std::uint64_t degree() const { return std::accumulate(e.begin(), e.end(), std::uint64_t{0}); }
    bool is_one() const {
        for (auto x : e)
            if (x) return false;
        return true;
    }

    friend bool operator==(const Monomial&, const Monomial&) = default;
};

inline Monomial mono_mul(const Monomial& a, const Monomial& b) {
    Monomial r(a.nvars());
    for (std::size_t i = 0; i < a.e.size(); ++i) r.e[i] = a.e[i] + b.e[i];
    return r;
}

inline bool mono_divides(const Monomial& a, const Monomial& b) {
    // a | b
    for (std::size_t i = 0; i < a.e.size(); ++i)
        if (a.e[i] > b.e[i]) return false;
    return true;
}

inline Monomial mono_div(const Monomial& b, const Monomial& a) {
    Monomial r(a.nvars());
    for (std::size_t i = 0; i < a.e.size(); ++i) r.e[i] = b.e[i] - a.e[i];
    return r;
}

inline Monomial mono_lcm(const Monomial& a, const Monomial& b) {
    Monomial r(a.nvars());
    for (std::size_t i = 0; i < a.e.size(); ++i) r.e[i] = std::max(a.e[i], b.e[i]);
    return r;
}

enum class OrderTag { Lex, DegRevLex };

// Total multiplicative well-founded order; returns <0, 0, >0 like a comparator.
inline int mono_cmp(OrderTag ord, const Monomial& a, const Monomial& b) {
    switch (ord) {
        case OrderTag::Lex:
            for (std::size_t i = 0; i < a.e.size(); ++i) {
                if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? -1 : 1;
            }
            return 0;
        case OrderTag::DegRevLex: {
            std::uint64_t da = a.degree(), db = b.degree();
            if (da != db) return da < db ? -1 : 1;
            for (std::size_t i = a.e.size(); i-- > 0;) {
                if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? -1 : 1;
            }
            return 0;
        }
    }
    return 0;
}

}  // namespace halg
