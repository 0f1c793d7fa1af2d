#pragma once

// Test-only helpers: seeded generators and independent brute-force oracles.
// Everything here stays independent of the engine code paths it checks.

#include <random>

#include "halg/module.hpp"

namespace testutil {

using namespace halg;

inline std::mt19937_64 rng(std::uint64_t seed) { return std::mt19937_64(seed); }

inline long rand_int(std::mt19937_64& g, long lo, long hi) {
    std::uniform_int_distribution<long> d(lo, hi);
    return d(g);
}

inline Elem random_elem(std::mt19937_64& g, const RingPtr& R, long coeff_bound = 6,
                        int max_terms = 3, std::uint32_t max_exp = 2) {
    if (!R->is_poly()) return R->from_int(rand_int(g, -coeff_bound, coeff_bound));
    const PolyCtx& cx = R->ctx();
    Poly p = poly_zero();
    int terms = static_cast<int>(rand_int(g, 0, max_terms));
    for (int t = 0; t < terms; ++t) {
        Monomial m(cx.nvars());
        for (std::size_t v = 0; v < cx.nvars(); ++v)
            m.e[v] = static_cast<std::uint32_t>(rand_int(g, 0, max_exp));
        Scalar c = cx.coeff.from_int(rand_int(g, -coeff_bound, coeff_bound));
        p = poly_add(cx, p, poly_term(cx, c, m));
    }
    return Elem{p};
}

inline Matrix random_matrix(std::mt19937_64& g, const RingPtr& R, std::size_t rows,
                            std::size_t cols, long bound = 4) {
    Matrix m(R, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = random_elem(g, R, bound, 2, 1);
    return m;
}

// Smallest k >= 1 with k*x = 0, brute force; 0 when no such k <= limit.
inline std::size_t element_order(const ModuleElement& x, std::size_t limit = 64) {
    ModuleElement acc = x;
    for (std::size_t k = 1; k <= limit; ++k) {
        if (element_is_zero(acc)) return k;
        acc = element_add(acc, x);
    }
    return 0;
}

// 2x2 integer determinant for the SNF oracle.
inline Int det2(const Matrix& m) {
    const Int& a = std::get<Int>(m.at(0, 0).scalar());
    const Int& b = std::get<Int>(m.at(0, 1).scalar());
    const Int& c = std::get<Int>(m.at(1, 0).scalar());
    const Int& d = std::get<Int>(m.at(1, 1).scalar());
    return a * d - b * c;
}

}  // namespace testutil
