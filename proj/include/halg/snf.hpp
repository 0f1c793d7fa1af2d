#pragma once

#include <optional>

#include "halg/matrix.hpp"

namespace halg {

// Smith normal form over a euclidean ring: U*A*V = D with D diagonal and
// d_1 | d_2 | ... ; U and V are invertible with tracked inverses.
struct SmithForm {
    Matrix U, D, V;
    Matrix Uinv, Vinv;
    std::vector<Elem> invariant_factors;  // the nonzero diagonal, canonical associates
};

SmithForm smith_normal_form(const Matrix& A);

// A*x = b over a euclidean ring. "no solution" is a value, not an error.
struct LinearSolution {
    std::vector<Elem> particular;      // x with A*x = b
    std::vector<std::vector<Elem>> kernel;  // basis of {x : A*x = 0}
};

std::optional<LinearSolution> solve_linear(const Matrix& A, const std::vector<Elem>& b);

// Kernel basis only (columns x with A*x = 0).
std::vector<std::vector<Elem>> kernel_basis(const Matrix& A);

}  // namespace halg
