#pragma once

#include <vector>

#include "halg/ring.hpp"

namespace halg {

// Rectangular matrix over a runtime ring. Rows may have zero extent; empty
// shapes show up constantly as presentations of zero modules.
class Matrix {
public:
    Matrix() = default;
    Matrix(RingPtr ring, std::size_t rows, std::size_t cols)
        : ring_(std::move(ring)), rows_(rows), cols_(cols), a_(rows * cols, ring_->zero()) {}

    static Matrix identity(const RingPtr& ring, std::size_t n) {
        Matrix m(ring, n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = ring->one();
        return m;
    }
    static Matrix from_rows(const RingPtr& ring, const std::vector<std::vector<Elem>>& rows,
                            std::size_t cols);

    const RingPtr& ring() const { return ring_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Elem& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Elem& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    std::vector<Elem> row(std::size_t i) const;
    void set_row(std::size_t i, const std::vector<Elem>& r);

    Matrix transpose() const;
    Matrix mul(const Matrix& other) const;
    Matrix add(const Matrix& other) const;
    Matrix neg() const;
    bool eq(const Matrix& other) const;
    bool is_zero() const;

    // [this | other] and [this ; other]
    Matrix hcat(const Matrix& other) const;
    Matrix vcat(const Matrix& other) const;
    static Matrix block_diag(const Matrix& a, const Matrix& b);

    std::string show() const;

private:
    RingPtr ring_;
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Elem> a_;
};

// Row-vector convenience: v * M for v of length rows().
std::vector<Elem> row_times_matrix(const std::vector<Elem>& v, const Matrix& m);

}  // namespace halg
