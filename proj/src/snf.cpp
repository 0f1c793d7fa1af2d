#include "halg/snf.hpp"

#include <sstream>

namespace halg {

Matrix Matrix::from_rows(const RingPtr& ring, const std::vector<std::vector<Elem>>& rows,
                         std::size_t cols) {
    Matrix m(ring, rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        require(rows[i].size() == cols, ErrorCode::Dimension, "ragged row list");
        m.set_row(i, rows[i]);
    }
    return m;
}

std::vector<Elem> Matrix::row(std::size_t i) const {
    std::vector<Elem> r(cols_);
    for (std::size_t j = 0; j < cols_; ++j) r[j] = at(i, j);
    return r;
}

void Matrix::set_row(std::size_t i, const std::vector<Elem>& r) {
    for (std::size_t j = 0; j < cols_; ++j) at(i, j) = r[j];
}

Matrix Matrix::transpose() const {
    Matrix m(ring_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
    return m;
}

Matrix Matrix::mul(const Matrix& other) const {
    require(ring_->same_ring(*other.ring_), ErrorCode::RingMismatch, "matrix ring mismatch");
    require(cols_ == other.rows_, ErrorCode::Dimension, "matrix shape mismatch in product");
    Matrix m(ring_, rows_, other.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            if (ring_->is_zero(at(i, k))) continue;
            for (std::size_t j = 0; j < other.cols_; ++j)
                m.at(i, j) = ring_->add(m.at(i, j), ring_->mul(at(i, k), other.at(k, j)));
        }
    return m;
}

Matrix Matrix::add(const Matrix& other) const {
    require(rows_ == other.rows_ && cols_ == other.cols_, ErrorCode::Dimension, "matrix shape mismatch");
    Matrix m(ring_, rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] = ring_->add(a_[i], other.a_[i]);
    return m;
}

Matrix Matrix::neg() const {
    Matrix m(ring_, rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] = ring_->neg(a_[i]);
    return m;
}

bool Matrix::eq(const Matrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_) return false;
    for (std::size_t i = 0; i < a_.size(); ++i)
        if (!ring_->eq(a_[i], other.a_[i])) return false;
    return true;
}

bool Matrix::is_zero() const {
    for (const auto& e : a_)
        if (!ring_->is_zero(e)) return false;
    return true;
}

Matrix Matrix::hcat(const Matrix& other) const {
    require(rows_ == other.rows_, ErrorCode::Dimension, "hcat row mismatch");
    Matrix m(ring_, rows_, cols_ + other.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) m.at(i, j) = at(i, j);
        for (std::size_t j = 0; j < other.cols_; ++j) m.at(i, cols_ + j) = other.at(i, j);
    }
    return m;
}

Matrix Matrix::vcat(const Matrix& other) const {
    require(cols_ == other.cols_, ErrorCode::Dimension, "vcat column mismatch");
    Matrix m(ring_, rows_ + other.rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i) m.set_row(i, row(i));
    for (std::size_t i = 0; i < other.rows_; ++i) m.set_row(rows_ + i, other.row(i));
    return m;
}

Matrix Matrix::block_diag(const Matrix& a, const Matrix& b) {
    Matrix m(a.ring(), a.rows() + b.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) m.at(i, j) = a.at(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) m.at(a.rows() + i, a.cols() + j) = b.at(i, j);
    return m;
}

std::string Matrix::show() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        if (i) os << ", ";
        os << "[";
        for (std::size_t j = 0; j < cols_; ++j) {
            if (j) os << ", ";
            os << ring_->show(at(i, j));
        }
        os << "]";
    }
    os << "]";
    return os.str();
}

std::vector<Elem> row_times_matrix(const std::vector<Elem>& v, const Matrix& m) {
    require(v.size() == m.rows(), ErrorCode::Dimension, "row-vector length mismatch");
    const Ring& R = *m.ring();
    std::vector<Elem> out(m.cols(), R.zero());
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (R.is_zero(v[i])) continue;
        for (std::size_t j = 0; j < m.cols(); ++j)
            out[j] = R.add(out[j], R.mul(v[i], m.at(i, j)));
    }
    return out;
}

namespace {

struct SnfWork {
    const Ring& R;
    Matrix A, U, V, Uinv, Vinv;

    SnfWork(const Matrix& a)
        : R(*a.ring()),
          A(a),
          U(Matrix::identity(a.ring(), a.rows())),
          V(Matrix::identity(a.ring(), a.cols())),
          Uinv(Matrix::identity(a.ring(), a.rows())),
          Vinv(Matrix::identity(a.ring(), a.cols())) {}

    // row_i <- row_i - q*row_j on A and U; inverse op tracked on Uinv.
    void row_axpy(std::size_t i, std::size_t j, const Elem& q) {
        for (std::size_t k = 0; k < A.cols(); ++k)
            A.at(i, k) = R.sub(A.at(i, k), R.mul(q, A.at(j, k)));
        for (std::size_t k = 0; k < U.cols(); ++k)
            U.at(i, k) = R.sub(U.at(i, k), R.mul(q, U.at(j, k)));
        for (std::size_t k = 0; k < Uinv.rows(); ++k)
            Uinv.at(k, j) = R.add(Uinv.at(k, j), R.mul(Uinv.at(k, i), q));
    }

    void col_axpy(std::size_t j, std::size_t i, const Elem& q) {
        // col_j <- col_j - q*col_i
        for (std::size_t k = 0; k < A.rows(); ++k)
            A.at(k, j) = R.sub(A.at(k, j), R.mul(A.at(k, i), q));
        for (std::size_t k = 0; k < V.rows(); ++k)
            V.at(k, j) = R.sub(V.at(k, j), R.mul(V.at(k, i), q));
        for (std::size_t k = 0; k < Vinv.cols(); ++k)
            Vinv.at(i, k) = R.add(Vinv.at(i, k), R.mul(q, Vinv.at(j, k)));
    }

    void row_swap(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t k = 0; k < A.cols(); ++k) std::swap(A.at(i, k), A.at(j, k));
        for (std::size_t k = 0; k < U.cols(); ++k) std::swap(U.at(i, k), U.at(j, k));
        for (std::size_t k = 0; k < Uinv.rows(); ++k) std::swap(Uinv.at(k, i), Uinv.at(k, j));
    }

    void col_swap(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t k = 0; k < A.rows(); ++k) std::swap(A.at(k, i), A.at(k, j));
        for (std::size_t k = 0; k < V.rows(); ++k) std::swap(V.at(k, i), V.at(k, j));
        for (std::size_t k = 0; k < Vinv.cols(); ++k) std::swap(Vinv.at(i, k), Vinv.at(j, k));
    }

    // row_i <- u*row_i for a unit u.
    void row_scale(std::size_t i, const Elem& u) {
        Elem w = R.inv(u);
        for (std::size_t k = 0; k < A.cols(); ++k) A.at(i, k) = R.mul(u, A.at(i, k));
        for (std::size_t k = 0; k < U.cols(); ++k) U.at(i, k) = R.mul(u, U.at(i, k));
        for (std::size_t k = 0; k < Uinv.rows(); ++k) Uinv.at(k, i) = R.mul(Uinv.at(k, i), w);
    }
};

}  // namespace

SmithForm smith_normal_form(const Matrix& A0) {
    const RingPtr ring = A0.ring();
    const Ring& R = *ring;
    require(R.is_euclidean(), ErrorCode::Capability,
            "smith normal form needs a euclidean ring, got " + R.name());

    SnfWork w(A0);
    const std::size_t n = std::min(A0.rows(), A0.cols());

    for (std::size_t t = 0; t < n; ++t) {
        // smallest-nonzero-norm pivot, ties broken by row-major position
        bool found = false;
        std::size_t pi = t, pj = t;
        Int best;
        for (std::size_t i = t; i < w.A.rows(); ++i)
            for (std::size_t j = t; j < w.A.cols(); ++j) {
                if (R.is_zero(w.A.at(i, j))) continue;
                Int norm = R.euclidean_norm(w.A.at(i, j));
                if (!found || norm < best) {
                    found = true;
                    best = norm;
                    pi = i;
                    pj = j;
                }
            }
        if (!found) break;
        w.row_swap(t, pi);
        w.col_swap(t, pj);

        // clear row and column t; pivot may need refreshing when remainders pop up
        bool dirty = true;
        while (dirty) {
            dirty = false;
            for (std::size_t i = t + 1; i < w.A.rows(); ++i) {
                if (R.is_zero(w.A.at(i, t))) continue;
                auto [q, r] = R.divmod(w.A.at(i, t), w.A.at(t, t));
                w.row_axpy(i, t, q);
                if (!R.is_zero(w.A.at(i, t))) {
                    w.row_swap(t, i);  // remainder has smaller norm; restart with it
                    dirty = true;
                }
            }
            for (std::size_t j = t + 1; j < w.A.cols(); ++j) {
                if (R.is_zero(w.A.at(t, j))) continue;
                auto [q, r] = R.divmod(w.A.at(t, j), w.A.at(t, t));
                w.col_axpy(j, t, q);
                if (!R.is_zero(w.A.at(t, j))) {
                    w.col_swap(t, j);
                    dirty = true;
                }
            }
        }
    }

    // enforce the divisibility chain d_t | d_{t+1}
    for (std::size_t t = 0; t + 1 < n; ++t) {
        for (std::size_t s = t + 1; s < n; ++s) {
            if (R.is_zero(w.A.at(s, s))) continue;
            if (R.is_zero(w.A.at(t, t))) {
                w.row_swap(t, s);
                w.col_swap(t, s);
                continue;
            }
            Elem q;
            if (R.divide_exact(w.A.at(s, s), w.A.at(t, t), q)) continue;
            // fold d_s into position (t,t) and rediagonalize the 2x2 block
            w.col_axpy(t, s, R.neg(R.one()));  // col_t += col_s
            bool dirty = true;
            while (dirty) {
                dirty = false;
                if (!R.is_zero(w.A.at(s, t))) {
                    auto [qq, rr] = R.divmod(w.A.at(s, t), w.A.at(t, t));
                    w.row_axpy(s, t, qq);
                    if (!R.is_zero(w.A.at(s, t))) {
                        w.row_swap(t, s);
                        dirty = true;
                        continue;
                    }
                }
                if (!R.is_zero(w.A.at(t, s))) {
                    auto [qq, rr] = R.divmod(w.A.at(t, s), w.A.at(t, t));
                    w.col_axpy(s, t, qq);
                    if (!R.is_zero(w.A.at(t, s))) {
                        w.col_swap(t, s);
                        dirty = true;
                    }
                }
            }
        }
    }

    // canonical associates on the diagonal
    for (std::size_t t = 0; t < n; ++t) {
        if (R.is_zero(w.A.at(t, t))) continue;
        Elem unit;
        R.canonical_associate(w.A.at(t, t), &unit);
        if (!R.is_one(unit)) w.row_scale(t, R.inv(unit));
    }

    SmithForm out{std::move(w.U), std::move(w.A), std::move(w.V), std::move(w.Uinv),
                  std::move(w.Vinv), {}};
    for (std::size_t t = 0; t < n; ++t) {
        if (!R.is_zero(out.D.at(t, t))) out.invariant_factors.push_back(out.D.at(t, t));
    }
    return out;
}

std::optional<LinearSolution> solve_linear(const Matrix& A, const std::vector<Elem>& b) {
    require(b.size() == A.rows(), ErrorCode::Dimension, "rhs length must match row count");
    const Ring& R = *A.ring();
    SmithForm snf = smith_normal_form(A);

    // A = Uinv D Vinv, so A x = b  <=>  D (Vinv x) = U b.
    std::vector<Elem> ub(A.rows(), R.zero());
    for (std::size_t i = 0; i < A.rows(); ++i) {
        Elem acc = R.zero();
        for (std::size_t j = 0; j < A.rows(); ++j)
            acc = R.add(acc, R.mul(snf.U.at(i, j), b[j]));
        ub[i] = acc;
    }

    std::size_t n = std::min(A.rows(), A.cols());
    std::vector<Elem> y(A.cols(), R.zero());
    for (std::size_t i = 0; i < A.rows(); ++i) {
        if (i < n && !R.is_zero(snf.D.at(i, i))) {
            Elem q;
            if (!R.divide_exact(ub[i], snf.D.at(i, i), q)) return std::nullopt;
            y[i] = q;
        } else if (!R.is_zero(ub[i])) {
            return std::nullopt;
        }
    }

    LinearSolution sol;
    sol.particular.assign(A.cols(), R.zero());
    for (std::size_t i = 0; i < A.cols(); ++i) {
        Elem acc = R.zero();
        for (std::size_t j = 0; j < A.cols(); ++j)
            acc = R.add(acc, R.mul(snf.V.at(i, j), y[j]));
        sol.particular[i] = acc;
    }
    for (std::size_t j = 0; j < A.cols(); ++j) {
        bool free_coord = j >= n || R.is_zero(snf.D.at(j, j));
        if (!free_coord) continue;
        std::vector<Elem> k(A.cols(), R.zero());
        for (std::size_t i = 0; i < A.cols(); ++i) k[i] = snf.V.at(i, j);
        sol.kernel.push_back(std::move(k));
    }
    return sol;
}

std::vector<std::vector<Elem>> kernel_basis(const Matrix& A) {
    std::vector<Elem> zero(A.rows(), A.ring()->zero());
    auto sol = solve_linear(A, zero);
    return sol ? sol->kernel : std::vector<std::vector<Elem>>{};
}

}  // namespace halg
