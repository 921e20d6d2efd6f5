#pragma once

// Dense exact linear algebra over a field context F (Rationals or PrimeField).
// Row-echelon elimination; over the rationals the pivot in each column is
// chosen to minimize bit-length of numerator*denominator, which limits
// coefficient blowup. Matrices are capped at SHW_MAX_MATRIX (default 2000)
// rows/columns.

#include <cstdlib>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "shw/errors.hpp"
#include "shw/field.hpp"

namespace shw {

inline std::size_t matrix_dim_cap() {
    static std::size_t cap = [] {
        if (const char* env = std::getenv("SHW_MAX_MATRIX")) {
            long v = std::atol(env);
            if (v > 0) return static_cast<std::size_t>(v);
        }
        return static_cast<std::size_t>(2000);
    }();
    return cap;
}

template <class F>
class Matrix {
  public:
    using Elem = typename F::Elem;

    Matrix() : field_(F{}), rows_(0), cols_(0) {}
    Matrix(F field, std::size_t rows, std::size_t cols)
        : field_(field), rows_(rows), cols_(cols), a_(rows * cols, field.zero()) {
        if (rows > matrix_dim_cap() || cols > matrix_dim_cap())
            throw MatrixCapExceeded("matrix dimension exceeds cap " +
                                    std::to_string(matrix_dim_cap()));
    }

    static Matrix identity(F field, std::size_t n) {
        Matrix m(field, n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
        return m;
    }

    const F& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Elem& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Elem& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    bool operator==(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) return false;
        for (std::size_t i = 0; i < a_.size(); ++i)
            if (!field_.eq(a_[i], o.a_[i])) return false;
        return true;
    }

    bool is_zero() const {
        for (const auto& x : a_)
            if (!field_.is_zero(x)) return false;
        return true;
    }

    Matrix transpose() const {
        Matrix t(field_, cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    void swap_rows(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(i, c), (*this)(j, c));
    }

  private:
    F field_;
    std::size_t rows_, cols_;
    std::vector<Elem> a_;
};

template <class F>
Matrix<F> operator*(const Matrix<F>& a, const Matrix<F>& b) {
    if (a.cols() != b.rows()) throw InputError("matrix product shape mismatch");
    const F& k = a.field();
    Matrix<F> c(k, a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t l = 0; l < a.cols(); ++l) {
            if (k.is_zero(a(i, l))) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                c(i, j) = k.add(c(i, j), k.mul(a(i, l), b(l, j)));
        }
    return c;
}

template <class F>
Matrix<F> operator+(const Matrix<F>& a, const Matrix<F>& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw InputError("matrix sum shape mismatch");
    Matrix<F> c = a;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a.field().add(a(i, j), b(i, j));
    return c;
}

template <class F>
Matrix<F> operator-(const Matrix<F>& a, const Matrix<F>& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw InputError("matrix difference shape mismatch");
    Matrix<F> c = a;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a.field().sub(a(i, j), b(i, j));
    return c;
}

template <class F>
Matrix<F> scale(const Matrix<F>& a, const typename F::Elem& s) {
    Matrix<F> c = a;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a.field().mul(a(i, j), s);
    return c;
}

template <class F>
Matrix<F> hstack(const Matrix<F>& a, const Matrix<F>& b) {
    if (a.rows() != b.rows()) throw InputError("hstack row mismatch");
    Matrix<F> c(a.field(), a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j) c(i, a.cols() + j) = b(i, j);
    }
    return c;
}

template <class F>
Matrix<F> vstack(const Matrix<F>& a, const Matrix<F>& b) {
    if (a.cols() != b.cols()) throw InputError("vstack column mismatch");
    Matrix<F> c(a.field(), a.rows() + b.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) c(a.rows() + i, j) = b(i, j);
    return c;
}

// Kronecker product, row-major block order: index (i1*r2+i2, j1*c2+j2).
template <class F>
Matrix<F> kronecker(const Matrix<F>& a, const Matrix<F>& b) {
    const F& k = a.field();
    Matrix<F> c(k, a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i1 = 0; i1 < a.rows(); ++i1)
        for (std::size_t j1 = 0; j1 < a.cols(); ++j1) {
            if (k.is_zero(a(i1, j1))) continue;
            for (std::size_t i2 = 0; i2 < b.rows(); ++i2)
                for (std::size_t j2 = 0; j2 < b.cols(); ++j2)
                    c(i1 * b.rows() + i2, j1 * b.cols() + j2) = k.mul(a(i1, j1), b(i2, j2));
        }
    return c;
}

namespace detail {

inline std::size_t pivot_weight(const Rat& x) {
    // bit length of |num| * den, the spec's blowup heuristic
    Int n = rat_num(x);
    if (n < 0) n = -n;
    Int w = n * rat_den(x);
    std::size_t bits = 0;
    while (w > 0) {
        w >>= 1;
        ++bits;
    }
    return bits;
}

template <class F>
std::size_t pick_pivot_row(const Matrix<F>& m, std::size_t col, std::size_t from_row) {
    if constexpr (std::is_same_v<F, Rationals>) {
        std::size_t best = m.rows();
        std::size_t best_w = 0;
        for (std::size_t i = from_row; i < m.rows(); ++i) {
            if (m.field().is_zero(m(i, col))) continue;
            std::size_t w = pivot_weight(m(i, col));
            if (best == m.rows() || w < best_w) {
                best = i;
                best_w = w;
            }
        }
        return best;
    } else {
        for (std::size_t i = from_row; i < m.rows(); ++i)
            if (!m.field().is_zero(m(i, col))) return i;
        return m.rows();
    }
}

}  // namespace detail

template <class F>
struct Echelon {
    Matrix<F> rref;
    std::vector<std::size_t> pivot_cols;
    std::size_t rank() const { return pivot_cols.size(); }
};

template <class F>
Echelon<F> row_reduce(Matrix<F> m) {
    const F& k = m.field();
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = detail::pick_pivot_row(m, c, r);
        if (p == m.rows()) continue;
        m.swap_rows(r, p);
        typename F::Elem pivinv = k.inv(m(r, c));
        for (std::size_t j = c; j < m.cols(); ++j) m(r, j) = k.mul(m(r, j), pivinv);
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || k.is_zero(m(i, c))) continue;
            typename F::Elem f = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j)
                m(i, j) = k.sub(m(i, j), k.mul(f, m(r, j)));
        }
        pivots.push_back(c);
        ++r;
    }
    return Echelon<F>{std::move(m), std::move(pivots)};
}

template <class F>
std::size_t rank(const Matrix<F>& m) {
    return row_reduce(m).rank();
}

// Basis of the right kernel, returned as columns of a cols x nullity matrix.
template <class F>
Matrix<F> kernel_basis(const Matrix<F>& m) {
    const F& k = m.field();
    Echelon<F> e = row_reduce(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t c : e.pivot_cols) is_pivot[c] = true;
    std::size_t nullity = m.cols() - e.rank();
    Matrix<F> basis(k, m.cols(), nullity);
    std::size_t v = 0;
    for (std::size_t c = 0; c < m.cols(); ++c) {
        if (is_pivot[c]) continue;
        basis(c, v) = k.one();
        for (std::size_t r = 0; r < e.rank(); ++r)
            basis(e.pivot_cols[r], v) = k.neg(e.rref(r, c));
        ++v;
    }
    return basis;
}

// Solve m * x = b for a single column b; returns one solution if any.
template <class F>
std::optional<std::vector<typename F::Elem>> solve(const Matrix<F>& m,
                                                   const std::vector<typename F::Elem>& b) {
    if (b.size() != m.rows()) throw InputError("solve: rhs size mismatch");
    const F& k = m.field();
    Matrix<F> aug(k, m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
        aug(i, m.cols()) = b[i];
    }
    Echelon<F> e = row_reduce(std::move(aug));
    std::vector<typename F::Elem> x(m.cols(), k.zero());
    for (std::size_t r = 0; r < e.rank(); ++r) {
        if (e.pivot_cols[r] == m.cols()) return std::nullopt;  // inconsistent
        x[e.pivot_cols[r]] = e.rref(r, m.cols());
    }
    return x;
}

// Solve m * X = B columnwise; all columns must be solvable.
template <class F>
Matrix<F> solve_matrix(const Matrix<F>& m, const Matrix<F>& b) {
    const F& k = m.field();
    Matrix<F> x(k, m.cols(), b.cols());
    for (std::size_t c = 0; c < b.cols(); ++c) {
        std::vector<typename F::Elem> col(b.rows());
        for (std::size_t i = 0; i < b.rows(); ++i) col[i] = b(i, c);
        auto sol = solve(m, col);
        if (!sol) throw InputError("solve_matrix: column not in span");
        for (std::size_t i = 0; i < m.cols(); ++i) x(i, c) = (*sol)[i];
    }
    return x;
}

// dim span(big) - dim span(small); requires span(small) inside span(big).
template <class F>
std::size_t quotient_dim(const Matrix<F>& big, const Matrix<F>& small) {
    if (big.rows() != small.rows())
        throw InputError("quotient_dim: ambient dimension mismatch");
    std::size_t rb = rank(big);
    std::size_t rs = rank(small);
    if (rank(hstack(big, small)) != rb)
        throw ContainmentViolation("small span is not contained in big span");
    return rb - rs;
}

template <class F>
std::vector<typename F::Elem> apply(const Matrix<F>& m,
                                    const std::vector<typename F::Elem>& v) {
    if (v.size() != m.cols()) throw InputError("apply: size mismatch");
    const F& k = m.field();
    std::vector<typename F::Elem> out(m.rows(), k.zero());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (!k.is_zero(m(i, j))) out[i] = k.add(out[i], k.mul(m(i, j), v[j]));
    return out;
}

template <class F>
Matrix<F> column(const Matrix<F>& m, std::size_t j) {
    Matrix<F> c(m.field(), m.rows(), 1);
    for (std::size_t i = 0; i < m.rows(); ++i) c(i, 0) = m(i, j);
    return c;
}

}  // namespace shw
