#pragma once

// Integer matrices with arbitrary-precision entries, Smith normal form with
// unimodular transforms, integer kernels and exact linear solves. This is the
// engine behind invariant factors, Moore-complex homotopy and tower limits.

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "shw/errors.hpp"
#include "shw/field.hpp"

namespace shw {

struct ZMat {
    std::size_t rows = 0, cols = 0;
    std::vector<Int> a;

    ZMat() = default;
    ZMat(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, Int(0)) {}

    static ZMat identity(std::size_t n) {
        ZMat m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    Int& operator()(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    const Int& operator()(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

    bool operator==(const ZMat& o) const { return rows == o.rows && cols == o.cols && a == o.a; }

    bool is_zero() const {
        for (const auto& x : a)
            if (x != 0) return false;
        return true;
    }
};

inline ZMat operator*(const ZMat& x, const ZMat& y) {
    if (x.cols != y.rows) throw InputError("integer matrix product shape mismatch");
    ZMat z(x.rows, y.cols);
    for (std::size_t i = 0; i < x.rows; ++i)
        for (std::size_t l = 0; l < x.cols; ++l) {
            if (x(i, l) == 0) continue;
            for (std::size_t j = 0; j < y.cols; ++j) z(i, j) += x(i, l) * y(l, j);
        }
    return z;
}

inline ZMat operator+(const ZMat& x, const ZMat& y) {
    if (x.rows != y.rows || x.cols != y.cols) throw InputError("integer matrix sum mismatch");
    ZMat z = x;
    for (std::size_t i = 0; i < z.a.size(); ++i) z.a[i] += y.a[i];
    return z;
}

inline ZMat operator-(const ZMat& x) {
    ZMat z = x;
    for (auto& v : z.a) v = -v;
    return z;
}

inline ZMat hstack(const ZMat& x, const ZMat& y) {
    if (x.rows != y.rows) throw InputError("hstack row mismatch");
    ZMat z(x.rows, x.cols + y.cols);
    for (std::size_t i = 0; i < x.rows; ++i) {
        for (std::size_t j = 0; j < x.cols; ++j) z(i, j) = x(i, j);
        for (std::size_t j = 0; j < y.cols; ++j) z(i, x.cols + j) = y(i, j);
    }
    return z;
}

inline ZMat transpose(const ZMat& x) {
    ZMat z(x.cols, x.rows);
    for (std::size_t i = 0; i < x.rows; ++i)
        for (std::size_t j = 0; j < x.cols; ++j) z(j, i) = x(i, j);
    return z;
}

// u * a * v = d with u, v built from elementary unimodular operations and d
// diagonal with d_1 | d_2 | ... >= 0.
struct SmithResult {
    ZMat d, u, v;
    std::vector<Int> diag() const {
        std::vector<Int> out;
        std::size_t n = std::min(d.rows, d.cols);
        for (std::size_t i = 0; i < n; ++i) out.push_back(d(i, i));
        return out;
    }
    std::size_t rank() const {
        std::size_t r = 0;
        for (const Int& x : diag())
            if (x != 0) ++r;
        return r;
    }
};

inline SmithResult smith_normal_form(ZMat m) {
    const std::size_t R = m.rows, C = m.cols;
    ZMat u = ZMat::identity(R), v = ZMat::identity(C);

    auto row_swap = [&](std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t c = 0; c < C; ++c) std::swap(m(i, c), m(j, c));
        for (std::size_t c = 0; c < R; ++c) std::swap(u(i, c), u(j, c));
    };
    auto col_swap = [&](std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t r = 0; r < R; ++r) std::swap(m(r, i), m(r, j));
        for (std::size_t r = 0; r < C; ++r) std::swap(v(r, i), v(r, j));
    };
    auto row_axpy = [&](std::size_t dst, std::size_t src, const Int& f) {
        // row dst -= f * row src
        for (std::size_t c = 0; c < C; ++c) m(dst, c) -= f * m(src, c);
        for (std::size_t c = 0; c < R; ++c) u(dst, c) -= f * u(src, c);
    };
    auto col_axpy = [&](std::size_t dst, std::size_t src, const Int& f) {
        for (std::size_t r = 0; r < R; ++r) m(r, dst) -= f * m(r, src);
        for (std::size_t r = 0; r < C; ++r) v(r, dst) -= f * v(r, src);
    };
    auto row_negate = [&](std::size_t i) {
        for (std::size_t c = 0; c < C; ++c) m(i, c) = -m(i, c);
        for (std::size_t c = 0; c < R; ++c) u(i, c) = -u(i, c);
    };

    std::size_t t = 0;
    const std::size_t N = std::min(R, C);
    while (t < N) {
        // smallest nonzero |entry| in the trailing block as pivot
        std::size_t pi = R, pj = C;
        Int best = 0;
        for (std::size_t i = t; i < R; ++i)
            for (std::size_t j = t; j < C; ++j) {
                if (m(i, j) == 0) continue;
                Int mag = abs(m(i, j));
                if (pi == R || mag < best) {
                    best = mag;
                    pi = i;
                    pj = j;
                }
            }
        if (pi == R) break;  // trailing block is zero
        row_swap(t, pi);
        col_swap(t, pj);
        if (m(t, t) < 0) row_negate(t);

        bool clean = true;
        for (std::size_t i = t + 1; i < R; ++i) {
            if (m(i, t) == 0) continue;
            Int q = m(i, t) / m(t, t);
            row_axpy(i, t, q);
            if (m(i, t) != 0) clean = false;
        }
        for (std::size_t j = t + 1; j < C; ++j) {
            if (m(t, j) == 0) continue;
            Int q = m(t, j) / m(t, t);
            col_axpy(j, t, q);
            if (m(t, j) != 0) clean = false;
        }
        if (!clean) continue;  // remainders left; pick a smaller pivot again

        // pivot must divide the remaining block, else absorb a bad entry
        bool divides = true;
        for (std::size_t i = t + 1; i < R && divides; ++i)
            for (std::size_t j = t + 1; j < C && divides; ++j)
                if (m(i, j) % m(t, t) != 0) {
                    row_axpy(t, i, Int(-1));  // row t += row i
                    divides = false;
                }
        if (!divides) continue;
        ++t;
    }
    return SmithResult{std::move(m), std::move(u), std::move(v)};
}

// Basis of { x : m x = 0 } as columns; a basis of the full kernel lattice.
inline ZMat z_kernel_basis(const ZMat& m) {
    SmithResult s = smith_normal_form(m);
    std::vector<std::size_t> zero_cols;
    for (std::size_t j = 0; j < m.cols; ++j) {
        bool z = j >= std::min(m.rows, m.cols) || s.d(j, j) == 0;
        if (z) zero_cols.push_back(j);
    }
    ZMat basis(m.cols, zero_cols.size());
    for (std::size_t k = 0; k < zero_cols.size(); ++k)
        for (std::size_t i = 0; i < m.cols; ++i) basis(i, k) = s.v(i, zero_cols[k]);
    return basis;
}

// One integer solution of m x = b, if it exists.
inline std::optional<std::vector<Int>> z_solve(const ZMat& m, const std::vector<Int>& b) {
    if (b.size() != m.rows) throw InputError("z_solve: rhs size mismatch");
    SmithResult s = smith_normal_form(m);
    std::vector<Int> c(m.rows, Int(0));
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.rows; ++j) c[i] += s.u(i, j) * b[j];
    std::vector<Int> y(m.cols, Int(0));
    std::size_t n = std::min(m.rows, m.cols);
    for (std::size_t i = 0; i < m.rows; ++i) {
        if (i < n && s.d(i, i) != 0) {
            if (c[i] % s.d(i, i) != 0) return std::nullopt;
            y[i] = c[i] / s.d(i, i);
        } else if (c[i] != 0) {
            return std::nullopt;
        }
    }
    std::vector<Int> x(m.cols, Int(0));
    for (std::size_t i = 0; i < m.cols; ++i)
        for (std::size_t j = 0; j < m.cols; ++j) x[i] += s.v(i, j) * y[j];
    return x;
}

inline ZMat z_solve_matrix(const ZMat& m, const ZMat& b) {
    ZMat x(m.cols, b.cols);
    for (std::size_t c = 0; c < b.cols; ++c) {
        std::vector<Int> col(b.rows);
        for (std::size_t i = 0; i < b.rows; ++i) col[i] = b(i, c);
        auto sol = z_solve(m, col);
        if (!sol) throw InputError("z_solve_matrix: column not in image lattice");
        for (std::size_t i = 0; i < m.cols; ++i) x(i, c) = (*sol)[i];
    }
    return x;
}

inline std::size_t z_rank(const ZMat& m) { return smith_normal_form(m).rank(); }

}  // namespace shw
