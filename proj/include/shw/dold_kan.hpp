#pragma once

// The dual Dold-Puppe correspondence between cosimplicial modules and
// nonnegative cochain complexes, plus the Eilenberg-Zilber comparison maps.
// Normalization uses the kernel-of-codegeneracies model, with explicit
// inclusions, so the comparison maps are honest matrices.

#include <algorithm>
#include <vector>

#include "shw/errors.hpp"
#include "shw/matrix.hpp"
#include "shw/simplicial_group.hpp"  // surjections()

namespace shw {

// A complex concentrated in degrees 0..top; degrees above top are zero.
template <class F>
struct CochainComplex {
    F field;
    std::vector<std::size_t> dims;  // degrees 0..top
    std::vector<Matrix<F>> d;       // d[i] : dims[i] -> dims[i+1], i < top

    std::size_t top() const { return dims.empty() ? 0 : dims.size() - 1; }

    void validate() const {
        if (d.size() + 1 != dims.size() && !(dims.empty() && d.empty()))
            throw InputError("complex needs one differential per adjacent pair");
        for (std::size_t i = 0; i < d.size(); ++i) {
            if (d[i].rows() != dims[i + 1] || d[i].cols() != dims[i])
                throw InputError("differential shape mismatch at degree " + std::to_string(i));
            if (i + 1 < d.size() && !(d[i + 1] * d[i]).is_zero())
                throw InputError("d∘d != 0 at degree " + std::to_string(i));
        }
    }

    bool operator==(const CochainComplex& o) const { return dims == o.dims && d == o.d; }
};

// k[n]: k concentrated in degree n.
template <class F>
CochainComplex<F> unit_complex(F field, int n, int top) {
    CochainComplex<F> c;
    c.field = field;
    c.dims.assign(top + 1, 0);
    c.dims[n] = 1;
    for (int i = 0; i < top; ++i) c.d.push_back(Matrix<F>(field, c.dims[i + 1], c.dims[i]));
    return c;
}

// k<n-1,n>: identity differential from degree n-1 to n; k<-1,0> = 0.
template <class F>
CochainComplex<F> disc_complex(F field, int n, int top) {
    CochainComplex<F> c;
    c.field = field;
    c.dims.assign(top + 1, 0);
    if (n >= 1) {
        c.dims[n - 1] = 1;
        c.dims[n] = 1;
    }
    for (int i = 0; i < top; ++i) {
        Matrix<F> m(field, c.dims[i + 1], c.dims[i]);
        if (n >= 1 && i == n - 1) m(0, 0) = field.one();
        c.d.push_back(m);
    }
    return c;
}

template <class F>
struct CosimplicialModule {
    F field;
    std::vector<std::size_t> dims;               // levels 0..top
    std::vector<std::vector<Matrix<F>>> coface;  // coface[n][i] : n -> n+1, i <= n+1
    std::vector<std::vector<Matrix<F>>> codegen; // codegen[n][j] : n+1 -> n, j <= n

    std::size_t top() const { return dims.empty() ? 0 : dims.size() - 1; }

    void validate() const {
        for (std::size_t n = 0; n + 1 < dims.size(); ++n) {
            if (coface[n].size() != n + 2 || codegen[n].size() != n + 1)
                throw InputError("cosimplicial structure map counts wrong");
            for (const auto& m : coface[n])
                if (m.rows() != dims[n + 1] || m.cols() != dims[n])
                    throw InputError("coface shape mismatch");
            for (const auto& m : codegen[n])
                if (m.rows() != dims[n] || m.cols() != dims[n + 1])
                    throw InputError("codegeneracy shape mismatch");
        }
        for (std::size_t n = 0; n + 2 < dims.size(); ++n) {
            // d^j d^i = d^i d^{j-1} for i < j
            for (std::size_t j = 0; j <= n + 2; ++j)
                for (std::size_t i = 0; i < j; ++i)
                    if (!(coface[n + 1][j] * coface[n][i] ==
                          coface[n + 1][i] * coface[n][j - 1]))
                        throw InputError("coface identity fails");
            // s^j s^i = s^i s^{j+1} for i <= j
            for (std::size_t j = 0; j <= n; ++j)
                for (std::size_t i = 0; i <= j; ++i)
                    if (!(codegen[n][j] * codegen[n + 1][i] ==
                          codegen[n][i] * codegen[n + 1][j + 1]))
                        throw InputError("codegeneracy identity fails");
        }
        // s^j d^i mixed identities
        for (std::size_t n = 1; n < dims.size(); ++n)
            for (std::size_t j = 0; j + 1 <= n; ++j)
                for (std::size_t i = 0; i <= n; ++i) {
                    Matrix<F> comp = codegen[n - 1][j] * coface[n - 1][i];
                    Matrix<F> expect(field, dims[n - 1], dims[n - 1]);
                    if (i == j || i == j + 1)
                        expect = Matrix<F>::identity(field, dims[n - 1]);
                    else if (i < j)
                        expect = coface[n - 2][i] * codegen[n - 2][j - 1];
                    else
                        expect = coface[n - 2][i - 1] * codegen[n - 2][j];
                    if (!(comp == expect)) throw InputError("s^j d^i identity fails");
                }
    }
};

// ------------------------------------------------------------- normalize

template <class F>
struct Normalized {
    CochainComplex<F> complex;
    std::vector<Matrix<F>> inclusion;  // N^n -> level n
};

template <class F>
Matrix<F> stack_codegens(const CosimplicialModule<F>& m, std::size_t n) {
    Matrix<F> st(m.field, 0, m.dims[n]);
    for (std::size_t j = 0; j + 1 <= n; ++j) st = vstack(st, m.codegen[n - 1][j]);
    return st;
}

// N^n = intersection of ker(s^j); differential = alternating coface sum.
template <class F>
Normalized<F> normalize_full(const CosimplicialModule<F>& m) {
    Normalized<F> out;
    out.complex.field = m.field;
    for (std::size_t n = 0; n < m.dims.size(); ++n) {
        Matrix<F> incl = n == 0 ? Matrix<F>::identity(m.field, m.dims[0])
                                : kernel_basis(stack_codegens(m, n));
        out.inclusion.push_back(incl);
        out.complex.dims.push_back(incl.cols());
    }
    for (std::size_t n = 0; n + 1 < m.dims.size(); ++n) {
        Matrix<F> alt(m.field, m.dims[n + 1], m.dims[n]);
        for (std::size_t i = 0; i <= n + 1; ++i)
            alt = (i % 2 == 0) ? alt + m.coface[n][i] : alt - m.coface[n][i];
        out.complex.d.push_back(solve_matrix(out.inclusion[n + 1], alt * out.inclusion[n]));
    }
    out.complex.validate();
    return out;
}

template <class F>
CochainComplex<F> normalize(const CosimplicialModule<F>& m) {
    return normalize_full(m).complex;
}

// ----------------------------------------------------------------- gamma

// Gamma(C): level m = direct sum of C^k over surjections [m] ->> [k]. For a
// simplex operator alpha the block from source summand eta to target summand
// eta' comes from the epi-mono factorization eta'∘alpha = eps∘eta: the
// identity when eps = id, the differential when eps = delta^0, zero else.
template <class F>
CosimplicialModule<F> gamma(const CochainComplex<F>& c, std::size_t levels) {
    struct Summand {
        std::vector<int> eta;
        std::size_t k;
    };
    std::vector<std::vector<Summand>> summands(levels + 1);
    for (std::size_t m = 0; m <= levels; ++m)
        for (std::size_t k = 0; k < c.dims.size() && k <= m; ++k) {
            if (c.dims[k] == 0) continue;
            for (auto& eta : surjections(static_cast<int>(m), static_cast<int>(k)))
                summands[m].push_back(Summand{eta, k});
        }

    auto structure_map = [&](std::size_t a, std::size_t b, bool is_coface,
                             std::size_t op) {
        const auto& src = summands[a];
        const auto& dst = summands[b];
        std::vector<std::size_t> roff, coff;
        std::size_t rows = 0, cols = 0;
        for (const auto& s : dst) {
            roff.push_back(rows);
            rows += c.dims[s.k];
        }
        for (const auto& s : src) {
            coff.push_back(cols);
            cols += c.dims[s.k];
        }
        Matrix<F> out(c.field, rows, cols);
        for (std::size_t t = 0; t < dst.size(); ++t) {
            std::vector<int> comp(a + 1);
            for (std::size_t x = 0; x <= a; ++x) {
                int ax = is_coface
                             ? (static_cast<int>(x) < static_cast<int>(op)
                                    ? static_cast<int>(x)
                                    : static_cast<int>(x) + 1)
                             : (static_cast<int>(x) <= static_cast<int>(op)
                                    ? static_cast<int>(x)
                                    : static_cast<int>(x) - 1);
                comp[x] = dst[t].eta[ax];
            }
            std::vector<int> hit;
            for (int v = 0; v <= static_cast<int>(dst[t].k); ++v)
                if (std::find(comp.begin(), comp.end(), v) != comp.end()) hit.push_back(v);
            std::vector<int> eta(comp.size());
            for (std::size_t x = 0; x < comp.size(); ++x)
                eta[x] =
                    static_cast<int>(std::find(hit.begin(), hit.end(), comp[x]) - hit.begin());
            std::size_t kpp = hit.size() - 1;
            for (std::size_t s = 0; s < src.size(); ++s) {
                if (src[s].k != kpp || !(src[s].eta == eta)) continue;
                if (hit.size() == dst[t].k + 1) {
                    for (std::size_t e = 0; e < c.dims[kpp]; ++e)
                        out(roff[t] + e, coff[s] + e) = c.field.one();
                } else if (hit.size() == dst[t].k && hit.front() == 1 && kpp < c.d.size()) {
                    const Matrix<F>& dd = c.d[kpp];
                    for (std::size_t r = 0; r < dd.rows(); ++r)
                        for (std::size_t cc = 0; cc < dd.cols(); ++cc)
                            out(roff[t] + r, coff[s] + cc) = dd(r, cc);
                }
                break;
            }
        }
        return out;
    };

    CosimplicialModule<F> m;
    m.field = c.field;
    for (const auto& level : summands) {
        std::size_t dim = 0;
        for (const auto& s : level) dim += c.dims[s.k];
        m.dims.push_back(dim);
    }
    m.coface.resize(levels + 1);
    m.codegen.resize(levels + 1);
    for (std::size_t n = 0; n < levels; ++n) {
        for (std::size_t i = 0; i <= n + 1; ++i)
            m.coface[n].push_back(structure_map(n, n + 1, true, i));
        for (std::size_t j = 0; j <= n; ++j)
            m.codegen[n].push_back(structure_map(n + 1, n, false, j));
    }
    return m;
}

// ------------------------------------------------------------ cohomology

template <class F>
std::vector<std::size_t> betti_numbers(const CochainComplex<F>& c, std::size_t range) {
    if (!c.dims.size() || range > c.top())
        throw RangeExceeded("cohomology range exceeds available degrees");
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i <= range; ++i) {
        std::size_t ker = (i < c.d.size()) ? c.dims[i] - rank(c.d[i]) : c.dims[i];
        std::size_t img = (i == 0) ? 0 : rank(c.d[i - 1]);
        out.push_back(ker - img);
    }
    return out;
}

// For a module the top normalized degree has no outgoing differential yet,
// so cohomology is only available strictly below the top level.
template <class F>
std::vector<std::size_t> betti_numbers(const CosimplicialModule<F>& m, std::size_t range) {
    if (!m.dims.size() || range + 1 > m.top())
        throw RangeExceeded("cohomology range needs range < top level");
    return betti_numbers(normalize(m), range);
}

template <class F>
struct CohomologyBasis {
    std::vector<Matrix<F>> reps;    // reps[i] : dims[i] x betti_i, cocycle columns
    std::vector<Matrix<F>> images;  // images[i] : basis of im d^{i-1}
};

template <class F>
CohomologyBasis<F> cohomology_basis(const CochainComplex<F>& c, std::size_t range) {
    const F& k = c.field;
    CohomologyBasis<F> out;
    for (std::size_t i = 0; i <= range; ++i) {
        Matrix<F> ker =
            (i < c.d.size()) ? kernel_basis(c.d[i]) : Matrix<F>::identity(k, c.dims[i]);
        Matrix<F> img(k, c.dims[i], 0);
        if (i > 0) {
            Echelon<F> e = row_reduce(c.d[i - 1].transpose());
            Matrix<F> basis(k, c.dims[i], e.rank());
            for (std::size_t r = 0; r < e.rank(); ++r)
                for (std::size_t cc = 0; cc < c.dims[i]; ++cc) basis(cc, r) = e.rref(r, cc);
            img = basis;
        }
        Matrix<F> combined = hstack(img, ker);
        Echelon<F> e = row_reduce(combined);
        Matrix<F> reps(k, c.dims[i], 0);
        for (std::size_t p : e.pivot_cols)
            if (p >= img.cols()) reps = hstack(reps, column(ker, p - img.cols()));
        out.reps.push_back(reps);
        out.images.push_back(img);
    }
    return out;
}

template <class F>
std::vector<typename F::Elem> class_coordinates(const CohomologyBasis<F>& basis, std::size_t i,
                                                const std::vector<typename F::Elem>& z,
                                                const F& field) {
    Matrix<F> sys = hstack(basis.reps[i], basis.images[i]);
    Matrix<F> rhs(field, z.size(), 1);
    for (std::size_t r = 0; r < z.size(); ++r) rhs(r, 0) = z[r];
    Matrix<F> sol = solve_matrix(sys, rhs);
    std::vector<typename F::Elem> out;
    for (std::size_t r = 0; r < basis.reps[i].cols(); ++r) out.push_back(sol(r, 0));
    return out;
}

// ------------------------------------------------------ tensor structures

// Levelwise tensor with the diagonal cosimplicial structure.
template <class F>
CosimplicialModule<F> tensor(const CosimplicialModule<F>& a, const CosimplicialModule<F>& b) {
    if (!(a.field == b.field)) throw CharMismatch("tensor over different fields");
    CosimplicialModule<F> t;
    t.field = a.field;
    std::size_t levels = std::min(a.dims.size(), b.dims.size());
    for (std::size_t n = 0; n < levels; ++n) t.dims.push_back(a.dims[n] * b.dims[n]);
    t.coface.resize(levels);
    t.codegen.resize(levels);
    for (std::size_t n = 0; n + 1 < levels; ++n) {
        for (std::size_t i = 0; i <= n + 1; ++i)
            t.coface[n].push_back(kronecker(a.coface[n][i], b.coface[n][i]));
        for (std::size_t j = 0; j <= n; ++j)
            t.codegen[n].push_back(kronecker(a.codegen[n][j], b.codegen[n][j]));
    }
    return t;
}

// Tensor complex with Koszul sign d(x⊗y) = dx⊗y + (-1)^p x⊗dy, blocks by
// ascending first-factor degree.
template <class F>
struct TensorComplex {
    CochainComplex<F> complex;
    std::vector<std::vector<std::size_t>> offset;  // offset[n][p]
};

template <class F>
TensorComplex<F> tensor_complex(const CochainComplex<F>& a, const CochainComplex<F>& b,
                                std::size_t top) {
    const F& k = a.field;
    TensorComplex<F> t;
    t.complex.field = k;
    auto adim = [&](std::size_t p) { return p < a.dims.size() ? a.dims[p] : 0; };
    auto bdim = [&](std::size_t q) { return q < b.dims.size() ? b.dims[q] : 0; };
    for (std::size_t n = 0; n <= top; ++n) {
        std::vector<std::size_t> off;
        std::size_t dim = 0;
        for (std::size_t p = 0; p <= n; ++p) {
            off.push_back(dim);
            dim += adim(p) * bdim(n - p);
        }
        t.offset.push_back(off);
        t.complex.dims.push_back(dim);
    }
    for (std::size_t n = 0; n < top; ++n) {
        Matrix<F> d(k, t.complex.dims[n + 1], t.complex.dims[n]);
        for (std::size_t p = 0; p <= n; ++p) {
            std::size_t q = n - p;
            std::size_t ad = adim(p), bd = bdim(q);
            if (ad * bd == 0) continue;
            if (adim(p + 1) > 0 && p < a.d.size()) {
                const Matrix<F>& da = a.d[p];
                for (std::size_t r = 0; r < da.rows(); ++r)
                    for (std::size_t c = 0; c < da.cols(); ++c) {
                        if (k.is_zero(da(r, c))) continue;
                        for (std::size_t y = 0; y < bd; ++y)
                            d(t.offset[n + 1][p + 1] + r * bd + y,
                              t.offset[n][p] + c * bd + y) = da(r, c);
                    }
            }
            if (bdim(q + 1) > 0 && q < b.d.size()) {
                const Matrix<F>& db = b.d[q];
                typename F::Elem sign = (p % 2 == 0) ? k.one() : k.neg(k.one());
                std::size_t bd1 = db.rows();
                for (std::size_t r = 0; r < db.rows(); ++r)
                    for (std::size_t c = 0; c < db.cols(); ++c) {
                        if (k.is_zero(db(r, c))) continue;
                        for (std::size_t x = 0; x < ad; ++x)
                            d(t.offset[n + 1][p] + x * bd1 + r,
                              t.offset[n][p] + x * bd + c) = k.mul(sign, db(r, c));
                    }
            }
        }
        t.complex.d.push_back(d);
    }
    t.complex.validate();
    return t;
}

template <class F>
struct ChainMap {
    std::vector<Matrix<F>> at;  // at[n] : src dims[n] -> dst dims[n]

    void check(const CochainComplex<F>& src, const CochainComplex<F>& dst) const {
        for (std::size_t n = 0; n + 1 < at.size() && n < src.d.size() && n < dst.d.size(); ++n)
            if (!(at[n + 1] * src.d[n] == dst.d[n] * at[n]))
                throw InputError("not a chain map at degree " + std::to_string(n));
    }
};

namespace detail {

// s^{v_1} ∘ ... ∘ s^{v_r} : level n -> n-r, rightmost applied first
template <class F>
Matrix<F> codegen_composite(const CosimplicialModule<F>& m, std::size_t n,
                            const std::vector<int>& v) {
    Matrix<F> out = Matrix<F>::identity(m.field, m.dims[n]);
    std::size_t lvl = n;
    for (std::size_t t = v.size(); t-- > 0;) {
        out = m.codegen[lvl - 1][v[t]] * out;
        --lvl;
    }
    return out;
}

// d^n ∘ ... ∘ d^{p+1} : level p -> n (front-face transpose)
template <class F>
Matrix<F> coface_front(const CosimplicialModule<F>& m, std::size_t p, std::size_t n) {
    Matrix<F> out = Matrix<F>::identity(m.field, m.dims[p]);
    for (std::size_t l = p; l < n; ++l) out = m.coface[l][l + 1] * out;
    return out;
}

// (d^0)^{n-q} : level q -> n (back-face transpose)
template <class F>
Matrix<F> coface_back(const CosimplicialModule<F>& m, std::size_t q, std::size_t n) {
    Matrix<F> out = Matrix<F>::identity(m.field, m.dims[q]);
    for (std::size_t l = q; l < n; ++l) out = m.coface[l][0] * out;
    return out;
}

inline int shuffle_sign(const std::vector<int>& mu, const std::vector<int>& nu) {
    std::vector<int> perm = mu;
    perm.insert(perm.end(), nu.begin(), nu.end());
    int inv = 0;
    for (std::size_t i = 0; i < perm.size(); ++i)
        for (std::size_t j = i + 1; j < perm.size(); ++j)
            if (perm[i] > perm[j]) ++inv;
    return inv % 2 == 0 ? 1 : -1;
}

inline void subsets_of(int n, int k, std::vector<int>& cur,
                       std::vector<std::vector<int>>& out, int from = 0) {
    if (k == 0) {
        out.push_back(cur);
        return;
    }
    for (int v = from; v <= n - k; ++v) {
        cur.push_back(v);
        subsets_of(n, k - 1, cur, out, v + 1);
    }
}

}  // namespace detail

// Alexander-Whitney direction N(m1 ⊗ m2) -> N(m1) ⊗ N(m2): the transposed
// shuffle map, codegeneracy composites with shuffle signs.
template <class F>
ChainMap<F> alexander_whitney(const CosimplicialModule<F>& m1, const CosimplicialModule<F>& m2,
                              std::size_t top) {
    if (!(m1.field == m2.field)) throw CharMismatch("alexander_whitney: field mismatch");
    const F& k = m1.field;
    CosimplicialModule<F> t = tensor(m1, m2);
    Normalized<F> nt = normalize_full(t);
    Normalized<F> n1 = normalize_full(m1);
    Normalized<F> n2 = normalize_full(m2);
    TensorComplex<F> tc = tensor_complex(n1.complex, n2.complex, top);

    ChainMap<F> map;
    for (std::size_t n = 0; n <= top && n < t.dims.size(); ++n) {
        Matrix<F> full(k, tc.complex.dims[n], t.dims[n]);
        for (std::size_t p = 0; p <= n; ++p) {
            std::size_t q = n - p;
            std::size_t rows = n1.complex.dims[p] * n2.complex.dims[q];
            if (rows == 0) continue;
            std::vector<std::vector<int>> mus;
            std::vector<int> cur;
            detail::subsets_of(static_cast<int>(n), static_cast<int>(p), cur, mus);
            Matrix<F> block(k, m1.dims[p] * m2.dims[q], t.dims[n]);
            for (const auto& mu : mus) {
                std::vector<int> nu;
                for (int v = 0; v < static_cast<int>(n); ++v)
                    if (std::find(mu.begin(), mu.end(), v) == mu.end()) nu.push_back(v);
                int sgn = detail::shuffle_sign(mu, nu);
                Matrix<F> f1 = detail::codegen_composite(m1, n, nu);  // to level p
                Matrix<F> f2 = detail::codegen_composite(m2, n, mu);  // to level q
                Matrix<F> term = kronecker(f1, f2);
                block = (sgn > 0) ? block + term : block - term;
            }
            Matrix<F> incl = kronecker(n1.inclusion[p], n2.inclusion[q]);
            Matrix<F> coords = solve_matrix(incl, block);
            for (std::size_t r = 0; r < coords.rows(); ++r)
                for (std::size_t c = 0; c < coords.cols(); ++c)
                    full(tc.offset[n][p] + r, c) = coords(r, c);
        }
        map.at.push_back(full * nt.inclusion[n]);
    }
    map.check(nt.complex, tc.complex);
    return map;
}

// Eilenberg-Zilber direction N(m1) ⊗ N(m2) -> N(m1 ⊗ m2): the transposed
// front-face/back-face map, coface composites, no signs.
template <class F>
ChainMap<F> eilenberg_zilber(const CosimplicialModule<F>& m1, const CosimplicialModule<F>& m2,
                             std::size_t top) {
    if (!(m1.field == m2.field)) throw CharMismatch("eilenberg_zilber: field mismatch");
    const F& k = m1.field;
    CosimplicialModule<F> t = tensor(m1, m2);
    Normalized<F> nt = normalize_full(t);
    Normalized<F> n1 = normalize_full(m1);
    Normalized<F> n2 = normalize_full(m2);
    TensorComplex<F> tc = tensor_complex(n1.complex, n2.complex, top);

    ChainMap<F> map;
    for (std::size_t n = 0; n <= top && n < t.dims.size(); ++n) {
        Matrix<F> into_level(k, t.dims[n], tc.complex.dims[n]);
        for (std::size_t p = 0; p <= n; ++p) {
            std::size_t q = n - p;
            if (n1.complex.dims[p] * n2.complex.dims[q] == 0) continue;
            Matrix<F> f = detail::coface_front(m1, p, n) * n1.inclusion[p];
            Matrix<F> b = detail::coface_back(m2, q, n) * n2.inclusion[q];
            Matrix<F> blk = kronecker(f, b);
            for (std::size_t r = 0; r < blk.rows(); ++r)
                for (std::size_t c = 0; c < blk.cols(); ++c)
                    into_level(r, tc.offset[n][p] + c) = blk(r, c);
        }
        map.at.push_back(solve_matrix(nt.inclusion[n], into_level));
    }
    map.check(tc.complex, nt.complex);
    return map;
}

}  // namespace shw
