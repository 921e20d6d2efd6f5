#pragma once

// Simplicial abelian groups with finitely generated levels, the chain-side
// Dold-Kan construction Gamma(A[n]) (Eilenberg-MacLane objects), integral
// Moore homotopy, the W-bar classifying-space construction (abelian and
// finite-group flavours), and K(G,M,n) as W-bar of a semidirect product.

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "shw/abelian.hpp"
#include "shw/errors.hpp"
#include "shw/simplicial.hpp"

namespace shw {

// order-preserving surjections [m] ->> [k], as value vectors
inline std::vector<std::vector<int>> surjections(int m, int k) {
    std::vector<std::vector<int>> out;
    if (k > m || k < 0) return out;
    std::vector<int> cur(m + 1);
    // choose the k positions in 1..m where the value jumps by one
    std::vector<int> jump;
    auto rec = [&](auto&& self, int next, int remaining) -> void {
        if (remaining == 0) {
            int v = 0;
            std::size_t t = 0;
            for (int i = 0; i <= m; ++i) {
                if (t < jump.size() && jump[t] == i) {
                    ++v;
                    ++t;
                }
                cur[i] = v;
            }
            out.push_back(cur);
            return;
        }
        for (int j = next; j + remaining - 1 <= m; ++j) {
            jump.push_back(j);
            self(self, j + 1, remaining - 1);
            jump.pop_back();
        }
    };
    rec(rec, 1, k);
    return out;
}

inline bool is_surjection_onto(const std::vector<int>& f, int k) {
    std::vector<bool> hit(k + 1, false);
    for (int v : f) {
        if (v < 0 || v > k) return false;
        hit[v] = true;
    }
    return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

struct SimplicialAbGroup {
    int dim_cap = 0;
    std::vector<AbGens> level;           // 0..dim_cap
    std::vector<std::vector<ZMat>> face; // face[m][i] : level m -> m-1, m >= 1
    std::vector<std::vector<ZMat>> degen;// degen[m][j] : level m -> m+1, m < dim_cap

    void validate() const {
        for (int m = 1; m <= dim_cap; ++m) {
            if (static_cast<int>(face[m].size()) != m + 1)
                throw InputError("level needs m+1 faces");
            for (const ZMat& d : face[m])
                if (!is_hom(level[m - 1], level[m], d))
                    throw InputError("face map is not a homomorphism");
        }
        for (int m = 0; m < dim_cap; ++m) {
            if (static_cast<int>(degen[m].size()) != m + 1)
                throw InputError("level needs m+1 degeneracies");
            for (const ZMat& s : degen[m])
                if (!is_hom(level[m + 1], level[m], s))
                    throw InputError("degeneracy map is not a homomorphism");
        }
        // simplicial identities as matrix identities modulo torsion
        for (int m = 2; m <= dim_cap; ++m)
            for (int j = 1; j <= m; ++j)
                for (int i = 0; i < j; ++i)
                    if (!hom_eq(level[m - 2], face[m - 1][i] * face[m][j],
                                face[m - 1][j - 1] * face[m][i]))
                        throw InputError("d_i d_j identity fails");
        for (int m = 0; m + 2 <= dim_cap; ++m)
            for (int i = 0; i <= m; ++i)
                for (int j = i; j <= m; ++j)
                    if (!hom_eq(level[m + 2], degen[m + 1][i] * degen[m][j],
                                degen[m + 1][j + 1] * degen[m][i]))
                        throw InputError("s_i s_j identity fails");
        for (int m = 1; m <= dim_cap; ++m)
            for (int i = 0; i <= m; ++i)
                for (int j = 0; j < m; ++j) {
                    ZMat comp = face[m][i] * degen[m - 1][j];
                    ZMat expect;
                    if (i < j)
                        expect = degen[m - 2][j - 1] * face[m - 1][i];
                    else if (i == j || i == j + 1)
                        expect = ZMat::identity(level[m - 1].size());
                    else
                        expect = degen[m - 2][j] * face[m - 1][i - 1];
                    if (!hom_eq(level[m - 1], comp, expect))
                        throw InputError("d_i s_j identity fails");
                }
    }
};

// Gamma(A[n]): level m = A^{surjections([m],[n])}; structure maps are blockwise
// identities along composition-with-surjectivity, zero otherwise.
inline SimplicialAbGroup eilenberg_maclane(const FgAbGroup& a, int n, int dim_cap) {
    if (n < 0 || n > dim_cap)
        throw DimCapExceeded("eilenberg_maclane needs 0 <= n <= dim_cap");
    SimplicialAbGroup x;
    x.dim_cap = dim_cap;
    AbGens gens = AbGens::from_group(a);
    std::size_t g = gens.size();

    std::vector<std::vector<std::vector<int>>> surj(dim_cap + 1);
    std::vector<std::map<std::vector<int>, int>> index(dim_cap + 1);
    for (int m = 0; m <= dim_cap; ++m) {
        surj[m] = surjections(m, n);
        for (std::size_t s = 0; s < surj[m].size(); ++s) index[m][surj[m][s]] = static_cast<int>(s);
        x.level.push_back(gens.repeat(surj[m].size()));
    }

    auto block_map = [&](int m_src, int m_dst, auto&& reindex) {
        ZMat out(g * surj[m_dst].size(), g * surj[m_src].size());
        for (std::size_t s = 0; s < surj[m_src].size(); ++s) {
            int t = reindex(surj[m_src][s]);
            if (t < 0) continue;
            for (std::size_t e = 0; e < g; ++e) out(t * g + e, s * g + e) = 1;
        }
        return out;
    };

    x.face.resize(dim_cap + 1);
    x.degen.resize(dim_cap + 1);
    for (int m = 1; m <= dim_cap; ++m)
        for (int i = 0; i <= m; ++i)
            x.face[m].push_back(block_map(m, m - 1, [&](const std::vector<int>& eta) {
                std::vector<int> c(m);
                for (int t = 0; t < m; ++t) c[t] = eta[t < i ? t : t + 1];
                if (!is_surjection_onto(c, n)) return -1;
                return index[m - 1].at(c);
            }));
    for (int m = 0; m < dim_cap; ++m)
        for (int j = 0; j <= m; ++j)
            x.degen[m].push_back(block_map(m, m + 1, [&](const std::vector<int>& eta) {
                std::vector<int> c(m + 2);
                for (int t = 0; t <= m + 1; ++t) c[t] = eta[t <= j ? t : t - 1];
                return index[m + 1].at(c);
            }));
    return x;
}

// Homology of the unnormalized chain complex (chain homotopy equivalent to
// the Moore complex), in invariant-factor form.
inline std::vector<FgAbGroup> homotopy_groups_moore(const SimplicialAbGroup& x, int range) {
    if (range + 1 > x.dim_cap)
        throw RangeExceeded("homotopy range needs range + 1 <= dim_cap");
    std::vector<AbGens> levels;
    std::vector<ZMat> boundary;
    for (int m = 0; m <= range + 1; ++m) levels.push_back(x.level[m]);
    for (int m = 1; m <= range + 1; ++m) {
        ZMat d(x.level[m - 1].size(), x.level[m].size());
        for (int i = 0; i <= m; ++i) {
            const ZMat& f = x.face[m][i];
            for (std::size_t r = 0; r < d.rows; ++r)
                for (std::size_t c = 0; c < d.cols; ++c)
                    d(r, c) += (i % 2 == 0 ? f(r, c) : -f(r, c));
        }
        boundary.push_back(d);
    }
    AbComplex complex(levels, boundary);
    std::vector<FgAbGroup> out;
    for (int m = 0; m <= range; ++m) out.push_back(complex.homology(m));
    return out;
}

// W-bar of a simplicial abelian group: level m = H_{m-1} x ... x H_0.
inline SimplicialAbGroup wbar_ab(const SimplicialAbGroup& h) {
    SimplicialAbGroup w;
    w.dim_cap = h.dim_cap + 1;  // level m of W-bar only needs H up to m-1
    w.level.resize(w.dim_cap + 1);
    w.face.resize(w.dim_cap + 1);
    w.degen.resize(w.dim_cap + 1);

    // offsets of the component H_{m-1-r} inside level m
    auto comp_sizes = [&](int m) {
        std::vector<std::size_t> sz;
        for (int r = 0; r < m; ++r) sz.push_back(h.level[m - 1 - r].size());
        return sz;
    };
    for (int m = 0; m <= w.dim_cap; ++m) {
        AbGens gens;
        for (int r = 0; r < m; ++r) gens = gens.concat(h.level[m - 1 - r]);
        w.level[m] = gens;
    }
    auto offsets = [&](int m) {
        std::vector<std::size_t> off(1, 0);
        for (std::size_t s : comp_sizes(m)) off.push_back(off.back() + s);
        return off;
    };
    auto put_block = [&](ZMat& out, std::size_t roff, std::size_t coff, const ZMat& b,
                         int sign = 1) {
        for (std::size_t i = 0; i < b.rows; ++i)
            for (std::size_t j = 0; j < b.cols; ++j) out(roff + i, coff + j) += sign * b(i, j);
    };

    for (int m = 1; m <= w.dim_cap; ++m) {
        auto src_off = offsets(m);
        auto dst_off = offsets(m - 1);
        for (int i = 0; i <= m; ++i) {
            ZMat d(w.level[m - 1].size(), w.level[m].size());
            if (i == 0) {
                // drop the top component
                for (int r = 0; r < m - 1; ++r)
                    put_block(d, dst_off[r], src_off[r + 1],
                              ZMat::identity(h.level[m - 2 - r].size()));
            } else {
                // components 0..i-2 get shifted faces, i-1 merges, rest copy
                for (int r = 0; r <= i - 2; ++r)
                    put_block(d, dst_off[r], src_off[r], h.face[m - 1 - r][i - 1 - r]);
                if (i - 1 < m - 1) {
                    put_block(d, dst_off[i - 1], src_off[i - 1], h.face[m - i][0]);
                    put_block(d, dst_off[i - 1], src_off[i],
                              ZMat::identity(h.level[m - 1 - i].size()));
                }
                for (int r = i; r < m - 1; ++r)
                    put_block(d, dst_off[r], src_off[r + 1],
                              ZMat::identity(h.level[m - 2 - r].size()));
            }
            w.face[m].push_back(d);
        }
    }
    for (int m = 0; m < w.dim_cap; ++m) {
        auto src_off = offsets(m);
        auto dst_off = offsets(m + 1);
        for (int j = 0; j <= m; ++j) {
            ZMat s(w.level[m + 1].size(), w.level[m].size());
            for (int r = 0; r <= j - 1; ++r)
                put_block(s, dst_off[r], src_off[r], h.degen[m - 1 - r][j - 1 - r]);
            // component j is the zero section; the rest copy down one slot
            for (int r = j; r < m; ++r)
                put_block(s, dst_off[r + 1], src_off[r],
                          ZMat::identity(h.level[m - 1 - r].size()));
            w.degen[m].push_back(s);
        }
    }
    return w;
}

// ------------------------------------------------- finite simplicial groups

struct FiniteGroupLevel {
    int size = 1;
    std::vector<int> mult;  // size x size
    std::vector<int> inv;

    int mul(int a, int b) const { return mult[a * size + b]; }
};

struct FiniteSimplicialGroup {
    int dim_cap = 0;
    std::vector<FiniteGroupLevel> level;
    std::vector<std::vector<std::vector<int>>> face;   // face[m][i][elem]
    std::vector<std::vector<std::vector<int>>> degen;  // degen[m][j][elem]
};

// Elements of a finite abelian group as mixed-radix tuples over its torsion.
struct FiniteAbelian {
    std::vector<Int> orders;
    int size = 1;

    explicit FiniteAbelian(const FgAbGroup& g) {
        if (g.rank != 0) throw UnsupportedError("finite abelian group required");
        Int n = 1;
        for (const Int& t : g.torsion) n *= t;
        if (n > 4096) throw SearchTooLarge("finite abelian group too large");
        for (const Int& t : g.torsion) orders.push_back(t);
        size = static_cast<int>(n.convert_to<long long>());
    }

    std::vector<int> unpack(int e) const {
        std::vector<int> t(orders.size());
        for (std::size_t i = 0; i < orders.size(); ++i) {
            int o = static_cast<int>(orders[i].convert_to<long long>());
            t[i] = e % o;
            e /= o;
        }
        return t;
    }
    int pack(const std::vector<int>& t) const {
        int e = 0;
        for (std::size_t i = orders.size(); i-- > 0;) {
            int o = static_cast<int>(orders[i].convert_to<long long>());
            e = e * o + (t[i] % o + o) % o;
        }
        return e;
    }
    int add(int a, int b) const {
        auto x = unpack(a), y = unpack(b);
        for (std::size_t i = 0; i < x.size(); ++i) x[i] += y[i];
        return pack(x);
    }
    int neg(int a) const {
        auto x = unpack(a);
        for (auto& v : x) v = -v;
        return pack(x);
    }
    // image under an integer matrix (columns = generator images)
    int apply(const ZMat& m, int a) const {
        auto x = unpack(a);
        std::vector<int> y(orders.size(), 0);
        for (std::size_t i = 0; i < orders.size(); ++i) {
            Int acc = 0;
            for (std::size_t j = 0; j < orders.size(); ++j) acc += m(i, j) * x[j];
            Int o = orders[i];
            Int r = acc % o;
            if (r < 0) r += o;
            y[i] = static_cast<int>(r.convert_to<long long>());
        }
        return pack(y);
    }
};

// G x_rho K(M, n-1) as a finite simplicial group; action[g] acts on M.
inline FiniteSimplicialGroup semidirect_em(const GroupTable& g, const FgAbGroup& m,
                                           const std::vector<ZMat>& action, int n,
                                           int dim_cap) {
    g.validate();
    if (n < 1) throw InputError("kgm needs n >= 1");
    FiniteAbelian M(m);
    AbGens mg = AbGens::from_group(m);
    if (static_cast<int>(action.size()) != g.order)
        throw InvalidAction("need one action matrix per group element");
    for (int a = 0; a < g.order; ++a) {
        if (!is_hom(mg, mg, action[a])) throw InvalidAction("action matrix is not an endomorphism");
        ZMat comp = action[a] * action[g.inverse(a)];
        if (!hom_eq(mg, comp, ZMat::identity(mg.size())))
            throw InvalidAction("action matrix is not invertible on m");
    }
    for (int a = 0; a < g.order; ++a)
        for (int b = 0; b < g.order; ++b)
            if (!hom_eq(mg, action[a] * action[b], action[g.mult[a][b]]))
                throw InvalidAction("action is not a homomorphism to Aut(m)");

    SimplicialAbGroup K = eilenberg_maclane(m, n - 1, dim_cap);

    FiniteSimplicialGroup h;
    h.dim_cap = dim_cap;
    std::vector<int> copies(dim_cap + 1);
    std::vector<long long> ksize(dim_cap + 1);
    for (int l = 0; l <= dim_cap; ++l) {
        copies[l] = static_cast<int>(K.level[l].size() / std::max<std::size_t>(mg.size(), 1));
        if (mg.size() == 0) copies[l] = 0;
        long long s = 1;
        for (int c = 0; c < copies[l]; ++c) {
            s *= M.size;
            if (s > 2000000) throw SearchTooLarge("kgm level too large");
        }
        ksize[l] = s;
    }
    // K-level elements are tuples of M-elements, packed base |M|
    auto kunpack = [&](long long e, int l) {
        std::vector<int> t(copies[l]);
        for (int i = 0; i < copies[l]; ++i) {
            t[i] = static_cast<int>(e % M.size);
            e /= M.size;
        }
        return t;
    };
    auto kpack = [&](const std::vector<int>& t) {
        long long e = 0;
        for (std::size_t i = t.size(); i-- > 0;) e = e * M.size + t[i];
        return e;
    };
    auto kadd = [&](long long a, long long b, int l) {
        auto x = kunpack(a, l), y = kunpack(b, l);
        for (int i = 0; i < copies[l]; ++i) x[i] = M.add(x[i], y[i]);
        return kpack(x);
    };
    auto kact = [&](int gelem, long long a, int l) {
        auto x = kunpack(a, l);
        for (int i = 0; i < copies[l]; ++i) x[i] = M.apply(action[gelem], x[i]);
        return kpack(x);
    };
    // structural map of K on elements through the integer block matrix
    auto kmap = [&](const ZMat& mat, long long a, int lsrc, int ldst) {
        auto x = kunpack(a, lsrc);
        std::vector<int> y(copies[ldst], 0);
        std::size_t gsz = mg.size();
        for (int ci = 0; ci < copies[ldst]; ci++)
            for (int cj = 0; cj < copies[lsrc]; cj++) {
                // blocks are 0 or identity; test the (0,0) entry
                bool nonzero = false;
                for (std::size_t e = 0; e < gsz && !nonzero; ++e)
                    if (mat(ci * gsz + e, cj * gsz + e) != 0) nonzero = true;
                if (nonzero) y[ci] = M.add(y[ci], x[cj]);
            }
        return kpack(y);
    };

    for (int l = 0; l <= dim_cap; ++l) {
        FiniteGroupLevel lev;
        lev.size = static_cast<int>(g.order * ksize[l]);
        lev.mult.resize(static_cast<std::size_t>(lev.size) * lev.size);
        lev.inv.resize(lev.size);
        auto enc = [&](int ge, long long ke) { return static_cast<int>(ke) * g.order + ge; };
        auto decg = [&](int e) { return e % g.order; };
        auto deck = [&](int e) { return static_cast<long long>(e / g.order); };
        for (int e1 = 0; e1 < lev.size; ++e1)
            for (int e2 = 0; e2 < lev.size; ++e2) {
                int g1 = decg(e1), g2 = decg(e2);
                long long k1 = deck(e1), k2 = deck(e2);
                int gp = g.mult[g1][g2];
                long long kp = kadd(kact(g.inverse(g2), k1, l), k2, l);
                lev.mult[static_cast<std::size_t>(e1) * lev.size + e2] = enc(gp, kp);
            }
        for (int e = 0; e < lev.size; ++e) {
            for (int f = 0; f < lev.size; ++f)
                if (lev.mult[static_cast<std::size_t>(e) * lev.size + f] == 0) {
                    lev.inv[e] = f;
                    break;
                }
        }
        h.level.push_back(lev);
    }
    h.face.resize(dim_cap + 1);
    h.degen.resize(dim_cap + 1);
    for (int l = 1; l <= dim_cap; ++l)
        for (int i = 0; i <= l; ++i) {
            std::vector<int> fm(h.level[l].size);
            for (int e = 0; e < h.level[l].size; ++e) {
                int ge = e % g.order;
                long long ke = e / g.order;
                fm[e] = static_cast<int>(kmap(K.face[l][i], ke, l, l - 1)) * g.order + ge;
            }
            h.face[l].push_back(fm);
        }
    for (int l = 0; l < dim_cap; ++l)
        for (int j = 0; j <= l; ++j) {
            std::vector<int> sm(h.level[l].size);
            for (int e = 0; e < h.level[l].size; ++e) {
                int ge = e % g.order;
                long long ke = e / g.order;
                sm[e] = static_cast<int>(kmap(K.degen[l][j], ke, l, l + 1)) * g.order + ge;
            }
            h.degen[l].push_back(sm);
        }
    return h;
}

// W-bar of a finite simplicial group as a simplicial set.
inline SimplicialSet wbar_sset(const FiniteSimplicialGroup& h, int dim_cap) {
    if (dim_cap > h.dim_cap + 1) throw DimCapExceeded("wbar needs group levels up to cap-1");
    SimplicialSet x;
    x.dim_cap = dim_cap;
    x.truncated = true;

    using Tuple = std::vector<int>;  // (g_{m-1}, ..., g_0)
    std::vector<std::vector<Tuple>> all(dim_cap + 1);
    all[0] = {{}};
    for (int m = 1; m <= dim_cap; ++m)
        for (const Tuple& t : all[m - 1])
            for (int e = 0; e < h.level[m - 1].size; ++e) {
                Tuple u;
                u.push_back(e);
                u.insert(u.end(), t.begin(), t.end());
                all[m].push_back(u);
            }

    auto face_tuple = [&](const Tuple& t, int i) {
        int n = static_cast<int>(t.size());
        Tuple out;
        if (i == 0) {
            out.assign(t.begin() + 1, t.end());
        } else {
            for (int r = 0; r <= i - 2; ++r)
                out.push_back(h.face[n - 1 - r][i - 1 - r][t[r]]);
            if (i - 1 < n - 1) {
                int merged = h.level[n - 1 - i].mul(h.face[n - i][0][t[i - 1]], t[i]);
                out.push_back(merged);
                for (int r = i + 1; r < n; ++r) out.push_back(t[r]);
            }
        }
        return out;
    };
    auto degen_tuple = [&](const Tuple& t, int j) {
        int n = static_cast<int>(t.size());
        Tuple out;
        for (int r = 0; r <= j - 1; ++r) out.push_back(h.degen[n - 1 - r][j - 1 - r][t[r]]);
        out.push_back(0);  // identity of level n - j
        for (int r = j; r < n; ++r) out.push_back(t[r]);
        return out;
    };
    // invert s_j structurally (s_j has left inverse d_j)
    auto undegenerate = [&](const Tuple& t, int j) -> std::optional<Tuple> {
        int n = static_cast<int>(t.size());
        if (t[j] != 0) return std::nullopt;
        Tuple u;
        for (int r = 0; r <= j - 1; ++r) u.push_back(h.face[n - 1 - r][j - 1 - r][t[r]]);
        for (int r = j + 1; r < n; ++r) u.push_back(t[r]);
        if (degen_tuple(u, j) != t) return std::nullopt;
        return u;
    };
    auto normal_form = [&](Tuple t) {
        std::vector<int> word;
        bool changed = true;
        while (changed) {
            changed = false;
            for (int j = static_cast<int>(t.size()) - 1; j >= 0; --j) {
                if (auto u = undegenerate(t, j)) {
                    word.push_back(j);
                    t = *u;
                    changed = true;
                    break;
                }
            }
        }
        return std::pair<std::vector<int>, Tuple>(word, t);
    };

    std::vector<std::map<Tuple, int>> index(dim_cap + 1);
    std::vector<std::vector<Tuple>> cells(dim_cap + 1);
    for (int m = 0; m <= dim_cap; ++m)
        for (const Tuple& t : all[m]) {
            bool degenerate = false;
            for (int j = 0; j < m && !degenerate; ++j)
                if (undegenerate(t, j)) degenerate = true;
            if (degenerate) continue;
            index[m][t] = static_cast<int>(cells[m].size());
            cells[m].push_back(t);
        }

    x.names.resize(dim_cap + 1);
    x.face.resize(dim_cap + 1);
    for (int m = 0; m <= dim_cap; ++m) {
        for (const Tuple& t : cells[m]) {
            std::string nm = "<";
            for (std::size_t i = 0; i < t.size(); ++i)
                nm += (i ? "," : "") + std::to_string(t[i]);
            x.names[m].push_back(nm + ">");
        }
        if (m == 0) continue;
        x.face[m].resize(cells[m].size());
        for (std::size_t c = 0; c < cells[m].size(); ++c)
            for (int i = 0; i <= m; ++i) {
                auto [word, base] = normal_form(face_tuple(cells[m][c], i));
                Simplex f{{}, CellId{static_cast<int>(base.size()),
                                     index[base.size()].at(base)}};
                for (auto w = word.rbegin(); w != word.rend(); ++w)
                    f = degenerate_word(f, *w);
                x.face[m][c].push_back(f);
            }
    }
    return x;
}

// K(G,M,n) as the classifying space of G x_rho K(M, n-1); finite M only.
inline SimplicialSet kgm(const GroupTable& g, const FgAbGroup& m,
                         const std::vector<ZMat>& action, int n, int dim_cap) {
    if (!m.is_finite())
        throw UnsupportedError(
            "kgm simplicial-set output needs finite M; use the abelian W-bar path for Z "
            "coefficients");
    FiniteSimplicialGroup h =
        semidirect_em(g, m, action, n, std::max(dim_cap - 1, 0));
    return wbar_sset(h, dim_cap);
}

inline std::vector<ZMat> trivial_action(const GroupTable& g, const FgAbGroup& m) {
    return std::vector<ZMat>(g.order, ZMat::identity(AbGens::from_group(m).size()));
}

}  // namespace shw
