#pragma once

// Finite-type simplicial sets. Only nondegenerate cells are stored; every
// simplex is a pair (degeneracy word, base cell) with the word strictly
// decreasing, and faces/degeneracies are computed through the simplicial
// identity rewriting rules. Includes the standard test spaces, categorical
// products (Eilenberg-Zilber pairing), bar-construction classifying spaces
// of finite abelian groups, and the edge-path fundamental group.

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "shw/abelian.hpp"
#include "shw/errors.hpp"

namespace shw {

struct CellId {
    int dim = 0;
    int idx = 0;
    bool operator==(const CellId& o) const { return dim == o.dim && idx == o.idx; }
    auto operator<=>(const CellId& o) const = default;
};

// s_{w[0]} s_{w[1]} ... s_{w[k-1]} applied to a nondegenerate base cell;
// w strictly decreasing. dim = base.dim + |w|.
struct Simplex {
    std::vector<int> word;
    CellId base;

    int dim() const { return base.dim + static_cast<int>(word.size()); }
    bool nondegenerate() const { return word.empty(); }
    bool operator==(const Simplex& o) const { return word == o.word && base == o.base; }
    auto operator<=>(const Simplex& o) const = default;
};

// s_j . (word, base): insert j using s_i s_j = s_{j+1} s_i for i <= j.
inline Simplex degenerate_word(Simplex s, int j) {
    std::size_t pos = 0;
    while (pos < s.word.size() && j <= s.word[pos]) {
        s.word[pos] += 1;
        ++pos;
    }
    s.word.insert(s.word.begin() + pos, j);
    return s;
}

class SimplicialSet {
  public:
    int dim_cap = 0;
    // When true, cells above dim_cap were dropped from an actually bigger
    // object (classifying spaces); levels above dim_cap are then unknown.
    bool truncated = false;
    std::vector<std::vector<std::string>> names;          // per dim
    std::vector<std::vector<std::vector<Simplex>>> face;  // face[n][cell][i], n >= 1

    int ncells(int d) const {
        if (d < 0 || d > dim_cap || d >= static_cast<int>(names.size())) return 0;
        return static_cast<int>(names[d].size());
    }

    const std::string& cell_name(CellId c) const { return names[c.dim][c.idx]; }

    std::string simplex_name(const Simplex& s) const {
        std::ostringstream os;
        for (int j : s.word) os << "s" << j << " ";
        os << cell_name(s.base);
        return os.str();
    }

    // d_i of stored cell faces, then of arbitrary simplices via rewriting:
    // d_i s_j = s_{j-1} d_i (i < j), = id (i = j, j+1), = s_j d_{i-1} (i > j+1).
    Simplex face_of(const Simplex& s, int i) const {
        std::vector<int> prefix;
        int k = i;
        for (std::size_t t = 0; t < s.word.size(); ++t) {
            int j = s.word[t];
            if (k < j) {
                prefix.push_back(j - 1);
            } else if (k == j || k == j + 1) {
                // d_k s_j = id; the remaining inner word survives untouched
                Simplex out{prefix, s.base};
                out.word.insert(out.word.end(), s.word.begin() + t + 1, s.word.end());
                return out;
            } else {
                prefix.push_back(j);
                k -= 1;
            }
        }
        Simplex f = face[s.base.dim][s.base.idx][k];
        for (auto it = prefix.rbegin(); it != prefix.rend(); ++it)
            f = degenerate_word(f, *it);
        return f;
    }

    Simplex degenerate(const Simplex& s, int j) const { return degenerate_word(s, j); }

    // All m-simplices, degenerate included, in a deterministic order.
    std::vector<Simplex> simplices(int m) const {
        if (truncated && m > dim_cap)
            throw DimCapExceeded("level " + std::to_string(m) +
                                 " of a truncated simplicial set is unknown");
        std::vector<Simplex> out;
        for (int k = std::min(m, dim_cap); k >= 0; --k) {
            int r = m - k;
            // strictly decreasing words of length r with entries < m
            std::vector<std::vector<int>> words;
            std::vector<int> cur;
            enumerate_words(m - 1, r, cur, words);
            for (int idx = 0; idx < ncells(k); ++idx)
                for (const auto& w : words) out.push_back(Simplex{w, CellId{k, idx}});
        }
        return out;
    }

    Int simplex_count(int m) const {
        Int total = 0;
        for (int k = 0; k <= std::min(m, dim_cap); ++k)
            total += Int(ncells(k)) * binomial(m, m - k);
        return total;
    }

    // Enumerates via 1-cells between base points of 0-cells.
    std::size_t component_count() const {
        int n0 = ncells(0);
        std::vector<int> parent(n0);
        for (int i = 0; i < n0; ++i) parent[i] = i;
        auto find = [&](int x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        for (int e = 0; e < ncells(1); ++e) {
            int a = find(face[1][e][0].base.idx);
            int b = find(face[1][e][1].base.idx);
            if (a != b) parent[a] = b;
        }
        std::set<int> roots;
        for (int i = 0; i < n0; ++i) roots.insert(find(i));
        return roots.size();
    }

    void validate() const {
        if (static_cast<int>(names.size()) > dim_cap + 1)
            throw InputError("cells above dim_cap");
        for (int n = 1; n < static_cast<int>(names.size()); ++n) {
            if (n >= static_cast<int>(face.size()) ||
                face[n].size() != names[n].size())
                throw InputError("missing face data in dim " + std::to_string(n));
            for (std::size_t c = 0; c < names[n].size(); ++c) {
                if (static_cast<int>(face[n][c].size()) != n + 1)
                    throw InputError("cell needs n+1 faces");
                for (const Simplex& f : face[n][c]) check_simplex(f, n - 1);
            }
        }
        // d_i d_j = d_{j-1} d_i for i < j, through the normal form
        for (int n = 2; n < static_cast<int>(names.size()); ++n)
            for (int c = 0; c < ncells(n); ++c) {
                Simplex s{{}, CellId{n, c}};
                for (int j = 1; j <= n; ++j)
                    for (int i = 0; i < j; ++i) {
                        Simplex lhs = face_of(face_of(s, j), i);
                        Simplex rhs = face_of(face_of(s, i), j - 1);
                        if (!(lhs == rhs))
                            throw InputError("simplicial identity fails on cell " +
                                             cell_name(CellId{n, c}));
                    }
            }
    }

  private:
    static void enumerate_words(int maxval, int len, std::vector<int>& cur,
                                std::vector<std::vector<int>>& out) {
        if (len == 0) {
            out.push_back(cur);
            return;
        }
        for (int v = maxval; v >= len - 1; --v) {
            cur.push_back(v);
            enumerate_words(v - 1, len - 1, cur, out);
            cur.pop_back();
        }
    }

    static Int binomial(int n, int k) {
        if (k < 0 || k > n) return 0;
        Int r = 1;
        for (int i = 0; i < k; ++i) {
            r *= (n - i);
            r /= (i + 1);
        }
        return r;
    }

    void check_simplex(const Simplex& s, int expect_dim) const {
        if (s.base.dim < 0 || s.base.dim >= static_cast<int>(names.size()) ||
            s.base.idx < 0 || s.base.idx >= ncells(s.base.dim))
            throw InputError("face references unknown cell");
        if (s.dim() != expect_dim) throw InputError("face has wrong dimension");
        int d = s.base.dim;
        for (auto it = s.word.rbegin(); it != s.word.rend(); ++it) {
            if (*it < 0 || *it > d) throw InputError("invalid degeneracy index");
            ++d;
        }
        for (std::size_t i = 0; i + 1 < s.word.size(); ++i)
            if (s.word[i] <= s.word[i + 1])
                throw InputError("degeneracy word not strictly decreasing");
    }
};

// ---------------------------------------------------------------- standard

inline SimplicialSet delta(int n, int dim_cap) {
    if (n > dim_cap) throw DimCapExceeded("delta(n) needs dim_cap >= n");
    SimplicialSet x;
    x.dim_cap = dim_cap;
    // cells = nonempty vertex subsets of {0..n}, listed per dimension
    std::vector<std::vector<std::vector<int>>> subsets(n + 1);
    std::map<std::vector<int>, int> index;
    for (int mask = 1; mask < (1 << (n + 1)); ++mask) {
        std::vector<int> vs;
        for (int v = 0; v <= n; ++v)
            if (mask & (1 << v)) vs.push_back(v);
        subsets[static_cast<int>(vs.size()) - 1].push_back(vs);
    }
    x.names.resize(n + 1);
    x.face.resize(n + 1);
    for (int d = 0; d <= n; ++d) {
        std::sort(subsets[d].begin(), subsets[d].end());
        for (const auto& vs : subsets[d]) {
            std::string nm;
            for (int v : vs) nm += std::to_string(v);
            index[vs] = static_cast<int>(x.names[d].size());
            x.names[d].push_back(nm);
        }
    }
    for (int d = 1; d <= n; ++d) {
        x.face[d].resize(x.names[d].size());
        for (const auto& vs : subsets[d]) {
            std::vector<Simplex> fs;
            for (int i = 0; i <= d; ++i) {
                std::vector<int> sub = vs;
                sub.erase(sub.begin() + i);
                fs.push_back(Simplex{{}, CellId{d - 1, index[sub]}});
            }
            x.face[d][index[vs]] = fs;
        }
    }
    return x;
}

inline SimplicialSet boundary(int n, int dim_cap) {
    if (n < 1) throw InputError("boundary(n) needs n >= 1");
    SimplicialSet x = delta(n, dim_cap);
    x.names[n].clear();
    x.face[n].clear();
    return x;
}

// Delta^n / boundary: one vertex, one n-cell whose faces are the maximally
// degenerate vertex.
inline SimplicialSet sphere(int n, int dim_cap) {
    if (n < 1) throw InputError("sphere(n) needs n >= 1");
    if (n > dim_cap) throw DimCapExceeded("sphere(n) needs dim_cap >= n");
    SimplicialSet x;
    x.dim_cap = dim_cap;
    x.names.resize(n + 1);
    x.face.resize(n + 1);
    x.names[0] = {"v"};
    x.names[n] = {"c"};
    x.face[n].resize(1);
    std::vector<int> w;
    for (int j = n - 2; j >= 0; --j) w.push_back(j);
    for (int i = 0; i <= n; ++i) x.face[n][0].push_back(Simplex{w, CellId{0, 0}});
    return x;
}

// ---------------------------------------------------------------- products

// Extract the shared degeneracies of a levelwise pair: (s_U a', s_V b') is
// jointly nondegenerate iff U and V are disjoint.
struct ProductCellKey {
    Simplex a, b;
    auto operator<=>(const ProductCellKey& o) const = default;
};

struct ProductResult {
    SimplicialSet space;
    // per product cell, the factor simplices it stands for
    std::vector<std::vector<ProductCellKey>> decomposition;
};

namespace detail {

inline std::pair<std::vector<int>, ProductCellKey> normalize_pair(Simplex a, Simplex b) {
    std::vector<int> shared;
    for (;;) {
        int common = -1;
        for (int u : a.word)
            if (std::find(b.word.begin(), b.word.end(), u) != b.word.end())
                common = std::max(common, u);
        if (common < 0) break;
        shared.push_back(common);
        auto strip = [&](Simplex& s) {
            std::vector<int> w;
            for (int u : s.word)
                if (u != common) w.push_back(u > common ? u - 1 : u);
            s.word = std::move(w);
        };
        strip(a);
        strip(b);
    }
    return {shared, ProductCellKey{a, b}};
}

}  // namespace detail

inline ProductResult product_with_decomposition(const SimplicialSet& x,
                                                const SimplicialSet& y) {
    ProductResult res;
    SimplicialSet& p = res.space;
    p.dim_cap = std::min(x.dim_cap, y.dim_cap);
    p.truncated = x.truncated || y.truncated;
    p.names.resize(p.dim_cap + 1);
    p.face.resize(p.dim_cap + 1);
    res.decomposition.resize(p.dim_cap + 1);
    std::map<ProductCellKey, int> index;

    for (int m = 0; m <= p.dim_cap; ++m) {
        for (const Simplex& sa : x.simplices(m))
            for (const Simplex& sb : y.simplices(m)) {
                bool disjoint = true;
                for (int u : sa.word)
                    if (std::find(sb.word.begin(), sb.word.end(), u) != sb.word.end())
                        disjoint = false;
                if (!disjoint) continue;
                ProductCellKey key{sa, sb};
                index[key] = static_cast<int>(p.names[m].size());
                p.names[m].push_back("(" + x.simplex_name(sa) + "," + y.simplex_name(sb) +
                                     ")");
                res.decomposition[m].push_back(key);
            }
        if (m == 0) continue;
        p.face[m].resize(p.names[m].size());
        for (std::size_t c = 0; c < res.decomposition[m].size(); ++c) {
            const ProductCellKey& key = res.decomposition[m][c];
            for (int i = 0; i <= m; ++i) {
                Simplex fa = x.face_of(key.a, i);
                Simplex fb = y.face_of(key.b, i);
                auto [word, base] = detail::normalize_pair(fa, fb);
                auto it = index.find(base);
                if (it == index.end()) throw InputError("product face bookkeeping failed");
                Simplex f{{}, CellId{base.a.dim(), it->second}};
                for (auto w = word.rbegin(); w != word.rend(); ++w)
                    f = degenerate_word(f, *w);
                p.face[m][c].push_back(f);
            }
        }
    }
    return res;
}

inline SimplicialSet product(const SimplicialSet& x, const SimplicialSet& y) {
    return product_with_decomposition(x, y).space;
}

inline SimplicialSet torus(int dim_cap) {
    return product(sphere(1, dim_cap), sphere(1, dim_cap));
}

// ----------------------------------------------------- classifying spaces

// Multiplication table of a finite group; elements 0..order-1, identity 0.
struct GroupTable {
    int order = 1;
    std::vector<std::vector<int>> mult;

    static GroupTable trivial() { return GroupTable{1, {{0}}}; }

    static GroupTable cyclic(int n) {
        GroupTable g;
        g.order = n;
        g.mult.assign(n, std::vector<int>(n));
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) g.mult[a][b] = (a + b) % n;
        return g;
    }

    GroupTable direct_product(const GroupTable& o) const {
        GroupTable g;
        g.order = order * o.order;
        g.mult.assign(g.order, std::vector<int>(g.order));
        for (int a1 = 0; a1 < order; ++a1)
            for (int a2 = 0; a2 < o.order; ++a2)
                for (int b1 = 0; b1 < order; ++b1)
                    for (int b2 = 0; b2 < o.order; ++b2)
                        g.mult[a1 * o.order + a2][b1 * o.order + b2] =
                            mult[a1][b1] * o.order + o.mult[a2][b2];
        return g;
    }

    int inverse(int a) const {
        for (int b = 0; b < order; ++b)
            if (mult[a][b] == 0) return b;
        throw InputError("group table has no inverse");
    }

    bool abelian() const {
        for (int a = 0; a < order; ++a)
            for (int b = 0; b < order; ++b)
                if (mult[a][b] != mult[b][a]) return false;
        return true;
    }

    void validate() const {
        if (order < 1 || order > 64) throw InputError("group order must be in [1,64]");
        if (static_cast<int>(mult.size()) != order) throw InputError("bad group table");
        for (const auto& row : mult) {
            if (static_cast<int>(row.size()) != order) throw InputError("bad group table");
            for (int v : row)
                if (v < 0 || v >= order) throw InputError("bad group table entry");
        }
        for (int a = 0; a < order; ++a)
            if (mult[0][a] != a || mult[a][0] != a)
                throw InputError("element 0 is not the identity");
        for (int a = 0; a < order; ++a)
            for (int b = 0; b < order; ++b)
                for (int c = 0; c < order; ++c)
                    if (mult[mult[a][b]][c] != mult[a][mult[b][c]])
                        throw InputError("group table is not associative");
        for (int a = 0; a < order; ++a) inverse(a);
        if (!abelian()) throw UnsupportedError("only abelian group tables are supported");
    }

    // invariant factors, for comparisons with edge-path computations
    FgAbGroup as_fg_ab() const;
};

// Normal form of a bar tuple possibly containing identities: identities at
// positions p (1-based) peel off as s_{p-1}, largest first.
inline Simplex bar_normal_form(const std::vector<int>& tuple,
                               const std::map<std::vector<int>, int>& index) {
    std::vector<int> word, reduced;
    for (std::size_t p = 0; p < tuple.size(); ++p) {
        if (tuple[p] == 0)
            word.push_back(static_cast<int>(p));
        else
            reduced.push_back(tuple[p]);
    }
    std::sort(word.rbegin(), word.rend());
    auto it = index.find(reduced);
    if (it == index.end()) throw InputError("bar tuple not indexed");
    return Simplex{word, CellId{static_cast<int>(reduced.size()), it->second}};
}

// Nerve of G as a reduced simplicial set, truncated at dim_cap. Level-m
// simplices (degenerate included) number |G|^m.
inline SimplicialSet classifying(const GroupTable& g, int dim_cap) {
    g.validate();
    SimplicialSet x;
    x.dim_cap = dim_cap;
    x.truncated = g.order > 1;  // nondegenerate tuples exist in every dim
    x.names.resize(dim_cap + 1);
    x.face.resize(dim_cap + 1);
    std::map<std::vector<int>, int> index;
    std::vector<std::vector<std::vector<int>>> tuples(dim_cap + 1);
    tuples[0] = {{}};
    index[{}] = 0;
    x.names[0] = {"[]"};
    for (int m = 1; m <= dim_cap; ++m) {
        for (const auto& prev : tuples[m - 1])
            for (int a = 1; a < g.order; ++a) {
                std::vector<int> t = prev;
                t.push_back(a);
                index[t] = static_cast<int>(tuples[m].size());
                tuples[m].push_back(t);
                std::string nm = "[";
                for (std::size_t i = 0; i < t.size(); ++i)
                    nm += (i ? "|" : "") + std::to_string(t[i]);
                x.names[m].push_back(nm + "]");
            }
        x.face[m].resize(tuples[m].size());
        for (std::size_t c = 0; c < tuples[m].size(); ++c) {
            const auto& t = tuples[m][c];
            for (int i = 0; i <= m; ++i) {
                std::vector<int> ft;
                if (i == 0) {
                    ft.assign(t.begin() + 1, t.end());
                } else if (i == m) {
                    ft.assign(t.begin(), t.end() - 1);
                } else {
                    ft.assign(t.begin(), t.end());
                    ft[i - 1] = g.mult[t[i - 1]][t[i]];
                    ft.erase(ft.begin() + i);
                }
                x.face[m][c].push_back(bar_normal_form(ft, index));
            }
        }
    }
    return x;
}

// Abelianized edge-path group of a reduced simplicial set: generators are the
// 1-cells, one relation d_1 = d_0 + d_2 per 2-cell (degenerate edges vanish).
inline FgAbGroup edge_path_group_ab(const SimplicialSet& x) {
    if (x.ncells(0) != 1) throw UnsupportedError("edge-path group needs a reduced set");
    int gens = x.ncells(1);
    int rels = x.ncells(2);
    ZMat r(gens, rels);
    for (int c = 0; c < rels; ++c) {
        auto add = [&](const Simplex& e, int sign) {
            if (e.nondegenerate()) r(e.base.idx, c) += sign;
        };
        Simplex s{{}, CellId{2, c}};
        add(x.face_of(s, 1), 1);
        add(x.face_of(s, 0), -1);
        add(x.face_of(s, 2), -1);
    }
    return group_from_presentation(gens, r);
}

inline FgAbGroup GroupTable::as_fg_ab() const {
    // presentation with all products as relations: Z^order / <e_a+e_b-e_{ab}, e_0>
    ZMat r(order, order * order + 1);
    std::size_t c = 0;
    for (int a = 0; a < order; ++a)
        for (int b = 0; b < order; ++b) {
            r(a, c) += 1;
            r(b, c) += 1;
            r(mult[a][b], c) -= 1;
            ++c;
        }
    r(0, c) = 1;
    return group_from_presentation(order, r);
}

}  // namespace shw
