#pragma once

// Finitely generated abelian groups in invariant-factor form, homomorphisms
// between generator presentations, and integral homology of complexes of such
// groups (via two-row free resolutions and Smith normal form).

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include "shw/errors.hpp"
#include "shw/zlinalg.hpp"

namespace shw {

struct FgAbGroup {
    std::size_t rank = 0;
    std::vector<Int> torsion;  // each >= 2, t_i | t_{i+1}

    FgAbGroup() = default;
    FgAbGroup(std::size_t r, std::vector<Int> t) : rank(r), torsion(std::move(t)) {
        for (std::size_t i = 0; i < torsion.size(); ++i) {
            if (torsion[i] < 2) throw InputError("torsion coefficient must be >= 2");
            if (i + 1 < torsion.size() && torsion[i + 1] % torsion[i] != 0)
                throw InputError("torsion list is not a divisibility chain");
        }
    }

    static FgAbGroup free(std::size_t r) { return FgAbGroup(r, {}); }
    static FgAbGroup cyclic(const Int& n) {
        if (n == 0) return free(1);
        return FgAbGroup(0, {n});
    }
    static FgAbGroup trivial() { return FgAbGroup(); }

    bool is_trivial() const { return rank == 0 && torsion.empty(); }
    bool is_finite() const { return rank == 0; }
    std::size_t gens() const { return rank + torsion.size(); }

    Int order() const {
        if (rank > 0) throw InputError("infinite group has no order");
        Int n = 1;
        for (const Int& t : torsion) n *= t;
        return n;
    }

    bool operator==(const FgAbGroup& o) const {
        return rank == o.rank && torsion == o.torsion;
    }

    FgAbGroup direct_sum(const FgAbGroup& o) const;

    std::string to_string() const {
        if (is_trivial()) return "0";
        std::ostringstream os;
        bool first = true;
        if (rank == 1) {
            os << "Z";
            first = false;
        } else if (rank > 1) {
            os << "Z^" << rank;
            first = false;
        }
        for (const Int& t : torsion) {
            if (!first) os << " + ";
            os << "Z/" << t.str();
            first = false;
        }
        return os.str();
    }
};

// Invariant factors of a diagonal presentation Z^n / <o_i e_i> (o_i = 0 free).
inline FgAbGroup group_from_orders(const std::vector<Int>& orders) {
    std::size_t n = orders.size();
    std::size_t tcount = 0;
    for (const Int& o : orders)
        if (o != 0) ++tcount;
    ZMat rel(n, tcount);
    std::size_t c = 0;
    for (std::size_t i = 0; i < n; ++i)
        if (orders[i] != 0) rel(i, c++) = orders[i];
    SmithResult s = smith_normal_form(rel);
    std::vector<Int> tor;
    for (const Int& d : s.diag())
        if (d >= 2) tor.push_back(d);
    std::size_t rnk = n - s.rank();
    return FgAbGroup(rnk, tor);
}

// Cokernel Z^n / im(rel) in invariant-factor form.
inline FgAbGroup group_from_presentation(std::size_t n, const ZMat& rel) {
    if (rel.rows != n) throw InputError("presentation row mismatch");
    SmithResult s = smith_normal_form(rel);
    std::vector<Int> tor;
    for (const Int& d : s.diag())
        if (d >= 2) tor.push_back(d);
    return FgAbGroup(n - s.rank(), tor);
}

inline FgAbGroup FgAbGroup::direct_sum(const FgAbGroup& o) const {
    std::vector<Int> orders;
    for (std::size_t i = 0; i < rank + o.rank; ++i) orders.push_back(0);
    for (const Int& t : torsion) orders.push_back(t);
    for (const Int& t : o.torsion) orders.push_back(t);
    return group_from_orders(orders);
}

// A group given by an ordered generator list with orders (0 = infinite), the
// working presentation for levels of simplicial abelian groups. Generator
// order matters; the invariant-factor summary is group().
struct AbGens {
    std::vector<Int> orders;

    AbGens() = default;
    explicit AbGens(std::vector<Int> o) : orders(std::move(o)) {}

    static AbGens from_group(const FgAbGroup& g) {
        std::vector<Int> o(g.rank, Int(0));
        for (const Int& t : g.torsion) o.push_back(t);
        return AbGens(std::move(o));
    }

    std::size_t size() const { return orders.size(); }
    FgAbGroup group() const { return group_from_orders(orders); }

    AbGens repeat(std::size_t copies) const {
        std::vector<Int> o;
        o.reserve(orders.size() * copies);
        for (std::size_t c = 0; c < copies; ++c)
            for (const Int& x : orders) o.push_back(x);
        return AbGens(std::move(o));
    }

    AbGens concat(const AbGens& o) const {
        std::vector<Int> v = orders;
        v.insert(v.end(), o.orders.begin(), o.orders.end());
        return AbGens(std::move(v));
    }

    bool operator==(const AbGens& o) const { return orders == o.orders; }
};

// Does the integer matrix define a homomorphism src -> dst between the
// presented groups?  Needs t_j * m[i][j] = 0 in the target for every torsion
// source generator j.
inline bool is_hom(const AbGens& dst, const AbGens& src, const ZMat& m) {
    if (m.rows != dst.size() || m.cols != src.size()) return false;
    for (std::size_t j = 0; j < src.size(); ++j) {
        if (src.orders[j] == 0) continue;
        for (std::size_t i = 0; i < dst.size(); ++i) {
            Int v = src.orders[j] * m(i, j);
            if (dst.orders[i] == 0) {
                if (v != 0) return false;
            } else if (v % dst.orders[i] != 0) {
                return false;
            }
        }
    }
    return true;
}

// Equality of homomorphisms presented by matrices: entrywise congruence
// relative to the target's generator orders.
inline bool hom_eq(const AbGens& dst, const ZMat& a, const ZMat& b) {
    if (a.rows != b.rows || a.cols != b.cols || a.rows != dst.size()) return false;
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t j = 0; j < a.cols; ++j) {
            Int diff = a(i, j) - b(i, j);
            if (dst.orders[i] == 0) {
                if (diff != 0) return false;
            } else if (diff % dst.orders[i] != 0) {
                return false;
            }
        }
    return true;
}

// Homology of a complex of f.g. abelian groups
//   ... -> A_{m+1} -> A_m -> A_{m-1} -> ...
// presented by AbGens levels and boundary matrices d[m] : A_m -> A_{m-1}.
// Each level is replaced by its two-term free resolution and homology of the
// resulting free total complex is computed by Smith reduction.
class AbComplex {
  public:
    AbComplex(std::vector<AbGens> levels, std::vector<ZMat> boundary)
        : levels_(std::move(levels)), d_(std::move(boundary)) {
        if (d_.size() + 1 != levels_.size() && !(levels_.empty() && d_.empty()))
            throw InputError("AbComplex: need one boundary per adjacent level pair");
        for (std::size_t m = 0; m + 1 < levels_.size(); ++m) {
            if (!is_hom(levels_[m], levels_[m + 1], d_[m]))
                throw InputError("AbComplex: boundary is not a homomorphism");
        }
        for (std::size_t m = 0; m + 2 < levels_.size(); ++m) {
            ZMat sq = d_[m] * d_[m + 1];
            if (!hom_eq(levels_[m], sq, ZMat(sq.rows, sq.cols)))
                throw InputError("AbComplex: d*d != 0");
        }
    }

    std::size_t top() const { return levels_.empty() ? 0 : levels_.size() - 1; }

    // H_m, valid for m < top (the boundary into level m from m+1 is needed,
    // and out of m when m > 0).
    FgAbGroup homology(std::size_t m) const {
        if (m + 1 >= levels_.size())
            throw RangeExceeded("homology degree exceeds available levels");
        ZMat dm = total_boundary(m);        // total_m -> total_{m-1}
        ZMat dm1 = total_boundary(m + 1);   // total_{m+1} -> total_m
        ZMat kernel = (m == 0) ? ZMat::identity(total_dim(0)) : z_kernel_basis(dm);
        // express im(d_{m+1}) in the kernel basis
        ZMat coords = z_solve_matrix(kernel, dm1);
        return group_from_presentation(kernel.cols, coords);
    }

  private:
    std::vector<AbGens> levels_;
    std::vector<ZMat> d_;

    std::size_t tors(std::size_t m) const {
        std::size_t k = 0;
        for (const Int& o : levels_[m].orders)
            if (o != 0) ++k;
        return k;
    }
    std::size_t total_dim(std::size_t m) const {
        return levels_[m].size() + (m == 0 ? 0 : tors(m - 1));
    }

    // relation inclusion R_m : Z^{tors(m)} -> Z^{gens(m)}
    ZMat rel(std::size_t m) const {
        ZMat r(levels_[m].size(), tors(m));
        std::size_t c = 0;
        for (std::size_t i = 0; i < levels_[m].size(); ++i)
            if (levels_[m].orders[i] != 0) r(i, c++) = levels_[m].orders[i];
        return r;
    }

    // induced map on relation lattices: d R_m = R_{m-1} dR
    ZMat rel_map(std::size_t m) const {
        const ZMat& d = d_[m - 1];
        ZMat out(tors(m - 1), tors(m));
        std::size_t cj = 0;
        for (std::size_t j = 0; j < levels_[m].size(); ++j) {
            if (levels_[m].orders[j] == 0) continue;
            std::size_t ci = 0;
            for (std::size_t i = 0; i < levels_[m - 1].size(); ++i) {
                if (levels_[m - 1].orders[i] == 0) continue;
                out(ci, cj) = levels_[m].orders[j] * d(i, j) / levels_[m - 1].orders[i];
                ++ci;
            }
            ++cj;
        }
        return out;
    }

    // total complex boundary [[d, R_{m-1}], [0, -dR_{m-1}]]
    ZMat total_boundary(std::size_t m) const {
        if (m == 0 || m >= levels_.size()) return ZMat(0, m < levels_.size() ? total_dim(m) : 0);
        std::size_t sr = levels_[m - 1].size(), sc = levels_[m].size();
        std::size_t tr = (m - 1 == 0) ? 0 : tors(m - 2), tc = tors(m - 1);
        ZMat out(sr + tr, sc + tc);
        const ZMat& d = d_[m - 1];
        for (std::size_t i = 0; i < sr; ++i)
            for (std::size_t j = 0; j < sc; ++j) out(i, j) = d(i, j);
        ZMat r = rel(m - 1);
        for (std::size_t i = 0; i < sr; ++i)
            for (std::size_t j = 0; j < tc; ++j) out(i, sc + j) = r(i, j);
        if (tr > 0) {
            ZMat rm = rel_map(m - 1);
            for (std::size_t i = 0; i < tr; ++i)
                for (std::size_t j = 0; j < tc; ++j) out(sr + i, sc + j) = -rm(i, j);
        }
        return out;
    }
};

}  // namespace shw
