// Exact dense linear algebra over a Scalar domain: reduced row echelon
// form with a recorded transform, membership/coordinate solving against a
// fixed span, nullspaces and row-space intersections.  Pivoting is
// deterministic (first nonzero entry in column order).
#ifndef AK_LINALG_HPP
#define AK_LINALG_HPP

#include "ak/coeff.hpp"

#include <optional>
#include <vector>

namespace ak {

using Vec = std::vector<Scalar>;
using Mat = std::vector<Vec>;

inline Vec zero_vec(const Domain& dom, size_t n) { return Vec(n, dom.zero()); }

inline bool vec_is_zero(const Vec& v) {
    for (auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

inline void axpy(Vec& y, const Scalar& a, const Vec& x) {
    for (size_t i = 0; i < y.size(); ++i)
        if (!x[i].is_zero()) y[i] = y[i] + a * x[i];
}

inline Mat identity_mat(const Domain& dom, size_t n) {
    Mat m(n, zero_vec(dom, n));
    for (size_t i = 0; i < n; ++i) m[i][i] = dom.one();
    return m;
}

inline Mat transpose(const Mat& a, const Domain& dom, size_t cols) {
    Mat t(cols, zero_vec(dom, a.size()));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < cols; ++j) t[j][i] = a[i][j];
    return t;
}

inline Mat mat_mul(const Mat& a, const Mat& b, const Domain& dom) {
    size_t cols = b.empty() ? 0 : b[0].size();
    Mat p(a.size(), zero_vec(dom, cols));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t k = 0; k < b.size(); ++k)
            if (!a[i][k].is_zero()) axpy(p[i], a[i][k], b[k]);
    return p;
}

// R = T * A with R in reduced row echelon form; pivots[k] is the column
// of the k-th pivot row.
struct Rref {
    Mat R;
    Mat T;
    std::vector<size_t> pivots;
    size_t rank() const { return pivots.size(); }
};

inline Rref rref(Mat a, const Domain& dom) {
    size_t rows = a.size(), cols = rows ? a[0].size() : 0;
    Rref f;
    f.T = identity_mat(dom, rows);
    size_t cur = 0;
    for (size_t c = 0; c < cols && cur < rows; ++c) {
        size_t piv = rows;
        for (size_t i = cur; i < rows; ++i)
            if (!a[i][c].is_zero()) {
                piv = i;
                break;
            }
        if (piv == rows) continue;
        std::swap(a[cur], a[piv]);
        std::swap(f.T[cur], f.T[piv]);
        Scalar inv = dom.one() / a[cur][c];
        for (auto& x : a[cur]) x = x * inv;
        for (auto& x : f.T[cur]) x = x * inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == cur || a[i][c].is_zero()) continue;
            Scalar m = -a[i][c];
            axpy(a[i], m, a[cur]);
            axpy(f.T[i], m, f.T[cur]);
        }
        f.pivots.push_back(c);
        ++cur;
    }
    f.R = std::move(a);
    return f;
}

inline size_t mat_rank(const Mat& a, const Domain& dom) {
    return rref(a, dom).rank();
}

// Coordinates of target in the row span of a fixed matrix, or nullopt.
class SpanSolver {
public:
    SpanSolver(Mat rows, const Domain& dom)
        : dom_(dom), nrows_(rows.size()), f_(rref(std::move(rows), dom)) {}

    size_t rank() const { return f_.rank(); }

    std::optional<Vec> coords(Vec target) const {
        Vec mult = zero_vec(dom_, nrows_);
        for (size_t k = 0; k < f_.pivots.size(); ++k) {
            const Scalar& x = target[f_.pivots[k]];
            if (x.is_zero()) continue;
            Scalar m = x;
            mult[k] = m;
            axpy(target, -m, f_.R[k]);
        }
        if (!vec_is_zero(target)) return std::nullopt;
        // coords = mult * T  (target = mult * R = mult * T * A).
        Vec out = zero_vec(dom_, nrows_);
        for (size_t k = 0; k < nrows_; ++k)
            if (!mult[k].is_zero()) axpy(out, mult[k], f_.T[k]);
        return out;
    }

    bool contains(Vec target) const { return coords(std::move(target)).has_value(); }

    // Nonzero rref rows: a canonical basis of the row space.
    Mat canonical_basis() const {
        Mat b;
        for (size_t k = 0; k < f_.rank(); ++k) b.push_back(f_.R[k]);
        return b;
    }

private:
    Domain dom_;
    size_t nrows_;
    Rref f_;
};

// Basis (as rows) of {v : a v = 0}.
inline Mat right_nullspace(const Mat& a, const Domain& dom, size_t cols) {
    Rref f = rref(a, dom);
    std::vector<bool> is_pivot(cols, false);
    for (size_t c : f.pivots) is_pivot[c] = true;
    Mat basis;
    for (size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        Vec v = zero_vec(dom, cols);
        v[free] = dom.one();
        for (size_t k = 0; k < f.pivots.size(); ++k)
            v[f.pivots[k]] = -f.R[k][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

// Basis (as rows) of {x : x a = 0}.
inline Mat left_nullspace(const Mat& a, const Domain& dom, size_t cols) {
    return right_nullspace(transpose(a, dom, cols), dom, a.size());
}

// Canonical basis of (row space of a) ∩ (row space of b).
inline Mat row_space_intersection(const Mat& a, const Mat& b, const Domain& dom,
                                  size_t cols) {
    Mat stacked = a;
    for (auto& row : b) stacked.push_back(row);
    Mat ker = left_nullspace(stacked, dom, cols);
    Mat gens;
    for (auto& z : ker) {
        Vec v = zero_vec(dom, cols);
        for (size_t i = 0; i < a.size(); ++i)
            if (!z[i].is_zero()) axpy(v, z[i], a[i]);
        if (!vec_is_zero(v)) gens.push_back(std::move(v));
    }
    return SpanSolver(std::move(gens), dom).canonical_basis();
}

inline bool spans_equal(const Mat& a, const Mat& b, const Domain& dom) {
    return SpanSolver(a, dom).canonical_basis() == SpanSolver(b, dom).canonical_basis();
}

}  // namespace ak

#endif
