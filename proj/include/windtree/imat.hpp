#pragma once

#include <optional>
#include <string>
#include <vector>

#include "windtree/errors.hpp"
#include "windtree/exact.hpp"

namespace windtree {

// Dense integer matrix over arbitrary-precision integers, row-major.
struct IMat {
    int rows = 0, cols = 0;
    std::vector<Int> e;

    IMat() = default;
    IMat(int r, int c) : rows(r), cols(c), e(size_t(r) * c, Int(0)) {}

    static IMat identity(int n) {
        IMat m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    Int& at(int i, int j) { return e[size_t(i) * cols + j]; }
    const Int& at(int i, int j) const { return e[size_t(i) * cols + j]; }

    bool operator==(const IMat& o) const { return rows == o.rows && cols == o.cols && e == o.e; }
    bool operator!=(const IMat& o) const { return !(*this == o); }

    bool is_zero() const {
        for (const Int& x : e)
            if (x != 0) return false;
        return true;
    }

    IMat transposed() const {
        IMat t(cols, rows);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
        return t;
    }

    IMat operator*(const IMat& o) const {
        if (cols != o.rows) throw DimensionMismatch("matrix product shape mismatch");
        IMat r(rows, o.cols);
        for (int i = 0; i < rows; ++i)
            for (int k = 0; k < cols; ++k) {
                const Int& x = at(i, k);
                if (x == 0) continue;
                for (int j = 0; j < o.cols; ++j) r.at(i, j) += x * o.at(k, j);
            }
        return r;
    }

    IMat operator-() const {
        IMat r = *this;
        for (Int& x : r.e) x = -x;
        return r;
    }

    std::vector<Int> col(int j) const {
        std::vector<Int> v(rows);
        for (int i = 0; i < rows; ++i) v[i] = at(i, j);
        return v;
    }

    static IMat from_columns(int rows, const std::vector<std::vector<Int>>& cs) {
        IMat m(rows, (int)cs.size());
        for (int j = 0; j < (int)cs.size(); ++j) {
            if ((int)cs[j].size() != rows) throw DimensionMismatch("column length mismatch");
            for (int i = 0; i < rows; ++i) m.at(i, j) = cs[j][i];
        }
        return m;
    }

    std::string str() const {
        std::string s = "[";
        for (int i = 0; i < rows; ++i) {
            s += i ? ",[" : "[";
            for (int j = 0; j < cols; ++j) s += (j ? "," : "") + at(i, j).get_str();
            s += "]";
        }
        return s + "]";
    }
};

inline IMat mat_mul_vec_as_col(const IMat& m, const std::vector<Int>& v) {
    IMat c(m.rows, 1);
    if ((int)v.size() != m.cols) throw DimensionMismatch("matrix-vector shape mismatch");
    for (int i = 0; i < m.rows; ++i) {
        Int s = 0;
        for (int j = 0; j < m.cols; ++j) s += m.at(i, j) * v[j];
        c.at(i, 0) = s;
    }
    return c;
}

inline std::vector<Int> mat_apply(const IMat& m, const std::vector<Int>& v) {
    IMat c = mat_mul_vec_as_col(m, v);
    std::vector<Int> out(m.rows);
    for (int i = 0; i < m.rows; ++i) out[i] = c.at(i, 0);
    return out;
}

// Column Hermite normal form: A*U = H with U unimodular.  H is in column
// echelon form with positive pivots, strictly increasing pivot rows, zeros
// above each pivot, and the entries left of a pivot in its row reduced into
// [0, pivot).  Canonical for the column lattice; zero columns sit at the end.
struct Hnf {
    IMat h;
    IMat u;
    int rank = 0;
    std::vector<int> pivot_rows;  // one per pivot column
};

inline Hnf hnf_columns(const IMat& a) {
    Hnf r;
    r.h = a;
    r.u = IMat::identity(a.cols);
    IMat& h = r.h;
    IMat& u = r.u;
    auto swap_cols = [&](int x, int y) {
        if (x == y) return;
        for (int i = 0; i < h.rows; ++i) std::swap(h.at(i, x), h.at(i, y));
        for (int i = 0; i < u.rows; ++i) std::swap(u.at(i, x), u.at(i, y));
    };
    auto add_col = [&](int dst, int src, const Int& q) {
        if (q == 0) return;
        for (int i = 0; i < h.rows; ++i) h.at(i, dst) += q * h.at(i, src);
        for (int i = 0; i < u.rows; ++i) u.at(i, dst) += q * u.at(i, src);
    };
    auto neg_col = [&](int x) {
        for (int i = 0; i < h.rows; ++i) h.at(i, x) = -h.at(i, x);
        for (int i = 0; i < u.rows; ++i) u.at(i, x) = -u.at(i, x);
    };

    int k = 0;
    for (int i = 0; i < h.rows && k < h.cols; ++i) {
        // gcd-reduce row i across columns k..: leave one nonzero at column k.
        for (;;) {
            int best = -1;
            for (int j = k; j < h.cols; ++j)
                if (h.at(i, j) != 0 && (best < 0 || abs(h.at(i, j)) < abs(h.at(i, best)))) best = j;
            if (best < 0) break;
            swap_cols(k, best);
            if (h.at(i, k) < 0) neg_col(k);
            bool clean = true;
            for (int j = k + 1; j < h.cols; ++j) {
                if (h.at(i, j) == 0) continue;
                Int q = h.at(i, j) / h.at(i, k);  // truncated division
                add_col(j, k, -q);
                if (h.at(i, j) != 0) clean = false;
            }
            if (clean) break;
        }
        if (h.at(i, k) == 0) continue;
        // Reduce earlier pivot columns in this row into [0, pivot).
        for (int j = 0; j < k; ++j) {
            Int q = h.at(i, j) / h.at(i, k);
            if (h.at(i, j) - q * h.at(i, k) < 0) q -= 1;  // floor
            add_col(j, k, -q);
        }
        r.pivot_rows.push_back(i);
        ++k;
    }
    r.rank = k;
    return r;
}

// Basis of a column lattice in canonical HNF (zero columns dropped).
inline IMat lattice_basis(const IMat& a) {
    Hnf f = hnf_columns(a);
    IMat b(a.rows, f.rank);
    for (int j = 0; j < f.rank; ++j)
        for (int i = 0; i < a.rows; ++i) b.at(i, j) = f.h.at(i, j);
    return b;
}

inline int rank_of(const IMat& a) { return hnf_columns(a).rank; }

// Integer solution x of A x = b, if one exists.
inline std::optional<std::vector<Int>> solve_columns(const IMat& a, const std::vector<Int>& b) {
    if ((int)b.size() != a.rows) throw DimensionMismatch("solve shape mismatch");
    Hnf f = hnf_columns(a);
    std::vector<Int> r = b, y(a.cols, Int(0));
    for (int j = 0; j < f.rank; ++j) {
        int i = f.pivot_rows[j];
        // Rows above this pivot must already be cleared.
        for (int ii = (j == 0 ? 0 : f.pivot_rows[j - 1] + 1); ii < i; ++ii)
            if (r[ii] != 0) return std::nullopt;
        if (r[i] % f.h.at(i, j) != 0) return std::nullopt;
        Int q = r[i] / f.h.at(i, j);
        if (q != 0)
            for (int ii = 0; ii < a.rows; ++ii) r[ii] -= q * f.h.at(ii, j);
        y[j] = q;
    }
    for (int ii = 0; ii < a.rows; ++ii)
        if (r[ii] != 0) return std::nullopt;
    return mat_apply(f.u, y);
}

// Smith normal form U*A*V = D with both transforms and U^-1 maintained.
struct Snf {
    IMat d, u, uinv, v;
    std::vector<Int> divisors;  // nonzero diagonal entries
    int rank = 0;
};

inline Snf smith_normal_form(const IMat& a) {
    Snf s;
    s.d = a;
    s.u = IMat::identity(a.rows);
    s.uinv = IMat::identity(a.rows);
    s.v = IMat::identity(a.cols);
    IMat& d = s.d;

    auto row_swap = [&](int x, int y) {
        if (x == y) return;
        for (int j = 0; j < d.cols; ++j) std::swap(d.at(x, j), d.at(y, j));
        for (int j = 0; j < s.u.cols; ++j) std::swap(s.u.at(x, j), s.u.at(y, j));
        for (int i = 0; i < s.uinv.rows; ++i) std::swap(s.uinv.at(i, x), s.uinv.at(i, y));
    };
    auto row_add = [&](int dst, int src, const Int& q) {  // row dst += q * row src
        if (q == 0) return;
        for (int j = 0; j < d.cols; ++j) d.at(dst, j) += q * d.at(src, j);
        for (int j = 0; j < s.u.cols; ++j) s.u.at(dst, j) += q * s.u.at(src, j);
        for (int i = 0; i < s.uinv.rows; ++i) s.uinv.at(i, src) -= q * s.uinv.at(i, dst);
    };
    auto row_neg = [&](int x) {
        for (int j = 0; j < d.cols; ++j) d.at(x, j) = -d.at(x, j);
        for (int j = 0; j < s.u.cols; ++j) s.u.at(x, j) = -s.u.at(x, j);
        for (int i = 0; i < s.uinv.rows; ++i) s.uinv.at(i, x) = -s.uinv.at(i, x);
    };
    auto col_swap = [&](int x, int y) {
        if (x == y) return;
        for (int i = 0; i < d.rows; ++i) std::swap(d.at(i, x), d.at(i, y));
        for (int i = 0; i < s.v.rows; ++i) std::swap(s.v.at(i, x), s.v.at(i, y));
    };
    auto col_add = [&](int dst, int src, const Int& q) {  // col dst += q * col src
        if (q == 0) return;
        for (int i = 0; i < d.rows; ++i) d.at(i, dst) += q * d.at(i, src);
        for (int i = 0; i < s.v.rows; ++i) s.v.at(i, dst) += q * s.v.at(i, src);
    };

    int n = std::min(d.rows, d.cols);
    for (int t = 0; t < n; ++t) {
        // Find the smallest nonzero entry in the trailing submatrix.
        int pi = -1, pj = -1;
        for (int i = t; i < d.rows; ++i)
            for (int j = t; j < d.cols; ++j)
                if (d.at(i, j) != 0 &&
                    (pi < 0 || abs(d.at(i, j)) < abs(d.at(pi, pj)))) { pi = i; pj = j; }
        if (pi < 0) break;
        row_swap(t, pi);
        col_swap(t, pj);
        for (;;) {
            bool again = false;
            for (int i = t + 1; i < d.rows; ++i) {
                if (d.at(i, t) == 0) continue;
                Int q = d.at(i, t) / d.at(t, t);
                row_add(i, t, -q);
                if (d.at(i, t) != 0) { row_swap(t, i); again = true; }
            }
            for (int j = t + 1; j < d.cols; ++j) {
                if (d.at(t, j) == 0) continue;
                Int q = d.at(t, j) / d.at(t, t);
                col_add(j, t, -q);
                if (d.at(t, j) != 0) { col_swap(t, j); again = true; }
            }
            if (!again) break;
        }
        if (d.at(t, t) < 0) row_neg(t);
        // Divisibility: pivot must divide the trailing block.
        for (int i = t + 1; i < d.rows; ++i)
            for (int j = t + 1; j < d.cols; ++j)
                if (d.at(i, j) % d.at(t, t) != 0) {
                    row_add(t, i, 1);
                    // redo this pivot
                    --t;
                    i = d.rows;
                    break;
                }
    }
    for (int t = 0; t < n; ++t)
        if (d.at(t, t) != 0) { s.divisors.push_back(d.at(t, t)); ++s.rank; }
    return s;
}

// Basis of the saturation (Q-span intersected with Z^n) of a column lattice,
// returned in canonical HNF.
inline IMat saturate_columns(const IMat& a) {
    Snf s = smith_normal_form(a);
    IMat b(a.rows, s.rank);
    for (int j = 0; j < s.rank; ++j)
        for (int i = 0; i < a.rows; ++i) b.at(i, j) = s.uinv.at(i, j);
    return lattice_basis(b);
}

// Bareiss fraction-free determinant.
inline Int det_bareiss(IMat m) {
    if (m.rows != m.cols) throw DimensionMismatch("determinant of non-square matrix");
    int n = m.rows;
    Int prev = 1, sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m.at(k, k) == 0) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (m.at(i, k) != 0) { p = i; break; }
            if (p < 0) return 0;
            for (int j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(p, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                Int t = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
                m.at(i, j) = t / prev;  // exact
            }
        prev = m.at(k, k);
    }
    return sign * m.at(n - 1, n - 1);
}

// Inverse of a matrix with determinant +-1.
inline IMat inverse_unimodular(const IMat& a) {
    if (a.rows != a.cols) throw DimensionMismatch("inverse of non-square matrix");
    IMat inv(a.rows, a.cols);
    for (int j = 0; j < a.cols; ++j) {
        std::vector<Int> e_j(a.rows, Int(0));
        e_j[j] = 1;
        auto x = solve_columns(a, e_j);
        if (!x) throw InvalidParameter("matrix is not unimodular");
        for (int i = 0; i < a.rows; ++i) inv.at(i, j) = (*x)[i];
    }
    return inv;
}

// Does v lie in the rational span of A's columns?
inline bool in_rational_span(const IMat& a, const std::vector<Int>& v) {
    IMat aug(a.rows, a.cols + 1);
    for (int i = 0; i < a.rows; ++i) {
        for (int j = 0; j < a.cols; ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, a.cols) = v[i];
    }
    return rank_of(aug) == rank_of(a);
}

}  // namespace windtree
