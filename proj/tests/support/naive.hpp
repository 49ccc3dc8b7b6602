#pragma once

// Independent re-implementations used as test oracles.  Nothing here may call
// into the code paths it checks.

#include <vector>

#include "windtree/exact.hpp"
#include "windtree/mat2.hpp"

namespace windtree::naive {

// Element-by-element 2x2 product written out long-hand.
inline Mat2 mul2(const Mat2& x, const Mat2& y) {
    Rat r00 = x.a * y.a;
    r00 += x.b * y.c;
    Rat r01 = x.a * y.b;
    r01 += x.b * y.d;
    Rat r10 = x.c * y.a;
    r10 += x.d * y.c;
    Rat r11 = x.c * y.b;
    r11 += x.d * y.d;
    return Mat2(r00, r01, r10, r11);
}

// Adjugate inverse for determinant-1 input, from first principles.
inline Mat2 inv2(const Mat2& m) {
    Rat det = m.a * m.d - m.b * m.c;
    return Mat2(m.d / det, -m.b / det, -m.c / det, m.a / det);
}

inline Mat2 commutator2(const Mat2& x, const Mat2& y) {
    return mul2(mul2(x, y), mul2(inv2(x), inv2(y)));
}

// Rank over Q by fraction-free (Bareiss) row elimination.  Every interior
// division is asserted exact.
inline int rank_bareiss(std::vector<std::vector<Int>> m) {
    if (m.empty()) return 0;
    int rows = (int)m.size(), cols = (int)m[0].size();
    int rank = 0;
    Int prev = 1;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int p = -1;
        for (int i = rank; i < rows; ++i)
            if (m[i][col] != 0) { p = i; break; }
        if (p < 0) continue;
        std::swap(m[rank], m[p]);
        for (int i = rank + 1; i < rows; ++i) {
            for (int j = col + 1; j < cols; ++j) {
                Int t = m[i][j] * m[rank][col] - m[i][col] * m[rank][j];
                if (t % prev != 0) throw Error("bareiss: inexact division");
                m[i][j] = t / prev;
            }
            m[i][col] = 0;
        }
        prev = m[rank][col];
        ++rank;
    }
    return rank;
}

}  // namespace windtree::naive
