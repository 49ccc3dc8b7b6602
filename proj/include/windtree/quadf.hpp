#pragma once

#include <quadmath.h>

#include <cstdio>
#include <string>

namespace windtree {

using f128 = __float128;

inline const f128 kPi = 2 * acosq(0);

// Angular tolerance for comparing boundary directions.  Eigen-directions of
// integer hyperbolic matrices are quadratic irrationals; at fixture scale their
// pairwise separation is far above this.
inline const f128 kAngularTol = 1e-12;

inline f128 fsqrt(f128 x) { return sqrtq(x); }
inline f128 fabsq_(f128 x) { return x < 0 ? -x : x; }

// Reduce an atan2-style angle to the projective circle [0, pi).
inline f128 angle_mod_pi(f128 a) {
    while (a < 0) a += kPi;
    while (a >= kPi) a -= kPi;
    return a;
}

// Distance between two directions on the projective circle.
inline f128 angle_dist(f128 a, f128 b) {
    f128 d = fabsq_(angle_mod_pi(a) - angle_mod_pi(b));
    return d > kPi / 2 ? kPi - d : d;
}

inline std::string f128_str(f128 x, int sig_digits = 12) {
    char buf[128];
    quadmath_snprintf(buf, sizeof buf, "%.*Qg", sig_digits, x);
    return buf;
}

inline f128 parse_f128(const std::string& s) { return strtoflt128(s.c_str(), nullptr); }

}  // namespace windtree
