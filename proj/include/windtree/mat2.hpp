#pragma once

#include <array>
#include <ostream>
#include <string>

#include "windtree/errors.hpp"
#include "windtree/exact.hpp"
#include "windtree/quadf.hpp"

namespace windtree {

// Exact 2x2 rational matrix [[a,b],[c,d]] with determinant 1.
struct Mat2 {
    Rat a, b, c, d;

    Mat2() : a(1), b(0), c(0), d(1) {}
    Mat2(Rat a_, Rat b_, Rat c_, Rat d_)
        : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {}

    static Mat2 identity() { return Mat2(); }

    Rat det() const { return a * d - b * c; }
    Rat trace() const { return a + d; }

    bool operator==(const Mat2& o) const { return a == o.a && b == o.b && c == o.c && d == o.d; }
    bool operator!=(const Mat2& o) const { return !(*this == o); }

    bool is_identity() const { return a == 1 && b == 0 && c == 0 && d == 1; }
    bool is_minus_identity() const { return a == -1 && b == 0 && c == 0 && d == -1; }
    bool is_central() const { return is_identity() || is_minus_identity(); }

    // Valid for determinant-1 matrices only.
    Mat2 inverse() const { return Mat2(d, -b, -c, a); }

    Mat2 neg() const { return Mat2(-a, -b, -c, -d); }

    std::string str() const {
        return "[[" + rat_str(a) + "," + rat_str(b) + "],[" + rat_str(c) + "," + rat_str(d) + "]]";
    }

    friend std::ostream& operator<<(std::ostream& os, const Mat2& m) { return os << m.str(); }
};

inline Mat2 mul(const Mat2& x, const Mat2& y) {
    return Mat2(x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
                x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d);
}

inline Mat2 operator*(const Mat2& x, const Mat2& y) { return mul(x, y); }

inline Mat2 power(Mat2 m, long e) {
    Mat2 r;
    if (e < 0) { m = m.inverse(); e = -e; }
    while (e--) r = r * m;
    return r;
}

inline Mat2 commutator(const Mat2& x, const Mat2& y) {
    return x * y * x.inverse() * y.inverse();
}

enum class ElementKind { elliptic, parabolic, hyperbolic };

// Trace trichotomy.  The central elements +-id fall outside the parabolic
// branch; they are reported as elliptic with is_central set, and every caller
// that cares treats them as trivial.
struct ElementClass {
    ElementKind kind;
    Rat trace;
    bool is_central = false;
};

inline ElementClass classify(const Mat2& m) {
    Rat t = m.trace();
    if (m.is_central()) return {ElementKind::elliptic, t, true};
    Rat at = abs(t);
    if (at > 2) return {ElementKind::hyperbolic, t, false};
    if (at == 2) return {ElementKind::parabolic, t, false};
    return {ElementKind::elliptic, t, false};
}

inline bool is_hyperbolic(const Mat2& m) { return classify(m).kind == ElementKind::hyperbolic; }

inline const char* kind_name(ElementKind k) {
    switch (k) {
        case ElementKind::elliptic: return "elliptic";
        case ElementKind::parabolic: return "parabolic";
        case ElementKind::hyperbolic: return "hyperbolic";
    }
    return "?";
}

// Boundary directions fixed by a hyperbolic element, as angles in [0, pi).
struct FixedDirections {
    f128 expanding;
    f128 contracting;
};

namespace detail {
// Direction of the eigenvector for eigenvalue lambda of [[a,b],[c,d]].
inline f128 eigen_direction(const Mat2& m, f128 lambda) {
    f128 vx, vy;
    if (m.b != 0) {
        vx = to_f128(m.b);
        vy = lambda - to_f128(m.a);
    } else if (m.c != 0) {
        vx = lambda - to_f128(m.d);
        vy = to_f128(m.c);
    } else {
        // Diagonal: axes are the eigen-directions.
        return (to_f128(m.a) == lambda) ? (f128)0 : kPi / 2;
    }
    return angle_mod_pi(atan2q(vy, vx));
}
}  // namespace detail

inline FixedDirections fixed_directions(const Mat2& m) {
    ElementClass cls = classify(m);
    if (cls.kind != ElementKind::hyperbolic)
        throw NotHyperbolic("fixed_directions requires a hyperbolic matrix, got " +
                            std::string(kind_name(cls.kind)));
    // disc = trace^2 - 4 > 0, exact before the square root.
    f128 t = to_f128(cls.trace);
    f128 root = fsqrt(to_f128(Rat(cls.trace * cls.trace - 4)));
    f128 expanding_eig = (t >= 0) ? (t + root) / 2 : (t - root) / 2;
    f128 contracting_eig = 1 / expanding_eig;
    return {detail::eigen_direction(m, expanding_eig),
            detail::eigen_direction(m, contracting_eig)};
}

// Fixed boundary directions of a non-elliptic element: two for hyperbolic,
// one for parabolic.
inline std::array<f128, 2> fixed_direction_set(const Mat2& m, int* count) {
    ElementClass cls = classify(m);
    if (cls.kind == ElementKind::hyperbolic) {
        FixedDirections fd = fixed_directions(m);
        *count = 2;
        return {fd.expanding, fd.contracting};
    }
    if (cls.kind == ElementKind::parabolic) {
        *count = 1;
        f128 lambda = cls.trace > 0 ? (f128)1 : (f128)-1;
        return {detail::eigen_direction(m, lambda), (f128)0};
    }
    throw EllipticInput("element has no boundary fixed direction");
}

}  // namespace windtree
