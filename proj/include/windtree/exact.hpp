#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "windtree/errors.hpp"

namespace windtree {

using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw InvalidParameter("zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

// Accepts "p" or "p/q".
inline Rat parse_rat(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(s));
        return make_rat(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
    } catch (const std::invalid_argument&) {
        throw ValidationError("malformed rational: " + s);
    }
}

inline std::string rat_str(const Rat& r) { return r.get_str(); }

inline std::string int_str(const Int& n) { return n.get_str(); }

// Exact to ~113-bit precision; adequate for direction angles and tolerances.
inline __float128 to_f128(const Int& n) {
    __float128 v = 0;
    const __float128 two64 = 18446744073709551616.0;  // 2^64, exact as a double
    const mp_size_t limbs = mpz_size(n.get_mpz_t());
    for (mp_size_t i = limbs - 1; i >= 0; --i) {
        v = v * two64;
        v += (__float128)mpz_getlimbn(n.get_mpz_t(), i);
    }
    return sgn(n) < 0 ? -v : v;
}

inline __float128 to_f128(const Rat& r) {
    return to_f128(Int(r.get_num())) / to_f128(Int(r.get_den()));
}

inline int64_t to_i64(const Int& n) {
    if (!n.fits_slong_p()) throw Error("integer exceeds 64-bit range: " + n.get_str());
    return n.get_si();
}

}  // namespace windtree
