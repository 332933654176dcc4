#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <tuple>
#include <utility>

namespace sgkt {

// All ring arithmetic is arbitrary precision: HNF reduction and form
// composition overflow 64-bit quickly even at desk scale.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int abs_int(const Int& a) { return a < 0 ? Int(-a) : a; }

inline Int gcd_int(const Int& a, const Int& b) {
    return boost::multiprecision::gcd(a, b);
}

inline Int lcm_int(const Int& a, const Int& b) {
    if (a == 0 || b == 0) return 0;
    return abs_int(a / gcd_int(a, b) * b);
}

// Floored division and remainder: fdiv rounds toward -inf, fmod is in [0, |b|).
inline Int fdiv(const Int& a, const Int& b) {
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) q -= 1;
    return q;
}

inline Int fmod(const Int& a, const Int& b) { return a - fdiv(a, b) * b; }

// Extended gcd: returns (g, s, t) with s*a + t*b = g = gcd(a, b), g >= 0.
inline std::tuple<Int, Int, Int> ext_gcd(Int a, Int b) {
    Int s0 = 1, s1 = 0, t0 = 0, t1 = 1;
    while (b != 0) {
        Int q = a / b;
        Int r = a - q * b;
        a = b;
        b = r;
        Int s2 = s0 - q * s1;
        s0 = s1;
        s1 = s2;
        Int t2 = t0 - q * t1;
        t0 = t1;
        t1 = t2;
    }
    if (a < 0) {
        a = -a;
        s0 = -s0;
        t0 = -t0;
    }
    return {a, s0, t0};
}

// Integer square root (floor). Argument must be >= 0.
inline Int isqrt(const Int& n) { return boost::multiprecision::sqrt(n); }

inline bool is_square(const Int& n) {
    if (n < 0) return false;
    Int r = isqrt(n);
    return r * r == n;
}

// Squarefree test by trial division; fine at the scales this library targets.
inline bool is_squarefree(const Int& n) {
    Int m = abs_int(n);
    if (m == 0) return false;
    for (Int p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            m /= p;
            if (m % p == 0) return false;
        }
    }
    return true;
}

}  // namespace sgkt
