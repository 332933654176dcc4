#include "sgkt/primes.hpp"

#include <algorithm>

namespace sgkt {

int kronecker(Int a, Int n) {
    if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
    int sign = 1;
    if (n < 0) {
        n = -n;
        if (a < 0) sign = -sign;
    }
    if (n % 2 == 0) {
        if (a % 2 == 0) return 0;
        int tz = 0;
        while (n % 2 == 0) {
            n /= 2;
            ++tz;
        }
        Int am8 = fmod(a, 8);
        if (tz % 2 == 1 && (am8 == 3 || am8 == 5)) sign = -sign;
    }
    a = fmod(a, n);
    // Jacobi symbol by quadratic reciprocity.
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            Int nm8 = fmod(n, 8);
            if (nm8 == 3 || nm8 == 5) sign = -sign;
        }
        std::swap(a, n);
        if (fmod(a, 4) == 3 && fmod(n, 4) == 3) sign = -sign;
        a = fmod(a, n);
    }
    return n == 1 ? sign : 0;
}

namespace {

std::vector<Int> rational_primes_up_to(const Int& bound) {
    std::vector<Int> ps;
    for (Int p = 2; p <= bound; ++p) {
        bool prime = true;
        for (Int q = 2; q * q <= p; ++q)
            if (p % q == 0) {
                prime = false;
                break;
            }
        if (prime) ps.push_back(p);
    }
    return ps;
}

// Roots of x^2 + t x + n mod p by direct scan; p stays small at desk scale.
std::vector<Int> omega_poly_roots(const Order& ord, const Int& p) {
    std::vector<Int> roots;
    for (Int x = 0; x < p; ++x)
        if (fmod(x * x + ord.omega_trace() * x + ord.omega_norm(), p) == 0) roots.push_back(x);
    return roots;
}

}  // namespace

std::vector<PrimeIdealInfo> prime_ideals_up_to(const Order& ord, const Int& bound) {
    if (bound < 2) throw domain_error("prime_ideals_up_to: bound must be >= 2");
    std::vector<PrimeIdealInfo> out;
    for (const Int& p : rational_primes_up_to(bound)) {
        if (ord.is_zring()) {
            out.push_back({IntegralIdeal(ord, p, 0, 1), p, 1, false});
            continue;
        }
        int sym = kronecker(ord.disc(), p);
        if (sym == -1) {
            if (p * p <= bound)
                out.push_back({IntegralIdeal(ord, p, 0, p), p, 2, false});
            continue;
        }
        std::vector<Int> roots = omega_poly_roots(ord, p);
        if (sym == 0) {
            // ramified: unique prime (p, r + w) with the double root r
            out.push_back({IntegralIdeal(ord, p, roots.at(0), 1), p, 1, true});
        } else {
            for (const Int& r : roots)
                out.push_back({IntegralIdeal(ord, p, r, 1), p, 1, false});
        }
    }
    std::sort(out.begin(), out.end(), [](const PrimeIdealInfo& x, const PrimeIdealInfo& y) {
        Int nx = x.ideal.norm(), ny = y.ideal.norm();
        if (nx != ny) return nx < ny;
        return x.ideal.b() < y.ideal.b();
    });
    return out;
}

}  // namespace sgkt
