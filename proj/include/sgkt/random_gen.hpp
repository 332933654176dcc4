#pragma once

#include "sgkt/element.hpp"
#include "sgkt/ideal.hpp"
#include "sgkt/order.hpp"

#include <cstdint>
#include <random>

namespace sgkt {

// Deterministic sampler for randomized verification suites. Everything is
// driven by one mt19937_64 so a (seed, call sequence) pair reproduces runs.
class Sampler {
public:
    explicit Sampler(uint64_t seed) : rng_(seed) {}

    int64_t uniform(int64_t lo, int64_t hi) {
        std::uniform_int_distribution<int64_t> d(lo, hi);
        return d(rng_);
    }

    bool coin() { return uniform(0, 1) == 1; }

    Int integer(int64_t lo, int64_t hi) { return Int(uniform(lo, hi)); }

    // Integral element with coordinates in [-bound, bound].
    FieldElement element(const Order& ord, int64_t bound) {
        Int x = integer(-bound, bound);
        Int y = ord.is_zring() ? Int(0) : integer(-bound, bound);
        return FieldElement(ord, x, y);
    }

    FieldElement nonzero_element(const Order& ord, int64_t bound) {
        while (true) {
            FieldElement e = element(ord, bound);
            if (!e.is_zero()) return e;
        }
    }

    // Nonzero ideal generated by one or two random elements.
    IntegralIdeal ideal(const Order& ord, int64_t bound) {
        FieldElement g1 = nonzero_element(ord, bound);
        if (coin()) return IntegralIdeal::principal(g1);
        FieldElement g2 = nonzero_element(ord, bound);
        return ideal_from_generators({g1, g2}, ord);
    }

    std::mt19937_64& rng() { return rng_; }

private:
    std::mt19937_64 rng_;
};

}  // namespace sgkt
