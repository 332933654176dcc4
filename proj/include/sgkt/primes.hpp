#pragma once

#include "sgkt/ideal.hpp"
#include "sgkt/int.hpp"
#include "sgkt/order.hpp"

#include <vector>

namespace sgkt {

// Kronecker symbol (a | n).
int kronecker(Int a, Int n);

struct PrimeIdealInfo {
    IntegralIdeal ideal;
    Int residue_char;    // the rational prime below
    int residue_degree;  // 1 (split/ramified) or 2 (inert)
    bool ramified;
};

// All prime ideals of norm <= bound, by splitting rational primes according
// to the Kronecker symbol of the discriminant. Sorted by (norm, b).
std::vector<PrimeIdealInfo> prime_ideals_up_to(const Order& ord, const Int& bound);

}  // namespace sgkt
