#pragma once

#include "sgkt/element.hpp"
#include "sgkt/ideal.hpp"

#include <string>
#include <vector>

namespace sgkt {

// Instance data for the projection-commutation witness: ambient set
// (r + I~) x I~^x minus the pieces (s_k + J~_k) x J~_k^x, together with the
// off-diagonal pairs (q_i, p_i) = ((b'_i, a'_i), (b_i, a_i)) to be crushed.
struct Pi4Instance {
    IntegralIdeal ambient;               // I~
    std::vector<IntegralIdeal> pieces;   // J~_k <= I~, possibly none
    struct Pair {
        FieldElement bp, ap;  // (b'_i, a'_i)
        FieldElement b, a;    // (b_i, a_i)
    };
    std::vector<Pair> pairs;  // each with (b'_i, a'_i) != (b_i, a_i)

    void validate() const;
};

struct Pi5Instance {
    IntegralIdeal ambient;              // I
    std::vector<IntegralIdeal> pieces;  // J_k <= I

    void validate() const;
};

struct ConditionCheck {
    std::string condition;
    bool ok;
};

struct Pi4Witness {
    FieldElement b, a;
    std::vector<ConditionCheck> checks;
    bool all_ok() const;
};

struct Pi5Witness {
    FieldElement c, r1, r2;
    std::vector<ConditionCheck> checks;
    bool all_ok() const;
};

// Nonzero a with a in 1 + J and z not in aR, built from a prime ideal P with
// z not in P and J not contained in P, then CRT. Deterministic: primes are
// tried by increasing norm. Throws budget_error past the prime norm cap.
FieldElement prime_avoiding_element(const IntegralIdeal& J, const FieldElement& z,
                                    const Int& prime_norm_cap = Int(1000000));

// (b, a) satisfying 1_b, 2_b, 1_a, 2_a; every condition re-verified by the
// independent checker before returning.
Pi4Witness find_pi4_witness(const Pi4Instance& inst);

// (c, r1, r2) satisfying (*_c) and (*_r), re-verified likewise.
Pi5Witness find_pi5_witness(const Pi5Instance& inst);

// Independent verifiers: re-implement the conditions from the raw membership
// tests, sharing no logic with the search.
std::vector<ConditionCheck> verify_pi4(const Pi4Instance& inst, const FieldElement& b,
                                       const FieldElement& a);
std::vector<ConditionCheck> verify_pi5(const Pi5Instance& inst, const FieldElement& c,
                                       const FieldElement& r1, const FieldElement& r2);

}  // namespace sgkt
