#pragma once

#include "sgkt/element.hpp"
#include "sgkt/errors.hpp"
#include "sgkt/int.hpp"
#include "sgkt/lattice.hpp"
#include "sgkt/order.hpp"

#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace sgkt {

// Nonzero ideal of the order in Hermite normal form: the lattice
// Z*a + Z*(b + c*w) with c | a, c | b, 0 <= b < a. Over Z the second basis
// slot is unused and pinned to b = 0, c = 1; the norm a*c then degrades
// gracefully to [Z : aZ] = a.
class IntegralIdeal {
public:
    IntegralIdeal() = default;
    IntegralIdeal(Order ord, Int a, Int b, Int c);

    static IntegralIdeal unit(const Order& ord) { return IntegralIdeal(ord, 1, 0, 1); }
    static IntegralIdeal principal(const FieldElement& g);

    const Order& order() const { return ord_; }
    const Int& a() const { return a_; }
    const Int& b() const { return b_; }
    const Int& c() const { return c_; }

    Int norm() const { return a_ * c_; }
    bool is_unit_ideal() const { return a_ == 1 && c_ == 1; }

    FieldElement gen1() const { return FieldElement(ord_, a_); }
    FieldElement gen2() const { return FieldElement(ord_, b_, ord_.is_zring() ? 0 : c_); }

    bool contains(const FieldElement& e) const;
    bool contains(const IntegralIdeal& other) const;

    // Canonical coset representative of e modulo this lattice (e integral).
    FieldElement reduce(const FieldElement& e) const;

    bool operator==(const IntegralIdeal& o) const {
        return ord_ == o.ord_ && a_ == o.a_ && b_ == o.b_ && c_ == o.c_;
    }
    bool operator!=(const IntegralIdeal& o) const { return !(*this == o); }
    bool operator<(const IntegralIdeal& o) const {
        if (a_ != o.a_) return a_ < o.a_;
        if (b_ != o.b_) return b_ < o.b_;
        return c_ < o.c_;
    }

    // "[a, b+c*w]"
    std::string str() const;
    friend std::ostream& operator<<(std::ostream& os, const IntegralIdeal& I) {
        return os << I.str();
    }

private:
    Order ord_;
    Int a_ = 1, b_ = 0, c_ = 1;
};

// num / den with den > 0 minimal (no rational prime divides both out).
class FractionalIdeal {
public:
    FractionalIdeal() = default;
    explicit FractionalIdeal(IntegralIdeal num, Int den = 1);

    static FractionalIdeal principal(const FieldElement& g);

    const IntegralIdeal& num() const { return num_; }
    const Int& den() const { return den_; }
    const Order& order() const { return num_.order(); }

    bool is_integral() const { return den_ == 1; }
    Rational norm() const { return Rational(num_.norm(), den_ * den_); }

    bool contains(const FieldElement& e) const;

    bool operator==(const FractionalIdeal& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const FractionalIdeal& o) const { return !(*this == o); }
    bool operator<(const FractionalIdeal& o) const {
        if (den_ != o.den_) return den_ < o.den_;
        return num_ < o.num_;
    }

    // "[a, b+c*w]" when integral, "[a, b+c*w]/den" otherwise.
    std::string str() const;
    friend std::ostream& operator<<(std::ostream& os, const FractionalIdeal& F) {
        return os << F.str();
    }

private:
    IntegralIdeal num_;
    Int den_ = 1;
};

// --- ideal arithmetic -------------------------------------------------------

IntegralIdeal ideal_from_generators(const std::vector<FieldElement>& gens, const Order& ord);
IntegralIdeal ideal_mul(const IntegralIdeal& I, const IntegralIdeal& J);
IntegralIdeal ideal_mul(const IntegralIdeal& I, const FieldElement& g);
IntegralIdeal ideal_sum(const IntegralIdeal& I, const IntegralIdeal& J);
IntegralIdeal ideal_intersect(const IntegralIdeal& I, const IntegralIdeal& J);
IntegralIdeal ideal_conj(const IntegralIdeal& I);

bool ideals_coprime(const IntegralIdeal& I, const IntegralIdeal& J);

// (I : J) = {x in K : xJ <= I}, a fractional ideal (J invertible here).
FractionalIdeal ideal_colon(const IntegralIdeal& I, const IntegralIdeal& J);

// (I : J) intersected with the order; this is the preimage workhorse
// {x in R : xJ <= I}.
IntegralIdeal ideal_colon_in_ring(const IntegralIdeal& I, const IntegralIdeal& J);

// --- fractional arithmetic --------------------------------------------------

FractionalIdeal frac_mul(const FractionalIdeal& F, const FractionalIdeal& G);
FractionalIdeal frac_mul(const FractionalIdeal& F, const FieldElement& g);
FractionalIdeal frac_intersect(const FractionalIdeal& F, const FractionalIdeal& G);
FractionalIdeal frac_inverse(const FractionalIdeal& F);

// Canonical coset representative of e modulo the fractional lattice F.
FieldElement frac_reduce(const FractionalIdeal& F, const FieldElement& e);

// --- solving inside lattices ------------------------------------------------

// Coefficients on {gen1, gen2} of both ideals with
// u + v = 1, u in I, v in J; throws domain_error when I + J != R.
std::pair<FieldElement, FieldElement> bezout_one(const IntegralIdeal& I, const IntegralIdeal& J);

// One solution s of a*s == w (mod I), if any.
std::optional<FieldElement> solve_mul_congruence(const FieldElement& a, const FieldElement& w,
                                                 const IntegralIdeal& I);

// One element of (v + J) lying in I, if any.
std::optional<FieldElement> solve_coset_meet(const IntegralIdeal& I, const FieldElement& v,
                                             const IntegralIdeal& J);

// Chinese remainder: x == residue_i (mod modulus_i) for pairwise coprime
// moduli; the result is the canonical representative modulo the product and
// is re-verified by membership before returning.
FieldElement crt_solve(const std::vector<std::pair<FieldElement, IntegralIdeal>>& congruences);

// --- element enumeration ----------------------------------------------------

// Elements of shift + I with norm <= norm_bound, in the deterministic order
// (norm, nonnegative-leading-representative first, x, y). Requires a
// definite norm form (d <= 0). Zero is included when it lies in the coset.
std::vector<FieldElement> enumerate_coset_elements(const FieldElement& shift,
                                                   const IntegralIdeal& I, const Int& norm_bound);

// Short-vector search for a generator: returns one iff I is principal.
std::optional<FieldElement> principal_generator(const IntegralIdeal& I);

}  // namespace sgkt
