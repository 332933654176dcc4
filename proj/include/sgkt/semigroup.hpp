#pragma once

#include "sgkt/element.hpp"
#include "sgkt/errors.hpp"
#include "sgkt/ideal.hpp"
#include "sgkt/order.hpp"

#include <optional>
#include <string>
#include <vector>

namespace sgkt {

enum class Family { Mult, PrincipalIdeals, Axb };

struct SemigroupKind {
    Family family;
    Order order;

    bool operator==(const SemigroupKind& o) const {
        return family == o.family && order == o.order;
    }
    std::string str() const;
};

// One element of R^x, R^x/R* (a principal ideal with a cached generator) or
// the ax+b semigroup R x| R^x.
class SemigroupElement {
public:
    static SemigroupElement mult(const FieldElement& a);
    static SemigroupElement axb(const FieldElement& b, const FieldElement& a);
    static SemigroupElement principal_from_generator(const FieldElement& g);
    // Certifies principality by short-vector search; throws domain_error when
    // the ideal class is nontrivial.
    static SemigroupElement principal_from_ideal(const IntegralIdeal& I);
    static SemigroupElement identity(const SemigroupKind& kind);

    const SemigroupKind& kind() const { return kind_; }
    const Order& order() const { return kind_.order; }

    const FieldElement& mult_part() const { return a_; }  // Mult and Axb "a"
    const FieldElement& add_part() const { return b_; }   // Axb "b"
    const IntegralIdeal& ideal() const { return ideal_; }
    const FieldElement& generator() const { return a_; }

    bool is_identity() const;

    bool operator==(const SemigroupElement& o) const;
    bool operator!=(const SemigroupElement& o) const { return !(*this == o); }
    bool operator<(const SemigroupElement& o) const;

    // "m:(x+y*w)", "axb:(b|a)", "p:[a, b+c*w]"
    std::string str() const;

private:
    SemigroupKind kind_;
    FieldElement a_;       // multiplier (Mult, Axb) or cached generator (PrincipalIdeals)
    FieldElement b_;       // additive part (Axb only)
    IntegralIdeal ideal_;  // PrincipalIdeals only
};

SemigroupElement compose(const SemigroupElement& s, const SemigroupElement& t);

// Tests p <= q in the left Ore order (q in Pp); returns r with q = r p.
std::optional<SemigroupElement> divides(const SemigroupElement& p, const SemigroupElement& q);

// Left division: x with q = p x, when q lies in pP.
std::optional<SemigroupElement> left_divides(const SemigroupElement& p,
                                             const SemigroupElement& q);

// Some q with p1 <= q and p2 <= q (a constructed witness, not a least one).
SemigroupElement common_upper_bound(const SemigroupElement& p1, const SemigroupElement& p2);

// An element of the enveloping group G = P^{-1} P as a class [p^{-1} x] with
// a canonical normal form per family: a K^x element, a pair in K x| K^x, or
// a principal fractional ideal.
class QuotientPair {
public:
    QuotientPair(SemigroupElement p, SemigroupElement x);

    static QuotientPair embed(const SemigroupElement& p);
    static QuotientPair identity(const SemigroupKind& kind);

    const SemigroupKind& kind() const { return p_.kind(); }
    const SemigroupElement& denom() const { return p_; }
    const SemigroupElement& numer() const { return x_; }

    // Normal forms: Mult -> (beta, unused); Axb -> (beta, alpha);
    // PrincipalIdeals -> fractional ideal.
    const FieldElement& nf_alpha() const { return alpha_; }
    const FieldElement& nf_beta() const { return beta_; }
    const FractionalIdeal& nf_ideal() const { return frac_; }

    QuotientPair inverse() const;

    bool operator==(const QuotientPair& o) const;
    bool operator!=(const QuotientPair& o) const { return !(*this == o); }

    std::string str() const;

private:
    SemigroupElement p_, x_;
    FieldElement alpha_, beta_;  // K x| K^x data (alpha for Mult too)
    FractionalIdeal frac_;       // PrincipalIdeals normal form
};

// Product by the inductive-limit formula: pick y with x1 <= y, p2 <= y and
// form [((y x1^{-1}) p1)^{-1} ((y p2^{-1}) x2)]. The result is checked
// against the direct normal-form product before returning.
QuotientPair group_mul(const QuotientPair& g1, const QuotientPair& g2);

// Variant taking an explicit upper bound y (used to test y-independence).
QuotientPair group_mul_with_witness(const QuotientPair& g1, const QuotientPair& g2,
                                    const SemigroupElement& y);

struct OreReport {
    size_t samples = 0;
    std::vector<std::string> failures;
    bool pass() const { return failures.empty(); }
};

// Samples cancellativity and upward directedness; failures are report
// content, not exceptions.
OreReport ore_check(const SemigroupKind& kind, size_t sample_size, uint64_t seed = 0);

}  // namespace sgkt
