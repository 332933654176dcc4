#pragma once

#include "sgkt/ideal.hpp"
#include "sgkt/semigroup.hpp"

#include <optional>
#include <string>
#include <vector>

namespace sgkt {

// A constructible right ideal in closed form. For Mult and PrincipalIdeals
// this is I^x = I \ {0}; for Axb it is (r + I) x I^x with the residue stored
// as the canonical coset representative. Empty is a first-class member.
class ConstructibleIdeal {
public:
    static ConstructibleIdeal empty(const SemigroupKind& kind);
    static ConstructibleIdeal full(const SemigroupKind& kind);
    static ConstructibleIdeal ideal_set(const SemigroupKind& kind, const IntegralIdeal& I);
    static ConstructibleIdeal coset_set(const SemigroupKind& kind, const FieldElement& r,
                                        const IntegralIdeal& I);

    const SemigroupKind& kind() const { return kind_; }
    bool is_empty() const { return empty_; }
    const IntegralIdeal& ideal() const;
    const FieldElement& residue() const;

    bool contains(const SemigroupElement& s) const;

    bool operator==(const ConstructibleIdeal& o) const;
    bool operator!=(const ConstructibleIdeal& o) const { return !(*this == o); }
    bool operator<(const ConstructibleIdeal& o) const;

    // Axb "(r mod [I]) x [I]^x"; Mult/PrincipalIdeals "[I]^x"; Empty "{}".
    std::string str() const;

private:
    SemigroupKind kind_;
    bool empty_ = true;
    IntegralIdeal ideal_;
    FieldElement residue_;
};

// p X = {p x : x in X}
ConstructibleIdeal left_mul(const SemigroupElement& p, const ConstructibleIdeal& X);

// p^{-1} X = {q in P : p q in X}
ConstructibleIdeal preimage(const SemigroupElement& p, const ConstructibleIdeal& X);

ConstructibleIdeal intersect(const ConstructibleIdeal& X, const ConstructibleIdeal& Y);

struct ClosureOptions {
    size_t max_family_size = 20000;
    size_t max_rounds = 64;
};

// Fixed point of {left_mul, preimage by the listed generators, pairwise
// intersection} on {P, Empty}, truncated to ideal-part norm <= norm_bound.
// The returned family is sorted canonically.
std::vector<ConstructibleIdeal> closure(const SemigroupKind& kind,
                                        const std::vector<SemigroupElement>& generators,
                                        const Int& norm_bound, const ClosureOptions& opt = {});

struct IndependenceResult {
    bool covered = false;
    size_t covered_index = 0;
    std::optional<SemigroupElement> witness;  // element of X outside every piece
};

// Checks the independence condition for X against pieces (each piece must be
// contained in X). Either some piece equals X, or a deterministic witness of
// X \ union(pieces) is produced and re-verified by membership.
IndependenceResult independence_check(const ConstructibleIdeal& X,
                                      const std::vector<ConstructibleIdeal>& pieces);

// Finite enumerated test surface inside P.
struct Window {
    SemigroupKind kind;
    std::vector<SemigroupElement> points;

    // All elements with coordinates bounded by `bound` (for Axb both parts);
    // PrincipalIdeals windows are deduplicated by HNF.
    static Window box(const SemigroupKind& kind, int64_t bound);
};

struct IdentityReport {
    size_t window_size = 0;
    size_t checks = 0;
    std::vector<std::string> failures;
    bool pass() const { return failures.empty(); }
};

// Pointwise verification, on the window, of
//   1_X * 1_Y = 1_{X cap Y}
//   q in pX  <->  q = p x for some x in X
//   q in p^{-1}X  <->  p q in X
IdentityReport verify_projection_identities(const SemigroupElement& p,
                                            const ConstructibleIdeal& X,
                                            const ConstructibleIdeal& Y, const Window& window);

// q^{-1} . X inside the enveloping group, in normal form: a fractional ideal
// F plus (for Axb) a coset representative modulo F.
class SaturatedSet {
public:
    SaturatedSet(SemigroupKind kind, FieldElement coset, FractionalIdeal lattice);

    const SemigroupKind& kind() const { return kind_; }
    const FractionalIdeal& lattice() const { return lattice_; }
    const FieldElement& coset() const { return coset_; }

    bool operator==(const SaturatedSet& o) const;
    bool operator!=(const SaturatedSet& o) const { return !(*this == o); }

    std::string str() const;

private:
    SemigroupKind kind_;
    FieldElement coset_;  // canonical representative modulo lattice_
    FractionalIdeal lattice_;
};

SaturatedSet saturate(const ConstructibleIdeal& X, const SemigroupElement& q);

inline bool saturated_equal(const SaturatedSet& S, const SaturatedSet& T) { return S == T; }

// Left translation action of the enveloping group on saturated sets.
// Mult/PrincipalIdeals: g is a K^x element; Axb: g = (beta, alpha).
SaturatedSet saturated_translate(const SaturatedSet& S, const FieldElement& beta,
                                 const FieldElement& alpha);

// Intersection of two saturated sets (empty result -> nullopt).
std::optional<SaturatedSet> saturated_intersect(const SaturatedSet& S, const SaturatedSet& T);

}  // namespace sgkt
