#include "sgkt/constructible.hpp"

#include <set>

namespace sgkt {

ConstructibleIdeal ConstructibleIdeal::empty(const SemigroupKind& kind) {
    ConstructibleIdeal x;
    x.kind_ = kind;
    x.empty_ = true;
    x.ideal_ = IntegralIdeal::unit(kind.order);
    x.residue_ = FieldElement::zero(kind.order);
    return x;
}

ConstructibleIdeal ConstructibleIdeal::full(const SemigroupKind& kind) {
    return ideal_set(kind, IntegralIdeal::unit(kind.order));
}

ConstructibleIdeal ConstructibleIdeal::ideal_set(const SemigroupKind& kind,
                                                 const IntegralIdeal& I) {
    ConstructibleIdeal x;
    x.kind_ = kind;
    x.empty_ = false;
    x.ideal_ = I;
    x.residue_ = FieldElement::zero(kind.order);
    return x;
}

ConstructibleIdeal ConstructibleIdeal::coset_set(const SemigroupKind& kind, const FieldElement& r,
                                                 const IntegralIdeal& I) {
    if (kind.family != Family::Axb)
        throw domain_error("coset constructible ideals exist only for the ax+b family");
    ConstructibleIdeal x;
    x.kind_ = kind;
    x.empty_ = false;
    x.ideal_ = I;
    x.residue_ = I.reduce(r);
    return x;
}

const IntegralIdeal& ConstructibleIdeal::ideal() const {
    if (empty_) throw domain_error("Empty constructible ideal has no ideal part");
    return ideal_;
}

const FieldElement& ConstructibleIdeal::residue() const {
    if (empty_) throw domain_error("Empty constructible ideal has no residue");
    return residue_;
}

bool ConstructibleIdeal::contains(const SemigroupElement& s) const {
    if (empty_) return false;
    if (!(s.kind() == kind_)) throw domain_error("contains: mixed semigroup kinds");
    switch (kind_.family) {
        case Family::Mult: return ideal_.contains(s.mult_part());
        case Family::PrincipalIdeals: return ideal_.contains(s.generator());
        case Family::Axb:
            return ideal_.contains(s.mult_part()) && ideal_.contains(s.add_part() - residue_);
    }
    return false;
}

bool ConstructibleIdeal::operator==(const ConstructibleIdeal& o) const {
    if (!(kind_ == o.kind_)) return false;
    if (empty_ || o.empty_) return empty_ == o.empty_;
    return ideal_ == o.ideal_ && residue_ == o.residue_;
}

bool ConstructibleIdeal::operator<(const ConstructibleIdeal& o) const {
    if (empty_ != o.empty_) return empty_;  // Empty sorts first
    if (empty_) return false;
    Int n1 = ideal_.norm(), n2 = o.ideal_.norm();
    if (n1 != n2) return n1 < n2;
    if (ideal_ != o.ideal_) return ideal_ < o.ideal_;
    return residue_ < o.residue_;
}

std::string ConstructibleIdeal::str() const {
    if (empty_) return "{}";
    if (kind_.family == Family::Axb)
        return "(" + residue_.str() + " mod " + ideal_.str() + ") x " + ideal_.str() + "^x";
    return ideal_.str() + "^x";
}

ConstructibleIdeal left_mul(const SemigroupElement& p, const ConstructibleIdeal& X) {
    if (!(p.kind() == X.kind())) throw domain_error("left_mul: mixed semigroup kinds");
    if (X.is_empty()) return X;
    switch (p.kind().family) {
        case Family::Mult:
            return ConstructibleIdeal::ideal_set(X.kind(), ideal_mul(X.ideal(), p.mult_part()));
        case Family::PrincipalIdeals:
            return ConstructibleIdeal::ideal_set(X.kind(), ideal_mul(X.ideal(), p.generator()));
        case Family::Axb: {
            // (b,a)((r+I) x I^x) = ((b + a r) + aI) x (aI)^x
            IntegralIdeal aI = ideal_mul(X.ideal(), p.mult_part());
            FieldElement r2 = p.add_part() + p.mult_part() * X.residue();
            return ConstructibleIdeal::coset_set(X.kind(), r2, aI);
        }
    }
    throw domain_error("left_mul: unknown family");
}

ConstructibleIdeal preimage(const SemigroupElement& p, const ConstructibleIdeal& X) {
    if (!(p.kind() == X.kind())) throw domain_error("preimage: mixed semigroup kinds");
    if (X.is_empty()) return X;
    switch (p.kind().family) {
        case Family::Mult: {
            IntegralIdeal J =
                ideal_colon_in_ring(X.ideal(), IntegralIdeal::principal(p.mult_part()));
            return ConstructibleIdeal::ideal_set(X.kind(), J);
        }
        case Family::PrincipalIdeals: {
            IntegralIdeal J =
                ideal_colon_in_ring(X.ideal(), IntegralIdeal::principal(p.generator()));
            return ConstructibleIdeal::ideal_set(X.kind(), J);
        }
        case Family::Axb: {
            // (b,a)^{-1}((r+I) x I^x): multipliers solve a x in I^x, i.e.
            // x in J = (I : aR) cap R; additive parts solve b + a s == r (mod I).
            IntegralIdeal J =
                ideal_colon_in_ring(X.ideal(), IntegralIdeal::principal(p.mult_part()));
            auto s = solve_mul_congruence(p.mult_part(), X.residue() - p.add_part(), X.ideal());
            if (!s) return ConstructibleIdeal::empty(X.kind());
            return ConstructibleIdeal::coset_set(X.kind(), *s, J);
        }
    }
    throw domain_error("preimage: unknown family");
}

ConstructibleIdeal intersect(const ConstructibleIdeal& X, const ConstructibleIdeal& Y) {
    if (!(X.kind() == Y.kind())) throw domain_error("intersect: mixed semigroup kinds");
    if (X.is_empty()) return X;
    if (Y.is_empty()) return Y;
    IntegralIdeal meet = ideal_intersect(X.ideal(), Y.ideal());
    if (X.kind().family != Family::Axb)
        return ConstructibleIdeal::ideal_set(X.kind(), meet);
    // Coset CRT: (r1 + I1) cap (r2 + I2) is r + (I1 cap I2) iff
    // r2 - r1 in I1 + I2.
    auto u = solve_coset_meet(X.ideal(), Y.residue() - X.residue(), Y.ideal());
    if (!u) return ConstructibleIdeal::empty(X.kind());
    return ConstructibleIdeal::coset_set(X.kind(), X.residue() + *u, meet);
}

std::vector<ConstructibleIdeal> closure(const SemigroupKind& kind,
                                        const std::vector<SemigroupElement>& generators,
                                        const Int& norm_bound, const ClosureOptions& opt) {
    if (norm_bound < 1) throw domain_error("closure: norm bound must be >= 1");
    for (const auto& g : generators)
        if (!(g.kind() == kind)) throw domain_error("closure: generator of wrong kind");

    auto keep = [&](const ConstructibleIdeal& x) {
        return x.is_empty() || x.ideal().norm() <= norm_bound;
    };

    std::set<ConstructibleIdeal> family;
    family.insert(ConstructibleIdeal::empty(kind));
    family.insert(ConstructibleIdeal::full(kind));

    std::vector<ConstructibleIdeal> frontier(family.begin(), family.end());
    size_t rounds = 0;
    while (!frontier.empty()) {
        if (++rounds > opt.max_rounds)
            throw budget_error("closure: iteration cap " + std::to_string(opt.max_rounds) +
                               " exceeded");
        std::vector<ConstructibleIdeal> produced;
        auto offer = [&](const ConstructibleIdeal& x) {
            if (!keep(x)) return;
            if (family.insert(x).second) {
                produced.push_back(x);
                if (family.size() > opt.max_family_size)
                    throw budget_error("closure: family size cap " +
                                       std::to_string(opt.max_family_size) + " exceeded");
            }
        };
        for (const auto& x : frontier) {
            for (const auto& g : generators) {
                offer(left_mul(g, x));
                offer(preimage(g, x));
            }
            for (const auto& y : family) offer(intersect(x, y));
        }
        frontier = std::move(produced);
    }
    return {family.begin(), family.end()};
}

IndependenceResult independence_check(const ConstructibleIdeal& X,
                                      const std::vector<ConstructibleIdeal>& pieces) {
    if (X.is_empty()) throw domain_error("independence_check: X must be non-empty");
    IndependenceResult res;
    std::vector<ConstructibleIdeal> proper;
    for (size_t i = 0; i < pieces.size(); ++i) {
        const auto& pc = pieces[i];
        if (pc.is_empty()) continue;
        bool contained = X.ideal().contains(pc.ideal());
        if (contained && X.kind().family == Family::Axb)
            contained = X.ideal().contains(pc.residue() - X.residue());
        if (!contained)
            throw domain_error("independence_check: piece " + pc.str() +
                               " is not contained in " + X.str());
        if (pc == X) {
            res.covered = true;
            res.covered_index = i;
            return res;
        }
        proper.push_back(pc);
    }
    // Every proper piece has a strictly smaller ideal part, so an element of
    // the ideal of X avoiding all piece ideals gives a witness; such an
    // element exists because an ideal is never a finite union of strictly
    // smaller ideals. Deterministic search by increasing norm.
    const Order& ord = X.kind().order;
    const IntegralIdeal& I = X.ideal();
    Int bound = I.norm();
    const Int hard_cap = Int(1) << 40;
    while (true) {
        auto cands = enumerate_coset_elements(FieldElement::zero(ord), I, bound);
        for (const auto& a : cands) {
            if (a.is_zero()) continue;
            bool avoided = true;
            for (const auto& pc : proper)
                if (pc.ideal().contains(a)) {
                    avoided = false;
                    break;
                }
            if (!avoided) continue;
            SemigroupElement w = [&] {
                switch (X.kind().family) {
                    case Family::Mult: return SemigroupElement::mult(a);
                    case Family::PrincipalIdeals:
                        return SemigroupElement::principal_from_generator(a);
                    case Family::Axb: return SemigroupElement::axb(X.residue(), a);
                }
                throw domain_error("independence_check: unknown family");
            }();
            if (!X.contains(w)) throw std::logic_error("independence witness not in X");
            for (const auto& pc : proper)
                if (pc.contains(w)) throw std::logic_error("independence witness inside a piece");
            res.witness = w;
            return res;
        }
        bound *= 4;
        if (bound > hard_cap)
            throw budget_error("independence_check: witness search exceeded norm bound cap");
    }
}

Window Window::box(const SemigroupKind& kind, int64_t bound) {
    Window w;
    w.kind = kind;
    const Order& ord = kind.order;
    std::vector<FieldElement> elems;
    int64_t ylo = ord.is_zring() ? 0 : -bound;
    int64_t yhi = ord.is_zring() ? 0 : bound;
    for (int64_t x = -bound; x <= bound; ++x)
        for (int64_t y = ylo; y <= yhi; ++y)
            elems.push_back(FieldElement(ord, Int(x), Int(y)));
    switch (kind.family) {
        case Family::Mult:
            for (const auto& e : elems)
                if (!e.is_zero()) w.points.push_back(SemigroupElement::mult(e));
            break;
        case Family::Axb:
            for (const auto& b : elems)
                for (const auto& a : elems)
                    if (!a.is_zero()) w.points.push_back(SemigroupElement::axb(b, a));
            break;
        case Family::PrincipalIdeals: {
            std::set<IntegralIdeal> seen;
            for (const auto& e : elems) {
                if (e.is_zero()) continue;
                IntegralIdeal I = IntegralIdeal::principal(e);
                if (seen.insert(I).second)
                    w.points.push_back(SemigroupElement::principal_from_generator(e));
            }
            break;
        }
    }
    return w;
}

IdentityReport verify_projection_identities(const SemigroupElement& p,
                                            const ConstructibleIdeal& X,
                                            const ConstructibleIdeal& Y, const Window& window) {
    IdentityReport rep;
    rep.window_size = window.points.size();
    if (window.points.empty())
        throw domain_error("verify_projection_identities: window must be non-empty");
    ConstructibleIdeal XY = intersect(X, Y);
    ConstructibleIdeal pX = left_mul(p, X);
    ConstructibleIdeal preX = preimage(p, X);
    for (const auto& q : window.points) {
        rep.checks += 3;
        // 1_X(q) 1_Y(q) = 1_{X cap Y}(q)
        if ((X.contains(q) && Y.contains(q)) != XY.contains(q))
            rep.failures.push_back("intersection identity fails at " + q.str());
        // q in pX  <->  q = p x with x in X
        bool lhs = pX.contains(q);
        auto x = left_divides(p, q);
        bool rhs = x.has_value() && X.contains(*x);
        if (lhs != rhs) rep.failures.push_back("left-multiplication identity fails at " + q.str());
        // q in p^{-1} X  <->  p q in X
        if (preX.contains(q) != X.contains(compose(p, q)))
            rep.failures.push_back("preimage identity fails at " + q.str());
    }
    return rep;
}

SaturatedSet::SaturatedSet(SemigroupKind kind, FieldElement coset, FractionalIdeal lattice)
    : kind_(std::move(kind)), coset_(std::move(coset)), lattice_(std::move(lattice)) {
    coset_ = frac_reduce(lattice_, coset_);
}

bool SaturatedSet::operator==(const SaturatedSet& o) const {
    if (!(kind_ == o.kind_)) return false;
    if (kind_.family == Family::Axb) return lattice_ == o.lattice_ && coset_ == o.coset_;
    return lattice_ == o.lattice_;
}

std::string SaturatedSet::str() const {
    if (kind_.family == Family::Axb)
        return "(" + coset_.str() + " mod " + lattice_.str() + ") x " + lattice_.str() + "^x";
    return lattice_.str() + "^x";
}

SaturatedSet saturate(const ConstructibleIdeal& X, const SemigroupElement& q) {
    if (X.is_empty()) throw domain_error("saturate: X must be non-empty");
    if (!(X.kind() == q.kind())) throw domain_error("saturate: mixed semigroup kinds");
    FractionalIdeal F(X.ideal());
    switch (X.kind().family) {
        case Family::Mult:
            return SaturatedSet(X.kind(), FieldElement::zero(q.order()),
                                frac_mul(F, q.mult_part().inverse()));
        case Family::PrincipalIdeals:
            return SaturatedSet(X.kind(), FieldElement::zero(q.order()),
                                frac_mul(F, q.generator().inverse()));
        case Family::Axb: {
            // (b,a)^{-1} . ((r+I) x I^x) = (((r-b)/a) + I/a) x (I/a)^x
            FieldElement ainv = q.mult_part().inverse();
            return SaturatedSet(X.kind(), (X.residue() - q.add_part()) * ainv,
                                frac_mul(F, ainv));
        }
    }
    throw domain_error("saturate: unknown family");
}

SaturatedSet saturated_translate(const SaturatedSet& S, const FieldElement& beta,
                                 const FieldElement& alpha) {
    if (alpha.is_zero()) throw domain_error("saturated_translate: alpha must be nonzero");
    FractionalIdeal F = frac_mul(S.lattice(), alpha);
    if (S.kind().family == Family::Axb)
        return SaturatedSet(S.kind(), beta + alpha * S.coset(), F);
    return SaturatedSet(S.kind(), FieldElement::zero(alpha.order()), F);
}

std::optional<SaturatedSet> saturated_intersect(const SaturatedSet& S, const SaturatedSet& T) {
    if (!(S.kind() == T.kind())) throw domain_error("saturated_intersect: mixed kinds");
    FractionalIdeal meet = frac_intersect(S.lattice(), T.lattice());
    if (S.kind().family != Family::Axb)
        return SaturatedSet(S.kind(), FieldElement::zero(S.kind().order), meet);
    // Scale to a common denominator and solve the coset meet integrally.
    Int D = lcm_int(lcm_int(S.lattice().den(), T.lattice().den()),
                    lcm_int(S.coset().den(), T.coset().den()));
    auto scale_ideal = [&](const FractionalIdeal& F) {
        Int k = D / F.den();
        if (k == 1) return F.num();
        if (F.order().is_zring()) return IntegralIdeal(F.order(), k * F.num().a(), 0, 1);
        return IntegralIdeal(F.order(), k * F.num().a(), k * F.num().b(), k * F.num().c());
    };
    IntegralIdeal I1 = scale_ideal(S.lattice());
    IntegralIdeal I2 = scale_ideal(T.lattice());
    FieldElement r1 = S.coset() * D, r2 = T.coset() * D;
    auto u = solve_coset_meet(I1, r2 - r1, I2);
    if (!u) return std::nullopt;
    FieldElement rep = (r1 + *u) * FieldElement(S.kind().order, 1, 0, D);
    return SaturatedSet(S.kind(), rep, meet);
}

}  // namespace sgkt
