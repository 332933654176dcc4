#include "sgkt/semigroup.hpp"

#include "sgkt/random_gen.hpp"


namespace sgkt {

std::string SemigroupKind::str() const {
    switch (family) {
        case Family::Mult: return "mult";
        case Family::PrincipalIdeals: return "principal";
        case Family::Axb: return "axb";
    }
    return "?";
}

SemigroupElement SemigroupElement::mult(const FieldElement& a) {
    if (a.is_zero() || !a.is_integral())
        throw domain_error("Mult element: nonzero integral element required");
    SemigroupElement e;
    e.kind_ = {Family::Mult, a.order()};
    e.a_ = a;
    e.b_ = FieldElement::zero(a.order());
    e.ideal_ = IntegralIdeal::unit(a.order());
    return e;
}

SemigroupElement SemigroupElement::axb(const FieldElement& b, const FieldElement& a) {
    if (a.is_zero() || !a.is_integral() || !b.is_integral())
        throw domain_error("Axb element: integral pair with nonzero multiplier required");
    if (a.order() != b.order()) throw domain_error("Axb element: mixed orders");
    SemigroupElement e;
    e.kind_ = {Family::Axb, a.order()};
    e.a_ = a;
    e.b_ = b;
    e.ideal_ = IntegralIdeal::unit(a.order());
    return e;
}

SemigroupElement SemigroupElement::principal_from_generator(const FieldElement& g) {
    if (g.is_zero() || !g.is_integral())
        throw domain_error("PrincipalIdeals element: nonzero integral generator required");
    SemigroupElement e;
    e.kind_ = {Family::PrincipalIdeals, g.order()};
    e.ideal_ = IntegralIdeal::principal(g);
    e.a_ = g;
    e.b_ = FieldElement::zero(g.order());
    return e;
}

SemigroupElement SemigroupElement::principal_from_ideal(const IntegralIdeal& I) {
    auto g = principal_generator(I);
    if (!g)
        throw domain_error("PrincipalIdeals element: " + I.str() +
                           " failed the principality certificate");
    SemigroupElement e;
    e.kind_ = {Family::PrincipalIdeals, I.order()};
    e.ideal_ = I;
    e.a_ = *g;
    e.b_ = FieldElement::zero(I.order());
    return e;
}

SemigroupElement SemigroupElement::identity(const SemigroupKind& kind) {
    FieldElement one = FieldElement::one(kind.order);
    switch (kind.family) {
        case Family::Mult: return mult(one);
        case Family::Axb: return axb(FieldElement::zero(kind.order), one);
        case Family::PrincipalIdeals: return principal_from_generator(one);
    }
    throw domain_error("identity: unknown family");
}

bool SemigroupElement::is_identity() const {
    switch (kind_.family) {
        case Family::Mult: return a_.is_one();
        case Family::Axb: return a_.is_one() && b_.is_zero();
        case Family::PrincipalIdeals: return ideal_.is_unit_ideal();
    }
    return false;
}

bool SemigroupElement::operator==(const SemigroupElement& o) const {
    if (!(kind_ == o.kind_)) return false;
    switch (kind_.family) {
        case Family::Mult: return a_ == o.a_;
        case Family::Axb: return a_ == o.a_ && b_ == o.b_;
        case Family::PrincipalIdeals: return ideal_ == o.ideal_;
    }
    return false;
}

bool SemigroupElement::operator<(const SemigroupElement& o) const {
    if (kind_.family == Family::PrincipalIdeals) return ideal_ < o.ideal_;
    if (a_ != o.a_) return a_ < o.a_;
    return b_ < o.b_;
}

std::string SemigroupElement::str() const {
    switch (kind_.family) {
        case Family::Mult: return "m:" + a_.str();
        case Family::Axb: return "axb:(" + b_.str() + "|" + a_.str() + ")";
        case Family::PrincipalIdeals: return "p:" + ideal_.str();
    }
    return "?";
}

SemigroupElement compose(const SemigroupElement& s, const SemigroupElement& t) {
    if (!(s.kind() == t.kind())) throw domain_error("compose: mixed semigroup kinds");
    switch (s.kind().family) {
        case Family::Mult: return SemigroupElement::mult(s.mult_part() * t.mult_part());
        case Family::Axb:
            // (b1, a1)(b2, a2) = (b1 + a1 b2, a1 a2)
            return SemigroupElement::axb(s.add_part() + s.mult_part() * t.add_part(),
                                         s.mult_part() * t.mult_part());
        case Family::PrincipalIdeals:
            return SemigroupElement::principal_from_generator(s.generator() * t.generator());
    }
    throw domain_error("compose: unknown family");
}

std::optional<SemigroupElement> divides(const SemigroupElement& p, const SemigroupElement& q) {
    if (!(p.kind() == q.kind())) throw domain_error("divides: mixed semigroup kinds");
    switch (p.kind().family) {
        case Family::Mult: {
            FieldElement r = q.mult_part() / p.mult_part();
            if (!r.is_integral() || r.is_zero()) return std::nullopt;
            return SemigroupElement::mult(r);
        }
        case Family::Axb: {
            // (y, x)(b, a) = (y + x b, x a) = (b', a')
            FieldElement x = q.mult_part() / p.mult_part();
            if (!x.is_integral() || x.is_zero()) return std::nullopt;
            FieldElement y = q.add_part() - x * p.add_part();
            if (!y.is_integral()) return std::nullopt;
            return SemigroupElement::axb(y, x);
        }
        case Family::PrincipalIdeals: {
            if (!p.ideal().contains(q.ideal())) return std::nullopt;
            FieldElement r = q.generator() / p.generator();
            if (!r.is_integral() || r.is_zero()) return std::nullopt;
            return SemigroupElement::principal_from_generator(r);
        }
    }
    return std::nullopt;
}

std::optional<SemigroupElement> left_divides(const SemigroupElement& p,
                                             const SemigroupElement& q) {
    if (!(p.kind() == q.kind())) throw domain_error("left_divides: mixed semigroup kinds");
    switch (p.kind().family) {
        case Family::Mult:
        case Family::PrincipalIdeals: return divides(p, q);  // abelian
        case Family::Axb: {
            // (b, a)(y, x) = (b + a y, a x) = (b', a')
            FieldElement x = q.mult_part() / p.mult_part();
            if (!x.is_integral() || x.is_zero()) return std::nullopt;
            FieldElement y = (q.add_part() - p.add_part()) / p.mult_part();
            if (!y.is_integral()) return std::nullopt;
            return SemigroupElement::axb(y, x);
        }
    }
    return std::nullopt;
}

SemigroupElement common_upper_bound(const SemigroupElement& p1, const SemigroupElement& p2) {
    if (!(p1.kind() == p2.kind())) throw domain_error("common_upper_bound: mixed kinds");
    if (p1 == p2) return p1;
    SemigroupElement q = [&] {
        switch (p1.kind().family) {
            case Family::Mult:
            case Family::PrincipalIdeals: return compose(p1, p2);
            case Family::Axb:
                // (a1 b2 + a2 b1, a1 a2) = (b2, a2)(b1, a1)-shaped witness
                return SemigroupElement::axb(
                    p1.mult_part() * p2.add_part() + p2.mult_part() * p1.add_part(),
                    p1.mult_part() * p2.mult_part());
        }
        throw domain_error("common_upper_bound: unknown family");
    }();
    if (!divides(p1, q) || !divides(p2, q))
        throw std::logic_error("common_upper_bound: constructed witness failed re-verification");
    return q;
}

namespace {

// Direct normal form of p^{-1} x in K x| K^x (Axb) or K^x (Mult).
void quotient_normal_form(const SemigroupElement& p, const SemigroupElement& x,
                          FieldElement& beta, FieldElement& alpha, FractionalIdeal& frac) {
    const Order& ord = p.order();
    switch (p.kind().family) {
        case Family::Mult:
            alpha = x.mult_part() / p.mult_part();
            beta = FieldElement::zero(ord);
            frac = FractionalIdeal(IntegralIdeal::unit(ord));
            break;
        case Family::Axb:
            // (b,a)^{-1} (b',a') = ((b'-b)/a, a'/a)
            alpha = x.mult_part() / p.mult_part();
            beta = (x.add_part() - p.add_part()) / p.mult_part();
            frac = FractionalIdeal(IntegralIdeal::unit(ord));
            break;
        case Family::PrincipalIdeals:
            alpha = x.generator() / p.generator();
            beta = FieldElement::zero(ord);
            frac = frac_mul(frac_inverse(FractionalIdeal(p.ideal())),
                            FractionalIdeal(x.ideal()));
            break;
    }
}

}  // namespace

QuotientPair::QuotientPair(SemigroupElement p, SemigroupElement x)
    : p_(std::move(p)), x_(std::move(x)) {
    if (!(p_.kind() == x_.kind())) throw domain_error("QuotientPair: mixed kinds");
    quotient_normal_form(p_, x_, beta_, alpha_, frac_);
}

QuotientPair QuotientPair::embed(const SemigroupElement& p) {
    return QuotientPair(SemigroupElement::identity(p.kind()), p);
}

QuotientPair QuotientPair::identity(const SemigroupKind& kind) {
    return embed(SemigroupElement::identity(kind));
}

QuotientPair QuotientPair::inverse() const { return QuotientPair(x_, p_); }

bool QuotientPair::operator==(const QuotientPair& o) const {
    if (!(kind() == o.kind())) return false;
    if (kind().family == Family::PrincipalIdeals) return frac_ == o.frac_;
    return alpha_ == o.alpha_ && beta_ == o.beta_;
}

std::string QuotientPair::str() const {
    if (kind().family == Family::PrincipalIdeals) return "g:" + frac_.str();
    return "g:(" + beta_.str() + "|" + alpha_.str() + ")";
}

QuotientPair group_mul_with_witness(const QuotientPair& g1, const QuotientPair& g2,
                                    const SemigroupElement& y) {
    auto r1 = divides(g1.numer(), y);   // y x1^{-1}
    auto r2 = divides(g2.denom(), y);   // y p2^{-1}
    if (!r1 || !r2)
        throw domain_error("group_mul: witness is not an upper bound of x1 and p2");
    QuotientPair prod(compose(*r1, g1.denom()), compose(*r2, g2.numer()));

    // Cross-check against the direct product of normal forms.
    bool ok = true;
    if (g1.kind().family == Family::PrincipalIdeals) {
        ok = prod.nf_ideal() == frac_mul(g1.nf_ideal(), g2.nf_ideal());
    } else if (g1.kind().family == Family::Mult) {
        ok = prod.nf_alpha() == g1.nf_alpha() * g2.nf_alpha();
    } else {
        ok = prod.nf_alpha() == g1.nf_alpha() * g2.nf_alpha() &&
             prod.nf_beta() == g1.nf_beta() + g1.nf_alpha() * g2.nf_beta();
    }
    if (!ok)
        throw std::logic_error("group_mul: inductive-limit product disagrees with normal forms");
    return prod;
}

QuotientPair group_mul(const QuotientPair& g1, const QuotientPair& g2) {
    SemigroupElement y = common_upper_bound(g1.numer(), g2.denom());
    return group_mul_with_witness(g1, g2, y);
}

OreReport ore_check(const SemigroupKind& kind, size_t sample_size, uint64_t seed) {
    OreReport rep;
    Sampler smp(seed);
    const Order& ord = kind.order;
    auto sample = [&]() -> SemigroupElement {
        switch (kind.family) {
            case Family::Mult: return SemigroupElement::mult(smp.nonzero_element(ord, 9));
            case Family::Axb:
                return SemigroupElement::axb(smp.element(ord, 9), smp.nonzero_element(ord, 9));
            case Family::PrincipalIdeals:
                return SemigroupElement::principal_from_generator(smp.nonzero_element(ord, 9));
        }
        throw domain_error("ore_check: unknown family");
    };
    for (size_t i = 0; i < sample_size; ++i) {
        SemigroupElement p = sample(), x = sample(), y = sample();
        rep.samples++;
        if (x != y) {
            if (compose(p, x) == compose(p, y))
                rep.failures.push_back("left cancellation failed at " + p.str());
            if (compose(x, p) == compose(y, p))
                rep.failures.push_back("right cancellation failed at " + p.str());
        }
        try {
            common_upper_bound(p, x);
        } catch (const std::exception& ex) {
            rep.failures.push_back(std::string("upper bound failed: ") + ex.what());
        }
    }
    return rep;
}

}  // namespace sgkt
