#include "sgkt/ideal.hpp"

#include <algorithm>
#include <cassert>
#include <tuple>

namespace sgkt {

namespace {

Vec2 vec_of(const FieldElement& e) {
    if (!e.is_integral()) throw domain_error("expected an integral element, got " + e.str());
    return {e.x(), e.y()};
}

IntegralIdeal ideal_scale(const IntegralIdeal& I, const Int& k) {
    if (k <= 0) throw domain_error("ideal_scale: positive scalar required");
    if (I.order().is_zring()) return IntegralIdeal(I.order(), k * I.a(), 0, 1);
    return IntegralIdeal(I.order(), k * I.a(), k * I.b(), k * I.c());
}

// Sort key for deterministic by-norm enumeration: prefer small norm, then the
// representative whose leading coordinate is nonnegative, then (x, y).
struct EnumKey {
    Int norm;
    int neg;
    Int x, y;
    bool operator<(const EnumKey& o) const {
        if (norm != o.norm) return norm < o.norm;
        if (neg != o.neg) return neg < o.neg;
        if (x != o.x) return x < o.x;
        return y < o.y;
    }
};

EnumKey key_of(const FieldElement& e) {
    int neg = (e.x() > 0 || (e.x() == 0 && e.y() >= 0)) ? 0 : 1;
    return EnumKey{e.norm_num(), neg, e.x(), e.y()};
}

}  // namespace

IntegralIdeal::IntegralIdeal(Order ord, Int a, Int b, Int c)
    : ord_(std::move(ord)), a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {
    if (a_ <= 0 || c_ <= 0) throw domain_error("IntegralIdeal: a and c must be positive");
    if (ord_.is_zring()) {
        if (b_ != 0 || c_ != 1) throw domain_error("IntegralIdeal over Z requires b=0, c=1");
        return;
    }
    b_ = fmod(b_, a_);
    if (a_ % c_ != 0 || b_ % c_ != 0)
        throw domain_error("IntegralIdeal: HNF requires c | a and c | b");
    Int a0 = a_ / c_, b0 = b_ / c_;
    Int nb0 = b0 * b0 + ord_.omega_trace() * b0 + ord_.omega_norm();
    if (nb0 % a0 != 0)
        throw domain_error("IntegralIdeal: lattice is not closed under multiplication by w");
}

IntegralIdeal IntegralIdeal::principal(const FieldElement& g) {
    if (g.is_zero()) throw domain_error("principal ideal of zero");
    if (!g.is_integral()) throw domain_error("principal: generator must be integral");
    const Order& ord = g.order();
    if (ord.is_zring()) return IntegralIdeal(ord, abs_int(g.x()), 0, 1);
    return ideal_from_generators({g}, ord);
}

bool IntegralIdeal::contains(const FieldElement& e) const {
    if (!e.is_integral()) return false;
    if (ord_.is_zring()) return e.x() % a_ == 0;
    if (e.y() % c_ != 0) return false;
    return (e.x() - (e.y() / c_) * b_) % a_ == 0;
}

bool IntegralIdeal::contains(const IntegralIdeal& other) const {
    return contains(other.gen1()) && contains(other.gen2());
}

FieldElement IntegralIdeal::reduce(const FieldElement& e) const {
    if (!e.is_integral()) throw domain_error("reduce: integral element expected");
    if (ord_.is_zring()) return FieldElement(ord_, fmod(e.x(), a_));
    Int k = fdiv(e.y(), c_);
    Int y = e.y() - k * c_;
    Int x = fmod(e.x() - k * b_, a_);
    return FieldElement(ord_, x, y);
}

std::string IntegralIdeal::str() const {
    return "[" + a_.str() + ", " + b_.str() + "+" + c_.str() + "*w]";
}

FractionalIdeal::FractionalIdeal(IntegralIdeal num, Int den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_ <= 0) throw domain_error("FractionalIdeal: positive denominator required");
    Int g = num_.order().is_zring() ? gcd_int(den_, num_.a())
                                    : gcd_int(den_, gcd_int(num_.a(), gcd_int(num_.b(), num_.c())));
    if (g > 1) {
        if (num_.order().is_zring())
            num_ = IntegralIdeal(num_.order(), num_.a() / g, 0, 1);
        else
            num_ = IntegralIdeal(num_.order(), num_.a() / g, num_.b() / g, num_.c() / g);
        den_ /= g;
    }
}

FractionalIdeal FractionalIdeal::principal(const FieldElement& g) {
    if (g.is_zero()) throw domain_error("principal fractional ideal of zero");
    FieldElement scaled = g * g.den();  // integral
    return FractionalIdeal(IntegralIdeal::principal(scaled), g.den());
}

bool FractionalIdeal::contains(const FieldElement& e) const {
    FieldElement scaled = e * den_;
    return scaled.is_integral() && num_.contains(scaled);
}

std::string FractionalIdeal::str() const {
    if (den_ == 1) return num_.str();
    return num_.str() + "/" + den_.str();
}

IntegralIdeal ideal_from_generators(const std::vector<FieldElement>& gens, const Order& ord) {
    std::vector<Vec2> cols;
    FieldElement w = FieldElement::omega(ord);
    for (const auto& g : gens) {
        if (g.order() != ord) throw domain_error("ideal_from_generators: mixed orders");
        if (!g.is_integral())
            throw domain_error("ideal_from_generators: generators must be integral");
        if (g.is_zero()) continue;
        cols.push_back(vec_of(g));
        if (!ord.is_zring()) cols.push_back(vec_of(g * w));
    }
    if (cols.empty()) throw domain_error("ideal_from_generators: no nonzero generators");
    if (ord.is_zring()) return IntegralIdeal(ord, hnf_basis_rank1(cols), 0, 1);
    Hnf2 h = hnf_basis(cols);
    return IntegralIdeal(ord, h.a, h.b, h.c);
}

IntegralIdeal ideal_mul(const IntegralIdeal& I, const IntegralIdeal& J) {
    if (I.order() != J.order()) throw domain_error("ideal_mul: mixed orders");
    const Order& ord = I.order();
    if (ord.is_zring()) return IntegralIdeal(ord, I.a() * J.a(), 0, 1);
    FieldElement i1 = I.gen1(), i2 = I.gen2(), j1 = J.gen1(), j2 = J.gen2();
    std::vector<Vec2> cols = {vec_of(i1 * j1), vec_of(i1 * j2), vec_of(i2 * j1),
                              vec_of(i2 * j2)};
    Hnf2 h = hnf_basis(cols);
    return IntegralIdeal(ord, h.a, h.b, h.c);
}

IntegralIdeal ideal_mul(const IntegralIdeal& I, const FieldElement& g) {
    if (g.is_zero() || !g.is_integral())
        throw domain_error("ideal_mul: nonzero integral element required");
    const Order& ord = I.order();
    if (ord.is_zring()) return IntegralIdeal(ord, I.a() * abs_int(g.x()), 0, 1);
    std::vector<Vec2> cols = {vec_of(I.gen1() * g), vec_of(I.gen2() * g)};
    Hnf2 h = hnf_basis(cols);
    return IntegralIdeal(ord, h.a, h.b, h.c);
}

IntegralIdeal ideal_sum(const IntegralIdeal& I, const IntegralIdeal& J) {
    if (I.order() != J.order()) throw domain_error("ideal_sum: mixed orders");
    const Order& ord = I.order();
    if (ord.is_zring()) return IntegralIdeal(ord, gcd_int(I.a(), J.a()), 0, 1);
    std::vector<Vec2> cols = {vec_of(I.gen1()), vec_of(I.gen2()), vec_of(J.gen1()),
                              vec_of(J.gen2())};
    Hnf2 h = hnf_basis(cols);
    return IntegralIdeal(ord, h.a, h.b, h.c);
}

IntegralIdeal ideal_intersect(const IntegralIdeal& I, const IntegralIdeal& J) {
    if (I.order() != J.order()) throw domain_error("ideal_intersect: mixed orders");
    const Order& ord = I.order();
    if (ord.is_zring()) return IntegralIdeal(ord, lcm_int(I.a(), J.a()), 0, 1);
    // Membership constraints: c_i | y and a_i | x - (y/c_i) b_i. The smallest
    // admissible positive y is m0 * lcm(c1, c2), with m0 forced by the CRT
    // compatibility of the two x-congruences.
    Int c3 = lcm_int(I.c(), J.c());
    Int g = gcd_int(I.a(), J.a());
    Int r1 = (c3 / I.c()) * I.b();
    Int r2 = (c3 / J.c()) * J.b();
    Int diff = r1 - r2;
    Int m0 = g / gcd_int(abs_int(diff), g);
    Int cN = m0 * c3;
    Int aN = lcm_int(I.a(), J.a());
    auto [gg, s, t] = ext_gcd(I.a(), J.a());
    Int u1 = m0 * r1, u2 = m0 * r2;
    // x == u1 (mod a1), x == u2 (mod a2); u2 - u1 divisible by gg by choice of m0.
    Int x = u1 + I.a() * (s * ((u2 - u1) / gg));
    return IntegralIdeal(ord, aN, fmod(x, aN), cN);
}

IntegralIdeal ideal_conj(const IntegralIdeal& I) {
    const Order& ord = I.order();
    if (ord.is_zring()) return I;
    Int b2 = fmod(-(I.b() + I.c() * ord.omega_trace()), I.a());
    return IntegralIdeal(ord, I.a(), b2, I.c());
}

bool ideals_coprime(const IntegralIdeal& I, const IntegralIdeal& J) {
    return ideal_sum(I, J).is_unit_ideal();
}

FractionalIdeal ideal_colon(const IntegralIdeal& I, const IntegralIdeal& J) {
    // J is invertible, so (I : J) = I * J^{-1}. Over Z the inverse of aZ is
    // (1/a)Z; in the quadratic case J^{-1} = conj(J) / N(J).
    if (I.order().is_zring()) return FractionalIdeal(I, J.a());
    IntegralIdeal p = ideal_mul(I, ideal_conj(J));
    return FractionalIdeal(p, J.norm());
}

IntegralIdeal ideal_colon_in_ring(const IntegralIdeal& I, const IntegralIdeal& J) {
    FractionalIdeal f = ideal_colon(I, J);
    if (f.is_integral()) return f.num();
    const Order& ord = I.order();
    const Int& d = f.den();
    IntegralIdeal dR = ord.is_zring() ? IntegralIdeal(ord, d, 0, 1) : IntegralIdeal(ord, d, 0, d);
    IntegralIdeal meet = ideal_intersect(f.num(), dR);
    if (ord.is_zring()) return IntegralIdeal(ord, meet.a() / d, 0, 1);
    return IntegralIdeal(ord, meet.a() / d, meet.b() / d, meet.c() / d);
}

FractionalIdeal frac_mul(const FractionalIdeal& F, const FractionalIdeal& G) {
    return FractionalIdeal(ideal_mul(F.num(), G.num()), F.den() * G.den());
}

FractionalIdeal frac_mul(const FractionalIdeal& F, const FieldElement& g) {
    if (g.is_zero()) throw domain_error("frac_mul: nonzero element required");
    FieldElement gi = g * g.den();
    return FractionalIdeal(ideal_mul(F.num(), gi), F.den() * g.den());
}

FractionalIdeal frac_intersect(const FractionalIdeal& F, const FractionalIdeal& G) {
    Int L = lcm_int(F.den(), G.den());
    IntegralIdeal a = ideal_scale(F.num(), L / F.den());
    IntegralIdeal b = ideal_scale(G.num(), L / G.den());
    return FractionalIdeal(ideal_intersect(a, b), L);
}

FractionalIdeal frac_inverse(const FractionalIdeal& F) {
    if (F.order().is_zring())
        return FractionalIdeal(IntegralIdeal(F.order(), F.den(), 0, 1), F.num().a());
    return FractionalIdeal(ideal_scale(ideal_conj(F.num()), F.den()), F.num().norm());
}

FieldElement frac_reduce(const FractionalIdeal& F, const FieldElement& e) {
    Int D = lcm_int(e.den(), F.den());
    FieldElement w = e * D;
    IntegralIdeal M = ideal_scale(F.num(), D / F.den());
    FieldElement r = M.reduce(w);
    return FieldElement(F.order(), r.x(), r.y(), D);
}

std::pair<FieldElement, FieldElement> bezout_one(const IntegralIdeal& I, const IntegralIdeal& J) {
    std::vector<Vec2> cols = {vec_of(I.gen1()), vec_of(I.gen2()), vec_of(J.gen1()),
                              vec_of(J.gen2())};
    auto sol = solve_columns(cols, {Int(1), Int(0)});
    if (!sol) throw domain_error("bezout_one: ideals " + I.str() + " and " + J.str() +
                                 " are not coprime");
    FieldElement u = I.gen1() * (*sol)[0] + I.gen2() * (*sol)[1];
    FieldElement v = J.gen1() * (*sol)[2] + J.gen2() * (*sol)[3];
    assert((u + v).is_one());
    return {u, v};
}

std::optional<FieldElement> solve_mul_congruence(const FieldElement& a, const FieldElement& w,
                                                 const IntegralIdeal& I) {
    const Order& ord = I.order();
    FieldElement aw = a * FieldElement::omega(ord);
    std::vector<Vec2> cols = {vec_of(a), vec_of(aw), vec_of(I.gen1()), vec_of(I.gen2())};
    auto sol = solve_columns(cols, vec_of(w));
    if (!sol) return std::nullopt;
    return FieldElement(ord, (*sol)[0], ord.is_zring() ? Int(0) : (*sol)[1]);
}

std::optional<FieldElement> solve_coset_meet(const IntegralIdeal& I, const FieldElement& v,
                                             const IntegralIdeal& J) {
    std::vector<Vec2> cols = {vec_of(I.gen1()), vec_of(I.gen2()), vec_of(J.gen1()),
                              vec_of(J.gen2())};
    auto sol = solve_columns(cols, vec_of(v));
    if (!sol) return std::nullopt;
    return I.gen1() * (*sol)[0] + I.gen2() * (*sol)[1];
}

FieldElement crt_solve(const std::vector<std::pair<FieldElement, IntegralIdeal>>& congruences) {
    if (congruences.empty()) throw domain_error("crt_solve: no congruences");
    for (size_t i = 0; i < congruences.size(); ++i)
        for (size_t j = i + 1; j < congruences.size(); ++j)
            if (!ideals_coprime(congruences[i].second, congruences[j].second))
                throw domain_error("crt_solve: moduli " + congruences[i].second.str() + " and " +
                                   congruences[j].second.str() + " are not coprime");
    FieldElement x = congruences[0].second.reduce(congruences[0].first);
    IntegralIdeal M = congruences[0].second;
    for (size_t i = 1; i < congruences.size(); ++i) {
        auto [u, v] = bezout_one(M, congruences[i].second);
        // x' = x + (r_i - x) u  ==  x (mod M),  == r_i (mod I_i)
        FieldElement xp = x + (congruences[i].first - x) * u;
        M = ideal_mul(M, congruences[i].second);
        x = M.reduce(xp);
    }
    for (const auto& [r, I] : congruences)
        if (!I.contains(x - r))
            throw std::logic_error("crt_solve: result failed membership re-check");
    return x;
}

std::vector<FieldElement> enumerate_coset_elements(const FieldElement& shift,
                                                   const IntegralIdeal& I,
                                                   const Int& norm_bound) {
    const Order& ord = I.order();
    if (!ord.norm_definite())
        throw unsupported_error("enumerate_coset_elements: indefinite norm form (d > 0)");
    if (!shift.is_integral()) throw domain_error("enumerate_coset_elements: integral shift");
    std::vector<FieldElement> out;
    if (norm_bound < 0) return out;
    if (ord.is_zring()) {
        Int r = isqrt(norm_bound);
        Int lo = -r, hi = r;
        // x == shift.x (mod a)
        Int x0 = fmod(shift.x(), I.a());
        Int xstart = x0 + fdiv(lo - x0 + I.a() - 1, I.a()) * I.a();
        for (Int x = xstart; x <= hi; x += I.a())
            if (x * x <= norm_bound) out.push_back(FieldElement(ord, x));
    } else {
        const Int& t = ord.omega_trace();
        Int q4 = -ord.disc();  // 4n - t^2 > 0
        Int ymax = isqrt(4 * norm_bound / q4);
        Int sy = shift.y(), sx = shift.x();
        for (Int y = -ymax; y <= ymax; ++y) {
            if (fmod(y - sy, I.c()) != 0) continue;
            Int rem4 = 4 * norm_bound - q4 * y * y;
            if (rem4 < 0) continue;
            Int s4 = isqrt(rem4);
            // |2x + t y| <= s4
            Int xlo = fdiv(-s4 - t * y + 1, 2);
            Int xhi = fdiv(s4 - t * y, 2);
            Int k = (y - sy) / I.c();
            Int xbase = fmod(sx + k * I.b(), I.a());
            Int xstart = xbase + fdiv(xlo - xbase + I.a() - 1, I.a()) * I.a();
            for (Int x = xstart; x <= xhi; x += I.a()) {
                FieldElement e(ord, x, y);
                if (e.norm_num() <= norm_bound) out.push_back(e);
            }
        }
    }
    std::sort(out.begin(), out.end(),
              [](const FieldElement& a, const FieldElement& b) { return key_of(a) < key_of(b); });
    return out;
}

std::optional<FieldElement> principal_generator(const IntegralIdeal& I) {
    const Order& ord = I.order();
    if (ord.is_zring()) return FieldElement(ord, I.a());
    if (!ord.is_imaginary())
        throw unsupported_error("principal_generator: real quadratic fields are out of scope");
    Int m = I.norm();
    FieldElement g1 = I.gen1(), g2 = I.gen2();
    // Norm form on the basis: N(p g1 + q g2) = m (A p^2 + B pq + C q^2).
    Int A = g1.norm_num() / m;
    Int C = g2.norm_num() / m;
    FieldElement cross = g1 * g2.conj() + g1.conj() * g2;
    Int B = cross.x() / m;
    Int absD = abs_int(B * B - 4 * A * C);
    Int pmax = isqrt(4 * C / absD) + 1;
    Int qmax = isqrt(4 * A / absD) + 1;
    std::optional<FieldElement> best;
    EnumKey best_key{};
    for (Int q = -qmax; q <= qmax; ++q) {
        for (Int p = -pmax; p <= pmax; ++p) {
            if (A * p * p + B * p * q + C * q * q != 1) continue;
            FieldElement g = g1 * p + g2 * q;
            EnumKey k = key_of(g);
            if (!best || k < best_key) {
                best = g;
                best_key = k;
            }
        }
    }
    return best;
}

}  // namespace sgkt
