#include "sgkt/class_group.hpp"

#include <algorithm>
#include <map>

namespace sgkt {

bool is_reduced(const QuadForm& f) {
    if (f.A <= 0) return false;
    Int ab = abs_int(f.B);
    if (!(ab <= f.A && f.A <= f.C)) return false;
    if ((ab == f.A || f.A == f.C) && f.B < 0) return false;
    return true;
}

QuadForm reduce_form(QuadForm f) {
    if (f.disc() >= 0) throw domain_error("reduce_form: definite forms only");
    while (true) {
        // normalize B into (-A, A]
        Int k = fdiv(f.A - f.B, 2 * f.A);
        if (k != 0) {
            Int b2 = f.B + 2 * k * f.A;
            Int c2 = (b2 * b2 - f.disc()) / (4 * f.A);
            f.B = b2;
            f.C = c2;
        }
        if (f.A > f.C) {
            f = QuadForm{f.C, -f.B, f.A};
            continue;
        }
        if (f.A == f.C && f.B < 0) f.B = -f.B;
        if (abs_int(f.B) == f.A && f.B < 0) f.B = -f.B;
        break;
    }
    return f;
}

IntegralIdeal ideal_of_form(const Order& ord, const QuadForm& f) {
    if (f.disc() != ord.disc()) throw domain_error("ideal_of_form: discriminant mismatch");
    // (-B + sqrt(disc))/2 = (-B - t)/2 + w
    Int b0 = fmod((-f.B - ord.omega_trace()) / 2, f.A);
    return IntegralIdeal(ord, f.A, b0, 1);
}

QuadForm form_of_ideal(const IntegralIdeal& I) {
    const Order& ord = I.order();
    if (ord.is_zring()) throw domain_error("form_of_ideal: quadratic order required");
    Int a0 = I.a() / I.c();
    Int b0 = I.b() / I.c();
    Int t = ord.omega_trace(), n = ord.omega_norm();
    Int B = -(2 * b0 + t);
    Int C = (b0 * b0 + t * b0 + n) / a0;
    return QuadForm{a0, B, C};
}

ClassGroup ClassGroup::compute(const Order& ord) {
    if (ord.d() > 0)
        throw unsupported_error("class_group: real quadratic fields are a declared non-goal");
    ClassGroup cg;
    cg.ord_ = ord;
    if (ord.is_zring()) {
        cg.elements_ = {QuadForm{1, 1, 0}};  // sentinel; Z has trivial class group
        cg.reps_ = {IntegralIdeal::unit(ord)};
        cg.table_ = {{0}};
        cg.id_index_ = 0;
        return cg;
    }
    const Int D = ord.disc();
    // Enumerate reduced primitive forms: |B| <= A <= C, B == D (mod 2).
    Int amax = isqrt(abs_int(D) / 3);
    for (Int A = 1; A <= amax; ++A) {
        for (Int B = -A; B <= A; ++B) {
            if (fmod(B - D, 2) != 0) continue;
            Int num = B * B - D;
            if (num % (4 * A) != 0) continue;
            Int C = num / (4 * A);
            QuadForm f{A, B, C};
            if (!is_reduced(f)) continue;
            if (gcd_int(gcd_int(A, B), C) != 1) continue;
            cg.elements_.push_back(f);
        }
    }
    std::sort(cg.elements_.begin(), cg.elements_.end());
    std::map<QuadForm, size_t> index;
    for (size_t i = 0; i < cg.elements_.size(); ++i) {
        index[cg.elements_[i]] = i;
        cg.reps_.push_back(ideal_of_form(ord, cg.elements_[i]));
        if (cg.elements_[i].A == 1) cg.id_index_ = i;
    }
    size_t h = cg.elements_.size();
    cg.table_.assign(h, std::vector<size_t>(h, 0));
    for (size_t i = 0; i < h; ++i) {
        for (size_t j = 0; j < h; ++j) {
            IntegralIdeal prod = ideal_mul(cg.reps_[i], cg.reps_[j]);
            QuadForm f = reduce_form(form_of_ideal(prod));
            auto it = index.find(f);
            if (it == index.end())
                throw std::logic_error("class group composition left the reduced-form set");
            cg.table_[i][j] = it->second;
        }
    }
    return cg;
}

size_t ClassGroup::inverse(size_t i) const {
    for (size_t j = 0; j < elements_.size(); ++j)
        if (table_[i][j] == id_index_) return j;
    throw std::logic_error("class group element without inverse");
}

size_t ClassGroup::class_of(const IntegralIdeal& I) const {
    if (ord_.is_zring()) return 0;
    QuadForm f = reduce_form(form_of_ideal(I));
    for (size_t i = 0; i < elements_.size(); ++i)
        if (elements_[i] == f) return i;
    throw std::logic_error("class_of: reduced form not in class group enumeration");
}

size_t ClassGroup::class_of(const FractionalIdeal& J) const { return class_of(J.num()); }

std::string ClassGroup::element_str(size_t i) const {
    if (ord_.is_zring()) return "1";
    return elements_[i].str();
}

}  // namespace sgkt
