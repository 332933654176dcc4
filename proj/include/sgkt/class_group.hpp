#pragma once

#include "sgkt/ideal.hpp"
#include "sgkt/int.hpp"
#include "sgkt/order.hpp"

#include <string>
#include <vector>

namespace sgkt {

// Primitive positive definite binary quadratic form A x^2 + B xy + C y^2.
struct QuadForm {
    Int A, B, C;

    Int disc() const { return B * B - 4 * A * C; }
    bool operator==(const QuadForm& o) const { return A == o.A && B == o.B && C == o.C; }
    bool operator<(const QuadForm& o) const {
        if (A != o.A) return A < o.A;
        if (B != o.B) return B < o.B;
        return C < o.C;
    }
    std::string str() const { return "(" + A.str() + "," + B.str() + "," + C.str() + ")"; }
};

// Reduce a definite form to |B| <= A <= C with B >= 0 when |B| = A or A = C.
QuadForm reduce_form(QuadForm f);

bool is_reduced(const QuadForm& f);

// The fixed form <-> ideal correspondence I(A,B) = Z*A + Z*(-B + sqrt(disc))/2.
IntegralIdeal ideal_of_form(const Order& ord, const QuadForm& f);
QuadForm form_of_ideal(const IntegralIdeal& I);

// Class group of an imaginary quadratic order (or Z, where it is trivial),
// realized on reduced forms. Composition is delegated to exact ideal
// multiplication followed by form reduction, so the table is consistent with
// class_of by construction.
class ClassGroup {
public:
    static ClassGroup compute(const Order& ord);

    const Order& order() const { return ord_; }
    Int h() const { return Int(elements_.size()); }
    const std::vector<QuadForm>& elements() const { return elements_; }
    const std::vector<IntegralIdeal>& representatives() const { return reps_; }
    const std::vector<std::vector<size_t>>& table() const { return table_; }

    size_t identity_index() const { return id_index_; }
    size_t compose(size_t i, size_t j) const { return table_[i][j]; }
    size_t inverse(size_t i) const;

    // Index of the class of a fractional ideal.
    size_t class_of(const FractionalIdeal& J) const;
    size_t class_of(const IntegralIdeal& I) const;

    std::string element_str(size_t i) const;

private:
    Order ord_;
    std::vector<QuadForm> elements_;
    std::vector<IntegralIdeal> reps_;
    std::vector<std::vector<size_t>> table_;
    size_t id_index_ = 0;
};

}  // namespace sgkt
