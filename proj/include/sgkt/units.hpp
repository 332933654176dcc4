#pragma once

#include "sgkt/element.hpp"
#include "sgkt/errors.hpp"
#include "sgkt/order.hpp"

#include <string>
#include <vector>

namespace sgkt {

enum class UnitGroupKind { finite_cyclic, infinite_rank1 };

// Unit group R* of the order. All supported rings (Z and imaginary
// quadratic) have finite cyclic unit groups of order w in {2, 4, 6}.
struct UnitGroupDescriptor {
    UnitGroupKind kind;
    Int w;  // torsion order
    std::string str() const {
        return kind == UnitGroupKind::finite_cyclic ? "Z/" + w.str() : "Z x Z/" + w.str();
    }
};

inline UnitGroupDescriptor unit_group(const Order& ord) {
    if (ord.d() > 0)
        throw unsupported_error("unit_group: real quadratic fields are a declared non-goal");
    Int w = 2;
    if (ord.d() == -1) w = 4;
    if (ord.d() == -3) w = 6;
    return UnitGroupDescriptor{UnitGroupKind::finite_cyclic, w};
}

// The w units of the order, starting with 1.
inline std::vector<FieldElement> unit_elements(const Order& ord) {
    FieldElement one = FieldElement::one(ord);
    if (ord.d() == -1) {
        FieldElement i = FieldElement::omega(ord);
        return {one, i, -one, -i};
    }
    if (ord.d() == -3) {
        std::vector<FieldElement> us = {one};
        FieldElement z = FieldElement::omega(ord);  // primitive 6th root of unity
        FieldElement cur = z;
        for (int k = 1; k < 6; ++k) {
            us.push_back(cur);
            cur = cur * z;
        }
        return us;
    }
    if (ord.d() > 0)
        throw unsupported_error("unit_elements: real quadratic fields are a declared non-goal");
    return {one, -one};
}

inline bool is_unit(const FieldElement& e) {
    return e.is_integral() && abs_int(e.norm_num()) == 1;
}

}  // namespace sgkt
