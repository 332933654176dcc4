#pragma once

#include "sgkt/constructible.hpp"
#include "sgkt/element.hpp"
#include "sgkt/ideal.hpp"
#include "sgkt/order.hpp"
#include "sgkt/semigroup.hpp"

#include <string>

namespace sgkt {

// Parsers for the CLI text formats. All throw domain_error on malformed
// input. Emission is the str() method of each type; parse(str(x)) == x.
//
//   element        "(x+y*w)/den"   (den optional, the y-term may be omitted)
//   ideal          "[a, b+c*w]"
//   fractional     "[a, b+c*w]/den"
//   semigroup      "m:(x+y*w)", "axb:(b|a)", "p:[a, b+c*w]"
//   constructible  "[I]^x", "(r mod [I]) x [I]^x", "{}"

FieldElement parse_element(const std::string& text, const Order& ord);
IntegralIdeal parse_ideal(const std::string& text, const Order& ord);
FractionalIdeal parse_fractional(const std::string& text, const Order& ord);
SemigroupElement parse_semigroup_element(const std::string& text, const SemigroupKind& kind);
ConstructibleIdeal parse_constructible(const std::string& text, const SemigroupKind& kind);

}  // namespace sgkt
