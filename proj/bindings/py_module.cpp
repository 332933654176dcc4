#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sgkt/class_group.hpp"
#include "sgkt/cli.hpp"
#include "sgkt/constructible.hpp"
#include "sgkt/orbit.hpp"
#include "sgkt/primes.hpp"
#include "sgkt/text.hpp"
#include "sgkt/units.hpp"
#include "sgkt/witness.hpp"

#include <json.hpp>

#include <sstream>

namespace py = pybind11;
using namespace sgkt;

namespace {

// cpp_int <-> python int through decimal strings, exact at any size.
Int int_from_py(const py::object& o) {
    return Int(py::str(o).cast<std::string>());
}

py::object int_to_py(const Int& v) {
    return py::module_::import("builtins").attr("int")(py::str(v.str()));
}

SemigroupKind kind_of(const std::string& family, const Order& ord) {
    if (family == "mult") return {Family::Mult, ord};
    if (family == "principal") return {Family::PrincipalIdeals, ord};
    if (family == "axb") return {Family::Axb, ord};
    throw domain_error("unknown semigroup '" + family + "'");
}

py::dict witness_pi4_py(const Order& ord, const py::dict& instance) {
    Pi4Instance inst;
    inst.ambient = parse_ideal(instance["ambient"].cast<std::string>(), ord);
    if (instance.contains("pieces"))
        for (const auto& p : instance["pieces"])
            inst.pieces.push_back(parse_ideal(p.cast<std::string>(), ord));
    if (instance.contains("pairs"))
        for (const auto& pr : instance["pairs"]) {
            py::dict d = pr.cast<py::dict>();
            inst.pairs.push_back({parse_element(d["bp"].cast<std::string>(), ord),
                                  parse_element(d["ap"].cast<std::string>(), ord),
                                  parse_element(d["b"].cast<std::string>(), ord),
                                  parse_element(d["a"].cast<std::string>(), ord)});
        }
    Pi4Witness w = find_pi4_witness(inst);
    py::dict out, wd;
    wd["b"] = w.b.str();
    wd["a"] = w.a.str();
    out["witness"] = wd;
    py::list checks;
    for (const auto& c : w.checks) {
        py::dict cd;
        cd["condition"] = c.condition;
        cd["ok"] = c.ok;
        checks.append(cd);
    }
    out["checks"] = checks;
    return out;
}

py::dict witness_pi5_py(const Order& ord, const py::dict& instance) {
    Pi5Instance inst;
    inst.ambient = parse_ideal(instance["ambient"].cast<std::string>(), ord);
    if (instance.contains("pieces"))
        for (const auto& p : instance["pieces"])
            inst.pieces.push_back(parse_ideal(p.cast<std::string>(), ord));
    Pi5Witness w = find_pi5_witness(inst);
    py::dict out, wd;
    wd["c"] = w.c.str();
    wd["r1"] = w.r1.str();
    wd["r2"] = w.r2.str();
    out["witness"] = wd;
    py::list checks;
    for (const auto& c : w.checks) {
        py::dict cd;
        cd["condition"] = c.condition;
        cd["ok"] = c.ok;
        checks.append(cd);
    }
    out["checks"] = checks;
    return out;
}

}  // namespace

PYBIND11_MODULE(_sgkt, m) {
    m.doc() = "constructible ideals, enveloping groups and K-theory decompositions for "
              "multiplicative and ax+b semigroups over Z and imaginary quadratic orders";

    py::register_exception<domain_error>(m, "DomainError");
    py::register_exception<budget_error>(m, "BudgetError");

    py::class_<Order>(m, "Order")
        .def_property_readonly("d", [](const Order& o) { return int_to_py(o.d()); })
        .def_property_readonly("disc", [](const Order& o) { return int_to_py(o.disc()); })
        .def_property_readonly("is_zring", &Order::is_zring)
        .def("__repr__", &Order::describe)
        .def("__eq__", [](const Order& a, const Order& b) { return a == b; });

    m.def("make_order", [](const py::object& d) { return make_order(int_from_py(d)); },
          py::arg("d"));

    py::class_<FieldElement>(m, "FieldElement")
        .def_property_readonly("x", [](const FieldElement& e) { return int_to_py(e.x()); })
        .def_property_readonly("y", [](const FieldElement& e) { return int_to_py(e.y()); })
        .def_property_readonly("den", [](const FieldElement& e) { return int_to_py(e.den()); })
        .def("norm",
             [](const FieldElement& e) {
                 Rational n = e.norm();
                 py::object num = int_to_py(Int(boost::multiprecision::numerator(n)));
                 py::object den = int_to_py(Int(boost::multiprecision::denominator(n)));
                 return py::module_::import("fractions").attr("Fraction")(num, den);
             })
        .def("__mul__", [](const FieldElement& a, const FieldElement& b) { return a * b; })
        .def("__add__", [](const FieldElement& a, const FieldElement& b) { return a + b; })
        .def("__sub__", [](const FieldElement& a, const FieldElement& b) { return a - b; })
        .def("__truediv__", [](const FieldElement& a, const FieldElement& b) { return a / b; })
        .def("inverse", &FieldElement::inverse)
        .def("conj", &FieldElement::conj)
        .def("__eq__", [](const FieldElement& a, const FieldElement& b) { return a == b; })
        .def("__str__", &FieldElement::str)
        .def("__repr__", &FieldElement::str);

    m.def(
        "element",
        [](const Order& ord, const py::object& x, const py::object& y, const py::object& den) {
            return FieldElement(ord, int_from_py(x), int_from_py(y), int_from_py(den));
        },
        py::arg("order"), py::arg("x"), py::arg("y") = 0, py::arg("den") = 1);
    m.def("parse_element", &parse_element, py::arg("text"), py::arg("order"));

    py::class_<IntegralIdeal>(m, "IntegralIdeal")
        .def_property_readonly("a", [](const IntegralIdeal& I) { return int_to_py(I.a()); })
        .def_property_readonly("b", [](const IntegralIdeal& I) { return int_to_py(I.b()); })
        .def_property_readonly("c", [](const IntegralIdeal& I) { return int_to_py(I.c()); })
        .def("norm", [](const IntegralIdeal& I) { return int_to_py(I.norm()); })
        .def("contains",
             [](const IntegralIdeal& I, const FieldElement& e) { return I.contains(e); })
        .def("__eq__", [](const IntegralIdeal& a, const IntegralIdeal& b) { return a == b; })
        .def("__str__", &IntegralIdeal::str)
        .def("__repr__", &IntegralIdeal::str);

    py::class_<FractionalIdeal>(m, "FractionalIdeal")
        .def_property_readonly("num", &FractionalIdeal::num)
        .def_property_readonly("den",
                               [](const FractionalIdeal& F) { return int_to_py(F.den()); })
        .def("contains",
             [](const FractionalIdeal& F, const FieldElement& e) { return F.contains(e); })
        .def("__eq__", [](const FractionalIdeal& a, const FractionalIdeal& b) { return a == b; })
        .def("__str__", &FractionalIdeal::str)
        .def("__repr__", &FractionalIdeal::str);

    m.def("parse_ideal", &parse_ideal, py::arg("text"), py::arg("order"));
    m.def("parse_fractional", &parse_fractional, py::arg("text"), py::arg("order"));
    m.def("ideal_from_generators", &ideal_from_generators, py::arg("generators"),
          py::arg("order"));
    m.def("principal_ideal", [](const FieldElement& g) { return IntegralIdeal::principal(g); });
    m.def("ideal_mul",
          py::overload_cast<const IntegralIdeal&, const IntegralIdeal&>(&ideal_mul));
    m.def("ideal_intersect", &ideal_intersect);
    m.def("ideal_sum", &ideal_sum);
    m.def("ideal_colon", &ideal_colon);
    m.def("ideal_colon_in_ring", &ideal_colon_in_ring);
    m.def("crt_solve", &crt_solve, py::arg("congruences"),
          "congruences: list of (residue, modulus) pairs with pairwise coprime moduli");

    m.def("prime_ideals_up_to", [](const Order& ord, const py::object& bound) {
        py::list out;
        for (const auto& p : prime_ideals_up_to(ord, int_from_py(bound))) {
            py::dict d;
            d["ideal"] = p.ideal;
            d["norm"] = int_to_py(p.ideal.norm());
            d["residue_char"] = int_to_py(p.residue_char);
            d["residue_degree"] = p.residue_degree;
            d["ramified"] = p.ramified;
            out.append(d);
        }
        return out;
    });

    py::class_<ClassGroup>(m, "ClassGroup")
        .def_property_readonly("h", [](const ClassGroup& cg) { return int_to_py(cg.h()); })
        .def_property_readonly("representatives", &ClassGroup::representatives)
        .def_property_readonly("forms",
                               [](const ClassGroup& cg) {
                                   py::list out;
                                   for (size_t i = 0; i < cg.elements().size(); ++i)
                                       out.append(cg.element_str(i));
                                   return out;
                               })
        .def("identity_index", &ClassGroup::identity_index)
        .def("compose", &ClassGroup::compose)
        .def("inverse", &ClassGroup::inverse)
        .def("class_of",
             py::overload_cast<const IntegralIdeal&>(&ClassGroup::class_of, py::const_))
        .def("class_of_fractional",
             py::overload_cast<const FractionalIdeal&>(&ClassGroup::class_of, py::const_));

    m.def("class_group", [](const Order& ord) { return ClassGroup::compute(ord); });
    m.def("unit_group", [](const Order& ord) {
        UnitGroupDescriptor u = unit_group(ord);
        py::dict d;
        d["kind"] = "finite_cyclic";
        d["w"] = int_to_py(u.w);
        return d;
    });

    py::class_<SemigroupElement>(m, "SemigroupElement")
        .def("__eq__",
             [](const SemigroupElement& a, const SemigroupElement& b) { return a == b; })
        .def("__str__", &SemigroupElement::str)
        .def("__repr__", &SemigroupElement::str);

    m.def("mult_element", &SemigroupElement::mult);
    m.def("axb_element", &SemigroupElement::axb, py::arg("b"), py::arg("a"));
    m.def("principal_element", &SemigroupElement::principal_from_generator);
    m.def("principal_element_from_ideal", &SemigroupElement::principal_from_ideal);
    m.def("parse_semigroup_element", [](const std::string& text, const std::string& family,
                                        const Order& ord) {
        return parse_semigroup_element(text, kind_of(family, ord));
    });
    m.def("compose", &compose);
    m.def("divides", &divides);
    m.def("left_divides", &left_divides);
    m.def("common_upper_bound", &common_upper_bound);

    py::class_<QuotientPair>(m, "QuotientPair")
        .def(py::init<SemigroupElement, SemigroupElement>(), py::arg("p"), py::arg("x"))
        .def_property_readonly("denom", &QuotientPair::denom)
        .def_property_readonly("numer", &QuotientPair::numer)
        .def("inverse", &QuotientPair::inverse)
        .def("__eq__", [](const QuotientPair& a, const QuotientPair& b) { return a == b; })
        .def("__str__", &QuotientPair::str)
        .def("__repr__", &QuotientPair::str);

    m.def("embed", &QuotientPair::embed);
    m.def("group_mul", &group_mul);

    py::class_<ConstructibleIdeal>(m, "ConstructibleIdeal")
        .def_property_readonly("is_empty", &ConstructibleIdeal::is_empty)
        .def("contains",
             [](const ConstructibleIdeal& X, const SemigroupElement& s) { return X.contains(s); })
        .def("__eq__",
             [](const ConstructibleIdeal& a, const ConstructibleIdeal& b) { return a == b; })
        .def("__str__", &ConstructibleIdeal::str)
        .def("__repr__", &ConstructibleIdeal::str);

    m.def("full_set", [](const std::string& family, const Order& ord) {
        return ConstructibleIdeal::full(kind_of(family, ord));
    });
    m.def("empty_set", [](const std::string& family, const Order& ord) {
        return ConstructibleIdeal::empty(kind_of(family, ord));
    });
    m.def("ideal_set", [](const std::string& family, const Order& ord, const IntegralIdeal& I) {
        return ConstructibleIdeal::ideal_set(kind_of(family, ord), I);
    });
    m.def("coset_set", [](const Order& ord, const FieldElement& r, const IntegralIdeal& I) {
        return ConstructibleIdeal::coset_set({Family::Axb, ord}, r, I);
    });
    m.def("parse_constructible", [](const std::string& text, const std::string& family,
                                    const Order& ord) {
        return parse_constructible(text, kind_of(family, ord));
    });
    m.def("left_mul", &left_mul);
    m.def("preimage", &preimage);
    m.def("intersect", &intersect);

    m.def(
        "closure",
        [](const std::string& family, const Order& ord,
           const std::vector<SemigroupElement>& gens, const py::object& norm_bound) {
            return closure(kind_of(family, ord), gens, int_from_py(norm_bound));
        },
        py::arg("family"), py::arg("order"), py::arg("generators"), py::arg("norm_bound"));

    m.def("independence_check",
          [](const ConstructibleIdeal& X, const std::vector<ConstructibleIdeal>& pieces) {
              IndependenceResult res = independence_check(X, pieces);
              py::dict d;
              d["covered"] = res.covered;
              if (res.covered)
                  d["covered_index"] = res.covered_index;
              else
                  d["witness"] = *res.witness;
              return d;
          });

    py::class_<SaturatedSet>(m, "SaturatedSet")
        .def_property_readonly("lattice", &SaturatedSet::lattice)
        .def_property_readonly("coset", &SaturatedSet::coset)
        .def("__eq__", [](const SaturatedSet& a, const SaturatedSet& b) { return a == b; })
        .def("__str__", &SaturatedSet::str)
        .def("__repr__", &SaturatedSet::str);

    m.def("saturate", &saturate);
    m.def("saturated_translate", &saturated_translate);

    m.def("orbit_of", &orbit_of);
    m.def("stabilizer_of", [](const ConstructibleIdeal& X) {
        StabilizerDescriptor d = stabilizer_of(X);
        py::dict out;
        out["descriptor"] = d.str();
        out["group"] = d.group_str();
        out["w"] = int_to_py(d.w);
        return out;
    });

    m.def(
        "decompose",
        [](const std::string& family, const Order& ord) {
            Decomposition dec = decompose(kind_of(family, ord));
            return py::module_::import("json").attr("loads")(decomposition_to_json(dec));
        },
        py::arg("family"), py::arg("order"));

    m.def("find_pi4_witness", &witness_pi4_py, py::arg("order"), py::arg("instance"));
    m.def("find_pi5_witness", &witness_pi5_py, py::arg("order"), py::arg("instance"));

    m.def("run_cli", [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        int code = run_cli(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
    });
}
