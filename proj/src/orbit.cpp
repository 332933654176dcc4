#include "sgkt/orbit.hpp"

#include <json.hpp>

namespace sgkt {

bool StabilizerDescriptor::contains(const FieldElement& beta, const FieldElement& alpha) const {
    switch (variant) {
        case StabilizerVariant::Trivial:
            return alpha.is_one() && beta.is_zero();
        case StabilizerVariant::FiniteCyclic:
        case StabilizerVariant::FreeAbelianTimesCyclic:
            return is_unit(alpha);
        case StabilizerVariant::IdealSemidirectUnits: {
            if (!is_unit(alpha)) return false;
            FieldElement t = twist ? *twist : FieldElement::zero(alpha.order());
            // (beta, alpha) fixes t + I  <=>  beta + alpha t - t in I
            return lattice->contains(beta + alpha * t - t);
        }
    }
    return false;
}

std::string StabilizerDescriptor::group_str() const {
    switch (variant) {
        case StabilizerVariant::Trivial: return "1";
        case StabilizerVariant::FiniteCyclic: return "Z/" + w.str();
        case StabilizerVariant::FreeAbelianTimesCyclic:
            return "Z^" + free_rank.str() + " x Z/" + w.str();
        case StabilizerVariant::IdealSemidirectUnits: {
            std::string rank = lattice->order().is_zring() ? "Z" : "Z^2";
            return rank + " x| Z/" + w.str();
        }
    }
    return "?";
}

std::string StabilizerDescriptor::str() const {
    if (variant == StabilizerVariant::IdealSemidirectUnits)
        return "I x| R*, I = " + lattice->str() + ", |R*| = " + w.str();
    if (variant == StabilizerVariant::FiniteCyclic) return "R* = Z/" + w.str();
    return group_str();
}

size_t orbit_of(const ClassGroup& cg, const SaturatedSet& S) {
    return cg.class_of(S.lattice());
}

StabilizerDescriptor stabilizer_of(const SaturatedSet& S) {
    StabilizerDescriptor d;
    const Order& ord = S.kind().order;
    switch (S.kind().family) {
        case Family::Mult:
            d.variant = StabilizerVariant::FiniteCyclic;
            d.w = unit_group(ord).w;
            break;
        case Family::PrincipalIdeals:
            d.variant = StabilizerVariant::Trivial;
            d.w = 1;
            break;
        case Family::Axb:
            d.variant = StabilizerVariant::IdealSemidirectUnits;
            d.w = unit_group(ord).w;
            d.lattice = S.lattice();
            d.twist = S.coset();
            break;
    }
    return d;
}

StabilizerDescriptor stabilizer_of(const ConstructibleIdeal& X) {
    if (X.is_empty()) throw domain_error("stabilizer_of: X must be non-empty");
    return stabilizer_of(saturate(X, SemigroupElement::identity(X.kind())));
}

KTheoryRank ktheory_of_group(const StabilizerDescriptor& desc, const KTheoryTable* table) {
    KTheoryRank r;
    switch (desc.variant) {
        case StabilizerVariant::Trivial:
            r.known = true;
            r.k0 = 1;
            r.k1 = 0;
            r.note = "K of the scalars: K0 = Z, K1 = 0";
            return r;
        case StabilizerVariant::FiniteCyclic:
            r.known = true;
            r.k0 = desc.w;
            r.k1 = 0;
            r.note = "character decomposition: the group algebra of Z/" + desc.w.str() +
                     " splits into " + desc.w.str() + " one-dimensional summands";
            return r;
        case StabilizerVariant::FreeAbelianTimesCyclic: {
            if (desc.free_rank < 1) throw domain_error("FreeAbelianTimesCyclic needs rank >= 1");
            // K of C(T^n) x C^w: ranks w * 2^(n-1) in both degrees.
            Int half = desc.w;
            for (Int i = 1; i < desc.free_rank; ++i) half *= 2;
            r.known = true;
            r.k0 = half;
            r.k1 = half;
            r.note = "Kunneth recursion over " + desc.free_rank.str() +
                     " circle factors and Z/" + desc.w.str();
            return r;
        }
        case StabilizerVariant::IdealSemidirectUnits: {
            std::string key = desc.group_str();
            if (table) {
                auto it = table->find(key);
                if (it != table->end()) {
                    r.known = true;
                    r.k0 = it->second.first;
                    r.k1 = it->second.second;
                    r.note = "user-supplied table entry for " + key;
                    return r;
                }
            }
            r.known = false;
            r.symbolic = "K_*(C*_r(" + key + "))";
            return r;
        }
    }
    throw domain_error("ktheory_of_group: unknown descriptor");
}

Decomposition decompose(const SemigroupKind& kind, const KTheoryTable* table) {
    const Order& ord = kind.order;
    ClassGroup cg = ClassGroup::compute(ord);
    UnitGroupDescriptor units = unit_group(ord);

    Decomposition dec;
    dec.kind = kind;
    dec.d = ord.d();
    dec.class_number = cg.h();

    std::string envelope = kind.family == Family::Axb
                               ? "enveloping group K x| K^x is solvable, hence amenable"
                               : "enveloping group K^x is abelian, hence amenable";
    dec.assumptions = {
        envelope,
        "(A1) Baum-Connes with coefficients holds: the enveloping group is amenable",
        "(A2) strong Baum-Connes with coefficients holds: the enveloping group is amenable",
        "constructible right ideals are independent (verified by randomized checks)"};

    for (size_t i = 0; i < cg.representatives().size(); ++i) {
        DecompositionRow row;
        row.class_index = i;
        row.class_label = cg.element_str(i);
        row.representative = cg.representatives()[i];

        switch (kind.family) {
            case Family::Mult:
                row.stabilizer.variant = StabilizerVariant::FiniteCyclic;
                row.stabilizer.w = units.w;
                break;
            case Family::PrincipalIdeals:
                row.stabilizer.variant = StabilizerVariant::Trivial;
                row.stabilizer.w = 1;
                break;
            case Family::Axb:
                row.stabilizer.variant = StabilizerVariant::IdealSemidirectUnits;
                row.stabilizer.w = units.w;
                row.stabilizer.lattice = FractionalIdeal(row.representative);
                row.stabilizer.twist = FieldElement::zero(ord);
                break;
        }
        row.rank = ktheory_of_group(row.stabilizer, table);
        if (row.rank.known) {
            dec.total_k0 += row.rank.k0;
            dec.total_k1 += row.rank.k1;
        } else {
            dec.symbolic_terms.push_back(row.rank.symbolic);
        }
        dec.rows.push_back(std::move(row));
    }
    return dec;
}

std::string decomposition_to_json(const Decomposition& dec, int indent) {
    auto as_int = [](const Int& v) { return v.convert_to<long long>(); };
    nlohmann::json j;
    j["semigroup"] = dec.kind.str();
    j["d"] = as_int(dec.d);
    j["class_number"] = as_int(dec.class_number);
    j["rows"] = nlohmann::json::array();
    for (const auto& row : dec.rows) {
        nlohmann::json r;
        r["class"] = row.class_label;
        r["representative"] = row.representative.str();
        r["stabilizer"] = row.stabilizer.str();
        if (row.rank.known) {
            r["k0_rank"] = as_int(row.rank.k0);
            r["k1_rank"] = as_int(row.rank.k1);
            r["symbolic"] = nullptr;
        } else {
            r["k0_rank"] = nullptr;
            r["k1_rank"] = nullptr;
            r["symbolic"] = row.rank.symbolic;
        }
        j["rows"].push_back(r);
    }
    j["total"]["k0_rank"] = as_int(dec.total_k0);
    j["total"]["k1_rank"] = as_int(dec.total_k1);
    j["total"]["symbolic"] = dec.symbolic_terms;
    j["assumptions"] = dec.assumptions;
    return j.dump(indent);
}

}  // namespace sgkt
