#pragma once

#include "sgkt/class_group.hpp"
#include "sgkt/constructible.hpp"
#include "sgkt/units.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace sgkt {

enum class StabilizerVariant { Trivial, FiniteCyclic, FreeAbelianTimesCyclic, IdealSemidirectUnits };

// Stabilizer G_X of a saturated set, with a working membership test.
struct StabilizerDescriptor {
    StabilizerVariant variant = StabilizerVariant::Trivial;
    Int w = 1;                          // torsion order
    Int free_rank = 0;                  // FreeAbelianTimesCyclic only
    std::optional<FractionalIdeal> lattice;  // IdealSemidirectUnits: the ideal I
    std::optional<FieldElement> twist;       // coset representative of X (Axb)

    // Membership of a group element. Mult/PrincipalIdeals ignore beta;
    // PrincipalIdeals passes the K^x element generating the principal
    // fractional ideal acting.
    bool contains(const FieldElement& beta, const FieldElement& alpha) const;

    // Canonical group label, e.g. "1", "Z/2", "Z^2 x| Z/2".
    std::string group_str() const;
    std::string str() const;
};

struct KTheoryRank {
    bool known = false;
    Int k0 = 0, k1 = 0;
    std::string symbolic;  // group label when not known
    std::string note;      // derivation note for known values
};

using KTheoryTable = std::map<std::string, std::pair<Int, Int>>;

// Orbit of a saturated set under the enveloping group: the ideal class of
// its lattice part (the coset is absorbed by translation).
size_t orbit_of(const ClassGroup& cg, const SaturatedSet& S);

StabilizerDescriptor stabilizer_of(const SaturatedSet& S);
StabilizerDescriptor stabilizer_of(const ConstructibleIdeal& X);

KTheoryRank ktheory_of_group(const StabilizerDescriptor& desc,
                             const KTheoryTable* table = nullptr);

struct DecompositionRow {
    size_t class_index;
    std::string class_label;
    IntegralIdeal representative;
    StabilizerDescriptor stabilizer;
    KTheoryRank rank;
};

struct Decomposition {
    SemigroupKind kind;
    Int d;
    Int class_number;
    std::vector<DecompositionRow> rows;
    Int total_k0 = 0, total_k1 = 0;
    std::vector<std::string> symbolic_terms;
    std::vector<std::string> assumptions;
};

Decomposition decompose(const SemigroupKind& kind, const KTheoryTable* table = nullptr);

// JSON document per the published schema.
std::string decomposition_to_json(const Decomposition& dec, int indent = 2);

}  // namespace sgkt
