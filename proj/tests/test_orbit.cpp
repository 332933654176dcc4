#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sgkt/orbit.hpp"
#include "sgkt/primes.hpp"
#include "sgkt/random_gen.hpp"

#include <json.hpp>

#include <set>

using namespace sgkt;

namespace {

FieldElement elem(const Order& o, long long x, long long y = 0, long long den = 1) {
    return FieldElement(o, Int(x), Int(y), Int(den));
}

// Random nonzero K^x element with small numerator/denominator.
FieldElement sample_kx(Sampler& smp, const Order& o) {
    FieldElement num = smp.nonzero_element(o, 5);
    Int den = smp.integer(1, 5);
    return FieldElement(o, num.x(), num.y(), den);
}

SaturatedSet sample_saturated(Sampler& smp, const SemigroupKind& kind) {
    IntegralIdeal I = smp.ideal(kind.order, 4);
    SemigroupElement q = kind.family == Family::Axb
                             ? SemigroupElement::axb(smp.element(kind.order, 4),
                                                     smp.nonzero_element(kind.order, 4))
                             : SemigroupElement::mult(smp.nonzero_element(kind.order, 4));
    ConstructibleIdeal X =
        kind.family == Family::Axb
            ? ConstructibleIdeal::coset_set(kind, smp.element(kind.order, 4), I)
            : ConstructibleIdeal::ideal_set(kind, I);
    return saturate(X, q);
}

}  // namespace

TEST_CASE("orbit_of: fixtures and G-invariance") {
    Order o5 = make_order(-5);
    ClassGroup cg = ClassGroup::compute(o5);
    SemigroupKind mk{Family::Mult, o5}, ak{Family::Axb, o5};

    // principal fractional ideal -> identity class
    SaturatedSet sp = saturate(
        ConstructibleIdeal::ideal_set(mk, IntegralIdeal::principal(elem(o5, 3))),
        SemigroupElement::mult(elem(o5, 2)));
    CHECK(orbit_of(cg, sp) == cg.identity_index());

    // translate of the nonprincipal prime above 2 -> the nontrivial class
    IntegralIdeal P2 = ideal_from_generators({elem(o5, 2), elem(o5, 1, 1)}, o5);
    SaturatedSet snp = saturate(
        ConstructibleIdeal::coset_set(ak, elem(o5, 1), P2),
        SemigroupElement::axb(elem(o5, 2, 1), elem(o5, 3)));
    CHECK(orbit_of(cg, snp) != cg.identity_index());

    // invariance under 500 random translations per family
    for (Family fam : {Family::Mult, Family::Axb}) {
        SemigroupKind kind{fam, o5};
        Sampler smp(101);
        for (int i = 0; i < 500; ++i) {
            SaturatedSet S = sample_saturated(smp, kind);
            FieldElement alpha = sample_kx(smp, o5);
            FieldElement beta =
                fam == Family::Axb ? sample_kx(smp, o5) : FieldElement::zero(o5);
            SaturatedSet gS = saturated_translate(S, beta, alpha);
            CHECK(orbit_of(cg, gS) == orbit_of(cg, S));
        }
    }
}

TEST_CASE("orbit count over primes equals the class number") {
    for (const auto& [d, expected] : std::vector<std::pair<long long, size_t>>{{-5, 2}, {-23, 3}}) {
        Order o = make_order(d);
        ClassGroup cg = ClassGroup::compute(o);
        SemigroupKind mk{Family::Mult, o};
        std::set<size_t> classes;
        for (const auto& p : prime_ideals_up_to(o, 50)) {
            SaturatedSet S = saturate(ConstructibleIdeal::ideal_set(mk, p.ideal),
                                      SemigroupElement::identity(mk));
            classes.insert(orbit_of(cg, S));
        }
        CHECK(classes.size() == expected);
    }
}

TEST_CASE("stabilizer_of: variants per family") {
    Order o5 = make_order(-5);
    IntegralIdeal P2 = ideal_from_generators({elem(o5, 2), elem(o5, 1, 1)}, o5);

    SemigroupKind mk{Family::Mult, o5};
    StabilizerDescriptor sm = stabilizer_of(ConstructibleIdeal::ideal_set(mk, P2));
    CHECK(sm.variant == StabilizerVariant::FiniteCyclic);
    CHECK(sm.w == 2);

    SemigroupKind pk{Family::PrincipalIdeals, o5};
    StabilizerDescriptor sp = stabilizer_of(
        ConstructibleIdeal::ideal_set(pk, IntegralIdeal::principal(elem(o5, 3))));
    CHECK(sp.variant == StabilizerVariant::Trivial);

    Order oz = make_order(0);
    SemigroupKind ak{Family::Axb, oz};
    StabilizerDescriptor sa = stabilizer_of(ConstructibleIdeal::full(ak));
    CHECK(sa.variant == StabilizerVariant::IdealSemidirectUnits);
    CHECK(sa.w == 2);
    CHECK(sa.group_str() == "Z x| Z/2");
    CHECK(sa.contains(elem(oz, 5), elem(oz, -1)));
    CHECK_FALSE(sa.contains(FieldElement(oz, 1, 0, 2), elem(oz, 1)));
    CHECK_FALSE(sa.contains(elem(oz, 0), elem(oz, 2)));
}

TEST_CASE("stabilizer membership agrees with direct set stabilization") {
    Order o5 = make_order(-5);
    SemigroupKind ak{Family::Axb, o5};
    IntegralIdeal P2 = ideal_from_generators({elem(o5, 2), elem(o5, 1, 1)}, o5);
    SaturatedSet X = saturate(ConstructibleIdeal::coset_set(ak, elem(o5, 0), P2),
                              SemigroupElement::identity(ak));
    StabilizerDescriptor desc = stabilizer_of(X);
    Sampler smp(103);
    auto units = unit_elements(o5);
    for (int i = 0; i < 500; ++i) {
        FieldElement beta, alpha;
        if (smp.coin()) {
            // members by construction: beta in I, alpha a unit
            beta = P2.gen1() * smp.integer(-3, 3) + P2.gen2() * smp.integer(-3, 3);
            alpha = units[smp.uniform(0, int64_t(units.size()) - 1)];
        } else {
            beta = sample_kx(smp, o5);
            alpha = sample_kx(smp, o5);
        }
        bool member = desc.contains(beta, alpha);
        bool direct = saturated_translate(X, beta, alpha) == X;
        CHECK(member == direct);
    }
}

TEST_CASE("stabilizers from two representatives of one orbit are conjugate") {
    Order o5 = make_order(-5);
    ClassGroup cg = ClassGroup::compute(o5);
    SemigroupKind ak{Family::Axb, o5};
    Sampler smp(107);
    for (int i = 0; i < 100; ++i) {
        SaturatedSet S = sample_saturated(smp, ak);
        SaturatedSet T = saturated_translate(S, sample_kx(smp, o5), sample_kx(smp, o5));
        StabilizerDescriptor ds = stabilizer_of(S), dt = stabilizer_of(T);
        CHECK(ds.variant == StabilizerVariant::IdealSemidirectUnits);
        CHECK(dt.variant == ds.variant);
        CHECK(ds.w == dt.w);
        CHECK(cg.class_of(ds.lattice->num()) == cg.class_of(dt.lattice->num()));
    }
}

TEST_CASE("ktheory_of_group: built-ins and the user table") {
    StabilizerDescriptor triv{StabilizerVariant::Trivial, 1, 0, {}, {}};
    KTheoryRank r0 = ktheory_of_group(triv);
    CHECK(r0.known);
    CHECK(r0.k0 == 1);
    CHECK(r0.k1 == 0);

    StabilizerDescriptor z4{StabilizerVariant::FiniteCyclic, 4, 0, {}, {}};
    KTheoryRank r1 = ktheory_of_group(z4);
    CHECK(r1.k0 == 4);
    CHECK(r1.k1 == 0);

    StabilizerDescriptor z{StabilizerVariant::FreeAbelianTimesCyclic, 1, 1, {}, {}};
    KTheoryRank r2 = ktheory_of_group(z);
    CHECK(r2.k0 == 1);
    CHECK(r2.k1 == 1);

    // Kunneth consistency: rank(n, w) doubles with each free factor
    for (long long w : {1, 2, 4, 6}) {
        Int prev0 = 0;
        for (long long n = 1; n <= 5; ++n) {
            StabilizerDescriptor d{StabilizerVariant::FreeAbelianTimesCyclic, Int(w), Int(n), {}, {}};
            KTheoryRank r = ktheory_of_group(d);
            CHECK(r.k0 == r.k1);
            if (n > 1) CHECK(r.k0 == 2 * prev0);
            prev0 = r.k0;
        }
    }

    Order o5 = make_order(-5);
    StabilizerDescriptor lat{StabilizerVariant::IdealSemidirectUnits, 2, 0,
                             FractionalIdeal(IntegralIdeal::unit(o5)), FieldElement::zero(o5)};
    KTheoryRank sym = ktheory_of_group(lat);
    CHECK_FALSE(sym.known);
    CHECK(sym.symbolic == "K_*(C*_r(Z^2 x| Z/2))");

    KTheoryTable table{{"Z^2 x| Z/2", {Int(9), Int(0)}}};
    KTheoryRank tab = ktheory_of_group(lat, &table);
    CHECK(tab.known);
    CHECK(tab.k0 == 9);
}

TEST_CASE("decompose: totals per the three family theorems") {
    // multiplicative semigroup over Z: h = 1, stabilizer Z/2 -> (2, 0)
    Decomposition dz = decompose({Family::Mult, make_order(0)});
    CHECK(dz.class_number == 1);
    CHECK(dz.total_k0 == 2);
    CHECK(dz.total_k1 == 0);
    CHECK(dz.symbolic_terms.empty());

    // Gaussian integers: h = 1, w = 4 -> (4, 0)
    Decomposition dg = decompose({Family::Mult, make_order(-1)});
    CHECK(dg.total_k0 == 4);
    CHECK(dg.total_k1 == 0);

    // principal-ideal semigroup over d = -5: one Z per class -> (2, 0)
    Decomposition dp = decompose({Family::PrincipalIdeals, make_order(-5)});
    CHECK(dp.rows.size() == 2);
    CHECK(dp.total_k0 == 2);
    CHECK(dp.total_k1 == 0);

    // ax+b over d = -5: two symbolic lattice-semidirect terms
    Decomposition da = decompose({Family::Axb, make_order(-5)});
    REQUIRE(da.rows.size() == 2);
    CHECK(da.symbolic_terms.size() == 2);
    for (const auto& row : da.rows) {
        CHECK(row.stabilizer.variant == StabilizerVariant::IdealSemidirectUnits);
        CHECK(row.stabilizer.group_str() == "Z^2 x| Z/2");
        CHECK_FALSE(row.rank.known);
    }
    ClassGroup cg5 = ClassGroup::compute(make_order(-5));
    CHECK(cg5.class_of(da.rows[0].representative) != cg5.class_of(da.rows[1].representative));

    CHECK_THROWS_AS(decompose({Family::Mult, make_order(3)}), unsupported_error);
}

TEST_CASE("decomposition row count always equals h") {
    for (long long d : {0, -1, -2, -3, -5, -6, -23}) {
        Decomposition dec = decompose({Family::Axb, make_order(d)});
        CHECK(Int(dec.rows.size()) == dec.class_number);
    }
}

TEST_CASE("decomposition JSON schema") {
    Decomposition dec = decompose({Family::Axb, make_order(-5)});
    nlohmann::json j = nlohmann::json::parse(decomposition_to_json(dec));
    CHECK(j["semigroup"] == "axb");
    CHECK(j["d"] == -5);
    CHECK(j["class_number"] == 2);
    REQUIRE(j["rows"].is_array());
    REQUIRE(j["rows"].size() == 2);
    for (const auto& r : j["rows"]) {
        CHECK(r.contains("class"));
        CHECK(r.contains("representative"));
        CHECK(r.contains("stabilizer"));
        CHECK(r.contains("k0_rank"));
        CHECK(r.contains("k1_rank"));
        CHECK(r.contains("symbolic"));
        CHECK(r["k0_rank"].is_null());
        CHECK(r["symbolic"].is_string());
    }
    CHECK(j["total"]["k0_rank"] == 0);
    CHECK(j["assumptions"].is_array());
    bool amen = false;
    for (const auto& a : j["assumptions"])
        if (a.get<std::string>().find("amenable") != std::string::npos) amen = true;
    CHECK(amen);
}
