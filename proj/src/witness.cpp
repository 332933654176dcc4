#include "sgkt/witness.hpp"

#include "sgkt/primes.hpp"
#include "sgkt/units.hpp"

namespace sgkt {

namespace {

// J_1 cap ... cap J_n, or the ambient ideal when there are no pieces.
IntegralIdeal meet_or_ambient(const IntegralIdeal& ambient,
                              const std::vector<IntegralIdeal>& pieces) {
    if (pieces.empty()) return ambient;
    IntegralIdeal m = pieces[0];
    for (size_t i = 1; i < pieces.size(); ++i) m = ideal_intersect(m, pieces[i]);
    return m;
}

bool in_principal(const FieldElement& v, const FieldElement& a) {
    FieldElement q = v / a;
    return q.is_integral();
}

}  // namespace

void Pi4Instance::validate() const {
    for (const auto& J : pieces)
        if (!ambient.contains(J))
            throw domain_error("Pi4Instance: piece " + J.str() + " not contained in " +
                               ambient.str());
    for (const auto& p : pairs)
        if (p.bp == p.b && p.ap == p.a)
            throw domain_error("Pi4Instance: pair (b', a') must differ from (b, a)");
}

void Pi5Instance::validate() const {
    for (const auto& J : pieces)
        if (!ambient.contains(J))
            throw domain_error("Pi5Instance: piece " + J.str() + " not contained in " +
                               ambient.str());
}

bool Pi4Witness::all_ok() const {
    for (const auto& c : checks)
        if (!c.ok) return false;
    return true;
}

bool Pi5Witness::all_ok() const {
    for (const auto& c : checks)
        if (!c.ok) return false;
    return true;
}

FieldElement prime_avoiding_element(const IntegralIdeal& J, const FieldElement& z,
                                    const Int& prime_norm_cap) {
    if (z.is_zero()) throw domain_error("prime_avoiding_element: z must be nonzero");
    const Order& ord = J.order();
    if (prime_norm_cap < 2)
        throw budget_error("prime_avoiding_element: no admissible prime of norm <= " +
                           prime_norm_cap.str());
    Int bound = std::min(Int(64), prime_norm_cap);
    while (true) {
        for (const auto& info : prime_ideals_up_to(ord, bound)) {
            const IntegralIdeal& P = info.ideal;
            if (P.contains(z)) continue;
            if (P.contains(J)) continue;
            // P maximal and J not inside P, so P + J = R and CRT applies.
            FieldElement a = crt_solve({{FieldElement::zero(ord), P},
                                        {FieldElement::one(ord), J}});
            if (a.is_zero()) a = a + P.gen1() * J.gen1();  // pick a nonzero representative
            if (!P.contains(a) || !J.contains(a - FieldElement::one(ord)))
                throw std::logic_error("prime_avoiding_element: CRT output failed re-check");
            if (in_principal(z, a))
                throw std::logic_error("prime_avoiding_element: z in aR despite prime choice");
            return a;
        }
        if (bound >= prime_norm_cap)
            throw budget_error("prime_avoiding_element: no admissible prime of norm <= " +
                               prime_norm_cap.str());
        bound = std::min(Int(bound * 4), prime_norm_cap);
    }
}

Pi4Witness find_pi4_witness(const Pi4Instance& inst) {
    inst.validate();
    const Order& ord = inst.ambient.order();
    IntegralIdeal M = meet_or_ambient(inst.ambient, inst.pieces);

    // 1_b + 2_b: search b in M by increasing norm; only finitely many b can
    // violate 2_b (one per pair with a' != a), so the first shells suffice.
    FieldElement b = FieldElement::zero(ord);
    bool found_b = false;
    Int bound = 1;
    for (int attempt = 0; attempt < 24 && !found_b; ++attempt, bound *= 4) {
        for (const auto& cand : enumerate_coset_elements(FieldElement::zero(ord), M, bound)) {
            bool ok = true;
            for (const auto& pr : inst.pairs)
                if (((pr.bp - pr.b) + (pr.ap - pr.a) * cand).is_zero()) {
                    ok = false;
                    break;
                }
            if (ok) {
                b = cand;
                found_b = true;
                break;
            }
        }
    }
    if (!found_b) throw budget_error("find_pi4_witness: no b satisfying 2_b within bounds");

    // 1_a + 2_a: try small candidates in 1 + M first, falling back to the
    // prime-avoidance construction which always terminates.
    auto admissible_a = [&](const FieldElement& a) {
        if (a.is_zero()) return false;
        for (const auto& pr : inst.pairs) {
            FieldElement delta = (pr.bp - pr.b) + (pr.ap - pr.a) * b;
            if (in_principal(delta, a)) return false;
        }
        return true;
    };

    FieldElement a = FieldElement::one(ord);
    bool found_a = false;
    Int abound = 16;
    for (int attempt = 0; attempt < 2 && !found_a; ++attempt, abound *= 16) {
        for (const auto& cand : enumerate_coset_elements(FieldElement::one(ord), M, abound)) {
            if (admissible_a(cand)) {
                a = cand;
                found_a = true;
                break;
            }
        }
    }
    if (!found_a) {
        FieldElement prod = FieldElement::one(ord);
        for (const auto& pr : inst.pairs) prod = prod * ((pr.bp - pr.b) + (pr.ap - pr.a) * b);
        a = prime_avoiding_element(M, prod);
    }

    Pi4Witness w;
    w.b = b;
    w.a = a;
    w.checks = verify_pi4(inst, b, a);
    if (!w.all_ok()) throw std::logic_error("find_pi4_witness: verifier rejected the witness");
    return w;
}

Pi5Witness find_pi5_witness(const Pi5Instance& inst) {
    inst.validate();
    const Order& ord = inst.ambient.order();
    IntegralIdeal M = meet_or_ambient(inst.ambient, inst.pieces);

    // (*_c): first non-unit nonzero element of 1 + M by increasing norm.
    FieldElement c = FieldElement::one(ord);
    bool found_c = false;
    Int bound = 16;
    for (int attempt = 0; attempt < 24 && !found_c; ++attempt, bound *= 4) {
        for (const auto& cand : enumerate_coset_elements(FieldElement::one(ord), M, bound)) {
            if (cand.is_zero() || is_unit(cand)) continue;
            c = cand;
            found_c = true;
            break;
        }
    }
    if (!found_c) throw budget_error("find_pi5_witness: no non-unit in 1 + M within bounds");

    // (*_r): r1 = 0 and the first element of M outside cR. M is never inside
    // cR (else c would be a unit), so this terminates.
    FieldElement r1 = FieldElement::zero(ord);
    FieldElement r2 = r1;
    bool found_r = false;
    bound = c.norm_num();
    for (int attempt = 0; attempt < 24 && !found_r; ++attempt, bound *= 4) {
        for (const auto& cand : enumerate_coset_elements(FieldElement::zero(ord), M, bound)) {
            if (in_principal(cand - r1, c)) continue;
            r2 = cand;
            found_r = true;
            break;
        }
    }
    if (!found_r) throw budget_error("find_pi5_witness: no residue pair within bounds");

    Pi5Witness w;
    w.c = c;
    w.r1 = r1;
    w.r2 = r2;
    w.checks = verify_pi5(inst, c, r1, r2);
    if (!w.all_ok()) throw std::logic_error("find_pi5_witness: verifier rejected the witness");
    return w;
}

std::vector<ConditionCheck> verify_pi4(const Pi4Instance& inst, const FieldElement& b,
                                       const FieldElement& a) {
    std::vector<ConditionCheck> out;
    const std::vector<IntegralIdeal>& Js =
        inst.pieces.empty() ? std::vector<IntegralIdeal>{inst.ambient} : inst.pieces;

    bool b_in_all = true;
    for (const auto& J : Js) b_in_all = b_in_all && J.contains(b);
    out.push_back({"1_b", b_in_all});

    bool diffs_nonzero = true;
    for (const auto& pr : inst.pairs)
        diffs_nonzero =
            diffs_nonzero && !(((pr.bp - pr.b) + (pr.ap - pr.a) * b).is_zero());
    out.push_back({"2_b", diffs_nonzero});

    bool a_in_all = !a.is_zero();
    for (const auto& J : Js)
        a_in_all = a_in_all && J.contains(a - FieldElement::one(a.order()));
    out.push_back({"1_a", a_in_all});

    bool avoid = true;
    IntegralIdeal aR = a.is_zero() ? IntegralIdeal::unit(a.order()) : IntegralIdeal::principal(a);
    for (const auto& pr : inst.pairs) {
        FieldElement delta = (pr.bp - pr.b) + (pr.ap - pr.a) * b;
        if (aR.contains(delta)) avoid = false;
    }
    out.push_back({"2_a", avoid && !a.is_zero()});

    // Consequence of 1_a: aR is coprime to the ambient ideal and every piece.
    bool coprime = ideals_coprime(aR, inst.ambient);
    for (const auto& J : inst.pieces) coprime = coprime && ideals_coprime(aR, J);
    out.push_back({"coprimality", coprime});
    return out;
}

std::vector<ConditionCheck> verify_pi5(const Pi5Instance& inst, const FieldElement& c,
                                       const FieldElement& r1, const FieldElement& r2) {
    std::vector<ConditionCheck> out;
    const std::vector<IntegralIdeal>& Js =
        inst.pieces.empty() ? std::vector<IntegralIdeal>{inst.ambient} : inst.pieces;

    bool c_ok = !c.is_zero() && c.is_integral() && abs_int(c.norm_num()) > 1;
    for (const auto& J : Js) c_ok = c_ok && J.contains(c - FieldElement::one(c.order()));
    out.push_back({"*_c", c_ok});

    bool r_ok = true;
    for (const auto& J : Js) r_ok = r_ok && J.contains(r1) && J.contains(r2);
    if (r_ok && !c.is_zero()) {
        IntegralIdeal cR = IntegralIdeal::principal(c);
        r_ok = !cR.contains(r1 - r2);
    }
    out.push_back({"*_r", r_ok});
    return out;
}

}  // namespace sgkt
