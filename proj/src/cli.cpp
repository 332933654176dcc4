#include "sgkt/cli.hpp"

#include "sgkt/class_group.hpp"
#include "sgkt/constructible.hpp"
#include "sgkt/orbit.hpp"
#include "sgkt/primes.hpp"
#include "sgkt/random_gen.hpp"
#include "sgkt/text.hpp"
#include "sgkt/units.hpp"
#include "sgkt/witness.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <sstream>

namespace sgkt {

namespace {

using nlohmann::json;

Family parse_family(const std::string& s) {
    if (s == "mult") return Family::Mult;
    if (s == "principal") return Family::PrincipalIdeals;
    if (s == "axb") return Family::Axb;
    throw domain_error("unknown semigroup '" + s + "' (expected mult, principal or axb)");
}

long long to_ll(const Int& v) { return v.convert_to<long long>(); }

struct Options {
    std::string d_str = "0";
    std::string semigroup = "mult";
    bool json_out = false;
    uint64_t seed = 0;

    Order order() const { return make_order(Int(d_str)); }
    SemigroupKind kind() const { return SemigroupKind{parse_family(semigroup), order()}; }
    bool json() const {
        if (json_out) return true;
        const char* env = std::getenv("SGKT_FORMAT");
        return env && std::string(env) == "json";
    }
};

void add_common(CLI::App* cmd, Options& opt, bool with_semigroup) {
    cmd->add_option("-d,--d", opt.d_str, "squarefree d of Q(sqrt(d)); 0 means the ring Z");
    if (with_semigroup)
        cmd->add_option("-s,--semigroup", opt.semigroup, "mult | principal | axb");
    cmd->add_flag("--json", opt.json_out, "emit one JSON document on stdout");
    cmd->add_option("--seed", opt.seed, "seed for sampling-based verifications");
}

KTheoryTable load_ktable(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw domain_error("cannot open K-theory table " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw domain_error(std::string("malformed K-theory table: ") + e.what());
    }
    KTheoryTable table;
    if (!j.is_object()) throw domain_error("K-theory table must be a JSON object");
    for (auto it = j.begin(); it != j.end(); ++it) {
        if (!it.value().is_array() || it.value().size() != 2 ||
            !it.value()[0].is_number_integer() || !it.value()[1].is_number_integer())
            throw domain_error("K-theory table entries must be [k0, k1] integer pairs");
        table[it.key()] = {Int(it.value()[0].get<long long>()),
                           Int(it.value()[1].get<long long>())};
    }
    return table;
}

int cmd_classgroup(const Options& opt, std::ostream& out) {
    ClassGroup cg = ClassGroup::compute(opt.order());
    if (opt.json()) {
        json j;
        j["d"] = to_ll(Int(opt.d_str));
        j["h"] = to_ll(cg.h());
        j["forms"] = json::array();
        j["representatives"] = json::array();
        for (size_t i = 0; i < cg.elements().size(); ++i) {
            j["forms"].push_back(cg.element_str(i));
            j["representatives"].push_back(cg.representatives()[i].str());
        }
        j["table"] = json::array();
        for (const auto& row : cg.table()) {
            json r = json::array();
            for (size_t v : row) r.push_back(v);
            j["table"].push_back(r);
        }
        out << j.dump(2) << "\n";
    } else {
        out << "class group of d = " << opt.d_str << ": h = " << cg.h().str() << "\n";
        for (size_t i = 0; i < cg.elements().size(); ++i)
            out << "  " << i << ": " << cg.element_str(i)
                << "  rep " << cg.representatives()[i].str() << "\n";
    }
    return 0;
}

int cmd_units(const Options& opt, std::ostream& out) {
    UnitGroupDescriptor u = unit_group(opt.order());
    if (opt.json()) {
        json j;
        j["d"] = to_ll(Int(opt.d_str));
        j["kind"] = "finite_cyclic";
        j["w"] = to_ll(u.w);
        out << j.dump(2) << "\n";
    } else {
        out << "unit group: finite cyclic of order " << u.w.str() << "\n";
    }
    return 0;
}

int cmd_primes(const Options& opt, const std::string& bound, std::ostream& out) {
    auto primes = prime_ideals_up_to(opt.order(), Int(bound));
    if (opt.json()) {
        json j;
        j["d"] = to_ll(Int(opt.d_str));
        j["bound"] = to_ll(Int(bound));
        j["primes"] = json::array();
        for (const auto& p : primes) {
            json r;
            r["ideal"] = p.ideal.str();
            r["norm"] = to_ll(p.ideal.norm());
            r["residue_char"] = to_ll(p.residue_char);
            r["residue_degree"] = p.residue_degree;
            r["ramified"] = p.ramified;
            j["primes"].push_back(r);
        }
        out << j.dump(2) << "\n";
    } else {
        for (const auto& p : primes)
            out << p.ideal.str() << "  norm " << p.ideal.norm().str() << "  f=" << p.residue_degree
                << (p.ramified ? "  ramified" : "") << "\n";
    }
    return 0;
}

int cmd_ideal(const Options& opt, const std::string& op, const std::vector<std::string>& args,
              std::ostream& out) {
    Order ord = opt.order();
    auto need = [&](size_t n) {
        if (args.size() != n)
            throw domain_error("ideal --op " + op + " expects " + std::to_string(n) +
                               " argument(s)");
    };
    json j;
    std::string text;
    if (op == "mul") {
        need(2);
        IntegralIdeal r = ideal_mul(parse_ideal(args[0], ord), parse_ideal(args[1], ord));
        text = r.str();
    } else if (op == "intersect") {
        need(2);
        text = ideal_intersect(parse_ideal(args[0], ord), parse_ideal(args[1], ord)).str();
    } else if (op == "colon") {
        need(2);
        text = ideal_colon(parse_ideal(args[0], ord), parse_ideal(args[1], ord)).str();
    } else if (op == "sum") {
        need(2);
        text = ideal_sum(parse_ideal(args[0], ord), parse_ideal(args[1], ord)).str();
    } else if (op == "norm") {
        need(1);
        text = parse_ideal(args[0], ord).norm().str();
    } else if (op == "class") {
        need(1);
        ClassGroup cg = ClassGroup::compute(ord);
        size_t c = cg.class_of(parse_ideal(args[0], ord));
        text = cg.element_str(c);
    } else if (op == "from-gens") {
        if (args.empty()) throw domain_error("ideal --op from-gens needs generators");
        std::vector<FieldElement> gens;
        for (const auto& a : args) gens.push_back(parse_element(a, ord));
        text = ideal_from_generators(gens, ord).str();
    } else if (op == "crt") {
        // pairs: residue modulus residue modulus ...
        if (args.size() < 2 || args.size() % 2 != 0)
            throw domain_error("ideal --op crt expects residue/modulus pairs");
        std::vector<std::pair<FieldElement, IntegralIdeal>> congs;
        for (size_t i = 0; i < args.size(); i += 2)
            congs.push_back({parse_element(args[i], ord), parse_ideal(args[i + 1], ord)});
        text = crt_solve(congs).str();
    } else {
        throw domain_error("unknown ideal op '" + op + "'");
    }
    if (opt.json()) {
        j["op"] = op;
        j["result"] = text;
        out << j.dump(2) << "\n";
    } else {
        out << text << "\n";
    }
    return 0;
}

int cmd_closure(const Options& opt, const std::vector<std::string>& gens,
                const std::string& bound, std::ostream& out) {
    SemigroupKind kind = opt.kind();
    std::vector<SemigroupElement> gs;
    for (const auto& g : gens) gs.push_back(parse_semigroup_element(g, kind));
    auto family = closure(kind, gs, Int(bound));
    if (opt.json()) {
        json j;
        j["semigroup"] = kind.str();
        j["d"] = to_ll(kind.order.d());
        j["norm_bound"] = to_ll(Int(bound));
        j["count"] = family.size();
        j["sets"] = json::array();
        for (const auto& X : family) j["sets"].push_back(X.str());
        out << j.dump(2) << "\n";
    } else {
        out << family.size() << " sets (norm bound " << bound << ")\n";
        for (const auto& X : family) out << "  " << X.str() << "\n";
    }
    return 0;
}

int cmd_independence(const Options& opt, const std::string& set_text,
                     const std::vector<std::string>& piece_texts, std::ostream& out) {
    SemigroupKind kind = opt.kind();
    ConstructibleIdeal X = parse_constructible(set_text, kind);
    std::vector<ConstructibleIdeal> pieces;
    for (const auto& p : piece_texts) pieces.push_back(parse_constructible(p, kind));
    IndependenceResult res = independence_check(X, pieces);
    if (opt.json()) {
        json j;
        j["covered"] = res.covered;
        if (res.covered)
            j["covered_index"] = res.covered_index;
        else
            j["witness"] = res.witness->str();
        out << j.dump(2) << "\n";
    } else {
        if (res.covered)
            out << "covered by piece " << res.covered_index << "\n";
        else
            out << "witness " << res.witness->str() << "\n";
    }
    return 0;
}

int cmd_group_law(const Options& opt, const std::vector<std::string>& pairs, size_t samples,
                  std::ostream& out) {
    SemigroupKind kind = opt.kind();
    json j;
    j["semigroup"] = kind.str();
    if (!pairs.empty()) {
        if (pairs.size() != 4)
            throw domain_error("group-law --elements expects p x q y (four semigroup elements)");
        QuotientPair g1(parse_semigroup_element(pairs[0], kind),
                        parse_semigroup_element(pairs[1], kind));
        QuotientPair g2(parse_semigroup_element(pairs[2], kind),
                        parse_semigroup_element(pairs[3], kind));
        QuotientPair prod = group_mul(g1, g2);
        if (opt.json()) {
            j["lhs"] = g1.str();
            j["rhs"] = g2.str();
            j["product"] = prod.str();
            out << j.dump(2) << "\n";
        } else {
            out << g1.str() << " * " << g2.str() << " = " << prod.str() << "\n";
        }
        return 0;
    }
    // sampling mode: verify the inductive-limit product against normal forms
    Sampler smp(opt.seed);
    size_t checked = 0;
    for (size_t i = 0; i < samples; ++i) {
        auto sample = [&]() -> SemigroupElement {
            switch (kind.family) {
                case Family::Mult:
                    return SemigroupElement::mult(smp.nonzero_element(kind.order, 9));
                case Family::Axb:
                    return SemigroupElement::axb(smp.element(kind.order, 9),
                                                 smp.nonzero_element(kind.order, 9));
                case Family::PrincipalIdeals:
                    return SemigroupElement::principal_from_generator(
                        smp.nonzero_element(kind.order, 9));
            }
            throw domain_error("group-law: unknown family");
        };
        QuotientPair g1(sample(), sample());
        QuotientPair g2(sample(), sample());
        group_mul(g1, g2);  // throws if op:G disagrees with normal forms
        ++checked;
    }
    if (opt.json()) {
        j["samples"] = checked;
        j["pass"] = true;
        out << j.dump(2) << "\n";
    } else {
        out << "verified " << checked << " random products against normal forms\n";
    }
    return 0;
}

int cmd_decompose(const Options& opt, const std::string& ktable_path, std::ostream& out) {
    KTheoryTable table;
    const KTheoryTable* tp = nullptr;
    if (!ktable_path.empty()) {
        table = load_ktable(ktable_path);
        tp = &table;
    }
    Decomposition dec = decompose(opt.kind(), tp);
    if (opt.json()) {
        out << decomposition_to_json(dec) << "\n";
    } else {
        out << "semigroup " << dec.kind.str() << ", d = " << dec.d.str()
            << ", class number " << dec.class_number.str() << "\n";
        for (const auto& row : dec.rows) {
            out << "  class " << row.class_label << "  rep " << row.representative.str()
                << "  stabilizer " << row.stabilizer.str() << "  ";
            if (row.rank.known)
                out << "K0 rank " << row.rank.k0.str() << ", K1 rank " << row.rank.k1.str();
            else
                out << row.rank.symbolic;
            out << "\n";
        }
        out << "total known ranks: K0 " << dec.total_k0.str() << ", K1 " << dec.total_k1.str()
            << "; symbolic terms: " << dec.symbolic_terms.size() << "\n";
        for (const auto& a : dec.assumptions) out << "assumes: " << a << "\n";
    }
    return 0;
}

int cmd_witness(const Options& opt, const std::string& wkind, const std::string& instance_text,
                std::ostream& out) {
    Order ord = opt.order();
    json in;
    try {
        in = json::parse(instance_text);
    } catch (const json::exception& e) {
        throw domain_error(std::string("malformed witness instance JSON: ") + e.what());
    }
    auto get_ideal = [&](const json& v) { return parse_ideal(v.get<std::string>(), ord); };
    auto get_elem = [&](const json& v) { return parse_element(v.get<std::string>(), ord); };

    json j;
    if (wkind == "pi4") {
        Pi4Instance inst;
        inst.ambient = get_ideal(in.at("ambient"));
        for (const auto& p : in.value("pieces", json::array())) inst.pieces.push_back(get_ideal(p));
        for (const auto& p : in.value("pairs", json::array()))
            inst.pairs.push_back({get_elem(p.at("bp")), get_elem(p.at("ap")), get_elem(p.at("b")),
                                  get_elem(p.at("a"))});
        Pi4Witness w = find_pi4_witness(inst);
        j["witness"]["b"] = w.b.str();
        j["witness"]["a"] = w.a.str();
        j["checks"] = json::array();
        for (const auto& c : w.checks) j["checks"].push_back({{"condition", c.condition}, {"ok", c.ok}});
    } else if (wkind == "pi5") {
        Pi5Instance inst;
        inst.ambient = get_ideal(in.at("ambient"));
        for (const auto& p : in.value("pieces", json::array())) inst.pieces.push_back(get_ideal(p));
        Pi5Witness w = find_pi5_witness(inst);
        j["witness"]["c"] = w.c.str();
        j["witness"]["r1"] = w.r1.str();
        j["witness"]["r2"] = w.r2.str();
        j["checks"] = json::array();
        for (const auto& c : w.checks) j["checks"].push_back({{"condition", c.condition}, {"ok", c.ok}});
    } else {
        throw domain_error("witness --kind must be pi4 or pi5");
    }
    out << j.dump(2) << "\n";
    return 0;
}

int cmd_verify_identities(const Options& opt, size_t samples, int64_t window_bound,
                          std::ostream& out) {
    SemigroupKind kind = opt.kind();
    Sampler smp(opt.seed);
    Window win = Window::box(kind, window_bound);
    size_t failures = 0, checks = 0;
    for (size_t i = 0; i < samples; ++i) {
        SemigroupElement p = [&] {
            switch (kind.family) {
                case Family::Mult:
                    return SemigroupElement::mult(smp.nonzero_element(kind.order, 4));
                case Family::Axb:
                    return SemigroupElement::axb(smp.element(kind.order, 4),
                                                 smp.nonzero_element(kind.order, 4));
                case Family::PrincipalIdeals:
                    return SemigroupElement::principal_from_generator(
                        smp.nonzero_element(kind.order, 4));
            }
            throw domain_error("verify-identities: unknown family");
        }();
        IntegralIdeal I = smp.ideal(kind.order, 3), J = smp.ideal(kind.order, 3);
        ConstructibleIdeal X =
            kind.family == Family::Axb
                ? ConstructibleIdeal::coset_set(kind, smp.element(kind.order, 3), I)
                : ConstructibleIdeal::ideal_set(kind, I);
        ConstructibleIdeal Y =
            kind.family == Family::Axb
                ? ConstructibleIdeal::coset_set(kind, smp.element(kind.order, 3), J)
                : ConstructibleIdeal::ideal_set(kind, J);
        IdentityReport rep = verify_projection_identities(p, X, Y, win);
        checks += rep.checks;
        failures += rep.failures.size();
    }
    if (opt.json()) {
        json j;
        j["semigroup"] = kind.str();
        j["samples"] = samples;
        j["window_size"] = win.points.size();
        j["checks"] = checks;
        j["failures"] = failures;
        j["pass"] = failures == 0;
        out << j.dump(2) << "\n";
    } else {
        out << "window " << win.points.size() << " points, " << checks << " checks, " << failures
            << " failures\n";
    }
    return 0;  // failures are report content, not errors
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"constructible ideals, enveloping groups and K-theory decompositions "
                 "for semigroups over Z and imaginary quadratic orders"};
    app.require_subcommand(1);

    Options opt;
    std::string bound = "10", op = "mul", set_text, wkind = "pi4", instance_text = "{}";
    std::string ktable_path;
    std::vector<std::string> items, pieces, elements;
    size_t samples = 100;
    int64_t window_bound = 10;

    auto* c_class = app.add_subcommand("classgroup", "class number, reduced forms, table");
    add_common(c_class, opt, false);

    auto* c_units = app.add_subcommand("units", "unit group of the order");
    add_common(c_units, opt, false);

    auto* c_primes = app.add_subcommand("primes", "prime ideals up to a norm bound");
    add_common(c_primes, opt, false);
    c_primes->add_option("--bound", bound, "norm bound")->required();

    auto* c_ideal = app.add_subcommand("ideal", "ideal arithmetic on HNF forms");
    add_common(c_ideal, opt, false);
    c_ideal->add_option("--op", op, "mul|intersect|colon|sum|norm|class|from-gens|crt");
    c_ideal->add_option("-a,--arg", items, "operand (repeat per ideal or element)")
        ->allow_extra_args(false);

    auto* c_closure = app.add_subcommand("closure", "closure of {P, {}} under the generators");
    add_common(c_closure, opt, true);
    c_closure->add_option("--norm-bound", bound, "ideal norm bound")->required();
    c_closure->add_option("-g,--generators", items, "semigroup element (repeatable)")
        ->allow_extra_args(false);

    auto* c_indep = app.add_subcommand("independence", "independence check with witness");
    add_common(c_indep, opt, true);
    c_indep->add_option("--set", set_text, "the constructible ideal X")->required();
    c_indep->add_option("--pieces", pieces, "piece contained in X (repeatable)")
        ->allow_extra_args(false);

    auto* c_group = app.add_subcommand("group-law", "enveloping-group products");
    add_common(c_group, opt, true);
    c_group->add_option("--elements", elements, "p x q y: computes [p^-1 x][q^-1 y]")
        ->allow_extra_args(false);
    c_group->add_option("--samples", samples, "random products to verify");

    auto* c_dec = app.add_subcommand("decompose", "K-theory decomposition rows and totals");
    add_common(c_dec, opt, true);
    c_dec->add_option("--ktable", ktable_path, "JSON file of group label -> [k0, k1]");

    auto* c_wit = app.add_subcommand("witness", "pi4/pi5 witness search");
    add_common(c_wit, opt, false);
    c_wit->add_option("--kind", wkind, "pi4 | pi5")->required();
    c_wit->add_option("--instance", instance_text, "instance JSON (inline)")->required();

    auto* c_verify = app.add_subcommand("verify-identities", "window checks of the set identities");
    add_common(c_verify, opt, true);
    c_verify->add_option("--samples", samples, "number of random (p, X, Y) triples");
    c_verify->add_option("--window", window_bound, "coordinate box bound for the window");

    try {
        std::vector<std::string> argv(args.rbegin(), args.rend());
        app.parse(argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n" << app.help();
        return 1;
    }

    try {
        if (c_class->parsed()) return cmd_classgroup(opt, out);
        if (c_units->parsed()) return cmd_units(opt, out);
        if (c_primes->parsed()) return cmd_primes(opt, bound, out);
        if (c_ideal->parsed()) return cmd_ideal(opt, op, items, out);
        if (c_closure->parsed()) return cmd_closure(opt, items, bound, out);
        if (c_indep->parsed()) return cmd_independence(opt, set_text, pieces, out);
        if (c_group->parsed()) return cmd_group_law(opt, elements, samples, out);
        if (c_dec->parsed()) return cmd_decompose(opt, ktable_path, out);
        if (c_wit->parsed()) return cmd_witness(opt, wkind, instance_text, out);
        if (c_verify->parsed()) return cmd_verify_identities(opt, samples, window_bound, out);
        err << "no subcommand\n";
        return 1;
    } catch (const budget_error& e) {
        err << "budget exhausted: " << e.what() << "\n";
        return 3;
    } catch (const domain_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        // malformed numerics and similar input problems surface here
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace sgkt
