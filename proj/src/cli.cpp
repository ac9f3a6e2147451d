#include "ivpoly/cli.hpp"

#include <ostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "ivpoly/biring.hpp"
#include "ivpoly/families.hpp"
#include "ivpoly/lambda.hpp"
#include "ivpoly/perfection.hpp"
#include "ivpoly/plethory.hpp"
#include "ivpoly/poly_text.hpp"
#include "ivpoly/reflect.hpp"
#include "ivpoly/witt.hpp"

namespace ivpoly {

namespace {

constexpr int kOk = 0;
constexpr int kViolated = 2;
constexpr int kUsage = 3;
constexpr int kResource = 4;

using nlohmann::json;

BPoly random_ipoly(std::mt19937_64& rng, unsigned maxdeg, long bound) {
    std::uniform_int_distribution<unsigned> degd(0, maxdeg);
    std::uniform_int_distribution<long> coefd(-bound, bound);
    unsigned d = degd(rng);
    std::vector<Rat> c(d + 1);
    for (auto& x : c) x = Rat(coefd(rng));
    return BPoly(std::move(c));
}

int report_exit(const CheckReport& rep, bool as_json, std::ostream& out) {
    if (as_json) {
        out << rep.to_json() << "\n";
    } else {
        out << rep.property << ": " << rep.cases << " cases, " << rep.failures.size()
            << " failures\n";
        for (const auto& f : rep.failures) out << "  FAIL " << f << "\n";
    }
    return rep.ok() ? kOk : kViolated;
}

struct Cmd {
    bool json = false;
};

int cmd_convert(const std::string& poly, bool as_json, std::ostream& out) {
    BPoly b = parse_bpoly(poly);
    MPoly m = from_binomial(b);
    if (as_json) {
        json coeffs = json::array();
        for (const Rat& c : b.coeffs()) coeffs.push_back(c.get_str());
        out << json{{"binomial", to_text(b)}, {"monomial", to_text(m)}, {"coeffs", coeffs},
                    {"int_valued", is_int_valued(b)}}
                   .dump()
            << "\n";
    } else {
        out << "binomial: " << to_text(b) << "\n";
        out << "monomial: " << to_text(m) << "\n";
        out << "integer-valued: " << (is_int_valued(b) ? "yes" : "no") << "\n";
    }
    return kOk;
}

int cmd_compose(const std::string& fs, const std::string& gs, bool as_json, std::ostream& out) {
    BPoly r = compose(parse_bpoly(fs), parse_bpoly(gs));
    if (as_json)
        out << json{{"result", to_text(r)}}.dump() << "\n";
    else
        out << to_text(r) << "\n";
    return kOk;
}

int cmd_cooperation(const std::string& fs, bool mul, bool as_json, std::ostream& out) {
    TBPoly t = mul ? comul(parse_bpoly(fs)) : coadd(parse_bpoly(fs));
    if (as_json)
        out << t.to_json() << "\n";
    else
        out << to_text(t) << "\n";
    return kOk;
}

int cmd_verify_axioms(unsigned degree, bool as_json, std::ostream& out) {
    AxiomReport rep = verify_biring_axioms(degree);
    if (as_json) {
        json results = json::array();
        for (const auto& r : rep.results)
            results.push_back({{"axiom", r.axiom}, {"n", r.n}, {"pass", r.pass}});
        out << json{{"all_pass", rep.all_pass}, {"results", results}}.dump() << "\n";
    } else {
        for (const auto& r : rep.results)
            if (!r.pass) out << "FAIL " << r.axiom << " at n=" << r.n << "\n";
        out << (rep.all_pass ? "all axioms hold" : "axiom failures found") << " (degree "
            << degree << ")\n";
    }
    return rep.all_pass ? kOk : kViolated;
}

int cmd_relations(long trials, unsigned long seed, bool as_json, std::ostream& out) {
    std::mt19937_64 rng(seed);
    CheckReport total;
    total.property = "composition relations + associativity";
    std::uniform_int_distribution<long> cd(-4, 4);
    for (long t = 0; t < trials; ++t) {
        BPoly f = random_ipoly(rng, 4, 3), g = random_ipoly(rng, 4, 3), h = random_ipoly(rng, 4, 3);
        CheckReport one = relation_check(f, g, h, Rat(cd(rng)));
        total.cases += one.cases;
        for (const auto& fail : one.failures)
            total.failures.push_back("trial " + std::to_string(t) + ": " + fail);
        total.record(compose(compose(f, g), h) == compose(f, compose(g, h)),
                     "associativity fails at trial " + std::to_string(t));
    }
    return report_exit(total, as_json, out);
}

int cmd_basis(const std::string& family, unsigned degree, bool as_json, std::ostream& out) {
    GradedBasis g = graded_basis(RingFamily::parse(family), degree);
    if (as_json) {
        json diag = json::array();
        for (const Rat& d : g.diagonal) diag.push_back(d.get_str());
        json rows = json::array();
        for (const BPoly& b : g.basis_polys()) rows.push_back(to_text(b));
        out << json{{"family", g.family.id()},
                    {"degree", degree},
                    {"diagonal", diag},
                    {"basis", rows},
                    {"lattice", g.lattice.basis().to_json()},
                    {"scale", g.lattice.scale().get_str()}}
                   .dump()
            << "\n";
    } else {
        out << "family " << g.family.id() << ", degree " << degree << "\n";
        out << "diagonal:";
        for (const Rat& d : g.diagonal) out << " " << d.get_str();
        out << "\nbasis:\n";
        for (const BPoly& b : g.basis_polys()) out << "  " << to_text(b) << "\n";
    }
    return kOk;
}

int cmd_cn(unsigned upto, bool as_json, std::ostream& out) {
    if (as_json) {
        json arr = json::array();
        for (unsigned n = 0; n <= upto; ++n) arr.push_back(c_n(n).get_str());
        out << json{{"c", arr}}.dump() << "\n";
    } else {
        for (unsigned n = 0; n <= upto; ++n)
            out << "c_" << n << " = " << c_n(n).get_str() << "\n";
    }
    return kOk;
}

int cmd_chain(long r, unsigned dmax, bool fdiff_variant, bool as_json, std::ostream& out) {
    auto w = chain_witness(r, dmax, fdiff_variant);
    if (as_json) {
        json j{{"r", r}, {"dmax", dmax}, {"variant", fdiff_variant ? "fdint" : "dint"}};
        if (w) {
            j["degree"] = w->first;
            j["witness"] = to_text(w->second);
        } else {
            j["degree"] = nullptr;
        }
        out << j.dump() << "\n";
    } else if (w) {
        out << "strict at degree " << w->first << ": " << to_text(w->second) << " lies at order "
            << r << " but not order " << (r + 1) << "\n";
    } else {
        out << "no difference found up to degree " << dmax << "\n";
    }
    return kOk;
}

int cmd_decompose(const std::string& family, unsigned degree, unsigned dmax, bool as_json,
                  std::ostream& out) {
    CheckReport rep = weakly_composite_check(RingFamily::parse(family), degree, dmax);
    return report_exit(rep, as_json, out);
}

int cmd_witt(const Int& p, unsigned m, bool do_add, bool do_mul, unsigned long seed, bool as_json,
             std::ostream& out) {
    if (!do_add && !do_mul) do_add = do_mul = true;
    unsigned long count = pow_int(p, m).get_ui();
    unsigned long samples = count <= 27 ? 0 : 500;
    CheckReport rep = witt_transport_check(p, m, samples, seed, do_add, do_mul);
    return report_exit(rep, as_json, out);
}

int cmd_adams(unsigned k, unsigned trunc, bool as_json, std::ostream& out) {
    auto table = adams_universal(k, trunc);
    CheckReport rep;
    rep.property = "rank-one specialization";
    for (long a : {-2L, 2L, 3L}) {
        LambdaSeries f = LambdaSeries::rank_one(nullptr, trunc * k, a);
        LambdaSeries img = adams_apply(k, f);
        LambdaSeries want = LambdaSeries::rank_one(nullptr, img.trunc(), pow_int(Int(a), k));
        rep.record(img == want, "rank-one law fails at a=" + std::to_string(a));
    }
    if (as_json) {
        json polys = json::array();
        for (const auto& p : table->polys) polys.push_back(to_text(p));
        out << json{{"k", k}, {"trunc", trunc}, {"polys", polys},
                    {"rank_one_ok", rep.ok()}}
                   .dump()
            << "\n";
    } else {
        for (std::size_t nn = 0; nn < table->polys.size(); ++nn)
            out << "h'_" << (nn + 1) << " = " << to_text(table->polys[nn]) << "\n";
        out << "rank-one specialization: " << (rep.ok() ? "holds" : "fails") << "\n";
    }
    return rep.ok() ? kOk : kViolated;
}

int cmd_bin_check(const Int& p, unsigned m, unsigned kmax, unsigned trunc, bool as_json,
                  std::ostream& out) {
    Int count = pow_int(p, m);
    if (!count.fits_ulong_p()) throw std::length_error("bin-check: p^m too large");
    if (trunc == 0) trunc = static_cast<unsigned>(count.get_ui() - 1);
    CheckReport rep;
    rep.property = "Adams-fixedness of the binomial series (p=" + p.get_str() +
                   ", m=" + std::to_string(m) + ", K=" + std::to_string(kmax) + ")";
    for (unsigned long a = 0; a < count.get_ui(); ++a) {
        LambdaSeries f = binomial_series(PadicApprox(p, m, Int(static_cast<long>(a))), trunc);
        rep.record(bin_fixed_check(f, kmax), "alpha=" + std::to_string(a) + " is moved");
    }
    return report_exit(rep, as_json, out);
}

int cmd_classify_ring(const std::string& spec, bool as_json, std::ostream& out) {
    RingPtr a = parse_ring_spec(spec);
    bool qb = quasi_binomial_check(*a);
    json per_prime = json::array();
    std::ostringstream text;
    bool embeds_all = true;
    for (const Int& p : prime_factors(a->characteristic())) {
        bool re = residue_embed_check(a, p);
        embeds_all = embeds_all && re;
        per_prime.push_back({{"p", p.get_str()}, {"residue_embed", re}});
        text << "  p=" << p.get_str() << ": residue embedding "
             << (re ? "injective" : "not injective") << "\n";
    }
    if (as_json) {
        out << json{{"ring", a->name()},
                    {"size", a->size()},
                    {"quasi_binomial", qb},
                    {"per_prime", per_prime}}
                   .dump()
            << "\n";
    } else {
        out << a->name() << " (" << a->size() << " elements): "
            << (qb ? "quasi-binomial" : "not quasi-binomial") << "\n"
            << text.str();
    }
    return qb && embeds_all ? kOk : kViolated;
}

int cmd_dual(unsigned r, long trials, unsigned long seed, bool as_json, std::ostream& out) {
    std::mt19937_64 rng(seed);
    CheckReport rep;
    rep.property = "dual-number decision routes (orders <= " + std::to_string(r) + ")";
    std::uniform_int_distribution<unsigned> rd(0, r);
    for (long t = 0; t < trials; ++t) {
        BPoly f = random_ipoly(rng, 4, 4), g = random_ipoly(rng, 4, 4);
        unsigned rr = rd(rng);
        bool direct = dual_decompose_direct(f, g, rr);
        bool split = dual_decompose_split(f, g, rr);
        rep.record(direct == split, "routes disagree at trial " + std::to_string(t));
    }
    return report_exit(rep, as_json, out);
}

int cmd_perfection(const std::string& spec, unsigned m, bool as_json, std::ostream& out) {
    RingPtr a = parse_ring_spec(spec);
    bool perfect = is_perfect(*a);
    PerfectionReport rep = perfection_with_stabilization(a, m);
    if (as_json) {
        out << json{{"ring", a->name()},
                    {"perfect", perfect},
                    {"sizes", rep.sizes},
                    {"stabilized", rep.stabilized}}
                   .dump()
            << "\n";
    } else {
        out << a->name() << ": " << (perfect ? "perfect" : "not perfect") << "\n";
        out << "inverse-limit stage sizes:";
        for (auto s : rep.sizes) out << " " << s;
        out << (rep.stabilized ? " (stabilized)" : " (not yet stable)") << "\n";
    }
    return kOk;
}

int cmd_wlower(const Int& m, unsigned degree, bool as_json, std::ostream& out) {
    WLowerReport rep = w_lower(m, RingFamily::integers(), degree);
    if (as_json) {
        out << json{{"ring", m == 1 ? "Z" : "Z[1/" + m.get_str() + "]"},
                    {"degree", degree},
                    {"reflective", rep.ok},
                    {"certificates", rep.certificates}}
                   .dump()
            << "\n";
    } else {
        out << (m == 1 ? "Z" : "Z[1/" + m.get_str() + "]") << " is its own reflective closure\n";
        for (const auto& c : rep.certificates) out << "  " << c << "\n";
    }
    return rep.ok ? kOk : kViolated;
}

int cmd_wupper(const std::vector<std::string>& gens, unsigned degree, unsigned steps, bool as_json,
               std::ostream& out) {
    std::vector<MPoly> parsed;
    for (const auto& g : gens) parsed.push_back(from_binomial(parse_bpoly(g)));
    WUpperResult res = w_upper(parsed, RingFamily::integers(), degree, steps);
    if (as_json) {
        json basis = json::array();
        for (const auto& b : res.module_basis) basis.push_back(to_text(b));
        out << json{{"stable", res.stable},
                    {"steps", res.steps_used},
                    {"const_subring", res.const_m == 1 ? "Z" : "Z[1/" + res.const_m.get_str() + "]"},
                    {"module_basis", basis},
                    {"note", res.note}}
                   .dump()
            << "\n";
    } else {
        out << "closure " << (res.stable ? "stabilized" : "NOT stable") << " after "
            << res.steps_used << " step(s)\n";
        out << "constants: " << (res.const_m == 1 ? "Z" : "Z[1/" + res.const_m.get_str() + "]")
            << "\n";
        for (const auto& b : res.module_basis) out << "  " << to_text(b) << "\n";
        if (!res.note.empty()) out << res.note << "\n";
    }
    return kOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact computer algebra for integer-valued polynomials, their birings, "
                 "p-adic points, and finite-ring classifiers"};
    app.require_subcommand(1);

    std::string poly_a, poly_b, family = "int", ring_spec;
    std::vector<std::string> gens;
    unsigned degree = 8, dmax = 10, trunc = 8, k = 2, m = 2, steps = 8, kmax = 3;
    long r = 0, trials = 100;
    unsigned long seed = 0;
    std::string p_str = "2", m_str = "1";
    bool fdiff_variant = false, do_add = false, do_mul = false;
    Cmd c;

    auto add_json = [&c](CLI::App* sub) { sub->add_flag("--json", c.json, "machine output"); };

    auto* convert = app.add_subcommand("convert", "basis conversion for a polynomial");
    convert->add_option("poly", poly_a, "polynomial text")->required();
    add_json(convert);

    auto* comp = app.add_subcommand("compose", "compose two polynomials");
    comp->add_option("f", poly_a)->required();
    comp->add_option("g", poly_b)->required();
    add_json(comp);

    auto* co_add = app.add_subcommand("coadd", "coaddition on the tensor binomial basis");
    co_add->add_option("f", poly_a)->required();
    add_json(co_add);

    auto* co_mul = app.add_subcommand("comul", "comultiplication on the tensor binomial basis");
    co_mul->add_option("f", poly_a)->required();
    add_json(co_mul);

    auto* verify = app.add_subcommand("verify-axioms", "biring axiom suite on basis elements");
    verify->add_option("--degree", degree, "max basis degree");
    add_json(verify);

    auto* rel = app.add_subcommand("relations", "randomized composition relations");
    rel->add_option("--trials", trials);
    rel->add_option("--seed", seed);
    add_json(rel);

    auto* basis = app.add_subcommand("basis", "graded basis of a polynomial family");
    basis->add_option("--family", family)->required();
    basis->add_option("--degree", degree);
    add_json(basis);

    auto* cn = app.add_subcommand("cn", "leading-coefficient sequence of the all-orders family");
    unsigned upto = 8;
    cn->add_option("--upto", upto);
    add_json(cn);

    auto* chain = app.add_subcommand("chain", "first strict inclusion between derivative orders");
    chain->add_option("--r", r);
    chain->add_option("--dmax", dmax);
    chain->add_flag("--fdiff", fdiff_variant, "finite-difference variant");
    add_json(chain);

    auto* dec = app.add_subcommand("decompose", "tensor decomposability of co-operations");
    dec->add_option("--family", family)->required();
    dec->add_option("--degree", degree);
    unsigned dec_dmax = 0;
    dec->add_option("--dmax", dec_dmax, "factor degree bound (default 2*degree)");
    add_json(dec);

    auto* witt = app.add_subcommand("witt", "p-adic point set and its ring structure");
    witt->add_option("--p", p_str)->required();
    witt->add_option("--m", m);
    witt->add_flag("--add", do_add);
    witt->add_flag("--mul", do_mul);
    witt->add_option("--seed", seed);
    add_json(witt);

    auto* adams = app.add_subcommand("adams", "universal Adams operation table");
    adams->add_option("--k", k)->required();
    adams->add_option("--trunc", trunc);
    add_json(adams);

    auto* binc = app.add_subcommand("bin-check", "Adams-fixedness of binomial series");
    binc->add_option("--p", p_str)->required();
    binc->add_option("--m", m);
    binc->add_option("--K", kmax);
    unsigned bin_trunc = 0;
    binc->add_option("--trunc", bin_trunc);
    add_json(binc);

    auto* classify = app.add_subcommand("classify-ring", "quasi-binomial / residue classifiers");
    classify->add_option("spec", ring_spec)->required();
    add_json(classify);

    auto* dual = app.add_subcommand("dual", "dual-number membership routes");
    dual->add_option("--r", r);
    dual->add_option("--trials", trials);
    dual->add_option("--seed", seed);
    add_json(dual);

    auto* perf = app.add_subcommand("perfection", "Frobenius, perfection, stabilization");
    perf->add_option("spec", ring_spec)->required();
    perf->add_option("--m", m);
    add_json(perf);

    auto* wlow = app.add_subcommand("wlower", "reflectivity certificates for a localization");
    wlow->add_option("--m", m_str, "invert the primes of m");
    wlow->add_option("--degree", degree);
    add_json(wlow);

    auto* wup = app.add_subcommand("wupper", "reflective closure from generators");
    wup->add_option("--gen", gens, "generator polynomial (repeatable)");
    wup->add_option("--degree", degree);
    wup->add_option("--steps", steps);
    add_json(wup);

    std::vector<std::string> argv = args;
    try {
        std::vector<const char*> cargv;
        cargv.push_back("ivpoly");
        for (const auto& a : argv) cargv.push_back(a.c_str());
        app.parse(static_cast<int>(cargv.size()), cargv.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            std::ostringstream help;
            out << app.help() << "\n";
            return kOk;
        }
        err << "error: " << e.what() << "\n";
        return kUsage;
    }

    try {
        if (convert->parsed()) return cmd_convert(poly_a, c.json, out);
        if (comp->parsed()) return cmd_compose(poly_a, poly_b, c.json, out);
        if (co_add->parsed()) return cmd_cooperation(poly_a, false, c.json, out);
        if (co_mul->parsed()) return cmd_cooperation(poly_a, true, c.json, out);
        if (verify->parsed()) return cmd_verify_axioms(degree, c.json, out);
        if (rel->parsed()) return cmd_relations(trials, seed, c.json, out);
        if (basis->parsed()) return cmd_basis(family, degree, c.json, out);
        if (cn->parsed()) return cmd_cn(upto, c.json, out);
        if (chain->parsed()) return cmd_chain(r, dmax, fdiff_variant, c.json, out);
        if (dec->parsed()) return cmd_decompose(family, degree, dec_dmax, c.json, out);
        if (witt->parsed()) return cmd_witt(Int(p_str), m, do_add, do_mul, seed, c.json, out);
        if (adams->parsed()) return cmd_adams(k, trunc, c.json, out);
        if (binc->parsed()) return cmd_bin_check(Int(p_str), m, kmax, bin_trunc, c.json, out);
        if (classify->parsed()) return cmd_classify_ring(ring_spec, c.json, out);
        if (dual->parsed()) return cmd_dual(static_cast<unsigned>(r), trials, seed, c.json, out);
        if (perf->parsed()) return cmd_perfection(ring_spec, m, c.json, out);
        if (wlow->parsed()) return cmd_wlower(Int(m_str), degree, c.json, out);
        if (wup->parsed()) return cmd_wupper(gens, degree, steps, c.json, out);
        err << "error: no subcommand\n";
        return kUsage;
    } catch (const PrecisionError& e) {
        err << "precision limit: " << e.what() << "\n";
        return kResource;
    } catch (const std::length_error& e) {
        err << "resource limit: " << e.what() << "\n";
        return kResource;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
}

}  // namespace ivpoly
