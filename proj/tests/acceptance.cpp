// End-to-end verification suite.  Each criterion prints one PASS/FAIL line
// (with its runtime against the budget) and the process exits nonzero if any
// criterion fails.  All arithmetic is exact, so every comparison is equality.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "ivpoly/biring.hpp"
#include "ivpoly/families.hpp"
#include "ivpoly/lambda.hpp"
#include "ivpoly/perfection.hpp"
#include "ivpoly/plethory.hpp"
#include "ivpoly/poly_text.hpp"
#include "ivpoly/reflect.hpp"
#include "ivpoly/witt.hpp"

using namespace ivpoly;

namespace {

int g_failures = 0;

void criterion(int number, const std::string& label, double budget_seconds,
               const std::function<bool(std::string&)>& body) {
    std::string detail;
    auto start = std::chrono::steady_clock::now();
    bool pass = false;
    try {
        pass = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (elapsed > budget_seconds) {
        pass = false;
        detail += (detail.empty() ? "" : "; ") + std::string("over time budget");
    }
    std::printf("%s criterion %2d: %s (%.2fs < %.0fs)%s%s\n", pass ? "PASS" : "FAIL", number,
                label.c_str(), elapsed, budget_seconds, detail.empty() ? "" : " -- ",
                detail.c_str());
    std::fflush(stdout);
    if (!pass) ++g_failures;
}

BPoly random_int_bpoly(std::mt19937_64& rng, unsigned maxdeg, long bound) {
    std::uniform_int_distribution<unsigned> degd(0, maxdeg);
    std::uniform_int_distribution<long> num(-bound, bound);
    unsigned d = degd(rng);
    std::vector<Rat> c(d + 1);
    for (auto& x : c) x = Rat(num(rng));
    return BPoly(std::move(c));
}

bool c1_biring_axioms(std::string& detail) {
    AxiomReport rep = verify_biring_axioms(8);
    if (!rep.all_pass) {
        detail = "axiom suite failed";
        return false;
    }
    BiringOps bad = default_biring_ops(4);
    bad.coadd = [](const BPoly& f) {
        TBPoly t = coadd(f);
        if (f.degree() >= 2 && !t.terms().empty()) {
            auto last = std::prev(t.terms().end())->first;
            t.set_coeff(last.first, last.second, Rat(0));
        }
        return t;
    };
    AxiomReport corrupted = verify_biring_axioms(bad, 4);
    bool control = false;
    for (const auto& r : corrupted.results)
        if (r.axiom == "coassoc+" && r.n == 2 && !r.pass) control = true;
    if (!control) detail = "negative control did not fire";
    return control;
}

bool c2_integrality(std::string& detail) {
    for (unsigned n = 0; n <= 12; ++n) {
        if (!coadd(BPoly::basis(n)).all_integer()) {
            detail = "coaddition not integral at n=" + std::to_string(n);
            return false;
        }
        if (!comul(BPoly::basis(n)).all_integer()) {
            detail = "comultiplication not integral at n=" + std::to_string(n);
            return false;
        }
    }
    return true;
}

bool c3_relations(std::string& detail) {
    std::mt19937_64 rng(0);
    std::uniform_int_distribution<long> cd(-4, 4);
    for (int t = 0; t < 100; ++t) {
        BPoly f = random_int_bpoly(rng, 4, 3), g = random_int_bpoly(rng, 4, 3),
              h = random_int_bpoly(rng, 4, 3);
        CheckReport rep = relation_check(f, g, h, Rat(cd(rng)));
        if (!rep.ok()) {
            detail = "relations fail at trial " + std::to_string(t) + ": " + rep.failures[0];
            return false;
        }
        if (compose(compose(f, g), h) != compose(f, compose(g, h))) {
            detail = "associativity fails at trial " + std::to_string(t);
            return false;
        }
    }
    return true;
}

bool c4_witt(std::string& detail) {
    for (long p : {2L, 3L})
        for (unsigned m = 1; m <= 3; ++m) {
            CheckReport rep = witt_transport_check(p, m, 0, 0, true, true);
            if (!rep.ok()) {
                detail = rep.failures[0];
                return false;
            }
        }
    for (unsigned m = 1; m <= 3; ++m) {
        unsigned long samples = m < 3 ? 0 : 500;
        CheckReport rep = witt_transport_check(5, m, samples, 0, true, true);
        if (!rep.ok()) {
            detail = rep.failures[0];
            return false;
        }
    }
    return true;
}

bool c5_adams_bin(std::string& detail) {
    std::mt19937_64 rng(1);
    std::uniform_int_distribution<long> d6(0, 5);
    LambdaSeries any = LambdaSeries::from_ints(make_zmod(6), 8, {3, 1, 4, 1, 5, 0, 2, 5});
    if (!(adams_apply(1, any) == any)) {
        detail = "psi_1 is not the identity";
        return false;
    }
    for (int t = 0; t < 10; ++t) {
        std::vector<Int> h(8);
        for (auto& x : h) x = d6(rng);
        LambdaSeries f = LambdaSeries::from_ints(make_zmod(6), 8, h);
        if (!(adams_apply(2, adams_apply(2, f)) == adams_apply(4, f))) {
            detail = "psi_2 psi_2 != psi_4 over Z/6";
            return false;
        }
    }
    for (long a = 0; a < 8; ++a)
        if (!bin_fixed_check(binomial_series(PadicApprox(2, 3, a), 7), 3)) {
            detail = "series at p=2, alpha=" + std::to_string(a) + " not fixed";
            return false;
        }
    for (long a = 0; a < 9; ++a)
        if (!bin_fixed_check(binomial_series(PadicApprox(3, 2, a), 8), 3)) {
            detail = "series at p=3, alpha=" + std::to_string(a) + " not fixed";
            return false;
        }
    return true;
}

bool c6_inf_basis(std::string& detail) {
    GradedBasis g = graded_basis(RingFamily::der(kInfiniteOrder), 6);
    std::vector<long> want = {1, 1, 2, 6, 12, 60, 360};
    for (std::size_t n = 0; n < want.size(); ++n) {
        if (g.diagonal[n] != want[n]) {
            detail = "diagonal mismatch at n=" + std::to_string(n);
            return false;
        }
        if (c_n(static_cast<unsigned>(n)) != want[n]) {
            detail = "closed form mismatch at n=" + std::to_string(n);
            return false;
        }
    }
    if (!inf_equality_check(6)) {
        detail = "derivative and difference families differ at degree 6";
        return false;
    }
    return true;
}

bool c7_chains(std::string& detail) {
    auto w0 = chain_witness(0, 10);
    if (!w0 || w0->first != 2 || !(w0->second == BPoly::basis(2))) {
        detail = "order-zero witness wrong";
        return false;
    }
    auto w1 = chain_witness(1, 10);
    if (!w1) {
        detail = "no order-one witness within degree 10";
        return false;
    }
    if (!membership(w1->second, RingFamily::der(1)) ||
        membership(w1->second, RingFamily::der(2))) {
        detail = "order-one witness not cross-validated";
        return false;
    }
    detail = "order-one split at degree " + std::to_string(w1->first) + " with " +
             to_text(w1->second);
    return true;
}

bool c8_dual(std::string& detail) {
    std::mt19937_64 rng(0);
    std::uniform_int_distribution<long> cd(-4, 4);
    std::uniform_int_distribution<unsigned> rd(0, 2);
    std::uniform_int_distribution<unsigned> dd(0, 4);
    for (int t = 0; t < 200; ++t) {
        std::vector<Rat> a(dd(rng) + 1), b(dd(rng) + 1);
        for (auto& x : a) x = Rat(cd(rng));
        for (auto& x : b) x = Rat(cd(rng));
        BPoly f(a), g(b);
        unsigned r = rd(rng);
        if (dual_decompose_direct(f, g, r) != dual_decompose_split(f, g, r)) {
            detail = "decision routes disagree at trial " + std::to_string(t);
            return false;
        }
    }
    auto w1 = chain_witness(1, 10);
    if (!w1) {
        detail = "no chain degree to probe";
        return false;
    }
    CheckReport rep = weakly_composite_check(RingFamily::der(1), w1->first, 2 * w1->first);
    if (rep.ok()) {
        detail = "non-decomposability report did not fire for the order-one family";
        return false;
    }
    detail = "report fired: " + rep.failures[0];
    return true;
}

bool c9_classifier(std::string& detail) {
    for (long n = 2; n <= 50; ++n)
        if (!quasi_binomial_check(*make_zmod(n))) {
            detail = "Z/" + std::to_string(n) + " misclassified";
            return false;
        }
    for (const char* spec : {"F4", "F8", "F9", "F16", "F25", "F27", "F32"})
        if (quasi_binomial_check(*parse_ring_spec(spec))) {
            detail = std::string(spec) + " misclassified";
            return false;
        }
    std::vector<RingPtr> corpus;
    for (long n = 2; n <= 50; ++n) corpus.push_back(make_zmod(n));
    for (const char* spec :
         {"F2", "F3", "F4", "F5", "F7", "F8", "F9", "F16", "F25", "F27", "F32"})
        corpus.push_back(parse_ring_spec(spec));
    for (long p : {2L, 3L, 5L})
        for (unsigned k = 2; k <= 4; ++k) {
            std::vector<Int> monic(k + 1, Int(0));
            monic[k] = 1;
            corpus.push_back(make_poly_quot(p, monic));
        }
    std::vector<RingPtr> pair_seeds = {make_zmod(4),  make_zmod(6),
                                       parse_ring_spec("F4"), parse_ring_spec("F2[t]/(t^2)"),
                                       make_zmod(9),  parse_ring_spec("F8")};
    for (std::size_t i = 0; i < pair_seeds.size(); ++i)
        for (std::size_t j = i; j < pair_seeds.size(); ++j)
            corpus.push_back(make_product(pair_seeds[i], pair_seeds[j]));
    for (const RingPtr& a : corpus) {
        for (const Int& p : prime_factors(a->characteristic()))
            if (residue_embed_check(a, p) != quasi_binomial_at(*a, p)) {
                detail = "classifiers disagree on " + a->name() + " at p=" + p.get_str();
                return false;
            }
    }
    TorsionWitness w = torsion_uniqueness_demo(2, 3);
    if (w.alpha1 != 1 || w.alpha2 != 3 || w.separating_n != 2 || !w.identity_ok ||
        !w.torsion_forcing_ok) {
        detail = "torsion witness malformed";
        return false;
    }
    return true;
}

bool c10_perfection(std::string& detail) {
    // is_perfect exhaustively correct on fields and truncated polynomial rings
    for (const char* spec : {"F2", "F3", "F4", "F5", "F8", "F9", "F16", "F25", "F27"})
        if (!is_perfect(*parse_ring_spec(spec))) {
            detail = std::string(spec) + " should be perfect";
            return false;
        }
    for (long p : {2L, 3L, 5L})
        for (unsigned k = 2; k <= 4; ++k) {
            std::vector<Int> monic(k + 1, Int(0));
            monic[k] = 1;
            if (is_perfect(*make_poly_quot(p, monic))) {
                detail = "truncated ring misclassified as perfect";
                return false;
            }
        }
    // adjunction over all compatible pairs with |A|, |B| <= 16, B perfect
    std::vector<RingPtr> all = {
        parse_ring_spec("F2"),          parse_ring_spec("F4"),
        parse_ring_spec("F8"),          parse_ring_spec("F16"),
        parse_ring_spec("F3"),          parse_ring_spec("F9"),
        parse_ring_spec("F2[t]/(t^2)"), parse_ring_spec("F2[t]/(t^3)"),
        parse_ring_spec("F2[t]/(t^4)"), parse_ring_spec("F3[t]/(t^2)"),
        parse_ring_spec("F2xF4"),       parse_ring_spec("F2xF2"),
        parse_ring_spec("dual(F2)"),    parse_ring_spec("dual(F4)"),
    };
    for (const RingPtr& b : all) {
        if (!is_prime(b->characteristic())) continue;
        if (!is_perfect(*b)) continue;
        for (const RingPtr& a : all) {
            if (a->characteristic() != b->characteristic()) continue;
            AdjunctionReport rep = adjunction_check(b, a);
            if (!rep.bijective || rep.homs_to_a != rep.homs_to_perfection) {
                detail = "adjunction fails for B=" + b->name() + ", A=" + a->name();
                return false;
            }
        }
    }
    // perfection of a perfect ring is the ring itself (projection bijective)
    for (const char* spec : {"F4", "F9", "F16"}) {
        RingPtr a = parse_ring_spec(spec);
        if (perfection_r(a, 4)->size() != a->size()) {
            detail = std::string("perfection moved the perfect ring ") + spec;
            return false;
        }
    }
    return true;
}

bool c11_reflective(std::string& detail) {
    WUpperResult up = w_upper({MPoly::var("X")}, RingFamily::integers(), 6, 8);
    if (!up.stable || !up.span.has_value() || !(*up.span == IntLattice::standard(7))) {
        detail = "closure from X does not recover the full graded lattice";
        return false;
    }
    WLowerReport lo = w_lower(6, RingFamily::integers(), 8);
    if (!lo.ok) {
        detail = "Z[1/6] certificates failed";
        return false;
    }
    return true;
}

}  // namespace

int main() {
    criterion(1, "biring axiom suite with negative control", 10, c1_biring_axioms);
    criterion(2, "integrality of co-operations through degree 12", 5, c2_integrality);
    criterion(3, "composition relations and associativity", 30, c3_relations);
    criterion(4, "p-adic point correspondence and transport", 60, c4_witt);
    criterion(5, "Adams operations and fixed binomial series", 60, c5_adams_bin);
    criterion(6, "all-orders graded basis and gradewise equality", 60, c6_inf_basis);
    criterion(7, "strict chain witnesses", 120, c7_chains);
    criterion(8, "dual-number routes and bounded non-decomposability", 120, c8_dual);
    criterion(9, "finite-ring classifier suite", 60, c9_classifier);
    criterion(10, "perfection and adjunction suite", 60, c10_perfection);
    criterion(11, "reflective closure in both directions", 30, c11_reflective);

    if (g_failures > 0) {
        std::printf("%d criterion(s) failed\n", g_failures);
        return 1;
    }
    std::printf("all criteria passed\n");
    return 0;
}
