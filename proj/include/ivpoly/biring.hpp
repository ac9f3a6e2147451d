#ifndef IVPOLY_BIRING_HPP
#define IVPOLY_BIRING_HPP

#include <functional>
#include <string>
#include <vector>

#include "ivpoly/bpoly.hpp"
#include "ivpoly/tbpoly.hpp"

namespace ivpoly {

// Co-operations of the biring structure on integer-valued polynomials.
// Coaddition expands f(X+Y) and comultiplication f(XY) on the tensor
// binomial basis; both are computed by substitution in the monomial basis
// followed by bivariate forward differences, so integrality of the result is
// observed rather than built in.
TBPoly coadd(const BPoly& f);
TBPoly comul(const BPoly& f);

struct Counits {
    Rat cozero;      // f(0)
    Rat counit;      // f(1)
    BPoly antipode;  // f(-X) on the binomial basis
    std::function<Rat(const Rat&)> colinear;  // c -> f(c)
};

Counits counits(const BPoly& f);
BPoly antipode(const BPoly& f);
Rat colinear(const BPoly& f, const Rat& c);  // beta(c): f -> f(c)

// e is ring-like when coadd(e) = e(x)1 + 1(x)e, comul(e) = e(x)e and
// beta(c)(e) = c for small integers c.
bool ringlike_check(const BPoly& f);

/// The five co-operations plus the co-linear structure, bundled so the axiom
/// verifier can be pointed at a deliberately corrupted set (negative
/// controls).  All operations are exact on inputs of degree <= degree_bound.
struct BiringOps {
    unsigned degree_bound = 12;
    std::function<TBPoly(const BPoly&)> coadd;
    std::function<TBPoly(const BPoly&)> comul;
    std::function<Rat(const BPoly&)> cozero;
    std::function<Rat(const BPoly&)> counit;
    std::function<BPoly(const BPoly&)> antipode;
    std::function<Rat(const BPoly&, const Rat&)> colinear;
};

BiringOps default_biring_ops(unsigned degree_bound = 12);

struct AxiomResult {
    std::string axiom;
    unsigned n = 0;
    bool pass = false;
    std::string detail;
};

struct AxiomReport {
    std::vector<AxiomResult> results;
    bool all_pass = true;

    void add(const std::string& axiom, unsigned n, bool pass, std::string detail = "");
};

// Verifies, exactly and basis-element-wise for every C(X,n) with n <= N:
// coassociativity and cocommutativity of both co-operations, the cozero and
// counit laws, the antipode law (folding the antipode against coaddition
// yields the cozero), co-distributivity of comultiplication over coaddition,
// and compatibility of the co-linear structure with evaluation.
AxiomReport verify_biring_axioms(unsigned N);
AxiomReport verify_biring_axioms(const BiringOps& ops, unsigned N);

}  // namespace ivpoly

#endif
