#ifndef IVPOLY_PLETHORY_HPP
#define IVPOLY_PLETHORY_HPP

#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "ivpoly/bpoly.hpp"
#include "ivpoly/families.hpp"
#include "ivpoly/report.hpp"
#include "ivpoly/tbpoly.hpp"

namespace ivpoly {

// The defining relations of composition against the ring and co-ring
// structure, checked exactly.  Inputs must have integer coefficients on the
// binomial basis and c must be an integer.
CheckReport relation_check(const BPoly& f, const BPoly& g, const BPoly& h, const Rat& c);

// Composition with the unit fixes every basis element, and homomorphisms
// into torsion-free probe targets are value-forced (hence unique).
CheckReport idempotence_witness(unsigned N);

// All composition-invertible integer-valued polynomials of degree <= d:
// exactly X + b and -X + b, reported for |b| <= window.
std::vector<BPoly> plethystic_units(unsigned d, long window = 3);
BPoly invert_unit(const BPoly& f);  // throws on non-units

struct TensorDecomposition {
    bool decomposed = false;
    // (i, j, coefficient) entries over basis[i](X) * basis[j](Y)
    std::vector<std::tuple<std::size_t, std::size_t, Int>> coords;
    std::string certificate;  // set when not decomposed
};

// Membership of F in the Z-span of pairwise products of the basis elements
// (factor degree bounded by Dmax); non-membership certificates are
// bounded-degree only.
TensorDecomposition decompose_tensor(const TBPoly& F, const std::vector<BPoly>& basis,
                                     unsigned Dmax);

// Reconstruction for decompositions (test support).
TBPoly recompose(const TensorDecomposition& d, const std::vector<BPoly>& basis);

// For every graded-basis element of the family up to degree d, coaddition
// and comultiplication must decompose over the family's basis up to Dmax
// (default 2 * bidegree).
CheckReport weakly_composite_check(const RingFamily& family, unsigned d, unsigned Dmax = 0);

}  // namespace ivpoly

#endif
