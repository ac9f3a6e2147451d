#ifndef IVPOLY_FAMILIES_HPP
#define IVPOLY_FAMILIES_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ivpoly/bpoly.hpp"
#include "ivpoly/lattice.hpp"

namespace ivpoly {

constexpr long kInfiniteOrder = -1;

enum class FamilyKind {
    Int,           // integer-valued polynomials over Z
    IntLocalized,  // over Z_(p)
    IntOverring,   // Int(Z) with coefficients restricted to Z[1/m]
    DerInt,        // derivatives up to the given order stay integer-valued
    FDiffInt,      // finite differences up to the given order stay integer-valued
};

/// A ring in the integer-valued polynomial family tower.  `order` is the
/// derivative / finite-difference order, kInfiniteOrder meaning all orders
/// (truncated gradewise to the degree, where higher ones vanish).
struct RingFamily {
    FamilyKind kind = FamilyKind::Int;
    Int p = 0;              // IntLocalized
    Int m = 1;              // IntOverring: l = Z[1/m]
    long order = 0;         // DerInt / FDiffInt

    static RingFamily integers();
    static RingFamily localized(const Int& p);
    static RingFamily overring(const Int& m);
    static RingFamily der(long r);      // r = kInfiniteOrder for all orders
    static RingFamily fdiff(long r);

    // CLI ids: "int", "int@p=2", "int[1/6]", "dint:2", "dint:inf",
    // "fdint:1", "fdint:inf".
    static RingFamily parse(const std::string& id);
    std::string id() const;
};

struct GradedBasis {
    RingFamily family;
    unsigned degree = 0;
    IntLattice lattice;          // members of degree <= degree, binomial coordinates
    std::vector<Rat> diagonal;   // HNF pivots: minimal positive leading coefficients

    std::vector<BPoly> basis_polys() const;
};

bool membership(const BPoly& f, const RingFamily& family);

GradedBasis graded_basis(const RingFamily& family, unsigned degree);

// prod_{p <= n prime} p^floor(n/p)
Int c_n(unsigned n);

// X(X-1)...(X-n+1) / p^{v_p(n!)}: the 0,1,2,... p-ordering construction.
BPoly local_basis(const Int& p, unsigned n);

// Whether f + g*eps, eps^2 = 0, has integer-valued derivatives up to order r
// over the dual numbers.  Decided twice: by direct dual-number evaluation and
// by the split criterion (f one order deeper than g); the routes must agree.
bool dual_decompose(const BPoly& f, const BPoly& g, unsigned r);
bool dual_decompose_direct(const BPoly& f, const BPoly& g, unsigned r);
bool dual_decompose_split(const BPoly& f, const BPoly& g, unsigned r);

// Least degree <= dmax at which the order-r and order-(r+1) graded lattices
// differ, with an explicit element of the difference.
std::optional<std::pair<unsigned, BPoly>> chain_witness(long r, unsigned dmax,
                                                        bool fdiff_variant = false);

// Gradewise equality of the all-orders derivative and finite-difference
// families up to the given degree.
bool inf_equality_check(unsigned degree);

}  // namespace ivpoly

#endif
