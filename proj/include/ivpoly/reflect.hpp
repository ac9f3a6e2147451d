#ifndef IVPOLY_REFLECT_HPP
#define IVPOLY_REFLECT_HPP

#include <optional>
#include <string>
#include <vector>

#include "ivpoly/bpoly.hpp"
#include "ivpoly/families.hpp"
#include "ivpoly/finite_ring.hpp"
#include "ivpoly/lattice.hpp"

namespace ivpoly {

/// Torsion-free coefficient target for forced homomorphisms: Z[1/m] (m = 1
/// meaning Z) or the local ring Z_(p).
struct TfTarget {
    enum class Kind { ZInvM, Localized };
    Kind kind = Kind::ZInvM;
    Int m = 1;
    Int p = 0;

    static TfTarget integers() { return {}; }
    static TfTarget z_inv(const Int& m);
    static TfTarget localized(const Int& p);

    bool contains(const Rat& q) const;
    std::string name() const;
};

struct ForcedHom {
    bool ok = false;
    std::vector<Rat> images;  // images of the degree-graded basis elements
    std::string obstruction;  // first failed division when !ok
};

// A homomorphism out of the family sending X to a is forced on each basis
// element (torsion-freeness pins the value); returns the image list when
// every forced value lands in the target, otherwise the first obstruction.
ForcedHom forced_hom(const Rat& a, const RingFamily& family, unsigned N, const TfTarget& target);

// Componentwise over a finite product of torsion-free targets.
std::vector<ForcedHom> forced_hom(const std::vector<Rat>& a, const RingFamily& family, unsigned N,
                                  const std::vector<TfTarget>& targets);

// Torsion targets are rejected: classification of those goes through
// quasi_binomial_check instead.
[[noreturn]] void forced_hom(const FiniteRing& target, FiniteRing::Elem a,
                             const RingFamily& family, unsigned N);

// a^p - a in pA for every a and every prime p dividing the characteristic
// (exhaustive).
bool quasi_binomial_check(const FiniteRing& a);
bool quasi_binomial_at(const FiniteRing& a, const Int& p);

// Injectivity of the joint map A/pA -> F_p^{Hom(A/pA, F_p)}, homomorphisms
// found exhaustively.  Size capped at 4096.
bool residue_embed_check(RingPtr a, const Int& p);

struct TorsionWitness {
    Int p;
    unsigned m = 0;
    Int alpha1, alpha2;      // distinct p-adic points agreeing on X mod p
    unsigned separating_n = 0;
    Int value1, value2;      // images of C(X, separating_n)
    BPoly f_of_pX;           // (X^p - X)/p composed with pX, expanded exactly
    bool identity_ok = false;         // f_of_pX = p^{p-1} X^p - X and F(0) = 0
    bool torsion_forcing_ok = false;  // p*a = 0 plus the relation forces a = 0
};

TorsionWitness torsion_uniqueness_demo(const Int& p, unsigned m);

struct WLowerReport {
    Int m;
    unsigned degree = 0;
    bool ok = false;
    std::vector<std::string> certificates;  // one per probe element
};

// The localization Z[1/m] is reflective; certified by forced homomorphisms
// at probe points with denominators from m.
WLowerReport w_lower(const Int& m, const RingFamily& family, unsigned degree);

struct WUpperResult {
    bool stable = false;
    unsigned steps_used = 0;
    Int const_m = 1;  // the degree-zero subring is Z[1/const_m]
    std::vector<BPoly> module_basis;  // HNF rows of the generated Z-span
    std::optional<IntLattice> span;   // same data as a lattice, when full rank
    std::string note;
};

// Iterative closure of the subring generated by the given elements under
// substitution into the family's graded basis and ring operations, tracked
// through degree-graded lattices.  Stops at stability or when the step
// budget runs out (flagged partial).
WUpperResult w_upper(const std::vector<MPoly>& generators, const RingFamily& family,
                     unsigned degree, unsigned steps);

}  // namespace ivpoly

#endif
