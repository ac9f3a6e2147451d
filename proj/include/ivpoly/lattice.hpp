#ifndef IVPOLY_LATTICE_HPP
#define IVPOLY_LATTICE_HPP

#include <optional>
#include <vector>

#include "ivpoly/intmat.hpp"
#include "ivpoly/rational.hpp"

namespace ivpoly {

/// Full-rank lattice in (1/scale) * Z^d, held by its canonical HNF basis.
/// Two lattices are equal exactly when their canonical forms coincide.
class IntLattice {
  public:
    // Rows of basis generate the lattice after division by scale; the
    // constructor canonicalizes (HNF, minimal scale) and insists on full rank.
    IntLattice(std::size_t ambient_dim, IntMat basis, Int scale = 1);

    static IntLattice standard(std::size_t d);  // Z^d

    std::size_t ambient_dim() const { return d_; }
    const IntMat& basis() const { return b_; }
    const Int& scale() const { return scale_; }

    bool operator==(const IntLattice& o) const;

    // Diagonal of the HNF basis (as rationals, scale folded in).
    std::vector<Rat> diagonal() const;

    std::optional<std::vector<Int>> member(const std::vector<Rat>& v) const;
    bool contains(const IntLattice& other) const;

  private:
    std::size_t d_;
    IntMat b_;
    Int scale_;
};

enum class LatticeOrder { Equal, FirstInsideSecond, SecondInsideFirst, Incomparable };

struct LatticeCompare {
    LatticeOrder order;
    Int index;  // subgroup index when nested, else 0
};

LatticeCompare compare(const IntLattice& a, const IntLattice& b);

// Solutions in Z^d of the homogeneous congruences <rows[i], x> ≡ 0 (mod
// moduli[i]).  Returns a full-rank basis (the solution set always contains
// lcm(moduli) * Z^d).
IntMat congruence_kernel(std::size_t d, const std::vector<std::vector<Int>>& rows,
                         const std::vector<Int>& moduli);

// Rational-row congruence solver: basis of {x in Z^d : <row, x> integral}.
IntMat congruence_kernel_rat(std::size_t d, const std::vector<std::vector<Rat>>& rows);

// Lattice cut out of (1/D) Z^d, D = lcm of constraint denominators, by
// requiring <c, a> integral on residues modulo Z^d (so the result always
// contains Z^d and sits inside (1/D) Z^d).
IntLattice lattice_from_congruences(std::size_t d, const std::vector<std::vector<Rat>>& constraints);

}  // namespace ivpoly

#endif
