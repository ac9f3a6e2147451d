#ifndef IVPOLY_PERFECTION_HPP
#define IVPOLY_PERFECTION_HPP

#include <string>

#include "ivpoly/finite_ring.hpp"

namespace ivpoly {

// Frobenius x -> x^p is a bijection (char(A) = p prime required).
bool is_perfect(const FiniteRing& a);

// Stage-m approximation of the inverse limit of A <- A <- ... along
// Frobenius: the subring of coordinate-0 values of compatible m-tuples,
// i.e. the m-1-fold Frobenius image of A.  Sizes stabilize once the eventual
// image is reached; the stabilized ring is perfect.
RingPtr perfection_r(RingPtr a, unsigned m);

struct PerfectionReport {
    std::vector<std::size_t> sizes;  // |perfection_r(A, 1..m)|
    bool stabilized = false;
    RingPtr stable_ring;
};

PerfectionReport perfection_with_stabilization(RingPtr a, unsigned m);

// Stage-k perfect closure of F_p[x]/(x^n): F_p[u]/(u^{n p^k}) with x = u^{p^k}.
RingPtr perfect_closure_l(unsigned n, const Int& p, unsigned k);

// |Hom(B, perfection_r(A, m))| = |Hom(B, A)| for perfect B, the bijection
// induced by the coordinate projection into A.  Exhaustive; sizes capped.
struct AdjunctionReport {
    std::size_t homs_to_perfection = 0;
    std::size_t homs_to_a = 0;
    bool bijective = false;
};

AdjunctionReport adjunction_check(RingPtr b, RingPtr a);

}  // namespace ivpoly

#endif
