#ifndef IVPOLY_FINITE_RING_HPP
#define IVPOLY_FINITE_RING_HPP

#include <memory>
#include <string>
#include <vector>

#include "ivpoly/rational.hpp"

namespace ivpoly {

/// Small finite commutative ring with identity; elements are dense indices
/// in [0, size), so exhaustive enumeration is a plain loop.
class FiniteRing {
  public:
    using Elem = std::size_t;

    virtual ~FiniteRing() = default;
    virtual std::size_t size() const = 0;
    virtual Elem add(Elem a, Elem b) const = 0;
    virtual Elem mul(Elem a, Elem b) const = 0;
    virtual Elem neg(Elem a) const = 0;
    virtual Elem zero() const = 0;
    virtual Elem one() const = 0;
    virtual std::string elem_name(Elem a) const = 0;
    virtual std::string name() const = 0;

    Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
    Elem from_int(const Int& n) const;
    Elem pow(Elem a, const Int& e) const;
    Int characteristic() const;  // additive order of 1
};

using RingPtr = std::shared_ptr<const FiniteRing>;

RingPtr make_zmod(const Int& n);
// F_p[t]/(g) for monic g given by its coefficient list (constant first,
// leading 1 last); g need not be irreducible.
RingPtr make_poly_quot(const Int& p, const std::vector<Int>& monic);
// F_{p^k}: smallest monic irreducible of degree k in lexicographic order.
RingPtr make_gf(const Int& p, unsigned k);
RingPtr make_dual(RingPtr a);  // A[eps], eps^2 = 0
RingPtr make_product(RingPtr a, RingPtr b);
// Subring on a closed element subset (indices into a).
RingPtr make_subring(RingPtr a, std::vector<FiniteRing::Elem> elems, const std::string& label);
// Quotient by the ideal generated additively by the given set (must already
// be closed under multiplication by ring elements, e.g. pA).
RingPtr make_quotient(RingPtr a, const std::vector<FiniteRing::Elem>& ideal,
                      const std::string& label);

// Ideal pA and the quotient A/pA.
std::vector<FiniteRing::Elem> scaled_ideal(const FiniteRing& a, const Int& p);
RingPtr quotient_mod_p(RingPtr a, const Int& p);

// Spec strings: "Z/4", "F4", "F4=F2[t]/(t^2+t+1)", "F2[t]/(t^2)",
// "Z/2xZ/9", "dual(Z/4)".
RingPtr parse_ring_spec(const std::string& spec);

// Small unital generating set (greedy, deterministic).
std::vector<FiniteRing::Elem> ring_generators(const FiniteRing& a);

// All unital ring homomorphisms a -> b, each as a full image table indexed
// by the elements of a.  Exhaustive over generator images, exact.
std::vector<std::vector<FiniteRing::Elem>> ring_homs(const FiniteRing& a, const FiniteRing& b);

bool frobenius_is_hom(const FiniteRing& a, const Int& p);

}  // namespace ivpoly

#endif
