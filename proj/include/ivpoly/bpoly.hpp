#ifndef IVPOLY_BPOLY_HPP
#define IVPOLY_BPOLY_HPP

#include <string>
#include <vector>

#include "ivpoly/mpoly.hpp"
#include "ivpoly/rational.hpp"

namespace ivpoly {

/// Univariate polynomial over Q stored on the binomial basis:
/// coeffs[n] is the coefficient of C(X,n).  The zero polynomial is the empty
/// sequence; otherwise the trailing coefficient is nonzero.  Membership in
/// the ring of integer-valued polynomials is equivalent to all coefficients
/// being integers (tested, never assumed).
class BPoly {
  public:
    BPoly() = default;
    explicit BPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

    static BPoly zero() { return BPoly(); }
    static BPoly one() { return BPoly({Rat(1)}); }
    static BPoly x() { return BPoly({Rat(0), Rat(1)}); }
    static BPoly basis(std::size_t n);  // C(X,n)
    static BPoly constant(const Rat& c) { return BPoly({c}); }

    const std::vector<Rat>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    Rat coeff(std::size_t n) const { return n < c_.size() ? c_[n] : Rat(0); }

    bool operator==(const BPoly& o) const { return c_ == o.c_; }

    friend BPoly operator+(const BPoly& a, const BPoly& b);
    friend BPoly operator-(const BPoly& a, const BPoly& b);
    friend BPoly operator*(const BPoly& a, const BPoly& b);  // via monomial basis
    BPoly operator-() const;
    BPoly scaled(const Rat& c) const;

  private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Rat> c_;
};

// X(X-1)...(X-n+1)/n! as a univariate polynomial in the monomial basis.
MPoly binom_poly(unsigned n);

// Newton forward-difference transform and its inverse; exact round trip.
BPoly to_binomial(const MPoly& f);
MPoly from_binomial(const BPoly& f);

// Multiplication through the difference table of pointwise products; must
// agree bit-exactly with operator* (cross-checked in tests).
BPoly mul_by_values(const BPoly& a, const BPoly& b);

// f(g(X)).
BPoly compose(const BPoly& f, const BPoly& g);

// Exact r-th derivative.
BPoly derivative(const BPoly& f, unsigned r = 1);

// Delta_Y f = (f(X+Y) - f(X))/Y as a polynomial in X and Y; substituting
// Y := 0 gives f'.
MPoly fdiff_Y(const BPoly& f);
BPoly fdiff(const BPoly& f, const Rat& h);

Rat eval(const BPoly& f, const Rat& a);
DualElem eval(const BPoly& f, const DualElem& a);

// f maps Z into Z.  Decided through the coefficient criterion; the
// value-checking route (f(0..deg f) all integers) is exposed separately as an
// independent oracle and the two must agree.
bool is_int_valued(const BPoly& f);
bool is_int_valued_by_values(const BPoly& f);

}  // namespace ivpoly

#endif
