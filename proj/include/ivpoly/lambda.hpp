#ifndef IVPOLY_LAMBDA_HPP
#define IVPOLY_LAMBDA_HPP

#include <memory>
#include <string>
#include <vector>

#include "ivpoly/finite_ring.hpp"
#include "ivpoly/mpoly.hpp"

namespace ivpoly {

/// Truncated element of 1 + T A[[T]]: the unit leading 1 plus coefficients
/// h_1..h_N.  Coefficients live either in Z (ring == nullptr) or in a finite
/// ring.  The convention is F(T) = prod (1 - x_i T)^{-1}, so h_n are complete
/// homogeneous symmetric functions and the rank-one element is 1/(1 - aT).
class LambdaSeries {
  public:
    LambdaSeries(RingPtr ring, unsigned trunc);  // the series 1
    static LambdaSeries over_z(unsigned trunc);

    static LambdaSeries from_ints(RingPtr ring, unsigned trunc, const std::vector<Int>& h);
    static LambdaSeries rank_one(RingPtr ring, unsigned trunc, const Int& a);  // 1/(1-aT)

    const RingPtr& ring() const { return ring_; }
    unsigned trunc() const { return trunc_; }
    bool over_integers() const { return ring_ == nullptr; }

    // h_n for 1 <= n <= trunc (h_0 = 1 is implicit).
    Int coeff_z(unsigned n) const;
    FiniteRing::Elem coeff_f(unsigned n) const;
    void set_coeff_z(unsigned n, const Int& v);
    void set_coeff_f(unsigned n, FiniteRing::Elem v);

    std::string coeff_str(unsigned n) const;

    LambdaSeries truncated(unsigned n) const;
    bool operator==(const LambdaSeries& o) const;

    // Group law of 1 + T A[[T]]: power series multiplication.
    friend LambdaSeries series_mul(const LambdaSeries& a, const LambdaSeries& b);

    // {"ring": id, "trunc": N, "h": ["...", ...]}
    std::string to_json() const;
    static LambdaSeries from_json(const std::string& text);

  private:
    RingPtr ring_;  // nullptr = integers
    unsigned trunc_;
    std::vector<Int> hz_;
    std::vector<FiniteRing::Elem> hf_;
};

/// Integral polynomials expressing the coefficients of the k-th Adams
/// operation of a truncated series in the h_i.  polys[n-1] gives the n-th
/// output coefficient and only reads h_1..h_{n*k}.
struct AdamsTable {
    unsigned k = 1;
    unsigned trunc = 0;
    std::vector<MPoly> polys;  // over variables h1..h_{trunc*k}
};

// Cached per (k, N); concurrent reads, synchronized population.
std::shared_ptr<const AdamsTable> adams_universal(unsigned k, unsigned trunc);

// psi_k; the output is truncated at floor(N/k) since coefficient n of the
// image needs the input to degree n*k.
LambdaSeries adams_apply(unsigned k, const LambdaSeries& f);

// h_n = C(alpha + n - 1, n) mod p: the expansion of (1 - T)^{-alpha}.
// Requires n <= trunc < p^m so the residue determines every coefficient.
class PadicApprox;  // defined in witt.hpp
LambdaSeries binomial_series(const PadicApprox& alpha, unsigned trunc);

// True when psi_k(F) agrees with F at every available coefficient for all
// 2 <= k <= kmax.
bool bin_fixed_check(const LambdaSeries& f, unsigned kmax);

}  // namespace ivpoly

#endif
