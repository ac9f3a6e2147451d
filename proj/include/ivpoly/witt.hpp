#ifndef IVPOLY_WITT_HPP
#define IVPOLY_WITT_HPP

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ivpoly/bpoly.hpp"
#include "ivpoly/rational.hpp"
#include "ivpoly/report.hpp"

namespace ivpoly {

/// Raised when a truncated p-adic argument is too coarse to determine the
/// requested value; callers should retry with larger m.
class PrecisionError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Truncated p-adic integer: a residue modulo p^m.
class PadicApprox {
  public:
    PadicApprox(Int p, unsigned m, Int residue);

    const Int& p() const { return p_; }
    unsigned m() const { return m_; }
    const Int& residue() const { return r_; }
    Int modulus() const { return pow_int(p_, m_); }

    PadicApprox lifted_by(const Int& t) const;  // residue + t*p^m at precision m

  private:
    Int p_;
    unsigned m_;
    Int r_;
};

// f(alpha) mod p for integer-valued f; requires deg f < p^m so the value is
// determined by the residue (lifting alpha by multiples of p^m cannot change
// it).
Int eval_hom(const PadicApprox& alpha, const BPoly& f);

struct WittPointsReport {
    Int p;
    unsigned m = 0;
    bool injective = false;
    // vectors[alpha][n] = C(alpha, n) mod p for n < p^m
    std::vector<std::vector<Int>> vectors;
};

// alpha -> (eval_hom(alpha, C(X,n)))_{n < p^m} on [0, p^m) must be injective.
WittPointsReport witt_points(const Int& p, unsigned m);

// Sum and product of the two points computed through coaddition and
// comultiplication; must equal direct evaluation at alpha+beta and
// alpha*beta.
std::pair<Int, Int> witt_ring_ops(const PadicApprox& alpha, const PadicApprox& beta,
                                  const BPoly& f);

// Point injectivity plus structure transport over the whole truncated point
// set.  sample_cases = 0 checks every (alpha, beta, basis element) triple;
// otherwise that many seeded samples.  Tensor expansions are shared across
// cases, so the exhaustive small-p runs stay fast.
CheckReport witt_transport_check(const Int& p, unsigned m, unsigned long sample_cases,
                                 unsigned long seed, bool check_add, bool check_mul);

}  // namespace ivpoly

#endif
