#ifndef IVPOLY_TBPOLY_HPP
#define IVPOLY_TBPOLY_HPP

#include <map>
#include <string>
#include <utility>

#include "ivpoly/bpoly.hpp"
#include "ivpoly/mpoly.hpp"

namespace ivpoly {

/// Bivariate polynomial on the tensor binomial basis C(X,i)*C(Y,j).
/// No zero entries are stored.
class TBPoly {
  public:
    using Key = std::pair<unsigned, unsigned>;

    TBPoly() = default;

    static TBPoly from_mpoly_xy(const MPoly& g);  // bivariate forward differences
    MPoly to_mpoly_xy() const;

    const std::map<Key, Rat>& terms() const { return t_; }
    Rat coeff(unsigned i, unsigned j) const;
    void set_coeff(unsigned i, unsigned j, const Rat& c);
    bool is_zero() const { return t_.empty(); }

    // Tensor product of two univariate polynomials: f(X)*g(Y).
    static TBPoly tensor(const BPoly& f, const BPoly& g);

    TBPoly& operator+=(const TBPoly& o);
    friend TBPoly operator+(TBPoly a, const TBPoly& b) { return a += b; }
    friend TBPoly operator-(const TBPoly& a, const TBPoly& b);
    TBPoly scaled(const Rat& c) const;
    bool operator==(const TBPoly& o) const { return t_ == o.t_; }

    Rat eval(const Rat& a, const Rat& b) const;

    bool all_integer() const;

    std::string to_json() const;
    static TBPoly from_json(const std::string& text);

  private:
    std::map<Key, Rat> t_;
};

}  // namespace ivpoly

#endif
