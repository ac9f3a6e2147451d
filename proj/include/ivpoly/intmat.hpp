#ifndef IVPOLY_INTMAT_HPP
#define IVPOLY_INTMAT_HPP

#include <optional>
#include <string>
#include <vector>

#include "ivpoly/rational.hpp"

namespace ivpoly {

/// Dense matrix of arbitrary-precision integers.
class IntMat {
  public:
    IntMat() = default;
    IntMat(std::size_t rows, std::size_t cols) : r_(rows), c_(cols), e_(rows * cols, Int(0)) {}

    static IntMat identity(std::size_t n);

    std::size_t rows() const { return r_; }
    std::size_t cols() const { return c_; }
    Int& at(std::size_t i, std::size_t j) { return e_[i * c_ + j]; }
    const Int& at(std::size_t i, std::size_t j) const { return e_[i * c_ + j]; }

    bool operator==(const IntMat& o) const = default;

    IntMat transposed() const;
    friend IntMat operator*(const IntMat& a, const IntMat& b);

    // Exact determinant (fraction-free elimination); square only.
    Int det() const;

    // {"rows": n, "cols": m, "entries": [["..",..],..]} with decimal strings.
    std::string to_json() const;
    static IntMat from_json(const std::string& text);

  private:
    std::size_t r_ = 0, c_ = 0;
    std::vector<Int> e_;
};

struct HnfResult {
    IntMat h;  // row-style Hermite normal form of the input
    IntMat u;  // unimodular, h = u * input
    std::size_t rank = 0;
    std::vector<std::size_t> pivot_cols;
};

// Canonical row HNF: echelon profile, positive pivots, entries above each
// pivot reduced into [0, pivot).  Zero rows sink to the bottom.
HnfResult hnf(const IntMat& m);

// Integer solution of x * gens = v, if one exists (coordinates relative to
// the rows of gens).  Works for any generating set, not only bases.
std::optional<std::vector<Int>> solve_left(const IntMat& gens, const std::vector<Int>& v);

}  // namespace ivpoly

#endif
