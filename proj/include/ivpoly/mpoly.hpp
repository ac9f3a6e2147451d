#ifndef IVPOLY_MPOLY_HPP
#define IVPOLY_MPOLY_HPP

#include <map>
#include <string>
#include <vector>

#include "ivpoly/rational.hpp"

namespace ivpoly {

/// Sparse polynomial over Q in named variables (the artifact needs at most
/// X, Y, Z).  Terms map exponent vectors to nonzero coefficients; zero
/// coefficients are never stored.
class MPoly {
  public:
    using Expo = std::vector<unsigned>;

    MPoly() = default;
    explicit MPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

    static MPoly constant(const Rat& c, std::vector<std::string> vars = {"X"});
    static MPoly var(const std::string& name, std::vector<std::string> vars = {"X"});

    const std::vector<std::string>& vars() const { return vars_; }
    const std::map<Expo, Rat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    // Degree in one variable, or total degree; zero polynomial has degree -1.
    long degree(std::size_t var_index) const;
    long total_degree() const;

    void set_coeff(const Expo& e, const Rat& c);
    Rat coeff(const Expo& e) const;

    MPoly& operator+=(const MPoly& o);
    MPoly& operator-=(const MPoly& o);
    friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
    friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
    friend MPoly operator*(const MPoly& a, const MPoly& b);
    MPoly operator-() const;
    MPoly scaled(const Rat& c) const;
    bool operator==(const MPoly& o) const { return vars_ == o.vars_ && terms_ == o.terms_; }

    MPoly derivative(std::size_t var_index) const;

    // Substitute each variable by the given polynomial (all over the target
    // variable set of the first replacement).
    MPoly substitute(const std::vector<MPoly>& images) const;

    template <typename Scalar>
    Scalar eval(const std::vector<Scalar>& point) const;

    // Exact division by a variable; every term must be divisible.
    MPoly div_var(std::size_t var_index) const;

    // Gather coefficients as a univariate in vars_[var_index] with MPoly
    // coefficients over the remaining variables (used by composition).
    MPoly with_vars(const std::vector<std::string>& new_vars) const;

  private:
    std::vector<std::string> vars_{"X"};
    std::map<Expo, Rat> terms_;
};

template <typename Scalar>
Scalar MPoly::eval(const std::vector<Scalar>& point) const {
    if (point.size() != vars_.size()) throw std::invalid_argument("eval: wrong point arity");
    Scalar acc = Scalar(0);
    for (const auto& [e, c] : terms_) {
        Scalar t = Scalar(c);
        for (std::size_t i = 0; i < e.size(); ++i)
            for (unsigned k = 0; k < e[i]; ++k) t = t * point[i];
        acc = acc + t;
    }
    return acc;
}

/// a + b*eps with eps^2 = 0; components are exact rationals.
struct DualElem {
    Rat base;
    Rat eps;

    DualElem() : base(0), eps(0) {}
    explicit DualElem(const Rat& a) : base(a), eps(0) {}
    DualElem(Rat a, Rat b) : base(std::move(a)), eps(std::move(b)) {}

    friend DualElem operator+(const DualElem& x, const DualElem& y) {
        return {x.base + y.base, x.eps + y.eps};
    }
    friend DualElem operator-(const DualElem& x, const DualElem& y) {
        return {x.base - y.base, x.eps - y.eps};
    }
    friend DualElem operator*(const DualElem& x, const DualElem& y) {
        return {x.base * y.base, x.base * y.eps + x.eps * y.base};
    }
    bool operator==(const DualElem& o) const = default;
};

}  // namespace ivpoly

#endif
