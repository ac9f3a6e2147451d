#include "ivpoly/bpoly.hpp"

#include <stdexcept>

namespace ivpoly {

BPoly BPoly::basis(std::size_t n) {
    std::vector<Rat> c(n + 1, Rat(0));
    c[n] = 1;
    return BPoly(std::move(c));
}

BPoly operator+(const BPoly& a, const BPoly& b) {
    std::vector<Rat> c(std::max(a.c_.size(), b.c_.size()), Rat(0));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
    return BPoly(std::move(c));
}

BPoly operator-(const BPoly& a, const BPoly& b) {
    std::vector<Rat> c(std::max(a.c_.size(), b.c_.size()), Rat(0));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) - b.coeff(i);
    return BPoly(std::move(c));
}

BPoly BPoly::operator-() const { return scaled(Rat(-1)); }

BPoly BPoly::scaled(const Rat& s) const {
    std::vector<Rat> c = c_;
    for (auto& x : c) x *= s;
    return BPoly(std::move(c));
}

BPoly operator*(const BPoly& a, const BPoly& b) {
    return to_binomial(from_binomial(a) * from_binomial(b));
}

MPoly binom_poly(unsigned n) {
    MPoly p = MPoly::constant(Rat(1));
    MPoly x = MPoly::var("X");
    for (unsigned i = 0; i < n; ++i) p = p * (x - MPoly::constant(Rat(static_cast<long>(i))));
    return p.scaled(Rat(1) / Rat(factorial(n)));
}

BPoly to_binomial(const MPoly& f) {
    if (f.vars().size() != 1) throw std::invalid_argument("to_binomial: univariate input required");
    long d = f.degree(0);
    if (d < 0) return BPoly::zero();
    // Forward-difference table of the values f(0..d).
    std::vector<Rat> row(static_cast<std::size_t>(d) + 1);
    for (long i = 0; i <= d; ++i)
        row[static_cast<std::size_t>(i)] = f.eval<Rat>({Rat(i)});
    std::vector<Rat> out;
    out.reserve(row.size());
    for (std::size_t k = 0; k < static_cast<std::size_t>(d) + 1; ++k) {
        out.push_back(row[0]);
        for (std::size_t i = 0; i + k + 1 <= static_cast<std::size_t>(d); ++i)
            row[i] = row[i + 1] - row[i];
    }
    return BPoly(std::move(out));
}

MPoly from_binomial(const BPoly& f) {
    MPoly acc(std::vector<std::string>{"X"});
    for (std::size_t n = 0; n < f.coeffs().size(); ++n) {
        if (f.coeffs()[n] == 0) continue;
        acc += binom_poly(static_cast<unsigned>(n)).scaled(f.coeffs()[n]);
    }
    return acc;
}

BPoly mul_by_values(const BPoly& a, const BPoly& b) {
    if (a.is_zero() || b.is_zero()) return BPoly::zero();
    long d = a.degree() + b.degree();
    std::vector<Rat> row(static_cast<std::size_t>(d) + 1);
    for (long i = 0; i <= d; ++i)
        row[static_cast<std::size_t>(i)] = eval(a, Rat(i)) * eval(b, Rat(i));
    std::vector<Rat> out;
    out.reserve(row.size());
    for (std::size_t k = 0; k < row.size(); ++k) {
        out.push_back(row[0]);
        for (std::size_t i = 0; i + k + 1 < row.size(); ++i) row[i] = row[i + 1] - row[i];
    }
    return BPoly(std::move(out));
}

BPoly compose(const BPoly& f, const BPoly& g) {
    if (f.is_zero()) return BPoly::zero();
    MPoly gm = from_binomial(g);
    // Horner on the monomial form of f.
    MPoly fm = from_binomial(f);
    long d = fm.degree(0);
    MPoly acc(std::vector<std::string>{"X"});
    for (long k = d; k >= 0; --k) {
        acc = acc * gm;
        acc += MPoly::constant(fm.coeff({static_cast<unsigned>(k)}));
    }
    return to_binomial(acc);
}

BPoly derivative(const BPoly& f, unsigned r) {
    MPoly m = from_binomial(f);
    for (unsigned i = 0; i < r; ++i) m = m.derivative(0);
    return to_binomial(m);
}

MPoly fdiff_Y(const BPoly& f) {
    std::vector<std::string> xy{"X", "Y"};
    MPoly fm = from_binomial(f).with_vars(xy);
    MPoly xplusy = MPoly::var("X", xy) + MPoly::var("Y", xy);
    MPoly shifted = fm.substitute({xplusy, MPoly::var("Y", xy)});
    return (shifted - fm).div_var(1);
}

BPoly fdiff(const BPoly& f, const Rat& h) {
    if (f.is_zero() || f.degree() == 0) return BPoly::zero();
    MPoly g = fdiff_Y(f);
    std::vector<std::string> x{"X"};
    MPoly at_h = g.substitute({MPoly::var("X", x), MPoly::constant(h, x)});
    return to_binomial(at_h);
}

Rat eval(const BPoly& f, const Rat& a) {
    Rat acc = 0;
    Rat cab = 1;  // C(a, n), built incrementally
    for (std::size_t n = 0; n < f.coeffs().size(); ++n) {
        if (n > 0) cab *= (a - Rat(static_cast<long>(n) - 1)) / Rat(static_cast<long>(n));
        acc += f.coeffs()[n] * cab;
    }
    return acc;
}

DualElem eval(const BPoly& f, const DualElem& a) {
    return from_binomial(f).eval<DualElem>({a});
}

bool is_int_valued(const BPoly& f) {
    for (const Rat& c : f.coeffs())
        if (!is_integer(c)) return false;
    return true;
}

bool is_int_valued_by_values(const BPoly& f) {
    long d = f.degree();
    for (long i = 0; i <= d; ++i)
        if (!is_integer(eval(f, Rat(i)))) return false;
    return true;
}

}  // namespace ivpoly
