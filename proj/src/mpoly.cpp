#include "ivpoly/mpoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace ivpoly {

MPoly MPoly::constant(const Rat& c, std::vector<std::string> vars) {
    MPoly p(std::move(vars));
    p.set_coeff(Expo(p.vars_.size(), 0), c);
    return p;
}

MPoly MPoly::var(const std::string& name, std::vector<std::string> vars) {
    MPoly p(std::move(vars));
    auto it = std::find(p.vars_.begin(), p.vars_.end(), name);
    if (it == p.vars_.end()) throw std::invalid_argument("var: unknown variable " + name);
    Expo e(p.vars_.size(), 0);
    e[static_cast<std::size_t>(it - p.vars_.begin())] = 1;
    p.set_coeff(e, 1);
    return p;
}

long MPoly::degree(std::size_t var_index) const {
    long d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, static_cast<long>(e[var_index]));
    return d;
}

long MPoly::total_degree() const {
    long d = -1;
    for (const auto& [e, c] : terms_) {
        long t = 0;
        for (unsigned x : e) t += x;
        d = std::max(d, t);
    }
    return d;
}

void MPoly::set_coeff(const Expo& e, const Rat& c) {
    if (e.size() != vars_.size()) throw std::invalid_argument("set_coeff: bad exponent arity");
    if (c == 0)
        terms_.erase(e);
    else
        terms_[e] = c;
}

Rat MPoly::coeff(const Expo& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rat(0) : it->second;
}

MPoly& MPoly::operator+=(const MPoly& o) {
    if (vars_ != o.vars_) throw std::invalid_argument("mpoly +: variable sets differ");
    for (const auto& [e, c] : o.terms_) {
        Rat s = coeff(e) + c;
        set_coeff(e, s);
    }
    return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
    if (vars_ != o.vars_) throw std::invalid_argument("mpoly -: variable sets differ");
    for (const auto& [e, c] : o.terms_) {
        Rat s = coeff(e) - c;
        set_coeff(e, s);
    }
    return *this;
}

MPoly MPoly::operator-() const { return scaled(Rat(-1)); }

MPoly MPoly::scaled(const Rat& c) const {
    MPoly r(vars_);
    if (c == 0) return r;
    for (const auto& [e, v] : terms_) r.terms_[e] = v * c;
    return r;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
    if (a.vars_ != b.vars_) throw std::invalid_argument("mpoly *: variable sets differ");
    MPoly r(a.vars_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            MPoly::Expo e(ea.size());
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            Rat s = r.coeff(e) + ca * cb;
            r.set_coeff(e, s);
        }
    return r;
}

MPoly MPoly::derivative(std::size_t var_index) const {
    MPoly r(vars_);
    for (const auto& [e, c] : terms_) {
        if (e[var_index] == 0) continue;
        Expo f = e;
        f[var_index] -= 1;
        Rat s = r.coeff(f) + c * Rat(static_cast<long>(e[var_index]));
        r.set_coeff(f, s);
    }
    return r;
}

MPoly MPoly::substitute(const std::vector<MPoly>& images) const {
    if (images.size() != vars_.size()) throw std::invalid_argument("substitute: arity mismatch");
    if (images.empty()) throw std::invalid_argument("substitute: no variables");
    const auto& tvars = images[0].vars();
    MPoly acc(tvars);
    for (const auto& [e, c] : terms_) {
        MPoly t = MPoly::constant(c, tvars);
        for (std::size_t i = 0; i < e.size(); ++i)
            for (unsigned k = 0; k < e[i]; ++k) t = t * images[i];
        acc += t;
    }
    return acc;
}

MPoly MPoly::div_var(std::size_t var_index) const {
    MPoly r(vars_);
    for (const auto& [e, c] : terms_) {
        if (e[var_index] == 0) throw std::domain_error("div_var: not divisible");
        Expo f = e;
        f[var_index] -= 1;
        r.set_coeff(f, c);
    }
    return r;
}

MPoly MPoly::with_vars(const std::vector<std::string>& new_vars) const {
    MPoly r(new_vars);
    for (const auto& [e, c] : terms_) {
        Expo f(new_vars.size(), 0);
        for (std::size_t i = 0; i < vars_.size(); ++i) {
            if (e[i] == 0) continue;
            auto it = std::find(new_vars.begin(), new_vars.end(), vars_[i]);
            if (it == new_vars.end())
                throw std::invalid_argument("with_vars: variable " + vars_[i] + " not in target");
            f[static_cast<std::size_t>(it - new_vars.begin())] = e[i];
        }
        Rat s = r.coeff(f) + c;
        r.set_coeff(f, s);
    }
    return r;
}

}  // namespace ivpoly
