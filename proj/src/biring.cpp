#include "ivpoly/biring.hpp"

#include <map>
#include <stdexcept>
#include <tuple>

#include <json.hpp>

namespace ivpoly {

TBPoly TBPoly::from_mpoly_xy(const MPoly& g) {
    MPoly p = g.with_vars({"X", "Y"});
    long dx = p.degree(0), dy = p.degree(1);
    TBPoly out;
    if (dx < 0 && dy < 0) return out;
    dx = std::max(dx, 0L);
    dy = std::max(dy, 0L);
    // Value grid, then forward differences along Y and along X.
    std::vector<std::vector<Rat>> v(static_cast<std::size_t>(dx) + 1,
                                    std::vector<Rat>(static_cast<std::size_t>(dy) + 1));
    for (long a = 0; a <= dx; ++a)
        for (long b = 0; b <= dy; ++b)
            v[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
                p.eval<Rat>({Rat(a), Rat(b)});
    for (std::size_t a = 0; a + 1 <= static_cast<std::size_t>(dx) + 1; ++a) {
        auto& row = v[a];
        std::vector<Rat> d(row.size());
        for (std::size_t j = 0; j < row.size(); ++j) {
            d[j] = row[0];
            for (std::size_t i = 0; i + j + 1 < row.size(); ++i) row[i] = row[i + 1] - row[i];
        }
        v[a] = d;
    }
    for (std::size_t j = 0; j <= static_cast<std::size_t>(dy); ++j) {
        std::vector<Rat> col(static_cast<std::size_t>(dx) + 1);
        for (std::size_t a = 0; a <= static_cast<std::size_t>(dx); ++a) col[a] = v[a][j];
        for (std::size_t i = 0; i < col.size(); ++i) {
            if (col[0] != 0) out.t_[{static_cast<unsigned>(i), static_cast<unsigned>(j)}] = col[0];
            for (std::size_t a = 0; a + i + 1 < col.size(); ++a) col[a] = col[a + 1] - col[a];
        }
    }
    return out;
}

MPoly TBPoly::to_mpoly_xy() const {
    std::vector<std::string> xy{"X", "Y"};
    MPoly acc(xy);
    for (const auto& [ij, c] : t_) {
        MPoly bx = binom_poly(ij.first).with_vars(xy);
        MPoly by = binom_poly(ij.second).substitute({MPoly::var("Y", xy)});
        acc += (bx * by).scaled(c);
    }
    return acc;
}

Rat TBPoly::coeff(unsigned i, unsigned j) const {
    auto it = t_.find({i, j});
    return it == t_.end() ? Rat(0) : it->second;
}

void TBPoly::set_coeff(unsigned i, unsigned j, const Rat& c) {
    if (c == 0)
        t_.erase({i, j});
    else
        t_[{i, j}] = c;
}

TBPoly TBPoly::tensor(const BPoly& f, const BPoly& g) {
    TBPoly out;
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
        if (f.coeffs()[i] == 0) continue;
        for (std::size_t j = 0; j < g.coeffs().size(); ++j) {
            if (g.coeffs()[j] == 0) continue;
            out.t_[{static_cast<unsigned>(i), static_cast<unsigned>(j)}] =
                f.coeffs()[i] * g.coeffs()[j];
        }
    }
    return out;
}

TBPoly& TBPoly::operator+=(const TBPoly& o) {
    for (const auto& [ij, c] : o.t_) set_coeff(ij.first, ij.second, coeff(ij.first, ij.second) + c);
    return *this;
}

TBPoly operator-(const TBPoly& a, const TBPoly& b) {
    TBPoly r = a;
    for (const auto& [ij, c] : b.terms()) {
        r.set_coeff(ij.first, ij.second, r.coeff(ij.first, ij.second) - c);
    }
    return r;
}

TBPoly TBPoly::scaled(const Rat& c) const {
    TBPoly r;
    if (c == 0) return r;
    for (const auto& [ij, v] : t_) r.t_[ij] = v * c;
    return r;
}

Rat TBPoly::eval(const Rat& a, const Rat& b) const {
    Rat acc = 0;
    for (const auto& [ij, c] : t_)
        acc += c * binomial_rat(a, ij.first) * binomial_rat(b, ij.second);
    return acc;
}

bool TBPoly::all_integer() const {
    for (const auto& [ij, c] : t_)
        if (!is_integer(c)) return false;
    return true;
}

std::string TBPoly::to_json() const {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [ij, c] : t_)
        terms.push_back({{"i", ij.first}, {"j", ij.second}, {"c", c.get_str()}});
    return nlohmann::json{{"terms", terms}}.dump();
}

TBPoly TBPoly::from_json(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    TBPoly out;
    for (const auto& t : j.at("terms"))
        out.set_coeff(t.at("i").get<unsigned>(), t.at("j").get<unsigned>(),
                      parse_rat(t.at("c").get<std::string>()));
    return out;
}

namespace {

// Tensor expansion by bivariate forward differences of the substituted
// polynomial's value grid; the grid entries are univariate evaluations, so
// no product identities enter anywhere.
TBPoly tensor_expand_values(const BPoly& f, bool multiplicative) {
    TBPoly out;
    if (f.is_zero()) return out;
    std::size_t d = static_cast<std::size_t>(f.degree());
    std::vector<std::vector<Rat>> v(d + 1, std::vector<Rat>(d + 1));
    if (!multiplicative) {
        std::vector<Rat> line(2 * d + 1);
        for (std::size_t s = 0; s <= 2 * d; ++s) line[s] = eval(f, Rat(static_cast<long>(s)));
        for (std::size_t a = 0; a <= d; ++a)
            for (std::size_t b = 0; b <= d; ++b) v[a][b] = line[a + b];
    } else {
        std::map<std::size_t, Rat> memo;
        for (std::size_t a = 0; a <= d; ++a)
            for (std::size_t b = 0; b <= d; ++b) {
                auto [it, fresh] = memo.try_emplace(a * b, Rat(0));
                if (fresh) it->second = eval(f, Rat(static_cast<long>(a * b)));
                v[a][b] = it->second;
            }
    }
    for (std::size_t a = 0; a <= d; ++a) {
        auto& row = v[a];
        std::vector<Rat> diff(row.size());
        for (std::size_t j = 0; j < row.size(); ++j) {
            diff[j] = row[0];
            for (std::size_t i = 0; i + j + 1 < row.size(); ++i) row[i] = row[i + 1] - row[i];
        }
        v[a] = diff;
    }
    for (std::size_t j = 0; j <= d; ++j) {
        std::vector<Rat> col(d + 1);
        for (std::size_t a = 0; a <= d; ++a) col[a] = v[a][j];
        for (std::size_t i = 0; i < col.size(); ++i) {
            if (col[0] != 0)
                out.set_coeff(static_cast<unsigned>(i), static_cast<unsigned>(j), col[0]);
            for (std::size_t a = 0; a + i + 1 < col.size(); ++a) col[a] = col[a + 1] - col[a];
        }
    }
    return out;
}

}  // namespace

TBPoly coadd(const BPoly& f) { return tensor_expand_values(f, false); }

TBPoly comul(const BPoly& f) { return tensor_expand_values(f, true); }

BPoly antipode(const BPoly& f) {
    std::vector<std::string> x{"X"};
    MPoly fm = from_binomial(f);
    MPoly sub = fm.substitute({-MPoly::var("X", x)});
    return to_binomial(sub);
}

Counits counits(const BPoly& f) {
    return {eval(f, Rat(0)), eval(f, Rat(1)), antipode(f),
            [f](const Rat& c) { return eval(f, c); }};
}

Rat colinear(const BPoly& f, const Rat& c) { return eval(f, c); }

bool ringlike_check(const BPoly& f) {
    TBPoly want_add = TBPoly::tensor(f, BPoly::one());
    want_add += TBPoly::tensor(BPoly::one(), f);
    if (coadd(f) != want_add) return false;
    if (comul(f) != TBPoly::tensor(f, f)) return false;
    for (long c : {0L, 1L, -1L, 2L, -2L, 3L})
        if (colinear(f, Rat(c)) != Rat(c)) return false;
    return true;
}

BiringOps default_biring_ops(unsigned degree_bound) {
    BiringOps ops;
    ops.degree_bound = degree_bound;
    ops.coadd = [](const BPoly& f) { return coadd(f); };
    ops.comul = [](const BPoly& f) { return comul(f); };
    ops.cozero = [](const BPoly& f) { return eval(f, Rat(0)); };
    ops.counit = [](const BPoly& f) { return eval(f, Rat(1)); };
    ops.antipode = [](const BPoly& f) { return antipode(f); };
    ops.colinear = [](const BPoly& f, const Rat& c) { return eval(f, c); };
    return ops;
}

void AxiomReport::add(const std::string& axiom, unsigned n, bool pass, std::string detail) {
    results.push_back({axiom, n, pass, std::move(detail)});
    if (!pass) all_pass = false;
}

namespace {

using Key3 = std::tuple<unsigned, unsigned, unsigned>;
using Tensor3 = std::map<Key3, Rat>;

void add3(Tensor3& t, unsigned a, unsigned b, unsigned c, const Rat& v) {
    if (v == 0) return;
    auto [it, inserted] = t.try_emplace({a, b, c}, v);
    if (!inserted) {
        it->second += v;
        if (it->second == 0) t.erase(it);
    }
}

// Apply a co-operation to the left (slot 0 -> slots 0,1) or right
// (slot 1 -> slots 1,2) tensor factor of a TBPoly.
Tensor3 expand_left(const TBPoly& t, const std::function<TBPoly(const BPoly&)>& co) {
    Tensor3 out;
    for (const auto& [ij, c] : t.terms()) {
        TBPoly inner = co(BPoly::basis(ij.first));
        for (const auto& [st, d] : inner.terms())
            add3(out, st.first, st.second, ij.second, c * d);
    }
    return out;
}

Tensor3 expand_right(const TBPoly& t, const std::function<TBPoly(const BPoly&)>& co) {
    Tensor3 out;
    for (const auto& [ij, c] : t.terms()) {
        TBPoly inner = co(BPoly::basis(ij.second));
        for (const auto& [st, d] : inner.terms())
            add3(out, ij.first, st.first, st.second, c * d);
    }
    return out;
}

bool symmetric(const TBPoly& t) {
    for (const auto& [ij, c] : t.terms())
        if (t.coeff(ij.second, ij.first) != c) return false;
    return true;
}

BPoly slot_apply_scalar_left(const TBPoly& t, const std::function<Rat(const BPoly&)>& e) {
    // (e (x) id) applied to the tensor representation.
    std::map<unsigned, Rat> acc;
    for (const auto& [ij, c] : t.terms()) acc[ij.second] += c * e(BPoly::basis(ij.first));
    std::vector<Rat> coeffs;
    for (const auto& [j, c] : acc) {
        if (coeffs.size() <= j) coeffs.resize(j + 1, Rat(0));
        coeffs[j] = c;
    }
    return BPoly(coeffs);
}

BPoly slot_apply_scalar_right(const TBPoly& t, const std::function<Rat(const BPoly&)>& e) {
    std::map<unsigned, Rat> acc;
    for (const auto& [ij, c] : t.terms()) acc[ij.first] += c * e(BPoly::basis(ij.second));
    std::vector<Rat> coeffs;
    for (const auto& [i, c] : acc) {
        if (coeffs.size() <= i) coeffs.resize(i + 1, Rat(0));
        coeffs[i] = c;
    }
    return BPoly(coeffs);
}

}  // namespace

AxiomReport verify_biring_axioms(unsigned N) {
    return verify_biring_axioms(default_biring_ops(std::max(N, 1u)), N);
}

AxiomReport verify_biring_axioms(const BiringOps& ops, unsigned N) {
    if (N < 1) throw std::invalid_argument("verify_biring_axioms: N >= 1 required");
    AxiomReport rep;
    for (unsigned n = 0; n <= N; ++n) {
        BPoly f = BPoly::basis(n);
        TBPoly ca = ops.coadd(f);
        TBPoly cm = ops.comul(f);

        rep.add("coassoc+", n, expand_left(ca, ops.coadd) == expand_right(ca, ops.coadd));
        rep.add("coassoc*", n, expand_left(cm, ops.comul) == expand_right(cm, ops.comul));
        rep.add("cocomm+", n, symmetric(ca));
        rep.add("cocomm*", n, symmetric(cm));

        BPoly l0 = slot_apply_scalar_left(ca, ops.cozero);
        BPoly r0 = slot_apply_scalar_right(ca, ops.cozero);
        rep.add("cozero", n, l0 == f && r0 == f);

        BPoly l1 = slot_apply_scalar_left(cm, ops.counit);
        BPoly r1 = slot_apply_scalar_right(cm, ops.counit);
        rep.add("counit", n, l1 == f && r1 == f);

        // Fold the antipode against coaddition: sum sigma(f_i1) * f_i2 must
        // collapse to the constant cozero(f).
        BPoly folded;
        for (const auto& [ij, c] : ca.terms())
            folded = folded +
                     (ops.antipode(BPoly::basis(ij.first)) * BPoly::basis(ij.second)).scaled(c);
        rep.add("antipode", n, folded == BPoly::constant(ops.cozero(f)));

        // Co-distributivity: expanding f((X+Y)Z) through comul-then-coadd on
        // the left slot must match coadd-then-comul-per-slot with the Z
        // factors multiplied out.
        Tensor3 lhs = expand_left(cm, ops.coadd);
        Tensor3 rhs;
        TBPoly ca_again = ops.coadd(f);
        for (const auto& [ab, d] : ca_again.terms()) {
            TBPoly left = ops.comul(BPoly::basis(ab.first));
            TBPoly right = ops.comul(BPoly::basis(ab.second));
            for (const auto& [st, c1] : left.terms())
                for (const auto& [uv, c2] : right.terms()) {
                    BPoly prod = BPoly::basis(st.second) * BPoly::basis(uv.second);
                    for (std::size_t w = 0; w < prod.coeffs().size(); ++w)
                        add3(rhs, st.first, uv.first, static_cast<unsigned>(w),
                             d * c1 * c2 * prod.coeffs()[w]);
                }
        }
        rep.add("codistrib", n, lhs == rhs);

        bool beta_ok = true;
        for (long a = -2; a <= 2 && beta_ok; ++a)
            for (long b = -2; b <= 2 && beta_ok; ++b) {
                if (ca.eval(Rat(a), Rat(b)) != eval(f, Rat(a + b))) beta_ok = false;
                if (cm.eval(Rat(a), Rat(b)) != eval(f, Rat(a * b))) beta_ok = false;
                if (ops.colinear(f, Rat(a)) != eval(f, Rat(a))) beta_ok = false;
            }
        rep.add("beta", n, beta_ok);
    }
    return rep;
}

}  // namespace ivpoly
