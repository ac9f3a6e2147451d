#include "ivpoly/finite_ring.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <stdexcept>

namespace ivpoly {

FiniteRing::Elem FiniteRing::from_int(const Int& n) const {
    Int c = characteristic();
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), n.get_mpz_t(), c.get_mpz_t());
    Elem acc = zero();
    for (Int i = 0; i < r; ++i) acc = add(acc, one());
    return acc;
}

FiniteRing::Elem FiniteRing::pow(Elem a, const Int& e) const {
    if (e < 0) throw std::invalid_argument("pow: nonnegative exponent required");
    Elem acc = one();
    for (Int i = 0; i < e; ++i) acc = mul(acc, a);
    return acc;
}

Int FiniteRing::characteristic() const {
    Elem x = one();
    Int n = 1;
    while (x != zero()) {
        x = add(x, one());
        ++n;
        if (n > Int(static_cast<long>(size())) + 1)
            throw std::logic_error("characteristic: additive order overflow");
    }
    return n;
}

namespace {

class ZmodRing final : public FiniteRing {
  public:
    explicit ZmodRing(unsigned long n) : n_(n) {
        if (n_ < 1) throw std::invalid_argument("Z/n: n >= 1 required");
    }
    std::size_t size() const override { return n_; }
    Elem add(Elem a, Elem b) const override { return (a + b) % n_; }
    Elem mul(Elem a, Elem b) const override { return (a * b) % n_; }
    Elem neg(Elem a) const override { return (n_ - a) % n_; }
    Elem zero() const override { return 0; }
    Elem one() const override { return n_ == 1 ? 0 : 1; }
    std::string elem_name(Elem a) const override { return std::to_string(a); }
    std::string name() const override { return "Z/" + std::to_string(n_); }

  private:
    unsigned long n_;
};

// F_p[t]/(g), elements encoded base p by their coefficient digits.
class PolyQuotRing final : public FiniteRing {
  public:
    PolyQuotRing(unsigned long p, std::vector<unsigned long> monic)
        : p_(p), g_(std::move(monic)) {
        if (g_.size() < 2) throw std::invalid_argument("poly quotient: degree >= 1 required");
        if (g_.back() != 1) throw std::invalid_argument("poly quotient: monic modulus required");
        deg_ = g_.size() - 1;
        size_ = 1;
        for (std::size_t i = 0; i < deg_; ++i) size_ *= p_;
    }

    std::size_t size() const override { return size_; }
    Elem add(Elem a, Elem b) const override {
        auto da = digits(a), db = digits(b);
        for (std::size_t i = 0; i < deg_; ++i) da[i] = (da[i] + db[i]) % p_;
        return pack(da);
    }
    Elem mul(Elem a, Elem b) const override {
        auto da = digits(a), db = digits(b);
        std::vector<unsigned long> prod(2 * deg_, 0);
        for (std::size_t i = 0; i < deg_; ++i) {
            if (da[i] == 0) continue;
            for (std::size_t j = 0; j < deg_; ++j)
                prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
        }
        // Reduce modulo g: t^deg = -(g_0 + ... + g_{deg-1} t^{deg-1}).
        for (std::size_t k = prod.size(); k-- > deg_;) {
            unsigned long c = prod[k];
            if (c == 0) continue;
            prod[k] = 0;
            for (std::size_t i = 0; i < deg_; ++i)
                prod[k - deg_ + i] = (prod[k - deg_ + i] + c * (p_ - g_[i] % p_)) % p_;
        }
        prod.resize(deg_);
        return pack(prod);
    }
    Elem neg(Elem a) const override {
        auto d = digits(a);
        for (auto& x : d) x = (p_ - x) % p_;
        return pack(d);
    }
    Elem zero() const override { return 0; }
    Elem one() const override { return 1 % size_; }
    std::string elem_name(Elem a) const override {
        auto d = digits(a);
        std::string s;
        for (std::size_t i = deg_; i-- > 0;) {
            if (d[i] == 0) continue;
            if (!s.empty()) s += "+";
            if (i == 0 || d[i] != 1) s += std::to_string(d[i]);
            if (i >= 1) {
                if (d[i] != 1) s += "*";
                s += "t";
                if (i > 1) s += "^" + std::to_string(i);
            }
        }
        return s.empty() ? "0" : s;
    }
    std::string name() const override {
        std::string s = "F" + std::to_string(p_) + "[t]/(";
        bool first = true;
        for (std::size_t i = g_.size(); i-- > 0;) {
            if (g_[i] == 0) continue;
            if (!first) s += "+";
            if (i == 0 || g_[i] != 1) s += std::to_string(g_[i]);
            if (i >= 1) {
                s += "t";
                if (i > 1) s += "^" + std::to_string(i);
            }
            first = false;
        }
        return s + ")";
    }

  private:
    std::vector<unsigned long> digits(Elem a) const {
        std::vector<unsigned long> d(deg_);
        for (std::size_t i = 0; i < deg_; ++i) {
            d[i] = a % p_;
            a /= p_;
        }
        return d;
    }
    Elem pack(const std::vector<unsigned long>& d) const {
        Elem a = 0;
        for (std::size_t i = deg_; i-- > 0;) a = a * p_ + d[i];
        return a;
    }

    unsigned long p_;
    std::vector<unsigned long> g_;
    std::size_t deg_ = 0;
    std::size_t size_ = 0;
};

class DualRing final : public FiniteRing {
  public:
    explicit DualRing(RingPtr a) : a_(std::move(a)) {}
    std::size_t size() const override { return a_->size() * a_->size(); }
    Elem add(Elem x, Elem y) const override {
        auto [x0, x1] = split(x);
        auto [y0, y1] = split(y);
        return join(a_->add(x0, y0), a_->add(x1, y1));
    }
    Elem mul(Elem x, Elem y) const override {
        auto [x0, x1] = split(x);
        auto [y0, y1] = split(y);
        return join(a_->mul(x0, y0), a_->add(a_->mul(x0, y1), a_->mul(x1, y0)));
    }
    Elem neg(Elem x) const override {
        auto [x0, x1] = split(x);
        return join(a_->neg(x0), a_->neg(x1));
    }
    Elem zero() const override { return join(a_->zero(), a_->zero()); }
    Elem one() const override { return join(a_->one(), a_->zero()); }
    std::string elem_name(Elem x) const override {
        auto [x0, x1] = split(x);
        return a_->elem_name(x0) + "+(" + a_->elem_name(x1) + ")e";
    }
    std::string name() const override { return "dual(" + a_->name() + ")"; }

  private:
    std::pair<Elem, Elem> split(Elem x) const { return {x % a_->size(), x / a_->size()}; }
    Elem join(Elem base, Elem eps) const { return base + eps * a_->size(); }
    RingPtr a_;
};

class ProductRing final : public FiniteRing {
  public:
    ProductRing(RingPtr a, RingPtr b) : a_(std::move(a)), b_(std::move(b)) {}
    std::size_t size() const override { return a_->size() * b_->size(); }
    Elem add(Elem x, Elem y) const override {
        return join(a_->add(xa(x), xa(y)), b_->add(xb(x), xb(y)));
    }
    Elem mul(Elem x, Elem y) const override {
        return join(a_->mul(xa(x), xa(y)), b_->mul(xb(x), xb(y)));
    }
    Elem neg(Elem x) const override { return join(a_->neg(xa(x)), b_->neg(xb(x))); }
    Elem zero() const override { return join(a_->zero(), b_->zero()); }
    Elem one() const override { return join(a_->one(), b_->one()); }
    std::string elem_name(Elem x) const override {
        return "(" + a_->elem_name(xa(x)) + "," + b_->elem_name(xb(x)) + ")";
    }
    std::string name() const override { return a_->name() + "x" + b_->name(); }

  private:
    Elem xa(Elem x) const { return x % a_->size(); }
    Elem xb(Elem x) const { return x / a_->size(); }
    Elem join(Elem u, Elem v) const { return u + v * a_->size(); }
    RingPtr a_, b_;
};

class SubRing final : public FiniteRing {
  public:
    SubRing(RingPtr a, std::vector<Elem> elems, std::string label)
        : a_(std::move(a)), elems_(std::move(elems)), label_(std::move(label)) {
        std::sort(elems_.begin(), elems_.end());
        elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
        for (std::size_t i = 0; i < elems_.size(); ++i) index_[elems_[i]] = i;
        zero_ = lookup(a_->zero());
        one_ = lookup(a_->one());
        for (Elem x : elems_)
            for (Elem y : elems_) {
                lookup(a_->add(x, y));
                lookup(a_->mul(x, y));
            }
    }
    std::size_t size() const override { return elems_.size(); }
    Elem add(Elem a, Elem b) const override { return index_.at(a_->add(elems_[a], elems_[b])); }
    Elem mul(Elem a, Elem b) const override { return index_.at(a_->mul(elems_[a], elems_[b])); }
    Elem neg(Elem a) const override { return index_.at(a_->neg(elems_[a])); }
    Elem zero() const override { return zero_; }
    Elem one() const override { return one_; }
    std::string elem_name(Elem a) const override { return a_->elem_name(elems_[a]); }
    std::string name() const override { return label_; }
    Elem parent_elem(Elem a) const { return elems_[a]; }

  private:
    Elem lookup(Elem parent) const {
        auto it = index_.find(parent);
        if (it == index_.end()) throw std::invalid_argument("subring: element set not closed");
        return it->second;
    }
    RingPtr a_;
    std::vector<Elem> elems_;
    std::map<Elem, Elem> index_;
    std::string label_;
    Elem zero_ = 0, one_ = 0;
};

class QuotientRing final : public FiniteRing {
  public:
    QuotientRing(RingPtr a, const std::vector<Elem>& ideal, std::string label)
        : a_(std::move(a)), label_(std::move(label)) {
        std::set<Elem> iset(ideal.begin(), ideal.end());
        if (!iset.count(a_->zero())) iset.insert(a_->zero());
        // Classes x + I, canonical representative = least index in the class.
        std::vector<Elem> rep(a_->size());
        for (Elem x = 0; x < a_->size(); ++x) {
            Elem best = x;
            for (Elem i : iset) best = std::min(best, a_->add(x, i));
            rep[x] = best;
        }
        rep_ = std::move(rep);
        for (Elem x = 0; x < a_->size(); ++x)
            if (rep_[x] == x) {
                index_[x] = reps_.size();
                reps_.push_back(x);
            }
    }
    std::size_t size() const override { return reps_.size(); }
    Elem add(Elem a, Elem b) const override {
        return index_.at(rep_[a_->add(reps_[a], reps_[b])]);
    }
    Elem mul(Elem a, Elem b) const override {
        return index_.at(rep_[a_->mul(reps_[a], reps_[b])]);
    }
    Elem neg(Elem a) const override { return index_.at(rep_[a_->neg(reps_[a])]); }
    Elem zero() const override { return index_.at(rep_[a_->zero()]); }
    Elem one() const override { return index_.at(rep_[a_->one()]); }
    std::string elem_name(Elem a) const override { return a_->elem_name(reps_[a]) + "~"; }
    std::string name() const override { return label_; }

  private:
    RingPtr a_;
    std::vector<Elem> rep_;
    std::vector<Elem> reps_;
    std::map<Elem, Elem> index_;
    std::string label_;
};

std::vector<unsigned long> to_ulongs(const std::vector<Int>& v, unsigned long p) {
    std::vector<unsigned long> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        Int r;
        Int pp(static_cast<long>(p));
        mpz_fdiv_r(r.get_mpz_t(), v[i].get_mpz_t(), pp.get_mpz_t());
        out[i] = r.get_ui();
    }
    return out;
}

// Lexicographically first monic irreducible of degree k over F_p; trial
// division by all lower-degree monics.
std::vector<unsigned long> first_irreducible(unsigned long p, unsigned k) {
    auto poly_mod = [p](std::vector<unsigned long> a, const std::vector<unsigned long>& b) {
        // remainder of a by monic b
        while (a.size() >= b.size()) {
            unsigned long c = a.back();
            if (c != 0) {
                std::size_t off = a.size() - b.size();
                for (std::size_t i = 0; i < b.size(); ++i)
                    a[off + i] = (a[off + i] + c * (p - b[i] % p)) % p;
            }
            a.pop_back();
        }
        return a;
    };
    auto is_zero = [](const std::vector<unsigned long>& a) {
        return std::all_of(a.begin(), a.end(), [](unsigned long x) { return x == 0; });
    };
    std::vector<std::vector<unsigned long>> lower;  // monic, degrees 1..k/2
    for (unsigned d = 1; d <= k / 2; ++d) {
        unsigned long count = 1;
        for (unsigned i = 0; i < d; ++i) count *= p;
        for (unsigned long c = 0; c < count; ++c) {
            std::vector<unsigned long> g(d + 1, 0);
            unsigned long x = c;
            for (unsigned i = 0; i < d; ++i) {
                g[i] = x % p;
                x /= p;
            }
            g[d] = 1;
            lower.push_back(std::move(g));
        }
    }
    unsigned long count = 1;
    for (unsigned i = 0; i < k; ++i) count *= p;
    for (unsigned long c = 0; c < count; ++c) {
        std::vector<unsigned long> g(k + 1, 0);
        unsigned long x = c;
        for (unsigned i = 0; i < k; ++i) {
            g[i] = x % p;
            x /= p;
        }
        g[k] = 1;
        if (g[0] == 0) continue;  // divisible by t
        bool ok = true;
        for (const auto& d : lower)
            if (is_zero(poly_mod(g, d))) {
                ok = false;
                break;
            }
        if (ok) return g;
    }
    throw std::logic_error("first_irreducible: none found");
}

}  // namespace

RingPtr make_zmod(const Int& n) {
    if (n < 1 || !n.fits_ulong_p()) throw std::invalid_argument("Z/n: bad modulus");
    return std::make_shared<ZmodRing>(n.get_ui());
}

RingPtr make_poly_quot(const Int& p, const std::vector<Int>& monic) {
    if (!is_prime(p) || !p.fits_ulong_p())
        throw std::invalid_argument("poly quotient: small prime required");
    return std::make_shared<PolyQuotRing>(p.get_ui(), to_ulongs(monic, p.get_ui()));
}

RingPtr make_gf(const Int& p, unsigned k) {
    if (k == 0) throw std::invalid_argument("gf: k >= 1 required");
    if (k == 1) return make_zmod(p);
    auto g = first_irreducible(p.get_ui(), k);
    std::vector<Int> gi(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) gi[i] = static_cast<long>(g[i]);
    return make_poly_quot(p, gi);
}

RingPtr make_dual(RingPtr a) { return std::make_shared<DualRing>(std::move(a)); }

RingPtr make_product(RingPtr a, RingPtr b) {
    return std::make_shared<ProductRing>(std::move(a), std::move(b));
}

RingPtr make_subring(RingPtr a, std::vector<FiniteRing::Elem> elems, const std::string& label) {
    return std::make_shared<SubRing>(std::move(a), std::move(elems), label);
}

RingPtr make_quotient(RingPtr a, const std::vector<FiniteRing::Elem>& ideal,
                      const std::string& label) {
    return std::make_shared<QuotientRing>(std::move(a), ideal, label);
}

std::vector<FiniteRing::Elem> scaled_ideal(const FiniteRing& a, const Int& p) {
    std::set<FiniteRing::Elem> out;
    FiniteRing::Elem pe = a.from_int(p);
    for (FiniteRing::Elem x = 0; x < a.size(); ++x) out.insert(a.mul(pe, x));
    return {out.begin(), out.end()};
}

RingPtr quotient_mod_p(RingPtr a, const Int& p) {
    auto ideal = scaled_ideal(*a, p);
    return make_quotient(a, ideal, a->name() + "/" + p.get_str() + "A");
}

namespace {

struct SpecCursor {
    const std::string& s;
    std::size_t i = 0;
    char peek() const { return i < s.size() ? s[i] : '\0'; }
    bool eat(char c) {
        if (peek() == c) {
            ++i;
            return true;
        }
        return false;
    }
    bool eat(const std::string& w) {
        if (s.compare(i, w.size(), w) == 0) {
            i += w.size();
            return true;
        }
        return false;
    }
    unsigned long nat() {
        if (!std::isdigit(static_cast<unsigned char>(peek())))
            throw std::invalid_argument("ring spec: expected number in " + s);
        unsigned long v = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) v = v * 10 + (s[i++] - '0');
        return v;
    }
};

// t-polynomial like "t^2+t+1" or "2*t+1"; returns coefficient list, constant first.
std::vector<Int> parse_tpoly(SpecCursor& c) {
    std::vector<Int> coeffs;
    auto bump = [&coeffs](std::size_t deg, long v) {
        if (coeffs.size() <= deg) coeffs.resize(deg + 1, Int(0));
        coeffs[deg] += v;
    };
    int sign = 1;
    if (c.eat('-')) sign = -1;
    for (;;) {
        long coef = 1;
        if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
            coef = static_cast<long>(c.nat());
            c.eat('*');
        }
        std::size_t deg = 0;
        if (c.eat('t')) {
            deg = 1;
            if (c.eat('^')) deg = c.nat();
        }
        bump(deg, sign * coef);
        if (c.eat('+'))
            sign = 1;
        else if (c.eat('-'))
            sign = -1;
        else
            break;
    }
    return coeffs;
}

RingPtr parse_atom(SpecCursor& c);

RingPtr parse_product(SpecCursor& c) {
    RingPtr r = parse_atom(c);
    while (c.eat('x')) r = make_product(r, parse_atom(c));
    return r;
}

RingPtr parse_poly_quot_spec(SpecCursor& c, unsigned long p) {
    if (!c.eat("[t]/(")) throw std::invalid_argument("ring spec: expected [t]/(...)");
    auto g = parse_tpoly(c);
    if (!c.eat(')')) throw std::invalid_argument("ring spec: expected )");
    return make_poly_quot(Int(static_cast<long>(p)), g);
}

RingPtr parse_atom(SpecCursor& c) {
    if (c.eat("dual(")) {
        RingPtr inner = parse_product(c);
        if (!c.eat(')')) throw std::invalid_argument("ring spec: expected )");
        return make_dual(inner);
    }
    if (c.eat("Z/")) return make_zmod(Int(static_cast<long>(c.nat())));
    if (c.eat('F')) {
        unsigned long q = c.nat();
        if (c.peek() == '[') return parse_poly_quot_spec(c, q);
        if (c.eat('=')) {
            if (!c.eat('F')) throw std::invalid_argument("ring spec: expected F after =");
            unsigned long p = c.nat();
            RingPtr r = parse_poly_quot_spec(c, p);
            if (r->size() != q) throw std::invalid_argument("ring spec: size mismatch after =");
            return r;
        }
        // bare Fq with q = p^k
        Int qq(static_cast<long>(q));
        auto ps = prime_factors(qq);
        if (ps.size() != 1) throw std::invalid_argument("ring spec: F requires a prime power");
        unsigned k = 0;
        Int t = qq;
        while (t > 1) {
            t /= ps[0];
            ++k;
        }
        return make_gf(ps[0], k);
    }
    throw std::invalid_argument("ring spec: cannot parse");
}

}  // namespace

RingPtr parse_ring_spec(const std::string& spec) {
    std::string clean;
    for (char ch : spec)
        if (!std::isspace(static_cast<unsigned char>(ch))) clean += ch;
    SpecCursor c{clean};
    RingPtr r = parse_product(c);
    if (c.i != clean.size()) throw std::invalid_argument("ring spec: trailing input in " + spec);
    return r;
}

std::vector<FiniteRing::Elem> ring_generators(const FiniteRing& a) {
    auto closure = [&a](std::vector<FiniteRing::Elem> seed) {
        std::set<FiniteRing::Elem> s(seed.begin(), seed.end());
        s.insert(a.zero());
        s.insert(a.one());
        bool grew = true;
        while (grew) {
            grew = false;
            std::vector<FiniteRing::Elem> cur(s.begin(), s.end());
            for (auto x : cur)
                for (auto y : cur) {
                    for (auto z : {a.add(x, y), a.mul(x, y)})
                        if (s.insert(z).second) grew = true;
                }
        }
        return s;
    };
    std::vector<FiniteRing::Elem> gens;
    auto cl = closure(gens);
    while (cl.size() < a.size()) {
        FiniteRing::Elem next = 0;
        while (cl.count(next)) ++next;
        gens.push_back(next);
        cl = closure(gens);
    }
    return gens;
}

std::vector<std::vector<FiniteRing::Elem>> ring_homs(const FiniteRing& a, const FiniteRing& b) {
    auto gens = ring_generators(a);
    std::vector<std::vector<FiniteRing::Elem>> out;
    std::vector<FiniteRing::Elem> image(gens.size(), 0);
    constexpr FiniteRing::Elem kUnset = static_cast<FiniteRing::Elem>(-1);

    auto attempt = [&]() {
        std::vector<FiniteRing::Elem> phi(a.size(), kUnset);
        std::vector<FiniteRing::Elem> known;
        auto assign = [&](FiniteRing::Elem x, FiniteRing::Elem v) {
            if (phi[x] != kUnset) return phi[x] == v;
            phi[x] = v;
            known.push_back(x);
            return true;
        };
        if (!assign(a.zero(), b.zero())) return;
        if (!assign(a.one(), b.one())) return;
        for (std::size_t g = 0; g < gens.size(); ++g)
            if (!assign(gens[g], image[g])) return;
        // Combine every pair of known elements until closed; since the
        // generators generate, this reaches all of a and checks every pair.
        for (std::size_t i = 0; i < known.size(); ++i) {
            for (std::size_t j = 0; j <= i; ++j) {
                FiniteRing::Elem x = known[i], y = known[j];
                if (!assign(a.add(x, y), b.add(phi[x], phi[y]))) return;
                if (!assign(a.mul(x, y), b.mul(phi[x], phi[y]))) return;
            }
        }
        for (FiniteRing::Elem x = 0; x < a.size(); ++x)
            if (phi[x] == kUnset) throw std::logic_error("ring_homs: generators do not generate");
        out.push_back(std::move(phi));
    };

    // Odometer over candidate generator images.
    std::size_t n = gens.size();
    if (n == 0) {
        attempt();
        return out;
    }
    std::vector<FiniteRing::Elem> idx(n, 0);
    for (;;) {
        for (std::size_t g = 0; g < n; ++g) image[g] = idx[g];
        attempt();
        std::size_t k = 0;
        while (k < n && ++idx[k] == b.size()) {
            idx[k] = 0;
            ++k;
        }
        if (k == n) break;
    }
    return out;
}

bool frobenius_is_hom(const FiniteRing& a, const Int& p) {
    for (FiniteRing::Elem x = 0; x < a.size(); ++x)
        for (FiniteRing::Elem y = 0; y < a.size(); ++y) {
            if (a.pow(a.add(x, y), p) != a.add(a.pow(x, p), a.pow(y, p))) return false;
            if (a.pow(a.mul(x, y), p) != a.mul(a.pow(x, p), a.pow(y, p))) return false;
        }
    return true;
}

}  // namespace ivpoly
