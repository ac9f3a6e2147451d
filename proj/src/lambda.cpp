#include "ivpoly/lambda.hpp"

#include <map>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>

#include <json.hpp>

#include "ivpoly/witt.hpp"

namespace ivpoly {

LambdaSeries::LambdaSeries(RingPtr ring, unsigned trunc) : ring_(std::move(ring)), trunc_(trunc) {
    if (ring_ == nullptr)
        hz_.assign(trunc_, Int(0));
    else
        hf_.assign(trunc_, ring_->zero());
}

LambdaSeries LambdaSeries::over_z(unsigned trunc) { return LambdaSeries(nullptr, trunc); }

LambdaSeries LambdaSeries::from_ints(RingPtr ring, unsigned trunc, const std::vector<Int>& h) {
    if (h.size() != trunc) throw std::invalid_argument("lambda series: need exactly N coefficients");
    LambdaSeries f(std::move(ring), trunc);
    for (unsigned n = 1; n <= trunc; ++n) {
        if (f.over_integers())
            f.set_coeff_z(n, h[n - 1]);
        else
            f.set_coeff_f(n, f.ring_->from_int(h[n - 1]));
    }
    return f;
}

LambdaSeries LambdaSeries::rank_one(RingPtr ring, unsigned trunc, const Int& a) {
    LambdaSeries f(std::move(ring), trunc);
    if (f.over_integers()) {
        Int acc = 1;
        for (unsigned n = 1; n <= trunc; ++n) {
            acc *= a;
            f.set_coeff_z(n, acc);
        }
    } else {
        FiniteRing::Elem av = f.ring_->from_int(a);
        FiniteRing::Elem acc = f.ring_->one();
        for (unsigned n = 1; n <= trunc; ++n) {
            acc = f.ring_->mul(acc, av);
            f.set_coeff_f(n, acc);
        }
    }
    return f;
}

Int LambdaSeries::coeff_z(unsigned n) const {
    if (!over_integers()) throw std::logic_error("coeff_z on finite-ring series");
    if (n == 0) return 1;
    return hz_.at(n - 1);
}

FiniteRing::Elem LambdaSeries::coeff_f(unsigned n) const {
    if (over_integers()) throw std::logic_error("coeff_f on integer series");
    if (n == 0) return ring_->one();
    return hf_.at(n - 1);
}

void LambdaSeries::set_coeff_z(unsigned n, const Int& v) {
    if (n < 1 || n > trunc_) throw std::out_of_range("lambda series index");
    hz_.at(n - 1) = v;
}

void LambdaSeries::set_coeff_f(unsigned n, FiniteRing::Elem v) {
    if (n < 1 || n > trunc_) throw std::out_of_range("lambda series index");
    hf_.at(n - 1) = v;
}

std::string LambdaSeries::coeff_str(unsigned n) const {
    return over_integers() ? coeff_z(n).get_str() : ring_->elem_name(coeff_f(n));
}

LambdaSeries LambdaSeries::truncated(unsigned n) const {
    if (n > trunc_) throw std::invalid_argument("truncated: cannot extend");
    LambdaSeries f(ring_, n);
    for (unsigned i = 1; i <= n; ++i) {
        if (over_integers())
            f.set_coeff_z(i, coeff_z(i));
        else
            f.set_coeff_f(i, coeff_f(i));
    }
    return f;
}

bool LambdaSeries::operator==(const LambdaSeries& o) const {
    if (trunc_ != o.trunc_) return false;
    if (over_integers() != o.over_integers()) return false;
    if (!over_integers() && ring_->name() != o.ring_->name()) return false;
    return over_integers() ? hz_ == o.hz_ : hf_ == o.hf_;
}

LambdaSeries series_mul(const LambdaSeries& a, const LambdaSeries& b) {
    if (a.over_integers() != b.over_integers())
        throw std::invalid_argument("series_mul: mismatched coefficient rings");
    unsigned n = std::min(a.trunc(), b.trunc());
    LambdaSeries out(a.ring_, n);
    for (unsigned k = 1; k <= n; ++k) {
        if (a.over_integers()) {
            Int acc = 0;
            for (unsigned i = 0; i <= k; ++i) acc += a.coeff_z(i) * b.coeff_z(k - i);
            out.set_coeff_z(k, acc);
        } else {
            FiniteRing::Elem acc = a.ring_->zero();
            for (unsigned i = 0; i <= k; ++i)
                acc = a.ring_->add(acc, a.ring_->mul(a.coeff_f(i), b.coeff_f(k - i)));
            out.set_coeff_f(k, acc);
        }
    }
    return out;
}

std::string LambdaSeries::to_json() const {
    nlohmann::json h = nlohmann::json::array();
    for (unsigned n = 1; n <= trunc_; ++n)
        h.push_back(over_integers() ? coeff_z(n).get_str() : Int(static_cast<long>(coeff_f(n))).get_str());
    return nlohmann::json{
        {"ring", over_integers() ? "Z" : ring_->name()}, {"trunc", trunc_}, {"h", h}}
        .dump();
}

LambdaSeries LambdaSeries::from_json(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    std::string rid = j.at("ring").get<std::string>();
    unsigned trunc = j.at("trunc").get<unsigned>();
    RingPtr ring = rid == "Z" ? nullptr : parse_ring_spec(rid);
    LambdaSeries f(ring, trunc);
    const auto& h = j.at("h");
    if (h.size() != trunc) throw std::invalid_argument("series json: h length != trunc");
    for (unsigned n = 1; n <= trunc; ++n) {
        Int v(h[n - 1].get<std::string>());
        if (f.over_integers())
            f.set_coeff_z(n, v);
        else
            f.set_coeff_f(n, static_cast<FiniteRing::Elem>(v.get_ui()) % ring->size());
    }
    return f;
}

namespace {

std::vector<std::string> h_vars(unsigned width) {
    std::vector<std::string> v(width);
    for (unsigned i = 0; i < width; ++i) v[i] = "h" + std::to_string(i + 1);
    return v;
}

MPoly h_var(unsigned i, const std::vector<std::string>& vars) {
    return MPoly::var("h" + std::to_string(i), vars);
}

MPoly exact_div(const MPoly& f, long n) {
    MPoly out = f.scaled(Rat(1, n));
    for (const auto& [e, c] : out.terms())
        if (!is_integer(c))
            throw std::logic_error("adams table: non-integral division, identities violated");
    return out;
}

AdamsTable build_adams_table(unsigned k, unsigned trunc) {
    AdamsTable t;
    t.k = k;
    t.trunc = trunc;
    if (trunc == 0) return t;
    unsigned width = k * trunc;
    auto vars = h_vars(width);
    // Power sums from the h's: p_n = n h_n - sum_{i<n} p_i h_{n-i}.
    std::vector<MPoly> p(width + 1, MPoly(vars));
    for (unsigned n = 1; n <= width; ++n) {
        MPoly acc = h_var(n, vars).scaled(Rat(static_cast<long>(n)));
        for (unsigned i = 1; i < n; ++i) acc -= p[i] * h_var(n - i, vars);
        p[n] = acc;
    }
    // The image has power sums p'_n = p_{nk}; convert back to h's.
    std::vector<MPoly> hp(trunc + 1, MPoly(vars));
    hp[0] = MPoly::constant(Rat(1), vars);
    for (unsigned n = 1; n <= trunc; ++n) {
        MPoly acc(vars);
        for (unsigned i = 1; i <= n; ++i) acc += p[i * k] * hp[n - i];
        hp[n] = exact_div(acc, static_cast<long>(n));
        t.polys.push_back(hp[n]);
    }
    return t;
}

std::map<std::pair<unsigned, unsigned>, std::shared_ptr<const AdamsTable>> g_adams_cache;
std::shared_mutex g_adams_mutex;

}  // namespace

std::shared_ptr<const AdamsTable> adams_universal(unsigned k, unsigned trunc) {
    if (k < 1) throw std::invalid_argument("adams_universal: k >= 1 required");
    auto key = std::make_pair(k, trunc);
    {
        std::shared_lock lock(g_adams_mutex);
        auto it = g_adams_cache.find(key);
        if (it != g_adams_cache.end()) return it->second;
    }
    auto table = std::make_shared<const AdamsTable>(build_adams_table(k, trunc));
    std::unique_lock lock(g_adams_mutex);
    return g_adams_cache.try_emplace(key, table).first->second;
}

namespace {

FiniteRing::Elem eval_in_ring(const MPoly& poly, const FiniteRing& ring,
                              const std::vector<FiniteRing::Elem>& point) {
    FiniteRing::Elem acc = ring.zero();
    for (const auto& [e, c] : poly.terms()) {
        FiniteRing::Elem term = ring.from_int(to_int(c));
        for (std::size_t i = 0; i < e.size(); ++i)
            for (unsigned j = 0; j < e[i]; ++j) term = ring.mul(term, point[i]);
        acc = ring.add(acc, term);
    }
    return acc;
}

}  // namespace

LambdaSeries adams_apply(unsigned k, const LambdaSeries& f) {
    if (k < 1) throw std::invalid_argument("adams_apply: k >= 1 required");
    if (k == 1) return f;
    unsigned out_trunc = f.trunc() / k;
    auto table = adams_universal(k, out_trunc);
    LambdaSeries out(f.ring(), out_trunc);
    unsigned width = out_trunc * k;
    if (f.over_integers()) {
        std::vector<Rat> point(width);
        for (unsigned i = 1; i <= width; ++i) point[i - 1] = Rat(f.coeff_z(i));
        for (unsigned n = 1; n <= out_trunc; ++n)
            out.set_coeff_z(n, to_int(table->polys[n - 1].eval<Rat>(point)));
    } else {
        std::vector<FiniteRing::Elem> point(width);
        for (unsigned i = 1; i <= width; ++i) point[i - 1] = f.coeff_f(i);
        for (unsigned n = 1; n <= out_trunc; ++n)
            out.set_coeff_f(n, eval_in_ring(table->polys[n - 1], *f.ring(), point));
    }
    return out;
}

LambdaSeries binomial_series(const PadicApprox& alpha, unsigned trunc) {
    if (Int(static_cast<long>(trunc)) >= alpha.modulus())
        throw PrecisionError("binomial_series: need trunc < p^m to determine coefficients");
    RingPtr fp = make_zmod(alpha.p());
    LambdaSeries f(fp, trunc);
    for (unsigned n = 1; n <= trunc; ++n) {
        Rat c = binomial_rat(Rat(alpha.residue() + static_cast<long>(n) - 1), n);
        f.set_coeff_f(n, fp->from_int(to_int(c)));
    }
    return f;
}

bool bin_fixed_check(const LambdaSeries& f, unsigned kmax) {
    for (unsigned k = 2; k <= kmax; ++k) {
        LambdaSeries img = adams_apply(k, f);
        if (!(img == f.truncated(img.trunc()))) return false;
    }
    return true;
}

}  // namespace ivpoly
