#include "ivpoly/witt.hpp"

#include <map>
#include <random>
#include <tuple>

#include "ivpoly/biring.hpp"

namespace ivpoly {

PadicApprox::PadicApprox(Int p, unsigned m, Int residue) : p_(std::move(p)), m_(m) {
    if (!is_prime(p_)) throw std::invalid_argument("padic: prime required");
    if (m_ < 1) throw std::invalid_argument("padic: precision >= 1 required");
    Int mod = modulus();
    mpz_fdiv_r(r_.get_mpz_t(), residue.get_mpz_t(), mod.get_mpz_t());
}

PadicApprox PadicApprox::lifted_by(const Int& t) const {
    return PadicApprox(p_, m_, r_ + t * modulus());
}

namespace {

Int mod_p(const Rat& v, const Int& p) {
    Int r;
    Int num = to_int(v);
    mpz_fdiv_r(r.get_mpz_t(), num.get_mpz_t(), p.get_mpz_t());
    return r;
}

void require_precision(const PadicApprox& alpha, long degree) {
    if (degree >= 0 && Int(degree) >= alpha.modulus())
        throw PrecisionError("p-adic precision too small: need deg f < p^m (deg " +
                             std::to_string(degree) + ", p^m = " + alpha.modulus().get_str() +
                             "); raise m");
}

}  // namespace

Int eval_hom(const PadicApprox& alpha, const BPoly& f) {
    if (!is_int_valued(f))
        throw std::invalid_argument("eval_hom: integer-valued polynomial required");
    require_precision(alpha, f.degree());
    return mod_p(eval(f, Rat(alpha.residue())), alpha.p());
}

WittPointsReport witt_points(const Int& p, unsigned m) {
    WittPointsReport rep;
    rep.p = p;
    rep.m = m;
    Int count = pow_int(p, m);
    if (!count.fits_ulong_p()) throw std::invalid_argument("witt_points: p^m too large");
    unsigned long n = count.get_ui();
    rep.vectors.reserve(n);
    for (unsigned long a = 0; a < n; ++a) {
        PadicApprox alpha(p, m, Int(static_cast<long>(a)));
        std::vector<Int> vec(n);
        for (unsigned long i = 0; i < n; ++i)
            vec[i] = eval_hom(alpha, BPoly::basis(i));
        rep.vectors.push_back(std::move(vec));
    }
    rep.injective = true;
    for (std::size_t i = 0; i < rep.vectors.size() && rep.injective; ++i)
        for (std::size_t j = i + 1; j < rep.vectors.size(); ++j)
            if (rep.vectors[i] == rep.vectors[j]) {
                rep.injective = false;
                break;
            }
    return rep;
}

std::pair<Int, Int> witt_ring_ops(const PadicApprox& alpha, const PadicApprox& beta,
                                  const BPoly& f) {
    if (alpha.p() != beta.p() || alpha.m() != beta.m())
        throw std::invalid_argument("witt_ring_ops: mismatched parameters");
    if (!is_int_valued(f))
        throw std::invalid_argument("witt_ring_ops: integer-valued polynomial required");
    require_precision(alpha, f.degree());
    const Int& p = alpha.p();
    Rat a(alpha.residue()), b(beta.residue());
    Rat sum = 0, prod = 0;
    TBPoly ca = coadd(f), cm = comul(f);
    for (const auto& [ij, c] : ca.terms())
        sum += c * binomial_rat(a, ij.first) * binomial_rat(b, ij.second);
    for (const auto& [ij, c] : cm.terms())
        prod += c * binomial_rat(a, ij.first) * binomial_rat(b, ij.second);
    return {mod_p(sum, p), mod_p(prod, p)};
}

CheckReport witt_transport_check(const Int& p, unsigned m, unsigned long sample_cases,
                                 unsigned long seed, bool check_add, bool check_mul) {
    CheckReport rep;
    rep.property = "p-adic points and transported ring structure (p=" + p.get_str() +
                   ", m=" + std::to_string(m) + ")";
    WittPointsReport pts = witt_points(p, m);
    rep.record(pts.injective, "point vectors collide");

    Int count_z = pow_int(p, m);
    if (!count_z.fits_ulong_p())
        throw std::length_error("witt_transport_check: p^m too large");
    unsigned long count = count_z.get_ui();
    std::vector<std::tuple<unsigned long, unsigned long, unsigned long>> cases;
    if (sample_cases == 0) {
        for (unsigned long a = 0; a < count; ++a)
            for (unsigned long b = 0; b < count; ++b)
                for (unsigned long n = 0; n < count; ++n) cases.emplace_back(a, b, n);
    } else {
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<unsigned long> dist(0, count - 1);
        for (unsigned long i = 0; i < sample_cases; ++i)
            cases.emplace_back(dist(rng), dist(rng), dist(rng));
    }

    // One tensor expansion and one binomial-value row per index, shared.
    std::map<unsigned long, std::pair<TBPoly, TBPoly>> expansions;
    std::vector<std::vector<Rat>> binom_rows(count, std::vector<Rat>(count));
    for (unsigned long a = 0; a < count; ++a)
        for (unsigned long n = 0; n < count; ++n)
            binom_rows[a][n] = binomial_rat(Rat(static_cast<long>(a)), n);

    for (const auto& [a, b, n] : cases) {
        auto it = expansions.find(n);
        if (it == expansions.end()) {
            BPoly f = BPoly::basis(n);
            it = expansions.emplace(n, std::make_pair(coadd(f), comul(f))).first;
        }
        if (check_add) {
            Rat sum = 0;
            for (const auto& [ij, c] : it->second.first.terms())
                sum += c * binom_rows[a][ij.first] * binom_rows[b][ij.second];
            Int direct = mod_p(binomial_rat(Rat(static_cast<long>(a + b)), n), p);
            rep.record(mod_p(sum, p) == direct,
                       "sum transport fails at alpha=" + std::to_string(a) +
                           ", beta=" + std::to_string(b) + ", n=" + std::to_string(n));
        }
        if (check_mul) {
            Rat prod = 0;
            for (const auto& [ij, c] : it->second.second.terms())
                prod += c * binom_rows[a][ij.first] * binom_rows[b][ij.second];
            Int direct = mod_p(binomial_rat(Rat(static_cast<long>(a * b)), n), p);
            rep.record(mod_p(prod, p) == direct,
                       "product transport fails at alpha=" + std::to_string(a) +
                           ", beta=" + std::to_string(b) + ", n=" + std::to_string(n));
        }
    }
    return rep;
}

}  // namespace ivpoly
