#ifndef IVPOLY_RATIONAL_HPP
#define IVPOLY_RATIONAL_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace ivpoly {

// Exact arithmetic throughout: Int is an arbitrary-precision integer, Rat a
// rational kept in lowest terms with positive denominator (gmp canonical form).
using Int = mpz_class;
using Rat = mpq_class;

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

inline Int to_int(const Rat& q) {
    if (!is_integer(q)) throw std::domain_error("to_int: not an integer: " + q.get_str());
    return q.get_num();
}

inline Int factorial(unsigned long n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

inline Int binomial_int(const Int& n, unsigned long k) {
    Int r;
    mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), k);
    return r;
}

// C(a, n) = a(a-1)...(a-n+1)/n! for rational a.
inline Rat binomial_rat(const Rat& a, unsigned long n) {
    Rat r = 1;
    for (unsigned long i = 0; i < n; ++i) r *= (a - Rat(static_cast<long>(i)));
    r /= Rat(factorial(n));
    return r;
}

// p-adic valuation of a nonzero integer.
inline long vp_int(Int x, const Int& p) {
    if (x == 0) throw std::domain_error("vp: valuation of zero");
    long v = 0;
    Int q, r;
    for (;;) {
        mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), x.get_mpz_t(), p.get_mpz_t());
        if (r != 0) return v;
        x = q;
        ++v;
    }
}

inline long vp_rat(const Rat& q, const Int& p) {
    if (q == 0) throw std::domain_error("vp: valuation of zero");
    return vp_int(q.get_num(), p) - vp_int(q.get_den(), p);
}

// True when q has no prime factor of its denominator outside those of m
// (i.e. q lies in Z[1/m]; m = 1 means Z).
inline bool in_z_inv_m(const Rat& q, const Int& m) {
    if (m == 0) throw std::domain_error("in_z_inv_m: m must be nonzero");
    Int d = q.get_den();
    if (d == 1) return true;
    Int g, mm = abs(m);
    for (;;) {
        mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), mm.get_mpz_t());
        if (g == 1) return d == 1;
        while (mpz_divisible_p(d.get_mpz_t(), g.get_mpz_t())) d /= g;
        if (d == 1) return true;
    }
}

// q is p-integral: v_p(q) >= 0.
inline bool p_integral(const Rat& q, const Int& p) {
    return q == 0 || vp_int(q.get_den(), p) == 0;
}

inline Rat parse_rat(const std::string& s) {
    Rat q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
    q.canonicalize();
    return q;
}

inline std::string rat_str(const Rat& q) { return q.get_str(); }

inline Int lcm_int(const Int& a, const Int& b) {
    Int r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Int gcd_int(const Int& a, const Int& b) {
    Int r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline bool is_prime(const Int& n) { return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0; }

inline Int pow_int(const Int& b, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}

inline std::vector<Int> prime_factors(Int n) {
    std::vector<Int> ps;
    n = abs(n);
    for (Int p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            ps.push_back(p);
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) ps.push_back(n);
    return ps;
}

}  // namespace ivpoly

#endif
