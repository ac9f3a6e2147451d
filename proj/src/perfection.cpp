#include "ivpoly/perfection.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace ivpoly {

namespace {

Int prime_char(const FiniteRing& a) {
    Int c = a.characteristic();
    if (!is_prime(c))
        throw std::invalid_argument("characteristic of " + a.name() + " is " + c.get_str() +
                                    ", not prime");
    return c;
}

std::vector<FiniteRing::Elem> frobenius_image(const FiniteRing& a, unsigned iterations) {
    Int p = prime_char(a);
    std::set<FiniteRing::Elem> cur;
    for (FiniteRing::Elem x = 0; x < a.size(); ++x) cur.insert(x);
    for (unsigned it = 0; it < iterations; ++it) {
        std::set<FiniteRing::Elem> next;
        for (auto x : cur) next.insert(a.pow(x, p));
        cur = std::move(next);
    }
    return {cur.begin(), cur.end()};
}

}  // namespace

bool is_perfect(const FiniteRing& a) {
    Int p = prime_char(a);
    std::set<FiniteRing::Elem> image;
    for (FiniteRing::Elem x = 0; x < a.size(); ++x) image.insert(a.pow(x, p));
    return image.size() == a.size();
}

RingPtr perfection_r(RingPtr a, unsigned m) {
    if (m < 1) throw std::invalid_argument("perfection_r: m >= 1 required");
    auto elems = frobenius_image(*a, m - 1);
    return make_subring(a, elems, "perfection(" + a->name() + ",m=" + std::to_string(m) + ")");
}

PerfectionReport perfection_with_stabilization(RingPtr a, unsigned m) {
    PerfectionReport rep;
    for (unsigned i = 1; i <= m; ++i) {
        RingPtr r = perfection_r(a, i);
        rep.sizes.push_back(r->size());
        rep.stable_ring = r;
    }
    rep.stabilized = rep.sizes.size() >= 2 &&
                     rep.sizes[rep.sizes.size() - 1] == rep.sizes[rep.sizes.size() - 2];
    return rep;
}

RingPtr perfect_closure_l(unsigned n, const Int& p, unsigned k) {
    if (n < 1) throw std::invalid_argument("perfect_closure_l: n >= 1 required");
    // F_p[x]/(x) is the prime field, already perfect: every stage is itself.
    if (n == 1) return make_zmod(p);
    Int deg = Int(static_cast<long>(n)) * pow_int(p, k);
    if (!deg.fits_ulong_p() || deg.get_ui() > 24)
        throw std::length_error("perfect_closure_l: stage ring too large");
    std::vector<Int> monic(deg.get_ui() + 1, Int(0));
    monic.back() = 1;
    return make_poly_quot(p, monic);
}

AdjunctionReport adjunction_check(RingPtr b, RingPtr a) {
    if (a->size() > 64 || b->size() > 64)
        throw std::length_error("adjunction_check: rings capped at 64 elements");
    Int pa = prime_char(*a);
    Int pb = prime_char(*b);
    if (pa != pb) throw std::invalid_argument("adjunction_check: characteristics differ");
    if (!is_perfect(*b)) throw std::invalid_argument("adjunction_check: B must be perfect");

    // Stabilize the truncated inverse limit (image sizes weakly decrease).
    unsigned m = 1;
    std::vector<FiniteRing::Elem> elems = frobenius_image(*a, 0);
    for (;;) {
        auto next = frobenius_image(*a, m);
        if (next.size() == elems.size()) break;
        elems = std::move(next);
        ++m;
    }
    RingPtr r = make_subring(a, elems, "perfection(" + a->name() + ")");

    AdjunctionReport rep;
    // Homomorphisms into the subring, pushed through the inclusion; elems is
    // sorted, matching the subring's element indexing.
    std::set<std::vector<FiniteRing::Elem>> via_perfection;
    for (const auto& phi : ring_homs(*b, *r)) {
        std::vector<FiniteRing::Elem> in_a(phi.size());
        for (std::size_t x = 0; x < phi.size(); ++x) in_a[x] = elems[phi[x]];
        via_perfection.insert(std::move(in_a));
    }
    std::set<std::vector<FiniteRing::Elem>> direct;
    for (const auto& phi : ring_homs(*b, *a)) direct.insert(phi);

    rep.homs_to_perfection = via_perfection.size();
    rep.homs_to_a = direct.size();
    rep.bijective = via_perfection == direct;
    return rep;
}

}  // namespace ivpoly
