#include "ivpoly/reflect.hpp"

#include <set>
#include <stdexcept>

#include "ivpoly/poly_text.hpp"

namespace ivpoly {

TfTarget TfTarget::z_inv(const Int& m) {
    if (m < 1) throw std::invalid_argument("target Z[1/m]: m >= 1 required");
    TfTarget t;
    t.m = m;
    return t;
}

TfTarget TfTarget::localized(const Int& p) {
    if (!is_prime(p)) throw std::invalid_argument("target Z_(p): prime required");
    TfTarget t;
    t.kind = Kind::Localized;
    t.p = p;
    return t;
}

bool TfTarget::contains(const Rat& q) const {
    return kind == Kind::ZInvM ? in_z_inv_m(q, m) : p_integral(q, p);
}

std::string TfTarget::name() const {
    if (kind == Kind::Localized) return "Z_(" + p.get_str() + ")";
    return m == 1 ? "Z" : "Z[1/" + m.get_str() + "]";
}

ForcedHom forced_hom(const Rat& a, const RingFamily& family, unsigned N, const TfTarget& target) {
    ForcedHom out;
    auto basis = graded_basis(family, N).basis_polys();
    for (std::size_t n = 0; n < basis.size(); ++n) {
        Rat img = eval(basis[n], a);
        if (!target.contains(img)) {
            out.obstruction = "basis element " + to_text(basis[n]) + " at " + a.get_str() +
                              " forces " + img.get_str() + ", not in " + target.name();
            return out;
        }
        out.images.push_back(img);
    }
    out.ok = true;
    return out;
}

std::vector<ForcedHom> forced_hom(const std::vector<Rat>& a, const RingFamily& family, unsigned N,
                                  const std::vector<TfTarget>& targets) {
    if (a.size() != targets.size())
        throw std::invalid_argument("forced_hom: component count mismatch");
    std::vector<ForcedHom> out;
    for (std::size_t i = 0; i < a.size(); ++i) out.push_back(forced_hom(a[i], family, N, targets[i]));
    return out;
}

void forced_hom(const FiniteRing& target, FiniteRing::Elem, const RingFamily&, unsigned) {
    throw std::invalid_argument("forced_hom: target " + target.name() +
                                " has torsion; use quasi_binomial_check to classify it");
}

bool quasi_binomial_at(const FiniteRing& a, const Int& p) {
    std::set<FiniteRing::Elem> ideal;
    for (auto e : scaled_ideal(a, p)) ideal.insert(e);
    for (FiniteRing::Elem x = 0; x < a.size(); ++x)
        if (!ideal.count(a.sub(a.pow(x, p), x))) return false;
    return true;
}

bool quasi_binomial_check(const FiniteRing& a) {
    for (const Int& p : prime_factors(a.characteristic()))
        if (!quasi_binomial_at(a, p)) return false;
    return true;
}

bool residue_embed_check(RingPtr a, const Int& p) {
    if (a->size() > 4096)
        throw std::length_error("residue_embed_check: ring larger than 4096 elements");
    RingPtr q = quotient_mod_p(a, p);
    RingPtr fp = make_zmod(p);
    auto homs = ring_homs(*q, *fp);
    for (FiniteRing::Elem x = 0; x < q->size(); ++x)
        for (FiniteRing::Elem y = x + 1; y < q->size(); ++y) {
            bool separated = false;
            for (const auto& phi : homs)
                if (phi[x] != phi[y]) {
                    separated = true;
                    break;
                }
            if (!separated) return false;
        }
    return true;
}

TorsionWitness torsion_uniqueness_demo(const Int& p, unsigned m) {
    if (m < 2) m = 2;  // need two residues agreeing mod p
    TorsionWitness w{p, m, 1, 1 + p, 0, 0, 0, {}, false, false};
    Int bound = pow_int(p, m);
    for (unsigned n = 2; Int(static_cast<long>(n)) < bound; ++n) {
        Int v1, v2, pp = p;
        Rat c1 = binomial_rat(Rat(w.alpha1), n), c2 = binomial_rat(Rat(w.alpha2), n);
        mpz_fdiv_r(v1.get_mpz_t(), to_int(c1).get_mpz_t(), pp.get_mpz_t());
        mpz_fdiv_r(v2.get_mpz_t(), to_int(c2).get_mpz_t(), pp.get_mpz_t());
        if (v1 != v2) {
            w.separating_n = n;
            w.value1 = v1;
            w.value2 = v2;
            break;
        }
    }
    if (w.separating_n == 0)
        throw std::logic_error("torsion_uniqueness_demo: no separating basis element found");

    // F = (X^q - X)/pi with q = p, pi = p; F(pX) must expand to
    // p^{p-1} X^p - X, and F(0) = 0.
    unsigned long pe = p.get_ui();
    std::vector<std::string> xv{"X"};
    MPoly xp = MPoly::var("X", xv);
    MPoly f_mon(xv);
    {
        MPoly xq = MPoly::constant(Rat(1), xv);
        for (unsigned long i = 0; i < pe; ++i) xq = xq * xp;
        f_mon = (xq - xp).scaled(Rat(1) / Rat(p));
    }
    BPoly F = to_binomial(f_mon);
    MPoly f_scaled = f_mon.substitute({xp.scaled(Rat(p))});
    w.f_of_pX = to_binomial(f_scaled);
    MPoly expect(xv);
    {
        MPoly xq = MPoly::constant(Rat(1), xv);
        for (unsigned long i = 0; i < pe; ++i) xq = xq * xp;
        expect = xq.scaled(Rat(pow_int(p, pe - 1))) - xp;
    }
    w.identity_ok = (f_scaled == expect) && is_int_valued(F) && eval(F, Rat(0)) == 0;

    // In any ring carrying the composition action, p*a = 0 gives
    // 0 = F(pX) at a = p^{p-1} a^p - a, and p^{p-1} a^p = p^{p-2} (pa) a^{p-1}
    // = 0, so a = 0.  Exhibit the arithmetic in Z/p^2 on the p-torsion of
    // the quotient: for every a with p*a = 0 there, p^{p-1} a^p - a = -a,
    // so the relation kills exactly the torsion.
    RingPtr zp2 = make_zmod(p * p);
    bool forcing = true;
    Int pk = pow_int(p, pe - 1);
    for (FiniteRing::Elem a = 0; a < zp2->size(); ++a) {
        if (zp2->mul(zp2->from_int(p), a) != zp2->zero()) continue;
        FiniteRing::Elem lhs = zp2->sub(zp2->mul(zp2->from_int(pk), zp2->pow(a, p)), a);
        if (lhs != zp2->neg(a)) forcing = false;
    }
    w.torsion_forcing_ok = forcing;
    return w;
}

WLowerReport w_lower(const Int& m, const RingFamily& family, unsigned degree) {
    WLowerReport rep{m, degree, true, {}};
    TfTarget target = TfTarget::z_inv(m);
    std::vector<Rat> probes;
    for (const Int& q : prime_factors(m)) probes.push_back(Rat(1) / Rat(q));
    if (m > 1) {
        Rat top = Rat(m - 1) / Rat(m);
        top.canonicalize();
        if (std::find(probes.begin(), probes.end(), top) == probes.end()) probes.push_back(top);
    }
    if (probes.empty()) probes.push_back(Rat(1));
    for (const Rat& a : probes) {
        ForcedHom h = forced_hom(a, family, degree, target);
        if (!h.ok) {
            rep.ok = false;
            rep.certificates.push_back("a=" + a.get_str() + ": " + h.obstruction);
        } else {
            rep.certificates.push_back("a=" + a.get_str() + ": all forced images up to degree " +
                                       std::to_string(degree) + " lie in " + target.name());
        }
    }
    return rep;
}

namespace {

// Z-span of the coefficient vectors (coords 0..N) of the given polynomials,
// held as a generator matrix plus scale; membership handled by solve_left.
struct SpanState {
    unsigned N;
    std::vector<BPoly> elems;

    bool contains(const BPoly& f) const {
        if (f.degree() > static_cast<long>(N)) return false;
        Int scale = 1;
        for (const auto& e : elems)
            for (const Rat& c : e.coeffs()) scale = lcm_int(scale, c.get_den());
        for (const Rat& c : f.coeffs()) scale = lcm_int(scale, c.get_den());
        IntMat gens(elems.size(), N + 1);
        for (std::size_t i = 0; i < elems.size(); ++i)
            for (unsigned j = 0; j <= N; ++j)
                gens.at(i, j) = to_int(elems[i].coeff(j) * Rat(scale));
        std::vector<Int> v(N + 1);
        for (unsigned j = 0; j <= N; ++j) v[j] = to_int(f.coeff(j) * Rat(scale));
        return solve_left(gens, v).has_value();
    }

    bool insert(const BPoly& f) {  // true if the span grew
        if (f.is_zero() || f.degree() > static_cast<long>(N)) return false;
        if (contains(f)) return false;
        elems.push_back(f);
        return true;
    }
};

Int prime_support(const Rat& q) {
    Int m = 1;
    for (const Int& p : prime_factors(q.get_den())) m *= p;
    return m;
}

}  // namespace

WUpperResult w_upper(const std::vector<MPoly>& generators, const RingFamily& family,
                     unsigned degree, unsigned steps) {
    WUpperResult res;
    std::vector<BPoly> poly_gens;
    std::vector<Rat> const_vals;
    for (const MPoly& g : generators) {
        if (g.vars().size() != 1) throw std::invalid_argument("w_upper: univariate generators only");
        BPoly b = to_binomial(g);
        if (b.degree() > static_cast<long>(degree))
            throw std::invalid_argument("w_upper: generator degree exceeds the graded window");
        if (b.degree() <= 0)
            const_vals.push_back(b.coeff(0));
        else
            poly_gens.push_back(b);
    }
    for (const Rat& c : const_vals) res.const_m = lcm_int(res.const_m, prime_support(c));

    SpanState span{degree, {}};
    span.insert(BPoly::one());
    for (const auto& g : poly_gens) span.insert(g);

    auto family_basis = graded_basis(family, degree).basis_polys();

    for (unsigned step = 1; step <= steps; ++step) {
        res.steps_used = step;
        bool grew = false;

        // Substitution f(a) for each current generator a.
        std::vector<BPoly> current = span.elems;
        for (const BPoly& f : family_basis) {
            if (f.degree() < 1) continue;
            for (const BPoly& a : current) {
                if (a.degree() < 1) continue;
                if (f.degree() * a.degree() > static_cast<long>(degree)) continue;
                if (span.insert(compose(f, a))) grew = true;
            }
            for (const Rat& c : const_vals) {
                Int supp = prime_support(eval(f, c));
                Int merged = lcm_int(res.const_m, supp);
                if (merged != res.const_m) {
                    res.const_m = merged;
                    grew = true;
                }
            }
        }

        // Ring closure within the degree window.
        bool prod_grew = true;
        while (prod_grew) {
            prod_grew = false;
            std::vector<BPoly> cur = span.elems;
            for (std::size_t i = 0; i < cur.size(); ++i)
                for (std::size_t j = i; j < cur.size(); ++j) {
                    if (cur[i].degree() + cur[j].degree() > static_cast<long>(degree)) continue;
                    if (span.insert(cur[i] * cur[j])) prod_grew = grew = true;
                }
        }

        if (!grew) {
            res.stable = true;
            break;
        }
    }
    if (!res.stable) res.note = "partial: step budget exhausted before stabilization";

    if (!span.elems.empty()) {
        Int scale = 1;
        for (const auto& e : span.elems)
            for (const Rat& c : e.coeffs()) scale = lcm_int(scale, c.get_den());
        IntMat gens(span.elems.size(), degree + 1);
        for (std::size_t i = 0; i < span.elems.size(); ++i)
            for (unsigned j = 0; j <= degree; ++j)
                gens.at(i, j) = to_int(span.elems[i].coeff(j) * Rat(scale));
        HnfResult h = hnf(gens);
        for (std::size_t i = 0; i < h.rank; ++i) {
            std::vector<Rat> c(degree + 1);
            for (unsigned j = 0; j <= degree; ++j) {
                c[j] = Rat(h.h.at(i, j)) / Rat(scale);
                c[j].canonicalize();
            }
            res.module_basis.push_back(BPoly(std::move(c)));
        }
        if (h.rank == degree + 1) {
            IntMat b(degree + 1, degree + 1);
            for (std::size_t i = 0; i <= degree; ++i)
                for (std::size_t j = 0; j <= degree; ++j) b.at(i, j) = h.h.at(i, j);
            res.span = IntLattice(degree + 1, b, scale);
        }
    }
    return res;
}

}  // namespace ivpoly
