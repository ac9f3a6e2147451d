#include "ivpoly/plethory.hpp"

#include <stdexcept>

#include <json.hpp>

#include "ivpoly/biring.hpp"
#include "ivpoly/poly_text.hpp"
#include "ivpoly/reflect.hpp"

namespace ivpoly {

namespace {

void require_int_tuple(std::initializer_list<const BPoly*> fs, const Rat& c) {
    for (const BPoly* f : fs)
        if (!is_int_valued(*f))
            throw std::invalid_argument("relation_check: integer binomial coefficients required");
    if (!is_integer(c)) throw std::invalid_argument("relation_check: integer constant required");
}

// sum over the tensor expansion of f of (left o g) * (right o h)
BPoly fold_tensor_compose(const TBPoly& t, const BPoly& g, const BPoly& h) {
    BPoly acc;
    for (const auto& [ij, c] : t.terms()) {
        BPoly part = compose(BPoly::basis(ij.first), g) * compose(BPoly::basis(ij.second), h);
        acc = acc + part.scaled(c);
    }
    return acc;
}

}  // namespace

CheckReport relation_check(const BPoly& f, const BPoly& g, const BPoly& h, const Rat& c) {
    require_int_tuple({&f, &g, &h}, c);
    CheckReport rep;
    rep.property = "composition relations";

    rep.record(compose(f + g, h) == compose(f, h) + compose(g, h), "(f+g)oh != foh + goh");
    rep.record(compose(f * g, h) == compose(f, h) * compose(g, h), "(f*g)oh != (foh)(goh)");
    rep.record(compose(BPoly::constant(c), h) == BPoly::constant(c), "c o h != c");
    rep.record(compose(f, g + h) == fold_tensor_compose(coadd(f), g, h),
               "f o (g+h) disagrees with the coaddition expansion");
    rep.record(compose(f, g * h) == fold_tensor_compose(comul(f), g, h),
               "f o (g*h) disagrees with the comultiplication expansion");
    rep.record(compose(f, BPoly::constant(c)) == BPoly::constant(eval(f, c)), "f o c != f(c)");
    return rep;
}

CheckReport idempotence_witness(unsigned N) {
    if (N < 1) throw std::invalid_argument("idempotence_witness: N >= 1 required");
    CheckReport rep;
    rep.property = "composition unit and forced-hom uniqueness";
    BPoly e = BPoly::x();
    for (unsigned n = 0; n <= N; ++n) {
        BPoly f = BPoly::basis(n);
        rep.record(compose(e, f) == f && compose(f, e) == f,
                   "unit law fails at C(X," + std::to_string(n) + ")");
    }

    struct Probe {
        TfTarget target;
        std::vector<Rat> points;
    };
    std::vector<Probe> probes = {
        {TfTarget::integers(), {Rat(-3), Rat(0), Rat(2), Rat(3)}},
        {TfTarget::localized(2), {Rat(1, 3), Rat(-5, 3), Rat(7)}},
        {TfTarget::localized(3), {Rat(1, 2), Rat(4, 5)}},
        {TfTarget::z_inv(6), {Rat(1, 2), Rat(1, 3), Rat(5, 6)}},
    };
    auto fam = RingFamily::integers();
    for (const auto& probe : probes) {
        for (const Rat& a : probe.points) {
            ForcedHom hom = forced_hom(a, fam, N, probe.target);
            bool ok = hom.ok;
            if (ok) {
                // The image is pinned: n! * image(C(X,n)) equals the falling
                // factorial at a, and multiplicativity holds on a spot pair.
                for (unsigned n = 0; n <= N && ok; ++n) {
                    Rat ff = 1;
                    for (unsigned i = 0; i < n; ++i) ff *= (a - Rat(static_cast<long>(i)));
                    if (hom.images[n] * Rat(factorial(n)) != ff) ok = false;
                }
                if (ok && N >= 2) {
                    BPoly prod = BPoly::basis(1) * BPoly::basis(2);
                    Rat lhs = hom.images[1] * hom.images[2];
                    Rat rhs = 0;
                    for (std::size_t k = 0; k < prod.coeffs().size(); ++k)
                        rhs += prod.coeffs()[k] * hom.images[k];
                    if (lhs != rhs) ok = false;
                }
            }
            rep.record(ok, "forced hom into " + probe.target.name() + " at a=" + a.get_str() +
                               (hom.ok ? " broke the forcing identities" : ": " + hom.obstruction));
        }
    }
    return rep;
}

std::vector<BPoly> plethystic_units(unsigned d, long window) {
    std::vector<BPoly> out;
    if (d < 1) return out;  // constants compose to constants, never to X
    long w = std::max<long>(window, 1);
    // Degree multiplicativity confines units to degree one; search the
    // affine candidates and keep those with a two-sided inverse.
    for (long a : {1L, -1L})
        for (long b = -w; b <= w; ++b) {
            BPoly f({Rat(b), Rat(a)});
            BPoly g({Rat(-b) / Rat(a), Rat(1) / Rat(a)});
            if (!is_int_valued(g)) continue;
            if (compose(f, g) == BPoly::x() && compose(g, f) == BPoly::x()) out.push_back(f);
        }
    return out;
}

BPoly invert_unit(const BPoly& f) {
    if (f.degree() != 1 || (f.coeff(1) != 1 && f.coeff(1) != -1) || !is_int_valued(f))
        throw std::domain_error("invert_unit: " + to_text(f) +
                                " is not invertible under composition");
    Rat a = f.coeff(1), b = f.coeff(0);
    BPoly g({-b / a, Rat(1) / a});
    if (compose(f, g) != BPoly::x() || compose(g, f) != BPoly::x())
        throw std::logic_error("invert_unit: inverse verification failed");
    return g;
}

TensorDecomposition decompose_tensor(const TBPoly& F, const std::vector<BPoly>& basis,
                                     unsigned Dmax) {
    TensorDecomposition out;
    for (const auto& b : basis)
        if (b.degree() > static_cast<long>(Dmax))
            throw std::invalid_argument("decompose_tensor: basis degree exceeds Dmax");
    for (const auto& [ij, c] : F.terms())
        if (ij.first > Dmax || ij.second > Dmax)
            throw std::invalid_argument("decompose_tensor: F bidegree exceeds Dmax");

    std::size_t width = (Dmax + 1) * (Dmax + 1);
    Int scale = 1;
    for (const auto& b : basis)
        for (const Rat& c : b.coeffs()) scale = lcm_int(scale, c.get_den());
    for (const auto& [ij, c] : F.terms()) scale = lcm_int(scale, c.get_den());

    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = 0; j < basis.size(); ++j) pairs.emplace_back(i, j);

    IntMat gens(pairs.size(), width);
    Int scale2 = scale * scale;
    for (std::size_t r = 0; r < pairs.size(); ++r) {
        const BPoly& gi = basis[pairs[r].first];
        const BPoly& gj = basis[pairs[r].second];
        for (std::size_t a = 0; a < gi.coeffs().size(); ++a)
            for (std::size_t b = 0; b < gj.coeffs().size(); ++b)
                gens.at(r, a * (Dmax + 1) + b) = to_int(gi.coeffs()[a] * gj.coeffs()[b] * Rat(scale2));
    }
    std::vector<Int> target(width, Int(0));
    for (const auto& [ij, c] : F.terms())
        target[ij.first * (Dmax + 1) + ij.second] = to_int(c * Rat(scale2));

    auto sol = solve_left(gens, target);
    if (!sol) {
        out.certificate = "no decomposition with factor degree <= " + std::to_string(Dmax);
        return out;
    }
    out.decomposed = true;
    for (std::size_t r = 0; r < pairs.size(); ++r)
        if ((*sol)[r] != 0) out.coords.emplace_back(pairs[r].first, pairs[r].second, (*sol)[r]);
    return out;
}

TBPoly recompose(const TensorDecomposition& d, const std::vector<BPoly>& basis) {
    TBPoly acc;
    for (const auto& [i, j, c] : d.coords)
        acc += TBPoly::tensor(basis[i], basis[j]).scaled(Rat(c));
    return acc;
}

CheckReport weakly_composite_check(const RingFamily& family, unsigned d, unsigned Dmax) {
    if (Dmax == 0) Dmax = 2 * d;
    CheckReport rep;
    rep.property = "tensor decomposability of co-operations over " + family.id();
    auto family_basis = graded_basis(family, Dmax).basis_polys();
    auto graded = graded_basis(family, d).basis_polys();
    for (const BPoly& f : graded) {
        TensorDecomposition da = decompose_tensor(coadd(f), family_basis, Dmax);
        bool ok_a = da.decomposed && recompose(da, family_basis) == coadd(f);
        rep.record(ok_a, "coaddition of " + to_text(f) + ": " +
                             (da.decomposed ? "reconstruction mismatch" : da.certificate));
        if (!ok_a) return rep;  // first failure reported
        TensorDecomposition dm = decompose_tensor(comul(f), family_basis, Dmax);
        bool ok_m = dm.decomposed && recompose(dm, family_basis) == comul(f);
        rep.record(ok_m, "comultiplication of " + to_text(f) + ": " +
                             (dm.decomposed ? "reconstruction mismatch" : dm.certificate));
        if (!ok_m) return rep;
    }
    return rep;
}

}  // namespace ivpoly
