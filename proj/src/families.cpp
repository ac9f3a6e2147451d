#include "ivpoly/families.hpp"

#include <map>
#include <stdexcept>

namespace ivpoly {

RingFamily RingFamily::integers() { return {}; }

RingFamily RingFamily::localized(const Int& p) {
    if (!is_prime(p)) throw std::invalid_argument("localized: prime required");
    RingFamily f;
    f.kind = FamilyKind::IntLocalized;
    f.p = p;
    return f;
}

RingFamily RingFamily::overring(const Int& m) {
    if (m < 1) throw std::invalid_argument("overring: m >= 1 required");
    RingFamily f;
    f.kind = FamilyKind::IntOverring;
    f.m = m;
    return f;
}

RingFamily RingFamily::der(long r) {
    if (r < kInfiniteOrder) throw std::invalid_argument("der: bad order");
    RingFamily f;
    f.kind = FamilyKind::DerInt;
    f.order = r;
    return f;
}

RingFamily RingFamily::fdiff(long r) {
    if (r < kInfiniteOrder) throw std::invalid_argument("fdiff: bad order");
    RingFamily f;
    f.kind = FamilyKind::FDiffInt;
    f.order = r;
    return f;
}

RingFamily RingFamily::parse(const std::string& id) {
    auto order_of = [](const std::string& s) -> long {
        if (s == "inf") return kInfiniteOrder;
        return std::stol(s);
    };
    if (id == "int") return integers();
    if (id.rfind("int@p=", 0) == 0) return localized(Int(id.substr(6)));
    if (id.rfind("int[1/", 0) == 0 && id.back() == ']')
        return overring(Int(id.substr(6, id.size() - 7)));
    if (id.rfind("dint:", 0) == 0) return der(order_of(id.substr(5)));
    if (id.rfind("fdint:", 0) == 0) return fdiff(order_of(id.substr(6)));
    throw std::invalid_argument("unknown family id: " + id);
}

std::string RingFamily::id() const {
    auto ord = [](long r) { return r == kInfiniteOrder ? std::string("inf") : std::to_string(r); };
    switch (kind) {
        case FamilyKind::Int:
            return "int";
        case FamilyKind::IntLocalized:
            return "int@p=" + p.get_str();
        case FamilyKind::IntOverring:
            return "int[1/" + m.get_str() + "]";
        case FamilyKind::DerInt:
            return "dint:" + ord(order);
        case FamilyKind::FDiffInt:
            return "fdint:" + ord(order);
    }
    return "?";
}

Int c_n(unsigned n) {
    Int r = 1;
    for (Int p = 2; p <= static_cast<long>(n); ++p)
        if (is_prime(p)) r *= pow_int(p, static_cast<unsigned long>(n) / p.get_ui());
    return r;
}

BPoly local_basis(const Int& p, unsigned n) {
    if (!is_prime(p)) throw std::invalid_argument("local_basis: prime required");
    Int f = factorial(n);
    Int unit_part = f;
    if (n > 0) unit_part = f / pow_int(p, static_cast<unsigned long>(vp_int(f, p)));
    std::vector<Rat> c(n + 1, Rat(0));
    c[n] = Rat(unit_part);
    return BPoly(std::move(c));
}

namespace {

long effective_order(long order, long degree) {
    if (degree < 0) return 0;
    return order == kInfiniteOrder ? degree : std::min<long>(order, degree);
}

bool member_der(const BPoly& f, long r) {
    long top = effective_order(r, f.degree());
    for (long j = 0; j <= top; ++j)
        if (!is_int_valued(derivative(f, static_cast<unsigned>(j)))) return false;
    return true;
}

bool member_fdiff(const BPoly& f, long r) {
    if (!is_int_valued(f)) return false;
    long top = effective_order(r, f.degree());
    if (top == 0) return true;
    for (long h = 0; h <= f.degree(); ++h)
        if (!member_fdiff(fdiff(f, Rat(h)), top - 1)) return false;
    return true;
}

}  // namespace

bool membership(const BPoly& f, const RingFamily& family) {
    switch (family.kind) {
        case FamilyKind::Int:
            return is_int_valued(f);
        case FamilyKind::IntLocalized: {
            // v_p(f(a)) >= 0 for a ranging over residues mod p^M,
            // M = v_p(deg! ) + 1; binomial values at a depend only on that
            // many base-p digits.
            if (f.is_zero()) return true;
            long d = f.degree();
            long M = (d > 0 ? vp_int(factorial(static_cast<unsigned long>(d)), family.p) : 0) + 1;
            Int bound = pow_int(family.p, static_cast<unsigned long>(M));
            for (Int a = 0; a < bound; ++a) {
                Rat v = eval(f, Rat(a));
                if (v != 0 && vp_rat(v, family.p) < 0) return false;
            }
            return true;
        }
        case FamilyKind::IntOverring: {
            if (!is_int_valued(f)) return false;
            MPoly m = from_binomial(f);
            for (const auto& [e, c] : m.terms())
                if (!in_z_inv_m(c, family.m)) return false;
            return true;
        }
        case FamilyKind::DerInt:
            return member_der(f, family.order);
        case FamilyKind::FDiffInt:
            return member_fdiff(f, family.order);
    }
    return false;
}

namespace {

// Rational inverse of a full-rank upper-triangular integer matrix.
std::vector<std::vector<Rat>> inverse_upper(const IntMat& b) {
    std::size_t n = b.rows();
    std::vector<std::vector<Rat>> inv(n, std::vector<Rat>(n, Rat(0)));
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t ii = j + 1; ii-- > 0;) {
            if (ii == j) {
                inv[ii][j] = Rat(1) / Rat(b.at(ii, ii));
            } else {
                Rat s = 0;
                for (std::size_t k = ii + 1; k <= j; ++k) s += Rat(b.at(ii, k)) * inv[k][j];
                inv[ii][j] = -s / Rat(b.at(ii, ii));
            }
            inv[ii][j].canonicalize();
        }
    }
    return inv;
}

// Binomial coordinates (length d) of Delta_h C(X,n) for n = 0..d, as the
// columns of a d x (d+1) matrix.
std::vector<std::vector<Rat>> fdiff_matrix(unsigned d, const Rat& h) {
    std::vector<std::vector<Rat>> m(d, std::vector<Rat>(d + 1, Rat(0)));
    for (unsigned n = 0; n <= d; ++n) {
        BPoly df = fdiff(BPoly::basis(n), h);
        for (std::size_t i = 0; i < df.coeffs().size(); ++i) m[i][n] = df.coeffs()[i];
    }
    return m;
}

IntMat graded_lattice_der(long order, unsigned d) {
    std::vector<std::vector<Rat>> rows;
    long top = effective_order(order, static_cast<long>(d));
    for (long j = 1; j <= top; ++j) {
        std::vector<BPoly> dbasis(d + 1);
        for (unsigned n = 0; n <= d; ++n) dbasis[n] = derivative(BPoly::basis(n), static_cast<unsigned>(j));
        for (long i = 0; i + j <= static_cast<long>(d); ++i) {
            std::vector<Rat> row(d + 1);
            for (unsigned n = 0; n <= d; ++n) row[n] = eval(dbasis[n], Rat(i));
            rows.push_back(std::move(row));
        }
    }
    return congruence_kernel_rat(d + 1, rows);
}

IntMat graded_lattice_fdiff(long order, unsigned d, std::map<std::pair<long, unsigned>, IntMat>& memo);

IntMat graded_lattice_fdiff_impl(long order, unsigned d,
                                 std::map<std::pair<long, unsigned>, IntMat>& memo) {
    long top = effective_order(order, static_cast<long>(d));
    if (top == 0 || d == 0) return IntMat::identity(d + 1);
    IntMat sub = graded_lattice_fdiff(top - 1, d - 1, memo);
    auto inv = inverse_upper(sub);
    std::vector<std::vector<Rat>> rows;
    for (unsigned h = 0; h <= d; ++h) {
        auto mh = fdiff_matrix(d, Rat(static_cast<long>(h)));
        // Membership of Delta_h f in the lower lattice: inv^T * mh * a integral.
        for (std::size_t r = 0; r < d; ++r) {
            std::vector<Rat> row(d + 1, Rat(0));
            for (std::size_t x = 0; x < d; ++x) {
                if (inv[x][r] == 0) continue;
                for (std::size_t n = 0; n <= d; ++n) row[n] += inv[x][r] * mh[x][n];
            }
            for (auto& q : row) q.canonicalize();
            rows.push_back(std::move(row));
        }
    }
    return congruence_kernel_rat(d + 1, rows);
}

IntMat graded_lattice_fdiff(long order, unsigned d,
                            std::map<std::pair<long, unsigned>, IntMat>& memo) {
    long top = effective_order(order, static_cast<long>(d));
    auto key = std::make_pair(top, d);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    IntMat result = graded_lattice_fdiff_impl(top, d, memo);
    memo.emplace(key, result);
    return result;
}

IntMat graded_lattice_overring(const Int& m, unsigned d) {
    Int dfac = factorial(d);
    std::vector<std::vector<Rat>> rows;
    // Monomial coefficient k of sum a_n C(X,n), cleared by d!.
    std::vector<std::vector<Int>> cleared(d + 1, std::vector<Int>(d + 1, Int(0)));
    for (unsigned n = 0; n <= d; ++n) {
        MPoly b = binom_poly(n);
        for (unsigned k = 0; k <= n; ++k) {
            Rat c = b.coeff({k}) * Rat(dfac);
            cleared[k][n] = to_int(c);
        }
    }
    for (Int q = 2; q <= static_cast<long>(d); ++q) {
        if (!is_prime(q) || m % q == 0) continue;
        Int qe = pow_int(q, static_cast<unsigned long>(vp_int(dfac, q)));
        for (unsigned k = 0; k <= d; ++k) {
            std::vector<Rat> row(d + 1);
            bool nonzero = false;
            for (unsigned n = 0; n <= d; ++n) {
                row[n] = Rat(cleared[k][n]) / Rat(qe);
                row[n].canonicalize();
                if (row[n] != 0) nonzero = true;
            }
            if (nonzero) rows.push_back(std::move(row));
        }
    }
    return congruence_kernel_rat(d + 1, rows);
}

}  // namespace

GradedBasis graded_basis(const RingFamily& family, unsigned d) {
    IntMat basis;
    Int scale = 1;
    switch (family.kind) {
        case FamilyKind::Int:
            basis = IntMat::identity(d + 1);
            break;
        case FamilyKind::IntLocalized: {
            // Z_(p)-basis presentation: p-part exact, prime-to-p part trivial.
            basis = IntMat(d + 1, d + 1);
            for (unsigned n = 0; n <= d; ++n) basis.at(n, n) = to_int(local_basis(family.p, n).coeff(n));
            break;
        }
        case FamilyKind::IntOverring:
            basis = graded_lattice_overring(family.m, d);
            break;
        case FamilyKind::DerInt:
            basis = graded_lattice_der(family.order, d);
            break;
        case FamilyKind::FDiffInt: {
            std::map<std::pair<long, unsigned>, IntMat> memo;
            basis = graded_lattice_fdiff(family.order, d, memo);
            break;
        }
    }
    GradedBasis g{family, d, IntLattice(d + 1, basis, scale), {}};
    g.diagonal = g.lattice.diagonal();
    return g;
}

std::vector<BPoly> GradedBasis::basis_polys() const {
    std::vector<BPoly> out;
    const IntMat& b = lattice.basis();
    for (std::size_t i = 0; i < b.rows(); ++i) {
        std::vector<Rat> c(b.cols());
        for (std::size_t j = 0; j < b.cols(); ++j) {
            c[j] = Rat(b.at(i, j)) / Rat(lattice.scale());
            c[j].canonicalize();
        }
        out.push_back(BPoly(std::move(c)));
    }
    return out;
}

bool dual_decompose_direct(const BPoly& f, const BPoly& g, unsigned r) {
    long top = effective_order(static_cast<long>(r), std::max(f.degree(), g.degree()));
    long d = std::max({f.degree(), g.degree(), 0L});
    for (long j = 0; j <= top; ++j) {
        BPoly fj = derivative(f, static_cast<unsigned>(j));
        BPoly gj = derivative(g, static_cast<unsigned>(j));
        for (long a = 0; a <= d + 1; ++a)
            for (long b : {0L, 1L}) {
                DualElem val = eval(fj, DualElem(Rat(a), Rat(b))) +
                               DualElem(Rat(0), Rat(1)) * eval(gj, DualElem(Rat(a), Rat(b)));
                if (!is_integer(val.base) || !is_integer(val.eps)) return false;
            }
    }
    return true;
}

bool dual_decompose_split(const BPoly& f, const BPoly& g, unsigned r) {
    return membership(f, RingFamily::der(static_cast<long>(r) + 1)) &&
           membership(g, RingFamily::der(static_cast<long>(r)));
}

bool dual_decompose(const BPoly& f, const BPoly& g, unsigned r) {
    bool direct = dual_decompose_direct(f, g, r);
    bool split = dual_decompose_split(f, g, r);
    if (direct != split) throw std::logic_error("dual_decompose: decision routes disagree");
    return direct;
}

std::optional<std::pair<unsigned, BPoly>> chain_witness(long r, unsigned dmax,
                                                        bool fdiff_variant) {
    if (r < 0) throw std::invalid_argument("chain_witness: r >= 0 required");
    auto fam = fdiff_variant ? RingFamily::fdiff(r) : RingFamily::der(r);
    auto fam1 = fdiff_variant ? RingFamily::fdiff(r + 1) : RingFamily::der(r + 1);
    for (unsigned d = 1; d <= dmax; ++d) {
        GradedBasis lo = graded_basis(fam, d);
        GradedBasis hi = graded_basis(fam1, d);
        if (lo.lattice == hi.lattice) continue;
        for (const BPoly& w : lo.basis_polys())
            if (!membership(w, fam1)) return std::make_pair(d, w);
        throw std::logic_error("chain_witness: lattices differ but no separating row");
    }
    return std::nullopt;
}

bool inf_equality_check(unsigned degree) {
    return graded_basis(RingFamily::der(kInfiniteOrder), degree).lattice ==
           graded_basis(RingFamily::fdiff(kInfiniteOrder), degree).lattice;
}

}  // namespace ivpoly
