#include "ivpoly/lattice.hpp"

#include <stdexcept>

namespace ivpoly {

IntLattice::IntLattice(std::size_t ambient_dim, IntMat basis, Int scale)
    : d_(ambient_dim), b_(std::move(basis)), scale_(std::move(scale)) {
    if (b_.cols() != d_) throw std::invalid_argument("lattice: basis width != ambient dim");
    if (scale_ <= 0) throw std::invalid_argument("lattice: scale must be positive");
    HnfResult r = hnf(b_);
    if (r.rank != d_) throw std::invalid_argument("lattice: full-rank basis required");
    IntMat h(d_, d_);
    for (std::size_t i = 0; i < d_; ++i)
        for (std::size_t j = 0; j < d_; ++j) h.at(i, j) = r.h.at(i, j);
    // Fold common content of the basis into the scale.
    Int g = scale_;
    for (std::size_t i = 0; i < d_ && g != 1; ++i)
        for (std::size_t j = 0; j < d_ && g != 1; ++j) g = gcd_int(g, h.at(i, j));
    if (g > 1) {
        for (std::size_t i = 0; i < d_; ++i)
            for (std::size_t j = 0; j < d_; ++j)
                mpz_divexact(h.at(i, j).get_mpz_t(), h.at(i, j).get_mpz_t(), g.get_mpz_t());
        mpz_divexact(scale_.get_mpz_t(), scale_.get_mpz_t(), g.get_mpz_t());
    }
    b_ = std::move(h);
}

IntLattice IntLattice::standard(std::size_t d) { return IntLattice(d, IntMat::identity(d), 1); }

bool IntLattice::operator==(const IntLattice& o) const {
    return d_ == o.d_ && scale_ == o.scale_ && b_ == o.b_;
}

std::vector<Rat> IntLattice::diagonal() const {
    std::vector<Rat> out(d_);
    for (std::size_t i = 0; i < d_; ++i) {
        out[i] = Rat(b_.at(i, i)) / Rat(scale_);
        out[i].canonicalize();
    }
    return out;
}

std::optional<std::vector<Int>> IntLattice::member(const std::vector<Rat>& v) const {
    if (v.size() != d_) throw std::invalid_argument("member: dimension mismatch");
    std::vector<Int> x(d_);
    for (std::size_t j = 0; j < d_; ++j) {
        Rat s = v[j] * Rat(scale_);
        if (!is_integer(s)) return std::nullopt;
        x[j] = s.get_num();
    }
    return solve_left(b_, x);
}

bool IntLattice::contains(const IntLattice& other) const {
    if (other.d_ != d_) throw std::invalid_argument("contains: dimension mismatch");
    for (std::size_t i = 0; i < d_; ++i) {
        std::vector<Rat> row(d_);
        for (std::size_t j = 0; j < d_; ++j) {
            row[j] = Rat(other.b_.at(i, j)) / Rat(other.scale_);
            row[j].canonicalize();
        }
        if (!member(row)) return false;
    }
    return true;
}

LatticeCompare compare(const IntLattice& a, const IntLattice& b) {
    if (a.ambient_dim() != b.ambient_dim())
        throw std::invalid_argument("compare: ambient dimensions differ");
    bool ab = b.contains(a);  // a subset of b
    bool ba = a.contains(b);
    if (ab && ba) return {LatticeOrder::Equal, 1};
    // covolume = |det basis| / scale^d; the index of the nested lattice is
    // the covolume ratio, always integral when nested.
    auto covol_num = [](const IntLattice& l) -> Int { return abs(l.basis().det()); };
    auto covol_den = [](const IntLattice& l) -> Int {
        return pow_int(l.scale(), static_cast<unsigned long>(l.ambient_dim()));
    };
    if (ab) {
        Int num = covol_num(a) * covol_den(b);
        Int den = covol_num(b) * covol_den(a);
        Int q;
        mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        return {LatticeOrder::FirstInsideSecond, q};
    }
    if (ba) {
        Int num = covol_num(b) * covol_den(a);
        Int den = covol_num(a) * covol_den(b);
        Int q;
        mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        return {LatticeOrder::SecondInsideFirst, q};
    }
    return {LatticeOrder::Incomparable, 0};
}

IntMat congruence_kernel(std::size_t d, const std::vector<std::vector<Int>>& rows,
                         const std::vector<Int>& moduli) {
    if (rows.size() != moduli.size())
        throw std::invalid_argument("congruence_kernel: rows/moduli mismatch");
    std::size_t m = rows.size();
    // Solutions are the x-projection of the integer kernel of [A | diag(mod)];
    // the kernel itself falls out of the HNF transform of the transpose.
    IntMat g(d + m, m);
    for (std::size_t i = 0; i < m; ++i) {
        if (rows[i].size() != d) throw std::invalid_argument("congruence_kernel: bad row width");
        if (moduli[i] == 0) throw std::invalid_argument("congruence_kernel: zero modulus");
        for (std::size_t j = 0; j < d; ++j) g.at(j, i) = rows[i][j];
        g.at(d + i, i) = moduli[i];
    }
    HnfResult r = hnf(g);
    std::size_t nk = (d + m) - r.rank;
    IntMat gens(nk, d);
    for (std::size_t i = 0; i < nk; ++i)
        for (std::size_t j = 0; j < d; ++j) gens.at(i, j) = r.u.at(r.rank + i, j);
    HnfResult h = hnf(gens);
    if (h.rank != d) throw std::logic_error("congruence_kernel: solution lattice not full rank");
    IntMat out(d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) out.at(i, j) = h.h.at(i, j);
    return out;
}

IntMat congruence_kernel_rat(std::size_t d, const std::vector<std::vector<Rat>>& rows) {
    std::vector<std::vector<Int>> irows;
    std::vector<Int> moduli;
    for (const auto& row : rows) {
        if (row.size() != d) throw std::invalid_argument("congruence_kernel_rat: bad row width");
        Int den = 1;
        for (const Rat& q : row) den = lcm_int(den, q.get_den());
        if (den == 1) continue;  // integral row constrains nothing
        std::vector<Int> ir(d);
        for (std::size_t j = 0; j < d; ++j) {
            Rat s = row[j] * Rat(den);
            ir[j] = s.get_num();
        }
        irows.push_back(std::move(ir));
        moduli.push_back(den);
    }
    if (irows.empty()) return IntMat::identity(d);
    return congruence_kernel(d, irows, moduli);
}

IntLattice lattice_from_congruences(std::size_t d,
                                    const std::vector<std::vector<Rat>>& constraints) {
    Int scale = 1;
    for (const auto& row : constraints) {
        if (row.size() != d)
            throw std::invalid_argument("lattice_from_congruences: inconsistent dimension");
        for (const Rat& q : row) scale = lcm_int(scale, q.get_den());
    }
    // Candidates a = x/scale, x integral; congruences are imposed on residues
    // modulo Z^d, so Z^d itself is always adjoined.
    std::vector<std::vector<Rat>> scaled;
    scaled.reserve(constraints.size());
    for (const auto& row : constraints) {
        std::vector<Rat> r(d);
        for (std::size_t j = 0; j < d; ++j) {
            r[j] = row[j] / Rat(scale);
            r[j].canonicalize();
        }
        scaled.push_back(std::move(r));
    }
    IntMat sol = congruence_kernel_rat(d, scaled);
    IntMat stacked(2 * d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            stacked.at(i, j) = sol.at(i, j);
            stacked.at(d + i, j) = (i == j) ? scale : Int(0);
        }
    return IntLattice(d, stacked, scale);
}

}  // namespace ivpoly
