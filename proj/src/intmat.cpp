#include "ivpoly/intmat.hpp"

#include <stdexcept>

#include <json.hpp>

namespace ivpoly {

IntMat IntMat::identity(std::size_t n) {
    IntMat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMat IntMat::transposed() const {
    IntMat t(c_, r_);
    for (std::size_t i = 0; i < r_; ++i)
        for (std::size_t j = 0; j < c_; ++j) t.at(j, i) = at(i, j);
    return t;
}

IntMat operator*(const IntMat& a, const IntMat& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matrix product: shape mismatch");
    IntMat r(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a.at(i, k) == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) r.at(i, j) += a.at(i, k) * b.at(k, j);
        }
    return r;
}

Int IntMat::det() const {
    if (r_ != c_) throw std::invalid_argument("det: square matrix required");
    if (r_ == 0) return 1;
    // Bareiss fraction-free elimination.
    IntMat m = *this;
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < r_; ++k) {
        if (m.at(k, k) == 0) {
            std::size_t s = k + 1;
            while (s < r_ && m.at(s, k) == 0) ++s;
            if (s == r_) return 0;
            for (std::size_t j = 0; j < c_; ++j) std::swap(m.at(k, j), m.at(s, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < r_; ++i)
            for (std::size_t j = k + 1; j < c_; ++j) {
                Int t = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
                mpz_divexact(m.at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
        prev = m.at(k, k);
    }
    return sign > 0 ? m.at(r_ - 1, r_ - 1) : Int(-m.at(r_ - 1, r_ - 1));
}

std::string IntMat::to_json() const {
    nlohmann::json entries = nlohmann::json::array();
    for (std::size_t i = 0; i < r_; ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t j = 0; j < c_; ++j) row.push_back(at(i, j).get_str());
        entries.push_back(row);
    }
    return nlohmann::json{{"rows", r_}, {"cols", c_}, {"entries", entries}}.dump();
}

IntMat IntMat::from_json(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    IntMat m(j.at("rows").get<std::size_t>(), j.at("cols").get<std::size_t>());
    const auto& entries = j.at("entries");
    if (entries.size() != m.rows()) throw std::invalid_argument("matrix json: row count mismatch");
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (entries[i].size() != m.cols())
            throw std::invalid_argument("matrix json: column count mismatch");
        for (std::size_t jj = 0; jj < m.cols(); ++jj)
            m.at(i, jj) = Int(entries[i][jj].get<std::string>());
    }
    return m;
}

namespace {

void row_swap(IntMat& m, std::size_t a, std::size_t b) {
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(a, j), m.at(b, j));
}

void row_axpy(IntMat& m, std::size_t dst, std::size_t src, const Int& q) {
    // row[dst] -= q * row[src]
    if (q == 0) return;
    for (std::size_t j = 0; j < m.cols(); ++j) m.at(dst, j) -= q * m.at(src, j);
}

void row_negate(IntMat& m, std::size_t i) {
    for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) = -m.at(i, j);
}

}  // namespace

HnfResult hnf(const IntMat& input) {
    HnfResult res;
    res.h = input;
    res.u = IntMat::identity(input.rows());
    IntMat& h = res.h;
    IntMat& u = res.u;
    std::size_t row = 0;
    for (std::size_t col = 0; col < input.cols() && row < input.rows(); ++col) {
        // Euclidean elimination below position (row, col).
        for (;;) {
            std::size_t best = row;
            bool found = false;
            for (std::size_t i = row; i < h.rows(); ++i) {
                if (h.at(i, col) == 0) continue;
                if (!found ||
                    mpz_cmpabs(h.at(i, col).get_mpz_t(), h.at(best, col).get_mpz_t()) < 0) {
                    best = i;
                    found = true;
                }
            }
            if (!found) break;
            if (best != row) {
                row_swap(h, row, best);
                row_swap(u, row, best);
            }
            bool below_clear = true;
            for (std::size_t i = row + 1; i < h.rows(); ++i) {
                if (h.at(i, col) == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), h.at(i, col).get_mpz_t(), h.at(row, col).get_mpz_t());
                row_axpy(h, i, row, q);
                row_axpy(u, i, row, q);
                if (h.at(i, col) != 0) below_clear = false;
            }
            if (below_clear) break;
        }
        if (h.at(row, col) == 0) continue;
        if (h.at(row, col) < 0) {
            row_negate(h, row);
            row_negate(u, row);
        }
        // Reduce the entries above the pivot into [0, pivot).
        for (std::size_t i = 0; i < row; ++i) {
            Int q;
            mpz_fdiv_q(q.get_mpz_t(), h.at(i, col).get_mpz_t(), h.at(row, col).get_mpz_t());
            row_axpy(h, i, row, q);
            row_axpy(u, i, row, q);
        }
        res.pivot_cols.push_back(col);
        ++row;
    }
    res.rank = row;
    return res;
}

std::optional<std::vector<Int>> solve_left(const IntMat& gens, const std::vector<Int>& v) {
    if (v.size() != gens.cols()) throw std::invalid_argument("solve_left: dimension mismatch");
    HnfResult r = hnf(gens);
    std::vector<Int> rem = v;
    std::vector<Int> c(gens.rows(), Int(0));
    for (std::size_t k = 0; k < r.rank; ++k) {
        std::size_t col = r.pivot_cols[k];
        if (rem[col] == 0) continue;
        Int q, m;
        mpz_fdiv_qr(q.get_mpz_t(), m.get_mpz_t(), rem[col].get_mpz_t(),
                    r.h.at(k, col).get_mpz_t());
        if (m != 0) return std::nullopt;
        for (std::size_t j = 0; j < gens.cols(); ++j) rem[j] -= q * r.h.at(k, j);
        for (std::size_t j = 0; j < gens.rows(); ++j) c[j] += q * r.u.at(k, j);
    }
    for (const Int& x : rem)
        if (x != 0) return std::nullopt;
    return c;
}

}  // namespace ivpoly
