#include "lvmb/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace lvmb {

RatMatrix RatMatrix::from_rows(const std::vector<RatVector>& rows) {
    if (rows.empty()) return RatMatrix();
    RatMatrix m(rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols())
            throw std::invalid_argument("ragged rows in matrix construction");
        for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

RatMatrix RatMatrix::identity(std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

RatVector RatMatrix::row(std::size_t i) const {
    RatVector r(cols_);
    for (std::size_t j = 0; j < cols_; ++j) r[j] = at(i, j);
    return r;
}

RatMatrix RatMatrix::transposed() const {
    RatMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

Rational dot(const RatVector& a, const RatVector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

RatVector mat_vec(const RatMatrix& m, const RatVector& x) {
    if (m.cols() != x.size()) throw std::invalid_argument("mat_vec: dimension mismatch");
    RatVector y(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Rational s = 0;
        for (std::size_t j = 0; j < m.cols(); ++j) s += m.at(i, j) * x[j];
        y[i] = s;
    }
    return y;
}

RatVector scaled(const RatVector& v, const Rational& s) {
    RatVector r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i] * s;
    return r;
}

RatVector vec_add(const RatVector& a, const RatVector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vec_add: length mismatch");
    RatVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

RatVector vec_sub(const RatVector& a, const RatVector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vec_sub: length mismatch");
    RatVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

bool is_zero_vector(const RatVector& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

namespace {

Integer exact_div(const Integer& num, const Integer& den) {
    Integer q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (r != 0) throw std::logic_error("Bareiss elimination: inexact division");
    return q;
}

// Fraction-free forward elimination. Rows are scaled to integers first;
// row scaling changes neither row space nor pivot structure.
struct ForwardResult {
    std::vector<std::vector<Integer>> rows;  // echelon, pivot rows first
    std::vector<std::size_t> pivot_cols;
};

ForwardResult bareiss_forward(const RatMatrix& m) {
    const std::size_t nr = m.rows(), nc = m.cols();
    std::vector<std::vector<Integer>> z(nr, std::vector<Integer>(nc));
    for (std::size_t i = 0; i < nr; ++i) {
        Integer l = 1;
        for (std::size_t j = 0; j < nc; ++j) l = lcm(l, m.at(i, j).get_den());
        for (std::size_t j = 0; j < nc; ++j) {
            Rational s = m.at(i, j) * Rational(l);
            z[i][j] = s.get_num();  // s has denominator 1
        }
    }

    ForwardResult out;
    Integer prev = 1;
    std::size_t r = 0;
    for (std::size_t col = 0; col < nc && r < nr; ++col) {
        std::size_t p = r;
        while (p < nr && z[p][col] == 0) ++p;
        if (p == nr) continue;
        std::swap(z[r], z[p]);
        for (std::size_t i = r + 1; i < nr; ++i) {
            for (std::size_t j = col + 1; j < nc; ++j)
                z[i][j] = exact_div(z[r][col] * z[i][j] - z[i][col] * z[r][j], prev);
            z[i][col] = 0;
        }
        prev = z[r][col];
        out.pivot_cols.push_back(col);
        ++r;
    }
    out.rows = std::move(z);
    return out;
}

}  // namespace

EchelonForm reduced_row_echelon(const RatMatrix& m) {
    ForwardResult fwd = bareiss_forward(m);
    const std::size_t rank = fwd.pivot_cols.size();
    const std::size_t nc = m.cols();

    std::vector<RatVector> rows(rank, RatVector(nc));
    for (std::size_t i = 0; i < rank; ++i) {
        Rational pivot(fwd.rows[i][fwd.pivot_cols[i]]);
        for (std::size_t j = 0; j < nc; ++j) rows[i][j] = Rational(fwd.rows[i][j]) / pivot;
    }
    for (std::size_t i = rank; i-- > 0;) {
        for (std::size_t s = 0; s < i; ++s) {
            Rational f = rows[s][fwd.pivot_cols[i]];
            if (f == 0) continue;
            for (std::size_t j = fwd.pivot_cols[i]; j < nc; ++j)
                rows[s][j] -= f * rows[i][j];
        }
    }

    EchelonForm ef;
    ef.pivot_cols = std::move(fwd.pivot_cols);
    ef.basis = rank == 0 ? RatMatrix(0, nc) : RatMatrix::from_rows(rows);
    return ef;
}

std::size_t rank(const RatMatrix& m) { return bareiss_forward(m).pivot_cols.size(); }

std::vector<RatVector> kernel_basis(const RatMatrix& m) {
    EchelonForm ef = reduced_row_echelon(m);
    const std::size_t nc = m.cols();
    std::vector<bool> is_pivot(nc, false);
    for (std::size_t c : ef.pivot_cols) is_pivot[c] = true;

    std::vector<RatVector> basis;
    for (std::size_t k = 0; k < nc; ++k) {
        if (is_pivot[k]) continue;
        RatVector x(nc, Rational(0));
        x[k] = 1;
        for (std::size_t i = 0; i < ef.pivot_cols.size(); ++i)
            x[ef.pivot_cols[i]] = -ef.basis.at(i, k);
        basis.push_back(std::move(x));
    }
    return basis;
}

std::optional<RatVector> solve_linear(const RatMatrix& m, const RatVector& b) {
    if (m.rows() != b.size()) throw std::invalid_argument("solve_linear: dimension mismatch");
    RatMatrix aug(m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols()) = b[i];
    }
    EchelonForm ef = reduced_row_echelon(aug);
    for (std::size_t c : ef.pivot_cols)
        if (c == m.cols()) return std::nullopt;  // pivot in the rhs column
    RatVector x(m.cols(), Rational(0));
    for (std::size_t i = 0; i < ef.pivot_cols.size(); ++i)
        x[ef.pivot_cols[i]] = ef.basis.at(i, m.cols());
    return x;
}

RatMatrix real_projection_span(std::span<const GaussianVector> basis, std::size_t m) {
    std::vector<RatVector> rows;
    for (const auto& a : basis) {
        if (a.size() != m)
            throw std::invalid_argument("real_projection_span: vector length != m");
        RatVector re(m), im_row(m);
        for (std::size_t j = 0; j < m; ++j) {
            re[j] = a[j].re;                 // p(a)
            im_row[j] = times_i(a[j]).re;    // p(i a)
        }
        rows.push_back(std::move(re));
        rows.push_back(std::move(im_row));
    }
    if (rows.empty()) return RatMatrix(0, m);
    return reduced_row_echelon(RatMatrix::from_rows(rows)).basis;
}

}  // namespace lvmb
