#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "lvmb/rational.hpp"

namespace lvmb {

using RatVector = std::vector<Rational>;
using GaussianVector = std::vector<GaussianRational>;

// Dense rational matrix. All linear-algebra kernels on it are exact; the
// elimination core is fraction-free (Bareiss) on denominator-cleared rows to
// keep intermediate coefficients small.
class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    static RatMatrix from_rows(const std::vector<RatVector>& rows);
    static RatMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    RatVector row(std::size_t i) const;
    RatMatrix transposed() const;

    friend bool operator==(const RatMatrix& a, const RatMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

Rational dot(const RatVector& a, const RatVector& b);
RatVector mat_vec(const RatMatrix& m, const RatVector& x);
RatVector scaled(const RatVector& v, const Rational& s);
RatVector vec_add(const RatVector& a, const RatVector& b);
RatVector vec_sub(const RatVector& a, const RatVector& b);
bool is_zero_vector(const RatVector& v);

// Canonical reduced row echelon form: leading entries 1, pivot columns
// strictly increasing, zero rows dropped. The result depends only on the row
// space, which makes downstream basis choices reproducible.
struct EchelonForm {
    RatMatrix basis;                      // rank x cols, canonical RREF rows
    std::vector<std::size_t> pivot_cols;  // strictly increasing, one per row
};
EchelonForm reduced_row_echelon(const RatMatrix& m);

std::size_t rank(const RatMatrix& m);

// Basis of { x : M x = 0 }; size is cols - rank.
std::vector<RatVector> kernel_basis(const RatMatrix& m);

// Exact solution of M x = b. Underdetermined systems get the canonical
// representative with all free (non-pivot) variables set to 0. nullopt when
// inconsistent. Throws std::invalid_argument on dimension mismatch.
std::optional<RatVector> solve_linear(const RatMatrix& m, const RatVector& b);

// Row space of p(h) for h spanned by the given Gaussian-rational vectors:
// the real span of { p(a_k), p(i a_k) }, returned as a canonical echelon
// basis. m is the ambient complex dimension (needed when basis is empty).
RatMatrix real_projection_span(std::span<const GaussianVector> basis, std::size_t m);

}  // namespace lvmb
