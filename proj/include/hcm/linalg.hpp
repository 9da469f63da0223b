#pragma once

#include "matrix.hpp"

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace hcm {

struct Rref {
    Mat mat;
    std::vector<std::size_t> pivots;  // pivot column per pivot row, ascending
    std::size_t rank = 0;
};

// Reduced row-echelon form by rational Gauss-Jordan elimination.
// Pivoting is deterministic: first nonzero entry in column order.
inline Rref rref(const Mat& a) {
    Mat m = a;
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t pr = row;
        while (pr < m.rows() && m(pr, col).is_zero()) ++pr;
        if (pr == m.rows()) continue;
        if (pr != row)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(row, j), m(pr, j));
        const Rational inv = m(row, col).reciprocal();
        for (std::size_t j = col; j < m.cols(); ++j) m(row, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || m(i, col).is_zero()) continue;
            const Rational f = m(i, col);
            for (std::size_t j = col; j < m.cols(); ++j) m(i, j) -= f * m(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return Rref{std::move(m), std::move(pivots), row};
}

// Exact rank by fraction-free (Bareiss) elimination. Rows are first scaled
// to integers; intermediate entries stay integral, divisions are exact.
inline std::size_t rank(const Mat& a) {
    const std::size_t rows = a.rows(), cols = a.cols();
    if (rows == 0 || cols == 0) return 0;
    std::vector<mpz_class> m(rows * cols);
    for (std::size_t i = 0; i < rows; ++i) {
        mpz_class scale = 1;
        for (std::size_t j = 0; j < cols; ++j) {
            mpz_class den = a(i, j).denominator();
            mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), den.get_mpz_t());
        }
        for (std::size_t j = 0; j < cols; ++j)
            m[i * cols + j] = a(i, j).numerator() * (scale / a(i, j).denominator());
    }
    mpz_class prev = 1;
    std::size_t r = 0;
    for (std::size_t col = 0; col < cols && r < rows; ++col) {
        std::size_t pr = r;
        while (pr < rows && m[pr * cols + col] == 0) ++pr;
        if (pr == rows) continue;
        if (pr != r)
            for (std::size_t j = 0; j < cols; ++j) std::swap(m[r * cols + j], m[pr * cols + j]);
        const mpz_class& pivot = m[r * cols + col];
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = col + 1; j < cols; ++j) {
                mpz_class t = pivot * m[i * cols + j] - m[i * cols + col] * m[r * cols + j];
                mpz_divexact(m[i * cols + j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            m[i * cols + col] = 0;
        }
        prev = pivot;
        ++r;
    }
    return r;
}

// Some exact solution of A X = B, or nullopt when inconsistent.
// Free variables are set to zero.
inline std::optional<Mat> solve(const Mat& a, const Mat& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("solve: row count mismatch");
    Mat aug(a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j) aug(i, a.cols() + j) = b(i, j);
    }
    const Rref rr = rref(aug);
    for (std::size_t p : rr.pivots)
        if (p >= a.cols()) return std::nullopt;
    Mat x(a.cols(), b.cols());
    for (std::size_t i = 0; i < rr.rank; ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) x(rr.pivots[i], j) = rr.mat(i, a.cols() + j);
    return x;
}

// Canonical null-space basis: one column vector per free column of the
// reduced echelon form, in ascending free-column order.
inline std::vector<Mat> nullspace(const Mat& a) {
    const Rref rr = rref(a);
    std::vector<bool> is_pivot(a.cols(), false);
    for (std::size_t p : rr.pivots) is_pivot[p] = true;
    std::vector<Mat> basis;
    for (std::size_t f = 0; f < a.cols(); ++f) {
        if (is_pivot[f]) continue;
        Mat v(a.cols(), 1);
        v(f, 0) = 1;
        for (std::size_t i = 0; i < rr.rank; ++i) v(rr.pivots[i], 0) = -rr.mat(i, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

struct FullRankFactorization {
    Mat f;  // full column rank
    Mat g;  // full row rank, reduced echelon rows
    std::size_t rank = 0;
};

// A = F·G with F the pivot columns of A and G the nonzero rows of rref(A).
// The zero matrix yields the empty factorization (rank 0).
inline FullRankFactorization full_rank_factorization(const Mat& a) {
    const Rref rr = rref(a);
    const std::size_t r = rr.rank;
    Mat f(a.rows(), r), g(r, a.cols());
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) g(i, j) = rr.mat(i, j);
    for (std::size_t idx = 0; idx < r; ++idx)
        for (std::size_t i = 0; i < a.rows(); ++i) f(i, idx) = a(i, rr.pivots[idx]);
    return FullRankFactorization{std::move(f), std::move(g), r};
}

inline Mat inverse(const Mat& a) {
    if (!a.is_square()) throw std::invalid_argument("inverse: matrix must be square");
    auto x = solve(a, Mat::identity(a.rows()));
    if (!x) throw std::domain_error("inverse: matrix is singular");
    return *std::move(x);
}

}  // namespace hcm
