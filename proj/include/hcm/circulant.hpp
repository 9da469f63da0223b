#pragma once

#include "matrix.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace hcm {

// Circulant diagonals carry labels 1..n; label n is the main diagonal,
// matching C_n = C^n = I for the basic cyclic shift C.

inline void require_diag_label(std::size_t n, std::size_t j) {
    if (j < 1 || j > n) throw std::invalid_argument("circulant: diagonal label out of range");
}

// The cyclic permutation behind C_j: 0-based row h maps to column (h + j) mod n.
inline std::size_t sigma(std::size_t n, std::size_t j, std::size_t h) {
    require_diag_label(n, j);
    if (h >= n) throw std::invalid_argument("sigma: row index out of range");
    return (h + j) % n;
}

// Label of the circulant diagonal through 0-based position (h, k).
inline std::size_t diag_index(std::size_t n, std::size_t h, std::size_t k) {
    if (h >= n || k >= n) throw std::invalid_argument("diag_index: position out of range");
    const std::size_t d = (k + n - h) % n;
    return d == 0 ? n : d;
}

// The circulant permutation matrix C_j, j in 1..n.
inline Mat circulant_perm(std::size_t n, std::size_t j) {
    require_diag_label(n, j);
    Mat m(n, n);
    for (std::size_t h = 0; h < n; ++h) m(h, sigma(n, j, h)) = 1;
    return m;
}

// Coefficients r_1..r_n of a convex combination Σ r_j C_j.
class CirculantCombination {
public:
    CirculantCombination(std::size_t n, std::vector<Rational> coeffs)
        : n_(n), coeffs_(std::move(coeffs)) {
        if (n_ == 0 || coeffs_.size() != n_)
            throw std::invalid_argument("CirculantCombination: need exactly n coefficients");
        Rational sum;
        for (const auto& r : coeffs_) {
            if (r.sign() < 0) throw std::invalid_argument("CirculantCombination: negative coefficient");
            sum += r;
        }
        if (sum != Rational(1)) throw std::invalid_argument("CirculantCombination: coefficients must sum to 1");
    }

    static CirculantCombination point_mass(std::size_t n, std::size_t j) {
        require_diag_label(n, j);
        std::vector<Rational> c(n);
        c[j - 1] = 1;
        return CirculantCombination(n, std::move(c));
    }

    std::size_t n() const { return n_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    const Rational& coeff(std::size_t j) const {
        require_diag_label(n_, j);
        return coeffs_[j - 1];
    }

    friend bool operator==(const CirculantCombination& a, const CirculantCombination& b) {
        return a.n_ == b.n_ && a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const CirculantCombination& a, const CirculantCombination& b) {
        return !(a == b);
    }

private:
    std::size_t n_;
    std::vector<Rational> coeffs_;
};

inline Mat combo_to_matrix(const CirculantCombination& c) {
    const std::size_t n = c.n();
    Mat m(n, n);
    for (std::size_t h = 0; h < n; ++h)
        for (std::size_t k = 0; k < n; ++k) m(h, k) = c.coeff(diag_index(n, h, k));
    return m;
}

inline bool is_doubly_stochastic(const Mat& m) {
    if (!m.is_square() || m.rows() == 0) return false;
    const std::size_t n = m.rows();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (m(i, j).sign() < 0) return false;
    const Rational one(1);
    for (std::size_t i = 0; i < n; ++i) {
        Rational row_sum, col_sum;
        for (std::size_t j = 0; j < n; ++j) {
            row_sum += m(i, j);
            col_sum += m(j, i);
        }
        if (row_sum != one || col_sum != one) return false;
    }
    return true;
}

// The unique coefficient vector with M = Σ r_j C_j, when M is constant on
// every circulant diagonal, nonnegative, and the coefficients sum to 1.
inline std::optional<CirculantCombination> as_circulant_combo(const Mat& m) {
    if (!m.is_square() || m.rows() == 0) return std::nullopt;
    const std::size_t n = m.rows();
    std::vector<Rational> r(n);
    for (std::size_t j = 1; j <= n; ++j) r[j - 1] = m(0, sigma(n, j, 0));
    for (std::size_t h = 0; h < n; ++h)
        for (std::size_t k = 0; k < n; ++k)
            if (m(h, k) != r[diag_index(n, h, k) - 1]) return std::nullopt;
    Rational sum;
    for (const auto& v : r) {
        if (v.sign() < 0) return std::nullopt;
        sum += v;
    }
    if (sum != Rational(1)) return std::nullopt;
    return CirculantCombination(n, std::move(r));
}

}  // namespace hcm
