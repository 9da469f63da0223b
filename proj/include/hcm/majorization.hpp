#pragma once

#include "circulant.hpp"
#include "maxflow.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace hcm {

struct HcWitness {
    CirculantCombination combo;
};

struct HWitness {
    Mat d;
};

namespace detail {

inline void require_square_pair(const Mat& x, const Mat& y, const char* what) {
    if (!x.is_square() || !y.is_square() || x.rows() != y.rows() || x.rows() == 0)
        throw std::invalid_argument(std::string(what) + ": need two square matrices of equal positive size");
}

}  // namespace detail

// Decides X ≺ Y in the circulant order: X = (Σ r_j C_j) ⊙ Y for some
// convex coefficients r. Every position with y ≠ 0 forces the coefficient
// of its diagonal; positions with y = 0 force x = 0. Feasibility then only
// requires the forced coefficients to be consistent, inside [0,1], to sum
// to at most 1, and the remaining deficit to fit into the free diagonals.
// The witness fills free diagonals greedily in increasing label order.
inline std::optional<HcWitness> decide_hc(const Mat& x, const Mat& y) {
    detail::require_square_pair(x, y, "decide_hc");
    const std::size_t n = x.rows();
    std::vector<std::optional<Rational>> forced(n);
    for (std::size_t h = 0; h < n; ++h)
        for (std::size_t k = 0; k < n; ++k) {
            const std::size_t j = diag_index(n, h, k);
            if (y(h, k).is_zero()) {
                if (!x(h, k).is_zero()) return std::nullopt;
                continue;
            }
            const Rational ratio = x(h, k) / y(h, k);
            if (ratio.sign() < 0 || ratio > Rational(1)) return std::nullopt;
            if (forced[j - 1]) {
                if (*forced[j - 1] != ratio) return std::nullopt;
            } else {
                forced[j - 1] = ratio;
            }
        }
    Rational forced_sum;
    std::size_t free_count = 0;
    for (const auto& f : forced)
        f ? void(forced_sum += *f) : void(++free_count);
    if (forced_sum > Rational(1)) return std::nullopt;
    Rational deficit = Rational(1) - forced_sum;
    if (deficit > Rational(static_cast<long>(free_count))) return std::nullopt;
    std::vector<Rational> coeffs(n);
    for (std::size_t j = 0; j < n; ++j) {
        if (forced[j]) {
            coeffs[j] = *forced[j];
        } else {
            coeffs[j] = deficit > Rational(1) ? Rational(1) : deficit;
            deficit -= coeffs[j];
        }
    }
    return HcWitness{CirculantCombination(n, std::move(coeffs))};
}

// Decides X ≺ Y in the doubly stochastic order: X = D ⊙ Y. Forced entries
// are x/y; completing the free entries to a doubly stochastic matrix is a
// transportation feasibility problem, decided by exact max-flow after
// scaling the residual row/column sums to integers.
inline std::optional<HWitness> decide_h(const Mat& x, const Mat& y) {
    detail::require_square_pair(x, y, "decide_h");
    const std::size_t n = x.rows();
    Mat d(n, n);
    std::vector<std::vector<bool>> free_cell(n, std::vector<bool>(n, false));
    std::vector<Rational> row_residual(n, Rational(1)), col_residual(n, Rational(1));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (y(i, j).is_zero()) {
                if (!x(i, j).is_zero()) return std::nullopt;
                free_cell[i][j] = true;
                continue;
            }
            const Rational v = x(i, j) / y(i, j);
            if (v.sign() < 0 || v > Rational(1)) return std::nullopt;
            d(i, j) = v;
            row_residual[i] -= v;
            col_residual[j] -= v;
        }
    Rational res_total;
    for (std::size_t i = 0; i < n; ++i) {
        if (row_residual[i].sign() < 0 || col_residual[i].sign() < 0) return std::nullopt;
        res_total += row_residual[i];
    }
    mpz_class scale = 1;
    for (std::size_t i = 0; i < n; ++i) {
        mpz_class dr = row_residual[i].denominator(), dc = col_residual[i].denominator();
        mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), dr.get_mpz_t());
        mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), dc.get_mpz_t());
    }
    // Nodes: source, n rows, n cols, sink.
    MaxFlow net(2 * n + 2);
    const std::size_t source = 0, sink = 2 * n + 1;
    std::vector<std::vector<std::size_t>> cell_edge(n, std::vector<std::size_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        net.add_edge(source, 1 + i, row_residual[i].numerator() * (scale / row_residual[i].denominator()));
    for (std::size_t j = 0; j < n; ++j)
        net.add_edge(1 + n + j, sink, col_residual[j].numerator() * (scale / col_residual[j].denominator()));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (free_cell[i][j]) cell_edge[i][j] = net.add_edge(1 + i, 1 + n + j, scale);
    const mpz_class want = res_total.numerator() * (scale / res_total.denominator());
    if (net.run(source, sink) != want) return std::nullopt;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (free_cell[i][j]) d(i, j) = Rational(net.flow(cell_edge[i][j]), scale);
    return HWitness{std::move(d)};
}

// Exact reconstruction checks.
inline bool verify_hc_witness(const Mat& x, const Mat& y, const HcWitness& w) {
    if (!x.is_square() || x.rows() != y.rows() || x.cols() != y.cols()) return false;
    if (w.combo.n() != x.rows()) return false;
    return hadamard(combo_to_matrix(w.combo), y) == x;
}

inline bool verify_h_witness(const Mat& x, const Mat& y, const HWitness& w) {
    if (!x.is_square() || x.rows() != y.rows() || x.cols() != y.cols()) return false;
    if (w.d.rows() != x.rows() || !is_doubly_stochastic(w.d)) return false;
    return hadamard(w.d, y) == x;
}

}  // namespace hcm
