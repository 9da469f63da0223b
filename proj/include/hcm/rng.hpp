#pragma once

#include "circulant.hpp"
#include "matrix.hpp"

#include <cstdint>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace hcm {

// splitmix64 — the single fixed generator behind every randomized campaign.
// Bounded draws use plain modulo; reproducibility matters here, statistical
// perfection does not.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    std::uint64_t below(std::uint64_t bound) {
        if (bound == 0) throw std::invalid_argument("SplitMix64::below: zero bound");
        return next() % bound;
    }

    long range(long lo, long hi) {
        if (lo > hi) throw std::invalid_argument("SplitMix64::range: empty range");
        return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo) + 1));
    }

private:
    std::uint64_t state_;
};

// Stream for trial `index` of a campaign seeded with `seed`. Trials drawn
// this way are independent of execution order, so campaigns may run their
// trials in any order (or in parallel) with identical results.
inline SplitMix64 trial_stream(std::uint64_t seed, std::uint64_t index) {
    return SplitMix64(seed ^ (0x9E3779B97F4A7C15ULL * (index + 1)));
}

inline Rational random_rational(SplitMix64& g, long num_lo, long num_hi, long den_max) {
    return Rational(g.range(num_lo, num_hi), g.range(1, den_max));
}

inline Mat random_int_mat(SplitMix64& g, std::size_t n, long lo, long hi) {
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = Rational(g.range(lo, hi));
    return m;
}

inline Mat random_rational_mat(SplitMix64& g, std::size_t rows, std::size_t cols, long num_lo,
                               long num_hi, long den_max) {
    Mat m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = random_rational(g, num_lo, num_hi, den_max);
    return m;
}

// Fisher-Yates; values 1..n.
inline std::vector<std::size_t> random_permutation(SplitMix64& g, std::size_t n) {
    std::vector<std::size_t> p(n);
    for (std::size_t i = 0; i < n; ++i) p[i] = i + 1;
    for (std::size_t i = n; i > 1; --i) {
        const std::size_t j = static_cast<std::size_t>(g.below(i));
        std::swap(p[i - 1], p[j]);
    }
    return p;
}

inline CirculantCombination random_circulant_combo(SplitMix64& g, std::size_t n) {
    std::vector<long> w(n);
    long total = 0;
    for (auto& v : w) {
        v = g.range(0, 4);
        total += v;
    }
    if (total == 0) {
        w[n - 1] = 1;
        total = 1;
    }
    std::vector<Rational> coeffs(n);
    for (std::size_t j = 0; j < n; ++j) coeffs[j] = Rational(w[j], total);
    return CirculantCombination(n, std::move(coeffs));
}

}  // namespace hcm
