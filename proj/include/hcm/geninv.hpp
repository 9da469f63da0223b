#pragma once

#include "operator_space.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hcm {

class IndexTooLarge : public std::runtime_error {
public:
    explicit IndexTooLarge(std::size_t index)
        : std::runtime_error("group inverse does not exist: index " + std::to_string(index) + " exceeds 1"),
          index_(index) {}
    std::size_t index() const { return index_; }

private:
    std::size_t index_;
};

class NotInvertible : public std::runtime_error {
public:
    NotInvertible() : std::runtime_error("operator is not invertible") {}
};

// Smallest m with rank(A^m) = rank(A^{m+1}); rank(A^0) is the full dimension.
inline std::size_t index_of_mat(const Mat& a) {
    if (!a.is_square()) throw std::invalid_argument("index_of_mat: matrix must be square");
    std::size_t prev = a.rows();
    Mat power = a;
    std::size_t m = 0;
    while (true) {
        const std::size_t r = rank(power);
        if (r == prev) return m;
        prev = r;
        power = power * a;
        ++m;
    }
}

struct IndexedOperator {
    OperatorRep op;
    std::size_t index;
};

inline IndexedOperator index_of(const OperatorRep& t) { return IndexedOperator{t, index_of_mat(t.rep())}; }

// Moore-Penrose inverse through the full-rank factorization A = F·G:
// A† = Gᵀ(GGᵀ)⁻¹(FᵀF)⁻¹Fᵀ. The four defining equations are re-checked
// exactly before the result is returned.
inline Mat moore_penrose_mat(const Mat& a) {
    const FullRankFactorization fr = full_rank_factorization(a);
    const Mat ft = fr.f.transpose(), gt = fr.g.transpose();
    const Mat x = gt * inverse(fr.g * gt) * inverse(ft * fr.f) * ft;
    const Mat ax = a * x, xa = x * a;
    if (ax * a != a || x * ax != x || ax.transpose() != ax || xa.transpose() != xa)
        throw std::logic_error("moore_penrose_mat: verification of the defining equations failed");
    return x;
}

inline OperatorRep moore_penrose(const OperatorRep& t) {
    return OperatorRep(t.n(), moore_penrose_mat(t.rep()));
}

namespace detail {

inline Mat mat_pow(const Mat& a, std::size_t e) {
    Mat acc = Mat::identity(a.rows());
    for (std::size_t i = 0; i < e; ++i) acc = acc * a;
    return acc;
}

// U = A^m (A^{2m+1})† A^m at m = Ind A, then the three defining axioms are
// re-checked exactly.
inline Mat drazin_mat(const Mat& a, std::size_t m) {
    const Mat am = mat_pow(a, m);
    const Mat u = am * moore_penrose_mat(am * am * a) * am;
    if (am * u * a != am || u * a * u != u || u * a != a * u)
        throw std::logic_error("drazin_mat: verification of the defining axioms failed");
    return u;
}

}  // namespace detail

inline OperatorRep drazin(const OperatorRep& t) {
    return OperatorRep(t.n(), detail::drazin_mat(t.rep(), index_of_mat(t.rep())));
}

inline OperatorRep group_inverse(const OperatorRep& t) {
    const std::size_t m = index_of_mat(t.rep());
    if (m > 1) throw IndexTooLarge(m);
    return OperatorRep(t.n(), detail::drazin_mat(t.rep(), m));
}

inline OperatorRep inverse(const OperatorRep& t) {
    auto x = solve(t.rep(), Mat::identity(t.dim()));
    if (!x) throw NotInvertible();
    return OperatorRep(t.n(), *std::move(x));
}

}  // namespace hcm
