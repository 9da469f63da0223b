#pragma once

#include "linalg.hpp"

#include <cstddef>
#include <functional>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

namespace hcm {

// Linear operator on the space of n×n matrices, stored as its n²×n² matrix
// in the standard basis. Column h·n + k is the row-major vectorization of
// the image of the (h,k) basis matrix (0-based); the same row-major
// convention fixes every vectorization in the project.
class OperatorRep {
public:
    OperatorRep(std::size_t n, Mat rep) : n_(n), rep_(std::move(rep)) {
        if (n_ == 0) throw std::invalid_argument("OperatorRep: dimension must be positive");
        if (rep_.rows() != n_ * n_ || rep_.cols() != n_ * n_)
            throw std::invalid_argument("OperatorRep: representation must be n²×n²");
    }

    static OperatorRep zero(std::size_t n) { return OperatorRep(n, Mat(n * n, n * n)); }
    static OperatorRep identity(std::size_t n) { return OperatorRep(n, Mat::identity(n * n)); }

    // Missing (h,k) keys mean the zero image. Keys are 0-based.
    static OperatorRep from_basis_images(std::size_t n,
                                         const std::map<std::pair<std::size_t, std::size_t>, Mat>& images) {
        Mat rep(n * n, n * n);
        for (const auto& [pos, image] : images) {
            const auto [h, k] = pos;
            if (h >= n || k >= n) throw std::invalid_argument("from_basis_images: position out of range");
            if (image.rows() != n || image.cols() != n)
                throw std::invalid_argument("from_basis_images: image shape mismatch");
            for (std::size_t r = 0; r < n; ++r)
                for (std::size_t c = 0; c < n; ++c) rep(r * n + c, h * n + k) = image(r, c);
        }
        return OperatorRep(n, std::move(rep));
    }

    static OperatorRep from_image_fn(std::size_t n,
                                     const std::function<Mat(std::size_t, std::size_t)>& image) {
        std::map<std::pair<std::size_t, std::size_t>, Mat> images;
        for (std::size_t h = 0; h < n; ++h)
            for (std::size_t k = 0; k < n; ++k) images.emplace(std::make_pair(h, k), image(h, k));
        return from_basis_images(n, images);
    }

    std::size_t n() const { return n_; }
    std::size_t dim() const { return n_ * n_; }
    const Mat& rep() const { return rep_; }

    Mat apply(const Mat& x) const {
        if (x.rows() != n_ || x.cols() != n_) throw std::invalid_argument("OperatorRep::apply: shape mismatch");
        return unvec(rep_ * vec(x), n_, n_);
    }

    Mat basis_image(std::size_t h, std::size_t k) const {
        if (h >= n_ || k >= n_) throw std::invalid_argument("OperatorRep::basis_image: position out of range");
        Mat img(n_, n_);
        for (std::size_t r = 0; r < n_; ++r)
            for (std::size_t c = 0; c < n_; ++c) img(r, c) = rep_(r * n_ + c, h * n_ + k);
        return img;
    }

    friend bool operator==(const OperatorRep& a, const OperatorRep& b) {
        return a.n_ == b.n_ && a.rep_ == b.rep_;
    }
    friend bool operator!=(const OperatorRep& a, const OperatorRep& b) { return !(a == b); }

private:
    std::size_t n_;
    Mat rep_;
};

inline OperatorRep compose(const OperatorRep& s, const OperatorRep& t) {
    if (s.n() != t.n()) throw std::invalid_argument("compose: dimension mismatch");
    return OperatorRep(s.n(), s.rep() * t.rep());
}

// In the orthonormal standard basis the adjoint is the transpose of the
// representation; the pairing identity itself is asserted in the tests.
inline OperatorRep adjoint(const OperatorRep& t) { return OperatorRep(t.n(), t.rep().transpose()); }

inline OperatorRep operator_pow(const OperatorRep& t, std::size_t e) {
    OperatorRep acc = OperatorRep::identity(t.n());
    for (std::size_t i = 0; i < e; ++i) acc = compose(acc, t);
    return acc;
}

enum class SubspaceKind { kernel, range, kernel_perp, range_perp };

struct SubspaceBasis {
    SubspaceKind which;
    std::size_t n = 0;            // ambient matrices are n×n
    std::vector<Mat> vectors;     // linearly independent, canonical
    std::size_t dim() const { return vectors.size(); }
};

namespace detail {

// Canonical basis of the span: nonzero rows of the reduced echelon form of
// the stacked vectorizations. Equal subspaces yield equal bases.
inline std::vector<Mat> canonical_span(std::size_t n, const std::vector<Mat>& vectors) {
    if (vectors.empty()) return {};
    Mat rows(vectors.size(), n * n);
    for (std::size_t i = 0; i < vectors.size(); ++i) {
        const Mat v = vec(vectors[i]);
        for (std::size_t j = 0; j < n * n; ++j) rows(i, j) = v(j, 0);
    }
    const Rref rr = rref(rows);
    std::vector<Mat> out;
    for (std::size_t i = 0; i < rr.rank; ++i) {
        Mat v(n * n, 1);
        for (std::size_t j = 0; j < n * n; ++j) v(j, 0) = rr.mat(i, j);
        out.push_back(unvec(v, n, n));
    }
    return out;
}

}  // namespace detail

inline SubspaceBasis kernel_basis(const OperatorRep& t) {
    std::vector<Mat> vs;
    for (const Mat& v : nullspace(t.rep())) vs.push_back(unvec(v, t.n(), t.n()));
    return SubspaceBasis{SubspaceKind::kernel, t.n(), detail::canonical_span(t.n(), vs)};
}

inline SubspaceBasis range_basis(const OperatorRep& t) {
    std::vector<Mat> vs;
    for (std::size_t c = 0; c < t.dim(); ++c) {
        Mat v(t.dim(), 1);
        for (std::size_t r = 0; r < t.dim(); ++r) v(r, 0) = t.rep()(r, c);
        vs.push_back(unvec(v, t.n(), t.n()));
    }
    return SubspaceBasis{SubspaceKind::range, t.n(), detail::canonical_span(t.n(), vs)};
}

// Orthogonal complement under the trace inner product, which coincides
// with the dot product of vectorizations.
inline SubspaceBasis perp_basis(const SubspaceBasis& b) {
    const std::size_t n = b.n;
    Mat rows(b.vectors.size(), n * n);
    for (std::size_t i = 0; i < b.vectors.size(); ++i) {
        const Mat v = vec(b.vectors[i]);
        for (std::size_t j = 0; j < n * n; ++j) rows(i, j) = v(j, 0);
    }
    std::vector<Mat> vs;
    for (const Mat& v : nullspace(rows)) vs.push_back(unvec(v, n, n));
    SubspaceKind which;
    switch (b.which) {
        case SubspaceKind::kernel: which = SubspaceKind::kernel_perp; break;
        case SubspaceKind::range: which = SubspaceKind::range_perp; break;
        case SubspaceKind::kernel_perp: which = SubspaceKind::kernel; break;
        case SubspaceKind::range_perp: which = SubspaceKind::range; break;
        default: throw std::logic_error("perp_basis: unknown kind");
    }
    return SubspaceBasis{which, n, detail::canonical_span(n, vs)};
}

inline SubspaceBasis subspace_basis(const OperatorRep& t, SubspaceKind which) {
    switch (which) {
        case SubspaceKind::kernel: return kernel_basis(t);
        case SubspaceKind::range: return range_basis(t);
        case SubspaceKind::kernel_perp: return perp_basis(kernel_basis(t));
        case SubspaceKind::range_perp: return perp_basis(range_basis(t));
    }
    throw std::logic_error("subspace_basis: unknown kind");
}

// Exact membership: vec(x) lies in the span of the basis vectorizations.
inline bool member(const SubspaceBasis& b, const Mat& x) {
    if (x.rows() != b.n || x.cols() != b.n) throw std::invalid_argument("member: shape mismatch");
    Mat cols(b.n * b.n, b.vectors.size());
    for (std::size_t c = 0; c < b.vectors.size(); ++c) {
        const Mat v = vec(b.vectors[c]);
        for (std::size_t r = 0; r < b.n * b.n; ++r) cols(r, c) = v(r, 0);
    }
    return solve(cols, vec(x)).has_value();
}

}  // namespace hcm
