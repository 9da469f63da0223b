#pragma once

#include "majorization.hpp"
#include "operator_space.hpp"
#include "rng.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <utility>
#include <variant>
#include <vector>

namespace hcm {

// U_j: the set of circulant diagonals touched by the images of the basis
// matrices living on source diagonal j.
struct DiagonalProfile {
    std::size_t n = 0;
    std::vector<std::set<std::size_t>> touched;  // touched[j-1] = U_j, labels 1..n

    const std::set<std::size_t>& at(std::size_t j) const {
        require_diag_label(n, j);
        return touched[j - 1];
    }
};

inline DiagonalProfile diagonal_profile(const OperatorRep& t) {
    const std::size_t n = t.n();
    DiagonalProfile profile{n, std::vector<std::set<std::size_t>>(n)};
    for (std::size_t j = 1; j <= n; ++j)
        for (std::size_t h = 0; h < n; ++h) {
            const Mat img = t.basis_image(h, sigma(n, j, h));
            for (std::size_t r = 0; r < n; ++r)
                for (std::size_t c = 0; c < n; ++c)
                    if (!img(r, c).is_zero()) profile.touched[j - 1].insert(diag_index(n, r, c));
        }
    return profile;
}

// Accepting certificate: the diagonal map P together with the support
// evidence it was read from. Diagonals with empty support get the smallest
// label unused by any forced diagonal, so P need not be injective there;
// a permutation completion always exists.
struct PreserverCertificate {
    std::vector<std::size_t> p;  // p[j-1] = P(j), labels 1..n
    DiagonalProfile profile;

    std::size_t map(std::size_t j) const {
        require_diag_label(profile.n, j);
        return p[j - 1];
    }
};

// One touched-target observation: the image of the basis matrix at the
// 0-based position (h,k) on source diagonal `source_diag` has a nonzero
// entry on circulant diagonal `target_diag`.
struct DiagonalEvidence {
    std::size_t source_diag = 0;
    std::size_t target_diag = 0;
    std::size_t h = 0, k = 0;
};

struct PreserverRefutation {
    enum class Kind { diagonal_split, diagonal_collision };
    Kind kind;
    DiagonalEvidence first, second;
    // Concrete (k, B) with T(C_k ⊙ B) not circulant-majorized by T(B),
    // when the confirmation search finds one. k is a diagonal label.
    std::optional<std::pair<std::size_t, Mat>> counterexample;
};

using PreserverDecision = std::variant<PreserverCertificate, PreserverRefutation>;

inline bool accepted(const PreserverDecision& d) {
    return std::holds_alternative<PreserverCertificate>(d);
}
inline const PreserverCertificate& certificate(const PreserverDecision& d) {
    return std::get<PreserverCertificate>(d);
}
inline const PreserverRefutation& refutation(const PreserverDecision& d) {
    return std::get<PreserverRefutation>(d);
}
// Accessors return references into the decision; keep it alive.
const PreserverCertificate& certificate(PreserverDecision&&) = delete;
const PreserverRefutation& refutation(PreserverDecision&&) = delete;

// Smallest diagonal label k whose shifted pair (T(C_k ⊙ B), T(B)) fails the
// circulant majorization test, if any.
inline std::optional<std::size_t> first_failing_shift(const OperatorRep& t, const Mat& b) {
    const Mat tb = t.apply(b);
    for (std::size_t k = 1; k <= t.n(); ++k)
        if (!decide_hc(t.apply(hadamard(circulant_perm(t.n(), k), b)), tb)) return k;
    return std::nullopt;
}

struct OracleResult {
    bool ok = true;
    std::optional<std::pair<std::size_t, Mat>> failure;  // (diagonal label k, B)
};

// Sampling check of the defining preservation property on random B with
// integer entries in -3..3: a sound refuter and a statistical confirmer.
inline OracleResult randomized_preserver_check(const OperatorRep& t, std::size_t trials,
                                               std::uint64_t seed) {
    for (std::size_t trial = 0; trial < trials; ++trial) {
        SplitMix64 g = trial_stream(seed, trial);
        const Mat b = random_int_mat(g, t.n(), -3, 3);
        if (auto k = first_failing_shift(t, b)) return OracleResult{false, std::make_pair(*k, b)};
    }
    return OracleResult{true, std::nullopt};
}

namespace detail {

inline DiagonalEvidence find_evidence(const OperatorRep& t, std::size_t j, std::size_t target) {
    const std::size_t n = t.n();
    for (std::size_t h = 0; h < n; ++h) {
        const std::size_t k = sigma(n, j, h);
        const Mat img = t.basis_image(h, k);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c)
                if (!img(r, c).is_zero() && diag_index(n, r, c) == target)
                    return DiagonalEvidence{j, target, h, k};
    }
    throw std::logic_error("find_evidence: target not touched");
}

inline std::optional<std::pair<std::size_t, Mat>> confirm_refutation(const OperatorRep& t,
                                                                     std::size_t budget,
                                                                     std::uint64_t seed) {
    // Canonical candidates first, then the seeded random budget.
    for (const Mat& b : {Mat::identity(t.n()), Mat::ones(t.n(), t.n())})
        if (auto k = first_failing_shift(t, b)) return std::make_pair(*k, b);
    const OracleResult r = randomized_preserver_check(t, budget, seed);
    return r.failure;
}

}  // namespace detail

// Structural decision: T preserves the circulant order iff every U_j has at
// most one element and the nonempty U_j are pairwise disjoint. Acceptance
// yields the diagonal map P; rejection returns the violating evidence plus,
// when the confirmation search succeeds, a concrete counterexample pair.
inline PreserverDecision decide_hc_preserver(const OperatorRep& t, std::size_t confirm_budget = 64,
                                             std::uint64_t confirm_seed = 0) {
    const std::size_t n = t.n();
    const DiagonalProfile profile = diagonal_profile(t);
    for (std::size_t j = 1; j <= n; ++j) {
        const auto& u = profile.at(j);
        if (u.size() >= 2) {
            auto it = u.begin();
            const std::size_t t1 = *it++;
            const std::size_t t2 = *it;
            return PreserverRefutation{PreserverRefutation::Kind::diagonal_split,
                                       detail::find_evidence(t, j, t1), detail::find_evidence(t, j, t2),
                                       detail::confirm_refutation(t, confirm_budget, confirm_seed)};
        }
    }
    for (std::size_t j = 1; j <= n; ++j) {
        if (profile.at(j).empty()) continue;
        for (std::size_t r = j + 1; r <= n; ++r) {
            if (profile.at(r).empty()) continue;
            const std::size_t tj = *profile.at(j).begin();
            if (tj != *profile.at(r).begin()) continue;
            return PreserverRefutation{PreserverRefutation::Kind::diagonal_collision,
                                       detail::find_evidence(t, j, tj), detail::find_evidence(t, r, tj),
                                       detail::confirm_refutation(t, confirm_budget, confirm_seed)};
        }
    }
    std::set<std::size_t> used;
    for (std::size_t j = 1; j <= n; ++j)
        for (std::size_t v : profile.at(j)) used.insert(v);
    std::vector<std::size_t> p(n);
    for (std::size_t j = 1; j <= n; ++j) {
        if (!profile.at(j).empty()) {
            p[j - 1] = *profile.at(j).begin();
        } else {
            std::size_t v = 1;
            while (used.count(v)) ++v;
            p[j - 1] = v;
        }
    }
    return PreserverCertificate{std::move(p), profile};
}

// Necessary condition for preserving the plain (doubly stochastic) order:
// images of distinct basis matrices must have disjoint supports. A pass is
// not sufficient; a violation is disqualifying (for n ≥ 3).
struct HmViolation {
    std::size_t i = 0, j = 0, k = 0, l = 0;  // 0-based basis positions (i,j) and (k,l)
    std::size_t row = 0, col = 0;            // 0-based nonzero position of the product
};

inline std::optional<HmViolation> hm_necessary_check(const OperatorRep& t) {
    const std::size_t n = t.n();
    for (std::size_t a = 0; a < n * n; ++a) {
        const Mat img_a = t.basis_image(a / n, a % n);
        if (img_a.is_zero()) continue;
        for (std::size_t b = a + 1; b < n * n; ++b) {
            const Mat prod = hadamard(img_a, t.basis_image(b / n, b % n));
            for (std::size_t r = 0; r < n; ++r)
                for (std::size_t c = 0; c < n; ++c)
                    if (!prod(r, c).is_zero())
                        return HmViolation{a / n, a % n, b / n, b % n, r, c};
        }
    }
    return std::nullopt;
}

// Draws an operator that maps each circulant diagonal j into diagonal p(j)
// through a random coefficient block, so the structural decision always
// accepts it. Blocks are occasionally degenerate (zero, rank-one, or with
// zeroed columns) to exercise nontrivial kernels and indices downstream.
inline OperatorRep random_preserver(std::size_t n, std::uint64_t seed,
                                    const std::optional<std::vector<std::size_t>>& perm = std::nullopt) {
    if (n == 0) throw std::invalid_argument("random_preserver: dimension must be positive");
    SplitMix64 g(seed);
    std::vector<std::size_t> p;
    if (perm) {
        p = *perm;
        if (p.size() != n) throw std::invalid_argument("random_preserver: permutation size mismatch");
        std::vector<bool> seen(n, false);
        for (std::size_t v : p) {
            if (v < 1 || v > n || seen[v - 1])
                throw std::invalid_argument("random_preserver: not a permutation of 1..n");
            seen[v - 1] = true;
        }
    } else {
        p = random_permutation(g, n);
    }
    Mat rep(n * n, n * n);
    for (std::size_t j = 1; j <= n; ++j) {
        Mat block = random_rational_mat(g, n, n, -3, 3, 2);
        switch (g.below(8)) {
            case 0:
                block = Mat(n, n);
                break;
            case 1: {  // rank one
                Mat u = random_int_mat(g, n, -2, 2), block2(n, n);
                for (std::size_t r = 0; r < n; ++r)
                    for (std::size_t c = 0; c < n; ++c) block2(r, c) = u(r, 0) * u(c, 1);
                block = std::move(block2);
                break;
            }
            case 2:  // thin support
                for (std::size_t c = 0; c < n; ++c)
                    if (g.below(2) == 0)
                        for (std::size_t r = 0; r < n; ++r) block(r, c) = 0;
                break;
            default:
                break;
        }
        for (std::size_t h = 0; h < n; ++h) {
            const std::size_t src = h * n + sigma(n, j, h);
            for (std::size_t h2 = 0; h2 < n; ++h2)
                rep(h2 * n + sigma(n, p[j - 1], h2), src) = block(h2, h);
        }
    }
    return OperatorRep(n, rep);
}

// For an accepted preserver, samples random members X of each of N(T),
// R(T), N(T)^⊥, R(T)^⊥ and random circulant combinations C, and checks
// that C ⊙ X stays in the same subspace.
inline bool verify_subspace_invariance(const OperatorRep& t, std::size_t trials, std::uint64_t seed) {
    if (!accepted(decide_hc_preserver(t)))
        throw std::invalid_argument("verify_subspace_invariance: operator must be an accepted preserver");
    const SubspaceBasis kernel = kernel_basis(t);
    const SubspaceBasis range = range_basis(t);
    const SubspaceBasis spaces[] = {kernel, range, perp_basis(kernel), perp_basis(range)};
    for (std::size_t trial = 0; trial < trials; ++trial) {
        SplitMix64 g = trial_stream(seed, trial);
        const Mat c = combo_to_matrix(random_circulant_combo(g, t.n()));
        for (const SubspaceBasis& space : spaces) {
            Mat x(t.n(), t.n());
            for (const Mat& v : space.vectors) x = x + random_rational(g, -3, 3, 2) * v;
            if (!member(space, hadamard(c, x))) return false;
        }
    }
    return true;
}

}  // namespace hcm
