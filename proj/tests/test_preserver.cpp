#include <hcm/geninv.hpp>
#include <hcm/preserver.hpp>

#include <doctest.h>

#include "support/gen.hpp"
#include "support/helpers.hpp"

using namespace hcm;

namespace {

// The three fixed counterexample-style operators used across the suite
// (0-based basis positions).

OperatorRep spreading_op() {  // x_11 over three diagonals
    return OperatorRep::from_basis_images(3, {{{0, 0}, imat({{1, 0, 0}, {0, 0, 1}, {0, 1, 0}})}});
}

OperatorRep reversing_op() {  // accepted, P = (3, 2, 1)
    return OperatorRep::from_basis_images(
        3, {{{0, 0}, Mat::unit(3, 0, 1)},
            {{0, 1}, imat({{1, 0, 0}, {0, 1, 0}, {0, 0, 0}})},
            {{1, 1}, Mat::unit(3, 1, 2)},
            {{1, 2}, imat({{1, 0, 0}, {0, -1, 0}, {0, 0, 0}})},
            {{2, 0}, Mat::identity(3)},
            {{2, 2}, Mat::unit(3, 2, 0)}});
}

OperatorRep cycling_op() {  // accepted, P = (2, 3, 1)
    return OperatorRep::from_basis_images(3, {{{0, 0}, circulant_perm(3, 1)},
                                              {{0, 1}, circulant_perm(3, 2)},
                                              {{0, 2}, circulant_perm(3, 3)}});
}

}  // namespace

TEST_CASE("diagonal profiles") {
    const DiagonalProfile identity = diagonal_profile(OperatorRep::identity(3));
    for (std::size_t j = 1; j <= 3; ++j) CHECK(identity.at(j) == std::set<std::size_t>{j});

    const DiagonalProfile spread = diagonal_profile(spreading_op());
    CHECK(spread.at(3) == std::set<std::size_t>{1, 2, 3});
    CHECK(spread.at(1).empty());
    CHECK(spread.at(2).empty());

    const DiagonalProfile rev = diagonal_profile(reversing_op());
    CHECK(rev.at(1) == std::set<std::size_t>{3});
    CHECK(rev.at(2).empty());  // every basis matrix on diagonal 2 maps to zero
    CHECK(rev.at(3) == std::set<std::size_t>{1});
}

TEST_CASE("decisions on the fixed operators") {
    const PreserverDecision split = decide_hc_preserver(spreading_op());
    REQUIRE(!accepted(split));
    const auto& ref = refutation(split);
    CHECK(ref.kind == PreserverRefutation::Kind::diagonal_split);
    CHECK(ref.first.source_diag == 3);
    CHECK(ref.second.source_diag == 3);
    CHECK(ref.first.target_diag != ref.second.target_diag);
    REQUIRE(ref.counterexample.has_value());
    const auto& [k, b] = *ref.counterexample;
    CHECK(!decide_hc(spreading_op().apply(hadamard(circulant_perm(3, k), b)),
                     spreading_op().apply(b))
               .has_value());

    const PreserverDecision rev = decide_hc_preserver(reversing_op());
    REQUIRE(accepted(rev));
    CHECK(certificate(rev).p == std::vector<std::size_t>{3, 2, 1});

    const PreserverDecision cyc = decide_hc_preserver(cycling_op());
    REQUIRE(accepted(cyc));
    CHECK(certificate(cyc).p == std::vector<std::size_t>{2, 3, 1});
}

TEST_CASE("evidence positions reproduce the violation") {
    const OperatorRep t = spreading_op();
    const PreserverDecision d = decide_hc_preserver(t);
    const auto& ref = refutation(d);
    for (const DiagonalEvidence& e : {ref.first, ref.second}) {
        CHECK(diag_index(3, e.h, e.k) == e.source_diag);
        const Mat img = t.basis_image(e.h, e.k);
        bool touches = false;
        for (std::size_t r = 0; r < 3; ++r)
            for (std::size_t c = 0; c < 3; ++c)
                touches |= !img(r, c).is_zero() && diag_index(3, r, c) == e.target_diag;
        CHECK(touches);
    }
}

TEST_CASE("acceptance implies the basis-level shift equality") {
    SplitMix64 g(61);
    for (int trial = 0; trial < 12; ++trial) {
        const std::size_t n = 3 + g.below(2);
        const OperatorRep t = random_preserver(n, g.next());
        const PreserverDecision d = decide_hc_preserver(t);
        REQUIRE(accepted(d));
        const auto& cert = certificate(d);
        for (std::size_t j = 1; j <= n; ++j) {
            const Mat cpj = circulant_perm(n, cert.map(j));
            for (std::size_t h = 0; h < n; ++h)
                for (std::size_t k = 0; k < n; ++k) {
                    const Mat img = t.basis_image(h, k);
                    if (diag_index(n, h, k) == j)
                        CHECK(hadamard(cpj, img) == img);  // dominated by C_{P(j)}
                    else
                        CHECK(hadamard(cpj, img).is_zero());
                }
        }
        // the full equality T(C_j ⊙ B) = C_{P(j)} ⊙ T(B) on random B
        for (int inner = 0; inner < 3; ++inner) {
            const Mat b = random_int_mat(g, n, -3, 3);
            for (std::size_t j = 1; j <= n; ++j)
                CHECK(t.apply(hadamard(circulant_perm(n, j), b)) ==
                      hadamard(circulant_perm(n, cert.map(j)), t.apply(b)));
        }
    }
}

TEST_CASE("generated preservers honor a requested permutation") {
    SplitMix64 g(62);
    for (int trial = 0; trial < 10; ++trial) {
        const std::size_t n = 3 + g.below(3);
        const std::vector<std::size_t> p = random_permutation(g, n);
        const OperatorRep t = random_preserver(n, g.next(), p);
        const PreserverDecision d = decide_hc_preserver(t);
        REQUIRE(accepted(d));
        const auto& cert = certificate(d);
        for (std::size_t j = 1; j <= n; ++j)
            if (!cert.profile.at(j).empty()) CHECK(cert.map(j) == p[j - 1]);
    }
    CHECK_THROWS_AS(random_preserver(3, 0, std::vector<std::size_t>{1, 1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(random_preserver(3, 0, std::vector<std::size_t>{1, 2}), std::invalid_argument);
}

TEST_CASE("accepted maps complete to a permutation") {
    SplitMix64 g(67);
    for (int trial = 0; trial < 25; ++trial) {
        const std::size_t n = 3 + g.below(3);
        const OperatorRep t = random_preserver(n, g.next());
        const PreserverDecision d = decide_hc_preserver(t);
        REQUIRE(accepted(d));
        const auto& cert = certificate(d);
        // forced targets are pairwise distinct and no assignment lands in a
        // foreign support set
        std::set<std::size_t> forced;
        for (std::size_t j = 1; j <= n; ++j) {
            for (std::size_t r = 1; r <= n; ++r)
                if (r != j) CHECK(!cert.profile.at(r).count(cert.map(j)));
            if (!cert.profile.at(j).empty()) {
                CHECK(!forced.count(cert.map(j)));
                forced.insert(cert.map(j));
            }
        }
        // the free sources can absorb the unused labels bijectively
        std::set<std::size_t> unused;
        for (std::size_t v = 1; v <= n; ++v)
            if (!forced.count(v)) unused.insert(v);
        std::vector<std::size_t> completion(n, 0);
        for (std::size_t j = 1; j <= n; ++j) {
            if (!cert.profile.at(j).empty()) {
                completion[j - 1] = cert.map(j);
            } else {
                REQUIRE(!unused.empty());
                completion[j - 1] = *unused.begin();
                unused.erase(unused.begin());
            }
        }
        CHECK(std::set<std::size_t>(completion.begin(), completion.end()).size() == n);
    }
}

TEST_CASE("sampling oracle against the structural decision") {
    SplitMix64 g(63);
    std::size_t rejected = 0;
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = 3;
        const OperatorRep t = (trial % 2 == 0) ? gen::corrupted_preserver(g, n)
                                               : random_preserver(n, g.next());
        const PreserverDecision d = decide_hc_preserver(t, 64, 5);
        const OracleResult oracle = randomized_preserver_check(t, 32, 7);
        if (accepted(d)) {
            CHECK(oracle.ok);
        } else {
            ++rejected;
            REQUIRE(refutation(d).counterexample.has_value());
            const auto& [k, b] = *refutation(d).counterexample;
            CHECK(!decide_hc(t.apply(hadamard(circulant_perm(n, k), b)), t.apply(b)).has_value());
        }
    }
    CHECK(rejected > 0);
    // the sampling check alone refutes the spreading operator
    CHECK(!randomized_preserver_check(spreading_op(), 16, 0).ok);
}

TEST_CASE("necessary condition for the doubly stochastic order") {
    CHECK(!hm_necessary_check(spreading_op()).has_value());
    CHECK(!hm_necessary_check(OperatorRep::zero(3)).has_value());
    const auto v = hm_necessary_check(reversing_op());
    REQUIRE(v.has_value());
    CHECK(v->i == 0);
    CHECK(v->j == 1);
    CHECK(v->k == 1);
    CHECK(v->l == 2);
    CHECK(v->row == 0);
    CHECK(v->col == 0);
}

TEST_CASE("composition of accepted preservers") {
    SplitMix64 g(64);
    for (int trial = 0; trial < 10; ++trial) {
        const std::size_t n = 3 + g.below(2);
        const OperatorRep t1 = random_preserver(n, g.next()), t2 = random_preserver(n, g.next());
        const OperatorRep comp = compose(t1, t2);
        const PreserverDecision dc = decide_hc_preserver(comp);
        REQUIRE(accepted(dc));
        const PreserverDecision d1 = decide_hc_preserver(t1), d2 = decide_hc_preserver(t2);
        const auto& c1 = certificate(d1);
        const auto& c2 = certificate(d2);
        const auto& cc = certificate(dc);
        for (std::size_t j = 1; j <= n; ++j)
            if (!cc.profile.at(j).empty()) CHECK(cc.map(j) == c1.map(c2.map(j)));
    }
}

TEST_CASE("inheritance smoke test") {
    SplitMix64 g(65);
    for (int trial = 0; trial < 6; ++trial) {
        const OperatorRep t = random_preserver(3, g.next());
        const PreserverDecision dt = decide_hc_preserver(t);
        const auto& cert = certificate(dt);
        const PreserverDecision da = decide_hc_preserver(adjoint(t));
        const PreserverDecision dm = decide_hc_preserver(moore_penrose(t));
        REQUIRE(accepted(da));
        REQUIRE(accepted(dm));
        CHECK(accepted(decide_hc_preserver(drazin(t))));
        // forced diagonals of the adjoint invert the original map
        const auto& ca = certificate(da);
        for (std::size_t k = 1; k <= 3; ++k) {
            if (ca.profile.at(k).empty()) continue;
            const std::size_t tsrc = ca.map(k);
            if (!cert.profile.at(tsrc).empty()) CHECK(cert.map(tsrc) == k);
        }
        const auto& cm = certificate(dm);
        for (std::size_t k = 1; k <= 3; ++k) {
            if (cm.profile.at(k).empty()) continue;
            const std::size_t tsrc = cm.map(k);
            if (!cert.profile.at(tsrc).empty()) CHECK(cert.map(tsrc) == k);
        }
    }
}

TEST_CASE("subspace invariance for accepted preservers") {
    SplitMix64 g(66);
    for (int trial = 0; trial < 5; ++trial)
        CHECK(verify_subspace_invariance(random_preserver(3, g.next()), 4, g.next()));
    CHECK(verify_subspace_invariance(reversing_op(), 6, 0));
    CHECK(verify_subspace_invariance(cycling_op(), 6, 0));
    CHECK_THROWS_AS(verify_subspace_invariance(spreading_op(), 1, 0), std::invalid_argument);
}

TEST_CASE("non-circulant multipliers can leave the range") {
    // the fixed counterexample: X = E_11 + E_22 stays in the range under
    // circulant multipliers but leaves it under a plain doubly stochastic one
    const OperatorRep t = OperatorRep::from_basis_images(
        3, {{{0, 0}, Mat::unit(3, 0, 1)},
            {{0, 1}, imat({{1, 0, 0}, {0, 1, 0}, {0, 0, 0}})},
            {{1, 1}, Mat::unit(3, 1, 2)},
            {{2, 0}, Mat::unit(3, 2, 2)},
            {{2, 2}, Mat::unit(3, 2, 0)}});
    REQUIRE(accepted(decide_hc_preserver(t)));
    const Mat x = imat({{1, 0, 0}, {0, 1, 0}, {0, 0, 0}});
    const Mat p = imat({{1, 0, 0}, {0, 0, 1}, {0, 1, 0}});
    const SubspaceBasis range = range_basis(t);
    CHECK(member(range, x));
    CHECK(is_doubly_stochastic(p));
    CHECK(!as_circulant_combo(p).has_value());
    CHECK(!member(range, hadamard(p, x)));
}
