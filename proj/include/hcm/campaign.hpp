#pragma once

#include "geninv.hpp"
#include "json_io.hpp"
#include "preserver.hpp"

#include <chrono>
#include <cstdint>
#include <string>
#include <vector>

namespace hcm {

// Seeded randomized verification campaigns behind the `verify` subcommand.
// Every trial derives its own stream from (seed, trial index), so reports
// do not depend on execution order.

struct CampaignReport {
    std::string theorem;
    std::size_t n = 0;
    std::size_t trials = 0;
    std::uint64_t seed = 0;
    std::size_t applicable = 0;  // trials where the checked property applied
    std::vector<nlohmann::json> failures;
    double elapsed_seconds = 0.0;

    bool pass() const { return failures.empty(); }
};

inline const std::vector<std::string>& campaign_names() {
    static const std::vector<std::string> names = {"adjoint", "mp",         "drazin",  "group",
                                                   "inverse", "invariance", "compose", "implication"};
    return names;
}

// Deterministic payload; elapsed time is reported separately so identical
// inputs always serialize to identical bytes.
inline nlohmann::json to_json(const CampaignReport& r) {
    return nlohmann::json{{"theorem", r.theorem}, {"n", r.n},
                          {"trials", r.trials},   {"seed", r.seed},
                          {"applicable", r.applicable}, {"failures", r.failures}};
}

namespace detail {

inline nlohmann::json campaign_failure(std::size_t trial, const std::string& reason,
                                       nlohmann::json extra = nlohmann::json::object()) {
    extra["trial"] = trial;
    extra["reason"] = reason;
    return extra;
}

// Inheritance campaigns: draw a preserver, derive the requested operator,
// and require the derived operator to be accepted too.
inline void run_inheritance_trial(const std::string& kind, std::size_t n, std::size_t trial,
                                  std::uint64_t seed, CampaignReport& report) {
    const std::uint64_t op_seed = trial_stream(seed, trial).next();
    const OperatorRep t = random_preserver(n, op_seed);
    if (!accepted(decide_hc_preserver(t))) {
        report.failures.push_back(
            campaign_failure(trial, "generator produced a rejected operator", {{"operator", to_json(decide_hc_preserver(t))}}));
        return;
    }
    OperatorRep derived = t;  // overwritten below
    if (kind == "adjoint") {
        derived = adjoint(t);
    } else if (kind == "mp") {
        derived = moore_penrose(t);
    } else if (kind == "drazin") {
        derived = drazin(t);
    } else if (kind == "group") {
        if (index_of_mat(t.rep()) > 1) return;  // not applicable
        derived = group_inverse(t);
    } else if (kind == "inverse") {
        if (rank(t.rep()) != t.dim()) return;  // not applicable
        derived = inverse(t);
    } else {
        throw std::invalid_argument("unknown inheritance kind: " + kind);
    }
    ++report.applicable;
    const PreserverDecision decision = decide_hc_preserver(derived);
    if (!accepted(decision))
        report.failures.push_back(campaign_failure(
            trial, kind + " of an accepted preserver was rejected",
            {{"seed", op_seed}, {"operator", operator_to_json(t)}, {"decision", to_json(decision)}}));
}

inline void run_compose_trial(std::size_t n, std::size_t trial, std::uint64_t seed,
                              CampaignReport& report) {
    SplitMix64 g = trial_stream(seed, trial);
    const std::uint64_t s1 = g.next(), s2 = g.next();
    const OperatorRep t1 = random_preserver(n, s1), t2 = random_preserver(n, s2);
    const PreserverDecision d1 = decide_hc_preserver(t1), d2 = decide_hc_preserver(t2);
    const OperatorRep comp = compose(t1, t2);
    const PreserverDecision dc = decide_hc_preserver(comp);
    ++report.applicable;
    if (!accepted(d1) || !accepted(d2) || !accepted(dc)) {
        report.failures.push_back(campaign_failure(trial, "composition of accepted preservers was rejected",
                                                   {{"seed1", s1}, {"seed2", s2}}));
        return;
    }
    // Where the composed operator forces a target, it must be the
    // composition of the factors' maps.
    const auto& cert1 = certificate(d1);
    const auto& cert2 = certificate(d2);
    const auto& certc = certificate(dc);
    for (std::size_t j = 1; j <= n; ++j) {
        if (certc.profile.at(j).empty()) continue;
        if (certc.map(j) != cert1.map(cert2.map(j))) {
            report.failures.push_back(campaign_failure(
                trial, "composed diagonal map disagrees with the composition of the factors",
                {{"seed1", s1}, {"seed2", s2}, {"j", j}}));
            return;
        }
    }
}

inline void run_invariance_trial(std::size_t n, std::size_t trial, std::uint64_t seed,
                                 CampaignReport& report) {
    SplitMix64 g = trial_stream(seed, trial);
    const std::uint64_t op_seed = g.next(), check_seed = g.next();
    const OperatorRep t = random_preserver(n, op_seed);
    ++report.applicable;
    if (!verify_subspace_invariance(t, 3, check_seed))
        report.failures.push_back(campaign_failure(trial, "subspace invariance failed",
                                                   {{"seed", op_seed}, {"operator", operator_to_json(t)}}));
}

inline void run_implication_trial(std::size_t n, std::size_t trial, std::uint64_t seed,
                                  CampaignReport& report) {
    SplitMix64 g = trial_stream(seed, trial);
    const Mat y = random_int_mat(g, n, -3, 3);
    const Mat x = hadamard(combo_to_matrix(random_circulant_combo(g, n)), y);
    ++report.applicable;
    const auto hc = decide_hc(x, y);
    if (!hc || !verify_hc_witness(x, y, *hc)) {
        report.failures.push_back(campaign_failure(trial, "constructed circulant pair was not recognized",
                                                   {{"x", entries_to_json(x)}, {"y", entries_to_json(y)}}));
        return;
    }
    const auto h = decide_h(x, y);
    if (!h || !verify_h_witness(x, y, *h))
        report.failures.push_back(campaign_failure(trial, "circulant-majorized pair failed the doubly stochastic test",
                                                   {{"x", entries_to_json(x)}, {"y", entries_to_json(y)}}));
}

}  // namespace detail

inline CampaignReport run_campaign(const std::string& theorem, std::size_t n, std::size_t trials,
                                   std::uint64_t seed) {
    CampaignReport report;
    report.theorem = theorem;
    report.n = n;
    report.trials = trials;
    report.seed = seed;
    const auto start = std::chrono::steady_clock::now();
    for (std::size_t trial = 0; trial < trials; ++trial) {
        if (theorem == "adjoint" || theorem == "mp" || theorem == "drazin" || theorem == "group" ||
            theorem == "inverse")
            detail::run_inheritance_trial(theorem, n, trial, seed, report);
        else if (theorem == "compose")
            detail::run_compose_trial(n, trial, seed, report);
        else if (theorem == "invariance")
            detail::run_invariance_trial(n, trial, seed, report);
        else if (theorem == "implication")
            detail::run_implication_trial(n, trial, seed, report);
        else
            throw std::invalid_argument("unknown campaign: " + theorem);
    }
    report.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

}  // namespace hcm
