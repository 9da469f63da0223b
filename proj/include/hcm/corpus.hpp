#pragma once

#include "campaign.hpp"
#include "geninv.hpp"
#include "json_io.hpp"
#include "majorization.hpp"
#include "preserver.hpp"

#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

namespace hcm {

// Golden corpus: five small operators with known certificates, refutations
// and closed-form generalized inverses, committed as hand-written fixture
// files. The runner recomputes everything and compares exactly.

struct CorpusCheck {
    std::string name;
    bool pass = false;
    std::string detail;  // certificate / witness / mismatch description
};

struct CorpusReport {
    std::vector<CorpusCheck> checks;

    bool pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

namespace detail {

inline std::string p_string(const PreserverCertificate& cert) {
    std::ostringstream os;
    os << "P = (";
    for (std::size_t j = 1; j <= cert.profile.n; ++j)
        os << (j > 1 ? ", " : "") << j << "->" << cert.map(j);
    os << ")";
    return os.str();
}

inline void expect(CorpusReport& report, const std::string& name, bool pass,
                   const std::string& detail = "") {
    report.checks.push_back(CorpusCheck{name, pass, detail});
}

inline void expect_certificate(CorpusReport& report, const std::string& name,
                               const PreserverDecision& decision,
                               const std::vector<std::size_t>& expected_p) {
    if (!accepted(decision)) {
        expect(report, name, false, "expected a certificate, got a refutation");
        return;
    }
    const auto& cert = certificate(decision);
    expect(report, name, cert.p == expected_p, p_string(cert));
}

}  // namespace detail

inline CorpusReport run_corpus(const std::filesystem::path& dir) {
    using detail::expect;
    CorpusReport report;
    const std::size_t n = 3;
    const Mat i3 = Mat::identity(n);
    const Mat c1 = circulant_perm(n, 1);

    // Example 1: preserves the doubly stochastic order (the necessary
    // condition passes) but not the circulant one.
    {
        const OperatorRep t = load_operator_file(dir / "example1_T.json");
        const Mat ti = t.apply(i3);
        const Mat expected_ti = Mat::unit(n, 0, 0) + Mat::unit(n, 1, 2) + Mat::unit(n, 2, 1);
        expect(report, "example1/image-of-identity", ti == expected_ti);
        expect(report, "example1/shifted-image", hadamard(c1, ti) == Mat::unit(n, 1, 2));
        const Mat collapsed = t.apply(hadamard(c1, i3));
        expect(report, "example1/collapsed-shift", collapsed.is_zero());
        expect(report, "example1/refuting-pair", !decide_hc(collapsed, ti).has_value());
        expect(report, "example1/hm-necessary-passes", !hm_necessary_check(t).has_value());
        const PreserverDecision decision = decide_hc_preserver(t);
        bool structural = false, confirmed = false;
        std::string detail;
        if (!accepted(decision)) {
            const auto& ref = refutation(decision);
            structural = ref.kind == PreserverRefutation::Kind::diagonal_split &&
                         ref.first.source_diag == 3;
            if (ref.counterexample) {
                const auto& [k, b] = *ref.counterexample;
                confirmed = !decide_hc(t.apply(hadamard(circulant_perm(n, k), b)), t.apply(b)).has_value();
                detail = "counterexample shift k = " + std::to_string(k);
            }
        }
        expect(report, "example1/refuted-diagonal-split", structural, detail);
        expect(report, "example1/counterexample-confirmed", confirmed, detail);
    }

    // Example 2: a circulant-order preserver that fails the necessary
    // condition for the doubly stochastic order.
    {
        const OperatorRep t = load_operator_file(dir / "example2_T.json");
        detail::expect_certificate(report, "example2/certificate", decide_hc_preserver(t), {3, 2, 1});
        const auto violation = hm_necessary_check(t);
        const bool ok = violation && violation->i == 0 && violation->j == 1 && violation->k == 1 &&
                        violation->l == 2 && violation->row == 0 && violation->col == 0;
        expect(report, "example2/hm-necessary-violated", ok,
               violation ? "witness (i,j,k,l) = (" + std::to_string(violation->i + 1) + "," +
                               std::to_string(violation->j + 1) + "," + std::to_string(violation->k + 1) +
                               "," + std::to_string(violation->l + 1) + ") nonzero at (" +
                               std::to_string(violation->row + 1) + "," + std::to_string(violation->col + 1) +
                               ")"
                         : "no violation found");
    }

    // Example 3: range invariance needs a circulant multiplier; a merely
    // doubly stochastic one can leave the range.
    {
        const OperatorRep t = load_operator_file(dir / "example3_T.json");
        const Mat x = load_matrix_file(dir / "example3_X.json");
        const Mat p = load_matrix_file(dir / "example3_P.json");
        detail::expect_certificate(report, "example3/certificate", decide_hc_preserver(t), {3, 2, 1});
        expect(report, "example3/multiplier-doubly-stochastic", is_doubly_stochastic(p));
        expect(report, "example3/multiplier-not-circulant", !as_circulant_combo(p).has_value());
        const SubspaceBasis range = range_basis(t);
        expect(report, "example3/x-in-range", member(range, x));
        expect(report, "example3/shifted-x-leaves-range", !member(range, hadamard(p, x)));
    }

    // Example 4: group inverse exists and matches its closed form; both the
    // operator and its group inverse are accepted.
    {
        const OperatorRep t = load_operator_file(dir / "example4_T.json");
        const OperatorRep expected = load_operator_file(dir / "example4_Tsharp.json");
        expect(report, "example4/index-one", index_of_mat(t.rep()) == 1);
        const OperatorRep sharp = group_inverse(t);
        expect(report, "example4/group-inverse-closed-form", sharp == expected,
               sharp == expected ? "all 9 basis images match" : "basis images differ");
        expect(report, "example4/drazin-equals-group", drazin(t) == sharp);
        detail::expect_certificate(report, "example4/certificate", decide_hc_preserver(t), {3, 2, 1});
        detail::expect_certificate(report, "example4/group-certificate", decide_hc_preserver(sharp),
                                   {3, 2, 1});
    }

    // Example 5: Moore-Penrose inverse matches its closed form; both the
    // operator and its Moore-Penrose inverse are accepted.
    {
        const OperatorRep t = load_operator_file(dir / "example5_T.json");
        const OperatorRep expected = load_operator_file(dir / "example5_Tdagger.json");
        expect(report, "example5/rank", rank(t.rep()) == 3);
        const OperatorRep dagger = moore_penrose(t);
        expect(report, "example5/moore-penrose-closed-form", dagger == expected,
               dagger == expected ? "all 9 basis images match" : "basis images differ");
        detail::expect_certificate(report, "example5/certificate", decide_hc_preserver(t), {2, 3, 1});
        detail::expect_certificate(report, "example5/mp-certificate", decide_hc_preserver(dagger),
                                   {3, 1, 2});
    }

    return report;
}

}  // namespace hcm
