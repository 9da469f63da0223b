// hcmaj — exact decisions for Hadamard majorization orders, circulant
// preserver certificates, and generalized inverses of operators on matrix
// space. All arithmetic is exact; all JSON output is deterministic.
//
// Exit codes: 0 affirmative, 1 negative decision / nonexistence / failed
// campaign, 2 malformed input.

#include <hcm/campaign.hpp>
#include <hcm/corpus.hpp>
#include <hcm/geninv.hpp>
#include <hcm/json_io.hpp>

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

namespace {

constexpr int kYes = 0;
constexpr int kNo = 1;
constexpr int kBadInput = 2;

void emit(const nlohmann::json& j) { std::cout << j.dump(2) << "\n"; }

int run_check_hc(const std::string& xfile, const std::string& yfile) {
    const hcm::Mat x = hcm::load_matrix_file(xfile);
    const hcm::Mat y = hcm::load_matrix_file(yfile);
    if (x.rows() != y.rows()) throw hcm::ParseError("X and Y must have the same dimension");
    if (const auto w = hcm::decide_hc(x, y)) {
        nlohmann::json out = hcm::to_json(*w);
        out["majorized"] = true;
        emit(out);
        return kYes;
    }
    emit(nlohmann::json{{"majorized", false}});
    return kNo;
}

int run_check_h(const std::string& xfile, const std::string& yfile) {
    const hcm::Mat x = hcm::load_matrix_file(xfile);
    const hcm::Mat y = hcm::load_matrix_file(yfile);
    if (x.rows() != y.rows()) throw hcm::ParseError("X and Y must have the same dimension");
    if (const auto w = hcm::decide_h(x, y)) {
        nlohmann::json out = hcm::to_json(*w);
        out["majorized"] = true;
        emit(out);
        return kYes;
    }
    emit(nlohmann::json{{"majorized", false}});
    return kNo;
}

int run_decide_preserver(const std::string& tfile) {
    const hcm::OperatorRep t = hcm::load_operator_file(tfile);
    const hcm::PreserverDecision decision = hcm::decide_hc_preserver(t);
    emit(hcm::to_json(decision));
    return hcm::accepted(decision) ? kYes : kNo;
}

int run_geninv(const std::string& tfile, const std::string& kind) {
    const hcm::OperatorRep t = hcm::load_operator_file(tfile);
    try {
        hcm::OperatorRep out = t;
        if (kind == "adjoint")
            out = hcm::adjoint(t);
        else if (kind == "mp")
            out = hcm::moore_penrose(t);
        else if (kind == "drazin")
            out = hcm::drazin(t);
        else if (kind == "group")
            out = hcm::group_inverse(t);
        else if (kind == "inverse")
            out = hcm::inverse(t);
        emit(hcm::operator_to_json(out));
        return kYes;
    } catch (const hcm::IndexTooLarge& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kNo;
    } catch (const hcm::NotInvertible& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kNo;
    }
}

int run_verify(const std::string& theorem, int dim, std::size_t trials, std::uint64_t seed) {
    std::vector<std::size_t> dims;
    if (dim > 0)
        dims.push_back(static_cast<std::size_t>(dim));
    else
        dims = {3, 4, 5};
    nlohmann::json reports = nlohmann::json::array();
    bool all_pass = true;
    for (std::size_t n : dims) {
        const hcm::CampaignReport report = hcm::run_campaign(theorem, n, trials, seed);
        std::cerr << theorem << " n=" << n << ": " << (report.pass() ? "pass" : "FAIL") << " ("
                  << report.applicable << "/" << report.trials << " applicable, "
                  << report.elapsed_seconds << " s)\n";
        all_pass = all_pass && report.pass();
        reports.push_back(hcm::to_json(report));
    }
    emit(nlohmann::json{{"reports", reports}});
    return all_pass ? kYes : kNo;
}

int run_examples(const std::string& dir, bool verbose) {
    const hcm::CorpusReport report = hcm::run_corpus(dir);
    for (const auto& check : report.checks) {
        std::cout << (check.pass ? "[PASS] " : "[FAIL] ") << check.name;
        if ((verbose || !check.pass) && !check.detail.empty()) std::cout << "  (" << check.detail << ")";
        std::cout << "\n";
    }
    std::size_t passed = 0;
    for (const auto& check : report.checks) passed += check.pass ? 1 : 0;
    std::cout << "golden corpus: " << passed << "/" << report.checks.size() << " checks passed\n";
    return report.pass() ? kYes : kNo;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Hadamard majorization and preserver toolkit"};
    app.require_subcommand(1);

    std::string xfile, yfile, tfile;
    auto* check_hc = app.add_subcommand("check-hc", "decide circulant Hadamard majorization X ≺ Y");
    check_hc->add_option("X", xfile, "matrix file")->required();
    check_hc->add_option("Y", yfile, "matrix file")->required();

    auto* check_h = app.add_subcommand("check-h", "decide Hadamard majorization X ≺ Y");
    check_h->add_option("X", xfile, "matrix file")->required();
    check_h->add_option("Y", yfile, "matrix file")->required();

    auto* decide = app.add_subcommand("decide-preserver", "certificate or refutation for an operator");
    decide->add_option("T", tfile, "operator file")->required();

    std::string kind = "mp";
    auto* geninv = app.add_subcommand("geninv", "compute a generalized inverse of an operator");
    geninv->add_option("T", tfile, "operator file")->required();
    geninv->add_option("--kind", kind, "adjoint | mp | drazin | group | inverse")
        ->check(CLI::IsMember({"adjoint", "mp", "drazin", "group", "inverse"}))
        ->required();

    std::string theorem;
    int dim = 0;
    std::size_t trials = 100;
    std::uint64_t seed = 0;
    auto* verify = app.add_subcommand("verify", "run a randomized verification campaign");
    verify->add_option("--theorem", theorem, "property to verify")
        ->check(CLI::IsMember(hcm::campaign_names()))
        ->required();
    verify->add_option("--dim", dim, "matrix dimension n (default: 3, 4 and 5)")->check(CLI::Range(1, 16));
    verify->add_option("--trials", trials, "trials per dimension (default 100)");
    verify->add_option("--seed", seed, "campaign seed (default 0)");

    std::string corpus_dir = "corpus";
    bool verbose = false;
    auto* examples = app.add_subcommand("examples", "run the golden example corpus");
    examples->add_option("--dir", corpus_dir, "corpus directory (default: ./corpus)");
    examples->add_flag("--verbose", verbose, "print certificates and witnesses");

    CLI11_PARSE(app, argc, argv);

    try {
        if (check_hc->parsed()) return run_check_hc(xfile, yfile);
        if (check_h->parsed()) return run_check_h(xfile, yfile);
        if (decide->parsed()) return run_decide_preserver(tfile);
        if (geninv->parsed()) return run_geninv(tfile, kind);
        if (verify->parsed()) return run_verify(theorem, dim, trials, seed);
        if (examples->parsed()) return run_examples(corpus_dir, verbose);
    } catch (const hcm::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kBadInput;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kBadInput;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kBadInput;
    }
    return kBadInput;
}
