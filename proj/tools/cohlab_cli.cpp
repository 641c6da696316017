// Copyright 2026 The cohlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// cohlab: coherence measures, witnesses, tomography and detection from the
// command line. Every subcommand reads JSON matrices
// {"dim": d, "re": [...], "im": [...]} and writes JSON (or CSV where noted).
//
// Exit codes: 0 ok, 1 verification failure, 2 parse error, 3 solver
// non-convergence, 4 domain error, 5 usage error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "cohlab/channels.hpp"
#include "cohlab/measures.hpp"
#include "cohlab/scheduler.hpp"
#include "cohlab/serialize.hpp"
#include "cohlab/tomography.hpp"
#include "cohlab/verify.hpp"
#include "cohlab/witness.hpp"

namespace {

using cohlab::ErrorKind;
using cohlab::io::Json;

enum Exit { kOk = 0, kVerifyFailed = 1, kParse = 2, kSolver = 3, kDomain = 4, kUsage = 5 };

struct RunConfig {
    std::uint64_t seed = 0;
    double tol = cohlab::kDefaultTol;
    std::uint64_t shots = 10000;
    double alpha = 1e-3;
    std::string format = "json";
    std::string out;
};

class Output {
   public:
    explicit Output(const RunConfig &cfg) : cfg_(cfg) {}

    void json(const Json &j) {
        write(cohlab::io::dump(j) + "\n");
    }
    void write(const std::string &text) {
        if (cfg_.out.empty()) {
            std::cout << text;
            return;
        }
        std::ofstream f(cfg_.out);
        if (!f) cohlab::fail(ErrorKind::usage, "cannot write " + cfg_.out);
        f << text;
    }
    bool csv() const {
        return cfg_.format == "csv";
    }
    void require_json(const char *command) const {
        if (csv()) cohlab::fail(ErrorKind::usage, std::string(command) + " supports --format json only");
    }

   private:
    const RunConfig &cfg_;
};

int exit_code(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::parse:
            return kParse;
        case ErrorKind::non_convergence:
            return kSolver;
        case ErrorKind::usage:
            return kUsage;
        default:
            return kDomain;
    }
}

int cmd_measure(const RunConfig &cfg, const std::string &path) {
    Output out(cfg);
    out.require_json("measure");
    const cohlab::DensityMatrix rho = cohlab::io::state_from_json(cohlab::io::read_file(path), cfg.tol);
    Json j;
    j["c_h"] = cohlab::c_h(rho);
    j["c_l1"] = cohlab::c_l1(rho);
    try {
        const cohlab::RobustnessSolution sol = cohlab::roc(rho);
        j["roc"] = sol.value;
        j["ratio_check"] = cohlab::io::to_json(cohlab::ratio_check(rho));
        j["robustness"] = cohlab::io::to_json(sol);
        if (sol.tau) {
            const double c_tau = cohlab::c_h(*sol.tau);
            j["scaling_residual"] = std::abs(j["c_h"].get<double>() - sol.value * c_tau);
            j["c_h_tau"] = c_tau;
        }
    } catch (const cohlab::RobustnessNonConvergence &e) {
        j["roc"] = nullptr;
        j["roc_lower"] = e.lower();
        j["roc_upper"] = e.upper();
        j["error"] = e.what();
        out.json(j);
        return kSolver;
    }
    out.json(j);
    return kOk;
}

int cmd_witness_make(const RunConfig &cfg, const std::string &path) {
    Output out(cfg);
    out.require_json("witness make");
    const cohlab::DensityMatrix rho = cohlab::io::state_from_json(cohlab::io::read_file(path), cfg.tol);
    out.json(cohlab::io::witness_to_json(cohlab::construct_witness(rho)));
    return kOk;
}

int cmd_witness_check(const RunConfig &cfg, const std::string &path) {
    Output out(cfg);
    out.require_json("witness check");
    const cohlab::HermitianOperator op = cohlab::io::hermitian_from_json(cohlab::io::read_file(path), cfg.tol);
    const cohlab::WitnessCheck check = cohlab::is_witness(op);
    Json j = cohlab::io::to_json(check);
    Json report;
    report["witness"] = check.valid;
    report["optimal"] = check.valid ? Json(cohlab::is_optimal(cohlab::Witness(op))) : Json(nullptr);
    for (auto &[k, v] : j.items()) {
        if (k != "witness") report[k] = v;
    }
    out.json(report);
    return kOk;
}

int cmd_witness_finer(const RunConfig &cfg, const std::string &p1, const std::string &p2) {
    Output out(cfg);
    out.require_json("witness finer");
    const cohlab::Witness w1 = cohlab::io::witness_from_json(cohlab::io::read_file(p1), cfg.tol);
    const cohlab::Witness w2 = cohlab::io::witness_from_json(cohlab::io::read_file(p2), cfg.tol);
    out.json(cohlab::io::to_json(cohlab::is_finer(w1, w2)));
    return kOk;
}

int cmd_tomo(const RunConfig &cfg, const std::string &path, const std::string &mode, bool expectation) {
    Output out(cfg);
    const cohlab::DensityMatrix rho = cohlab::io::state_from_json(cohlab::io::read_file(path), cfg.tol);
    std::vector<cohlab::CountRecord> records;
    Json j;
    j["mode"] = mode;
    std::optional<cohlab::StateEstimate> est;
    if (mode == "stokes") {
        if (rho.dim() != 2) cohlab::fail(ErrorKind::usage, "stokes mode requires a qubit state");
        const double n = static_cast<double>(cfg.shots);
        const cohlab::StokesRecord rec =
            expectation ? cohlab::stokes_expected(rho, n) : cohlab::stokes_simulate(rho, n, cfg.seed);
        est = cohlab::stokes_reconstruct(rec);
        records = cohlab::stokes_offdiag_records(rec);
        j["record"] = cohlab::io::to_json(rec);
    } else {
        const cohlab::GeneratorBasis basis(rho.dim());
        std::vector<cohlab::CountRecord> all;
        for (std::size_t k = 0; k < basis.size(); ++k) {
            all.push_back(expectation ? cohlab::measure_generator_expected(rho, basis, k)
                                      : cohlab::measure_generator(rho, basis, k, cfg.shots, cohlab::mix_seed(cfg.seed, k)));
        }
        est = cohlab::reconstruct(rho.dim(), all, basis);
        records.assign(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(basis.offdiag_count()));
        if (out.csv()) {
            std::ostringstream s;
            cohlab::write_records_csv(s, all);
            out.write(s.str());
            return kOk;
        }
        Json recs = Json::array();
        for (const auto &r : all) recs.push_back(cohlab::io::to_json(r));
        j["records"] = std::move(recs);
    }
    if (out.csv()) {
        std::ostringstream s;
        cohlab::write_records_csv(s, records);
        out.write(s.str());
        return kOk;
    }
    j["reconstruction"] = cohlab::io::to_json(est->raw.matrix());
    j["projected"] = cohlab::io::to_json(est->projected.matrix());
    j["was_projected"] = est->was_projected;
    j["trace_distance"] = cohlab::trace_distance(est->raw.matrix(), rho.matrix());
    j["trace_distance_projected"] = cohlab::trace_distance(est->projected.matrix(), rho.matrix());
    j["decision"] = cohlab::io::to_json(cohlab::coherence_decision(records, cfg.alpha, cfg.tol));
    out.json(j);
    return kOk;
}

int cmd_detect(const RunConfig &cfg, const std::string &path, const std::string &policy, bool expectation, bool dicke,
               std::uint64_t runs) {
    Output out(cfg);
    out.require_json("detect");
    if (dicke) {
        out.json(cohlab::io::to_json(cohlab::dicke_report(runs, runs, cfg.seed)));
        return kOk;
    }
    if (path.empty()) cohlab::fail(ErrorKind::usage, "detect needs a state file or --dicke");
    const cohlab::DensityMatrix rho = cohlab::io::state_from_json(cohlab::io::read_file(path), cfg.tol);
    cohlab::DetectOptions opt;
    opt.policy = policy == "fixed" ? cohlab::OrderPolicy::fixed : cohlab::OrderPolicy::random;
    opt.shots = cfg.shots;
    opt.alpha = cfg.alpha;
    opt.seed = cfg.seed;
    opt.tol = cfg.tol;
    const cohlab::StateOracle oracle = expectation ? cohlab::expectation_oracle(rho) : cohlab::sampling_oracle(rho);
    out.json(cohlab::io::to_json(cohlab::detect(oracle, rho.dim(), opt)));
    return kOk;
}

int cmd_expected(const RunConfig &cfg, std::size_t n, std::size_t i, std::uint64_t trials) {
    Output out(cfg);
    const cohlab::ExpectationReport rep = cohlab::expectation_report(n, i, trials, cfg.seed);
    if (out.csv()) {
        std::ostringstream s;
        cohlab::write_expectation_csv(s, {rep});
        out.write(s.str());
        return kOk;
    }
    Json j = cohlab::io::to_json(rep);
    j["E_fraction"] = cohlab::expected_measurements_fraction(n, i);
    out.json(j);
    return kOk;
}

int cmd_verify(const RunConfig &cfg, const std::string &suite, std::size_t trials) {
    Output out(cfg);
    out.require_json("verify");
    cohlab::VerifyOptions opt;
    opt.trials = trials;
    opt.seed = cfg.seed;
    const auto results = cohlab::run_suites(suite, opt);
    bool passed = true;
    Json j;
    Json suites = Json::array();
    Json failures = Json::array();
    for (const auto &s : results) {
        passed = passed && s.passed;
        suites.push_back(cohlab::io::to_json(s));
        for (const auto &c : s.checks) {
            if (!c.passed && !c.informational) failures.push_back(s.suite + "/" + c.name);
        }
    }
    j["passed"] = passed;
    j["failures"] = std::move(failures);
    j["suites"] = std::move(suites);
    out.json(j);
    return passed ? kOk : kVerifyFailed;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"cohlab: quantum coherence measures, witnesses, tomography and detection"};
    app.require_subcommand(1);
    RunConfig cfg;
    app.add_option("--seed", cfg.seed, "Random seed")->envname("COHLAB_SEED");
    app.add_option("--tol", cfg.tol, "Structural tolerance")->envname("COHLAB_TOL");
    app.add_option("--shots", cfg.shots, "Shots per measurement (Stokes: intensity N)");
    app.add_option("--alpha", cfg.alpha, "Significance level");
    app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--out", cfg.out, "Write output to PATH");
    app.fallthrough();

    std::string state, w1, w2, mode = "qudit", policy = "random", suite = "all";
    bool expectation = false, dicke = false;
    std::size_t n = 0, i = 0, verify_trials = 0;
    std::uint64_t trials = 1000000, runs = 100000;
    int code = kOk;

    auto *measure = app.add_subcommand("measure", "C_h, C_l1, robustness of coherence and the ratio chain");
    measure->add_option("state", state, "State JSON file")->required();
    measure->callback([&] { code = cmd_measure(cfg, state); });

    auto *witness = app.add_subcommand("witness", "Witness construction and comparison");
    witness->require_subcommand(1);
    auto *make = witness->add_subcommand("make", "Optimal witness -rho + Delta(rho)");
    make->add_option("state", state, "State JSON file")->required();
    make->callback([&] { code = cmd_witness_make(cfg, state); });
    auto *check = witness->add_subcommand("check", "Validity and optimality");
    check->add_option("witness", w1, "Witness JSON file")->required();
    check->callback([&] { code = cmd_witness_check(cfg, w1); });
    auto *finer = witness->add_subcommand("finer", "Is W2 finer than W1?");
    finer->add_option("w1", w1, "W1 JSON file")->required();
    finer->add_option("w2", w2, "W2 JSON file")->required();
    finer->callback([&] { code = cmd_witness_finer(cfg, w1, w2); });

    auto *tomo = app.add_subcommand("tomo", "Simulated tomography and coherence decision");
    tomo->add_option("state", state, "State JSON file")->required();
    tomo->add_option("--mode", mode, "stokes or qudit")->check(CLI::IsMember({"stokes", "qudit"}));
    tomo->add_flag("--expectation", expectation, "Use exact Born means instead of sampling");
    tomo->callback([&] { code = cmd_tomo(cfg, state, mode, expectation); });

    auto *det = app.add_subcommand("detect", "Adaptive one-at-a-time coherence detection");
    det->add_option("state", state, "State JSON file");
    det->add_option("--policy", policy, "random or fixed")->check(CLI::IsMember({"random", "fixed"}));
    det->add_flag("--expectation", expectation, "Exact oracle instead of sampling");
    det->add_flag("--dicke", dicke, "Report expected counts for the d = 8 uniform superposition");
    det->add_option("--runs", runs, "Detection runs and Monte Carlo trials for --dicke");
    det->callback([&] { code = cmd_detect(cfg, state, policy, expectation, dicke, runs); });

    auto *exp = app.add_subcommand("expected", "Expected number of measurements E(N, i)");
    exp->add_option("N", n, "Number of observables")->required();
    exp->add_option("i", i, "Number of vanishing observables")->required();
    exp->add_option("--trials", trials, "Monte Carlo trials");
    exp->callback([&] { code = cmd_expected(cfg, n, i, trials); });

    auto *ver = app.add_subcommand("verify", "Run property suites");
    ver->add_option("suite", suite, "all, lemma1, theorem1, theorem2, theorem3, theorem4, norm or e_n")
        ->check(CLI::IsMember({"all", "lemma1", "theorem1", "theorem2", "theorem3", "theorem4", "norm", "e_n"}));
    ver->add_option("--trials", verify_trials, "Override the sweep size of each suite");
    ver->callback([&] { code = cmd_verify(cfg, suite, verify_trials); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    } catch (const cohlab::Error &e) {
        std::cerr << "cohlab: " << cohlab::error_kind_name(e.kind()) << ": " << e.what() << "\n";
        return exit_code(e.kind());
    } catch (const std::exception &e) {
        std::cerr << "cohlab: " << e.what() << "\n";
        return kDomain;
    }
    return code;
}
