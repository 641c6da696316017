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

#ifndef COHLAB_SCHEDULER_HPP
#define COHLAB_SCHEDULER_HPP

// Adaptive coherence detection: measure off-diagonal generators one at a
// time, without replacement, and stop at the first significant nonzero.
// Also the expected stopping count E(N, i) for N observables of which i
// vanish, evaluated from the sum formula, from the waiting-time identity
// (N+1)/(N-i+1), and by Monte Carlo.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "cohlab/linalg.hpp"
#include "cohlab/tomography.hpp"

namespace cohlab {

enum class Verdict { coherent, incoherent, inconclusive };
enum class OrderPolicy { random, fixed };

const char *verdict_name(Verdict v);

/// Answers one off-diagonal generator index (0 <= index < d^2 - d).
using StateOracle = std::function<CountRecord(std::size_t index, std::uint64_t shots, std::uint64_t seed)>;

/// Oracles backed by a known state.
StateOracle sampling_oracle(const DensityMatrix &rho);
StateOracle expectation_oracle(const DensityMatrix &rho);

struct DetectOptions {
    OrderPolicy policy = OrderPolicy::random;
    std::uint64_t shots = 10000;
    double alpha = 1e-3;
    std::uint64_t seed = 0;
    /// An exhausted run is reported inconclusive when some generator's
    /// confidence band reaches this magnitude.
    double reporting_threshold = 0.05;
    double tol = kDefaultTol;
};

struct DetectionResult {
    Verdict verdict = Verdict::incoherent;
    std::size_t measurements_used = 0;
    std::optional<std::size_t> witness_index;
    std::vector<std::size_t> ordering;
    std::vector<double> estimates;  // per measured step
    std::vector<double> z_scores;   // per measured step
    double threshold = 0;
};

/// Throws ErrorKind::usage when shots < 2; oracle exceptions propagate.
DetectionResult detect(const StateOracle &oracle, std::size_t dim, const DetectOptions &options);

/// Sum formula sum_{m=1}^{i+1} m C(i,m-1)/C(N,m-1) (N-i)/(N-m+1) in exact
/// rational arithmetic; 1 for i = 0 and N for i = N.
/// Throws ErrorKind::out_of_range unless N >= 1 and 0 <= i <= N.
double expected_measurements(std::size_t n, std::size_t i);

/// The same value as a reduced fraction "p/q".
std::string expected_measurements_fraction(std::size_t n, std::size_t i);

/// (N+1)/(N-i+1) for i < N, and N for i = N.
double expected_measurements_closed(std::size_t n, std::size_t i);

/// (1/(N+1)) sum_{i=0}^{N} E(N, i).
double expected_measurements_avg(std::size_t n);

struct MonteCarloEstimate {
    double mean = 0;
    double std_error = 0;
};

/// Uniformly random orders over N observables with i zeros; the stopping
/// index is the position of the first nonzero, or N when there is none.
MonteCarloEstimate monte_carlo_E(std::size_t n, std::size_t i, std::uint64_t trials, std::uint64_t seed);

struct ExpectationReport {
    std::size_t n = 0;
    std::size_t i = 0;
    double e_formula = 0;
    double e_closed = 0;
    double e_mc = 0;
    double mc_stderr = 0;
    std::uint64_t trials = 0;
};

ExpectationReport expectation_report(std::size_t n, std::size_t i, std::uint64_t trials, std::uint64_t seed);

/// CSV table "N,i,E_formula,E_closed,E_mc,stderr".
void write_expectation_csv(std::ostream &out, const std::vector<ExpectationReport> &rows);

/// (1/8) sum_{l,m} |l><m|, the uniform superposition over 3 qubits.
/// Throws ErrorKind::dimension for d != 8.
DensityMatrix dicke_state(std::size_t dim);

inline constexpr double kReportedDickeE = 1.982;

struct DickeReport {
    double reported_value = kReportedDickeE;
    ExpectationReport observables;   // N = d^2 - d = 56 generators, i = 28 vanishing
    ExpectationReport ordered;       // N = 112 ordered R/I parts, i = 56 vanishing
    double detect_mean = 0;          // detect() with the exact oracle, random policy
    double detect_stderr = 0;
    std::uint64_t detect_runs = 0;
    bool reported_matches_observables = false;  // |reported - formula| <= 5e-4
    bool reported_matches_ordered = false;
};

DickeReport dicke_report(std::uint64_t mc_trials, std::uint64_t detect_runs, std::uint64_t seed);

}  // namespace cohlab

#endif
