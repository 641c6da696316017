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

#include "cohlab/scheduler.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <numeric>
#include <limits>
#include <random>

#include <boost/multiprecision/cpp_int.hpp>

namespace cohlab {

namespace {

using boost::multiprecision::cpp_int;
using boost::multiprecision::cpp_rational;

void check_range(std::size_t n, std::size_t i) {
    if (n < 1) fail(ErrorKind::out_of_range, "N must be at least 1");
    if (i > n) fail(ErrorKind::out_of_range, "i must satisfy 0 <= i <= N");
}

cpp_int binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    cpp_int out = 1;
    for (std::size_t j = 1; j <= k; ++j) {
        out *= n - k + j;
        out /= j;
    }
    return out;
}

cpp_rational expected_exact(std::size_t n, std::size_t i) {
    check_range(n, i);
    if (i == 0) return 1;
    if (i == n) return cpp_rational(static_cast<long long>(n));
    cpp_rational sum = 0;
    for (std::size_t m = 1; m <= i + 1; ++m) {
        cpp_rational term(binomial(i, m - 1), binomial(n, m - 1));
        term *= cpp_rational(cpp_int(n - i), cpp_int(n - (m - 1)));
        sum += term * static_cast<long long>(m);
    }
    return sum;
}

}  // namespace

const char *verdict_name(Verdict v) {
    switch (v) {
        case Verdict::coherent:
            return "coherent";
        case Verdict::incoherent:
            return "incoherent";
        case Verdict::inconclusive:
            return "inconclusive";
    }
    return "?";
}

StateOracle sampling_oracle(const DensityMatrix &rho) {
    auto basis = std::make_shared<GeneratorBasis>(rho.dim());
    return [basis, rho](std::size_t index, std::uint64_t shots, std::uint64_t seed) {
        if (index >= basis->offdiag_count()) fail(ErrorKind::out_of_range, "oracle index is not off-diagonal");
        return measure_generator(rho, *basis, index, shots, seed);
    };
}

StateOracle expectation_oracle(const DensityMatrix &rho) {
    const GeneratorBasis basis(rho.dim());
    auto records = std::make_shared<std::vector<CountRecord>>();
    for (std::size_t j = 0; j < basis.offdiag_count(); ++j) records->push_back(measure_generator_expected(rho, basis, j));
    return [records](std::size_t index, std::uint64_t, std::uint64_t) {
        if (index >= records->size()) fail(ErrorKind::out_of_range, "oracle index is not off-diagonal");
        return (*records)[index];
    };
}

DetectionResult detect(const StateOracle &oracle, std::size_t dim, const DetectOptions &options) {
    if (dim < 2 || dim > 32) fail(ErrorKind::dimension, "detect requires 2 <= d <= 32");
    if (options.shots < 2) fail(ErrorKind::usage, "detect requires shots >= 2");
    const std::size_t n = dim * dim - dim;

    DetectionResult out;
    out.threshold = bonferroni_threshold(options.alpha, n);
    out.ordering.resize(n);
    std::iota(out.ordering.begin(), out.ordering.end(), std::size_t{0});
    Rng rng = make_rng(options.seed, 0xde7);
    if (options.policy == OrderPolicy::random) std::shuffle(out.ordering.begin(), out.ordering.end(), rng);

    bool plausible = false;
    for (std::size_t step = 0; step < n; ++step) {
        const std::size_t index = out.ordering[step];
        const CountRecord rec = oracle(index, options.shots, mix_seed(options.seed, 1 + step));
        if (rec.generator != index || rec.kind == GeneratorKind::diagonal) {
            fail(ErrorKind::usage, "oracle answered a different generator than requested");
        }
        double z;
        bool significant;
        if (rec.expectation) {
            significant = std::abs(rec.estimate) > options.tol;
            z = significant ? std::copysign(std::numeric_limits<double>::infinity(), rec.estimate) : 0.0;
        } else {
            if (!(rec.std_error > 0)) fail(ErrorKind::usage, "sampled record with zero standard error");
            z = rec.estimate / rec.std_error;
            significant = std::abs(z) > out.threshold;
        }
        out.estimates.push_back(rec.estimate);
        out.z_scores.push_back(z);
        out.measurements_used = step + 1;
        if (significant) {
            out.verdict = Verdict::coherent;
            out.witness_index = index;
            return out;
        }
        if (std::abs(rec.estimate) + out.threshold * rec.std_error >= options.reporting_threshold) plausible = true;
    }
    out.verdict = plausible ? Verdict::inconclusive : Verdict::incoherent;
    return out;
}

double expected_measurements(std::size_t n, std::size_t i) {
    return static_cast<double>(expected_exact(n, i));
}

std::string expected_measurements_fraction(std::size_t n, std::size_t i) {
    const cpp_rational v = expected_exact(n, i);
    return boost::multiprecision::numerator(v).str() + "/" + boost::multiprecision::denominator(v).str();
}

double expected_measurements_closed(std::size_t n, std::size_t i) {
    check_range(n, i);
    if (i == n) return static_cast<double>(n);
    return static_cast<double>(n + 1) / static_cast<double>(n - i + 1);
}

double expected_measurements_avg(std::size_t n) {
    check_range(n, 0);
    cpp_rational sum = 0;
    for (std::size_t i = 0; i <= n; ++i) sum += expected_exact(n, i);
    return static_cast<double>(sum / static_cast<long long>(n + 1));
}

MonteCarloEstimate monte_carlo_E(std::size_t n, std::size_t i, std::uint64_t trials, std::uint64_t seed) {
    check_range(n, i);
    if (trials < 1) fail(ErrorKind::usage, "monte_carlo_E requires trials >= 1");
    Rng rng = make_rng(seed, 0xe0);
    double sum = 0, sum_sq = 0;
    for (std::uint64_t t = 0; t < trials; ++t) {
        std::size_t zeros = i, left = n, stop = n;
        for (std::size_t step = 1; step <= n; ++step) {
            // Draw the next observable uniformly from the unmeasured ones.
            const std::size_t pick = std::uniform_int_distribution<std::size_t>(0, left - 1)(rng);
            if (pick >= zeros) {
                stop = step;
                break;
            }
            --zeros;
            --left;
        }
        const double s = static_cast<double>(stop);
        sum += s;
        sum_sq += s * s;
    }
    const double tn = static_cast<double>(trials);
    MonteCarloEstimate out;
    out.mean = sum / tn;
    const double var = trials > 1 ? std::max(0.0, (sum_sq - tn * out.mean * out.mean) / (tn - 1)) : 0.0;
    out.std_error = std::sqrt(var / tn);
    return out;
}

ExpectationReport expectation_report(std::size_t n, std::size_t i, std::uint64_t trials, std::uint64_t seed) {
    ExpectationReport r;
    r.n = n;
    r.i = i;
    r.e_formula = expected_measurements(n, i);
    r.e_closed = expected_measurements_closed(n, i);
    const MonteCarloEstimate mc = monte_carlo_E(n, i, trials, seed);
    r.e_mc = mc.mean;
    r.mc_stderr = mc.std_error;
    r.trials = trials;
    return r;
}

void write_expectation_csv(std::ostream &out, const std::vector<ExpectationReport> &rows) {
    out << "N,i,E_formula,E_closed,E_mc,stderr\n";
    const auto old = out.precision(17);
    for (const auto &r : rows) {
        out << r.n << ',' << r.i << ',' << r.e_formula << ',' << r.e_closed << ',' << r.e_mc << ',' << r.mc_stderr << '\n';
    }
    out.precision(old);
}

DensityMatrix dicke_state(std::size_t dim) {
    if (dim != 8) fail(ErrorKind::dimension, "dicke_state supports d = 8 only");
    return DensityMatrix(Matrix::Constant(8, 8, Complex(1.0 / 8.0, 0.0)));
}

DickeReport dicke_report(std::uint64_t mc_trials, std::uint64_t detect_runs, std::uint64_t seed) {
    DickeReport rep;
    rep.observables = expectation_report(56, 28, mc_trials, mix_seed(seed, 1));
    rep.ordered = expectation_report(112, 56, mc_trials, mix_seed(seed, 2));
    rep.reported_matches_observables = std::abs(rep.reported_value - rep.observables.e_formula) <= 5e-4;
    rep.reported_matches_ordered = std::abs(rep.reported_value - rep.ordered.e_formula) <= 5e-4;

    if (detect_runs > 0) {
        const DensityMatrix rho = dicke_state(8);
        const StateOracle oracle = expectation_oracle(rho);
        DetectOptions opt;
        double sum = 0, sum_sq = 0;
        for (std::uint64_t r = 0; r < detect_runs; ++r) {
            opt.seed = mix_seed(seed, 100 + r);
            const double used = static_cast<double>(detect(oracle, 8, opt).measurements_used);
            sum += used;
            sum_sq += used * used;
        }
        const double tn = static_cast<double>(detect_runs);
        rep.detect_runs = detect_runs;
        rep.detect_mean = sum / tn;
        const double var = detect_runs > 1 ? std::max(0.0, (sum_sq - tn * rep.detect_mean * rep.detect_mean) / (tn - 1)) : 0.0;
        rep.detect_stderr = std::sqrt(var / tn);
    }
    return rep;
}

}  // namespace cohlab
