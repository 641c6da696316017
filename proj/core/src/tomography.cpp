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

#include "cohlab/tomography.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <random>
#include <string>

#include <boost/math/distributions/normal.hpp>

namespace cohlab {

namespace {

Matrix diagonal_generator(std::size_t dim, std::size_t k) {
    Matrix g = Matrix::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    const double scale = 1.0 / std::sqrt(2.0 * static_cast<double>(k) * static_cast<double>(k + 1));
    for (std::size_t l = 0; l < k; ++l) g(static_cast<Eigen::Index>(l), static_cast<Eigen::Index>(l)) = scale;
    g(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(k)) = -static_cast<double>(k) * scale;
    return g;
}

Generator make_generator(std::size_t index, GeneratorKind kind, std::size_t l, std::size_t m, Matrix g) {
    HermitianOperator op(std::move(g));
    Spectrum spectrum = eigh(op);
    return Generator{index, kind, l, m, std::move(op), std::move(spectrum)};
}

Matrix state_from_bloch(const std::array<double, 3> &r, StokesFrame frame) {
    const auto sigma = stokes_frame(frame);
    Matrix rho = 0.5 * Matrix::Identity(2, 2);
    for (int k = 0; k < 3; ++k) rho += 0.5 * r[static_cast<std::size_t>(k)] * sigma[static_cast<std::size_t>(k)];
    return rho;
}

StateEstimate finish_estimate(Matrix raw) {
    HermitianOperator op(std::move(raw), 1e-9);
    const double lmin = eigh(op).values(0);
    if (lmin < 0) return StateEstimate{op, psd_project(op), true};
    return StateEstimate{op, DensityMatrix(op.matrix(), 1e-8), false};
}

std::array<Vector, 4> stokes_kets() {
    const double h = 1.0 / std::sqrt(2.0);
    std::array<Vector, 4> kets;
    for (auto &k : kets) k = Vector::Zero(2);
    kets[0](0) = 1;  // unused for n0; kept so indices line up
    kets[1](0) = 1;
    kets[2](0) = h;
    kets[2](1) = -h;
    kets[3](0) = h;
    kets[3](1) = Complex(0, -h);
    return kets;
}

void require_qubit(const DensityMatrix &rho) {
    if (rho.dim() != 2) fail(ErrorKind::dimension, "Stokes protocol requires a qubit, got d=" + std::to_string(rho.dim()));
}

}  // namespace

const char *generator_kind_name(GeneratorKind kind) {
    switch (kind) {
        case GeneratorKind::real:
            return "R";
        case GeneratorKind::imag:
            return "I";
        case GeneratorKind::diagonal:
            return "D";
    }
    return "?";
}

GeneratorBasis::GeneratorBasis(std::size_t dim) : dim_(dim) {
    if (dim < 2 || dim > 32) fail(ErrorKind::dimension, "su_basis requires 2 <= d <= 32, got " + std::to_string(dim));
    generators_.reserve(dim * dim - 1);
    for (std::size_t l = 0; l < dim; ++l) {
        for (std::size_t m = l + 1; m < dim; ++m) {
            generators_.push_back(make_generator(generators_.size(), GeneratorKind::real, l, m,
                                                 generator_matrix(dim, l, m, PartKind::real)));
            generators_.push_back(make_generator(generators_.size(), GeneratorKind::imag, l, m,
                                                 generator_matrix(dim, l, m, PartKind::imag)));
        }
    }
    for (std::size_t k = 1; k < dim; ++k) {
        generators_.push_back(make_generator(generators_.size(), GeneratorKind::diagonal, k, 0, diagonal_generator(dim, k)));
    }
}

const Generator &GeneratorBasis::operator[](std::size_t index) const {
    if (index >= generators_.size()) {
        fail(ErrorKind::out_of_range, "generator index " + std::to_string(index) + " out of range for d=" + std::to_string(dim_));
    }
    return generators_[index];
}

std::size_t GeneratorBasis::index_of(std::size_t l, std::size_t m, PartKind kind) const {
    if (!(l < m && m < dim_)) fail(ErrorKind::out_of_range, "generator pair requires l < m < d");
    // Pairs before row l: sum_{a<l} (d-1-a).
    const std::size_t before = l * (2 * dim_ - l - 1) / 2;
    const std::size_t rank = before + (m - l - 1);
    return 2 * rank + (kind == PartKind::imag ? 1 : 0);
}

std::size_t GeneratorBasis::diagonal_index(std::size_t k) const {
    if (k < 1 || k >= dim_) fail(ErrorKind::out_of_range, "diagonal generator index requires 1 <= k < d");
    return offdiag_count() + (k - 1);
}

Matrix GeneratorBasis::expand(const std::vector<double> &coefficients, double trace) const {
    if (coefficients.size() != generators_.size()) {
        fail(ErrorKind::dimension, "expand needs " + std::to_string(generators_.size()) + " coefficients");
    }
    const auto n = static_cast<Eigen::Index>(dim_);
    Matrix out = (trace / static_cast<double>(dim_)) * Matrix::Identity(n, n);
    for (std::size_t j = 0; j < generators_.size(); ++j) out += 2.0 * coefficients[j] * generators_[j].op.matrix();
    return out;
}

GeneratorBasis su_basis(std::size_t dim) {
    return GeneratorBasis(dim);
}

// ---------------------------------------------------------------------------

std::array<Matrix, 3> stokes_frame(StokesFrame frame) {
    std::array<Matrix, 3> out;
    if (frame == StokesFrame::printed) {
        out[0] = Matrix::Zero(2, 2);
        out[0](0, 1) = out[0](1, 0) = 1;
        out[1] = Matrix::Zero(2, 2);
        out[1](0, 1) = Complex(0, -1);
        out[1](1, 0) = Complex(0, 1);
        out[2] = Matrix::Zero(2, 2);
        out[2](0, 0) = 1;
        out[2](1, 1) = -1;
        return out;
    }
    const auto kets = stokes_kets();
    for (int k = 0; k < 3; ++k) {
        const Vector &v = kets[static_cast<std::size_t>(k + 1)];
        out[static_cast<std::size_t>(k)] = 2.0 * v * v.adjoint() - Matrix::Identity(2, 2);
    }
    return out;
}

StokesRecord stokes_expected(const DensityMatrix &rho, double intensity) {
    require_qubit(rho);
    if (!(intensity > 0) || !std::isfinite(intensity)) fail(ErrorKind::usage, "intensity N must be positive");
    const auto kets = stokes_kets();
    StokesRecord rec;
    rec.intensity = intensity;
    rec.expectation = true;
    rec.counts[0] = intensity / 2;
    for (std::size_t k = 1; k < 4; ++k) {
        rec.counts[k] = intensity * std::max(0.0, (kets[k].adjoint() * rho.matrix() * kets[k])(0).real());
    }
    return rec;
}

StokesRecord stokes_simulate(const DensityMatrix &rho, double intensity, std::uint64_t seed) {
    StokesRecord rec = stokes_expected(rho, intensity);
    Rng rng = make_rng(seed, 0x5170);
    for (auto &c : rec.counts) {
        if (c <= 0) continue;
        std::poisson_distribution<long long> draw(c);
        c = static_cast<double>(draw(rng));
    }
    rec.expectation = false;
    return rec;
}

std::array<double, 4> stokes_parameters(const StokesRecord &record) {
    const auto &n = record.counts;
    return {2 * n[0], 2 * (n[1] - n[0]), 2 * (n[2] - n[0]), 2 * (n[3] - n[0])};
}

StateEstimate stokes_reconstruct(const StokesRecord &record, StokesFrame frame) {
    for (double c : record.counts) {
        if (!(c >= 0) || !std::isfinite(c)) fail(ErrorKind::invalid_state, "Stokes counts must be nonnegative");
    }
    if (!(record.counts[0] > 0)) fail(ErrorKind::invalid_state, "Stokes reconstruction needs n0 > 0");
    const auto s = stokes_parameters(record);
    return finish_estimate(state_from_bloch({s[1] / s[0], s[2] / s[0], s[3] / s[0]}, frame));
}

// ---------------------------------------------------------------------------

namespace {

struct OutcomeGroups {
    std::vector<double> values;
    std::vector<double> probabilities;
};

OutcomeGroups born_groups(const DensityMatrix &rho, const Generator &g) {
    OutcomeGroups out;
    const auto &spec = g.spectrum;
    for (Eigen::Index k = 0; k < spec.values.size(); ++k) {
        const double p = std::max(0.0, (spec.vectors.col(k).adjoint() * rho.matrix() * spec.vectors.col(k))(0).real());
        const double v = spec.values(k);
        if (!out.values.empty() && std::abs(out.values.back() - v) <= 1e-10) {
            out.probabilities.back() += p;
        } else {
            out.values.push_back(v);
            out.probabilities.push_back(p);
        }
    }
    double total = 0;
    for (double p : out.probabilities) total += p;
    for (double &p : out.probabilities) p /= total;
    return out;
}

void check_record_dim(const DensityMatrix &rho, const GeneratorBasis &basis) {
    if (rho.dim() != basis.dim()) fail(ErrorKind::dimension, "state and generator basis dimensions differ");
}

}  // namespace

CountRecord measure_generator(const DensityMatrix &rho, const GeneratorBasis &basis, std::size_t index,
                              std::uint64_t shots, std::uint64_t seed) {
    check_record_dim(rho, basis);
    const Generator &g = basis[index];
    if (shots < 1) fail(ErrorKind::usage, "measure_generator requires shots >= 1");
    const OutcomeGroups groups = born_groups(rho, g);

    CountRecord rec;
    rec.generator = index;
    rec.kind = g.kind;
    rec.shots = shots;
    rec.outcomes = groups.values;
    rec.counts.assign(groups.values.size(), 0);

    Rng rng = make_rng(seed, 0x6e6 + index);
    std::uint64_t remaining = shots;
    double mass = 1.0;
    for (std::size_t k = 0; k + 1 < groups.values.size() && remaining > 0; ++k) {
        const double p = mass > 0 ? std::clamp(groups.probabilities[k] / mass, 0.0, 1.0) : 0.0;
        std::binomial_distribution<std::uint64_t> draw(remaining, p);
        rec.counts[k] = draw(rng);
        remaining -= rec.counts[k];
        mass -= groups.probabilities[k];
    }
    rec.counts.back() += remaining;

    const double n = static_cast<double>(shots);
    double mean = 0;
    for (std::size_t k = 0; k < rec.outcomes.size(); ++k) mean += rec.outcomes[k] * static_cast<double>(rec.counts[k]);
    mean /= n;
    rec.estimate = mean;

    // Jeffreys-smoothed outcome frequencies for the variance only.
    const double pseudo = 0.5;
    const double smoothed_total = n + pseudo * static_cast<double>(rec.outcomes.size());
    double m1 = 0, m2 = 0;
    for (std::size_t k = 0; k < rec.outcomes.size(); ++k) {
        const double q = (static_cast<double>(rec.counts[k]) + pseudo) / smoothed_total;
        m1 += q * rec.outcomes[k];
        m2 += q * rec.outcomes[k] * rec.outcomes[k];
    }
    rec.std_error = std::sqrt(std::max(0.0, m2 - m1 * m1) / n);
    return rec;
}

CountRecord measure_generator_expected(const DensityMatrix &rho, const GeneratorBasis &basis, std::size_t index) {
    check_record_dim(rho, basis);
    const Generator &g = basis[index];
    const OutcomeGroups groups = born_groups(rho, g);
    CountRecord rec;
    rec.generator = index;
    rec.kind = g.kind;
    rec.outcomes = groups.values;
    rec.counts.assign(groups.values.size(), 0);
    rec.estimate = trace_product(rho, g.op);
    rec.expectation = true;
    return rec;
}

StateEstimate reconstruct(std::size_t dim, const std::vector<CountRecord> &records, const GeneratorBasis &basis) {
    if (dim != basis.dim()) fail(ErrorKind::dimension, "reconstruct: d does not match the basis");
    std::vector<double> r(basis.size(), 0.0);
    std::vector<bool> seen(basis.size(), false);
    for (const auto &rec : records) {
        if (rec.generator >= basis.size()) fail(ErrorKind::out_of_range, "record references an unknown generator");
        if (seen[rec.generator]) fail(ErrorKind::usage, "duplicate record for generator " + std::to_string(rec.generator));
        seen[rec.generator] = true;
        r[rec.generator] = rec.estimate;
    }
    for (std::size_t j = 0; j < seen.size(); ++j) {
        if (!seen[j]) fail(ErrorKind::usage, "missing record for generator " + std::to_string(j));
    }
    return finish_estimate(basis.expand(r));
}

std::vector<CountRecord> stokes_offdiag_records(const StokesRecord &record) {
    const StateEstimate est = stokes_reconstruct(record);
    const auto &n = record.counts;
    // Re rho01 = (1 - n2/n0)/2 and Im rho01 = (n3/n0 - 1)/2.
    const auto ratio_stderr = [&](double nk) {
        if (record.expectation || nk <= 0) return 0.0;
        const double f = nk / n[0];
        return 0.5 * f * std::sqrt(1.0 / nk + 1.0 / n[0]);
    };
    const double values[2] = {est.raw(0, 1).real(), est.raw(0, 1).imag()};
    const double errors[2] = {ratio_stderr(n[2]), ratio_stderr(n[3])};
    std::vector<CountRecord> out;
    for (int k = 0; k < 2; ++k) {
        CountRecord rec;
        rec.generator = static_cast<std::size_t>(k);
        rec.kind = k == 0 ? GeneratorKind::real : GeneratorKind::imag;
        rec.outcomes = {-0.5, 0.5};
        rec.estimate = values[k];
        rec.std_error = errors[k];
        rec.expectation = record.expectation;
        out.push_back(rec);
    }
    return out;
}

double bonferroni_threshold(double alpha, std::size_t tests) {
    if (!(alpha > 0 && alpha < 1)) fail(ErrorKind::usage, "alpha must lie in (0, 1)");
    if (tests == 0) fail(ErrorKind::usage, "at least one test is required");
    const boost::math::normal_distribution<double> normal;
    return boost::math::quantile(boost::math::complement(normal, alpha / (2.0 * static_cast<double>(tests))));
}

CoherenceDecision coherence_decision(const std::vector<CountRecord> &records, double alpha, double tol) {
    CoherenceDecision out;
    out.threshold = bonferroni_threshold(alpha, std::max<std::size_t>(records.size(), 1));
    double best = -1;
    for (const auto &rec : records) {
        if (rec.kind == GeneratorKind::diagonal) {
            fail(ErrorKind::usage, "coherence_decision accepts off-diagonal generators only");
        }
        double z;
        if (rec.expectation) {
            z = std::abs(rec.estimate) > tol ? std::numeric_limits<double>::infinity() : 0.0;
        } else {
            if (!(rec.std_error > 0)) fail(ErrorKind::usage, "sampled record with zero standard error");
            z = rec.estimate / rec.std_error;
        }
        out.z_scores.push_back(z);
        const double az = std::abs(z);
        if (az > out.threshold && az > best) {
            best = az;
            out.coherent = true;
            out.witness = rec.generator;
        }
    }
    return out;
}

void write_records_csv(std::ostream &out, const std::vector<CountRecord> &records) {
    out << "index,estimate,stderr\n";
    const auto old = out.precision(17);
    for (const auto &rec : records) out << rec.generator << ',' << rec.estimate << ',' << rec.std_error << '\n';
    out.precision(old);
}

}  // namespace cohlab
