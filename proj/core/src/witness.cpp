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

#include "cohlab/witness.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace cohlab {

WitnessCheck is_witness(const HermitianOperator &w) {
    WitnessCheck out;
    const Matrix &m = w.matrix();
    out.min_diagonal = m.diagonal().real().minCoeff();
    out.trace = m.trace().real();
    out.lambda_min = min_eigenvalue(w).value;
    out.diagonal_nonnegative = out.min_diagonal >= -w.tol();
    out.detects_something = out.lambda_min < -w.tol();
    out.valid = out.diagonal_nonnegative && out.detects_something;
    if (!out.diagonal_nonnegative) {
        out.diagnostic = "negative diagonal entry " + std::to_string(out.min_diagonal) +
                         ": some incoherent state has negative expectation";
    } else if (!out.detects_something) {
        out.diagnostic = "positive semidefinite (lambda_min = " + std::to_string(out.lambda_min) +
                         "): detects no state";
    } else {
        out.diagnostic = "ok";
    }
    return out;
}

Witness::Witness(HermitianOperator op) : op_(std::move(op)), check_(is_witness(op_)), optimal_(false) {
    if (!check_.valid) {
        fail(ErrorKind::invalid_witness, check_.diagnostic);
    }
    optimal_ = op_.matrix().diagonal().cwiseAbs().maxCoeff() <= op_.tol();
}

bool Witness::detects(const DensityMatrix &rho) const {
    return trace_product(op_, rho) < -tol();
}

bool Witness::detects_stringent(const DensityMatrix &rho) const {
    return std::abs(trace_product(op_, rho)) > tol();
}

bool is_optimal(const Witness &w) {
    return w.optimal();
}

Witness construct_witness(const DensityMatrix &rho) {
    if (rho.is_incoherent()) {
        fail(ErrorKind::incoherent_input, "rho is incoherent; -rho + Delta(rho) vanishes");
    }
    Matrix w = -rho.matrix();
    w.diagonal().setZero();
    return Witness(HermitianOperator(std::move(w), rho.tol()));
}

Matrix generator_matrix(std::size_t dim, std::size_t l, std::size_t m, PartKind kind) {
    if (dim < 2 || dim > kMaxDim) {
        fail(ErrorKind::dimension, "generator dimension out of range");
    }
    if (!(l < m && m < dim)) {
        fail(ErrorKind::out_of_range, "generator indices require 0 <= l < m < d, got l=" + std::to_string(l) +
                                          " m=" + std::to_string(m) + " d=" + std::to_string(dim));
    }
    auto n = static_cast<Eigen::Index>(dim);
    auto li = static_cast<Eigen::Index>(l);
    auto mi = static_cast<Eigen::Index>(m);
    Matrix g = Matrix::Zero(n, n);
    if (kind == PartKind::real) {
        g(li, mi) = 0.5;
        g(mi, li) = 0.5;
    } else {
        g(li, mi) = Complex(0, 0.5);
        g(mi, li) = Complex(0, -0.5);
    }
    return g;
}

Witness generator_witness(std::size_t dim, std::size_t l, std::size_t m, PartKind kind) {
    return Witness(HermitianOperator(generator_matrix(dim, l, m, kind)));
}

namespace {

double coefficient(double part, double tol) {
    if (std::abs(part) <= tol) {
        return 0;
    }
    return part > 0 ? 2.0 : -2.0;
}

}  // namespace

UnifiedWitness unified_witness(const DensityMatrix &rho) {
    if (rho.is_incoherent()) {
        fail(ErrorKind::incoherent_input, "unified witness needs a coherent state");
    }
    std::size_t d = rho.dim();
    auto n = static_cast<Eigen::Index>(d);
    Matrix wu = Matrix::Zero(n, n);
    for (std::size_t l = 0; l < d; ++l) {
        for (std::size_t m = l + 1; m < d; ++m) {
            Complex entry = rho(l, m);
            double pr = coefficient(entry.real(), rho.tol());
            double pi = coefficient(entry.imag(), rho.tol());
            if (pr != 0) {
                wu += pr * generator_matrix(d, l, m, PartKind::real);
            }
            if (pi != 0) {
                wu += pi * generator_matrix(d, l, m, PartKind::imag);
            }
        }
    }
    HermitianOperator op(wu, rho.tol());
    double expectation = trace_product(op, rho);
    Matrix neg = -wu;
    return UnifiedWitness{Witness(op), Witness(HermitianOperator(std::move(neg), rho.tol())), expectation};
}

// ---------------------------------------------------------------------------
// Finer-than decision

FinerReport is_finer(const Witness &w1, const Witness &w2, const FinerOptions &options) {
    if (w1.dim() != w2.dim()) {
        fail(ErrorKind::dimension, "is_finer on witnesses of different dimension");
    }
    const Matrix &a = w1.matrix();
    const Matrix &b = w2.matrix();
    FinerReport report;

    if ((a - b).cwiseAbs().maxCoeff() <= 1e-9) {
        report.finer = true;
        report.epsilon = 0;
        report.epsilon_max = 0;
        report.xi_lower = 1;
        return report;
    }

    double tol = std::max(w1.tol(), w2.tol());
    // M(eps) = W1 - (1 - eps) W2 is affine in eps, so lambda_min(M) is concave and
    // the feasible set {lambda_min(M(eps)) >= -margin * eps} is an interval.
    auto margin_at = [&](double eps) {
        Matrix m = a - (1.0 - eps) * b;
        return min_eigenvalue(HermitianOperator(std::move(m), tol)).value + options.psd_margin * eps;
    };

    const double upper = 1.0 - 1e-12;
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double lo = 0, hi = upper;
    double x1 = hi - inv_phi * (hi - lo);
    double x2 = lo + inv_phi * (hi - lo);
    double f1 = margin_at(x1), f2 = margin_at(x2);
    while (hi - lo > options.search_width) {
        if (f1 < f2) {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + inv_phi * (hi - lo);
            f2 = margin_at(x2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - inv_phi * (hi - lo);
            f1 = margin_at(x1);
        }
    }
    double peak = f1 >= f2 ? x1 : x2;
    double peak_value = std::max(f1, f2);
    for (double edge : {0.0, upper}) {
        double fe = margin_at(edge);
        if (fe > peak_value) {
            peak = edge;
            peak_value = fe;
        }
    }
    if (peak_value < 0) {
        report.finer = false;
        report.witness_margin = peak_value;
        return report;
    }

    // Left boundary: smallest feasible eps in (0, peak].
    double left;
    if (margin_at(0.0) >= 0) {
        left = std::min(peak, options.search_width);
        if (left <= 0) {
            left = options.search_width;
        }
    } else {
        double l = 0, h = peak;
        for (int it = 0; it < 80 && h - l > 1e-15; ++it) {
            double mid = 0.5 * (l + h);
            (margin_at(mid) >= 0 ? h : l) = mid;
        }
        left = h;
    }
    // Right boundary: largest feasible eps in [peak, 1).
    double right;
    if (margin_at(upper) >= 0) {
        right = upper;
    } else {
        double l = peak, h = upper;
        for (int it = 0; it < 80 && h - l > 1e-15; ++it) {
            double mid = 0.5 * (l + h);
            (margin_at(mid) >= 0 ? l : h) = mid;
        }
        right = l;
    }
    if (right < left) {
        right = left;
    }

    Matrix p = (a - (1.0 - left) * b) / left;
    HermitianOperator pop(std::move(p), tol);
    report.finer = true;
    report.epsilon = left;
    report.epsilon_max = right;
    report.witness_margin = min_eigenvalue(pop).value;
    report.positive_part = std::move(pop);
    report.xi_lower = 1.0 / (1.0 - right);
    return report;
}

// ---------------------------------------------------------------------------
// xi estimation

namespace {

struct RatioProbe {
    const Matrix &w1;
    const Matrix &w2;

    // Returns +inf when rho = G G^dagger / tr is outside D_{W1}.
    double operator()(const Matrix &g) const {
        Matrix rho = g * g.adjoint();
        double norm = rho.trace().real();
        if (!(norm > 0)) {
            return std::numeric_limits<double>::infinity();
        }
        double t1 = (w1.transpose().cwiseProduct(rho)).sum().real() / norm;
        double t2 = (w2.transpose().cwiseProduct(rho)).sum().real() / norm;
        if (!(t1 < 0)) {
            return std::numeric_limits<double>::infinity();
        }
        return std::abs(t2 / t1);
    }
};

double refine(const RatioProbe &probe, Matrix g, double value, std::size_t steps, Rng &rng) {
    double step = 0.5;
    for (std::size_t s = 0; s < steps && step > 1e-9; ++s) {
        Matrix noise = complex_gaussian(static_cast<std::size_t>(g.rows()), static_cast<std::size_t>(g.cols()), rng);
        Matrix trial = g + step * (g.norm() / noise.norm()) * noise;
        double v = probe(trial);
        if (v < value) {
            g = trial / trial.norm();
            value = v;
            step *= 1.5;
        } else {
            step *= 0.8;
        }
    }
    return value;
}

}  // namespace

double estimate_xi(const Witness &w1, const Witness &w2, std::size_t samples, std::uint64_t seed,
                   const XiOptions &options) {
    if (w1.dim() != w2.dim()) {
        fail(ErrorKind::dimension, "estimate_xi on witnesses of different dimension");
    }
    if (!is_finer(w1, w2).finer) {
        fail(ErrorKind::usage, "estimate_xi requires W2 finer than W1");
    }
    std::size_t d = w1.dim();
    RatioProbe probe{w1.matrix(), w2.matrix()};
    Rng rng = make_rng(seed, 0x5eed);

    double best = std::numeric_limits<double>::infinity();
    Matrix best_g;
    for (std::size_t s = 0; s < samples; ++s) {
        std::size_t rank = (s % 2 == 0) ? 1 : d;
        Matrix g = complex_gaussian(d, rank, rng);
        double v = probe(g);
        if (v < best) {
            best = v;
            best_g = g;
        }
    }
    if (!std::isfinite(best)) {
        fail(ErrorKind::empty_detection_set, "no sampled state is detected by W1");
    }

    best = refine(probe, best_g, best, options.refine_steps, rng);
    // Second start from the most negative eigenvector of W1, always inside D_{W1}.
    EigenPair lowest = min_eigenvalue(w1.op());
    Matrix g0 = lowest.vector;
    double v0 = probe(g0);
    if (std::isfinite(v0)) {
        best = std::min(best, refine(probe, g0, v0, options.refine_steps, rng));
    }
    return best;
}

// ---------------------------------------------------------------------------
// Generators for property suites

Witness random_witness(std::size_t dim, Rng &rng, bool zero_diagonal) {
    std::uniform_real_distribution<double> diag(0.05, 1.0);
    for (int attempt = 0; attempt < 1000; ++attempt) {
        Matrix h = random_hermitian(dim, rng);
        for (Eigen::Index i = 0; i < h.rows(); ++i) {
            h(i, i) = zero_diagonal ? 0.0 : diag(rng);
        }
        HermitianOperator op(std::move(h));
        if (is_witness(op).valid) {
            return Witness(std::move(op));
        }
    }
    fail(ErrorKind::non_convergence, "could not draw a valid random witness");
}

Witness sharpen_witness(const Witness &w, double eps) {
    Matrix m = (1.0 + eps) * w.matrix() - eps * dephase(w.op().base()).matrix();
    return Witness(HermitianOperator(std::move(m), w.tol()));
}

}  // namespace cohlab
