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

#include "cohlab/measures.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "cohlab/lp.hpp"

namespace cohlab {

double c_h(const Matrix &m) {
    double total = 0;
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
        for (Eigen::Index r = 0; r < m.rows(); ++r) {
            if (r != c) {
                total += std::abs(m(r, c).real()) + std::abs(m(r, c).imag());
            }
        }
    }
    return total;
}

double c_h(const HermitianOperator &rho) {
    return c_h(rho.matrix());
}

double c_l1(const Matrix &m) {
    double total = 0;
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
        for (Eigen::Index r = 0; r < m.rows(); ++r) {
            if (r != c) {
                total += std::abs(m(r, c));
            }
        }
    }
    return total;
}

double c_l1(const HermitianOperator &rho) {
    return c_l1(rho.matrix());
}

RatioReport ratio_check(const DensityMatrix &rho) {
    RatioReport r{c_h(rho), c_l1(rho), false, false};
    r.upper_holds = r.c_h >= r.c_l1 - rho.tol();
    r.lower_holds = r.c_l1 >= std::sqrt(0.5) * r.c_h - rho.tol();
    return r;
}

RobustnessNonConvergence::RobustnessNonConvergence(double lower, double upper, std::size_t cuts)
    : Error(ErrorKind::non_convergence, "robustness solve stopped after " + std::to_string(cuts) +
                                            " cuts with bounds [" + std::to_string(lower) + ", " +
                                            std::to_string(upper) + "]"),
      lower_(lower),
      upper_(upper) {
}

namespace {

struct CutPool {
    std::vector<Vector> vectors;
    Eigen::MatrixXd weights;  // d x K, |v_k,i|^2
    Eigen::VectorXd gains;    // v^dagger rho v - sum_i |v_i|^2 rho_ii

    bool contains(const Vector &v, double cosine) const {
        for (const auto &u : vectors) {
            if (std::abs(u.dot(v)) > cosine) {
                return true;
            }
        }
        return false;
    }

    void add(const Vector &v, const Matrix &rho) {
        Eigen::Index k = static_cast<Eigen::Index>(vectors.size());
        Eigen::Index d = rho.rows();
        weights.conservativeResize(d, k + 1);
        gains.conservativeResize(k + 1);
        double gain = (v.adjoint() * rho * v)(0, 0).real();
        for (Eigen::Index i = 0; i < d; ++i) {
            double w = std::norm(v(i));
            weights(i, k) = w;
            gain -= w * rho(i, i).real();
        }
        gains(k) = gain;
        vectors.push_back(v);
    }
};

}  // namespace

RobustnessSolution roc(const DensityMatrix &rho, const RocOptions &options) {
    std::size_t d = rho.dim();
    if (d > options.max_dim) {
        fail(ErrorKind::dimension, "roc supports d <= " + std::to_string(options.max_dim));
    }
    auto n = static_cast<Eigen::Index>(d);
    const Matrix &r = rho.matrix();
    Eigen::VectorXd base = r.diagonal().real();

    CutPool pool;
    pool.weights.resize(n, 0);
    pool.gains.resize(0);
    Eigen::VectorXd ones = Eigen::VectorXd::Ones(n);

    lp::Result lp_result;
    std::vector<std::size_t> warm;
    std::size_t previous_columns = 0;
    std::size_t iterations = 0;
    Eigen::VectorXd shift;
    double lambda_min = 0;

    for (;;) {
        ++iterations;
        lp_result = lp::maximize(pool.weights, ones, pool.gains, warm, previous_columns);
        warm = lp_result.basis;
        previous_columns = pool.vectors.size();
        shift = lp_result.dual;

        Matrix slack = -r;
        for (Eigen::Index i = 0; i < n; ++i) {
            slack(i, i) = base(i) + shift(i) - r(i, i).real();
        }
        Spectrum spec = eigh(HermitianOperator(slack, 1.0));
        lambda_min = spec.values(0);
        if (lambda_min >= -options.feasibility_tol) {
            break;
        }
        if (pool.vectors.size() >= options.max_cuts) {
            double lower = lp_result.objective;
            double upper = lower + static_cast<double>(d) * (-lambda_min);
            throw RobustnessNonConvergence(lower, upper, pool.vectors.size());
        }
        std::size_t added = 0;
        for (Eigen::Index k = 0; k < n && spec.values(k) < -options.feasibility_tol; ++k) {
            Vector v = spec.vectors.col(k);
            if (!pool.contains(v, options.duplicate_cosine)) {
                pool.add(v, r);
                ++added;
            }
        }
        if (added == 0) {
            double lower = lp_result.objective;
            double upper = lower + static_cast<double>(d) * (-lambda_min);
            throw RobustnessNonConvergence(lower, upper, pool.vectors.size());
        }
    }

    RobustnessSolution sol;
    sol.iterations = iterations;
    sol.cuts = pool.vectors.size();

    // Uniform shift restores exact feasibility of the cover.
    double lift = std::max(0.0, -lambda_min);
    Eigen::VectorXd cover = base + shift + Eigen::VectorXd::Constant(n, lift);
    sol.incoherent_cover.assign(cover.data(), cover.data() + n);
    sol.value = std::max(0.0, cover.sum() - 1.0);

    Matrix slack = -r;
    for (Eigen::Index i = 0; i < n; ++i) {
        slack(i, i) = cover(i) - r(i, i).real();
    }
    slack = 0.5 * (slack + slack.adjoint());
    sol.primal_gap = min_eigenvalue(HermitianOperator(slack, 1.0)).value;

    // Dual certificate: Y = sum_k mu_k v_k v_k^dagger + diag(1 - A mu).
    Matrix y = Matrix::Zero(n, n);
    for (std::size_t k = 0; k < pool.vectors.size(); ++k) {
        double mu = lp_result.primal(static_cast<Eigen::Index>(k));
        if (mu > 0) {
            y += mu * pool.vectors[k] * pool.vectors[k].adjoint();
        }
    }
    Eigen::VectorXd used = pool.vectors.empty() ? Eigen::VectorXd::Zero(n) : Eigen::VectorXd(pool.weights * lp_result.primal);
    for (Eigen::Index i = 0; i < n; ++i) {
        y(i, i) += std::max(0.0, 1.0 - used(i));
    }
    Matrix w = Matrix::Identity(n, n) - y;
    w = 0.5 * (w + w.adjoint());
    w.diagonal().setZero();

    if (sol.value > 1e-9) {
        sol.tau = DensityMatrix(Matrix(slack / sol.value), std::max(rho.tol(), 1e-9));
        HermitianOperator wop(w, rho.tol());
        WitnessCheck check = is_witness(wop);
        if (check.valid) {
            sol.dual_witness = Witness(std::move(wop));
        }
        if (!sol.dual_witness) {
            // Scaled unified witness: -c W^U with lambda_max = 1.
            UnifiedWitness u = unified_witness(rho);
            double top = max_eigenvalue(u.detection.op()).value;
            Matrix scaled = u.detection.matrix() / top;
            sol.dual_witness = Witness(HermitianOperator(std::move(scaled), rho.tol()));
            sol.dual_from_fallback = true;
        }
        sol.dual_value = std::max(0.0, -trace_product(sol.dual_witness->op(), rho));
    }
    sol.dual_gap = sol.value - sol.dual_value;
    return sol;
}

double roc_lower_bound(const DensityMatrix &rho, const HermitianOperator &w) {
    if (w.dim() != rho.dim()) {
        fail(ErrorKind::dimension, "bound witness dimension mismatch");
    }
    double tol = std::max(w.tol(), rho.tol());
    double min_diag = w.matrix().diagonal().real().minCoeff();
    if (min_diag < -tol) {
        fail(ErrorKind::invalid_bound_witness, "Delta(W) has negative entry " + std::to_string(min_diag));
    }
    double top = max_eigenvalue(w).value;
    if (top > 1.0 + tol) {
        fail(ErrorKind::invalid_bound_witness, "lambda_max(W) = " + std::to_string(top) + " > 1");
    }
    return std::max(0.0, -trace_product(w, rho));
}

Theorem4Report verify_theorem4(const DensityMatrix &rho, const RocOptions &options) {
    if (rho.is_incoherent()) {
        fail(ErrorKind::incoherent_input, "the scaling check needs a coherent state");
    }
    RobustnessSolution sol = roc(rho, options);
    if (!sol.tau) {
        fail(ErrorKind::incoherent_input, "robustness vanished; tau undefined");
    }
    Theorem4Report rep{};
    rep.c_h_rho = c_h(rho);
    rep.s = sol.value;
    rep.c_h_tau = c_h(*sol.tau);
    rep.residual = std::abs(rep.c_h_rho - rep.s * rep.c_h_tau);
    rep.tau_bound_holds = rep.c_h_tau <= 1.0 + 1e-6;
    return rep;
}

}  // namespace cohlab
