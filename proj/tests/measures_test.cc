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

#include <cmath>

#include <gtest/gtest.h>

#include "cohlab/measures.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace cohlab;

namespace {

DensityMatrix qubit(double p, Complex c) {
    return DensityMatrix(oracle::mat({{p, c}, {std::conj(c), 1 - p}}));
}

}  // namespace

TEST(measures, c_h_and_c_l1_examples) {
    const DensityMatrix plus(oracle::plus_state());
    EXPECT_DOUBLE_EQ(c_h(plus), 1.0);
    EXPECT_DOUBLE_EQ(c_l1(plus), 1.0);
    EXPECT_DOUBLE_EQ(c_h(qubit(0.3, 0)), 0.0);
    const DensityMatrix q = qubit(0.5, Complex(0.25, 0.25));
    EXPECT_NEAR(c_h(q), 1.0, 1e-15);
    EXPECT_NEAR(c_l1(q), std::sqrt(2.0) / 2, 1e-15);
}

TEST(measures, ratio_chain) {
    const RatioReport tight = ratio_check(qubit(0.5, Complex(0.25, 0.25)));
    EXPECT_TRUE(tight.upper_holds && tight.lower_holds);
    EXPECT_NEAR(tight.c_l1, std::sqrt(0.5) * tight.c_h, 1e-12);

    Rng rng = make_rng(1);
    for (int t = 0; t < 2000; ++t) {
        const DensityMatrix r = random_density(2 + t % 7, t % 2 ? StateKind::pure : StateKind::mixed, rng);
        const RatioReport rep = ratio_check(r);
        ASSERT_TRUE(rep.upper_holds && rep.lower_holds);
        EXPECT_NEAR(rep.c_h, oracle::offdiag_h(r.matrix()), 1e-12);
        EXPECT_NEAR(rep.c_l1, oracle::offdiag_l1(r.matrix()), 1e-12);
    }
    // Real-entried states: both measures coincide.
    std::normal_distribution<double> normal;
    for (int t = 0; t < 200; ++t) {
        Eigen::MatrixXd g = Eigen::MatrixXd::NullaryExpr(4, 4, [&] { return normal(rng); });
        Eigen::MatrixXd rho = g * g.transpose();
        rho /= rho.trace();
        const DensityMatrix r(Matrix(rho.cast<Complex>()));
        EXPECT_NEAR(c_h(r), c_l1(r), 1e-12);
    }
}

TEST(measures, faithful_and_linear_under_dephasing_mixtures) {
    Rng rng = make_rng(2);
    for (int t = 0; t < 100; ++t) {
        const DensityMatrix r = random_density(4, StateKind::mixed, rng);
        const Matrix delta = dephase(r.base()).matrix();
        EXPECT_EQ(c_h(DensityMatrix(delta)), 0.0);
        for (double s : {0.0, 0.25, 0.7, 1.0}) {
            const DensityMatrix mix(Matrix((1 - s) * r.matrix() + s * delta));
            EXPECT_NEAR(c_h(mix), (1 - s) * c_h(r), 1e-12);
        }
        const double c = max_eigenvalue(r).value + 0.3;
        EXPECT_NEAR(c_h(Matrix(c * Matrix::Identity(4, 4) - r.matrix())), c_h(r), 1e-14);
    }
}

TEST(measures, roc_examples) {
    const RobustnessSolution inc = roc(qubit(0.3, 0));
    EXPECT_NEAR(inc.value, 0.0, 1e-12);
    EXPECT_FALSE(inc.tau.has_value());

    const RobustnessSolution plus = roc(DensityMatrix(oracle::plus_state()));
    EXPECT_NEAR(plus.value, 1.0, 1e-6);
    ASSERT_TRUE(plus.tau.has_value());
    ASSERT_TRUE(plus.dual_witness.has_value());
    EXPECT_GE(plus.primal_gap, -1e-9);
    EXPECT_LE(plus.dual_gap, 1e-6);

    EXPECT_EQ(kind_of([] { roc(random_density(33, StateKind::mixed, 0)); }), ErrorKind::dimension);
}

TEST(measures, roc_matches_qubit_oracle) {
    Rng rng = make_rng(3);
    for (int t = 0; t < 300; ++t) {
        const DensityMatrix r = random_density(2, t % 2 ? StateKind::pure : StateKind::mixed, rng);
        const RobustnessSolution sol = roc(r);
        ASSERT_NEAR(sol.value, oracle::qubit_roc(r.matrix()), 1e-6);
        ASSERT_GE(sol.primal_gap, -1e-9);
        // D - rho >= 0 checked independently.
        Matrix slack = -r.matrix();
        for (int i = 0; i < 2; ++i) slack(i, i) += sol.incoherent_cover[static_cast<std::size_t>(i)];
        ASSERT_GE(oracle::eig2(slack)[0], -1e-9);
    }
}

TEST(measures, roc_matches_qutrit_grid_oracle) {
    Rng rng = make_rng(4);
    for (int t = 0; t < 4; ++t) {
        const DensityMatrix r = random_density(3, t % 2 ? StateKind::pure : StateKind::mixed, rng);
        const RobustnessSolution sol = roc(r);
        const double grid = oracle::qutrit_roc_grid(r.matrix());
        EXPECT_NEAR(sol.value, grid, 1e-4);
        EXPECT_LE(sol.value, grid + 1e-9);
        Matrix slack = -r.matrix();
        for (int i = 0; i < 3; ++i) slack(i, i) += sol.incoherent_cover[static_cast<std::size_t>(i)];
        EXPECT_GE(oracle::eig3(slack)[0], -1e-9);
    }
}

TEST(measures, roc_dual_bound) {
    const DensityMatrix plus(oracle::plus_state());
    EXPECT_EQ(roc_lower_bound(plus, HermitianOperator(Matrix(Matrix::Zero(2, 2)))), 0.0);
    EXPECT_NEAR(roc_lower_bound(plus, HermitianOperator(Matrix(-oracle::sigma_x()))), 1.0, 1e-15);
    EXPECT_EQ(kind_of([&] { roc_lower_bound(plus, HermitianOperator(Matrix(-2.0 * oracle::sigma_x()))); }),
              ErrorKind::invalid_bound_witness);
    EXPECT_EQ(kind_of([&] { roc_lower_bound(plus, HermitianOperator(Matrix(-oracle::sigma_z()))); }),
              ErrorKind::invalid_bound_witness);

    Rng rng = make_rng(5);
    for (int t = 0; t < 100; ++t) {
        const DensityMatrix r = random_density(2 + t % 4, StateKind::mixed, rng);
        const RobustnessSolution sol = roc(r);
        ASSERT_TRUE(sol.dual_witness.has_value());
        const Matrix &w = sol.dual_witness->matrix();
        for (Eigen::Index i = 0; i < w.rows(); ++i) EXPECT_NEAR(std::abs(w(i, i)), 0.0, 1e-9);
        EXPECT_LE(max_eigenvalue(sol.dual_witness->op()).value, 1 + 1e-9);
        const double lb = roc_lower_bound(r, sol.dual_witness->op());
        EXPECT_NEAR(lb, sol.value, 1e-6);
        EXPECT_LE(sol.dual_value, sol.value + 1e-9);
        // Any admissible witness bounds the robustness from below.
        const UnifiedWitness u = unified_witness(r);
        const Matrix scaled = u.detection.matrix() / std::max(1.0, max_eigenvalue(u.detection.op()).value);
        EXPECT_LE(roc_lower_bound(r, HermitianOperator(scaled)), sol.value + 1e-6);
    }
}

TEST(measures, scaling_identity_residual) {
    const Theorem4Report plus = verify_theorem4(DensityMatrix(oracle::plus_state()));
    EXPECT_LE(plus.residual, 1e-6);
    EXPECT_NEAR(plus.s, 1.0, 1e-6);
    EXPECT_EQ(kind_of([] { verify_theorem4(DensityMatrix(oracle::mat({{0.4, 0}, {0, 0.6}}))); }),
              ErrorKind::incoherent_input);

    Rng rng = make_rng(6);
    for (int t = 0; t < 100; ++t) {
        const Theorem4Report rep = verify_theorem4(random_density(3, StateKind::mixed, rng));
        EXPECT_LE(rep.residual, 1e-6);
    }
}

TEST(measures, residual_state_measure_for_qubits) {
    // For a qubit the optimal tau has C_h(tau) = |Re| + |Im| over |rho01|,
    // which lies in [1, sqrt(2)]; the bound C_h(tau) <= 1 holds only for
    // real or purely imaginary coherences.
    const Theorem4Report real = verify_theorem4(qubit(0.5, Complex(0.3, 0)));
    EXPECT_NEAR(real.c_h_tau, 1.0, 1e-6);
    const Theorem4Report mixed = verify_theorem4(qubit(0.5, Complex(0.25, 0.25)));
    EXPECT_NEAR(mixed.c_h_tau, std::sqrt(2.0), 1e-6);
    EXPECT_FALSE(mixed.tau_bound_holds);
}
