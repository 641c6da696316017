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

#include "cohlab/channels.hpp"
#include "cohlab/measures.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace cohlab;

namespace {

ComplexMatrix cm(std::initializer_list<std::initializer_list<Complex>> rows) {
    return ComplexMatrix(oracle::mat(rows));
}

Matrix kraus_sum(const IncoherentChannel &ch) {
    Matrix s = Matrix::Zero(static_cast<Eigen::Index>(ch.dim()), static_cast<Eigen::Index>(ch.dim()));
    for (const auto &k : ch.kraus()) s += k.matrix().adjoint() * k.matrix();
    return s;
}

}  // namespace

TEST(channels, validate_examples) {
    EXPECT_TRUE(validate({ComplexMatrix::identity(3)}).valid());
    EXPECT_TRUE(validate({cm({{1, 0}, {0, 0}}), cm({{0, 1}, {0, 0}})}).valid());
    const double h = std::sqrt(0.5);
    const ChannelCheck had = validate({cm({{h, h}, {h, -h}})});
    EXPECT_TRUE(had.complete);
    EXPECT_FALSE(had.incoherent);
    EXPECT_FALSE(had.diagnostics.empty());
    EXPECT_FALSE(validate({cm({{1, 0}, {0, 0}})}).complete);
    EXPECT_EQ(kind_of([] { validate({ComplexMatrix::identity(2), ComplexMatrix::identity(3)}); }), ErrorKind::dimension);
    EXPECT_EQ(kind_of([] { IncoherentChannel({}); }), ErrorKind::dimension);
}

TEST(channels, apply_examples) {
    Rng rng = make_rng(1);
    const DensityMatrix rho = random_density(3, StateKind::mixed, rng);
    const IncoherentChannel id({ComplexMatrix::identity(3)});
    EXPECT_LE((apply(id, rho).matrix() - rho.matrix()).norm(), 1e-15);
    const DensityMatrix deph = apply(dephasing_channel(3), rho);
    EXPECT_LE((deph.matrix() - dephase(rho.base()).matrix()).norm(), 1e-15);

    const double h = std::sqrt(0.5);
    const IncoherentChannel bad({cm({{h, h}, {h, -h}})});
    EXPECT_EQ(kind_of([&] { apply(bad, DensityMatrix(oracle::plus_state())); }), ErrorKind::invalid_channel);
    EXPECT_EQ(kind_of([&] { apply(id, DensityMatrix(oracle::plus_state())); }), ErrorKind::dimension);
}

TEST(channels, random_channels_preserve_incoherence) {
    Rng rng = make_rng(2);
    for (int t = 0; t < 1000; ++t) {
        const std::size_t d = 2 + static_cast<std::size_t>(t % 4);
        const IncoherentChannel ch = random_incoherent_channel(d, 1 + static_cast<std::size_t>(t % 5), static_cast<std::uint64_t>(t));
        ASSERT_TRUE(ch.check().valid());
        ASSERT_LE((kraus_sum(ch) - Matrix::Identity(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d))).norm(), 1e-12);
        const DensityMatrix rho = random_density(d, StateKind::mixed, rng);
        const DensityMatrix out = apply(ch, DensityMatrix(dephase(rho.base()).matrix()));
        ASSERT_LE(max_offdiag_magnitude(out.matrix()), 1e-12);
    }
}

TEST(channels, selective_outcomes_examples) {
    Rng rng = make_rng(3);
    const DensityMatrix rho = random_density(2, StateKind::mixed, rng);
    const auto single = selective_outcomes(IncoherentChannel({ComplexMatrix::identity(2)}), rho);
    ASSERT_EQ(single.size(), 1u);
    EXPECT_NEAR(single[0].probability, 1.0, 1e-15);
    EXPECT_LE((single[0].state.matrix() - rho.matrix()).norm(), 1e-15);

    const auto split = selective_outcomes(dephasing_channel(2), DensityMatrix(oracle::plus_state()));
    ASSERT_EQ(split.size(), 2u);
    EXPECT_NEAR(split[0].probability, 0.5, 1e-15);
    EXPECT_NEAR(split[0].state(0, 0).real(), 1.0, 1e-15);
    EXPECT_NEAR(split[1].state(1, 1).real(), 1.0, 1e-15);

    for (int t = 0; t < 500; ++t) {
        const IncoherentChannel ch = random_incoherent_channel(4, 3, 1000 + static_cast<std::uint64_t>(t));
        double total = 0;
        for (const auto &o : selective_outcomes(ch, random_density(4, StateKind::pure, rng))) total += o.probability;
        ASSERT_NEAR(total, 1.0, 1e-10);
    }
}

TEST(channels, random_channel_contract) {
    const IncoherentChannel iso = random_incoherent_channel(2, 1, 5);
    ASSERT_EQ(iso.kraus().size(), 1u);
    const Matrix &k = iso.kraus()[0].matrix();
    EXPECT_LE((k.adjoint() * k - Matrix::Identity(2, 2)).norm(), 1e-12);
    EXPECT_TRUE(validate(random_incoherent_channel(3, 4, 6).kraus()).valid());
    const IncoherentChannel a = random_incoherent_channel(4, 3, 77), b = random_incoherent_channel(4, 3, 77);
    for (std::size_t n = 0; n < 3; ++n) EXPECT_TRUE(a.kraus()[n] == b.kraus()[n]);

    const IncoherentChannel real = random_incoherent_channel(3, 3, 8, AmplitudeField::real);
    for (const auto &kr : real.kraus()) EXPECT_EQ(kr.matrix().imag().norm(), 0.0);
}

TEST(channels, phase_unitary_raises_holographic_measure) {
    // diag(1, e^{i pi/4}) is an incoherent unitary; it rotates Re rho01 into
    // equal real and imaginary parts, which C_h counts separately.
    const IncoherentChannel phase({cm({{1, 0}, {0, std::polar(1.0, M_PI / 4)}})});
    ASSERT_TRUE(phase.check().valid());
    const DensityMatrix plus(oracle::plus_state());
    const DensityMatrix out = apply(phase, plus);
    EXPECT_NEAR(c_h(plus), 1.0, 1e-15);
    EXPECT_NEAR(c_h(out), std::sqrt(2.0), 1e-12);
    EXPECT_NEAR(c_l1(out), c_l1(plus), 1e-12);
}

TEST(channels, real_amplitude_channels_do_not_raise_holographic_measure) {
    Rng rng = make_rng(9);
    for (int t = 0; t < 500; ++t) {
        const std::size_t d = 2 + static_cast<std::size_t>(t % 4);
        const IncoherentChannel ch = random_incoherent_channel(d, d, 500 + static_cast<std::uint64_t>(t), AmplitudeField::real);
        const DensityMatrix rho = random_density(d, StateKind::mixed, rng);
        ASSERT_LE(c_h(apply(ch, rho)), c_h(rho) + 1e-9);
    }
}

TEST(channels, c2c_examples) {
    Rng rng = make_rng(10);
    const DensityMatrix rho = random_density(3, StateKind::mixed, rng);
    const C2cReport one = c2c_check({{1.0, rho}});
    EXPECT_NEAR(one.lhs, one.rhs, 1e-15);
    EXPECT_NEAR(one.lhs, c_h(rho), 1e-15);
    EXPECT_TRUE(one.holds);

    const DensityMatrix a(oracle::mat({{0.2, 0}, {0, 0.8}})), b(oracle::mat({{0.6, 0}, {0, 0.4}}));
    const C2cReport zero = c2c_check({{0.3, a}, {0.7, b}});
    EXPECT_EQ(zero.lhs, 0.0);
    EXPECT_EQ(zero.rhs, 0.0);

    EXPECT_EQ(kind_of([&] { c2c_check({{0.3, a}, {0.3, b}}); }), ErrorKind::invalid_state);

    // |0><0| (x) M keeps the pseudo-norm of M.
    const Matrix m = complex_gaussian(3, 3, rng);
    EXPECT_NEAR(h_norm(flag_embed(1, 2, m)), h_norm(m), 1e-12);
}

TEST(channels, c2c_equals_average_measure) {
    // The flagged block state has no coherence between blocks, so its measure
    // is the ensemble average, and the comparison reverses convexity.
    Rng rng = make_rng(11);
    const DensityMatrix p(oracle::plus_state());
    const DensityMatrix m(oracle::mat({{0.5, -0.5}, {-0.5, 0.5}}));
    const C2cReport rep = c2c_check({{0.5, p}, {0.5, m}});
    EXPECT_NEAR(rep.lhs, 0.0, 1e-15);
    EXPECT_NEAR(rep.rhs, 1.0, 1e-15);
    EXPECT_FALSE(rep.holds);
    for (int t = 0; t < 100; ++t) {
        const DensityMatrix x = random_density(3, StateKind::mixed, rng), y = random_density(3, StateKind::pure, rng);
        const C2cReport r = c2c_check({{0.4, x}, {0.6, y}});
        EXPECT_NEAR(r.rhs, 0.4 * c_h(x) + 0.6 * c_h(y), 1e-12);
    }
}
