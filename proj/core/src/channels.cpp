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

#include "cohlab/channels.hpp"

#include <cmath>
#include <numeric>

#include "cohlab/measures.hpp"

namespace cohlab {

ChannelCheck validate(const std::vector<ComplexMatrix> &kraus, double tol) {
    if (kraus.empty()) {
        fail(ErrorKind::dimension, "channel needs at least one Kraus operator");
    }
    std::size_t d = kraus.front().dim();
    auto n = static_cast<Eigen::Index>(d);
    ChannelCheck out;
    Matrix sum = Matrix::Zero(n, n);
    out.incoherent = true;
    for (std::size_t k = 0; k < kraus.size(); ++k) {
        const Matrix &km = kraus[k].matrix();
        if (kraus[k].dim() != d) {
            fail(ErrorKind::dimension, "Kraus operator " + std::to_string(k) + " has inconsistent shape");
        }
        sum += km.adjoint() * km;
        for (Eigen::Index c = 0; c < n; ++c) {
            int big = 0;
            for (Eigen::Index r = 0; r < n; ++r) {
                if (std::abs(km(r, c)) > tol) {
                    ++big;
                }
            }
            if (big > 1) {
                out.incoherent = false;
                out.diagnostics.push_back("Kraus " + std::to_string(k) + " column " + std::to_string(c) + " has " +
                                          std::to_string(big) + " nonzero entries");
            }
        }
    }
    out.completeness_defect = (sum - Matrix::Identity(n, n)).cwiseAbs().maxCoeff();
    out.complete = out.completeness_defect <= tol;
    if (!out.complete) {
        out.diagnostics.push_back("max |sum K^dagger K - I| = " + std::to_string(out.completeness_defect));
    }
    return out;
}

IncoherentChannel::IncoherentChannel(std::vector<ComplexMatrix> kraus, double tol)
    : kraus_(std::move(kraus)), tol_(tol), check_(validate(kraus_, tol)) {
}

namespace {

void require_valid(const IncoherentChannel &ch, const DensityMatrix &rho) {
    if (!ch.check().valid()) {
        std::string why = ch.check().diagnostics.empty() ? "invalid" : ch.check().diagnostics.front();
        fail(ErrorKind::invalid_channel, why);
    }
    if (ch.dim() != rho.dim()) {
        fail(ErrorKind::dimension, "channel acts on d=" + std::to_string(ch.dim()) + ", state has d=" +
                                       std::to_string(rho.dim()));
    }
}

}  // namespace

DensityMatrix apply(const IncoherentChannel &channel, const DensityMatrix &rho) {
    require_valid(channel, rho);
    auto n = static_cast<Eigen::Index>(rho.dim());
    Matrix out = Matrix::Zero(n, n);
    for (const auto &k : channel.kraus()) {
        out += k.matrix() * rho.matrix() * k.matrix().adjoint();
    }
    out = 0.5 * (out + out.adjoint());
    return DensityMatrix(std::move(out), std::max(rho.tol(), channel.tol()));
}

std::vector<SelectiveOutcome> selective_outcomes(const IncoherentChannel &channel, const DensityMatrix &rho) {
    require_valid(channel, rho);
    std::vector<SelectiveOutcome> out;
    double tol = std::max(rho.tol(), channel.tol());
    for (std::size_t i = 0; i < channel.kraus().size(); ++i) {
        const Matrix &k = channel.kraus()[i].matrix();
        Matrix branch = k * rho.matrix() * k.adjoint();
        double p = branch.trace().real();
        if (p > tol) {
            branch /= p;
            branch = 0.5 * (branch + branch.adjoint());
            out.push_back(SelectiveOutcome{i, p, DensityMatrix(std::move(branch), tol)});
        }
    }
    return out;
}

IncoherentChannel random_incoherent_channel(std::size_t dim, std::size_t n_kraus, std::uint64_t seed,
                                            AmplitudeField field) {
    if (dim < 2 || dim > kMaxDim) {
        fail(ErrorKind::dimension, "random_incoherent_channel requires 2 <= d <= 64");
    }
    if (n_kraus < 1) {
        fail(ErrorKind::usage, "random_incoherent_channel requires n_kraus >= 1");
    }
    Rng rng = make_rng(seed, 0xC4A77E1);
    std::uniform_int_distribution<std::size_t> row_pick(0, dim - 1);
    std::normal_distribution<double> normal(0.0, 1.0);
    auto draw = [&]() {
        double re = normal(rng);
        double im = field == AmplitudeField::complex ? normal(rng) : 0.0;
        return Complex(re, im);
    };
    auto nk = static_cast<Eigen::Index>(n_kraus);

    for (int attempt = 0; attempt < 10000; ++attempt) {
        // targets(n, k) = f_n(k); amplitudes(n, k) = nonzero entry of column k in K_n.
        std::vector<std::vector<std::size_t>> targets(n_kraus, std::vector<std::size_t>(dim));
        for (auto &f : targets) {
            for (auto &t : f) {
                t = row_pick(rng);
            }
        }
        Matrix amp(nk, static_cast<Eigen::Index>(dim));
        bool ok = true;
        for (std::size_t k = 0; k < dim && ok; ++k) {
            Vector a(nk);
            for (Eigen::Index n = 0; n < nk; ++n) {
                a(n) = draw();
            }
            // Orthogonality to column j on the shared support {n : f_n(j) = f_n(k)}.
            if (k > 0) {
                Matrix constraints = Matrix::Zero(static_cast<Eigen::Index>(k), nk);
                for (std::size_t j = 0; j < k; ++j) {
                    for (std::size_t n = 0; n < n_kraus; ++n) {
                        if (targets[n][j] == targets[n][k]) {
                            constraints(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(n)) =
                                std::conj(amp(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(j)));
                        }
                    }
                }
                Eigen::CompleteOrthogonalDecomposition<Matrix> cod(constraints);
                a -= cod.pseudoInverse() * (constraints * a);
            }
            double norm = a.norm();
            if (norm < 1e-6) {
                ok = false;
                break;
            }
            amp.col(static_cast<Eigen::Index>(k)) = a / norm;
        }
        if (!ok) {
            continue;
        }
        std::vector<ComplexMatrix> kraus;
        auto n = static_cast<Eigen::Index>(dim);
        for (std::size_t i = 0; i < n_kraus; ++i) {
            Matrix km = Matrix::Zero(n, n);
            for (std::size_t k = 0; k < dim; ++k) {
                km(static_cast<Eigen::Index>(targets[i][k]), static_cast<Eigen::Index>(k)) =
                    amp(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k));
            }
            kraus.emplace_back(std::move(km));
        }
        IncoherentChannel ch(std::move(kraus));
        if (ch.check().valid()) {
            return ch;
        }
    }
    fail(ErrorKind::non_convergence, "could not draw a random incoherent channel");
}

IncoherentChannel dephasing_channel(std::size_t dim) {
    std::vector<ComplexMatrix> kraus;
    auto n = static_cast<Eigen::Index>(dim);
    for (Eigen::Index i = 0; i < n; ++i) {
        Matrix k = Matrix::Zero(n, n);
        k(i, i) = 1.0;
        kraus.emplace_back(std::move(k));
    }
    return IncoherentChannel(std::move(kraus));
}

Matrix flag_embed(std::size_t index, std::size_t parts, const Matrix &m) {
    auto d = m.rows();
    auto total = static_cast<Eigen::Index>(parts) * d;
    Matrix out = Matrix::Zero(total, total);
    out.block(static_cast<Eigen::Index>(index) * d, static_cast<Eigen::Index>(index) * d, d, d) = m;
    return out;
}

C2cReport c2c_check(const std::vector<WeightedState> &parts, double tol) {
    if (parts.empty()) {
        fail(ErrorKind::usage, "c2c_check needs at least one part");
    }
    std::size_t d = parts.front().state.dim();
    double total = 0;
    for (const auto &p : parts) {
        if (p.state.dim() != d) {
            fail(ErrorKind::dimension, "c2c_check parts have different dimensions");
        }
        if (p.probability < -tol) {
            fail(ErrorKind::invalid_state, "negative probability in decomposition");
        }
        total += p.probability;
    }
    if (std::abs(total - 1.0) > tol) {
        fail(ErrorKind::invalid_state, "probabilities sum to " + std::to_string(total));
    }
    if (parts.size() * d > kMaxDim) {
        fail(ErrorKind::dimension, "flagged state exceeds the dimension cap");
    }
    auto n = static_cast<Eigen::Index>(d);
    Matrix mixture = Matrix::Zero(n, n);
    Matrix flagged = Matrix::Zero(n * static_cast<Eigen::Index>(parts.size()), n * static_cast<Eigen::Index>(parts.size()));
    for (std::size_t i = 0; i < parts.size(); ++i) {
        mixture += parts[i].probability * parts[i].state.matrix();
        flagged += flag_embed(i, parts.size(), parts[i].probability * parts[i].state.matrix());
    }
    C2cReport rep{c_h(mixture), c_h(flagged), false};
    rep.holds = rep.lhs >= rep.rhs - tol;
    return rep;
}

}  // namespace cohlab
