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

#ifndef COHLAB_CHANNELS_HPP
#define COHLAB_CHANNELS_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "cohlab/linalg.hpp"

namespace cohlab {

struct ChannelCheck {
    bool complete = false;    // sum_n K_n^dagger K_n = I within tol
    bool incoherent = false;  // each K_n has at most one entry above tol per column
    double completeness_defect = 0;
    std::vector<std::string> diagnostics;

    bool valid() const noexcept {
        return complete && incoherent;
    }
};

/// Incoherent CPTP map in Kraus form (square Kraus operators).
class IncoherentChannel {
   public:
    /// Throws ErrorKind::dimension on an empty list or inconsistent shapes.
    /// Validity is checked here and cached; see check().
    explicit IncoherentChannel(std::vector<ComplexMatrix> kraus, double tol = kDefaultTol);

    std::size_t dim() const noexcept {
        return kraus_.front().dim();
    }
    const std::vector<ComplexMatrix> &kraus() const noexcept {
        return kraus_;
    }
    double tol() const noexcept {
        return tol_;
    }
    const ChannelCheck &check() const noexcept {
        return check_;
    }

   private:
    std::vector<ComplexMatrix> kraus_;
    double tol_;
    ChannelCheck check_;
};

ChannelCheck validate(const std::vector<ComplexMatrix> &kraus, double tol = kDefaultTol);

/// sum_n K_n rho K_n^dagger. Throws ErrorKind::invalid_channel for an invalid
/// channel and ErrorKind::dimension on mismatch.
DensityMatrix apply(const IncoherentChannel &channel, const DensityMatrix &rho);

struct SelectiveOutcome {
    std::size_t kraus_index;
    double probability;
    DensityMatrix state;
};

/// Outcomes with p_n = tr(K_n rho K_n^dagger) > tol; rho_n normalized.
std::vector<SelectiveOutcome> selective_outcomes(const IncoherentChannel &channel, const DensityMatrix &rho);

enum class AmplitudeField {
    complex,  // complex-normal amplitudes
    real,     // real-normal amplitudes
};

/// Draws a column-to-row map f_n for every Kraus operator together with
/// normal amplitudes, then enforces sum_n K_n^dagger K_n = I exactly: column k
/// of the stacked isometry is projected orthogonal to the earlier columns on
/// their shared support and normalized, which keeps one nonzero per column.
IncoherentChannel random_incoherent_channel(std::size_t dim, std::size_t n_kraus, std::uint64_t seed,
                                            AmplitudeField field = AmplitudeField::complex);

/// Fully dephasing channel {|i><i|}.
IncoherentChannel dephasing_channel(std::size_t dim);

struct C2cReport {
    double lhs;  // C_h(sum_i p_i rho_i)
    double rhs;  // C_h(sum_i p_i |i><i| (x) rho_i)
    bool holds;  // lhs >= rhs - tol
};

struct WeightedState {
    double probability;
    DensityMatrix state;
};

/// Builds the flagged block state sum_i p_i |i><i| (x) rho_i and compares its
/// holographic measure against that of rho = sum_i p_i rho_i.
/// Throws ErrorKind::invalid_state when the probabilities are negative or do
/// not sum to one within tol.
C2cReport c2c_check(const std::vector<WeightedState> &parts, double tol = kDefaultTol);

/// Kronecker product |i><i| (x) M embedded in dimension parts * dim(M).
Matrix flag_embed(std::size_t index, std::size_t parts, const Matrix &m);

}  // namespace cohlab

#endif
