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

#ifndef COHLAB_TOMOGRAPHY_HPP
#define COHLAB_TOMOGRAPHY_HPP

// Generator-basis tomography for qudits and the four-intensity Stokes
// protocol for qubits.
//
// Normalization: every generator satisfies tr(l_a l_b) = delta_ab / 2, so a
// state expands as  rho = I/d + sum_j 2 tr(rho l_j) l_j.  The off-diagonal
// generators are exactly the generator witnesses (|l><m| + |m><l|)/2 and
// (i/2)(|l><m| - |m><l|); the diagonal family is
//   D_k = (sum_{l<k} |l><l| - k |k><k|) / sqrt(2 k (k + 1)),  k = 1..d-1.

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <vector>

#include "cohlab/linalg.hpp"
#include "cohlab/witness.hpp"

namespace cohlab {

enum class GeneratorKind { real, imag, diagonal };

const char *generator_kind_name(GeneratorKind kind);

struct Generator {
    std::size_t index;
    GeneratorKind kind;
    std::size_t l;  // row of the off-diagonal pair, or k for the diagonal family
    std::size_t m;  // column of the off-diagonal pair, 0 for the diagonal family
    HermitianOperator op;
    Spectrum spectrum;
};

/// Ordered SU(d) generators: pairs (l, m) with l < m in lexicographic order,
/// real before imaginary, then the d-1 diagonal generators.
class GeneratorBasis {
   public:
    /// Throws ErrorKind::dimension unless 2 <= d <= 32.
    explicit GeneratorBasis(std::size_t dim);

    std::size_t dim() const noexcept {
        return dim_;
    }
    std::size_t size() const noexcept {
        return generators_.size();
    }
    std::size_t offdiag_count() const noexcept {
        return dim_ * dim_ - dim_;
    }
    const Generator &operator[](std::size_t index) const;
    const std::vector<Generator> &generators() const noexcept {
        return generators_;
    }

    std::size_t index_of(std::size_t l, std::size_t m, PartKind kind) const;
    std::size_t diagonal_index(std::size_t k) const;

    /// Inverse of the expansion: sum_j 2 tr(H l_j) l_j, plus tr(H) I/d.
    Matrix expand(const std::vector<double> &coefficients, double trace = 1.0) const;

   private:
    std::size_t dim_;
    std::vector<Generator> generators_;
};

GeneratorBasis su_basis(std::size_t dim);

// ---------------------------------------------------------------------------
// Stokes protocol (qubits)

/// Photon counts of the four intensity measurements: half-transmitting
/// filter, H polarizer, D polarizer, R polarizer, with
///   |D> = (|H> - |V>)/sqrt(2),  |R> = (|H> - i|V>)/sqrt(2).
/// In expectation mode the counts are the (non-integer) Poisson means.
struct StokesRecord {
    std::array<double, 4> counts{};
    double intensity = 0;  // N
    bool expectation = false;
};

StokesRecord stokes_expected(const DensityMatrix &rho, double intensity);

/// Independent Poisson draws with means N/2, N<H|rho|H>, N<D|rho|D>, N<R|rho|R>.
StokesRecord stokes_simulate(const DensityMatrix &rho, double intensity, std::uint64_t seed);

/// S0 = 2 n0 and S_k = 2 (n_k - n0).
std::array<double, 4> stokes_parameters(const StokesRecord &record);

/// Which operators multiply S_k/S0 in the inversion.
///  measured: sigma'_k = 2 Pi_k - I for Pi = |H><H|, |D><D|, |R><R|; with the
///            basis conventions above these are sigma_z, -sigma_x, -sigma_y, and
///            the inversion reproduces rho from its Born means.
///  printed:  (sigma_x, sigma_y, sigma_z) paired with (S1, S2, S3) as labelled.
///            Kept for comparison; it does not invert the count model.
enum class StokesFrame { measured, printed };

std::array<Matrix, 3> stokes_frame(StokesFrame frame = StokesFrame::measured);

struct StateEstimate {
    HermitianOperator raw;     // linear inversion, unit trace, possibly not PSD
    DensityMatrix projected;   // eigenvalue clipping + renormalization
    bool was_projected;
};

/// rho = (1/2) (I + sum_k (S_k/S0) sigma_k) in the chosen frame.
/// Throws ErrorKind::invalid_state when n0 = 0.
StateEstimate stokes_reconstruct(const StokesRecord &record, StokesFrame frame = StokesFrame::measured);

// ---------------------------------------------------------------------------
// Projective generator measurements (qudits)

struct CountRecord {
    std::size_t generator = 0;
    GeneratorKind kind = GeneratorKind::real;
    std::uint64_t shots = 0;          // 0 in expectation mode
    std::vector<double> outcomes;     // distinct eigenvalues of the generator
    std::vector<std::uint64_t> counts;
    double estimate = 0;
    double std_error = 0;
    bool expectation = false;
};

/// Multinomial sampling in the generator's eigenbasis. The standard error
/// uses Jeffreys pseudo-counts (1/2 per outcome) in the variance so that it
/// stays positive when every shot lands on one eigenvalue.
CountRecord measure_generator(const DensityMatrix &rho, const GeneratorBasis &basis, std::size_t index,
                              std::uint64_t shots, std::uint64_t seed);

/// shots -> infinity limit: estimate = tr(rho l_j), std_error = 0.
CountRecord measure_generator_expected(const DensityMatrix &rho, const GeneratorBasis &basis, std::size_t index);

/// rho = I/d + sum_j 2 r_j l_j from one record per generator.
/// Throws ErrorKind::usage when a generator is missing or duplicated.
StateEstimate reconstruct(std::size_t dim, const std::vector<CountRecord> &records, const GeneratorBasis &basis);

struct CoherenceDecision {
    bool coherent = false;
    std::optional<std::size_t> witness;  // generator index with the largest |z|
    std::vector<double> z_scores;        // aligned with the input records
    double threshold = 0;                // Bonferroni-corrected two-sided normal quantile
};

/// Off-diagonal generator records (Re rho01, Im rho01) implied by a Stokes
/// record in the measured frame, with delta-method Poisson standard errors.
std::vector<CountRecord> stokes_offdiag_records(const StokesRecord &record);

/// Bonferroni-corrected two-sided normal quantile z with P(|Z| > z) = alpha / tests.
double bonferroni_threshold(double alpha, std::size_t tests);

/// Declares coherence iff some |estimate| / std_error exceeds the threshold.
/// Expectation-mode records are decided exactly (|estimate| > tol).
/// Throws ErrorKind::usage for diagonal-generator records or for sampled
/// records with zero standard error.
CoherenceDecision coherence_decision(const std::vector<CountRecord> &records, double alpha,
                                     double tol = kDefaultTol);

/// CSV rows "index,estimate,stderr" with a header line.
void write_records_csv(std::ostream &out, const std::vector<CountRecord> &records);

}  // namespace cohlab

#endif
