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

#ifndef COHLAB_LINALG_HPP
#define COHLAB_LINALG_HPP

// Dense complex matrices in a fixed reference basis {|0>, ..., |d-1>}, the
// dephasing map, the holographic pseudo-norm, spectral helpers and seeded
// random-state generation.

#include <complex>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <random>

#include <Eigen/Dense>

#include "cohlab/error.hpp"

namespace cohlab {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

/// Largest supported Hilbert-space dimension.
inline constexpr std::size_t kMaxDim = 64;

/// Default tolerance for structural invariants (Hermiticity, PSD, trace).
inline constexpr double kDefaultTol = 1e-9;

/// Square complex matrix with 1 <= dim <= kMaxDim.
class ComplexMatrix {
   public:
    /// Throws ErrorKind::dimension for empty, non-square, or oversized input.
    explicit ComplexMatrix(Matrix entries);

    static ComplexMatrix zero(std::size_t dim);
    static ComplexMatrix identity(std::size_t dim);
    static ComplexMatrix from_rows(std::initializer_list<std::initializer_list<Complex>> rows);

    std::size_t dim() const noexcept {
        return static_cast<std::size_t>(entries_.rows());
    }
    const Matrix &matrix() const noexcept {
        return entries_;
    }
    Complex operator()(std::size_t row, std::size_t col) const {
        return entries_(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col));
    }

    bool operator==(const ComplexMatrix &other) const;

   private:
    Matrix entries_;
};

/// A ComplexMatrix known to be Hermitian within `tol` (entrywise |A - A^dagger|).
class HermitianOperator {
   public:
    explicit HermitianOperator(ComplexMatrix m, double tol = kDefaultTol);
    explicit HermitianOperator(Matrix m, double tol = kDefaultTol);

    std::size_t dim() const noexcept {
        return base_.dim();
    }
    const Matrix &matrix() const noexcept {
        return base_.matrix();
    }
    const ComplexMatrix &base() const noexcept {
        return base_;
    }
    double tol() const noexcept {
        return tol_;
    }
    Complex operator()(std::size_t row, std::size_t col) const {
        return base_(row, col);
    }

   private:
    ComplexMatrix base_;
    double tol_;
};

/// Hermitian, positive semidefinite (lambda_min >= -tol), unit trace.
class DensityMatrix : public HermitianOperator {
   public:
    explicit DensityMatrix(ComplexMatrix m, double tol = kDefaultTol);
    explicit DensityMatrix(Matrix m, double tol = kDefaultTol);

    /// True when every off-diagonal magnitude is <= tol().
    bool is_incoherent() const;
};

struct EigenPair {
    double value;
    Vector vector;  // unit norm
};

/// Eigen-decomposition with ascending eigenvalues; columns of `vectors` are
/// the matching orthonormal eigenvectors.
struct Spectrum {
    RealVector values;
    Matrix vectors;
};

Spectrum eigh(const HermitianOperator &a);
EigenPair min_eigenvalue(const HermitianOperator &a);
EigenPair max_eigenvalue(const HermitianOperator &a);

/// Delta(A) = sum_i <i|A|i> |i><i|.
ComplexMatrix dephase(const ComplexMatrix &a);

/// Real part of tr(AB). Throws ErrorKind::dimension on mismatch and
/// ErrorKind::non_hermitian when |Im tr(AB)| exceeds the larger input tol.
double trace_product(const HermitianOperator &a, const HermitianOperator &b);

/// Holographic pseudo-norm: sum over all entries of |Re a_lm| + |Im a_lm|.
/// Homogeneous only under real or purely imaginary scalars.
double h_norm(const ComplexMatrix &a);
double h_norm(const Matrix &a);

double max_offdiag_magnitude(const Matrix &a);
double max_hermitian_defect(const Matrix &a);

/// Trace distance 0.5 * ||A - B||_1 for Hermitian arguments.
double trace_distance(const Matrix &a, const Matrix &b);
double frobenius_distance(const Matrix &a, const Matrix &b);

/// Clip negative eigenvalues to zero and renormalize the trace.
/// Throws ErrorKind::invalid_state when nothing positive survives.
DensityMatrix psd_project(const HermitianOperator &a);

// ---------------------------------------------------------------------------
// Randomness. Every generator takes an explicit seed; there is no global state.

using Rng = std::mt19937_64;

/// SplitMix64 finalizer; used to derive independent per-trial seeds.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream = 0);
Rng make_rng(std::uint64_t seed, std::uint64_t stream = 0);

/// Matrix with independent standard normal real and imaginary parts.
Matrix complex_gaussian(std::size_t rows, std::size_t cols, Rng &rng);

enum class StateKind { pure, mixed };

/// pure: |psi><psi| for a normalized complex-Gaussian vector;
/// mixed: G G^dagger / tr(G G^dagger) for a d x d complex-Gaussian G.
DensityMatrix random_density(std::size_t dim, StateKind kind, std::uint64_t seed);
DensityMatrix random_density(std::size_t dim, StateKind kind, Rng &rng);

/// Random Hermitian matrix (G + G^dagger)/2 with complex-Gaussian G.
Matrix random_hermitian(std::size_t dim, Rng &rng);

}  // namespace cohlab

#endif
