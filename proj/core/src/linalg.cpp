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

#include "cohlab/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace cohlab {

namespace {

void check_finite(const Matrix &m) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
        for (Eigen::Index r = 0; r < m.rows(); ++r) {
            if (!std::isfinite(m(r, c).real()) || !std::isfinite(m(r, c).imag())) {
                fail(ErrorKind::invalid_state, "matrix contains non-finite entries");
            }
        }
    }
}

}  // namespace

// ---------------------------------------------------------------------------
// ComplexMatrix

ComplexMatrix::ComplexMatrix(Matrix entries) : entries_(std::move(entries)) {
    if (entries_.rows() == 0 || entries_.rows() != entries_.cols()) {
        fail(ErrorKind::dimension,
             "expected a non-empty square matrix, got " + std::to_string(entries_.rows()) + "x" +
                 std::to_string(entries_.cols()));
    }
    if (static_cast<std::size_t>(entries_.rows()) > kMaxDim) {
        fail(ErrorKind::dimension,
             "dimension " + std::to_string(entries_.rows()) + " exceeds cap " + std::to_string(kMaxDim));
    }
}

ComplexMatrix ComplexMatrix::zero(std::size_t dim) {
    auto n = static_cast<Eigen::Index>(dim);
    return ComplexMatrix(Matrix::Zero(n, n));
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
    auto n = static_cast<Eigen::Index>(dim);
    return ComplexMatrix(Matrix::Identity(n, n));
}

ComplexMatrix ComplexMatrix::from_rows(std::initializer_list<std::initializer_list<Complex>> rows) {
    auto n = static_cast<Eigen::Index>(rows.size());
    Eigen::Index cols = rows.size() == 0 ? 0 : static_cast<Eigen::Index>(rows.begin()->size());
    Matrix m(n, cols);
    Eigen::Index r = 0;
    for (const auto &row : rows) {
        if (static_cast<Eigen::Index>(row.size()) != cols) {
            fail(ErrorKind::dimension, "ragged row list");
        }
        Eigen::Index c = 0;
        for (const auto &v : row) {
            m(r, c++) = v;
        }
        ++r;
    }
    return ComplexMatrix(std::move(m));
}

bool ComplexMatrix::operator==(const ComplexMatrix &other) const {
    return entries_.rows() == other.entries_.rows() && entries_ == other.entries_;
}

// ---------------------------------------------------------------------------
// HermitianOperator / DensityMatrix

double max_hermitian_defect(const Matrix &a) {
    return (a - a.adjoint()).cwiseAbs().maxCoeff();
}

double max_offdiag_magnitude(const Matrix &a) {
    double best = 0;
    for (Eigen::Index c = 0; c < a.cols(); ++c) {
        for (Eigen::Index r = 0; r < a.rows(); ++r) {
            if (r != c) {
                best = std::max(best, std::abs(a(r, c)));
            }
        }
    }
    return best;
}

HermitianOperator::HermitianOperator(ComplexMatrix m, double tol) : base_(std::move(m)), tol_(tol) {
    if (!(tol_ >= 0) || !std::isfinite(tol_)) {
        fail(ErrorKind::usage, "tolerance must be a finite nonnegative number");
    }
    check_finite(base_.matrix());
    double defect = max_hermitian_defect(base_.matrix());
    if (defect > tol_) {
        fail(ErrorKind::non_hermitian, "max |A - A^dagger| = " + std::to_string(defect));
    }
}

HermitianOperator::HermitianOperator(Matrix m, double tol) : HermitianOperator(ComplexMatrix(std::move(m)), tol) {
}

DensityMatrix::DensityMatrix(ComplexMatrix m, double tol) : HermitianOperator(std::move(m), tol) {
    double trace_defect = std::abs(matrix().trace() - Complex(1.0, 0.0));
    if (trace_defect > tol) {
        fail(ErrorKind::invalid_state, "|tr(rho) - 1| = " + std::to_string(trace_defect));
    }
    double lmin = min_eigenvalue(*this).value;
    if (lmin < -tol) {
        fail(ErrorKind::invalid_state, "lambda_min(rho) = " + std::to_string(lmin));
    }
}

DensityMatrix::DensityMatrix(Matrix m, double tol) : DensityMatrix(ComplexMatrix(std::move(m)), tol) {
}

bool DensityMatrix::is_incoherent() const {
    return max_offdiag_magnitude(matrix()) <= tol();
}

// ---------------------------------------------------------------------------
// Spectral helpers

Spectrum eigh(const HermitianOperator &a) {
    // Symmetrize so both triangles agree exactly before handing to the solver.
    Matrix h = 0.5 * (a.matrix() + a.matrix().adjoint());
    Eigen::SelfAdjointEigenSolver<Matrix> solver(h);
    if (solver.info() != Eigen::Success) {
        fail(ErrorKind::non_convergence, "Hermitian eigensolver failed");
    }
    return Spectrum{solver.eigenvalues(), solver.eigenvectors()};
}

EigenPair min_eigenvalue(const HermitianOperator &a) {
    Spectrum s = eigh(a);
    return EigenPair{s.values(0), s.vectors.col(0)};
}

EigenPair max_eigenvalue(const HermitianOperator &a) {
    Spectrum s = eigh(a);
    Eigen::Index last = s.values.size() - 1;
    return EigenPair{s.values(last), s.vectors.col(last)};
}

// ---------------------------------------------------------------------------
// Dephasing, traces, norms

ComplexMatrix dephase(const ComplexMatrix &a) {
    auto n = static_cast<Eigen::Index>(a.dim());
    Matrix out = Matrix::Zero(n, n);
    out.diagonal() = a.matrix().diagonal();
    return ComplexMatrix(std::move(out));
}

double trace_product(const HermitianOperator &a, const HermitianOperator &b) {
    if (a.dim() != b.dim()) {
        fail(ErrorKind::dimension,
             "trace_product of " + std::to_string(a.dim()) + " and " + std::to_string(b.dim()) + " matrices");
    }
    // tr(AB) = sum_ij A_ij B_ji
    Complex t = (a.matrix().transpose().cwiseProduct(b.matrix())).sum();
    double tol = std::max(a.tol(), b.tol());
    if (std::abs(t.imag()) > tol) {
        fail(ErrorKind::non_hermitian, "Im tr(AB) = " + std::to_string(t.imag()));
    }
    return t.real();
}

double h_norm(const Matrix &a) {
    return a.real().cwiseAbs().sum() + a.imag().cwiseAbs().sum();
}

double h_norm(const ComplexMatrix &a) {
    return h_norm(a.matrix());
}

double trace_distance(const Matrix &a, const Matrix &b) {
    Matrix diff = a - b;
    diff = 0.5 * (diff + diff.adjoint());
    Eigen::SelfAdjointEigenSolver<Matrix> solver(diff, Eigen::EigenvaluesOnly);
    return 0.5 * solver.eigenvalues().cwiseAbs().sum();
}

double frobenius_distance(const Matrix &a, const Matrix &b) {
    return (a - b).norm();
}

DensityMatrix psd_project(const HermitianOperator &a) {
    Spectrum s = eigh(a);
    RealVector clipped = s.values.cwiseMax(0.0);
    double total = clipped.sum();
    if (!(total > 0)) {
        fail(ErrorKind::invalid_state, "no positive spectral weight to project onto");
    }
    clipped /= total;
    Matrix out = s.vectors * clipped.cast<Complex>().asDiagonal() * s.vectors.adjoint();
    out = 0.5 * (out + out.adjoint());
    return DensityMatrix(std::move(out), std::max(a.tol(), kDefaultTol));
}

// ---------------------------------------------------------------------------
// Randomness

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

Rng make_rng(std::uint64_t seed, std::uint64_t stream) {
    return Rng(mix_seed(seed, stream));
}

Matrix complex_gaussian(std::size_t rows, std::size_t cols, Rng &rng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    Matrix g(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
    for (Eigen::Index c = 0; c < g.cols(); ++c) {
        for (Eigen::Index r = 0; r < g.rows(); ++r) {
            double re = normal(rng);
            double im = normal(rng);
            g(r, c) = Complex(re, im);
        }
    }
    return g;
}

DensityMatrix random_density(std::size_t dim, StateKind kind, Rng &rng) {
    if (dim < 2 || dim > kMaxDim) {
        fail(ErrorKind::dimension, "random_density requires 2 <= d <= 64, got " + std::to_string(dim));
    }
    Matrix g = complex_gaussian(dim, kind == StateKind::pure ? 1 : dim, rng);
    Matrix rho = g * g.adjoint();
    rho /= rho.trace().real();
    rho = 0.5 * (rho + rho.adjoint());
    return DensityMatrix(std::move(rho));
}

DensityMatrix random_density(std::size_t dim, StateKind kind, std::uint64_t seed) {
    Rng rng = make_rng(seed);
    return random_density(dim, kind, rng);
}

Matrix random_hermitian(std::size_t dim, Rng &rng) {
    Matrix g = complex_gaussian(dim, dim, rng);
    return 0.5 * (g + g.adjoint());
}

}  // namespace cohlab
