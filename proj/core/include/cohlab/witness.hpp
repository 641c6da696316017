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

#ifndef COHLAB_WITNESS_HPP
#define COHLAB_WITNESS_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

#include "cohlab/linalg.hpp"

namespace cohlab {

/// Outcome of checking the two defining witness conditions. Normalization
/// (tr W = 1) is reported in `trace` but never required.
struct WitnessCheck {
    bool valid = false;
    bool diagonal_nonnegative = false;  // tr(W delta) >= 0 for every incoherent delta
    bool detects_something = false;     // lambda_min(W) < -tol
    double min_diagonal = 0;
    double lambda_min = 0;
    double trace = 0;
    std::string diagnostic;
};

WitnessCheck is_witness(const HermitianOperator &w);

/// A Hermitian operator that has passed is_witness. Construction throws
/// ErrorKind::invalid_witness otherwise.
class Witness {
   public:
    explicit Witness(HermitianOperator op);

    const HermitianOperator &op() const noexcept {
        return op_;
    }
    const Matrix &matrix() const noexcept {
        return op_.matrix();
    }
    std::size_t dim() const noexcept {
        return op_.dim();
    }
    double tol() const noexcept {
        return op_.tol();
    }
    const WitnessCheck &check() const noexcept {
        return check_;
    }
    bool optimal() const noexcept {
        return optimal_;
    }

    /// tr(W rho) < -tol.
    bool detects(const DensityMatrix &rho) const;
    /// Stringent variant: |tr(W rho)| > tol.
    bool detects_stringent(const DensityMatrix &rho) const;

   private:
    HermitianOperator op_;
    WitnessCheck check_;
    bool optimal_;
};

/// An optimal witness is one whose diagonal vanishes (every |w_ii| <= tol).
bool is_optimal(const Witness &w);

/// W_rho = -rho + Delta(rho): zero diagonal, and tr(W_rho rho) < 0 for any
/// coherent rho. Throws ErrorKind::incoherent_input for incoherent rho.
Witness construct_witness(const DensityMatrix &rho);

enum class PartKind { real, imag };

/// Off-diagonal generator witnesses for 0 <= l < m < d:
///   real: (|l><m| + |m><l|) / 2          tr(W rho) = Re rho_lm
///   imag: (i/2) (|l><m| - |m><l|)        tr(W rho) = Im rho_lm
/// Both have eigenvalues {-1/2, 0 (d-2 times), +1/2}.
Witness generator_witness(std::size_t dim, std::size_t l, std::size_t m, PartKind kind);
Matrix generator_matrix(std::size_t dim, std::size_t l, std::size_t m, PartKind kind);

struct UnifiedWitness {
    Witness unified;    // tr(W^U rho) = C_h(rho)
    Witness detection;  // -W^U, negative on rho
    double expectation;
};

/// Sum over pairs l < m of p^R W^R_lm + p^I W^I_lm with p = 2 sign(part),
/// zero when |part| <= tol. Throws ErrorKind::incoherent_input for incoherent rho.
UnifiedWitness unified_witness(const DensityMatrix &rho);

/// Decision for W1 = (1 - eps) W2 + eps P with P >= 0 and 0 <= eps < 1.
struct FinerReport {
    bool finer = false;
    double epsilon = 0;      // smallest feasible eps
    double epsilon_max = 0;  // largest feasible eps
    std::optional<HermitianOperator> positive_part;  // P at `epsilon`; absent when eps = 0
    double xi_lower = 0;        // 1 / (1 - epsilon_max), a lower bound on xi
    double witness_margin = 0;  // lambda_min(P), or best lambda_min(W1 - (1-eps) W2) when not finer
};

struct FinerOptions {
    double search_width = 1e-8;
    double psd_margin = 1e-9;
};

/// Is W2 finer than W1 (every state W1 detects, W2 detects)?
FinerReport is_finer(const Witness &w1, const Witness &w2, const FinerOptions &options = {});

struct XiOptions {
    std::size_t refine_steps = 400;
};

/// Upper estimate of xi = inf over rho in D_{W1} of |tr(W2 rho) / tr(W1 rho)|
/// by rejection sampling followed by a local descent. Requires is_finer(W1, W2).
/// Throws ErrorKind::empty_detection_set when no sample lands in D_{W1}.
double estimate_xi(const Witness &w1, const Witness &w2, std::size_t samples, std::uint64_t seed,
                   const XiOptions &options = {});

/// Random valid witness: random Hermitian off-diagonal part over a random
/// nonnegative diagonal. With `zero_diagonal` the result is optimal; otherwise
/// every diagonal entry is strictly positive.
Witness random_witness(std::size_t dim, Rng &rng, bool zero_diagonal = false);

/// The witness (1 + eps) W - eps Delta(W), which detects strictly more than W
/// whenever W has a nonzero diagonal.
Witness sharpen_witness(const Witness &w, double eps);

}  // namespace cohlab

#endif
