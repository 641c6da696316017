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

#ifndef COHLAB_MEASURES_HPP
#define COHLAB_MEASURES_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "cohlab/linalg.hpp"
#include "cohlab/witness.hpp"

namespace cohlab {

/// Holographic measure: sum over l != m of |Re rho_lm| + |Im rho_lm|,
/// i.e. h_norm(rho - Delta(rho)).
double c_h(const HermitianOperator &rho);
double c_h(const Matrix &m);

/// l1 measure: sum over j != k of |rho_jk|.
double c_l1(const HermitianOperator &rho);
double c_l1(const Matrix &m);

struct RatioReport {
    double c_h;
    double c_l1;
    bool upper_holds;  // C_h >= C_l1 - tol
    bool lower_holds;  // C_l1 >= (sqrt(2)/2) C_h - tol
};

RatioReport ratio_check(const DensityMatrix &rho);

/// Result of the robustness-of-coherence solve
///   min sum_i d_i - 1   subject to   diag(d) - rho >= 0,
/// equivalent to  rho + s tau = (1 + s) delta  with D = (1 + s) delta.
struct RobustnessSolution {
    double value = 0;                     // s
    std::vector<double> incoherent_cover;  // d_i, D = diag(d)
    std::optional<DensityMatrix> tau;      // (D - rho)/s, present when s > 1e-9
    std::optional<Witness> dual_witness;   // W* with Delta(W*) = 0 and W* <= I
    double primal_gap = 0;                 // lambda_min(D - rho); >= -1e-9 when certified
    double dual_gap = 0;                   // s - max{0, -tr(W* rho)}
    double dual_value = 0;                 // max{0, -tr(W* rho)}
    std::size_t iterations = 0;
    std::size_t cuts = 0;
    bool dual_from_fallback = false;
};

struct RocOptions {
    double feasibility_tol = 1e-9;
    std::size_t max_cuts = 10000;
    double duplicate_cosine = 1.0 - 1e-10;
    std::size_t max_dim = 32;
};

/// Raised when the cut budget runs out; carries the best bounds found.
class RobustnessNonConvergence : public Error {
   public:
    RobustnessNonConvergence(double lower, double upper, std::size_t cuts);
    double lower() const noexcept {
        return lower_;
    }
    double upper() const noexcept {
        return upper_;
    }

   private:
    double lower_;
    double upper_;
};

/// Cutting-plane solve over the diagonal cover. Each round solves a small LP
/// with the accumulated cuts  v^dagger diag(d) v >= v^dagger rho v,  then adds
/// the eigenvectors of diag(d) - rho with negative eigenvalue as new cuts.
/// The LP multipliers assemble Y = sum mu_k v_k v_k^dagger + diag(slack) with
/// unit diagonal, giving the dual witness W* = I - Y.
RobustnessSolution roc(const DensityMatrix &rho, const RocOptions &options = {});

/// max{0, -tr(W rho)} for W with Delta(W) >= 0 and W <= I.
/// Throws ErrorKind::invalid_bound_witness if W violates either constraint.
double roc_lower_bound(const DensityMatrix &rho, const HermitianOperator &w);

struct Theorem4Report {
    double residual;  // |C_h(rho) - s C_h(tau)|
    double c_h_rho;
    double s;
    double c_h_tau;
    bool tau_bound_holds;  // C_h(tau) <= 1 + 1e-6
};

/// Throws ErrorKind::incoherent_input when rho is incoherent (tau undefined).
Theorem4Report verify_theorem4(const DensityMatrix &rho, const RocOptions &options = {});

}  // namespace cohlab

#endif
