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

#ifndef COHLAB_LP_HPP
#define COHLAB_LP_HPP

#include <cstddef>
#include <vector>

#include <Eigen/Dense>

namespace cohlab::lp {

/// Solution of   maximize c^T y   subject to   A y <= b,  y >= 0   with b >= 0.
struct Result {
    Eigen::VectorXd primal;  // y, one entry per column of A
    Eigen::VectorXd dual;    // shadow prices x >= 0, one per row; A^T x >= c at optimum
    double objective = 0;
    std::vector<std::size_t> basis;  // column indices into [A | I], reusable as a warm start
    std::size_t pivots = 0;
};

/// Revised simplex, Dantzig pricing with a Bland fallback (no cycling). The slack
/// basis is feasible because b >= 0. A warm-start basis from an earlier solve
/// stays feasible when columns are appended to A; slack indices are shifted
/// accordingly by the caller passing `previous_columns`.
/// Throws ErrorKind::non_convergence when unbounded or over the pivot cap.
Result maximize(const Eigen::MatrixXd &a, const Eigen::VectorXd &b, const Eigen::VectorXd &c,
                const std::vector<std::size_t> &warm_basis = {}, std::size_t previous_columns = 0,
                std::size_t max_pivots = 100000);

}  // namespace cohlab::lp

#endif
