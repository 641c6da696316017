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

#include "cohlab/lp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "cohlab/error.hpp"

namespace cohlab::lp {

namespace {

struct Factored {
    Eigen::PartialPivLU<Eigen::MatrixXd> lu;
    Eigen::VectorXd values;  // basic variable values
    Eigen::VectorXd duals;
};

Eigen::VectorXd column(const Eigen::MatrixXd &a, std::size_t j) {
    auto n = static_cast<std::size_t>(a.cols());
    if (j < n) {
        return a.col(static_cast<Eigen::Index>(j));
    }
    Eigen::VectorXd e = Eigen::VectorXd::Zero(a.rows());
    e(static_cast<Eigen::Index>(j - n)) = 1.0;
    return e;
}

double cost(const Eigen::VectorXd &c, std::size_t j) {
    return j < static_cast<std::size_t>(c.size()) ? c(static_cast<Eigen::Index>(j)) : 0.0;
}

Factored factor(const Eigen::MatrixXd &a, const Eigen::VectorXd &b, const Eigen::VectorXd &c,
                const std::vector<std::size_t> &basis) {
    auto m = a.rows();
    Eigen::MatrixXd bm(m, m);
    Eigen::VectorXd cb(m);
    for (Eigen::Index i = 0; i < m; ++i) {
        bm.col(i) = column(a, basis[static_cast<std::size_t>(i)]);
        cb(i) = cost(c, basis[static_cast<std::size_t>(i)]);
    }
    Factored f{Eigen::PartialPivLU<Eigen::MatrixXd>(bm), {}, {}};
    f.values = f.lu.solve(b);
    f.duals = f.lu.transpose().solve(cb);
    return f;
}

bool usable_warm_start(const Eigen::MatrixXd &a, const Eigen::VectorXd &b, const Eigen::VectorXd &c,
                       const std::vector<std::size_t> &basis) {
    if (basis.size() != static_cast<std::size_t>(a.rows())) {
        return false;
    }
    auto total = static_cast<std::size_t>(a.cols() + a.rows());
    for (std::size_t j : basis) {
        if (j >= total) {
            return false;
        }
    }
    Factored f = factor(a, b, c, basis);
    if (!(f.lu.rcond() > 1e-12)) {
        return false;
    }
    return f.values.minCoeff() >= -1e-10;
}

}  // namespace

Result maximize(const Eigen::MatrixXd &a, const Eigen::VectorXd &b, const Eigen::VectorXd &c,
                const std::vector<std::size_t> &warm_basis, std::size_t previous_columns, std::size_t max_pivots) {
    auto m = static_cast<std::size_t>(a.rows());
    auto n = static_cast<std::size_t>(a.cols());
    if (static_cast<std::size_t>(b.size()) != m || static_cast<std::size_t>(c.size()) != n) {
        fail(ErrorKind::dimension, "lp::maximize shape mismatch");
    }
    if (m > 0 && b.minCoeff() < 0) {
        fail(ErrorKind::usage, "lp::maximize requires b >= 0");
    }

    std::vector<std::size_t> basis;
    if (!warm_basis.empty()) {
        // Remap slack indices from the previous column count.
        basis = warm_basis;
        for (std::size_t &j : basis) {
            if (j >= previous_columns) {
                j = j - previous_columns + n;
            }
        }
        if (!usable_warm_start(a, b, c, basis)) {
            basis.clear();
        }
    }
    if (basis.empty()) {
        for (std::size_t i = 0; i < m; ++i) {
            basis.push_back(n + i);
        }
    }

    double scale = 1.0;
    if (n > 0) {
        scale = std::max(1.0, c.cwiseAbs().maxCoeff());
    }
    const double reduced_tol = 1e-13 * scale;
    const double pivot_tol = 1e-12;

    std::vector<char> in_basis(n + m, 0);
    for (std::size_t j : basis) {
        in_basis[j] = 1;
    }

    Result result;
    std::size_t degenerate_run = 0;
    for (;;) {
        Factored f = factor(a, b, c, basis);

        // Dantzig pricing; Bland's smallest-index rule after a run of
        // degenerate pivots, which rules out cycling.
        bool use_bland = degenerate_run >= 20;
        Eigen::VectorXd structural_reduced = c - a.transpose() * f.duals;
        std::size_t entering = n + m;
        double best_reduced = reduced_tol;
        for (std::size_t j = 0; j < n + m; ++j) {
            if (in_basis[j]) {
                continue;
            }
            double reduced = j < n ? structural_reduced(static_cast<Eigen::Index>(j))
                                   : -f.duals(static_cast<Eigen::Index>(j - n));
            if (reduced > best_reduced) {
                entering = j;
                if (use_bland) {
                    break;
                }
                best_reduced = reduced;
            }
        }
        if (entering == n + m) {
            result.primal = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(n));
            for (std::size_t i = 0; i < m; ++i) {
                if (basis[i] < n) {
                    result.primal(static_cast<Eigen::Index>(basis[i])) =
                        std::max(0.0, f.values(static_cast<Eigen::Index>(i)));
                }
            }
            result.dual = f.duals.cwiseMax(0.0);
            result.objective = c.dot(result.primal);
            result.basis = basis;
            return result;
        }

        if (result.pivots >= max_pivots) {
            fail(ErrorKind::non_convergence, "lp::maximize pivot cap reached");
        }

        Eigen::VectorXd direction = f.lu.solve(column(a, entering));
        std::size_t leave_row = m;
        double best_ratio = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < m; ++i) {
            double di = direction(static_cast<Eigen::Index>(i));
            if (di > pivot_tol) {
                double ratio = std::max(0.0, f.values(static_cast<Eigen::Index>(i))) / di;
                if (ratio < best_ratio - 1e-15 ||
                    (std::abs(ratio - best_ratio) <= 1e-15 && leave_row < m && basis[i] < basis[leave_row])) {
                    best_ratio = ratio;
                    leave_row = i;
                }
            }
        }
        if (leave_row == m) {
            fail(ErrorKind::non_convergence, "lp::maximize objective is unbounded");
        }
        degenerate_run = best_ratio <= 1e-14 ? degenerate_run + 1 : 0;
        in_basis[basis[leave_row]] = 0;
        basis[leave_row] = entering;
        in_basis[entering] = 1;
        ++result.pivots;
    }
}

}  // namespace cohlab::lp
