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

#ifndef COHLAB_VERIFY_HPP
#define COHLAB_VERIFY_HPP

// Randomized property sweeps behind `cohlab verify`. Each suite is a list
// of checks; a check fails when any trial violates its inequality. Checks
// marked informational are reported but never fail their suite.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "cohlab/serialize.hpp"

namespace cohlab {

struct VerifyOptions {
    std::size_t trials = 0;  // 0 selects each suite's default sweep size
    std::uint64_t seed = 0;
};

struct CheckResult {
    std::string name;
    bool passed = true;
    bool informational = false;
    std::size_t trials = 0;
    std::size_t failures = 0;
    double worst = 0;  // check-specific worst-case metric
    std::string detail;
};

struct SuiteResult {
    std::string suite;
    bool passed = true;
    double seconds = 0;
    std::vector<CheckResult> checks;
};

/// lemma1, theorem1, theorem2, theorem3, theorem4, norm, e_n.
const std::vector<std::string> &verify_suite_names();

/// Throws ErrorKind::usage for an unknown suite name.
SuiteResult run_suite(const std::string &name, const VerifyOptions &options);

/// "all" expands to every suite in order.
std::vector<SuiteResult> run_suites(const std::string &name, const VerifyOptions &options);

namespace io {
Json to_json(const CheckResult &c);
Json to_json(const SuiteResult &s);
}  // namespace io

}  // namespace cohlab

#endif
