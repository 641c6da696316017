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

#include <gtest/gtest.h>

#include "cohlab/verify.hpp"
#include "test_util.hpp"

using namespace cohlab;

namespace {

const CheckResult &find(const SuiteResult &s, const std::string &name) {
    for (const auto &c : s.checks)
        if (c.name == name) return c;
    throw std::runtime_error("missing check " + name);
}

}  // namespace

TEST(verify, suite_names) {
    EXPECT_EQ(verify_suite_names().size(), 7u);
    EXPECT_EQ(kind_of([] { run_suite("nope", {}); }), ErrorKind::usage);
}

TEST(verify, small_sweeps_pass) {
    VerifyOptions o;
    o.trials = 50;
    for (const char *name : {"norm", "theorem1", "theorem2", "lemma1"}) {
        const SuiteResult s = run_suite(name, o);
        EXPECT_TRUE(s.passed) << name;
        for (const auto &c : s.checks) EXPECT_TRUE(c.passed) << name << "/" << c.name;
    }
}

TEST(verify, monotonicity_suite_reports_counterexamples) {
    VerifyOptions o;
    o.trials = 1000;
    const SuiteResult s = run_suite("theorem3", o);
    EXPECT_FALSE(s.passed);
    EXPECT_GT(find(s, "C2a_monotone_complex_channels").failures, 0u);
    EXPECT_GT(find(s, "C2c_flagged_decomposition").failures, 0u);
    EXPECT_TRUE(find(s, "C3_convexity").passed);
    EXPECT_TRUE(find(s, "C2a_real_amplitude_channels").passed);
    EXPECT_TRUE(find(s, "l1_control_C2a").passed);
}

TEST(verify, deterministic_given_seed) {
    VerifyOptions o;
    o.trials = 30;
    o.seed = 8;
    EXPECT_EQ(io::dump(io::to_json(run_suite("theorem2", o)).at("checks")),
              io::dump(io::to_json(run_suite("theorem2", o)).at("checks")));
}
