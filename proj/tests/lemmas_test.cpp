// Copyright 2026 The cwpath Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <gtest/gtest.h>

#include <string>

#include "cwpath/error.hpp"
#include "cwpath/lemmas.hpp"

namespace cwpath {
namespace {

const LemmaCheck& named(const LemmaReport& r, const std::string& name) {
  for (const LemmaCheck& c : r.checks)
    if (c.name == name) return c;
  throw std::runtime_error("no check " + name);
}

class LemmaSuite : public ::testing::TestWithParam<int> {};

TEST_P(LemmaSuite, AllChecksHold) {
  const LemmaReport report = run_lemma_suite(GetParam());
  EXPECT_EQ(report.n, GetParam());
  EXPECT_EQ(report.checks.size(), 9u);
  for (const LemmaCheck& c : report.checks)
    EXPECT_TRUE(c.passed) << c.name << ": " << c.observed;
  EXPECT_TRUE(report.ok());
  ASSERT_TRUE(report.r_witness.has_value());
}

TEST_P(LemmaSuite, InjectedFaultIsDetected) {
  LemmaOptions options;
  options.inject_fault = true;
  const LemmaReport report = run_lemma_suite(GetParam(), options);
  EXPECT_FALSE(report.ok());
  EXPECT_FALSE(named(report, "wheel-regular").passed);
}

INSTANTIATE_TEST_SUITE_P(Degrees, LemmaSuite, ::testing::Values(4, 5));

TEST(LemmaSuite, ObservedValues) {
  const LemmaReport r = run_lemma_suite(4);
  EXPECT_NE(named(r, "cross-edge-count").observed.find("6"), std::string::npos);
  EXPECT_NE(named(r, "triple-common-neighbors").observed.find("3"),
            std::string::npos);
}

TEST(LemmaSuite, DegreeRange) {
  EXPECT_THROW(run_lemma_suite(3), Error);
  EXPECT_THROW(run_lemma_suite(6), Error);
}

}  // namespace
}  // namespace cwpath
