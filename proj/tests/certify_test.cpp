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

#include <algorithm>
#include <fstream>
#include <sstream>
#include <string>

#include "cwpath/certify.hpp"
#include "cwpath/error.hpp"
#include "cwpath/pairing.hpp"

namespace cwpath {
namespace {

std::string read_golden(const std::string& name) {
  std::ifstream in(std::string(CWPATH_GOLDEN_DIR) + "/" + name,
                   std::ios::binary);
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

std::string produce(int n, const std::array<const char*, 3>& omega_text,
                    std::uint64_t seed) {
  const CayleyGraph g = CayleyGraph::build(n, Family::Wheel);
  std::array<VertexId, 3> omega{};
  for (int i = 0; i < 3; ++i)
    omega[i] = g.vertex(Permutation::parse(omega_text[i]));
  ConstructOptions options;
  options.strict = true;
  options.budget.seed = seed;
  const Construction c = build_structure(g, omega, options);
  return emit(make_certificate(g, c, pair_structure(g.full_view(), c.structure),
                               seed));
}

const CheckResult* find_check(const VerdictReport& r, const std::string& name) {
  for (const CheckResult& c : r.checks)
    if (c.name == name) return &c;
  return nullptr;
}

struct GoldenCase {
  const char* file;
  int n;
  std::array<const char*, 3> omega;
};

class Golden : public ::testing::TestWithParam<GoldenCase> {};

TEST_P(Golden, ReproducesByteForByte) {
  const GoldenCase& gc = GetParam();
  const std::string golden = read_golden(gc.file);
  ASSERT_FALSE(golden.empty());
  EXPECT_EQ(produce(gc.n, gc.omega, 1), golden);
}

TEST_P(Golden, RoundTripsThroughLoad) {
  const std::string golden = read_golden(GetParam().file);
  const Certificate c = load(golden);
  EXPECT_EQ(emit(c), golden);
  EXPECT_EQ(load(emit(c)), c);
  const VerdictReport v = verify_certificate(golden);
  EXPECT_TRUE(v.ok());
  EXPECT_FALSE(v.schema_error.has_value());
}

INSTANTIATE_TEST_SUITE_P(
    Certificates, Golden,
    ::testing::Values(
        GoldenCase{"cert_n4.json", 4,
                   {"[1,2,3,4]", "[2,1,4,3]", "[3,4,1,2]"}},
        GoldenCase{"cert_n5.json", 5,
                   {"[1,2,3,4,5]", "[2,3,1,4,5]", "[3,1,2,4,5]"}},
        GoldenCase{"cert_n5_three_copies.json", 5,
                   {"[1,2,3,4,5]", "[2,1,3,5,4]", "[5,4,3,2,1]"}}),
    [](const ::testing::TestParamInfo<GoldenCase>& info) {
      std::string name = info.param.file;
      name = name.substr(0, name.find('.'));
      return name;
    });

TEST(Certificate, DeterministicAcrossRuns) {
  const std::array<const char*, 3> omega{"[1,2,3,4,5,6]", "[6,5,4,3,2,1]",
                                         "[2,1,3,4,6,5]"};
  EXPECT_EQ(produce(6, omega, 42), produce(6, omega, 42));
}

TEST(Certificate, CorruptedEdgeIsRejected) {
  Certificate c = load(read_golden("cert_n4.json"));
  // Swap an interior vertex for one not adjacent to its predecessor.
  const CayleyGraph g = CayleyGraph::build(4, Family::Wheel);
  auto& path = c.bundles[1][0];
  VertexId stranger = 0;
  while (stranger == path[1] || g.graph().adjacent(stranger, path[1]) ||
         std::find(path.begin(), path.end(), stranger) != path.end())
    ++stranger;
  path[2] = stranger;
  const VerdictReport v = verify_certificate(c);
  EXPECT_FALSE(v.ok());
  const CheckResult* paths = find_check(v, "bundle-paths");
  ASSERT_NE(paths, nullptr);
  EXPECT_FALSE(paths->passed);
  ASSERT_FALSE(paths->details.empty());
  EXPECT_NE(paths->details.front().find("not adjacent"), std::string::npos);
}

TEST(Certificate, OddCountsClaimedForEvenDegreeAreRejected) {
  Certificate c = load(read_golden("cert_n4.json"));
  // Claim (2,4,4) by duplicating two a-c and two b-c paths.
  c.bundles[1].push_back(c.bundles[1][0]);
  c.bundles[1].push_back(c.bundles[1][1]);
  c.bundles[2].push_back(c.bundles[2][0]);
  c.bundles[2].push_back(c.bundles[2][1]);
  const VerdictReport v = verify_certificate(c);
  EXPECT_FALSE(v.ok());
  EXPECT_FALSE(find_check(v, "bundle-counts")->passed);
  EXPECT_FALSE(find_check(v, "bundle-disjointness")->passed);
}

TEST(Certificate, TamperedOmegaPathsAreRejected) {
  Certificate c = load(read_golden("cert_n5.json"));
  c.omega_paths.pop_back();
  const VerdictReport v = verify_certificate(c);
  EXPECT_FALSE(find_check(v, "pairing-count")->passed);

  Certificate d = load(read_golden("cert_n5.json"));
  d.case_trace.copies = {1, 1, 1};
  EXPECT_FALSE(find_check(verify_certificate(d), "case-trace")->passed);
}

TEST(Certificate, MissingFieldIsNamed) {
  std::string doc = read_golden("cert_n4.json");
  const std::string field = "  \"ranking\": \"lehmer-lex\",\n";
  doc.erase(doc.find(field), field.size());
  try {
    load(doc);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::SchemaError);
    EXPECT_NE(std::string(e.what()).find("$.ranking"), std::string::npos);
  }
  const VerdictReport v = verify_certificate(doc);
  ASSERT_TRUE(v.schema_error.has_value());
  EXPECT_TRUE(v.checks.empty());
}

TEST(Certificate, UnknownFieldIsRejected) {
  std::string doc = read_golden("cert_n4.json");
  doc.insert(doc.find("\"solver_metadata\": {") + 20, "\n    \"hint\": 1,");
  try {
    load(doc);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::SchemaError);
    EXPECT_NE(std::string(e.what()).find("hint"), std::string::npos);
  }
}

TEST(Certificate, SchemaVersions) {
  std::string doc = read_golden("cert_n4.json");
  const std::string v1 = "cwpath.certificate/1";
  doc.replace(doc.find(v1), v1.size(), "cwpath.certificate/2");
  try {
    load(doc);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::VersionMismatch);
  }
  std::string other = read_golden("cert_n4.json");
  other.replace(other.find(v1), v1.size(), "something/1");
  try {
    load(other);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::SchemaError);
  }
  EXPECT_TRUE(verify_certificate(std::string_view("{not json"))
                  .schema_error.has_value());
}

TEST(Certificate, Pi3ReportIsChecked) {
  const CayleyGraph g = CayleyGraph::build(4, Family::Wheel);
  SampleSpec spec;
  spec.mode = SampleMode::Exhaustive;
  spec.seed = 3;
  const Pi3Lower low = pi3_lower(g, spec);
  const Pi3Report report = make_report(4, low, pi3_upper(g));
  Certificate c =
      make_certificate(g, low.witness, low.witness_paths, low.witness_seed);
  c.pi3_report = summarize(report);
  EXPECT_EQ(c.pi3_report->verdict, "MATCH");
  EXPECT_TRUE(verify_certificate(c).ok());
  EXPECT_EQ(load(emit(c)), c);

  Certificate lied = c;
  lied.pi3_report->upper = 4;
  EXPECT_FALSE(find_check(verify_certificate(lied), "pi3-report")->passed);
  Certificate fake_r = c;
  fake_r.pi3_report->r_witness = {0, 1, 2};
  EXPECT_FALSE(find_check(verify_certificate(fake_r), "pi3-report")->passed);
}

}  // namespace
}  // namespace cwpath
