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
#include <sys/wait.h>

#include <unistd.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

namespace fs = std::filesystem;

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir = fs::temp_directory_path() /
          ("cwpath-cli-" + std::to_string(::getpid()) + "-" +
           ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::remove_all(dir);
    fs::create_directories(dir);
  }
  void TearDown() override { fs::remove_all(dir); }

  // Runs the CLI with output redirected into the scratch directory.
  int run(const std::string& args) {
    const std::string cmd = "CWPATH_OUTPUT_DIR='" + dir.string() + "' '" +
                            CWPATH_CLI_PATH + "' " + args + " > '" +
                            (dir / "stdout.txt").string() + "' 2> '" +
                            (dir / "stderr.txt").string() + "'";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  }

  std::string slurp(const std::string& name) const {
    std::ifstream in(dir / name);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
  }

  fs::path dir;
};

TEST_F(Cli, GenerateDot) {
  ASSERT_EQ(run("gen --n 4 --family wheel --format dot"), 0);
  const std::string dot = slurp("wheel4.dot");
  std::size_t edges = 0;
  for (std::size_t p = 0; (p = dot.find(" -- ", p)) != std::string::npos; ++p)
    ++edges;
  EXPECT_EQ(edges, 72u);
}

TEST_F(Cli, GenerateEdgeListForBubbleSortStar) {
  ASSERT_EQ(run("gen --n 4 --family bss --format edgelist"), 0);
  const std::string list = slurp("bss4.edges");
  EXPECT_EQ(std::count(list.begin(), list.end(), '\n'), 61);
}

TEST_F(Cli, UsageErrors) {
  EXPECT_EQ(run("gen --n 3 --family wheel"), 2);
  EXPECT_EQ(run("gen --n 4 --family star"), 2);
  EXPECT_EQ(run("structure --n 5 --random"), 2);
  EXPECT_EQ(run("structure --n 4 --omega '[1,2,3,4];[1,2,3,4];[2,1,3,4]'"), 2);
  EXPECT_EQ(run("pi3 --n 5 --exhaustive"), 2);
  EXPECT_EQ(run("pi3 --n 5 --samples 10"), 2);
  EXPECT_EQ(run("lemmas --n 6"), 2);
  EXPECT_EQ(run(""), 2);
  EXPECT_EQ(run("--help"), 0);
}

TEST_F(Cli, StructureThenVerify) {
  ASSERT_EQ(run("structure --n 5 --omega '[1,2,3,4,5];[2,3,1,4,5];[3,1,2,4,5]'"
                " --seed 1 --strict"),
            0);
  const std::string out = slurp("stdout.txt");
  EXPECT_NE(out.find("case odd-1.2.2 (j = 2)"), std::string::npos);
  EXPECT_NE(out.find("bundles (2,4,4), 5 omega-paths"), std::string::npos);
  const fs::path cert = dir / "structure-n5-0-30-48.json";
  ASSERT_TRUE(fs::exists(cert)) << out;
  EXPECT_EQ(run("verify '" + cert.string() + "'"), 0);

  // Same seed, same bytes.
  const std::string first = slurp(cert.filename());
  ASSERT_EQ(run("structure --n 5 --omega '[1,2,3,4,5];[2,3,1,4,5];"
                "[3,1,2,4,5]' --seed 1 --strict"),
            0);
  EXPECT_EQ(slurp(cert.filename()), first);
}

TEST_F(Cli, VerifyRejectsTamperedCertificate) {
  const std::string target = (dir / "cert.json").string();
  ASSERT_EQ(run("structure --n 4 --random --seed 5 -o '" + target + "'"), 0);
  std::string doc = slurp("cert.json");
  ASSERT_FALSE(doc.empty());
  // Tampering with the declared degree breaks the graph check.
  doc.replace(doc.find("\"n\": 4"), 6, "\"n\": 5");
  std::ofstream(dir / "bad.json") << doc;
  EXPECT_EQ(run("verify '" + (dir / "bad.json").string() + "'"), 4);

  std::string old = slurp("cert.json");
  old.replace(old.find("certificate/1"), 13, "certificate/2");
  std::ofstream(dir / "old.json") << old;
  EXPECT_EQ(run("verify '" + (dir / "old.json").string() + "'"), 2);
  EXPECT_EQ(run("verify '" + (dir / "missing.json").string() + "'"), 2);
}

TEST_F(Cli, Pi3AtDegreeFour) {
  ASSERT_EQ(run("pi3 --n 4 --exhaustive --seed 1"), 0);
  const std::string report = slurp("pi3-n4.txt");
  EXPECT_EQ(report.rfind("# generated ", 0), 0u);
  EXPECT_NE(report.find("MATCH"), std::string::npos);
  EXPECT_TRUE(fs::exists(dir / "pi3-n4.json"));
  ASSERT_TRUE(fs::exists(dir / "pi3-n4-witness.json"));
  EXPECT_EQ(run("verify '" + (dir / "pi3-n4-witness.json").string() + "'"), 0);
}

TEST_F(Cli, Lemmas) {
  EXPECT_EQ(run("lemmas --n 4"), 0);
  EXPECT_TRUE(fs::exists(dir / "lemmas-n4.txt"));
  EXPECT_EQ(run("lemmas --n 4 --inject-fault"), 5);
  EXPECT_NE(slurp("lemmas-n4.txt").find("FAIL"), std::string::npos);
}

}  // namespace
