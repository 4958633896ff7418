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


#ifndef CWPATH_CERTIFY_HPP_
#define CWPATH_CERTIFY_HPP_

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cwpath/construct.hpp"
#include "cwpath/pairing.hpp"
#include "cwpath/permutation.hpp"

namespace cwpath {

inline constexpr std::string_view kCertificateSchema = "cwpath.certificate/1";
inline constexpr std::string_view kRankingScheme = "lehmer-lex";

using VertexSeq = std::vector<VertexId>;

struct CaseSummary {
  std::string case_id;
  std::array<int, 3> copies{};
  std::optional<int> j;
  std::map<std::string, VertexSeq> auxiliary;
  std::string fallback_reason;
  std::vector<std::string> notes;

  friend bool operator==(const CaseSummary&, const CaseSummary&) = default;
};

struct Pi3Summary {
  int lower = 0;
  int upper = 0;
  int formula = 0;
  int r = 0;
  std::uint64_t evaluated = 0;
  bool exhaustive = false;
  std::array<VertexId, 3> lower_witness{};
  std::array<VertexId, 3> r_witness{};
  std::string verdict;  // "MATCH" or "MISMATCH"

  friend bool operator==(const Pi3Summary&, const Pi3Summary&) = default;
};

struct SolverMetadata {
  std::uint64_t seed = 0;
  std::uint64_t augmentations = 0;
  int restarts_used = 0;
  int rounds = 0;
  std::uint64_t search_nodes = 0;
  std::vector<std::string> strategy_path;

  friend bool operator==(const SolverMetadata&,
                         const SolverMetadata&) = default;
};

struct CertificateCheck {
  std::string name;
  bool passed = false;

  friend bool operator==(const CertificateCheck&,
                         const CertificateCheck&) = default;
};

// Self-contained record of one structure and its omega-paths. Vertices are
// Lehmer ranks; omega is also given in permutation text form.
struct Certificate {
  std::string schema_version{kCertificateSchema};
  std::string ranking{kRankingScheme};
  int n = 0;
  std::string family;
  std::array<std::string, 3> omega;
  CaseSummary case_trace;
  std::array<std::vector<VertexSeq>, 3> bundles;  // ab, ac, bc
  std::vector<VertexSeq> omega_paths;
  std::optional<Pi3Summary> pi3_report;
  SolverMetadata solver_metadata;
  std::vector<CertificateCheck> checks;

  friend bool operator==(const Certificate&, const Certificate&) = default;
};

// Packs a construction, runs the producer-side checks and records them.
Certificate make_certificate(const CayleyGraph& g, const Construction& c,
                             const OmegaPathSet& paths, std::uint64_t seed);

Pi3Summary summarize(const Pi3Report& report);

// Stable key order, two-space indent, trailing newline.
std::string emit(const Certificate& certificate);

// Throws SchemaError naming the field path for missing, unknown or
// mistyped fields, and VersionMismatch for another schema version.
Certificate load(std::string_view document);

struct CheckResult {
  std::string name;
  bool passed = true;
  std::vector<std::string> details;
};

struct VerdictReport {
  // Set when the document could not be loaded; checks is then empty.
  std::optional<std::string> schema_error;
  std::vector<CheckResult> checks;

  bool ok() const;
};

// Re-derives adjacency from (n, family) and re-checks every claim. Shares
// no code with the producers beyond permutation primitives.
VerdictReport verify_certificate(const Certificate& certificate);
VerdictReport verify_certificate(std::string_view document);

}  // namespace cwpath

#endif  // CWPATH_CERTIFY_HPP_
