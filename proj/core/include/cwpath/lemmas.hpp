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


#ifndef CWPATH_LEMMAS_HPP_
#define CWPATH_LEMMAS_HPP_

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "cwpath/permutation.hpp"

namespace cwpath {

struct LemmaCheck {
  std::string name;
  std::string claim;
  std::string observed;
  bool passed = false;
};

struct LemmaOptions {
  // Test hook: delete vertex 0 from every graph before checking, which must
  // make at least one check fail.
  bool inject_fault = false;
};

struct LemmaReport {
  int n = 0;
  std::vector<LemmaCheck> checks;
  // Three vertices with the largest common neighborhood.
  std::optional<std::array<VertexId, 3>> r_witness;

  bool ok() const;
};

// Structural facts about the wheel graph of degree n and its copies, checked
// exhaustively. Requires n in {4, 5}.
LemmaReport run_lemma_suite(int n, const LemmaOptions& options = {});

}  // namespace cwpath

#endif  // CWPATH_LEMMAS_HPP_
