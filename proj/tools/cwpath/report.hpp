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


#ifndef CWPATH_TOOLS_REPORT_HPP_
#define CWPATH_TOOLS_REPORT_HPP_

#include <string>
#include <utility>
#include <vector>

namespace cwpath::cli {

// A titled table rendered as aligned text and as a JSON sidecar with the
// same rows.
struct Report {
  std::string title;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;

  void add(std::vector<std::string> row) { rows.push_back(std::move(row)); }
  // First line is a timestamp header; everything after it is stable.
  std::string text(const std::string& stamp) const;
  std::string json() const;
};

// UTC time as YYYY-MM-DDTHH:MM:SSZ.
std::string utc_stamp();

}  // namespace cwpath::cli

#endif  // CWPATH_TOOLS_REPORT_HPP_
