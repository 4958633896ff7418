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

#include "cwpath/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "cwpath/error.hpp"

namespace cwpath {
namespace {

void check_degree(int n) {
  if (n < kMinDegree) {
    throw Error(Errc::DegreeTooSmall,
                "degree " + std::to_string(n) + " is below " +
                    std::to_string(kMinDegree));
  }
  if (n > kMaxDegree) {
    throw Error(Errc::DegreeTooLarge,
                "degree " + std::to_string(n) + " exceeds the cap of " +
                    std::to_string(kMaxDegree));
  }
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

int parse_int(std::string_view s, std::string_view context) {
  s = trim(s);
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
    throw Error(Errc::ParseError, "malformed integer '" + std::string(s) +
                                      "' in " + std::string(context));
  }
  return value;
}

}  // namespace

std::uint32_t factorial(int n) {
  std::uint32_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint32_t>(i);
  return f;
}

Permutation Permutation::identity(int n) {
  check_degree(n);
  Permutation p;
  p.n_ = static_cast<std::uint8_t>(n);
  for (int i = 0; i < n; ++i) p.images_[i] = static_cast<std::uint8_t>(i + 1);
  return p;
}

Permutation Permutation::from_images(std::span<const int> images) {
  const int n = static_cast<int>(images.size());
  check_degree(n);
  std::array<bool, kMaxDegree + 1> seen{};
  Permutation p;
  p.n_ = static_cast<std::uint8_t>(n);
  for (int i = 0; i < n; ++i) {
    const int v = images[i];
    if (v < 1 || v > n) {
      throw Error(Errc::ParseError, "value " + std::to_string(v) +
                                        " is outside [1," + std::to_string(n) +
                                        "]");
    }
    if (seen[v]) {
      throw Error(Errc::ParseError,
                  "not a bijection: value " + std::to_string(v) +
                      " is duplicated");
    }
    seen[v] = true;
    p.images_[i] = static_cast<std::uint8_t>(v);
  }
  return p;
}

Permutation Permutation::parse(std::string_view text) {
  const std::string_view body = trim(text);
  if (body.size() < 2 || body.front() != '[' || body.back() != ']') {
    throw Error(Errc::ParseError,
                "permutation must be written as [i1,...,in]: '" +
                    std::string(text) + "'");
  }
  std::vector<int> images;
  std::string_view rest = body.substr(1, body.size() - 2);
  while (true) {
    const auto comma = rest.find(',');
    images.push_back(parse_int(rest.substr(0, comma), text));
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  return from_images(images);
}

Permutation Permutation::inverse() const {
  Permutation p = *this;
  for (int i = 0; i < n_; ++i)
    p.images_[images_[i] - 1] = static_cast<std::uint8_t>(i + 1);
  return p;
}

std::string Permutation::to_string() const {
  std::string out = "[";
  for (int i = 0; i < n_; ++i) {
    if (i) out += ',';
    out += std::to_string(images_[i]);
  }
  out += ']';
  return out;
}

Permutation compose(const Permutation& lhs, const Permutation& rhs) {
  if (lhs.degree() != rhs.degree()) {
    throw Error(Errc::DegreeMismatch,
                "cannot compose permutations of degree " +
                    std::to_string(lhs.degree()) + " and " +
                    std::to_string(rhs.degree()));
  }
  std::array<int, kMaxDegree> images{};
  for (int i = 1; i <= lhs.degree(); ++i) images[i - 1] = lhs(rhs(i));
  return Permutation::from_images(
      std::span<const int>(images.data(), lhs.degree()));
}

Transposition::Transposition(int i, int j) {
  if (i == j || i < 1 || j < 1) {
    throw Error(Errc::TranspositionOutOfRange,
                "invalid transposition (" + std::to_string(i) + " " +
                    std::to_string(j) + ")");
  }
  i_ = std::min(i, j);
  j_ = std::max(i, j);
}

Permutation Transposition::as_permutation(int n) const {
  return apply_generator(Permutation::identity(n), *this);
}

std::string Transposition::to_string() const {
  return "(" + std::to_string(i_) + " " + std::to_string(j_) + ")";
}

Transposition Transposition::parse(std::string_view text) {
  std::string_view body = trim(text);
  if (body.size() < 5 || body.front() != '(' || body.back() != ')') {
    throw Error(Errc::ParseError,
                "transposition must be written as (i j): '" +
                    std::string(text) + "'");
  }
  body = trim(body.substr(1, body.size() - 2));
  const auto space = body.find(' ');
  if (space == std::string_view::npos) {
    throw Error(Errc::ParseError,
                "transposition must be written as (i j): '" +
                    std::string(text) + "'");
  }
  return Transposition(parse_int(body.substr(0, space), text),
                       parse_int(body.substr(space + 1), text));
}

Permutation apply_generator(const Permutation& sigma, Transposition t) {
  if (t.second() > sigma.degree()) {
    throw Error(Errc::TranspositionOutOfRange,
                t.to_string() + " exceeds degree " +
                    std::to_string(sigma.degree()));
  }
  std::array<int, kMaxDegree> images{};
  for (int i = 1; i <= sigma.degree(); ++i) images[i - 1] = sigma(i);
  std::swap(images[t.first() - 1], images[t.second() - 1]);
  return Permutation::from_images(
      std::span<const int>(images.data(), sigma.degree()));
}

VertexId rank(const Permutation& sigma) {
  const int n = sigma.degree();
  VertexId r = 0;
  for (int i = 1; i <= n; ++i) {
    // Lehmer digit: how many later images are smaller.
    VertexId smaller = 0;
    for (int j = i + 1; j <= n; ++j)
      if (sigma(j) < sigma(i)) ++smaller;
    r += smaller * factorial(n - i);
  }
  return r;
}

Permutation unrank(VertexId k, int n) {
  check_degree(n);
  if (k >= factorial(n)) {
    throw Error(Errc::RankOutOfRange, "rank " + std::to_string(k) +
                                          " is outside [0," +
                                          std::to_string(factorial(n)) + ")");
  }
  std::vector<int> pool(n);
  for (int i = 0; i < n; ++i) pool[i] = i + 1;
  std::array<int, kMaxDegree> images{};
  for (int i = 0; i < n; ++i) {
    const VertexId f = factorial(n - 1 - i);
    const auto digit = static_cast<std::size_t>(k / f);
    k %= f;
    images[i] = pool[digit];
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(digit));
  }
  return Permutation::from_images(std::span<const int>(images.data(), n));
}

std::string_view family_name(Family family) {
  return family == Family::Wheel ? "wheel" : "bss";
}

Family parse_family(std::string_view name) {
  if (name == "wheel" || name == "cw") return Family::Wheel;
  if (name == "bss" || name == "bs") return Family::BubbleSortStar;
  throw Error(Errc::ParseError,
              "unknown family '" + std::string(name) + "' (wheel|bss)");
}

GeneratorSet GeneratorSet::make(Family family, int n) {
  check_degree(n);
  if (family == Family::Wheel && n < 4)
    throw Error(Errc::DegreeTooSmall, "wheel requires n >= 4");
  GeneratorSet set;
  set.family = family;
  set.n = n;
  for (int j = 2; j <= n; ++j) set.members.emplace_back(1, j);
  for (int j = 2; j <= n - 1; ++j) set.members.emplace_back(j, j + 1);
  if (family == Family::Wheel) set.members.emplace_back(2, n);
  return set;
}

int GeneratorSet::index_of(Transposition t) const {
  for (int i = 0; i < size(); ++i)
    if (members[i] == t) return i;
  return -1;
}

}  // namespace cwpath
