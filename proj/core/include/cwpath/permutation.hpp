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

#ifndef CWPATH_PERMUTATION_HPP_
#define CWPATH_PERMUTATION_HPP_

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cwpath {

inline constexpr int kMinDegree = 3;
// 8! = 40320 vertices is the largest graph we are willing to materialize.
inline constexpr int kMaxDegree = 8;

// Dense vertex index: the Lehmer rank of a permutation.
using VertexId = std::uint32_t;
inline constexpr VertexId kNoVertex = ~VertexId{0};

std::uint32_t factorial(int n);

// A permutation of [n] in one-line notation; position i (1-based) holds
// sigma(i).
class Permutation {
 public:
  Permutation() = default;

  static Permutation identity(int n);
  // Throws Error(ParseError) naming the offending value if `images` is not a
  // bijection on [n].
  static Permutation from_images(std::span<const int> images);
  // Accepts "[2,1,3,4]" (whitespace tolerated).
  static Permutation parse(std::string_view text);

  int degree() const noexcept { return n_; }
  // sigma(point) for 1 <= point <= degree().
  int operator()(int point) const { return images_[point - 1]; }
  std::span<const std::uint8_t> images() const noexcept {
    return {images_.data(), static_cast<std::size_t>(n_)};
  }

  Permutation inverse() const;
  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::array<std::uint8_t, kMaxDegree> images_{};
  std::uint8_t n_ = 0;
};

// (lhs * rhs)(i) = lhs(rhs(i)). Right multiplication by a generator moves to
// a Cayley-graph neighbor.
Permutation compose(const Permutation& lhs, const Permutation& rhs);

// The transposition (i j) with 1 <= i < j.
class Transposition {
 public:
  Transposition() = default;
  // Normalizes the order of the two points; throws if they coincide or are
  // non-positive.
  Transposition(int i, int j);

  int first() const noexcept { return i_; }
  int second() const noexcept { return j_; }
  bool fixes(int point) const noexcept { return point != i_ && point != j_; }

  Permutation as_permutation(int n) const;
  std::string to_string() const;  // "(i j)"
  static Transposition parse(std::string_view text);

  friend bool operator==(const Transposition&, const Transposition&) = default;

 private:
  int i_ = 1;
  int j_ = 2;
};

// sigma * (i j): swaps positions i and j of the one-line notation.
Permutation apply_generator(const Permutation& sigma, Transposition t);

// Lexicographic Lehmer rank in [0, n!).
VertexId rank(const Permutation& sigma);
Permutation unrank(VertexId k, int n);

enum class Family { BubbleSortStar, Wheel };

std::string_view family_name(Family family);  // "bss" / "wheel"
Family parse_family(std::string_view name);

// Generating transpositions, in a fixed order: (1 2) .. (1 n), then
// (2 3) .. (n-1 n), then (2 n) for the wheel family.
struct GeneratorSet {
  Family family = Family::Wheel;
  int n = 0;
  std::vector<Transposition> members;

  static GeneratorSet make(Family family, int n);
  int size() const noexcept { return static_cast<int>(members.size()); }
  // Index of `t` in members, or -1.
  int index_of(Transposition t) const;
};

}  // namespace cwpath

#endif  // CWPATH_PERMUTATION_HPP_
