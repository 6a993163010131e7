// Copyright 2026 The Authors.
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

#ifndef FLATMATCH_SUBSET_HPP_
#define FLATMATCH_SUBSET_HPP_

#include <bit>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

namespace flatmatch {

inline constexpr int kMaxGroundSize = 64;

// A subset of a ground set {0, ..., 63}, stored as a bit mask.
class Subset {
 public:
  constexpr Subset() = default;
  constexpr explicit Subset(std::uint64_t bits) : bits_(bits) {}
  Subset(std::initializer_list<int> elements) {
    for (int e : elements) bits_ |= bit(e);
  }

  static Subset from_elements(const std::vector<int>& elements) {
    Subset s;
    for (int e : elements) s.insert(e);
    return s;
  }
  // {0, ..., n - 1}
  static constexpr Subset full(int n) {
    return n >= 64 ? Subset(~std::uint64_t{0})
                   : Subset((std::uint64_t{1} << n) - 1);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(int e) const { return (bits_ & bit(e)) != 0; }
  constexpr bool is_subset_of(Subset other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  constexpr bool is_proper_subset_of(Subset other) const {
    return is_subset_of(other) && bits_ != other.bits_;
  }
  // Smallest element, or -1 when empty.
  constexpr int min() const {
    return bits_ == 0 ? -1 : std::countr_zero(bits_);
  }
  constexpr int max() const {
    return bits_ == 0 ? -1 : 63 - std::countl_zero(bits_);
  }

  constexpr void insert(int e) { bits_ |= bit(e); }
  constexpr void erase(int e) { bits_ &= ~bit(e); }
  constexpr Subset with(int e) const { return Subset(bits_ | bit(e)); }
  constexpr Subset without(int e) const { return Subset(bits_ & ~bit(e)); }

  std::vector<int> elements() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) {
      out.push_back(std::countr_zero(b));
    }
    return out;
  }

  // "{0,2,5}"; the empty set prints as "{}".
  std::string to_string() const {
    std::string out = "{";
    bool first = true;
    for (int e : elements()) {
      if (!first) out += ",";
      out += std::to_string(e);
      first = false;
    }
    return out + "}";
  }

  friend constexpr Subset operator|(Subset a, Subset b) {
    return Subset(a.bits_ | b.bits_);
  }
  friend constexpr Subset operator&(Subset a, Subset b) {
    return Subset(a.bits_ & b.bits_);
  }
  // Set difference.
  friend constexpr Subset operator-(Subset a, Subset b) {
    return Subset(a.bits_ & ~b.bits_);
  }
  constexpr Subset& operator|=(Subset o) {
    bits_ |= o.bits_;
    return *this;
  }
  constexpr Subset& operator&=(Subset o) {
    bits_ &= o.bits_;
    return *this;
  }
  friend constexpr bool operator==(Subset, Subset) = default;

 private:
  static constexpr std::uint64_t bit(int e) { return std::uint64_t{1} << e; }

  std::uint64_t bits_ = 0;
};

// Lexicographic order on the ascending element sequences: {0,1} < {0,1,3} <
// {0,2} < {1}. The empty set is smallest.
constexpr bool lex_less(Subset a, Subset b) {
  const std::uint64_t diff = a.bits() ^ b.bits();
  if (diff == 0) return false;
  const int i = std::countr_zero(diff);
  const std::uint64_t above = i == 63 ? 0 : ~((std::uint64_t{1} << (i + 1)) - 1);
  if (a.contains(i)) {
    // b either continues with a larger element (a wins) or stops (b is a
    // prefix of a).
    return (b.bits() & above) != 0;
  }
  return (a.bits() & above) == 0;
}

// Orders (rank, set) pairs by rank, then lex. Used for element numbering.
struct RankLexLess {
  bool operator()(const std::pair<int, Subset>& a,
                  const std::pair<int, Subset>& b) const {
    if (a.first != b.first) return a.first < b.first;
    return lex_less(a.second, b.second);
  }
};

}  // namespace flatmatch

template <>
struct std::hash<flatmatch::Subset> {
  std::size_t operator()(flatmatch::Subset s) const noexcept {
    return std::hash<std::uint64_t>{}(s.bits());
  }
};

#endif  // FLATMATCH_SUBSET_HPP_
