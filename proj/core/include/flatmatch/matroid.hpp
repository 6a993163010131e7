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

#ifndef FLATMATCH_MATROID_HPP_
#define FLATMATCH_MATROID_HPP_

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "flatmatch/subset.hpp"

namespace flatmatch {

inline constexpr std::size_t kDefaultFlatCap = 100000;

struct UniformKind {
  int k = 0;
};

// Edges are the ground set, in input order. A self-loop edge is a matroid loop.
struct GraphicKind {
  int vertices = 0;
  std::vector<std::pair<int, int>> edges;
};

// Columns are the ground set; entries are residues in [0, prime).
struct LinearKind {
  int prime = 2;
  std::vector<std::vector<int>> columns;
};

struct FlatsKind {
  std::vector<Subset> flats;
};

using MatroidKind = std::variant<UniformKind, GraphicKind, LinearKind, FlatsKind>;

// A finite matroid on the ground set {0, ..., n - 1} with rank and closure
// oracles. Instances are validated on construction and immutable afterwards.
class MatroidSpec {
 public:
  // All factories throw ValidationError on malformed descriptions.
  static MatroidSpec uniform(int k, int n);
  static MatroidSpec graphic(int vertices, std::vector<std::pair<int, int>> edges);
  static MatroidSpec linear(int prime, std::vector<std::vector<int>> columns);
  // Checks the flat axioms: the ground set is a flat, the family is closed
  // under intersection, and the flats covering any flat partition its
  // complement. Also checks that every interval below a flat is graded.
  static MatroidSpec explicit_flats(int n, std::vector<Subset> flats);

  int ground_size() const { return n_; }
  Subset ground() const { return Subset::full(n_); }
  const MatroidKind& kind() const { return kind_; }
  std::string_view kind_name() const;

  int rank(Subset s) const;
  int rank() const { return rank(ground()); }
  // {e : rank(S + e) = rank(S)}
  Subset closure(Subset s) const;

 private:
  MatroidSpec(int n, MatroidKind kind) : n_(n), kind_(std::move(kind)) {}

  int n_ = 0;
  MatroidKind kind_;
  // FlatsKind only: rank of each flat, parallel to FlatsKind::flats.
  std::vector<int> flat_ranks_;
};

// Parses the JSON instance format:
//   {"kind": "uniform", "n": 4, "k": 3}
//   {"kind": "graphic", "n": 6, "vertices": 4, "edges": [[0,1], ...]}
//   {"kind": "linear", "n": 3, "p": 2, "columns": [[1,0,0], ...]}
//   {"kind": "flats", "n": 3, "flats": [[], [0], ...]}
// Throws ParseError (syntax or field shape) or ValidationError (axioms).
MatroidSpec parse_matroid(std::string_view text);

// Inverse of parse_matroid; keys are emitted in a fixed order.
std::string matroid_to_json(const MatroidSpec& spec);

// All flats, deduplicated, sorted by (rank, lex). Throws CapExceeded when more
// than `cap` flats exist.
std::vector<Subset> enumerate_flats(const MatroidSpec& spec,
                                    std::size_t cap = kDefaultFlatCap);

// Rank of a prime-field matrix given by columns. Used by the linear oracle.
int gf_rank(int prime, const std::vector<std::vector<int>>& columns);

bool is_prime(int p);

}  // namespace flatmatch

#endif  // FLATMATCH_MATROID_HPP_
