// Copyright 2026 The vitalpovm Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "vitalpovm/frames.hpp"

namespace vitalpovm {

// Points are 1..n. Blocks are stored sorted, and the block list is sorted
// lexicographically; repeated blocks are allowed (a multiset).
class BlockDesign {
 public:
  BlockDesign(std::size_t n, std::vector<std::vector<int>> blocks, std::string name = {});

  std::size_t points() const { return n_; }
  const std::vector<std::vector<int>>& blocks() const { return blocks_; }
  const std::string& name() const { return name_; }

  friend bool operator==(const BlockDesign& a, const BlockDesign& b) {
    return a.n_ == b.n_ && a.blocks_ == b.blocks_;
  }

 private:
  std::size_t n_;
  std::vector<std::vector<int>> blocks_;
  std::string name_;
};

struct DesignParams {
  std::size_t k = 0;
  std::size_t lambda = 0;
  std::size_t r = 0;
  std::size_t b = 0;

  friend bool operator==(const DesignParams&, const DesignParams&) = default;
};

/// Checks uniform block size, constant pair replication and constant point
/// replication. Throws NotUniform, NotBalanced (message names a violating
/// pair) or NotPointRegular.
DesignParams verify_design(const BlockDesign& d);

/// All pairs: an (n, 2, 1) design. n >= 2.
BlockDesign design_pairs(std::size_t n);
/// B_i = [n] \ {i}: an (n, n-1, n-2) design. n >= 3.
BlockDesign design_complements(std::size_t n);
/// n-1 copies of [n]: an (n, n, n-1) design. n >= 2.
BlockDesign design_complete(std::size_t n);
/// Orbit of {0,1,3} under x -> ax + b over F_7, residue r relabelled r + 1.
BlockDesign design_agl17();

// |N(S) & N(T)| >= |S| + |T| - 1 for all disjoint nonempty point sets, where
// N(S) is the set of blocks meeting S.
struct IncidenceResult {
  bool holds = true;
  std::vector<int> s;  // first violating pair when !holds
  std::vector<int> t;
  std::size_t common = 0;
};

/// Exhaustive over ordered pairs (S, T); throws TooLarge when n > max_points.
IncidenceResult incidence_condition(const BlockDesign& d, std::size_t max_points = 12);

struct Matching {
  std::vector<int> assignment;  // assignment[i] is the target matched to left vertex i
};

struct Deficiency {
  std::vector<std::size_t> left;  // 0-based left vertices S with |N(S)| < |S|
  std::vector<int> neighbours;    // N(S) within the targets
};

using MatchingWitness = std::variant<Matching, Deficiency>;

/// Maximum bipartite matching of left vertex i into supports[i] & targets by
/// augmenting paths (vertices tried in ascending order). Returns a full
/// matching, or a Hall-violating set reached by alternating paths from the
/// first unmatched left vertex.
MatchingWitness hall_matching(const std::vector<std::vector<int>>& supports, const std::vector<int>& targets);

/// {e_1..e_n} then one vector per block, supported exactly on the block with
/// seeded nonzero rational coefficients. Throws InvalidDesign if
/// verify_design fails.
Frame frame_from_design(const BlockDesign& d, std::uint64_t seed);

}  // namespace vitalpovm
