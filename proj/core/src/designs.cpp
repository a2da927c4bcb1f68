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

#include "vitalpovm/designs.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "vitalpovm/random.hpp"

namespace vitalpovm {

BlockDesign::BlockDesign(std::size_t n, std::vector<std::vector<int>> blocks, std::string name)
    : n_(n), blocks_(std::move(blocks)), name_(std::move(name)) {
  if (n_ == 0) throw Error(ErrorCode::InvalidInput, "design needs at least one point");
  for (auto& block : blocks_) {
    if (block.empty()) throw Error(ErrorCode::InvalidInput, "empty block");
    std::sort(block.begin(), block.end());
    if (std::adjacent_find(block.begin(), block.end()) != block.end())
      throw Error(ErrorCode::InvalidInput, "repeated point inside a block");
    if (block.front() < 1 || block.back() > static_cast<int>(n_))
      throw Error(ErrorCode::InvalidInput, "block point outside 1.." + std::to_string(n_));
  }
  std::sort(blocks_.begin(), blocks_.end());
}

DesignParams verify_design(const BlockDesign& d) {
  const std::size_t n = d.points();
  const auto& blocks = d.blocks();
  if (blocks.empty()) throw Error(ErrorCode::NotUniform, "design has no blocks");
  const std::size_t k = blocks.front().size();
  for (std::size_t i = 0; i < blocks.size(); ++i)
    if (blocks[i].size() != k)
      throw Error(ErrorCode::NotUniform, "block " + std::to_string(i + 1) + " has size " +
                                             std::to_string(blocks[i].size()) + ", expected " + std::to_string(k));

  std::vector<std::size_t> pair_count(n * n, 0);
  std::vector<std::size_t> point_count(n, 0);
  for (const auto& block : blocks)
    for (std::size_t a = 0; a < block.size(); ++a) {
      ++point_count[block[a] - 1];
      for (std::size_t b = a + 1; b < block.size(); ++b) ++pair_count[(block[a] - 1) * n + (block[b] - 1)];
    }
  const std::size_t lambda = n >= 2 ? pair_count[1] : 0;
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = p + 1; q < n; ++q)
      if (pair_count[p * n + q] != lambda)
        throw Error(ErrorCode::NotBalanced, "pair {" + std::to_string(p + 1) + "," + std::to_string(q + 1) +
                                                "} lies in " + std::to_string(pair_count[p * n + q]) +
                                                " blocks, expected " + std::to_string(lambda));
  const std::size_t r = point_count[0];
  for (std::size_t p = 0; p < n; ++p)
    if (point_count[p] != r)
      throw Error(ErrorCode::NotPointRegular, "point " + std::to_string(p + 1) + " lies in " +
                                                  std::to_string(point_count[p]) + " blocks, expected " +
                                                  std::to_string(r));
  return {k, lambda, r, blocks.size()};
}

namespace {

void require_points(std::size_t n, std::size_t minimum, const char* what) {
  if (n < minimum)
    throw Error(ErrorCode::DimensionTooSmall,
                std::string(what) + " requires n >= " + std::to_string(minimum) + ", got " + std::to_string(n));
}

}  // namespace

BlockDesign design_pairs(std::size_t n) {
  require_points(n, 2, "pairs design");
  std::vector<std::vector<int>> blocks;
  for (int i = 1; i <= static_cast<int>(n); ++i)
    for (int j = i + 1; j <= static_cast<int>(n); ++j) blocks.push_back({i, j});
  return BlockDesign(n, std::move(blocks), "pairs");
}

BlockDesign design_complements(std::size_t n) {
  require_points(n, 3, "complements design");
  std::vector<std::vector<int>> blocks;
  for (int i = 1; i <= static_cast<int>(n); ++i) {
    std::vector<int> block;
    for (int p = 1; p <= static_cast<int>(n); ++p)
      if (p != i) block.push_back(p);
    blocks.push_back(std::move(block));
  }
  return BlockDesign(n, std::move(blocks), "complements");
}

BlockDesign design_complete(std::size_t n) {
  require_points(n, 2, "complete design");
  std::vector<int> all(n);
  for (std::size_t p = 0; p < n; ++p) all[p] = static_cast<int>(p + 1);
  return BlockDesign(n, std::vector<std::vector<int>>(n - 1, all), "complete");
}

BlockDesign design_agl17() {
  constexpr int q = 7;
  const std::vector<int> base = {0, 1, 3};
  std::set<std::vector<int>> orbit;
  for (int a = 1; a < q; ++a)
    for (int b = 0; b < q; ++b) {
      std::vector<int> image;
      for (int x : base) image.push_back((a * x + b) % q + 1);
      std::sort(image.begin(), image.end());
      orbit.insert(std::move(image));
    }
  return BlockDesign(q, {orbit.begin(), orbit.end()}, "agl17");
}

namespace {

using Bits = std::vector<std::uint64_t>;

std::size_t popcount_and(const Bits& a, const Bits& b) {
  std::size_t c = 0;
  for (std::size_t w = 0; w < a.size(); ++w) c += static_cast<std::size_t>(std::popcount(a[w] & b[w]));
  return c;
}

std::vector<int> mask_points(std::uint32_t mask) {
  std::vector<int> out;
  for (int p = 0; mask != 0; ++p, mask >>= 1)
    if (mask & 1u) out.push_back(p + 1);
  return out;
}

}  // namespace

IncidenceResult incidence_condition(const BlockDesign& d, std::size_t max_points) {
  const std::size_t n = d.points();
  if (n > max_points || n > 24)
    throw Error(ErrorCode::TooLarge, "incidence condition is exponential; n = " + std::to_string(n) +
                                         " exceeds limit " + std::to_string(std::min<std::size_t>(max_points, 24)));
  const std::size_t words = (d.blocks().size() + 63) / 64;
  const std::uint32_t full = (n == 32) ? ~0u : ((1u << n) - 1u);

  // neighbourhood[S] = blocks meeting S
  std::vector<Bits> neighbourhood(std::size_t{1} << n, Bits(words, 0));
  for (std::size_t bi = 0; bi < d.blocks().size(); ++bi)
    for (int p : d.blocks()[bi]) neighbourhood[std::size_t{1} << (p - 1)][bi / 64] |= std::uint64_t{1} << (bi % 64);
  for (std::uint32_t s = 1; s <= full; ++s) {
    const std::uint32_t low = s & (~s + 1u);
    if (low == s) continue;
    const Bits& a = neighbourhood[s ^ low];
    const Bits& b = neighbourhood[low];
    for (std::size_t w = 0; w < words; ++w) neighbourhood[s][w] = a[w] | b[w];
  }

  for (std::uint32_t s = 1; s <= full; ++s) {
    const std::uint32_t rest = full & ~s;
    const std::size_t size_s = static_cast<std::size_t>(std::popcount(s));
    for (std::uint32_t t = (0u - rest) & rest; t != 0; t = (t - rest) & rest) {
      const std::size_t common = popcount_and(neighbourhood[s], neighbourhood[t]);
      if (common + 1 < size_s + static_cast<std::size_t>(std::popcount(t)))
        return {false, mask_points(s), mask_points(t), common};
    }
  }
  return {};
}

MatchingWitness hall_matching(const std::vector<std::vector<int>>& supports, const std::vector<int>& targets) {
  std::vector<int> right(targets);
  std::sort(right.begin(), right.end());
  right.erase(std::unique(right.begin(), right.end()), right.end());
  const std::size_t nl = supports.size();
  const std::size_t nr = right.size();

  std::vector<std::vector<std::size_t>> adj(nl);
  for (std::size_t i = 0; i < nl; ++i) {
    for (std::size_t j = 0; j < nr; ++j)
      if (std::find(supports[i].begin(), supports[i].end(), right[j]) != supports[i].end()) adj[i].push_back(j);
  }

  constexpr std::size_t none = static_cast<std::size_t>(-1);
  std::vector<std::size_t> match_left(nl, none);
  std::vector<std::size_t> match_right(nr, none);
  std::vector<char> seen;

  auto augment = [&](auto&& self, std::size_t u) -> bool {
    for (std::size_t j : adj[u]) {
      if (seen[j]) continue;
      seen[j] = 1;
      if (match_right[j] == none || self(self, match_right[j])) {
        match_left[u] = j;
        match_right[j] = u;
        return true;
      }
    }
    return false;
  };

  for (std::size_t u = 0; u < nl; ++u) {
    seen.assign(nr, 0);
    augment(augment, u);
  }

  const auto unmatched = std::find(match_left.begin(), match_left.end(), none);
  if (unmatched == match_left.end()) {
    Matching m;
    for (std::size_t u = 0; u < nl; ++u) m.assignment.push_back(right[match_left[u]]);
    return m;
  }

  // Alternating-path closure from an unmatched left vertex; every reached
  // right vertex is matched, so |N(S)| = |S| - 1.
  std::vector<char> left_seen(nl, 0);
  std::vector<char> right_seen(nr, 0);
  std::vector<std::size_t> stack{static_cast<std::size_t>(unmatched - match_left.begin())};
  left_seen[stack.back()] = 1;
  while (!stack.empty()) {
    const std::size_t u = stack.back();
    stack.pop_back();
    for (std::size_t j : adj[u]) {
      if (right_seen[j]) continue;
      right_seen[j] = 1;
      const std::size_t w = match_right[j];
      if (w != none && !left_seen[w]) {
        left_seen[w] = 1;
        stack.push_back(w);
      }
    }
  }
  Deficiency def;
  for (std::size_t u = 0; u < nl; ++u)
    if (left_seen[u]) def.left.push_back(u);
  for (std::size_t j = 0; j < nr; ++j)
    if (right_seen[j]) def.neighbours.push_back(right[j]);
  return def;
}

Frame frame_from_design(const BlockDesign& d, std::uint64_t seed) {
  try {
    verify_design(d);
  } catch (const Error& e) {
    throw Error(ErrorCode::InvalidDesign, e.what());
  }
  const std::size_t n = d.points();
  CoefficientRng rng(seed);
  std::vector<ExactVector> vs;
  std::vector<std::string> ls;
  for (std::size_t k = 0; k < n; ++k) {
    ExactVector e(n, Gaussian(0));
    e[k] = Gaussian(1);
    vs.push_back(std::move(e));
    ls.push_back("e" + std::to_string(k + 1));
  }
  for (std::size_t bi = 0; bi < d.blocks().size(); ++bi) {
    ExactVector v(n, Gaussian(0));
    std::string label = "v" + std::to_string(bi + 1) + "{";
    for (std::size_t a = 0; a < d.blocks()[bi].size(); ++a) {
      const int p = d.blocks()[bi][a];
      v[p - 1] = rng.next_nonzero();
      label += (a ? "," : "") + std::to_string(p);
    }
    vs.push_back(std::move(v));
    ls.push_back(label + "}");
  }
  const std::string construction = d.name().empty() ? "design" : "design-" + d.name();
  return Frame(Field::Real, n, std::move(vs), std::move(ls), {construction, seed});
}

}  // namespace vitalpovm
