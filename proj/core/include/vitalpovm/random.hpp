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

#include <cstdint>
#include <random>

#include "vitalpovm/exact.hpp"

namespace vitalpovm {

// Seeded source of "generic" coefficients. The engine is std::mt19937_64
// (fully specified by the standard, so streams are portable). Each
// coefficient consumes one 64-bit draw x:
//   magnitude = 1 + ((x >> 1) % 1000),  sign = (x & 1) ? -1 : +1,
// with denominator 1. Magnitudes are never zero.
class CoefficientRng {
 public:
  explicit CoefficientRng(std::uint64_t seed) : engine_(seed) {}

  Rational next_nonzero();
  std::uint64_t next_raw() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

/// Independent per-item stream derived from (seed, index).
std::mt19937_64 derived_engine(std::uint64_t seed, std::uint64_t index);

}  // namespace vitalpovm
