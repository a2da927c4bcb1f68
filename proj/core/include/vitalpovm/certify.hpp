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
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "vitalpovm/frames.hpp"
#include "vitalpovm/whiten.hpp"

namespace vitalpovm {

// Indices throughout are 0-based positions in the frame.

struct CertifyOptions {
  double eig_tol = 1e-9;
  double parseval_tol = 1e-10;
  std::uint64_t max_partitions = std::uint64_t{1} << 23;  // exhaustive CP guard (m <= 24)
  std::uint64_t max_subsets = 1'000'000;                  // n-subset enumeration guard
  unsigned threads = 0;                                   // 0: worker_count()
};

// A partition of the frame into two non-spanning parts. part2 always holds
// index 0. `normal` is a primitive integral u with u orthogonal to part1, so
// that {i : <v_i, u> != 0} is contained in part2.
struct PartitionWitness {
  std::vector<std::size_t> part1;
  std::vector<std::size_t> part2;
  std::size_t rank1 = 0;
  std::size_t rank2 = 0;
  std::vector<mpz_class> normal;

  friend bool operator==(const PartitionWitness&, const PartitionWitness&) = default;
};

struct CpVerdict {
  std::optional<PartitionWitness> witness;
  bool holds() const { return !witness.has_value(); }
};

/// Tries all 2^(m-1) partitions; returns the first failing one in mask
/// order (bit i-1 of the mask puts element i into part2). The oracle.
/// Throws WrongField, TooLarge.
CpVerdict complement_property_exhaustive(const Frame& f, const CertifyOptions& opt = {});

/// Tests F_u = {i : <v_i,u> != 0} for every hyperplane normal u spanned by
/// n-1 frame vectors (independent (n-1)-subsets in lexicographic order,
/// normals deduplicated). Throws WrongField.
CpVerdict complement_property_fast(const Frame& f, const CertifyOptions& opt = {});

// Non-parallel psi, phi with |<v_i,psi>|^2 = alpha |<v_i,phi>|^2 for every
// in-scope i. Scope is the whole frame, or the frame minus `removed`.
struct CollisionPair {
  ExactVector psi;
  ExactVector phi;
  Rational alpha{1};
  std::optional<std::size_t> removed;

  friend bool operator==(const CollisionPair&, const CollisionPair&) = default;
};

/// Exact check of the collision invariant against `f` (indices of f).
bool verify_collision(const Frame& f, const CollisionPair& pair);

/// psi = u + v, phi = u - v with u orthogonal to part1 and v to part2.
/// Throws DegenerateWitness if the partition is not failing.
CollisionPair collision_from_partition(const Frame& f, const PartitionWitness& w);

enum class PsiStatus { Complete, Collision, Undecided };

struct PsiVerdict {
  PsiStatus status = PsiStatus::Undecided;
  std::optional<PartitionWitness> witness;  // real frames only
  std::optional<CollisionPair> collision;
  std::string reason;  // set when Undecided
};

/// Real: decided by the Complement Property. Complex: Complete when the
/// measurement map has rank n^2, otherwise Undecided.
PsiVerdict is_psi_complete(const Frame& f, const CertifyOptions& opt = {});

bool is_informationally_complete(const Frame& f);

// S_j = I - E_j singular on the whitened POVM. `exact` is orthogonal to
// every v_i with i != j; `kernel` = S^{1/2} exact, normalised.
struct SingularKernel {
  ExactVector exact;
  CVector kernel;
  double residual = 0;  // ||(I - E_j) kernel||
};

// A = sum_t d_t l_t l_t^*, exact.
struct HermitianTerm {
  Rational d;
  ExactVector l;

  friend bool operator==(const HermitianTerm&, const HermitianTerm&) = default;
};

/// Congruence (LDL^*) decomposition of a Hermitian matrix with first-nonzero
/// pivoting; 2x2 pivots on a zero diagonal are split into +-1/2 terms. The
/// number of positive (negative) terms is the positive (negative) inertia.
std::vector<HermitianTerm> congruence_decomposition(const ExactMatrix& a);

// Kernel generator of the reduced measurement map (complex certificates).
struct KernelGenerator {
  ExactMatrix a;
  std::vector<double> eigenvalues;  // ascending
};

struct RemovalCertificate {
  std::size_t j = 0;
  std::variant<SingularKernel, CollisionPair> data;
  std::optional<KernelGenerator> generator;

  bool singular() const { return std::holds_alternative<SingularKernel>(data); }
};

/// Witness that F minus v_j is not PSI-Complete. Real frames: decided by the
/// complement property; throws StillComplete when it holds. Complex frames:
/// needs a 1-dimensional reduced measurement kernel whose generator is rank-2
/// indefinite; throws StillComplete (kernel 0), KernelTooLarge (kernel > 1)
/// or Undecided (other inertia).
RemovalCertificate removal_certificate(const Frame& f, std::size_t j, const CertifyOptions& opt = {});

enum class VitalStatus { Vital, NotVital, Undecided };

struct VitalityReport {
  VitalStatus status = VitalStatus::Undecided;
  PsiVerdict psi;
  bool ic = false;
  std::vector<RemovalCertificate> certificates;
  std::optional<std::size_t> failed_index;  // first j where F minus v_j stays complete
  std::string reason;
};

VitalityReport is_vital(const Frame& f, const CertifyOptions& opt = {});

/// All size-n subsets of rank < n, in lexicographic order. Throws TooLarge
/// when binom(m, n) exceeds opt.max_subsets.
std::vector<std::vector<std::size_t>> maximal_nonspanning_subsets(const Frame& f, const CertifyOptions& opt = {});

// The multiset of pairwise intersection sizes is stored as a histogram:
// (size, number of unordered pairs with that intersection size), ascending.
struct EquivalenceFingerprint {
  std::size_t max_nonspanning_count = 0;
  std::vector<std::pair<std::size_t, std::uint64_t>> intersection_histogram;

  friend bool operator==(const EquivalenceFingerprint&, const EquivalenceFingerprint&) = default;
};

/// Throws WrongField for complex frames, TooLarge as above (and for m > 64).
EquivalenceFingerprint equivalence_fingerprint(const Frame& f, const CertifyOptions& opt = {});

struct SparkResult {
  bool full_spark = true;
  std::optional<std::vector<std::size_t>> dependent;  // first dependent n-subset
};

SparkResult full_spark(const Frame& f, const CertifyOptions& opt = {});

std::string_view to_string(PsiStatus s);
std::string_view to_string(VitalStatus s);

}  // namespace vitalpovm
