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

#include <gtest/gtest.h>

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "oracles.hpp"
#include "vitalpovm/certify.hpp"
#include "vitalpovm/designs.hpp"
#include "vitalpovm/tomo.hpp"
#include "vitalpovm/whiten.hpp"

namespace vitalpovm {
namespace {

using Idx = std::vector<std::size_t>;

ExactVector rv(std::initializer_list<long> xs) {
  ExactVector v;
  for (long x : xs) v.emplace_back(Rational(x));
  return v;
}

Frame real_frame(std::size_t n, std::vector<ExactVector> vs) { return Frame(Field::Real, n, std::move(vs)); }

Frame basis(std::size_t n) {
  std::vector<ExactVector> vs;
  for (std::size_t i = 0; i < n; ++i) {
    ExactVector e(n, Gaussian(0));
    e[i] = Gaussian(1);
    vs.push_back(e);
  }
  return real_frame(n, vs);
}

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no exception";
  return ErrorCode::InvalidInput;
}

ExactMatrix outer_diff(const CollisionPair& c) {
  ExactMatrix a = outer(c.psi);
  const ExactMatrix b = outer(c.phi);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) a(i, k) -= Gaussian(c.alpha) * b(i, k);
  return a;
}

// a = t b for some nonzero rational t
bool proportional(const ExactMatrix& a, const ExactMatrix& b) {
  std::optional<Gaussian> t;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (b(i, k).is_zero()) {
        if (!a(i, k).is_zero()) return false;
        continue;
      }
      const Gaussian r = a(i, k) / b(i, k);
      if (!t) t = r;
      if (!(*t == r) || t->is_zero()) return false;
    }
  return t.has_value();
}

std::pair<int, int> inertia(const std::vector<double>& ev) {
  double scale = 0;
  for (double x : ev) scale = std::max(scale, std::abs(x));
  int pos = 0, neg = 0;
  for (double x : ev) {
    if (x > 1e-9 * scale) ++pos;
    if (x < -1e-9 * scale) ++neg;
  }
  return {pos, neg};
}

void expect_valid_witness(const Frame& f, const PartitionWitness& w) {
  Idx all = w.part1;
  all.insert(all.end(), w.part2.begin(), w.part2.end());
  std::sort(all.begin(), all.end());
  Idx expected(f.size());
  std::iota(expected.begin(), expected.end(), 0);
  EXPECT_EQ(all, expected);
  EXPECT_LT(oracle::frame_rank(f, w.part1), f.dim());
  EXPECT_LT(oracle::frame_rank(f, w.part2), f.dim());
  EXPECT_EQ(w.rank1, oracle::frame_rank(f, w.part1));
  EXPECT_EQ(w.rank2, oracle::frame_rank(f, w.part2));
  EXPECT_NE(std::find(w.part2.begin(), w.part2.end(), 0u), w.part2.end());
  for (std::size_t i : w.part1) {
    mpq_class s = 0;
    for (std::size_t k = 0; k < f.dim(); ++k) s += f[i][k].re() * w.normal[k];
    EXPECT_EQ(s, 0);
  }
}

Frame first_vectors(const Frame& f, std::size_t count) {
  Idx idx(count);
  std::iota(idx.begin(), idx.end(), 0);
  return f.select(idx);
}

std::vector<Frame> cp_corpus() {
  std::vector<Frame> fs;
  for (std::size_t n = 2; n <= 4; ++n) {
    fs.push_back(construct_real_max(n));
    fs.push_back(construct_cauchy_full_spark(n));
    fs.push_back(basis(n));
  }
  fs.push_back(construct_gonzalez_2n(3, 1));
  fs.push_back(construct_gonzalez_2n(4, 2));
  fs.push_back(frame_from_design(design_complements(4), 1));
  fs.push_back(frame_from_design(design_complete(4), 1));
  for (std::uint64_t s = 1; s <= 5; ++s) fs.push_back(frame_from_design(design_pairs(4), s));
  fs.push_back(oracle::counterexample4());
  return fs;
}

TEST(ComplementProperty, ExhaustiveExamples) {
  for (std::size_t n = 2; n <= 4; ++n) {
    const Frame b = basis(n);
    const CpVerdict v = complement_property_exhaustive(b);
    ASSERT_FALSE(v.holds());
    expect_valid_witness(b, *v.witness);
    EXPECT_EQ(v.witness->part2, Idx{0});
  }
  EXPECT_TRUE(complement_property_exhaustive(construct_real_max(3)).holds());

  const Frame f = oracle::counterexample4();
  const CpVerdict v = complement_property_exhaustive(f);
  ASSERT_FALSE(v.holds());
  expect_valid_witness(f, *v.witness);
}

TEST(ComplementProperty, CounterexampleNormal) {
  const Frame f = oracle::counterexample4();
  const CpVerdict v = complement_property_fast(f);
  ASSERT_FALSE(v.holds());
  expect_valid_witness(f, *v.witness);
  EXPECT_EQ(v.witness->normal, (std::vector<mpz_class>{1, -1, 0, 0}));
  // F ∩ (e1 - e2)^perp = {e3, e4, v3, v4}
  EXPECT_EQ(v.witness->part1, (Idx{2, 3, 6, 7}));
}

TEST(ComplementProperty, FastAgreesWithExhaustive) {
  for (const Frame& f : cp_corpus()) {
    const bool truth = oracle::complement_property(f);
    const CpVerdict ex = complement_property_exhaustive(f);
    const CpVerdict fast = complement_property_fast(f);
    EXPECT_EQ(ex.holds(), truth) << f.meta().construction;
    EXPECT_EQ(fast.holds(), truth) << f.meta().construction;
    if (!fast.holds()) expect_valid_witness(f, *fast.witness);
    if (!ex.holds()) expect_valid_witness(f, *ex.witness);
  }
}

TEST(ComplementProperty, FastAgreesOnRandomFrames) {
  std::mt19937_64 rng(41);
  int holds = 0;
  for (int t = 0; t < 50; ++t) {
    const std::size_t n = 2 + rng() % 3;
    const std::size_t m = n + rng() % (2 * n + 1);
    const Frame f = oracle::random_frame(rng, n, m);
    const bool truth = oracle::complement_property(f);
    EXPECT_EQ(complement_property_exhaustive(f).holds(), truth);
    const CpVerdict fast = complement_property_fast(f);
    EXPECT_EQ(fast.holds(), truth);
    if (!fast.holds()) expect_valid_witness(f, *fast.witness);
    holds += truth;
  }
  EXPECT_GT(holds, 0);
  EXPECT_LT(holds, 50);
}

TEST(ComplementProperty, ThreadCountDoesNotChangeWitness) {
  CertifyOptions one;
  one.threads = 1;
  CertifyOptions four;
  four.threads = 4;
  std::mt19937_64 rng(42);
  for (int t = 0; t < 20; ++t) {
    const Frame f = oracle::random_frame(rng, 3, 7);
    EXPECT_EQ(complement_property_fast(f, one).witness, complement_property_fast(f, four).witness);
    EXPECT_EQ(complement_property_exhaustive(f, one).witness, complement_property_exhaustive(f, four).witness);
  }
  const Frame agl = frame_from_design(design_agl17(), 1);
  EXPECT_EQ(complement_property_fast(agl.without(3), one).witness,
            complement_property_fast(agl.without(3), four).witness);
}

TEST(ComplementProperty, Errors) {
  EXPECT_EQ(code_of([] { complement_property_fast(construct_complex_max(2)); }), ErrorCode::WrongField);
  EXPECT_EQ(code_of([] { complement_property_exhaustive(construct_complex_max(2)); }), ErrorCode::WrongField);
  CertifyOptions small;
  small.max_partitions = 1u << 10;
  EXPECT_EQ(code_of([&] { complement_property_exhaustive(construct_real_max(5), small); }), ErrorCode::TooLarge);
  EXPECT_EQ(code_of([] { complement_property_exhaustive(construct_real_max(7)); }), ErrorCode::TooLarge);
}

TEST(Psi, Verdicts) {
  EXPECT_EQ(is_psi_complete(construct_real_max(4)).status, PsiStatus::Complete);
  EXPECT_EQ(is_psi_complete(construct_complex_max(3)).status, PsiStatus::Complete);
  const Frame c = construct_complex_max(2);
  EXPECT_EQ(is_psi_complete(c.without(0)).status, PsiStatus::Undecided);
  EXPECT_FALSE(is_psi_complete(c.without(0)).reason.empty());

  const Frame f = oracle::counterexample4();
  const PsiVerdict v = is_psi_complete(f);
  ASSERT_EQ(v.status, PsiStatus::Collision);
  ASSERT_TRUE(v.collision && v.witness);
  EXPECT_TRUE(verify_collision(f, *v.collision));
  EXPECT_EQ(v.collision->alpha, 1);
  for (std::size_t i = 0; i < f.size(); ++i)
    EXPECT_EQ(inner(f[i], v.collision->psi).norm2(), inner(f[i], v.collision->phi).norm2());
}

TEST(Psi, BelowMinimalSizeFails) {
  for (std::size_t n = 2; n <= 5; ++n) {
    const Frame f = first_vectors(construct_cauchy_full_spark(n), 2 * n - 2);
    const PsiVerdict v = is_psi_complete(f);
    EXPECT_EQ(v.status, PsiStatus::Collision);
    EXPECT_EQ(is_vital(f).status, VitalStatus::NotVital);
  }
}

TEST(Collision, FromPartition) {
  const Frame b = basis(3);
  PartitionWitness w{{1, 2}, {0}, 2, 1, {1, 0, 0}};
  const CollisionPair c = collision_from_partition(b, w);
  EXPECT_TRUE(verify_collision(b, c));
  // u orthogonal to e2, e3 and v orthogonal to e1: psi and phi differ only by sign on e2, e3
  EXPECT_EQ(c.psi[0], c.phi[0]);
  for (std::size_t k = 1; k < 3; ++k) EXPECT_EQ(c.psi[k], -c.phi[k]);

  const Frame f = real_frame(2, {rv({1, 0}), rv({0, 1}), rv({1, 1})});
  EXPECT_EQ(code_of([&] { collision_from_partition(f, PartitionWitness{{0}, {1, 2}, 1, 2, {0, 1}}); }),
            ErrorCode::DegenerateWitness);
  EXPECT_EQ(code_of([&] { collision_from_partition(f, PartitionWitness{{0}, {1}, 1, 1, {0, 1}}); }),
            ErrorCode::DegenerateWitness);
}

TEST(Collision, ParallelComplementsStillGivePair) {
  // all vectors on one line: both complements are that line's normal
  const Frame f = real_frame(2, {rv({1, 1}), rv({2, 2})});
  const CollisionPair c = collision_from_partition(f, PartitionWitness{{1}, {0}, 1, 1, {1, -1}});
  EXPECT_TRUE(verify_collision(f, c));
}

TEST(Collision, WhitenedBornProbabilitiesMatch) {
  const Frame f = oracle::counterexample4();
  const CollisionPair c = *is_psi_complete(f).collision;
  const Whitening wt = whitening_transform(f);
  const Povm p = whiten(f);
  const auto a = born_probabilities(p, PureState(wt.sqrt * to_float(c.psi)));
  const auto b = born_probabilities(p, PureState(wt.sqrt * to_float(c.phi)));
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_NEAR(a[i], b[i], 1e-10);
}

TEST(Ic, Examples) {
  for (std::size_t n = 2; n <= 4; ++n) EXPECT_TRUE(is_informationally_complete(construct_real_max(n)));
  EXPECT_TRUE(is_informationally_complete(construct_complex_max(2)));
  EXPECT_FALSE(is_informationally_complete(construct_real_max(3).without(0)));
  EXPECT_FALSE(is_informationally_complete(construct_cauchy_full_spark(4)));
}

TEST(Removal, RealMaxBasisVector) {
  for (std::size_t n = 2; n <= 5; ++n) {
    const Frame f = construct_real_max(n);
    for (std::size_t i = 0; i < n; ++i) {
      const RemovalCertificate cert = removal_certificate(f, i);
      ASSERT_FALSE(cert.singular());
      const auto& pair = std::get<CollisionPair>(cert.data);
      EXPECT_EQ(pair.removed, i);
      EXPECT_TRUE(verify_collision(f, pair));
      // A = 2 v e_i^T + 2 e_i v^T - 4 e_i e_i^T with v = sum_{m != i} e_m
      ExactMatrix a(n, n);
      for (std::size_t k = 0; k < n; ++k)
        if (k != i) a(i, k) = a(k, i) = Gaussian(2);
      a(i, i) = Gaussian(-4);
      EXPECT_TRUE(proportional(outer_diff(pair), a)) << "n=" << n << " i=" << i;
      ASSERT_TRUE(cert.generator);
      EXPECT_TRUE(proportional(cert.generator->a, a));
      EXPECT_EQ(inertia(cert.generator->eigenvalues), std::make_pair(1, 1));
    }
  }
  const CollisionPair pair = std::get<CollisionPair>(removal_certificate(construct_real_max(4), 0).data);
  EXPECT_EQ(pair.psi, rv({0, 1, 1, 1}));
  EXPECT_EQ(pair.phi, rv({-2, 1, 1, 1}));
  EXPECT_EQ(pair.alpha, 1);
}

TEST(Removal, RealMaxPairVector) {
  for (std::size_t n = 2; n <= 5; ++n) {
    const Frame f = construct_real_max(n);
    std::size_t j = n;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q, ++j) {
        const RemovalCertificate cert = removal_certificate(f, j);
        ASSERT_TRUE(cert.generator);
        ExactMatrix a(n, n);
        a(p, q) = a(q, p) = Gaussian(1);
        EXPECT_TRUE(proportional(cert.generator->a, a)) << f.labels()[j];
        EXPECT_TRUE(proportional(outer_diff(std::get<CollisionPair>(cert.data)), a)) << f.labels()[j];
        const auto& ev = cert.generator->eigenvalues;
        EXPECT_EQ(inertia(ev), std::make_pair(1, 1));
        EXPECT_NEAR(ev.front(), -ev.back(), 1e-12);
      }
  }
}

TEST(Removal, ComplexMax) {
  for (std::size_t n = 2; n <= 3; ++n) {
    const Frame f = construct_complex_max(n);
    for (std::size_t j = 0; j < f.size(); ++j) {
      const RemovalCertificate cert = removal_certificate(f, j);
      ASSERT_TRUE(cert.generator);
      EXPECT_EQ(inertia(cert.generator->eigenvalues), std::make_pair(1, 1));
      const auto& pair = std::get<CollisionPair>(cert.data);
      EXPECT_TRUE(verify_collision(f, pair));
      EXPECT_GT(pair.alpha, 0);
      // the generator is in the reduced kernel and pairs nonzero with the removed element
      const RationalVector w = apply_measurement(f, cert.generator->a);
      for (std::size_t i = 0; i < f.size(); ++i) EXPECT_EQ(sgn(w[i]) == 0, i != j);
    }
  }
}

TEST(Removal, ErrorsAndSingularCase) {
  const Frame still = real_frame(2, {rv({1, 0}), rv({0, 1}), rv({1, 1}), rv({1, -1})});
  EXPECT_EQ(code_of([&] { removal_certificate(still, 0); }), ErrorCode::StillComplete);
  const VitalityReport r = is_vital(still);
  EXPECT_EQ(r.status, VitalStatus::NotVital);
  EXPECT_EQ(r.failed_index, 0u);

  const RemovalCertificate s = removal_certificate(basis(2), 0);
  ASSERT_TRUE(s.singular());
  const auto& k = std::get<SingularKernel>(s.data);
  EXPECT_EQ(k.exact, rv({1, 0}));
  EXPECT_LE(k.residual, 1e-9);

  const Frame one = real_frame(1, {rv({3})});
  const VitalityReport r1 = is_vital(one);
  EXPECT_EQ(r1.status, VitalStatus::Vital);
  ASSERT_EQ(r1.certificates.size(), 1u);
  EXPECT_TRUE(r1.certificates[0].singular());

  const Frame c(Field::Complex, 2, {rv({1, 0}), rv({0, 1}), rv({1, 1})});
  EXPECT_EQ(code_of([&] { removal_certificate(c, 0); }), ErrorCode::KernelTooLarge);
  EXPECT_EQ(code_of([&] { removal_certificate(c, 3); }), ErrorCode::InvalidInput);
  EXPECT_EQ(code_of([] { removal_certificate(construct_complex_max(2), 9); }), ErrorCode::InvalidInput);
}

TEST(Removal, SingularKernelIsWhitenedNull) {
  const Frame f = real_frame(1, {rv({2}), rv({1})});
  // both removals leave a spanning one-vector frame; that frame is complete in n = 1
  EXPECT_EQ(code_of([&] { removal_certificate(f, 0); }), ErrorCode::StillComplete);
  const RemovalCertificate s = removal_certificate(real_frame(1, {rv({2})}), 0);
  EXPECT_NEAR(std::abs(std::get<SingularKernel>(s.data).kernel(0)), 1.0, 1e-12);
}

TEST(Vital, SmallFamilies) {
  std::vector<Frame> vital;
  for (std::size_t n = 2; n <= 4; ++n) vital.push_back(construct_real_max(n));
  vital.push_back(construct_complex_max(2));
  for (std::size_t n = 3; n <= 4; ++n) {
    vital.push_back(construct_cauchy_full_spark(n));
    vital.push_back(frame_from_design(design_pairs(n), n));
    vital.push_back(frame_from_design(design_complements(n), n));
    vital.push_back(frame_from_design(design_complete(n), n));
    for (std::uint64_t s = 1; s <= 3; ++s) vital.push_back(construct_gonzalez_2n(n, s));
  }
  for (const Frame& f : vital) {
    const VitalityReport r = is_vital(f);
    EXPECT_EQ(r.status, VitalStatus::Vital) << f.meta().construction << " n=" << f.dim() << " " << r.reason;
    EXPECT_EQ(r.certificates.size(), f.size());
    EXPECT_LE(f.size(), operator_space_dim(f.field(), f.dim()));
    for (std::size_t j = 0; j < r.certificates.size(); ++j) {
      EXPECT_EQ(r.certificates[j].j, j);
      if (const auto* c = std::get_if<CollisionPair>(&r.certificates[j].data)) {
        EXPECT_TRUE(verify_collision(f, *c));
      }
    }
  }
}

TEST(Vital, NotVitalOrUndecided) {
  EXPECT_EQ(is_vital(oracle::counterexample4()).status, VitalStatus::NotVital);
  const VitalityReport r = is_vital(construct_complex_max(2).without(1));
  EXPECT_EQ(r.status, VitalStatus::Undecided);
  EXPECT_FALSE(r.reason.empty());
}

TEST(NonSpanning, ComplementsDesignGivesTheSets) {
  for (std::size_t n = 4; n <= 5; ++n) {
    const BlockDesign d = design_complements(n);
    const Frame f = frame_from_design(d, 2);
    std::set<Idx> expected;
    for (std::size_t i = 0; i < n; ++i) {
      Idx s;
      for (std::size_t k = 0; k < n; ++k)
        if (k != i) s.push_back(k);
      for (std::size_t b = 0; b < n; ++b) {
        const auto& blk = d.blocks()[b];
        if (std::find(blk.begin(), blk.end(), static_cast<int>(i + 1)) == blk.end()) s.push_back(n + b);
      }
      expected.insert(s);
    }
    const auto got = maximal_nonspanning_subsets(f);
    EXPECT_EQ(std::set<Idx>(got.begin(), got.end()), expected);
    EXPECT_TRUE(std::is_sorted(got.begin(), got.end()));
  }
}

TEST(NonSpanning, GonzalezAndCauchy) {
  for (std::size_t n = 4; n <= 5; ++n) {
    const auto got = maximal_nonspanning_subsets(construct_gonzalez_2n(n, 3));
    Idx s1, s2;
    for (std::size_t i = 0; i + 1 < n; ++i) s1.push_back(i);
    s1.push_back(n);
    for (std::size_t i = n; i < 2 * n; ++i) s2.push_back(i);
    EXPECT_NE(std::find(got.begin(), got.end(), s1), got.end());
    EXPECT_NE(std::find(got.begin(), got.end(), s2), got.end());
  }
  EXPECT_TRUE(maximal_nonspanning_subsets(construct_cauchy_full_spark(5)).empty());
  CertifyOptions small;
  small.max_subsets = 10;
  EXPECT_EQ(code_of([&] { maximal_nonspanning_subsets(construct_real_max(4), small); }), ErrorCode::TooLarge);
}

TEST(NonSpanning, MatchesBruteForce) {
  std::mt19937_64 rng(43);
  for (int t = 0; t < 20; ++t) {
    const Frame f = oracle::random_frame(rng, 3, 6);
    std::vector<Idx> expected;
    for (std::size_t a = 0; a < 6; ++a)
      for (std::size_t b = a + 1; b < 6; ++b)
        for (std::size_t c = b + 1; c < 6; ++c)
          if (oracle::frame_rank(f, {a, b, c}) < 3) expected.push_back({a, b, c});
    EXPECT_EQ(maximal_nonspanning_subsets(f), expected);
  }
}

TEST(Fingerprint, Examples) {
  for (std::size_t n = 4; n <= 5; ++n) {
    const EquivalenceFingerprint b = equivalence_fingerprint(frame_from_design(design_complements(n), 1));
    EXPECT_EQ(b.max_nonspanning_count, n);
    ASSERT_EQ(b.intersection_histogram.size(), 1u);
    EXPECT_EQ(b.intersection_histogram[0], std::make_pair(n - 2, std::uint64_t(n * (n - 1) / 2)));

    const EquivalenceFingerprint g = equivalence_fingerprint(construct_gonzalez_2n(n, 1));
    EXPECT_TRUE(std::any_of(g.intersection_histogram.begin(), g.intersection_histogram.end(),
                            [](const auto& e) { return e.first == 1 && e.second > 0; }));
    EXPECT_NE(b, g);
  }
  EXPECT_EQ(code_of([] { equivalence_fingerprint(construct_complex_max(2)); }), ErrorCode::WrongField);
}

TEST(Fingerprint, HistogramCountsPairs) {
  std::mt19937_64 rng(44);
  for (int t = 0; t < 10; ++t) {
    const Frame f = oracle::random_frame(rng, 3, 7);
    const auto subsets = maximal_nonspanning_subsets(f);
    std::map<std::size_t, std::uint64_t> hist;
    for (std::size_t a = 0; a < subsets.size(); ++a)
      for (std::size_t b = a + 1; b < subsets.size(); ++b) {
        Idx common;
        std::set_intersection(subsets[a].begin(), subsets[a].end(), subsets[b].begin(), subsets[b].end(),
                              std::back_inserter(common));
        ++hist[common.size()];
      }
    const EquivalenceFingerprint fp = equivalence_fingerprint(f);
    EXPECT_EQ(fp.max_nonspanning_count, subsets.size());
    EXPECT_EQ(fp.intersection_histogram, (std::vector<std::pair<std::size_t, std::uint64_t>>(hist.begin(), hist.end())));
  }
}

TEST(Fingerprint, InvariantUnderEquivalence) {
  std::mt19937_64 rng(45);
  const std::vector<Frame> frames = {frame_from_design(design_complements(4), 1), construct_gonzalez_2n(4, 1),
                                     frame_from_design(design_complements(5), 2), construct_gonzalez_2n(5, 2),
                                     construct_real_max(4)};
  for (const Frame& f : frames) {
    const EquivalenceFingerprint fp = equivalence_fingerprint(f);
    for (int t = 0; t < 5; ++t) {
      const Frame g = oracle::random_permutation(rng, f).transformed(oracle::random_invertible(rng, f.dim()));
      EXPECT_EQ(equivalence_fingerprint(g), fp);
    }
  }
}

TEST(Spark, Examples) {
  for (std::size_t n = 3; n <= 6; ++n) EXPECT_TRUE(full_spark(construct_cauchy_full_spark(n)).full_spark);
  const SparkResult r = full_spark(construct_real_max(3));
  EXPECT_FALSE(r.full_spark);
  EXPECT_EQ(r.dependent, (Idx{0, 1, 3}));
  EXPECT_TRUE(full_spark(basis(4)).full_spark);
}

TEST(Congruence, ReconstructsAndMatchesInertia) {
  std::mt19937_64 rng(46);
  std::uniform_int_distribution<int> e(-3, 3);
  for (int t = 0; t < 60; ++t) {
    const std::size_t n = 1 + rng() % 4;
    const bool complex = t % 2;
    ExactMatrix a(n, n);
    for (std::size_t k = 0; k < n; ++k) {
      a(k, k) = Gaussian(t % 3 == 0 ? 0 : e(rng));  // zero diagonals exercise 2x2 pivots
      for (std::size_t l = k + 1; l < n; ++l) {
        const Gaussian z(Rational(e(rng)), Rational(complex ? e(rng) : 0));
        a(k, l) = z;
        a(l, k) = z.conj();
      }
    }
    const auto terms = congruence_decomposition(a);
    ExactMatrix sum(n, n);
    int pos = 0, neg = 0;
    for (const auto& term : terms) {
      ASSERT_NE(sgn(term.d), 0);
      (sgn(term.d) > 0 ? pos : neg)++;
      const ExactMatrix o = outer(term.l);
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) sum(k, l) += Gaussian(term.d) * o(k, l);
    }
    EXPECT_EQ(sum, a);
    Eigen::SelfAdjointEigenSolver<CMatrix> es(to_float(a));
    const Eigen::VectorXd ev = es.eigenvalues();
    EXPECT_EQ(inertia(std::vector<double>(ev.data(), ev.data() + ev.size())), std::make_pair(pos, neg));
  }
}

}  // namespace
}  // namespace vitalpovm
