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

#include "vitalpovm/certify.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <set>

#include "vitalpovm/parallel.hpp"

namespace vitalpovm {

std::string_view to_string(PsiStatus s) {
  switch (s) {
    case PsiStatus::Complete: return "complete";
    case PsiStatus::Collision: return "collision";
    case PsiStatus::Undecided: return "undecided";
  }
  return "?";
}

std::string_view to_string(VitalStatus s) {
  switch (s) {
    case VitalStatus::Vital: return "vital";
    case VitalStatus::NotVital: return "not-vital";
    case VitalStatus::Undecided: return "undecided";
  }
  return "?";
}

namespace {

using IntVec = std::vector<mpz_class>;

void require_real(const Frame& f, const char* what) {
  if (f.field() != Field::Real) throw Error(ErrorCode::WrongField, std::string(what) + " requires a real frame");
}

unsigned resolve_workers(const CertifyOptions& opt, std::size_t work_items) {
  unsigned w = opt.threads ? opt.threads : worker_count();
  if (work_items < w) w = static_cast<unsigned>(std::max<std::size_t>(work_items, 1));
  return w;
}

mpz_class dot(const IntVec& a, const IntVec& b) {
  mpz_class s = 0;
  for (std::size_t k = 0; k < a.size(); ++k)
    if (sgn(a[k]) != 0 && sgn(b[k]) != 0) s += a[k] * b[k];
  return s;
}

std::size_t rank_of(const std::vector<IntVec>& ints, const std::vector<std::size_t>& idx, std::size_t n) {
  IntegerEchelon<mpz_class> e(n);
  for (auto i : idx) {
    e.push(ints[i]);
    if (e.full()) break;
  }
  return e.rank();
}

/// Basis of {u : <v_i, u> = 0 for i in idx}.
std::vector<ExactVector> orthogonal_complement(const Frame& f, const std::vector<std::size_t>& idx) {
  ExactMatrix rows(idx.size(), f.dim());
  for (std::size_t r = 0; r < idx.size(); ++r)
    for (std::size_t c = 0; c < f.dim(); ++c) rows(r, c) = f[idx[r]][c].conj();
  return nullspace(rows);
}

RationalVector real_part(const ExactVector& v) {
  RationalVector out;
  out.reserve(v.size());
  for (const auto& z : v) out.push_back(z.re());
  return out;
}

bool parallel(const ExactVector& a, const ExactVector& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = i + 1; k < a.size(); ++k)
      if (!(a[i] * b[k] - a[k] * b[i]).is_zero()) return false;
  return true;
}

bool is_zero_vector(const ExactVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Gaussian& z) { return z.is_zero(); });
}

// Orients the partition so that part2 holds index 0 and fills ranks and the
// normal of part1.
PartitionWitness make_witness(const Frame& f, const std::vector<IntVec>& ints, std::vector<std::size_t> part1,
                              std::vector<std::size_t> part2) {
  if (std::find(part1.begin(), part1.end(), std::size_t{0}) != part1.end()) std::swap(part1, part2);
  PartitionWitness w;
  w.rank1 = rank_of(ints, part1, f.dim());
  w.rank2 = rank_of(ints, part2, f.dim());
  w.normal = primitive(real_part(orthogonal_complement(f, part1).front()));
  w.part1 = std::move(part1);
  w.part2 = std::move(part2);
  return w;
}

std::uint64_t binom_capped(std::size_t m, std::size_t k, std::uint64_t cap) {
  if (k > m) return 0;
  k = std::min(k, m - k);
  unsigned __int128 r = 1;
  for (std::size_t i = 0; i < k; ++i) {
    r = r * (m - i) / (i + 1);
    if (r > cap) return cap + 1;
  }
  return static_cast<std::uint64_t>(r);
}

}  // namespace

CpVerdict complement_property_exhaustive(const Frame& f, const CertifyOptions& opt) {
  require_real(f, "complement property");
  const std::size_t m = f.size();
  const std::size_t n = f.dim();
  if (m == 0) {
    PartitionWitness w;
    w.normal.assign(n, 0);
    w.normal[0] = 1;
    return {w};
  }
  if (m - 1 >= 63 || (std::uint64_t{1} << (m - 1)) > opt.max_partitions)
    throw Error(ErrorCode::TooLarge, "exhaustive partition search over " + std::to_string(m) +
                                         " vectors exceeds the partition limit " + std::to_string(opt.max_partitions));
  const auto ints = f.integral_vectors();
  const std::uint64_t total = std::uint64_t{1} << (m - 1);
  const unsigned workers = resolve_workers(opt, total);
  std::atomic<std::uint64_t> best{total};

  run_workers(workers, [&](unsigned t) {
    IntegerEchelon<mpz_class> a(n);
    IntegerEchelon<mpz_class> b(n);
    for (std::uint64_t mask = t; mask < total; mask += workers) {
      if (mask > best.load()) return;
      a.clear();
      b.clear();
      b.push(ints[0]);
      for (std::size_t i = 1; i < m && !(a.full() && b.full()); ++i) {
        auto& side = ((mask >> (i - 1)) & 1u) ? b : a;
        if (!side.full()) side.push(ints[i]);
      }
      if (!a.full() && !b.full()) {
        std::uint64_t cur = best.load();
        while (mask < cur && !best.compare_exchange_weak(cur, mask)) {
        }
        return;
      }
    }
  });

  if (best.load() == total) return {};
  const std::uint64_t mask = best.load();
  std::vector<std::size_t> part1;
  std::vector<std::size_t> part2{0};
  for (std::size_t i = 1; i < m; ++i) ((mask >> (i - 1)) & 1u ? part2 : part1).push_back(i);
  return {make_witness(f, ints, std::move(part1), std::move(part2))};
}

CpVerdict complement_property_fast(const Frame& f, const CertifyOptions& opt) {
  require_real(f, "complement property");
  const std::size_t m = f.size();
  const std::size_t n = f.dim();
  const auto ints = f.integral_vectors();

  std::vector<std::size_t> all(m);
  for (std::size_t i = 0; i < m; ++i) all[i] = i;
  if (rank_of(ints, all, n) < n) return {make_witness(f, ints, {}, all)};
  if (n == 1) return {};

  const std::size_t depth = n - 1;
  const std::size_t roots = m - depth + 1;
  const unsigned workers = resolve_workers(opt, roots);
  std::atomic<std::size_t> best_root{m};

  struct Hit {
    std::vector<std::size_t> tuple;
    std::vector<std::size_t> part1;
    std::vector<std::size_t> part2;
  };
  std::vector<std::optional<Hit>> hits(workers);

  run_workers(workers, [&](unsigned t) {
    IntegerEchelon<mpz_class> ech(n);
    std::set<IntVec> seen;
    std::vector<std::size_t> tuple;
    std::vector<char> on_plane(m);

    auto leaf = [&]() -> bool {
      RationalMatrix rows(depth, n);
      for (std::size_t r = 0; r < depth; ++r)
        for (std::size_t c = 0; c < n; ++c) rows(r, c) = Rational(ech.rows()[r][c]);
      IntVec u = primitive(nullspace(rows).front());
      if (!seen.insert(u).second) return false;
      IntegerEchelon<mpz_class> off(n);
      for (std::size_t i = 0; i < m; ++i) {
        on_plane[i] = sgn(dot(ints[i], u)) == 0;
        if (!on_plane[i] && off.push(ints[i]) && off.full()) return false;
      }
      Hit h;
      h.tuple = tuple;
      for (std::size_t i = 0; i < m; ++i) (on_plane[i] ? h.part1 : h.part2).push_back(i);
      hits[t] = std::move(h);
      return true;
    };

    auto dfs = [&](auto&& self, std::size_t start) -> bool {
      if (tuple.size() == depth) return leaf();
      for (std::size_t i = start; i + (depth - tuple.size()) <= m; ++i) {
        if (!ech.push(ints[i])) continue;
        tuple.push_back(i);
        const bool hit = self(self, i + 1);
        tuple.pop_back();
        ech.pop();
        if (hit) return true;
      }
      return false;
    };

    for (std::size_t root = t; root < roots; root += workers) {
      if (root > best_root.load()) return;
      ech.push(ints[root]);
      tuple.assign(1, root);
      const bool hit = dfs(dfs, root + 1);
      ech.pop();
      if (hit) {
        std::size_t cur = best_root.load();
        while (root < cur && !best_root.compare_exchange_weak(cur, root)) {
        }
        return;
      }
    }
  });

  const Hit* first = nullptr;
  for (const auto& h : hits)
    if (h && (!first || h->tuple < first->tuple)) first = &*h;
  if (!first) return {};
  return {make_witness(f, ints, first->part1, first->part2)};
}

bool verify_collision(const Frame& f, const CollisionPair& pair) {
  const std::size_t n = f.dim();
  if (pair.psi.size() != n || pair.phi.size() != n) return false;
  if (sgn(pair.alpha) <= 0) return false;
  if (is_zero_vector(pair.psi) || is_zero_vector(pair.phi) || parallel(pair.psi, pair.phi)) return false;
  if (pair.removed && *pair.removed >= f.size()) return false;
  if (f.field() == Field::Real) {
    for (const auto& z : pair.psi)
      if (!z.is_real()) return false;
    for (const auto& z : pair.phi)
      if (!z.is_real()) return false;
  }
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (pair.removed && *pair.removed == i) continue;
    if (inner(f[i], pair.psi).norm2() != pair.alpha * inner(f[i], pair.phi).norm2()) return false;
  }
  return true;
}

CollisionPair collision_from_partition(const Frame& f, const PartitionWitness& w) {
  require_real(f, "collision_from_partition");
  const std::size_t m = f.size();
  const std::size_t n = f.dim();
  std::vector<int> seen(m, 0);
  for (auto i : w.part1)
    if (i < m) ++seen[i];
  for (auto i : w.part2)
    if (i < m) ++seen[i];
  if (w.part1.size() + w.part2.size() != m || std::any_of(seen.begin(), seen.end(), [](int c) { return c != 1; }))
    throw Error(ErrorCode::DegenerateWitness, "witness is not a partition of the frame");

  const auto ns1 = orthogonal_complement(f, w.part1);
  const auto ns2 = orthogonal_complement(f, w.part2);
  if (ns1.empty()) throw Error(ErrorCode::DegenerateWitness, "part1 spans; partition is not failing");
  if (ns2.empty()) throw Error(ErrorCode::DegenerateWitness, "part2 spans; partition is not failing");

  CollisionPair pair;
  bool found = false;
  for (std::size_t a = 0; a < ns1.size() && !found; ++a)
    for (std::size_t b = 0; b < ns2.size() && !found; ++b) {
      if (parallel(ns1[a], ns2[b])) continue;
      pair.psi.resize(n);
      pair.phi.resize(n);
      for (std::size_t k = 0; k < n; ++k) {
        pair.psi[k] = ns1[a][k] + ns2[b][k];
        pair.phi[k] = ns1[a][k] - ns2[b][k];
      }
      found = true;
    }
  if (!found) {
    // Both complements are the same line, so u is orthogonal to all of F.
    const ExactVector& u = ns1.front();
    for (std::size_t k = 0; k < n && !found; ++k) {
      ExactVector e(n, Gaussian(0));
      e[k] = Gaussian(1);
      if (parallel(e, u)) continue;
      pair.phi = e;
      pair.psi = e;
      for (std::size_t c = 0; c < n; ++c) pair.psi[c] += u[c];
      found = true;
    }
  }
  if (!found) throw Error(ErrorCode::DegenerateWitness, "no independent collision pair exists");
  pair.alpha = 1;
  if (!verify_collision(f, pair)) throw Error(ErrorCode::DegenerateWitness, "collision pair failed exact verification");
  return pair;
}

bool is_informationally_complete(const Frame& f) {
  const std::size_t dim = operator_space_dim(f.field(), f.dim());
  if (f.size() < dim) return false;
  return rank(measurement_matrix(f)) == dim;
}

PsiVerdict is_psi_complete(const Frame& f, const CertifyOptions& opt) {
  PsiVerdict v;
  if (f.field() == Field::Real) {
    auto cp = complement_property_fast(f, opt);
    if (cp.holds()) {
      v.status = PsiStatus::Complete;
    } else {
      v.status = PsiStatus::Collision;
      v.collision = collision_from_partition(f, *cp.witness);
      v.witness = std::move(cp.witness);
    }
    return v;
  }
  if (is_informationally_complete(f)) {
    v.status = PsiStatus::Complete;
  } else {
    v.status = PsiStatus::Undecided;
    v.reason = "complex frame is not informationally complete; no general decision procedure";
  }
  return v;
}

std::vector<HermitianTerm> congruence_decomposition(const ExactMatrix& a) {
  if (!is_hermitian(Field::Complex, a)) throw Error(ErrorCode::NonHermitianInput, "matrix is not Hermitian");
  const std::size_t n = a.rows();
  ExactMatrix m = a;
  std::vector<HermitianTerm> terms;

  auto subtract = [&](const Rational& d, const ExactVector& x, const ExactVector& y) {
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) m(r, c) -= Gaussian(d) * x[r] * y[c].conj();
  };

  for (;;) {
    std::size_t k = n;
    for (std::size_t i = 0; i < n; ++i)
      if (!m(i, i).is_zero()) {
        k = i;
        break;
      }
    if (k < n) {
      const Rational d = m(k, k).re();
      ExactVector l = m.column(k);
      for (auto& z : l) z /= Gaussian(d);
      subtract(d, l, l);
      terms.push_back({d, std::move(l)});
      continue;
    }
    std::size_t p = n;
    std::size_t q = n;
    for (std::size_t i = 0; i < n && p == n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (!m(i, j).is_zero()) {
          p = i;
          q = j;
          break;
        }
    if (p == n) break;
    const Gaussian c = m(p, q);
    const ExactVector x = m.column(p);
    ExactVector y = m.column(q);
    for (auto& z : y) z /= c;
    subtract(1, x, y);
    subtract(1, y, x);
    ExactVector plus(n);
    ExactVector minus(n);
    for (std::size_t i = 0; i < n; ++i) {
      plus[i] = x[i] + y[i];
      minus[i] = x[i] - y[i];
    }
    terms.push_back({Rational(1, 2), std::move(plus)});
    terms.push_back({Rational(-1, 2), std::move(minus)});
  }
  return terms;
}

namespace {

// Generator of the 1-dimensional kernel of the measurement map restricted to
// F minus v_j, or nullopt when the kernel dimension differs.
std::optional<ExactMatrix> reduced_kernel_generator(const Frame& f, std::size_t j, std::size_t& kernel_dim) {
  const auto ker = nullspace(measurement_matrix(f).without_row(j));
  kernel_dim = ker.size();
  if (ker.size() != 1) return std::nullopt;
  return from_operator_coords(f.field(), f.dim(), ker.front());
}

std::vector<double> float_eigenvalues(const ExactMatrix& a) {
  Eigen::SelfAdjointEigenSolver<CMatrix> eig(to_float(a), Eigen::EigenvaluesOnly);
  const auto& ev = eig.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

std::pair<std::size_t, std::size_t> float_inertia(const std::vector<double>& ev, double tol) {
  double scale = 0;
  for (double x : ev) scale = std::max(scale, std::abs(x));
  std::size_t pos = 0;
  std::size_t neg = 0;
  for (double x : ev) {
    if (x > tol * scale) ++pos;
    if (x < -tol * scale) ++neg;
  }
  return {pos, neg};
}

RemovalCertificate singular_certificate(const Frame& f, std::size_t j, const CertifyOptions& opt) {
  std::vector<std::size_t> rest;
  for (std::size_t i = 0; i < f.size(); ++i)
    if (i != j) rest.push_back(i);
  SingularKernel s;
  s.exact = orthogonal_complement(f, rest).front();
  const Whitening w = whitening_transform(f);
  s.kernel = w.sqrt * to_float(s.exact);
  if (f.field() == Field::Real) s.kernel = s.kernel.real().cast<std::complex<double>>();
  s.kernel.normalize();
  const CVector wj = w.inv_sqrt * to_float(f[j]);
  s.residual = (s.kernel - wj * (wj.adjoint() * s.kernel)).norm();
  if (!(s.residual <= opt.eig_tol))
    throw Error(ErrorCode::Undecided, "singular kernel residual " + std::to_string(s.residual) + " exceeds tolerance");
  return {j, std::move(s), std::nullopt};
}

}  // namespace

RemovalCertificate removal_certificate(const Frame& f, std::size_t j, const CertifyOptions& opt) {
  if (j >= f.size()) throw Error(ErrorCode::InvalidInput, "removal index out of range");
  const Frame reduced = f.without(j);
  if (!spans(reduced)) return singular_certificate(f, j, opt);

  const std::size_t dim = operator_space_dim(f.field(), f.dim());
  if (f.field() == Field::Real) {
    auto cp = complement_property_fast(reduced, opt);
    if (cp.holds())
      throw Error(ErrorCode::StillComplete, "frame minus vector " + std::to_string(j) + " still has the complement property");
    CollisionPair pair = collision_from_partition(reduced, *cp.witness);
    pair.removed = j;
    Rational num = 0;
    Rational den = 0;
    for (std::size_t i = 0; i < f.size(); ++i) {
      if (i == j) continue;
      num += inner(f[i], pair.psi).norm2();
      den += inner(f[i], pair.phi).norm2();
    }
    if (sgn(den) == 0) throw Error(ErrorCode::DegenerateWitness, "phi is orthogonal to the reduced frame");
    pair.alpha = num / den;
    if (!verify_collision(f, pair))
      throw Error(ErrorCode::DegenerateWitness, "removal pair failed exact verification");
    RemovalCertificate cert{j, std::move(pair), std::nullopt};
    if (f.size() == dim) {
      std::size_t kernel_dim = 0;
      if (auto a = reduced_kernel_generator(f, j, kernel_dim)) cert.generator = KernelGenerator{*a, float_eigenvalues(*a)};
    }
    return cert;
  }

  std::size_t kernel_dim = 0;
  const auto a = reduced_kernel_generator(f, j, kernel_dim);
  if (kernel_dim == 0)
    throw Error(ErrorCode::StillComplete,
                "frame minus vector " + std::to_string(j) + " is still informationally complete");
  if (!a)
    throw Error(ErrorCode::KernelTooLarge,
                "reduced measurement kernel has dimension " + std::to_string(kernel_dim) + "; only 1 is supported");

  const auto terms = congruence_decomposition(*a);
  const HermitianTerm* pos = nullptr;
  const HermitianTerm* neg = nullptr;
  std::size_t npos = 0;
  std::size_t nneg = 0;
  for (const auto& t : terms) {
    if (sgn(t.d) > 0) {
      ++npos;
      pos = &t;
    } else {
      ++nneg;
      neg = &t;
    }
  }
  if (npos != 1 || nneg != 1)
    throw Error(ErrorCode::Undecided, "kernel generator has inertia (" + std::to_string(npos) + "," +
                                          std::to_string(nneg) + "); no rank-2 indefinite certificate");
  const auto ev = float_eigenvalues(*a);
  if (float_inertia(ev, opt.eig_tol) != std::pair<std::size_t, std::size_t>{1, 1})
    throw Error(ErrorCode::Undecided, "floating-point eigencheck disagrees with the exact inertia");

  CollisionPair pair{pos->l, neg->l, Rational(-neg->d / pos->d), j};
  if (!verify_collision(f, pair))
    throw Error(ErrorCode::DegenerateWitness, "removal pair failed exact verification");
  return {j, std::move(pair), KernelGenerator{*a, ev}};
}

VitalityReport is_vital(const Frame& f, const CertifyOptions& opt) {
  VitalityReport r;
  r.ic = is_informationally_complete(f);
  r.psi = is_psi_complete(f, opt);
  if (r.psi.status == PsiStatus::Undecided) {
    r.status = VitalStatus::Undecided;
    r.reason = r.psi.reason;
    return r;
  }
  if (r.psi.status == PsiStatus::Collision) {
    r.status = VitalStatus::NotVital;
    r.reason = "frame is not PSI-complete";
    return r;
  }
  for (std::size_t j = 0; j < f.size(); ++j) {
    try {
      r.certificates.push_back(removal_certificate(f, j, opt));
    } catch (const Error& e) {
      if (e.code() == ErrorCode::StillComplete) {
        r.status = VitalStatus::NotVital;
        r.failed_index = j;
        r.reason = e.what();
        return r;
      }
      if (e.code() == ErrorCode::KernelTooLarge || e.code() == ErrorCode::Undecided) {
        r.status = VitalStatus::Undecided;
        r.failed_index = j;
        r.reason = e.what();
        return r;
      }
      throw;
    }
  }
  r.status = VitalStatus::Vital;
  return r;
}

namespace {

// Visits every size-n subset in lexicographic order with its spanning flag;
// stops when visit returns false.
template <class Visit>
void for_each_basis_candidate(const Frame& f, const CertifyOptions& opt, Visit&& visit) {
  const std::size_t m = f.size();
  const std::size_t n = f.dim();
  const std::uint64_t count = binom_capped(m, n, opt.max_subsets);
  if (count > opt.max_subsets)
    throw Error(ErrorCode::TooLarge, "binom(" + std::to_string(m) + "," + std::to_string(n) +
                                         ") subsets exceed the limit " + std::to_string(opt.max_subsets));
  if (m < n) return;
  const auto ints = f.gaussian_integral_vectors();
  IntegerEchelon<GaussInt> ech(n);
  std::vector<std::size_t> chosen;
  std::vector<char> pushed;
  auto dfs = [&](auto&& self, std::size_t start) -> bool {
    if (chosen.size() == n) return visit(chosen, ech.full());
    for (std::size_t i = start; i + (n - chosen.size()) <= m; ++i) {
      const bool p = ech.push(ints[i]);
      chosen.push_back(i);
      const bool go_on = self(self, i + 1);
      chosen.pop_back();
      if (p) ech.pop();
      if (!go_on) return false;
    }
    return true;
  };
  dfs(dfs, 0);
}

}  // namespace

std::vector<std::vector<std::size_t>> maximal_nonspanning_subsets(const Frame& f, const CertifyOptions& opt) {
  std::vector<std::vector<std::size_t>> out;
  for_each_basis_candidate(f, opt, [&](const std::vector<std::size_t>& s, bool spanning) {
    if (!spanning) out.push_back(s);
    return true;
  });
  return out;
}

EquivalenceFingerprint equivalence_fingerprint(const Frame& f, const CertifyOptions& opt) {
  require_real(f, "equivalence fingerprint");
  if (f.size() > 64) throw Error(ErrorCode::TooLarge, "fingerprint supports at most 64 vectors");
  std::vector<std::uint64_t> masks;
  for_each_basis_candidate(f, opt, [&](const std::vector<std::size_t>& s, bool spanning) {
    if (!spanning) {
      std::uint64_t mask = 0;
      for (auto i : s) mask |= std::uint64_t{1} << i;
      masks.push_back(mask);
    }
    return true;
  });
  std::vector<std::uint64_t> counts(f.dim() + 1, 0);
  for (std::size_t a = 0; a < masks.size(); ++a)
    for (std::size_t b = a + 1; b < masks.size(); ++b) ++counts[static_cast<std::size_t>(std::popcount(masks[a] & masks[b]))];
  EquivalenceFingerprint fp;
  fp.max_nonspanning_count = masks.size();
  for (std::size_t k = 0; k < counts.size(); ++k)
    if (counts[k]) fp.intersection_histogram.emplace_back(k, counts[k]);
  return fp;
}

SparkResult full_spark(const Frame& f, const CertifyOptions& opt) {
  SparkResult r;
  for_each_basis_candidate(f, opt, [&](const std::vector<std::size_t>& s, bool spanning) {
    if (spanning) return true;
    r.full_spark = false;
    r.dependent = s;
    return false;
  });
  return r;
}

}  // namespace vitalpovm
