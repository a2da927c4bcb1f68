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

#include "vitalpovm_cli/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <optional>
#include <ostream>

#include "vitalpovm/certify.hpp"
#include "vitalpovm/designs.hpp"
#include "vitalpovm/io.hpp"
#include "vitalpovm/tomo.hpp"
#include "vitalpovm/version.hpp"

namespace vitalpovm::cli {

namespace {

void emit(const Json& j, const std::string& path, std::ostream& out) {
  const std::string text = dump(j);
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorCode::InvalidInput, "cannot write " + path);
  f << text;
}

Frame load_frame(const std::string& path) { return frame_from_json(read_json_file(path)); }

Json frame_summary(const Frame& f) {
  return Json{{"field", std::string(to_string(f.field()))},
              {"n", f.dim()},
              {"size", f.size()},
              {"construction", f.meta().construction},
              {"seed", f.meta().seed}};
}

// construct ------------------------------------------------------------------

struct ConstructArgs {
  std::string family;
  std::size_t n = 0;
  std::optional<std::size_t> w;
  std::uint64_t seed = 0;
  std::string design;
  std::string out;
  bool have_n = false;
};

std::optional<BlockDesign> family_design(const ConstructArgs& a) {
  if (a.family == "design-pairs") return design_pairs(a.n);
  if (a.family == "design-complements") return design_complements(a.n);
  if (a.family == "design-complete") return design_complete(a.n);
  if (a.family == "design-agl17") {
    if (a.have_n && a.n != 7) throw Error(ErrorCode::InvalidInput, "design-agl17 has n = 7");
    return design_agl17();
  }
  if (a.family == "design-file") {
    if (a.design.empty()) throw Error(ErrorCode::InvalidInput, "design-file requires --design");
    return design_from_json(read_json_file(a.design));
  }
  return std::nullopt;
}

int cmd_construct(const ConstructArgs& a, std::ostream& out) {
  const bool needs_n = a.family != "design-agl17" && a.family != "design-file";
  if (needs_n && !a.have_n) throw Error(ErrorCode::InvalidInput, "--n is required for family " + a.family);
  std::optional<Frame> f;
  if (a.family == "real-max") {
    f = construct_real_max(a.n);
  } else if (a.family == "complex-max") {
    f = construct_complex_max(a.n);
  } else if (a.family == "cauchy") {
    f = construct_cauchy_full_spark(a.n);
  } else if (a.family == "gonzalez") {
    f = construct_gonzalez_2n(a.n, a.seed);
  } else if (auto d = family_design(a)) {
    if (a.w && verify_design(*d).k != *a.w)
      throw Error(ErrorCode::InvalidInput, "--w " + std::to_string(*a.w) + " does not match block size " +
                                               std::to_string(verify_design(*d).k));
    f = frame_from_design(*d, a.seed);
  }
  if (a.w && a.family.rfind("design-", 0) != 0)
    throw Error(ErrorCode::InvalidInput, "--w applies to design families only");
  Json j = to_json(*f);
  j["config"] = {{"command", "construct"},
                 {"family", a.family},
                 {"n", a.have_n ? Json(a.n) : Json(nullptr)},
                 {"w", a.w ? Json(*a.w) : Json(nullptr)},
                 {"seed", a.seed},
                 {"design", a.design.empty() ? Json(nullptr) : Json(a.design)}};
  emit(j, a.out, out);
  return kHolds;
}

// design ---------------------------------------------------------------------

struct DesignArgs {
  std::string kind;
  std::size_t n = 0;
  std::string verify;
  std::size_t max_points = 12;
  std::string out;
};

int cmd_design(const DesignArgs& a, std::ostream& out) {
  if (a.kind.empty() == a.verify.empty()) throw Error(ErrorCode::InvalidInput, "give exactly one of --kind or --verify");
  if (!a.kind.empty()) {
    BlockDesign d = a.kind == "pairs"         ? design_pairs(a.n)
                    : a.kind == "complements" ? design_complements(a.n)
                    : a.kind == "complete"    ? design_complete(a.n)
                                              : design_agl17();
    emit(to_json(d), a.out, out);
    return kHolds;
  }
  const BlockDesign d = design_from_json(read_json_file(a.verify));
  Json report{{"design", to_json(d)}};
  int code = kHolds;
  try {
    const DesignParams p = verify_design(d);
    report["valid"] = true;
    report["params"] = {{"k", p.k}, {"lambda", p.lambda}, {"r", p.r}, {"b", p.b}};
  } catch (const Error& e) {
    report["valid"] = false;
    report["params"] = nullptr;
    report["error"] = e.what();
    code = kRefuted;
  }
  try {
    const IncidenceResult r = incidence_condition(d, a.max_points);
    report["incidence"] = {{"holds", r.holds}};
    if (!r.holds) {
      report["incidence"]["S"] = r.s;
      report["incidence"]["T"] = r.t;
      report["incidence"]["common"] = r.common;
      code = kRefuted;
    }
  } catch (const Error& e) {
    if (e.code() != ErrorCode::TooLarge) throw;
    report["incidence"] = nullptr;
    report["incidenceSkipped"] = e.what();
  }
  report["config"] = {{"command", "design"}, {"verify", a.verify}, {"maxPoints", a.max_points}};
  emit(report, a.out, out);
  return code;
}

// certify --------------------------------------------------------------------

struct CertifyArgs {
  std::string frame;
  std::string mode = "vital";
  bool exhaustive = false;
  CertifyOptions opt;
  std::string out;
};

Json certify_config(const CertifyArgs& a) {
  return Json{{"command", "certify"},
              {"mode", a.mode},
              {"exhaustive", a.exhaustive},
              {"eigTol", a.opt.eig_tol},
              {"parsevalTol", a.opt.parseval_tol},
              {"maxPartitions", a.opt.max_partitions},
              {"maxSubsets", a.opt.max_subsets}};
}

std::optional<Json> try_fingerprint(const Frame& f, const CertifyOptions& opt) {
  if (f.field() != Field::Real) return std::nullopt;
  try {
    return to_json(equivalence_fingerprint(f, opt));
  } catch (const Error& e) {
    if (e.code() == ErrorCode::TooLarge) return std::nullopt;
    throw;
  }
}

int cmd_certify(const CertifyArgs& a, std::ostream& out) {
  const Frame f = load_frame(a.frame);
  const Field field = f.field();
  Json r{{"frame", to_json(f)}, {"mode", a.mode}};
  Json holds = nullptr;
  Json psi = nullptr;
  Json vital = nullptr;
  Json certificates = Json::array();
  Json fingerprint = nullptr;
  int code = kError;
  const bool ic = is_informationally_complete(f);

  if (a.mode == "cp") {
    const CpVerdict v = a.exhaustive ? complement_property_exhaustive(f, a.opt) : complement_property_fast(f, a.opt);
    holds = psi = v.holds();
    if (!v.holds()) {
      r["witness"] = to_json(*v.witness);
      r["collision"] = to_json(collision_from_partition(f, *v.witness), field);
    }
    code = v.holds() ? kHolds : kRefuted;
  } else if (a.mode == "psi") {
    PsiVerdict v = is_psi_complete(f, a.opt);
    if (v.status == PsiStatus::Undecided) {
      r["reason"] = v.reason;
    } else {
      holds = psi = v.status == PsiStatus::Complete;
      if (v.witness) r["witness"] = to_json(*v.witness);
      if (v.collision) r["collision"] = to_json(*v.collision, field);
      code = v.status == PsiStatus::Complete ? kHolds : kRefuted;
    }
    r["status"] = std::string(to_string(v.status));
  } else if (a.mode == "ic") {
    holds = ic;
    if (!ic) {
      const auto ker = nullspace(measurement_matrix(f));
      const ExactMatrix k = from_operator_coords(field, f.dim(), ker.front());
      Json rows = Json::array();
      for (std::size_t i = 0; i < k.rows(); ++i) rows.push_back(to_json(k.row_vector(i), field));
      r["kernelOperator"] = rows;
    }
    code = ic ? kHolds : kRefuted;
  } else if (a.mode == "vital") {
    const VitalityReport v = is_vital(f, a.opt);
    r["status"] = std::string(to_string(v.status));
    if (v.psi.status != PsiStatus::Undecided) psi = v.psi.status == PsiStatus::Complete;
    if (v.psi.witness) r["witness"] = to_json(*v.psi.witness);
    if (v.psi.collision) r["collision"] = to_json(*v.psi.collision, field);
    for (const auto& c : v.certificates) certificates.push_back(to_json(c, field));
    if (v.failed_index) r["failedIndex"] = *v.failed_index;
    if (!v.reason.empty()) r["reason"] = v.reason;
    if (v.status != VitalStatus::Undecided) holds = vital = v.status == VitalStatus::Vital;
    if (auto fp = try_fingerprint(f, a.opt)) fingerprint = *fp;
    code = v.status == VitalStatus::Vital ? kHolds : v.status == VitalStatus::NotVital ? kRefuted : kError;
  } else {
    const SparkResult s = full_spark(f, a.opt);
    holds = s.full_spark;
    if (s.dependent) r["dependent"] = *s.dependent;
    code = s.full_spark ? kHolds : kRefuted;
  }

  r["holds"] = holds;
  r["psiComplete"] = psi;
  r["ic"] = ic;
  r["vital"] = vital;
  r["certificates"] = certificates;
  r["fingerprint"] = fingerprint;
  r["config"] = certify_config(a);
  emit(r, a.out, out);
  return code;
}

// fingerprint ----------------------------------------------------------------

struct FingerprintArgs {
  std::string frame;
  std::string compare;
  CertifyOptions opt;
  std::string out;
};

int cmd_fingerprint(const FingerprintArgs& a, std::ostream& out) {
  const Frame f = load_frame(a.frame);
  const EquivalenceFingerprint fp = equivalence_fingerprint(f, a.opt);
  Json r{{"frame", frame_summary(f)}, {"fingerprint", to_json(fp)}};
  int code = kHolds;
  if (!a.compare.empty()) {
    const Frame g = load_frame(a.compare);
    const EquivalenceFingerprint other = equivalence_fingerprint(g, a.opt);
    r["compare"] = {{"frame", frame_summary(g)}, {"fingerprint", to_json(other)}, {"equal", fp == other}};
    if (!(fp == other)) code = kRefuted;
  }
  r["config"] = {{"command", "fingerprint"},
                 {"compare", a.compare.empty() ? Json(nullptr) : Json(a.compare)},
                 {"maxSubsets", a.opt.max_subsets}};
  emit(r, a.out, out);
  return code;
}

// tomo -----------------------------------------------------------------------

struct TomoArgs {
  std::string frame;
  std::size_t trials = 100;
  double noise = 0;
  std::uint64_t seed = 0;
  double parseval_tol = 1e-10;
  std::string out;
};

int cmd_tomo(const TomoArgs& a, std::ostream& out) {
  const Frame f = load_frame(a.frame);
  const Povm p = whiten(f, a.parseval_tol);
  const NoiseSummary s = noise_sweep(p, a.trials, a.noise, a.seed);
  Json trials = Json::array();
  for (std::size_t t = 0; t < s.errors.size(); ++t) trials.push_back({{"trial", t}, {"error", s.errors[t]}});
  Json r{{"frame", frame_summary(f)},
         {"trials", std::move(trials)},
         {"summary", {{"mean", s.mean}, {"median", s.median}, {"max", s.max}}},
         {"config",
          {{"command", "tomo"},
           {"trials", a.trials},
           {"noise", a.noise},
           {"seed", a.seed},
           {"parsevalTol", a.parseval_tol}}}};
  emit(r, a.out, out);
  return kHolds;
}

void add_guard_options(CLI::App* cmd, CertifyOptions& opt) {
  cmd->add_option("--max-partitions", opt.max_partitions, "Exhaustive partition search limit")->capture_default_str();
  cmd->add_option("--max-subsets", opt.max_subsets, "n-subset enumeration limit")->capture_default_str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact certification of vital rank-one POVMs", "vitalpovm"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kVersion));

  ConstructArgs ca;
  auto* construct = app.add_subcommand("construct", "Emit a frame from a named family");
  construct
      ->add_option("--family", ca.family, "Frame family")
      ->required()
      ->check(CLI::IsMember({"real-max", "complex-max", "cauchy", "gonzalez", "design-pairs", "design-complements",
                             "design-complete", "design-agl17", "design-file"}));
  auto* n_opt = construct->add_option("--n", ca.n, "Dimension");
  construct->add_option("--w", ca.w, "Expected block size (design families)");
  construct->add_option("--seed", ca.seed, "Coefficient seed")->capture_default_str();
  construct->add_option("--design", ca.design, "Design JSON for design-file");
  construct->add_option("--out", ca.out, "Output file (default stdout)");

  DesignArgs da;
  auto* design = app.add_subcommand("design", "Generate or verify a block design");
  design->add_option("--kind", da.kind, "Generator")->check(CLI::IsMember({"pairs", "complements", "complete", "agl17"}));
  design->add_option("--n", da.n, "Number of points");
  design->add_option("--verify", da.verify, "Design JSON to verify");
  design->add_option("--max-points", da.max_points, "Incidence-condition search limit")->capture_default_str();
  design->add_option("--out", da.out, "Output file (default stdout)");

  CertifyArgs cert;
  auto* certify = app.add_subcommand("certify", "Certify a frame");
  certify->add_option("frame,--frame", cert.frame, "Frame JSON (- for stdin)")->required();
  certify->add_option("--mode", cert.mode, "Property to certify")
      ->capture_default_str()
      ->check(CLI::IsMember({"cp", "psi", "ic", "vital", "fullspark"}));
  certify->add_flag("--exhaustive", cert.exhaustive, "cp mode: use the exhaustive partition search");
  certify->add_option("--eig-tol", cert.opt.eig_tol, "Eigenvalue sign tolerance")->capture_default_str();
  certify->add_option("--parseval-tol", cert.opt.parseval_tol, "Parseval residual tolerance")->capture_default_str();
  add_guard_options(certify, cert.opt);
  certify->add_option("--out", cert.out, "Output file (default stdout)");

  FingerprintArgs fa;
  auto* fingerprint = app.add_subcommand("fingerprint", "Maximal non-spanning subset fingerprint");
  fingerprint->add_option("frame,--frame", fa.frame, "Frame JSON (- for stdin)")->required();
  fingerprint->add_option("--compare", fa.compare, "Second frame; exit 1 if fingerprints differ");
  fingerprint->add_option("--max-subsets", fa.opt.max_subsets, "n-subset enumeration limit")->capture_default_str();
  fingerprint->add_option("--out", fa.out, "Output file (default stdout)");

  TomoArgs ta;
  auto* tomo = app.add_subcommand("tomo", "Noisy pure-state tomography sweep");
  tomo->add_option("frame,--frame", ta.frame, "Frame JSON (- for stdin)")->required();
  tomo->add_option("--trials", ta.trials, "Number of states")->capture_default_str()->check(CLI::PositiveNumber);
  tomo->add_option("--noise", ta.noise, "Additive Gaussian noise sigma")->capture_default_str()->check(CLI::NonNegativeNumber);
  tomo->add_option("--seed", ta.seed, "State and noise seed")->capture_default_str();
  tomo->add_option("--parseval-tol", ta.parseval_tol, "Parseval residual tolerance")->capture_default_str();
  tomo->add_option("--out", ta.out, "Output file (default stdout)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kHolds : kError;
  }

  try {
    if (*construct) {
      ca.have_n = n_opt->count() > 0;
      return cmd_construct(ca, out);
    }
    if (*design) return cmd_design(da, out);
    if (*certify) return cmd_certify(cert, out);
    if (*fingerprint) return cmd_fingerprint(fa, out);
    if (*tomo) return cmd_tomo(ta, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kError;
  } catch (const nlohmann::json::exception& e) {
    err << "error: ParseError: " << e.what() << "\n";
    return kError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kError;
  }
  return kError;
}

}  // namespace vitalpovm::cli
