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

#include "vitalpovm/io.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace vitalpovm {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

const Json& member(const Json& j, const char* key) {
  if (!j.is_object()) bad(std::string("expected an object with key \"") + key + "\"");
  auto it = j.find(key);
  if (it == j.end()) bad(std::string("missing key \"") + key + "\"");
  return *it;
}

std::size_t as_size(const Json& j, const char* what) {
  if (!j.is_number_integer() || j.get<long long>() < 0) bad(std::string(what) + " must be a non-negative integer");
  return j.get<std::size_t>();
}

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(mpz_class(j.dump()));
  bad("expected a rational scalar, got " + j.dump());
}

Field field_from_json(const Json& j) {
  if (j == "R") return Field::Real;
  if (j == "C") return Field::Complex;
  bad("field must be \"R\" or \"C\"");
}

std::vector<std::size_t> indices_from_json(const Json& j) {
  if (!j.is_array()) bad("expected an index array");
  std::vector<std::size_t> out;
  for (const auto& x : j) out.push_back(as_size(x, "index"));
  return out;
}

Json float_scalar(std::complex<double> z, Field field) {
  if (field == Field::Real) return z.real();
  return Json::array({z.real(), z.imag()});
}

std::complex<double> float_from_json(const Json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
    return {j[0].get<double>(), j[1].get<double>()};
  bad("expected a number or [re, im] pair");
}

Json float_vector(const CVector& v, Field field) {
  Json a = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(float_scalar(v(i), field));
  return a;
}

CVector float_vector_from_json(const Json& j) {
  if (!j.is_array()) bad("expected a vector");
  CVector v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) v(static_cast<Eigen::Index>(i)) = float_from_json(j[i]);
  return v;
}

Json exact_matrix_json(const ExactMatrix& m, Field field) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(to_json(m.row_vector(r), field));
  return rows;
}

ExactMatrix exact_matrix_from_json(const Json& j) {
  if (!j.is_array()) bad("expected a matrix");
  std::vector<ExactVector> rows;
  for (const auto& r : j) rows.push_back(vector_from_json(r));
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  try {
    return ExactMatrix::from_rows(rows, cols);
  } catch (const Error& e) {
    bad(e.what());
  }
}

}  // namespace

Json to_json(const Gaussian& z, Field field) {
  if (field == Field::Real) return format_rational(z.re());
  return Json{{"re", format_rational(z.re())}, {"im", format_rational(z.im())}};
}

Gaussian gaussian_from_json(const Json& j) {
  if (j.is_object()) {
    const Rational im = j.contains("im") ? rational_from_json(j["im"]) : Rational(0);
    return Gaussian(rational_from_json(member(j, "re")), im);
  }
  return Gaussian(rational_from_json(j));
}

Json to_json(const ExactVector& v, Field field) {
  Json a = Json::array();
  for (const auto& z : v) a.push_back(to_json(z, field));
  return a;
}

ExactVector vector_from_json(const Json& j) {
  if (!j.is_array()) bad("expected a vector of scalars");
  ExactVector v;
  v.reserve(j.size());
  for (const auto& x : j) v.push_back(gaussian_from_json(x));
  return v;
}

Json to_json(const Frame& f) {
  Json vectors = Json::array();
  for (const auto& v : f.vectors()) vectors.push_back(to_json(v, f.field()));
  return Json{{"field", std::string(to_string(f.field()))},
              {"n", f.dim()},
              {"vectors", std::move(vectors)},
              {"labels", f.labels()},
              {"meta", {{"construction", f.meta().construction}, {"seed", f.meta().seed}}}};
}

Frame frame_from_json(const Json& j) {
  const Field field = field_from_json(member(j, "field"));
  const std::size_t n = as_size(member(j, "n"), "n");
  const Json& vs = member(j, "vectors");
  if (!vs.is_array()) bad("\"vectors\" must be an array");
  std::vector<ExactVector> vectors;
  for (const auto& v : vs) vectors.push_back(vector_from_json(v));
  std::vector<std::string> labels;
  if (j.contains("labels")) {
    if (!j["labels"].is_array()) bad("\"labels\" must be an array");
    for (const auto& l : j["labels"]) {
      if (!l.is_string()) bad("labels must be strings");
      labels.push_back(l.get<std::string>());
    }
  }
  FrameMeta meta;
  if (j.contains("meta")) {
    const Json& m = j["meta"];
    if (m.contains("construction")) meta.construction = m["construction"].get<std::string>();
    if (m.contains("seed")) meta.seed = m["seed"].get<std::uint64_t>();
  }
  return Frame(field, n, std::move(vectors), std::move(labels), std::move(meta));
}

Json to_json(const BlockDesign& d) {
  Json out{{"n", d.points()}, {"blocks", d.blocks()}};
  if (!d.name().empty()) out["meta"] = {{"name", d.name()}};
  return out;
}

BlockDesign design_from_json(const Json& j) {
  const std::size_t n = as_size(member(j, "n"), "n");
  const Json& bs = member(j, "blocks");
  if (!bs.is_array()) bad("\"blocks\" must be an array");
  std::vector<std::vector<int>> blocks;
  for (const auto& b : bs) {
    if (!b.is_array()) bad("each block must be an array of points");
    std::vector<int> block;
    for (const auto& p : b) {
      if (!p.is_number_integer()) bad("block points must be integers");
      block.push_back(p.get<int>());
    }
    blocks.push_back(std::move(block));
  }
  std::string name;
  if (j.contains("meta") && j["meta"].contains("name")) name = j["meta"]["name"].get<std::string>();
  return BlockDesign(n, std::move(blocks), std::move(name));
}

Json to_json(const Povm& p) {
  Json vectors = Json::array();
  for (const auto& v : p.vectors) vectors.push_back(float_vector(v, p.field));
  Json elements = Json::array();
  for (const auto& e : p.elements) {
    Json rows = Json::array();
    for (Eigen::Index r = 0; r < e.rows(); ++r) rows.push_back(float_vector(e.row(r).transpose(), p.field));
    elements.push_back(std::move(rows));
  }
  return Json{{"field", std::string(to_string(p.field))},
              {"n", p.n},
              {"vectors", std::move(vectors)},
              {"elements", std::move(elements)},
              {"labels", p.labels}};
}

Povm povm_from_json(const Json& j) {
  Povm p;
  p.field = field_from_json(member(j, "field"));
  p.n = as_size(member(j, "n"), "n");
  for (const auto& v : member(j, "vectors")) p.vectors.push_back(float_vector_from_json(v));
  for (const auto& e : member(j, "elements")) {
    if (!e.is_array() || e.size() != p.n) bad("element must be an n x n matrix");
    CMatrix m(static_cast<Eigen::Index>(p.n), static_cast<Eigen::Index>(p.n));
    for (std::size_t r = 0; r < p.n; ++r) {
      const CVector row = float_vector_from_json(e[r]);
      if (row.size() != m.cols()) bad("element must be an n x n matrix");
      m.row(static_cast<Eigen::Index>(r)) = row.transpose();
    }
    p.elements.push_back(std::move(m));
  }
  if (j.contains("labels")) p.labels = j["labels"].get<std::vector<std::string>>();
  return p;
}

Json to_json(const PartitionWitness& w) {
  Json normal = Json::array();
  for (const auto& x : w.normal) normal.push_back(format_rational(Rational(x)));
  return Json{{"part1", w.part1}, {"part2", w.part2}, {"rank1", w.rank1}, {"rank2", w.rank2}, {"normal", normal}};
}

PartitionWitness witness_from_json(const Json& j) {
  PartitionWitness w;
  w.part1 = indices_from_json(member(j, "part1"));
  w.part2 = indices_from_json(member(j, "part2"));
  w.rank1 = as_size(member(j, "rank1"), "rank1");
  w.rank2 = as_size(member(j, "rank2"), "rank2");
  for (const auto& x : member(j, "normal")) {
    const Rational r = rational_from_json(x);
    if (r.get_den() != 1) bad("normal entries must be integers");
    w.normal.push_back(r.get_num());
  }
  return w;
}

Json to_json(const CollisionPair& c, Field field) {
  Json out{{"psi", to_json(c.psi, field)},
           {"phi", to_json(c.phi, field)},
           {"alpha", format_rational(c.alpha)},
           {"scope", c.removed ? "minus-j" : "full"}};
  out["removed"] = c.removed ? Json(*c.removed) : Json(nullptr);
  return out;
}

CollisionPair collision_from_json(const Json& j) {
  CollisionPair c;
  c.psi = vector_from_json(member(j, "psi"));
  c.phi = vector_from_json(member(j, "phi"));
  c.alpha = rational_from_json(member(j, "alpha"));
  const Json& scope = member(j, "scope");
  if (scope == "minus-j") {
    c.removed = as_size(member(j, "removed"), "removed");
  } else if (scope != "full") {
    bad("scope must be \"full\" or \"minus-j\"");
  }
  return c;
}

Json to_json(const RemovalCertificate& c, Field field) {
  Json out{{"j", c.j}, {"kind", c.singular() ? "singular" : "pair"}};
  if (const auto* s = std::get_if<SingularKernel>(&c.data)) {
    out["data"] = {{"exact", to_json(s->exact, field)},
                   {"kernel", float_vector(s->kernel, field)},
                   {"residual", s->residual}};
  } else {
    out["data"] = to_json(std::get<CollisionPair>(c.data), field);
  }
  if (c.generator) out["generator"] = {{"matrix", exact_matrix_json(c.generator->a, field)}, {"eigenvalues", c.generator->eigenvalues}};
  return out;
}

RemovalCertificate certificate_from_json(const Json& j) {
  RemovalCertificate c;
  c.j = as_size(member(j, "j"), "j");
  const Json& kind = member(j, "kind");
  const Json& data = member(j, "data");
  if (kind == "singular") {
    SingularKernel s;
    s.exact = vector_from_json(member(data, "exact"));
    s.kernel = float_vector_from_json(member(data, "kernel"));
    s.residual = member(data, "residual").get<double>();
    c.data = std::move(s);
  } else if (kind == "pair") {
    c.data = collision_from_json(data);
  } else {
    bad("certificate kind must be \"singular\" or \"pair\"");
  }
  if (j.contains("generator")) {
    const Json& g = j["generator"];
    c.generator = KernelGenerator{exact_matrix_from_json(member(g, "matrix")),
                                  member(g, "eigenvalues").get<std::vector<double>>()};
  }
  return c;
}

Json to_json(const EquivalenceFingerprint& fp) {
  Json hist = Json::array();
  for (const auto& [size, count] : fp.intersection_histogram) hist.push_back(Json::array({size, count}));
  return Json{{"maxNonSpanningCount", fp.max_nonspanning_count}, {"pairwiseIntersectionSizes", std::move(hist)}};
}

EquivalenceFingerprint fingerprint_from_json(const Json& j) {
  EquivalenceFingerprint fp;
  fp.max_nonspanning_count = as_size(member(j, "maxNonSpanningCount"), "maxNonSpanningCount");
  const Json& hist = member(j, "pairwiseIntersectionSizes");
  if (!hist.is_array()) bad("\"pairwiseIntersectionSizes\" must be an array");
  for (const auto& e : hist) {
    if (!e.is_array() || e.size() != 2) bad("histogram entries are [size, count] pairs");
    fp.intersection_histogram.emplace_back(as_size(e[0], "size"), e[1].get<std::uint64_t>());
  }
  return fp;
}

Json to_json(const NoiseSummary& s) {
  return Json{{"trials", s.trials}, {"noise", s.sigma},  {"seed", s.seed},   {"mean", s.mean},
              {"median", s.median}, {"max", s.max},      {"errors", s.errors}};
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    bad(std::string("malformed JSON: ") + e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::stringstream buffer;
  if (path == "-") {
    buffer << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::InvalidInput, "cannot open " + path);
    buffer << in.rdbuf();
  }
  return parse_json(buffer.str());
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace vitalpovm
