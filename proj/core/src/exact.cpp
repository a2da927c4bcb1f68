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

#include "vitalpovm/exact.hpp"

#include <cctype>

#include "vitalpovm/error.hpp"

namespace vitalpovm {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::NotAFrame: return "NotAFrame";
    case ErrorCode::NonHermitianInput: return "NonHermitianInput";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::DimensionTooSmall: return "DimensionTooSmall";
    case ErrorCode::WrongField: return "WrongField";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::NotUniform: return "NotUniform";
    case ErrorCode::NotBalanced: return "NotBalanced";
    case ErrorCode::NotPointRegular: return "NotPointRegular";
    case ErrorCode::InvalidDesign: return "InvalidDesign";
    case ErrorCode::DegenerateWitness: return "DegenerateWitness";
    case ErrorCode::StillComplete: return "StillComplete";
    case ErrorCode::KernelTooLarge: return "KernelTooLarge";
    case ErrorCode::Undecided: return "Undecided";
    case ErrorCode::NotIC: return "NotIC";
  }
  return "Unknown";
}

namespace {

mpz_class parse_integer(std::string_view text, std::string_view whole) {
  std::size_t i = 0;
  if (!text.empty() && (text[0] == '-' || text[0] == '+')) i = 1;
  if (i == text.size()) throw Error(ErrorCode::ParseError, "bad rational '" + std::string(whole) + "'");
  for (std::size_t k = i; k < text.size(); ++k)
    if (!std::isdigit(static_cast<unsigned char>(text[k])))
      throw Error(ErrorCode::ParseError, "bad rational '" + std::string(whole) + "'");
  std::string digits(text.substr(text[0] == '+' ? 1 : 0));
  return mpz_class(digits, 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text, text));
  mpz_class num = parse_integer(text.substr(0, slash), text);
  std::string_view den_text = text.substr(slash + 1);
  if (!den_text.empty() && (den_text[0] == '-' || den_text[0] == '+'))
    throw Error(ErrorCode::ParseError, "denominator must be unsigned in '" + std::string(text) + "'");
  mpz_class den = parse_integer(den_text, text);
  if (sgn(den) == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + std::string(text) + "'");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string format_rational(const Rational& value) {
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

Gaussian& Gaussian::operator+=(const Gaussian& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

Gaussian& Gaussian::operator-=(const Gaussian& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

Gaussian& Gaussian::operator*=(const Gaussian& o) {
  if (is_real() && o.is_real()) {
    re_ *= o.re_;
    return *this;
  }
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

Gaussian& Gaussian::operator/=(const Gaussian& o) {
  if (o.is_zero()) throw Error(ErrorCode::InvalidInput, "division by zero");
  if (o.is_real()) {
    re_ /= o.re_;
    im_ /= o.re_;
    return *this;
  }
  const Rational d = o.norm2();
  *this *= o.conj();
  re_ /= d;
  im_ /= d;
  return *this;
}

std::string to_string(const Gaussian& z) {
  if (z.is_real()) return z.re().get_str();
  return "(" + z.re().get_str() + (sgn(z.im()) < 0 ? "" : "+") + z.im().get_str() + "i)";
}

GaussInt operator*(const GaussInt& a, const GaussInt& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

GaussInt operator-(const GaussInt& a, const GaussInt& b) { return {a.re - b.re, a.im - b.im}; }

GaussInt conj(const GaussInt& a) { return {a.re, -a.im}; }

mpz_class divexact(const mpz_class& a, const mpz_class& b) {
  mpz_class q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

GaussInt divexact(const GaussInt& a, const GaussInt& b) {
  const mpz_class n = b.re * b.re + b.im * b.im;
  const GaussInt p = a * conj(b);
  return {divexact(p.re, n), divexact(p.im, n)};
}

mpz_class content(const mpz_class& v) { return abs(v); }

mpz_class content(const GaussInt& v) {
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), v.re.get_mpz_t(), v.im.get_mpz_t());
  return g;
}

void divide_by(mpz_class& v, const mpz_class& d) { mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), d.get_mpz_t()); }

void divide_by(GaussInt& v, const mpz_class& d) {
  divide_by(v.re, d);
  divide_by(v.im, d);
}

namespace {

mpz_class lcm_of_denominators(const std::vector<Rational>& row) {
  mpz_class l = 1;
  for (const auto& q : row) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
  return l;
}

}  // namespace

std::vector<mpz_class> integral_row(const std::vector<Rational>& row) {
  const mpz_class l = lcm_of_denominators(row);
  std::vector<mpz_class> out;
  out.reserve(row.size());
  for (const auto& q : row) out.push_back(q.get_num() * divexact(l, q.get_den()));
  return out;
}

std::vector<GaussInt> integral_row(const std::vector<Gaussian>& row) {
  mpz_class l = 1;
  for (const auto& z : row) {
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), z.re().get_den_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), z.im().get_den_mpz_t());
  }
  std::vector<GaussInt> out;
  out.reserve(row.size());
  for (const auto& z : row)
    out.push_back({z.re().get_num() * divexact(l, z.re().get_den()), z.im().get_num() * divexact(l, z.im().get_den())});
  return out;
}

}  // namespace vitalpovm
