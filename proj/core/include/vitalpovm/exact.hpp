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

#include <gmpxx.h>

#include <concepts>
#include <string>
#include <string_view>
#include <vector>

namespace vitalpovm {

// Arbitrary-precision rationals. mpq_class keeps values canonical
// (positive denominator, coprime parts) after every arithmetic operation.
using Rational = mpq_class;

/// Parses "p/q" or "p" (optional sign on p). Rejects zero denominators.
Rational parse_rational(std::string_view text);

/// Always emits "p/q" with q > 0 and gcd(|p|, q) = 1, including "0/1".
std::string format_rational(const Rational& value);

// Element of Q(i). A value with zero imaginary part compares equal to the
// corresponding Rational.
class Gaussian {
 public:
  Gaussian() = default;
  Gaussian(Rational re) : re_(std::move(re)) {}  // NOLINT: implicit on purpose
  Gaussian(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}
  template <std::integral I>
  Gaussian(I value) : re_(static_cast<long>(value)) {}  // NOLINT

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_real() const { return sgn(im_) == 0; }
  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }

  Gaussian conj() const { return Gaussian(re_, -im_); }
  /// |z|^2, always rational.
  Rational norm2() const { return Rational(re_ * re_ + im_ * im_); }

  Gaussian& operator+=(const Gaussian& o);
  Gaussian& operator-=(const Gaussian& o);
  Gaussian& operator*=(const Gaussian& o);
  Gaussian& operator/=(const Gaussian& o);

  friend Gaussian operator+(Gaussian a, const Gaussian& b) { return a += b; }
  friend Gaussian operator-(Gaussian a, const Gaussian& b) { return a -= b; }
  friend Gaussian operator*(Gaussian a, const Gaussian& b) { return a *= b; }
  friend Gaussian operator/(Gaussian a, const Gaussian& b) { return a /= b; }
  friend Gaussian operator-(const Gaussian& a) { return Gaussian(-a.re_, -a.im_); }

  friend bool operator==(const Gaussian& a, const Gaussian& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator==(const Gaussian& a, const Rational& b) {
    return a.is_real() && a.re_ == b;
  }

 private:
  Rational re_{0};
  Rational im_{0};
};

std::string to_string(const Gaussian& z);

// Gaussian integer; the integral domain used for fraction-free elimination
// over Q(i).
struct GaussInt {
  mpz_class re{0};
  mpz_class im{0};

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  friend bool operator==(const GaussInt& a, const GaussInt& b) = default;
};

GaussInt operator*(const GaussInt& a, const GaussInt& b);
GaussInt operator-(const GaussInt& a, const GaussInt& b);
GaussInt conj(const GaussInt& a);

inline bool is_zero(const mpz_class& v) { return sgn(v) == 0; }
inline bool is_zero(const GaussInt& v) { return v.is_zero(); }
inline bool is_zero(const Rational& v) { return sgn(v) == 0; }
inline bool is_zero(const Gaussian& v) { return v.is_zero(); }

/// a / b where b is known to divide a exactly.
mpz_class divexact(const mpz_class& a, const mpz_class& b);
GaussInt divexact(const GaussInt& a, const GaussInt& b);

/// Integer content used to keep fraction-free rows primitive.
mpz_class content(const mpz_class& v);
mpz_class content(const GaussInt& v);
void divide_by(mpz_class& v, const mpz_class& d);
void divide_by(GaussInt& v, const mpz_class& d);

/// Scales a rational (resp. Gaussian-rational) row by the positive lcm of
/// its denominators so that every entry becomes integral.
std::vector<mpz_class> integral_row(const std::vector<Rational>& row);
std::vector<GaussInt> integral_row(const std::vector<Gaussian>& row);

inline Rational to_field(const mpz_class& v) { return Rational(v); }
inline Gaussian to_field(const GaussInt& v) { return Gaussian(Rational(v.re), Rational(v.im)); }

inline Rational conj(const Rational& v) { return v; }
inline Gaussian conj(const Gaussian& v) { return v.conj(); }

}  // namespace vitalpovm
