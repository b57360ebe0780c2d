// Copyright 2026 The Quip Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>

namespace quip {

using BigInt = mpz_class;

// Exact rational number. Always canonical: denominator > 0 and
// gcd(|numerator|, denominator) = 1.
class Rational {
 public:
  Rational() = default;
  Rational(int v) : value_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(long v) : value_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(long long v);           // NOLINT(google-explicit-constructor)
  Rational(const BigInt& v) : value_(v) {}  // NOLINT
  Rational(const BigInt& num, const BigInt& den);
  Rational(std::int64_t num, std::int64_t den);

  // Accepts "p", "p/q" and finite decimals such as "-0.125" or "1e-3".
  static Rational parse(std::string_view text);

  // Exact conversion of a finite double (every double is a dyadic rational).
  static Rational from_double(double v);

  BigInt numerator() const { return value_.get_num(); }
  BigInt denominator() const { return value_.get_den(); }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_one() const { return value_ == 1; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  double to_double() const { return value_.get_d(); }

  // Integer value; throws ParameterError if not an integer or out of range.
  std::int64_t to_int64() const;

  // "p" for integers, "p/q" otherwise.
  std::string to_string() const;

  Rational abs() const;
  Rational inverse() const;

  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const {
    Rational r;
    r.value_ = -value_;
    return r;
  }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
           : c > 0 ? std::strong_ordering::greater
                   : std::strong_ordering::equal;
  }

  const mpq_class& raw() const { return value_; }

  std::size_t hash() const;

 private:
  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

BigInt gcd(const BigInt& a, const BigInt& b);
BigInt lcm(const BigInt& a, const BigInt& b);

}  // namespace quip

template <>
struct std::hash<quip::Rational> {
  std::size_t operator()(const quip::Rational& r) const { return r.hash(); }
};
