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

#include "quip/algebra/rational.hpp"

#include <cmath>
#include <limits>
#include <ostream>

#include "quip/common/errors.hpp"

namespace quip {
namespace {

BigInt big_from_int64(std::int64_t v) {
  BigInt r;
  // mpz_class has no portable long long constructor.
  const bool negative = v < 0;
  const unsigned long long mag =
      negative ? 0ULL - static_cast<unsigned long long>(v)
               : static_cast<unsigned long long>(v);
  mpz_import(r.get_mpz_t(), 1, 1, sizeof(mag), 0, 0, &mag);
  if (negative) r = -r;
  return r;
}

bool parse_integer(std::string_view text, BigInt& out) {
  if (text.empty()) return false;
  std::size_t i = 0;
  if (text[0] == '+' || text[0] == '-') i = 1;
  if (i == text.size()) return false;
  for (std::size_t j = i; j < text.size(); ++j) {
    if (text[j] < '0' || text[j] > '9') return false;
  }
  std::string digits(text.substr(i));
  out.set_str(digits, 10);
  if (text[0] == '-') out = -out;
  return true;
}

}  // namespace

Rational::Rational(long long v) : value_(big_from_int64(v)) {}

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw ParameterError("rational with zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational::Rational(std::int64_t num, std::int64_t den)
    : Rational(big_from_int64(num), big_from_int64(den)) {}

Rational Rational::parse(std::string_view text) {
  if (text.empty()) throw ParseError("empty number");
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    BigInt num, den;
    if (!parse_integer(text.substr(0, slash), num) ||
        !parse_integer(text.substr(slash + 1), den) ||
        text[slash + 1] == '-' || text[slash + 1] == '+') {
      throw ParseError("malformed rational '" + std::string(text) + "'");
    }
    if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    return Rational(num, den);
  }
  BigInt whole;
  if (parse_integer(text, whole)) return Rational(whole);

  // Decimal with optional exponent, converted exactly.
  std::size_t i = 0;
  bool negative = false;
  if (text[i] == '+' || text[i] == '-') negative = text[i++] == '-';
  std::string mantissa;
  long exponent = 0;
  bool seen_digit = false, seen_point = false;
  for (; i < text.size(); ++i) {
    const char c = text[i];
    if (c >= '0' && c <= '9') {
      mantissa.push_back(c);
      seen_digit = true;
      if (seen_point) --exponent;
    } else if (c == '.' && !seen_point) {
      seen_point = true;
    } else {
      break;
    }
  }
  if (!seen_digit) throw ParseError("malformed number '" + std::string(text) + "'");
  if (i < text.size()) {
    if (text[i] != 'e' && text[i] != 'E') {
      throw ParseError("malformed number '" + std::string(text) + "'");
    }
    BigInt e;
    if (!parse_integer(text.substr(i + 1), e) || !e.fits_slong_p()) {
      throw ParseError("malformed exponent in '" + std::string(text) + "'");
    }
    exponent += e.get_si();
  }
  if (exponent > 4096 || exponent < -4096) {
    throw ParseError("exponent out of range in '" + std::string(text) + "'");
  }
  BigInt m(mantissa, 10);
  if (negative) m = -m;
  BigInt scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
  return exponent >= 0 ? Rational(m * scale) : Rational(m, scale);
}

Rational Rational::from_double(double v) {
  if (!std::isfinite(v)) throw ParameterError("non-finite double");
  Rational r;
  r.value_ = mpq_class(v);
  return r;
}

std::int64_t Rational::to_int64() const {
  if (!is_integer()) throw ParameterError("rational " + to_string() + " is not an integer");
  const BigInt& n = value_.get_num();
  if (n > BigInt(std::to_string(std::numeric_limits<std::int64_t>::max())) ||
      n < BigInt(std::to_string(std::numeric_limits<std::int64_t>::min()))) {
    throw ParameterError("integer " + to_string() + " exceeds 64 bits");
  }
  return std::stoll(n.get_str());
}

std::string Rational::to_string() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational Rational::abs() const {
  Rational r;
  r.value_ = ::abs(value_);
  return r;
}

Rational Rational::inverse() const {
  if (is_zero()) throw ParameterError("inverse of zero");
  Rational r;
  r.value_ = 1 / value_;
  return r;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw ParameterError("division by zero");
  value_ /= o.value_;
  return *this;
}

std::size_t Rational::hash() const {
  const std::size_t h1 = std::hash<std::string>{}(value_.get_num().get_str(16));
  const std::size_t h2 = std::hash<std::string>{}(value_.get_den().get_str(16));
  return h1 ^ (h2 + 0x9e3779b97f4a7c15ULL + (h1 << 6) + (h1 >> 2));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.to_string();
}

BigInt gcd(const BigInt& a, const BigInt& b) {
  BigInt r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

BigInt lcm(const BigInt& a, const BigInt& b) {
  BigInt r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

}  // namespace quip
