// Copyright 2026 The critex Authors
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

#include "critex/rational.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <stdexcept>

#include "critex/error.hpp"

namespace critex {
namespace mp = boost::multiprecision;

namespace {

Rational::Integer parse_integer(std::string_view digits, std::string_view whole) {
  std::size_t start = 0;
  if (!digits.empty() && (digits[0] == '-' || digits[0] == '+')) start = 1;
  if (start == digits.size()) {
    throw ValidationError("malformed rational: \"" + std::string(whole) + "\"");
  }
  for (std::size_t i = start; i < digits.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(digits[i]))) {
      throw ValidationError("malformed rational: \"" + std::string(whole) + "\"");
    }
  }
  // cpp_int reads a leading zero as octal.
  const auto body = digits.substr(start);
  const auto nonzero = std::min(body.find_first_not_of('0'), body.size() - 1);
  Rational::Integer value(std::string(body.substr(nonzero)));
  return digits[0] == '-' ? Rational::Integer(-value) : value;
}

}  // namespace

Rational::Rational(std::int64_t value) : value_(value) {}

Rational::Rational(const Integer& numerator, const Integer& denominator) {
  if (denominator == 0) throw ValidationError("rational with zero denominator");
  value_ = mp::cpp_rational(numerator, denominator);
}

Rational Rational::parse(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
    text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
    text.remove_suffix(1);
  if (text.empty()) throw ValidationError("malformed rational: empty string");
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    const auto dot = text.find('.');
    if (dot == std::string_view::npos) return Rational(parse_integer(text, text), Integer(1));
    // Terminating decimal, read exactly.
    const auto frac = text.substr(dot + 1);
    if (frac.empty() || frac[0] == '-' || frac[0] == '+') {
      throw ValidationError("malformed rational: \"" + std::string(text) + "\"");
    }
    std::string digits(text.substr(0, dot));
    digits += frac;
    Integer den(1);
    for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
    return Rational(parse_integer(digits, text), den);
  }
  const auto den_text = text.substr(slash + 1);
  if (!den_text.empty() && (den_text[0] == '-' || den_text[0] == '+')) {
    throw ValidationError("malformed rational: \"" + std::string(text) + "\"");
  }
  const Integer num = parse_integer(text.substr(0, slash), text);
  const Integer den = parse_integer(den_text, text);
  if (den == 0) {
    throw ValidationError("malformed rational: zero denominator in \"" +
                          std::string(text) + "\"");
  }
  return Rational(num, den);
}

Rational::Integer Rational::numerator() const { return mp::numerator(value_); }
Rational::Integer Rational::denominator() const { return mp::denominator(value_); }

bool Rational::is_integer() const { return mp::denominator(value_) == 1; }

int Rational::sign() const { return value_.sign(); }

Rational::Integer Rational::floor() const {
  const Integer num = mp::numerator(value_);
  const Integer den = mp::denominator(value_);
  Integer q = num / den;  // truncates toward zero
  if (num < 0 && q * den != num) q -= 1;
  return q;
}

Rational Rational::fractional_part() const {
  return *this - Rational(floor(), Integer(1));
}

double Rational::to_double() const { return value_.convert_to<double>(); }

std::string Rational::to_string() const {
  if (is_integer()) return mp::numerator(value_).str();
  return mp::numerator(value_).str() + "/" + mp::denominator(value_).str();
}

Rational Rational::operator-() const { return Rational(mp::cpp_rational(-value_)); }
Rational& Rational::operator+=(const Rational& other) {
  value_ += other.value_;
  return *this;
}
Rational& Rational::operator-=(const Rational& other) {
  value_ -= other.value_;
  return *this;
}
Rational& Rational::operator*=(const Rational& other) {
  value_ *= other.value_;
  return *this;
}
Rational& Rational::operator/=(const Rational& other) {
  if (other.value_ == 0) throw std::domain_error("rational division by zero");
  value_ /= other.value_;
  return *this;
}

Rational abs(const Rational& x) { return x.sign() < 0 ? -x : x; }
Rational min(const Rational& a, const Rational& b) { return b < a ? b : a; }
Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

ExtendedRational::ExtendedRational(Rational value)
    : kind_(Kind::kFinite), value_(std::move(value)) {}

ExtendedRational ExtendedRational::positive_infinity() {
  ExtendedRational x;
  x.kind_ = Kind::kPositiveInfinity;
  return x;
}

ExtendedRational ExtendedRational::negative_infinity() {
  ExtendedRational x;
  x.kind_ = Kind::kNegativeInfinity;
  return x;
}

const Rational& ExtendedRational::value() const {
  if (!is_finite()) throw std::logic_error("value() of an infinite point");
  return value_;
}

double ExtendedRational::to_double() const {
  switch (kind_) {
    case Kind::kNegativeInfinity:
      return -std::numeric_limits<double>::infinity();
    case Kind::kPositiveInfinity:
      return std::numeric_limits<double>::infinity();
    case Kind::kFinite:
      break;
  }
  return value_.to_double();
}

std::string ExtendedRational::to_string() const {
  switch (kind_) {
    case Kind::kNegativeInfinity:
      return "-inf";
    case Kind::kPositiveInfinity:
      return "inf";
    case Kind::kFinite:
      break;
  }
  return value_.to_string();
}

ExtendedRational ExtendedRational::parse(std::string_view text) {
  if (text == "inf" || text == "+inf") return positive_infinity();
  if (text == "-inf") return negative_infinity();
  return ExtendedRational(Rational::parse(text));
}

bool operator==(const ExtendedRational& a, const ExtendedRational& b) {
  return a.kind_ == b.kind_ && (!a.is_finite() || a.value_ == b.value_);
}

std::strong_ordering operator<=>(const ExtendedRational& a,
                                 const ExtendedRational& b) {
  if (a.kind_ != b.kind_) {
    return static_cast<int>(a.kind_) <=> static_cast<int>(b.kind_);
  }
  if (!a.is_finite()) return std::strong_ordering::equal;
  return a.value_ <=> b.value_;
}

}  // namespace critex
