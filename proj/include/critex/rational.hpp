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

#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace critex {

/// Exact rational number with arbitrary-precision numerator and denominator.
/// Always stored in lowest terms with a positive denominator.
class Rational {
 public:
  using Integer = boost::multiprecision::cpp_int;

  Rational() = default;
  Rational(std::int64_t value);  // NOLINT(google-explicit-constructor)
  Rational(const Integer& numerator, const Integer& denominator);

  /// Parses "p/q", "p" or a terminating decimal such as "-1.25".
  static Rational parse(std::string_view text);

  Integer numerator() const;
  Integer denominator() const;

  bool is_integer() const;
  int sign() const;
  Integer floor() const;
  /// x - floor(x), in [0, 1).
  Rational fractional_part() const;
  double to_double() const;
  /// "p/q", or "p" when the denominator is 1.
  std::string to_string() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& other);
  Rational& operator-=(const Rational& other);
  Rational& operator*=(const Rational& other);
  Rational& operator/=(const Rational& other);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b) {
    if (a.value_ < b.value_) return std::strong_ordering::less;
    if (a.value_ > b.value_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

 private:
  explicit Rational(boost::multiprecision::cpp_rational value)
      : value_(std::move(value)) {}

  boost::multiprecision::cpp_rational value_{0};
};

Rational abs(const Rational& x);
Rational min(const Rational& a, const Rational& b);
Rational max(const Rational& a, const Rational& b);

/// A point of the extended line [-inf, +inf] with exact finite part.
class ExtendedRational {
 public:
  enum class Kind { kNegativeInfinity, kFinite, kPositiveInfinity };

  ExtendedRational() = default;
  ExtendedRational(Rational value);  // NOLINT(google-explicit-constructor)
  ExtendedRational(std::int64_t value) : ExtendedRational(Rational(value)) {}

  static ExtendedRational positive_infinity();
  static ExtendedRational negative_infinity();

  Kind kind() const { return kind_; }
  bool is_finite() const { return kind_ == Kind::kFinite; }
  bool is_positive_infinity() const { return kind_ == Kind::kPositiveInfinity; }
  bool is_negative_infinity() const { return kind_ == Kind::kNegativeInfinity; }

  /// Finite value; throws std::logic_error on an infinite point.
  const Rational& value() const;
  double to_double() const;
  /// "inf", "-inf", or the rational string.
  std::string to_string() const;
  static ExtendedRational parse(std::string_view text);

  friend bool operator==(const ExtendedRational& a, const ExtendedRational& b);
  friend std::strong_ordering operator<=>(const ExtendedRational& a,
                                          const ExtendedRational& b);

 private:
  Kind kind_ = Kind::kFinite;
  Rational value_;
};

}  // namespace critex
