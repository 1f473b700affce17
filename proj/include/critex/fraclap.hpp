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

#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "critex/rational.hpp"

namespace critex {

/// Uniform periodic samples on [-L, L)^dim, N points per axis, row-major.
struct GridFunction {
  int dim = 1;
  std::vector<int> shape;
  double spacing = 0.0;
  double half_width = 0.0;
  std::vector<double> values;

  static GridFunction sample(int dim, int points, double half_width,
                             const std::function<double(std::span<const double>)>& f);
  static GridFunction zeros(int dim, int points, double half_width);

  std::size_t size() const { return values.size(); }
  double coordinate(int index) const { return -half_width + index * spacing; }
  /// Coordinates of the flat index.
  std::vector<double> point(std::size_t flat) const;
  /// Flat index nearest the origin.
  std::size_t origin_index() const;
  /// Trapezoid (periodic) integral of the samples.
  double integral() const;
  void validate() const;
};

/// <x/R>^{-q}.
struct PolyDecayFunction {
  Rational q;
  double scale = 1.0;

  double value(double r) const;
};

/// sum_i c_i <x/R>^{-a_i}.
struct RadialPolySum {
  double scale = 1.0;
  std::vector<std::pair<double, double>> terms;  // (c_i, a_i)

  double value(double r) const;
  /// sum_i |c_i| <r/R>^{-a_i}.
  double magnitude(double r) const;
  /// Exact (-Delta) of the sum in R^n.
  RadialPolySum neg_laplacian(int n) const;
};

/// (-Delta)^power <x>^{-base} = sum_k coeffs[k] <x>^{-(base + 2 power + 2k)}.
struct DecayExpansion {
  Rational base;
  int power = 0;
  std::vector<Rational> coeffs;

  Rational exponent(int k) const { return base + Rational(2 * power + 2 * k); }
  double value(double r, double scale = 1.0) const;
  /// As a sum in <x/R>, including the R^{-2 power} factor.
  RadialPolySum to_sum(double scale = 1.0) const;
};

/// Multiply by |xi|^{2 sigma} in Fourier space; the zero mode maps to 0.
GridFunction spectral_apply(const GridFunction& f, double sigma);

/// (-Delta)^s g(x) at |x| = r for radial g, 0 < s < 1, by the split-radius
/// singular integral.
double fractional_apply(const RadialPolySum& g, int n, double s, double r);

/// (-Delta)^sigma phi at |x| = r for any sigma > 0: exact for integer sigma,
/// otherwise the fractional part applied to the integer-power expansion.
double singular_quadrature_apply(int n, const PolyDecayFunction& phi, double sigma,
                                 double r);

/// 2^{2 sigma} Gamma(sigma + n/2) Gamma(sigma + q/2) / (Gamma(n/2) Gamma(q/2)).
double value_at_origin(int n, double sigma, double q);

/// Normalizing constant of the radial singular integral,
/// 2 s 4^s Gamma(n/2 + s) / (Gamma(1 - s) Gamma(n/2)).
double singular_integral_constant(int n, double s);

DecayExpansion integer_laplacian_coeffs(int n, const Rational& q, int k_power);

struct DecayFit {
  double slope = 0.0;
  double q_sigma = 0.0;
  bool holds = false;
  std::vector<double> radii;
  std::vector<double> values;
};

/// Least-squares slope of log|(-Delta)^sigma <x>^{-q}| against log <x> on
/// nine log-spaced radii in [10, 100]. holds iff slope <= -q_sigma + 0.15.
DecayFit pointwise_bound_check(int n, double sigma, const Rational& q);

/// Decay exponent q + 2 sigma (integer sigma) or n + 2 (sigma - [sigma]).
double decay_exponent(int n, double sigma, double q);

/// Closed-form (2 pi)^{-n/2} int e^{-i x.xi} <x>^{-q} dx via K_nu.
double fourier_transform_polydecay(int n, double q, double xi_norm);

/// theta in (0, 1) with (-Delta)^sigma(<x>^{-q} - theta <x>^{-q-eps})(0) = 0.
double vanishing_theta(int n, double sigma, double q, double eps);

}  // namespace critex
