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

#include "critex/special_functions.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "critex/error.hpp"

namespace critex {
namespace {

constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,     676.5203681218851,      -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,    12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6,  1.5056327351493116e-7};

double lanczos_sum(double z) {
  double sum = kLanczos[0];
  for (int i = 1; i < static_cast<int>(kLanczos.size()); ++i) sum += kLanczos[i] / (z + i);
  return sum;
}

void require_positive(double x, const char* what) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw ValidationError(std::string(what) + " requires a positive finite argument, got " +
                          std::to_string(x));
  }
}

// log of cosh(a) for a >= 0 without overflow.
double log_cosh(double a) {
  return a + std::log1p(std::exp(-2.0 * a)) - std::numbers::ln2;
}

}  // namespace

double gamma(double x) {
  require_positive(x, "gamma");
  if (x < 0.5) return gamma(x + 1.0) / x;
  const double z = x - 1.0;
  const double t = z + kLanczosG + 0.5;
  // Split the power so t^(z+1/2) e^-t does not overflow early.
  const double half = std::pow(t, 0.5 * (z + 0.5));
  return std::sqrt(2.0 * std::numbers::pi) * half * (half * std::exp(-t)) * lanczos_sum(z);
}

double log_gamma(double x) {
  require_positive(x, "log_gamma");
  if (x < 0.5) return log_gamma(x + 1.0) - std::log(x);
  const double z = x - 1.0;
  const double t = z + kLanczosG + 0.5;
  return 0.5 * std::log(2.0 * std::numbers::pi) + (z + 0.5) * std::log(t) - t +
         std::log(lanczos_sum(z));
}

double bessel_k_scaled(double nu, double x) {
  require_positive(x, "bessel_k");
  nu = std::abs(nu);
  auto log_integrand = [&](double t) { return -x * (std::cosh(t) - 1.0) + log_cosh(nu * t); };
  const double peak = std::asinh(nu / x);
  const double top = log_integrand(peak);
  // Truncate where the integrand has dropped by e^-37 (about 1e-16).
  double upper = peak + 1.0;
  while (log_integrand(upper) > top - 37.0) upper *= 1.5;
  double lower = peak;
  for (int i = 0; i < 60; ++i) {
    const double mid = 0.5 * (lower + upper);
    (log_integrand(mid) > top - 37.0 ? lower : upper) = mid;
  }
  auto integrand = [&](double t) { return std::exp(log_integrand(t) - top); };

  // Trapezoid rule; spectrally accurate for this smooth even integrand.
  int panels = 32;
  double h = upper / panels;
  double sum = 0.5 * (integrand(0.0) + integrand(upper));
  for (int i = 1; i < panels; ++i) sum += integrand(i * h);
  double estimate = sum * h;
  while (panels < (1 << 20)) {
    for (int i = 1; i < 2 * panels; i += 2) sum += integrand(i * 0.5 * h);
    panels *= 2;
    h *= 0.5;
    const double refined = sum * h;
    const bool converged = std::abs(refined - estimate) <= 1e-14 * std::abs(refined);
    estimate = refined;
    if (converged && panels >= 64) return estimate * std::exp(top);
  }
  throw NumericalError("bessel_k trapezoid rule did not converge");
}

double bessel_k(double nu, double x) { return bessel_k_scaled(nu, x) * std::exp(-x); }

}  // namespace critex
