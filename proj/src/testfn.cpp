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

#include "critex/testfn.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include <boost/math/quadrature/tanh_sinh.hpp>

#include "critex/error.hpp"

namespace critex {
namespace {

// Truncated Taylor series: c[k] = f^{(k)}(t0) / k!.
class Jet {
 public:
  explicit Jet(int order, double value = 0.0) : c_(order + 1, 0.0) { c_[0] = value; }
  static Jet variable(int order, double t0) {
    Jet j(order, t0);
    if (order >= 1) j.c_[1] = 1.0;
    return j;
  }

  int order() const { return static_cast<int>(c_.size()) - 1; }
  double operator[](int k) const { return c_[k]; }

  Jet operator+(const Jet& o) const {
    Jet r = *this;
    for (int k = 0; k <= order(); ++k) r.c_[k] += o.c_[k];
    return r;
  }
  Jet operator-(const Jet& o) const {
    Jet r = *this;
    for (int k = 0; k <= order(); ++k) r.c_[k] -= o.c_[k];
    return r;
  }
  Jet operator*(double s) const {
    Jet r = *this;
    for (double& v : r.c_) v *= s;
    return r;
  }
  Jet shifted(double s) const {
    Jet r = *this;
    r.c_[0] += s;
    return r;
  }

  Jet reciprocal() const {
    Jet r(order());
    r.c_[0] = 1.0 / c_[0];
    for (int k = 1; k <= order(); ++k) {
      double acc = 0.0;
      for (int i = 1; i <= k; ++i) acc += c_[i] * r.c_[k - i];
      r.c_[k] = -acc / c_[0];
    }
    return r;
  }

  Jet exp() const {
    Jet r(order());
    r.c_[0] = std::exp(c_[0]);
    for (int k = 1; k <= order(); ++k) {
      double acc = 0.0;
      for (int i = 1; i <= k; ++i) acc += i * c_[i] * r.c_[k - i];
      r.c_[k] = acc / k;
    }
    return r;
  }

  Jet log() const {
    Jet r(order());
    r.c_[0] = std::log(c_[0]);
    for (int k = 1; k <= order(); ++k) {
      double acc = 0.0;
      for (int i = 1; i < k; ++i) acc += i * r.c_[i] * c_[k - i];
      r.c_[k] = (c_[k] - acc / k) / c_[0];
    }
    return r;
  }

 private:
  std::vector<double> c_;
};

// log chi on (1/2, 1): a - log(e^a + e^b), a = -1/(1-t), b = -1/(t-1/2).
Jet log_chi(int order, double t) {
  const Jet x = Jet::variable(order, t);
  const Jet a = ((x * -1.0).shifted(1.0)).reciprocal() * -1.0;
  const Jet b = (x.shifted(-0.5)).reciprocal() * -1.0;
  const double top = std::max(a[0], b[0]);
  const Jet sum = (a.shifted(-top)).exp() + (b.shifted(-top)).exp();
  return a - sum.log().shifted(top);
}

double factorial(int k) {
  double f = 1.0;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

}  // namespace

void TestFunctionFamily::validate() const {
  if (m < 1) throw ValidationError("test function order m must be positive");
  if (!(p > 1.0)) throw ValidationError("p must exceed 1");
  if (eta.sign() < 0) throw ValidationError("eta must be non-negative");
  if (!(R >= 1.0)) throw ValidationError("R must be at least 1");
}

double chi(double t) {
  if (t <= 0.5) return 1.0;
  if (t >= 1.0) return 0.0;
  return std::exp(log_chi(0, t)[0]);
}

double chi_reversed(double t) {
  if (t <= 0.5) return 0.0;
  if (t >= 1.0) return 1.0;
  const double a = -1.0 / (1.0 - t);
  const double b = -1.0 / (t - 0.5);
  return 1.0 / (1.0 + std::exp(a - b));
}

std::vector<double> chi_power_derivatives(double power, int order, double t) {
  std::vector<double> out(order + 1, 0.0);
  if (t >= 1.0) return out;
  if (t <= 0.5) {
    out[0] = 1.0;
    return out;
  }
  const Jet value = (log_chi(order, t) * power).exp();
  for (int k = 0; k <= order; ++k) out[k] = value[k] * factorial(k);
  return out;
}

double psi_derivative(const TestFunctionFamily& fam, int order, double t) {
  fam.validate();
  if (std::abs(order) > fam.m) {
    throw ValidationError("derivative order " + std::to_string(order) + " outside [-m, m]");
  }
  const double power = fam.m * fam.p_prime();
  if (order >= 0) return chi_power_derivatives(power, order, t)[order];
  if (t >= 1.0) return 0.0;
  // Cauchy's formula for the k-fold primitive vanishing at 1.
  const int k = -order;
  const double sign = k % 2 == 0 ? 1.0 : -1.0;
  const double norm = factorial(k - 1);
  double total = 0.0;
  if (t < 0.5) total += std::pow(0.5 - t, k) / (k * norm);
  // Integrate on [0, 1] in u, tau = lo + u (1 - lo), so abscissae near the
  // lower end stay distinct from it.
  const double lo = std::max(t, 0.5);
  const double width = 1.0 - lo;
  auto kernel = [&](double u) {
    const double tau = lo + u * width;
    return width * std::pow(tau - t, k - 1) / norm * chi_power_derivatives(power, 0, tau)[0];
  };
  thread_local boost::math::quadrature::tanh_sinh<double> rule;
  if (width > 0.0) total += rule.integrate(kernel, 0.0, 1.0, 1e-13);
  return sign * total;
}

double scaled_psi(const TestFunctionFamily& fam, int order, double t) {
  const double eta = fam.eta.to_double();
  const double shrink = std::pow(fam.R, -eta);
  return std::pow(fam.R, -order * eta) * psi_derivative(fam, order, shrink * t);
}

AaaBound check_aaa_bound(const TestFunctionFamily& fam, int order, int samples) {
  fam.validate();
  if (samples < 2) throw ValidationError("need at least 2 samples");
  AaaBound bound;
  for (int i = 0; i < samples; ++i) {
    const double t = static_cast<double>(i) / samples;
    const double psi = psi_derivative(fam, 0, t);
    if (!(psi > std::numeric_limits<double>::min())) continue;
    const double ratio = std::abs(psi_derivative(fam, order, t)) / std::pow(psi, 1.0 / fam.p);
    bound.c_est = std::max(bound.c_est, ratio);
  }
  bound.holds = std::isfinite(bound.c_est);
  return bound;
}

double phi_scaled(const Rational& q, double R, std::span<const double> x) {
  if (!(R > 0.0)) throw ValidationError("R must be positive");
  double r2 = 0.0;
  for (double xi : x) r2 += (xi / R) * (xi / R);
  return std::exp(-0.5 * q.to_double() * std::log1p(r2));
}

Rational holder_exponent(const OperatorSpec& spec, int j, const Rational& eta,
                         const Rational& p) {
  if (p <= Rational(1)) throw ValidationError("p must exceed 1");
  const OperatorTerm* term = spec.term(j);
  const Rational omega = term ? term->omega : Rational(0);
  const Rational inv_p_prime = (p - Rational(1)) / p;
  return -(Rational(j - spec.ell()) * eta) - omega +
         (Rational(spec.dimension()) + eta) * inv_p_prime;
}

std::string psi_table_csv(const TestFunctionFamily& fam, int samples) {
  fam.validate();
  if (samples < 2) throw ValidationError("need at least 2 samples");
  std::ostringstream out;
  out.precision(17);
  out << "t";
  for (int k = -fam.m; k <= fam.m; ++k) out << ",psi" << k;
  out << '\n';
  for (int i = 0; i <= samples; ++i) {
    const double t = 1.25 * i / samples;
    out << t;
    for (int k = -fam.m; k <= fam.m; ++k) out << ',' << psi_derivative(fam, k, t);
    out << '\n';
  }
  return out.str();
}

}  // namespace critex
