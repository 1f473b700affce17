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

#include "critex/fraclap.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <numbers>
#include <string>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "critex/error.hpp"
#include "critex/fft.hpp"
#include "critex/kernels.hpp"
#include "critex/special_functions.hpp"

namespace critex {
namespace {

using Kronrod = boost::math::quadrature::gauss_kronrod<double, 61>;

constexpr double kTailTolerance = 1e-12;
constexpr double kRuleTolerance = 1e-10;
constexpr int kRuleDepth = 15;
constexpr double kAngleTolerance = 1e-14;
constexpr int kMaxAnglePanels = 1 << 18;
constexpr int kMaxDoublings = 400;

double bracket_pow(double u, double a) { return std::exp(-0.5 * a * std::log1p(u * u)); }

template <typename F>
double integrate(F&& f, double a, double b) {
  if (!(b > a)) return 0.0;
  return Kronrod::integrate(f, a, b, kRuleDepth, kRuleTolerance);
}

// Spherical means of a radial sum g about a point at distance r.
class SphericalMean {
 public:
  SphericalMean(const RadialPolySum& g, int n, double r) : g_(g), n_(n), r_(r) {
    g_r_ = g.value(r);
    if (n_ >= 2) {
      weight_ = std::exp(log_gamma(0.5 * n_) - log_gamma(0.5 * (n_ - 1))) /
                std::sqrt(std::numbers::pi);
    }
  }

  /// Mean of g over the sphere of radius rho about x.
  double mean(double rho) const { return mean_minus(rho, 0.0); }
  /// Mean of g - g(r).
  double difference(double rho) const { return mean_minus(rho, g_r_); }
  double center() const { return g_r_; }

 private:
  double mean_minus(double rho, double offset) const {
    if (r_ == 0.0) return g_.value(rho) - offset;
    if (n_ == 1) return 0.5 * (g_.value(r_ + rho) + g_.value(std::abs(r_ - rho))) - offset;
    if (n_ == 3) return shell_mean(rho) - offset;
    // Smooth, even and 2 pi-periodic in theta: the trapezoid rule converges
    // geometrically. Refine until the change is below the size of g.
    auto integrand = [&](double theta) {
      const double u2 = r_ * r_ + rho * rho + 2.0 * r_ * rho * std::cos(theta);
      const double w = n_ == 2 ? 1.0 : std::pow(std::sin(theta), n_ - 2);
      return (g_.value(std::sqrt(std::max(u2, 0.0))) - offset) * w;
    };
    int panels = 16;
    double h = std::numbers::pi / panels;
    double sum = 0.5 * (integrand(0.0) + integrand(std::numbers::pi));
    for (int i = 1; i < panels; ++i) sum += integrand(i * h);
    double estimate = sum * h;
    const double scale = g_.magnitude(r_) + g_.magnitude(std::abs(r_ - rho));
    while (panels < kMaxAnglePanels) {
      for (int i = 1; i < 2 * panels; i += 2) sum += integrand(i * 0.5 * h);
      panels *= 2;
      h *= 0.5;
      const double refined = sum * h;
      const bool done = std::abs(refined - estimate) <= kAngleTolerance * scale;
      estimate = refined;
      if (done) return weight_ * estimate;
    }
    throw NumericalError("angular mean did not converge");
  }

  // n = 3: mean = (1 / (2 r rho)) int_{|r - rho|}^{r + rho} g(u) u du.
  double shell_mean(double rho) const {
    const double R = g_.scale;
    const double lo = std::abs(r_ - rho) / R;
    const double hi = (r_ + rho) / R;
    double sum = 0.0;
    for (const auto& [c, a] : g_.terms) {
      double delta;
      if (a == 2.0) {
        delta = 0.5 * (std::log1p(hi * hi) - std::log1p(lo * lo));
      } else {
        const double e = 1.0 - 0.5 * a;
        delta = (std::exp(e * std::log1p(hi * hi)) - std::exp(e * std::log1p(lo * lo))) /
                (2.0 - a);
      }
      sum += c * R * R * delta;
    }
    return sum / (2.0 * r_ * rho);
  }

  const RadialPolySum& g_;
  int n_;
  double r_;
  double g_r_ = 0.0;
  double weight_ = 1.0;
};

double tail_bound(const RadialPolySum& g, double r, double b, double s) {
  return g.magnitude(std::max(b - r, 0.0)) * std::pow(b, -2.0 * s) / (2.0 * s);
}

}  // namespace

GridFunction GridFunction::zeros(int dim, int points, double half_width) {
  if (dim < 1 || dim > 3) throw ValidationError("grid dimension must be 1, 2 or 3");
  if (points < 2) throw ValidationError("grid needs at least 2 points per axis");
  if (!(half_width > 0.0)) throw ValidationError("grid half-width must be positive");
  GridFunction f;
  f.dim = dim;
  f.shape.assign(dim, points);
  f.spacing = 2.0 * half_width / points;
  f.half_width = half_width;
  std::size_t total = 1;
  for (int i = 0; i < dim; ++i) total *= points;
  f.values.assign(total, 0.0);
  return f;
}

GridFunction GridFunction::sample(int dim, int points, double half_width,
                                  const std::function<double(std::span<const double>)>& fn) {
  GridFunction f = zeros(dim, points, half_width);
  for (std::size_t i = 0; i < f.values.size(); ++i) {
    const auto x = f.point(i);
    f.values[i] = fn(x);
  }
  return f;
}

std::vector<double> GridFunction::point(std::size_t flat) const {
  std::vector<double> x(dim);
  for (int axis = dim - 1; axis >= 0; --axis) {
    x[axis] = coordinate(static_cast<int>(flat % shape[axis]));
    flat /= shape[axis];
  }
  return x;
}

std::size_t GridFunction::origin_index() const {
  std::size_t flat = 0;
  for (int axis = 0; axis < dim; ++axis) {
    flat = flat * shape[axis] + static_cast<std::size_t>(std::lround(half_width / spacing));
  }
  return flat;
}

double GridFunction::integral() const {
  double sum = 0.0;
  for (double v : values) sum += v;
  return sum * std::pow(spacing, dim);
}

void GridFunction::validate() const {
  if (dim < 1 || dim > 3 || static_cast<int>(shape.size()) != dim) {
    throw ValidationError("grid dimension must be 1, 2 or 3");
  }
  std::size_t total = 1;
  for (int s : shape) total *= s;
  if (total != values.size()) throw ValidationError("grid shape does not match values");
  for (int s : shape) {
    if (std::abs(s * spacing - 2.0 * half_width) > 1e-9 * half_width) {
      throw ValidationError("grid spacing inconsistent with half-width");
    }
  }
  for (double v : values) {
    if (!std::isfinite(v)) throw ValidationError("grid function has non-finite values");
  }
}

double PolyDecayFunction::value(double r) const {
  return bracket_pow(r / scale, q.to_double());
}

double RadialPolySum::value(double r) const {
  const double u = r / scale;
  double sum = 0.0;
  for (const auto& [c, a] : terms) sum += c * bracket_pow(u, a);
  return sum;
}

double RadialPolySum::magnitude(double r) const {
  const double u = r / scale;
  double sum = 0.0;
  for (const auto& [c, a] : terms) sum += std::abs(c) * bracket_pow(u, a);
  return sum;
}

RadialPolySum RadialPolySum::neg_laplacian(int n) const {
  std::map<double, double> merged;
  const double inv = 1.0 / (scale * scale);
  for (const auto& [c, a] : terms) {
    merged[a + 2.0] += -c * a * (a + 2.0 - n) * inv;
    merged[a + 4.0] += c * a * (a + 2.0) * inv;
  }
  RadialPolySum out;
  out.scale = scale;
  for (const auto& [a, c] : merged) {
    if (c != 0.0) out.terms.emplace_back(c, a);
  }
  return out;
}

double DecayExpansion::value(double r, double scale) const { return to_sum(scale).value(r); }

RadialPolySum DecayExpansion::to_sum(double scale) const {
  RadialPolySum out;
  out.scale = scale;
  const double factor = std::pow(scale, -2.0 * power);
  for (int k = 0; k < static_cast<int>(coeffs.size()); ++k) {
    out.terms.emplace_back(coeffs[k].to_double() * factor, exponent(k).to_double());
  }
  return out;
}

GridFunction spectral_apply(const GridFunction& f, double sigma) {
  if (!(sigma >= 0.0)) throw ValidationError("sigma must be non-negative");
  f.validate();
  RealFft fft(f.shape);
  std::vector<std::complex<double>> modes(fft.complex_size());
  fft.forward(f.values, modes);
  std::vector<double> factors = mode_norms_squared(f.shape, f.spacing);
  for (double& v : factors) v = sigma == 0.0 ? 1.0 : std::pow(v, sigma);
  kernels::omp::scale_modes(modes, factors);
  GridFunction out = f;
  fft.inverse(modes, out.values);
  return out;
}

double singular_integral_constant(int n, double s) {
  return 2.0 * s * std::pow(4.0, s) *
         std::exp(log_gamma(0.5 * n + s) - log_gamma(1.0 - s) - log_gamma(0.5 * n));
}

double fractional_apply(const RadialPolySum& g, int n, double s, double r) {
  if (n < 1) throw ValidationError("dimension must be positive");
  if (!(s > 0.0 && s < 1.0)) throw ValidationError("fractional order must lie in (0, 1)");
  if (!(r >= 0.0)) throw ValidationError("radius must be non-negative");
  const double R = g.scale;
  const double r_split = std::max(0.5 * r, R);
  const double delta = 0.01 * std::min(R, r_split);
  const SphericalMean sphere(g, n, r);

  // [0, delta]: two Taylor terms of the spherical mean.
  const RadialPolySum lap1 = g.neg_laplacian(n);
  const double l1 = lap1.value(r);
  const double l2 = lap1.neg_laplacian(n).value(r);
  const double inner = l1 * std::pow(delta, 2.0 - 2.0 * s) / (2.0 * n * (2.0 - 2.0 * s)) -
                       l2 * std::pow(delta, 4.0 - 2.0 * s) /
                           (8.0 * n * (n + 2.0) * (4.0 - 2.0 * s));

  // [delta, r_split] in log(rho).
  const double middle = -integrate(
      [&](double u) {
        const double rho = std::exp(u);
        return sphere.difference(rho) * std::exp(-2.0 * s * u);
      },
      std::log(delta), std::log(r_split));

  // [r_split, inf): constant part exactly, mean part piecewise until the tail
  // bound is negligible.
  const double constant = sphere.center() * std::pow(r_split, -2.0 * s) / (2.0 * s);
  auto weighted_mean = [&](double rho) {
    return sphere.mean(rho) * std::pow(rho, -1.0 - 2.0 * s);
  };
  std::vector<double> cuts = {r_split};
  if (r - 4.0 * R > r_split) cuts.push_back(r - 4.0 * R);
  if (r + 4.0 * R > cuts.back()) cuts.push_back(r + 4.0 * R);
  double far = 0.0;
  double magnitude = std::abs(inner) + std::abs(middle) + std::abs(constant);
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const double piece = integrate(weighted_mean, cuts[i], cuts[i + 1]);
    far += piece;
    magnitude += std::abs(piece);
  }
  double b = cuts.back();
  int doublings = 0;
  while (tail_bound(g, r, b, s) >= kTailTolerance * magnitude) {
    if (++doublings > kMaxDoublings) {
      throw NumericalError("fractional quadrature tail did not reach tolerance");
    }
    const double piece = integrate(weighted_mean, b, 2.0 * b);
    far += piece;
    magnitude += std::abs(piece);
    b *= 2.0;
  }
  const double total = inner + middle + constant - far;
  if (!std::isfinite(total)) throw NumericalError("fractional quadrature produced non-finite value");
  return singular_integral_constant(n, s) * total;
}

DecayExpansion integer_laplacian_coeffs(int n, const Rational& q, int k_power) {
  if (k_power < 0) throw ValidationError("Laplacian power must be non-negative");
  std::map<Rational, Rational> current = {{q, Rational(1)}};
  const Rational dim(n);
  for (int step = 0; step < k_power; ++step) {
    std::map<Rational, Rational> next;
    for (const auto& [a, c] : current) {
      next[a + Rational(2)] += c * (-(a * (a + Rational(2) - dim)));
      next[a + Rational(4)] += c * (a * (a + Rational(2)));
    }
    current = std::move(next);
  }
  DecayExpansion out;
  out.base = q;
  out.power = k_power;
  for (int k = 0; k <= k_power; ++k) {
    auto it = current.find(out.exponent(k));
    out.coeffs.push_back(it == current.end() ? Rational(0) : it->second);
  }
  return out;
}

double singular_quadrature_apply(int n, const PolyDecayFunction& phi, double sigma,
                                 double r) {
  if (!(sigma > 0.0)) throw ValidationError("sigma must be positive");
  if (!(phi.scale > 0.0)) throw ValidationError("scale R must be positive");
  const double whole = std::floor(sigma);
  const double s = sigma - whole;
  const DecayExpansion expansion =
      integer_laplacian_coeffs(n, phi.q, static_cast<int>(whole));
  const RadialPolySum g = expansion.to_sum(phi.scale);
  if (s < 1e-14) return g.value(r);
  return fractional_apply(g, n, s, r);
}

double value_at_origin(int n, double sigma, double q) {
  if (n < 1 || !(sigma > 0.0) || !(q > n)) {
    throw ValidationError("value_at_origin requires n >= 1, sigma > 0 and q > n");
  }
  return std::pow(2.0, 2.0 * sigma) * gamma(sigma + 0.5 * n) * gamma(sigma + 0.5 * q) /
         (gamma(0.5 * n) * gamma(0.5 * q));
}

double decay_exponent(int n, double sigma, double q) {
  const double whole = std::floor(sigma);
  if (sigma - whole < 1e-14) return q + 2.0 * sigma;
  return n + 2.0 * (sigma - whole);
}

DecayFit pointwise_bound_check(int n, double sigma, const Rational& q) {
  if (!(q > Rational(n))) throw ValidationError("pointwise_bound_check requires q > n");
  DecayFit fit;
  fit.q_sigma = decay_exponent(n, sigma, q.to_double());
  const PolyDecayFunction phi{q, 1.0};
  constexpr int kSamples = 9;
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (int i = 0; i < kSamples; ++i) {
    const double r = 10.0 * std::pow(10.0, static_cast<double>(i) / (kSamples - 1));
    const double v = singular_quadrature_apply(n, phi, sigma, r);
    if (v == 0.0 || !std::isfinite(v)) throw NumericalError("degenerate decay sample");
    fit.radii.push_back(r);
    fit.values.push_back(v);
    const double x = 0.5 * std::log1p(r * r);
    const double y = std::log(std::abs(v));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  fit.slope = (kSamples * sxy - sx * sy) / (kSamples * sxx - sx * sx);
  fit.holds = fit.slope <= -fit.q_sigma + 0.15;
  return fit;
}

double fourier_transform_polydecay(int n, double q, double xi_norm) {
  if (n < 1 || !(q > n)) throw ValidationError("Fourier transform requires q > n >= 1");
  if (!(xi_norm > 0.0)) throw ValidationError("|xi| must be positive");
  return std::pow(xi_norm, 0.5 * (q - n)) * std::pow(2.0, 1.0 - 0.5 * q) *
         bessel_k(0.5 * (n - q), xi_norm) / gamma(0.5 * q);
}

double vanishing_theta(int n, double sigma, double q, double eps) {
  if (n < 1 || !(sigma > 0.0) || !(q > n) || !(eps > 0.0)) {
    throw ValidationError("vanishing_theta requires sigma > 0, q > n and eps > 0");
  }
  const double theta = std::exp(log_gamma(sigma + 0.5 * q) + log_gamma(0.5 * (q + eps)) -
                                log_gamma(0.5 * q) - log_gamma(sigma + 0.5 * (q + eps)));
  if (!(theta > 0.0 && theta < 1.0)) throw NumericalError("theta outside (0, 1)");
  return theta;
}

}  // namespace critex
