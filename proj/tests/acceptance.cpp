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

// Acceptance suite: one PASS/FAIL line per criterion.
//
//   critex_acceptance [--expect-red k[,k...]]
//
// Exit status is 0 when every failing criterion is listed in --expect-red.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/ooura_fourier_integrals.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include "critex/exponent_engine.hpp"
#include "critex/fraclap.hpp"
#include "critex/testfn.hpp"
#include "critex/weak_sim.hpp"

using namespace critex;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(const char* format, double a, double b = 0.0, double c = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, format, a, b, c);
  return buf;
}

OperatorSpec op(int n, int m, int ell, std::vector<OperatorTerm> terms) {
  return OperatorSpec::create(n, m, ell, std::move(terms));
}

OperatorTerm term(int j, Rational a, Rational omega) { return {j, a, omega}; }

// Random rational strictly inside (lo, hi) with a small denominator.
class Draw {
 public:
  explicit Draw(unsigned seed) : rng_(seed) {}

  Rational in(const Rational& lo, const Rational& hi) {
    std::uniform_int_distribution<int> den(1, 7);
    for (int widen = 1;; ++widen) {
      const int q = den(rng_) * widen;
      const Rational scaled_lo = lo * Rational(q), scaled_hi = hi * Rational(q);
      const long first = static_cast<long>(scaled_lo.floor()) + 1;
      const long last = static_cast<long>((scaled_hi - Rational(1, 1000000)).floor());
      if (first > last) continue;
      std::uniform_int_distribution<long> num(first, last);
      const Rational x(num(rng_), q);
      if (x > lo && x < hi) return x;
    }
  }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  Rational positive() { return in(Rational(0), Rational(5)); }

 private:
  std::mt19937 rng_;
};

// Closed forms for the example families.
Outcome criterion1() {
  const auto t0 = Clock::now();
  Draw d(2024);
  int draws = 0, mismatches = 0;
  std::string first_bad;
  auto check = [&](const OperatorSpec& spec, const Rational& expected, const char* tag) {
    ++draws;
    const auto r = critical_exponent(spec);
    if (!(r.p_c == ExtendedRational(expected))) {
      if (mismatches++ == 0) first_bad = std::string(tag) + " got " + r.p_c.to_string() +
                                         " want " + expected.to_string();
    }
  };
  const Rational one(1), two(2);
  for (int i = 0; i < 40; ++i) {
    const int n = d.integer(1, 4);
    const Rational s = d.in(Rational(0), Rational(4));
    check(op(n, 1, 0, {term(0, d.positive(), two * s)}), one + two * s / Rational(n), "heat");
  }
  for (int i = 0; i < 40; ++i) {
    const int n = d.integer(1, 4);
    const Rational s = d.in(Rational(0), Rational(n));
    check(op(n, 2, 0, {term(0, d.positive(), two * s)}), one + two * s / (Rational(n) - s),
          "wave");
  }
  for (int i = 0; i < 40; ++i) {
    const int n = d.integer(1, 4);
    const int kind = i % 3;
    if (kind == 0) {  // classical damping
      const Rational s = d.in(Rational(0), Rational(4));
      check(op(n, 2, 0, {term(0, d.positive(), two * s), term(1, d.positive(), Rational(0))}),
            one + two * s / Rational(n), "damped classical");
    } else if (kind == 1) {  // effective: 2 s1 < s, 2 s1 < n
      const Rational s = d.in(Rational(0), Rational(4));
      const Rational s1 = d.in(Rational(0), min(s, Rational(n)) / two);
      check(op(n, 2, 0, {term(0, d.positive(), two * s), term(1, d.positive(), two * s1)}),
            one + two * s / (Rational(n) - two * s1), "damped effective");
    } else {  // noneffective: 2 s1 > s, s < n
      const Rational s = d.in(Rational(0), Rational(n));
      const Rational s1 = d.in(s / two, Rational(5));
      check(op(n, 2, 0, {term(0, d.positive(), two * s), term(1, d.positive(), two * s1)}),
            one + two * s / (Rational(n) - s), "damped noneffective");
    }
  }
  for (int i = 0; i < 40; ++i) {
    const int n = d.integer(1, 4);
    const Rational s = d.in(Rational(0), Rational(4));
    if (i % 2 == 0) {
      const Rational s1 = d.in(Rational(0), s / two);
      check(op(n, 2, 1, {term(0, d.positive(), two * s), term(1, d.positive(), two * s1)}),
            one + two * s1 / Rational(n), "u_t effective");
    } else {
      const Rational s1 = d.in(s / two, Rational(5));
      check(op(n, 2, 1, {term(0, d.positive(), two * s), term(1, d.positive(), two * s1)}),
            one + s / Rational(n), "u_t noneffective");
    }
  }
  for (int i = 0; i < 40; ++i) {
    const int n = d.integer(1, 4);
    const int m = d.integer(1, 4);
    const int ell = d.integer(0, m - 1);
    // 2 sigma < n + 2 theta with sigma = (m - ell) theta.
    const Rational theta =
        m - ell == 1 ? d.in(Rational(0), Rational(3))
                     : d.in(Rational(0), Rational(n) / Rational(2 * (m - ell - 1)));
    std::vector<OperatorTerm> terms = {term(ell, d.positive(), Rational(2 * (m - ell)) * theta)};
    for (int j = ell + 1; j < m; ++j) {
      if (d.integer(0, 1)) terms.push_back(term(j, d.positive(), Rational(2 * (m - j)) * theta));
    }
    const Rational sigma = Rational(m - ell) * theta;
    check(op(n, m, ell, terms), one + two * sigma / (Rational(n) + two * theta - two * sigma),
          "quasi-homogeneous");
  }
  const double elapsed = seconds_since(t0);
  Outcome o;
  o.pass = mismatches == 0 && draws == 200 && elapsed < 5.0;
  o.detail = std::to_string(draws) + " draws, " + std::to_string(mismatches) + " mismatches, " +
             fmt("%.2f s", elapsed) + (first_bad.empty() ? "" : "; first: " + first_bad);
  return o;
}

// Infinite and trivial exponents.
Outcome criterion2() {
  struct Case {
    const char* name;
    OperatorSpec spec;
    bool infinite;
  };
  const Rational z(0), one(1);
  std::vector<Case> cases = {
      {"lowest j = ell + 2", op(1, 3, 0, {term(2, one, one)}), true},
      {"lowest j = ell + 3", op(2, 4, 1, {term(3, one, Rational(1, 2))}), true},
      {"lowest j = ell + 1", op(1, 2, 0, {term(1, one, Rational(1, 2))}), true},
      {"lowest j = ell + 1, ell = 1", op(3, 3, 1, {term(2, one, one)}), true},
      {"wave sigma > n", op(1, 2, 0, {term(0, one, Rational(3))}), true},
      {"wave sigma > n, n = 2", op(2, 2, 0, {term(0, one, Rational(5))}), true},
      {"wave sigma = n", op(1, 2, 0, {term(0, one, Rational(2))}), true},
      {"noneffective sigma > n", op(1, 2, 0, {term(0, one, Rational(4)), term(1, one, Rational(3))}),
       true},
      {"third order steep", op(1, 3, 0, {term(0, one, Rational(6))}), true},
      {"u_t classical damping n = 1", op(1, 2, 1, {term(0, one, Rational(2)), term(1, one, z)}),
       false},
      {"u_t classical damping n = 2",
       op(2, 2, 1, {term(0, one, Rational(3, 2)), term(1, Rational(5), z)}), false},
      {"u_t classical damping n = 3", op(3, 2, 1, {term(0, one, Rational(1, 3)), term(1, one, z)}),
       false},
  };
  int bad = 0;
  std::string first;
  for (const auto& c : cases) {
    const auto r = critical_exponent(c.spec);
    bool ok = c.infinite ? r.p_c.is_positive_infinity() && r.status == ExponentStatus::kInfinite
                         : r.p_c == ExtendedRational(Rational(1)) &&
                               r.status == ExponentStatus::kNoResult;
    if (c.infinite && r.envelope.j_last <= c.spec.ell()) {
      // Cross-check the piecewise condition 2 sigma_k >= n + (ell + 1 - j_k) eta_k at the
      // first piece with j_k <= ell + 1.
      for (const auto& piece : r.envelope.pieces) {
        if (piece.j() <= c.spec.ell() + 1) {
          ok = ok && piece.line.intercept >=
                         Rational(c.spec.dimension()) +
                             Rational(c.spec.ell() + 1 - piece.j()) * piece.eta;
          break;
        }
      }
    }
    if (!ok && bad++ == 0) first = c.name;
  }
  Outcome o;
  o.pass = bad == 0;
  o.detail = std::to_string(cases.size()) + " fixtures, " + std::to_string(bad) + " wrong" +
             (first.empty() ? "" : "; first: " + first);
  return o;
}

// Grid oracle.
Outcome criterion3() {
  const auto t0 = Clock::now();
  Draw d(77);
  int accepted = 0, bad = 0;
  double worst = 0.0;
  while (accepted < 100) {
    const int n = d.integer(1, 4), m = d.integer(1, 4), ell = d.integer(0, m - 1);
    std::vector<OperatorTerm> terms;
    for (int j = 0; j < m; ++j) {
      if (d.integer(0, 2) == 0) continue;
      const Rational omega = d.integer(0, 3) == 0 ? Rational(0) : d.in(Rational(0), Rational(8));
      terms.push_back(term(j, d.positive(), omega));
    }
    const auto spec = op(n, m, ell, terms);
    const auto r = critical_exponent(spec);
    if (r.status != ExponentStatus::kFinite || !r.eta_opt->is_finite() ||
        r.eta_opt->value() > Rational(50)) {
      continue;
    }
    ++accepted;
    const Rational eta_max = r.eta_opt->value() * Rational(2) + Rational(10);
    const auto bf = brute_force_pc(spec, eta_max, 20000000);
    const double err = std::abs(bf.p_hat - r.p_c.to_double());
    worst = std::max(worst, err);
    if ((err > 1e-3 || bf.unbounded) && std::getenv("CRITEX_DEBUG")) {
      std::fprintf(stderr, "n=%d m=%d ell=%d p_c=%s eta=%s p_hat=%.6f eta_hat=%.4f\n", n, m, ell,
                   r.p_c.to_string().c_str(), r.eta_opt->to_string().c_str(), bf.p_hat, bf.eta_hat);
      for (const auto& t : terms) std::fprintf(stderr, "  j=%d omega=%s\n", t.j, t.omega.to_string().c_str());
    }
    if (err > 1e-3 || bf.unbounded) ++bad;
  }
  const double elapsed = seconds_since(t0);
  Outcome o;
  o.pass = bad == 0 && elapsed < 60.0;
  o.detail = fmt("100 operators, worst |p_hat - p_c| = %.2e, %.2f s", worst, elapsed) +
             (bad ? ", " + std::to_string(bad) + " outside 1e-3" : "");
  return o;
}

struct Row {
  int n;
  Rational sigma;
  Rational q;
};

std::vector<Row> parameter_table() {
  std::vector<Row> rows;
  for (int n = 1; n <= 3; ++n) {
    for (const Rational& sigma :
         {Rational(1, 4), Rational(1, 2), Rational(3, 4), Rational(1), Rational(3, 2)}) {
      for (const Rational& dq : {Rational(1, 2), Rational(1)}) rows.push_back({n, sigma, Rational(n) + dq});
    }
  }
  return rows;
}

// 2^{2 sigma} Gamma(sigma + n/2) Gamma(sigma + q/2) / (Gamma(n/2) Gamma(q/2)), via Boost.
double origin_oracle(int n, double sigma, double q) {
  using boost::math::tgamma;
  return std::pow(2.0, 2 * sigma) * tgamma(sigma + n / 2.0) * tgamma(sigma + q / 2.0) /
         (tgamma(n / 2.0) * tgamma(q / 2.0));
}

Outcome criterion4() {
  const auto t0 = Clock::now();
  double worst = 0.0, worst_integer = 0.0;
  for (const auto& row : parameter_table()) {
    const double s = row.sigma.to_double(), q = row.q.to_double();
    const double v = singular_quadrature_apply(row.n, PolyDecayFunction{row.q, 1.0}, s, 0.0);
    const double rel = std::abs(v / origin_oracle(row.n, s, q) - 1.0);
    worst = std::max(worst, rel);
    if (row.sigma == Rational(1)) {
      worst_integer = std::max(worst_integer, std::abs(v / (row.n * q) - 1.0));
    }
  }
  const double elapsed = seconds_since(t0);
  Outcome o;
  o.pass = worst <= 1e-4 && worst_integer <= 1e-12 && elapsed < 120.0;
  o.detail = fmt("30 rows, worst rel %.2e, sigma=1 rows vs nq %.2e, %.2f s", worst,
                 worst_integer, elapsed);
  return o;
}

Outcome criterion5() {
  const auto t0 = Clock::now();
  int bad = 0;
  std::string failures;
  for (const auto& row : parameter_table()) {
    const Rational frac = row.sigma.fractional_part();
    const double q_sigma = frac.sign() == 0
                               ? (row.q + Rational(2) * row.sigma).to_double()
                               : (Rational(row.n) + Rational(2) * frac).to_double();
    const auto fit = pointwise_bound_check(row.n, row.sigma.to_double(), row.q);
    if (!(fit.slope <= -q_sigma + 0.15)) {
      ++bad;
      failures += " (n=" + std::to_string(row.n) + " sigma=" + row.sigma.to_string() +
                  " q=" + row.q.to_string() + fmt(" slope %.3f > %.3f)", fit.slope, -q_sigma + 0.15);
    }
  }
  const double elapsed = seconds_since(t0);
  Outcome o;
  o.pass = bad == 0 && elapsed < 300.0;
  o.detail = std::to_string(30 - bad) + "/30 slopes within bound, " + fmt("%.2f s", elapsed) +
             (bad ? ";" + failures : "");
  return o;
}

Outcome criterion6() {
  boost::math::quadrature::ooura_fourier_cos<double> cosine;
  boost::math::quadrature::ooura_fourier_sin<double> sine;
  double worst = 0.0, closed = 0.0;
  for (const auto& [n, q] : std::vector<std::pair<int, double>>{{1, 2.0}, {1, 3.0}, {3, 4.0}}) {
    for (double xi : {0.5, 1.0, 2.0}) {
      double direct;
      if (n == 1) {
        const auto [v, e] = cosine.integrate([q](double x) { return std::pow(1 + x * x, -q / 2); }, xi);
        (void)e;
        direct = 2.0 * v / std::sqrt(2 * M_PI);
      } else {
        const auto [v, e] =
            sine.integrate([q](double r) { return r * std::pow(1 + r * r, -q / 2); }, xi);
        (void)e;
        direct = 4.0 * M_PI / xi * v / std::pow(2 * M_PI, 1.5);
      }
      const double value = fourier_transform_polydecay(n, q, xi);
      worst = std::max(worst, std::abs(value / direct - 1.0));
      if (n == 1 && q == 2.0) {
        closed = std::max(closed, std::abs(value / (std::sqrt(M_PI / 2) * std::exp(-xi)) - 1.0));
      }
    }
  }
  Outcome o;
  o.pass = worst <= 1e-5 && closed <= 1e-8;
  o.detail = fmt("worst rel vs oscillatory quadrature %.2e, (1,2) row vs closed form %.2e", worst,
                 closed);
  return o;
}

template <typename F>
double central(F&& f, double t, double h) {
  return (f(t - 2 * h) - 8 * f(t - h) + 8 * f(t + h) - f(t + 2 * h)) / (12 * h);
}

std::vector<OperatorSpec> example_fixtures() {
  const Rational one(1), z(0);
  return {
      op(1, 1, 0, {term(0, one, Rational(2))}),
      op(3, 1, 0, {term(0, one, Rational(3, 2))}),
      op(3, 2, 0, {term(0, one, Rational(2))}),
      op(1, 2, 0, {term(0, one, Rational(2)), term(1, one, z)}),
      op(1, 2, 0, {term(0, one, Rational(2)), term(1, one, Rational(1, 2))}),
      op(2, 2, 0, {term(0, one, Rational(2)), term(1, one, Rational(3))}),
      op(2, 2, 0, {term(0, one, Rational(2)), term(1, one, Rational(2))}),
      op(2, 2, 1, {term(0, one, Rational(2)), term(1, one, Rational(1, 2))}),
      op(1, 2, 1, {term(0, one, Rational(1)), term(1, one, Rational(3, 2))}),
      op(2, 2, 0, {term(0, Rational(3), Rational(4, 3)), term(1, Rational(2), Rational(2, 3))}),
      op(1, 3, 1, {term(1, one, Rational(2)), term(2, one, Rational(1))}),
  };
}

Outcome criterion7() {
  const auto t0 = Clock::now();
  // Scaling identity: d/dt psi_R^{(k-1)} = psi_R^{(k)} and psi_R^{(-1)} = -int_t^inf psi_R.
  double worst_scaling = 0.0;
  for (int m = 1; m <= 4; ++m) {
    for (double R : {2.0, 10.0, 100.0}) {
      const TestFunctionFamily fam{m, 2.5, Rational(1), R};
      const double stretch = std::pow(R, fam.eta.to_double());
      for (int order = -m + 1; order <= m; ++order) {
        double err = 0.0, scale = 0.0;
        for (double u = 0.03; u < 1.05; u += 0.0613) {
          const double t = u * stretch;
          const double fd = central([&](double s) { return scaled_psi(fam, order - 1, s); }, t,
                                    2.5e-4 * stretch);
          const double value = scaled_psi(fam, order, t);
          err = std::max(err, std::abs(fd - value));
          scale = std::max(scale, std::abs(value));
        }
        worst_scaling = std::max(worst_scaling, err / scale);
      }
      for (double u : {0.0, 0.3, 0.6, 0.85}) {
        const double t = u * stretch;
        const double tail = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
            [&](double s) { return scaled_psi(fam, 0, s); }, t, stretch, 15, 1e-13);
        worst_scaling = std::max(worst_scaling,
                                 std::abs(scaled_psi(fam, -1, t) + tail) / stretch);
      }
    }
  }
  // Primitives are dominated by psi on [0, 1].
  int ccc_bad = 0;
  for (int m = 1; m <= 4; ++m) {
    const TestFunctionFamily fam{m, 2.5, Rational(1), 1.0};
    for (int i = 0; i < 1000; ++i) {
      const double t = i / 1000.0;
      const double psi = psi_derivative(fam, 0, t);
      for (int k = 1; k <= m; ++k) {
        if (std::abs(psi_derivative(fam, -k, t)) > psi * (1 + 1e-12) + 1e-300) ++ccc_bad;
      }
    }
  }
  // Hoelder exponents at p = (1 + p_c) / 2.
  int exponent_bad = 0, fixtures = 0;
  for (const auto& spec : example_fixtures()) {
    const auto r = critical_exponent(spec);
    if (r.status != ExponentStatus::kFinite) continue;
    ++fixtures;
    const Rational p = (Rational(1) + r.p_c.value()) / Rational(2);
    const Rational eta = r.eta_opt->value();
    const Rational inv_p_prime = Rational(1) - Rational(1) / p;
    for (const auto& t : spec.terms()) {
      const Rational expected = -(Rational(t.j - spec.ell()) * eta) - t.omega +
                                (Rational(spec.dimension()) + eta) * inv_p_prime;
      const Rational got = holder_exponent(spec, t.j, eta, p);
      if (!(got == expected) || got.sign() >= 0) ++exponent_bad;
    }
  }
  const double elapsed = seconds_since(t0);
  Outcome o;
  o.pass = worst_scaling <= 1e-6 && ccc_bad == 0 && exponent_bad == 0 && fixtures >= 8;
  o.detail = fmt("scaling identity worst rel %.2e; ", worst_scaling) +
             std::to_string(ccc_bad) + " primitive-bound violations on 1000 samples; " +
             std::to_string(exponent_bad) + " non-negative exponents over " +
             std::to_string(fixtures) + " fixtures; " + fmt("%.2f s", elapsed);
  return o;
}

int rank(Verdict v) { return v == Verdict::kBlowup ? 0 : v == Verdict::kInconclusive ? 1 : 2; }

std::string pattern(const SweepResult& r) {
  std::string out;
  for (const auto& row : r.rows) {
    out += fmt("%g:", row.p) + verdict_name(row.verdict) + " ";
  }
  return out;
}

Outcome criterion8() {
  const auto t0 = Clock::now();
  SimConfig heat{op(1, 1, 0, {term(0, Rational(1), Rational(2))})};
  heat.data.profiles[0] = DataProfile::gaussian(3.0, 0.1);
  const std::vector<double> heat_ps = {1.5, 2.0, 2.5, 3.5, 4.0};
  const SweepResult a = sweep_p(heat, heat_ps, 1);
  double max_blow = -1, min_decay = 1e9;
  for (const auto& row : a.rows) {
    if (row.verdict == Verdict::kBlowup) max_blow = std::max(max_blow, row.p);
    if (row.verdict == Verdict::kDecayed) min_decay = std::min(min_decay, row.p);
  }
  const bool heat_ok = monotone_pattern(a.rows) && max_blow > 0 && min_decay < 1e9 &&
                       max_blow < 3.0 && min_decay > 3.0;

  SimConfig damped{op(1, 2, 0, {term(0, Rational(1), Rational(2)),
                                term(1, Rational(1), Rational(1, 2))})};
  damped.data.profiles[1] = DataProfile::gaussian(0.4, 1.0);
  const std::vector<double> damped_ps = {3.0, 4.0, 6.0, 7.0};
  const SweepResult b = sweep_p(damped, damped_ps, 1);
  const double p_c = b.p_c.to_double();
  bool damped_ok = monotone_pattern(b.rows) && b.p_c == ExtendedRational(Rational(5));
  for (const auto& row : b.rows) {
    if (row.p > p_c && row.verdict == Verdict::kBlowup) damped_ok = false;
    if (row.p < p_c && row.verdict == Verdict::kDecayed) damped_ok = false;
  }
  damped_ok = damped_ok && rank(b.rows.front().verdict) == 0 && rank(b.rows.back().verdict) > 0;
  const double elapsed = seconds_since(t0);
  Outcome o;
  o.pass = heat_ok && damped_ok && elapsed < 600.0;
  o.detail = "heat [" + pattern(a) + "] damped [" + pattern(b) + "]" + fmt(" %.1f s", elapsed);
  return o;
}

Outcome criterion9() {
  const auto heat = op(1, 1, 0, {term(0, Rational(1), Rational(2))});
  const TestFunctionFamily fam{4, 3.5, Rational(2), 2.0};
  SimConfig c{heat};
  c.data.profiles[0] = DataProfile::gaussian(1.0, 1.0);
  c.t_end = 6.0;
  c.dt = 0.02;
  c.points = 512;
  c.snapshot_every = 1;
  const double coarse = weak_residual(manufactured_run(c), heat, fam, Rational(3));
  c.dt = 0.01;
  c.points = 1024;
  const double fine = weak_residual(manufactured_run(c), heat, fam, Rational(3));
  c.nonlinear = false;
  const double linear = weak_residual(simulate(c), heat, fam, Rational(3));
  Outcome o;
  o.pass = coarse <= 1e-3 && fine <= 0.5 * coarse && linear <= 1e-3;
  o.detail = fmt("manufactured %.2e -> %.2e under refinement, linear %.2e", coarse, fine, linear);
  return o;
}

Outcome criterion10() {
  int outside = 0, checked = 0;
  double worst_cancel = 0.0;
  int quadrature_rows = 0;
  for (int n = 1; n <= 3; ++n) {
    for (double sigma : {0.25, 0.5, 0.75, 1.0, 1.5}) {
      for (double dq : {0.5, 1.0}) {
        for (double eps : {1.0, 2.0}) {
          if (checked == 50) break;
          ++checked;
          const double q = n + dq;
          const double theta = vanishing_theta(n, sigma, q, eps);
          if (!(theta > 0.0 && theta < 1.0)) ++outside;
          if (checked % 5 == 0) {
            ++quadrature_rows;
            const Rational qr = Rational::parse(fmt("%g", 2 * q).c_str()) / Rational(2);
            const Rational qe = qr + Rational(static_cast<std::int64_t>(eps));
            const double a = singular_quadrature_apply(n, PolyDecayFunction{qr, 1.0}, sigma, 0.0);
            const double b = singular_quadrature_apply(n, PolyDecayFunction{qe, 1.0}, sigma, 0.0);
            worst_cancel =
                std::max(worst_cancel, std::abs(a - theta * b) / value_at_origin(n, sigma, q));
          }
        }
      }
    }
  }
  const double special = vanishing_theta(1, 0.5, 2.0, 2.0);
  const double a = singular_quadrature_apply(1, PolyDecayFunction{Rational(2), 1.0}, 0.5, 0.0);
  const double b = singular_quadrature_apply(1, PolyDecayFunction{Rational(4), 1.0}, 0.5, 0.0);
  worst_cancel = std::max(worst_cancel, std::abs(a - special * b) / value_at_origin(1, 0.5, 2.0));
  Outcome o;
  o.pass = outside == 0 && checked == 50 && std::abs(special - 2.0 / 3.0) <= 1e-10 &&
           worst_cancel <= 1e-4;
  o.detail = std::to_string(checked) + " points, " + std::to_string(outside) +
             " outside (0,1); theta(1,1/2,2,2) - 2/3 = " + fmt("%.1e", special - 2.0 / 3.0) +
             fmt("; cancelled origin value <= %.1e of the reference over %g rows", worst_cancel,
                 quadrature_rows + 1);
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  std::set<int> expect_red;
  for (int i = 1; i < argc; ++i) {
    if (std::string(argv[i]) == "--expect-red" && i + 1 < argc) {
      std::stringstream list(argv[++i]);
      std::string item;
      while (std::getline(list, item, ',')) expect_red.insert(std::stoi(item));
    }
  }
  const std::vector<std::function<Outcome()>> criteria = {
      criterion1, criterion2, criterion3, criterion4, criterion5,
      criterion6, criterion7, criterion8, criterion9, criterion10};
  int unexpected = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const int id = static_cast<int>(k) + 1;
    Outcome o;
    try {
      o = criteria[k]();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const bool known = expect_red.count(id) > 0;
    std::printf("%s criterion %d: %s%s\n", o.pass ? "PASS" : "FAIL", id, o.detail.c_str(),
                !o.pass && known ? " [known red]" : "");
    std::fflush(stdout);
    if (!o.pass && !known) ++unexpected;
  }
  return unexpected == 0 ? 0 : 1;
}
