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

#include "critex/weak_sim.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>

#include "critex/error.hpp"
#include "critex/exponent_engine.hpp"
#include "critex/fft.hpp"
#include "critex/kernels.hpp"

namespace critex {
namespace {

using Complex = std::complex<double>;

constexpr double kDecayRatio = 1e-2;
constexpr double kConfirmWindow = 0.1;
constexpr double kEdgeBand = 0.05;
constexpr double kResidualEpsilon = 1e-30;

double max_omega(const OperatorSpec& spec) {
  double w = 0.0;
  for (const auto& t : spec.terms()) w = std::max(w, t.omega.to_double());
  return w;
}

// Symbol a_j |xi|^{omega_j} for each half-spectrum mode; zero if inactive.
std::vector<double> symbol(const OperatorSpec& spec, int j, const std::vector<double>& norms2) {
  std::vector<double> out(norms2.size(), 0.0);
  const OperatorTerm* term = spec.term(j);
  if (!term) return out;
  const double a = term->a.to_double();
  const double half_omega = 0.5 * term->omega.to_double();
  for (std::size_t i = 0; i < norms2.size(); ++i) out[i] = a * std::pow(norms2[i], half_omega);
  return out;
}

double edge_maximum(const GridFunction& f) {
  const double edge = (1.0 - kEdgeBand) * f.half_width;
  double worst = 0.0;
  for (std::size_t i = 0; i < f.values.size(); ++i) {
    const auto x = f.point(i);
    const bool near_edge =
        std::any_of(x.begin(), x.end(), [&](double xi) { return std::abs(xi) >= edge; });
    if (near_edge) worst = std::max(worst, std::abs(f.values[i]));
  }
  return worst;
}

double grid_dot(const GridFunction& a, const GridFunction& b) {
  double sum = 0.0;
  for (std::size_t i = 0; i < a.values.size(); ++i) sum += a.values[i] * b.values[i];
  return sum * std::pow(a.spacing, a.dim);
}

void validate(const SimConfig& c) {
  const int m = c.spec.order();
  if (m < 1 || m > 2) throw ValidationError("simulation supports m = 1 or m = 2 only");
  if (!(c.p > 1.0)) throw ValidationError("p must exceed 1");
  if (!(c.dt > 0.0)) throw ValidationError("dt must be positive");
  if (!(c.t_end > 0.0)) throw ValidationError("t_end must be positive");
  if (!(c.blowup_threshold > 0.0)) throw ValidationError("blowup threshold must be positive");
  if (c.points < 8) throw ValidationError("need at least 8 points per axis");
  const double spacing = 2.0 * c.half_width / c.points;
  const double cap = c.dt_cap_constant * std::pow(spacing, max_omega(c.spec));
  if (c.dt > cap) {
    throw ValidationError("unstable dt: " + std::to_string(c.dt) + " exceeds cap " +
                          std::to_string(cap));
  }
}

class Stepper {
 public:
  explicit Stepper(const SimConfig& c)
      : c_(c),
        m_(c.spec.order()),
        ell_(c.spec.ell()),
        grid_(GridFunction::zeros(c.dim, c.points, c.half_width)),
        fft_(grid_.shape) {
    const auto norms2 = mode_norms_squared(grid_.shape, grid_.spacing);
    const std::size_t modes = fft_.complex_size();
    const auto l0 = symbol(c.spec, 0, norms2);
    if (m_ == 1) {
      full1_.resize(modes);
      half1_.resize(modes);
      for (std::size_t i = 0; i < modes; ++i) {
        full1_[i] = std::exp(-l0[i] * c.dt);
        half1_[i] = std::exp(-0.5 * l0[i] * c.dt);
      }
    } else {
      const auto l1 = symbol(c.spec, 1, norms2);
      full2_.resize(modes);
      half2_.resize(modes);
      for (std::size_t i = 0; i < modes; ++i) {
        full2_[i] = companion_exponential(l0[i], l1[i], c.dt);
        half2_[i] = companion_exponential(l0[i], l1[i], 0.5 * c.dt);
      }
    }
    u_hat_.assign(modes, 0.0);
    ut_hat_.assign(modes, 0.0);
    work_u_.assign(modes, 0.0);
    work_ut_.assign(modes, 0.0);
    nl_hat_.assign(modes, 0.0);
    u_ = grid_;
    ut_ = grid_;
    scratch_ = grid_.values;
  }

  void load(const std::vector<GridFunction>& data) {
    fft_.forward(data[0].values, u_hat_);
    if (m_ == 2) fft_.forward(data[1].values, ut_hat_);
    refresh();
  }

  // One Lawson midpoint step.
  void step() {
    const double h = c_.dt;
    nonlinearity(u_hat_, ut_hat_);
    work_u_ = u_hat_;
    work_ut_ = ut_hat_;
    if (m_ == 1) {
      for (std::size_t i = 0; i < work_u_.size(); ++i) work_u_[i] += 0.5 * h * nl_hat_[i];
      kernels::omp::scale_modes(work_u_, half1_);
    } else {
      for (std::size_t i = 0; i < work_ut_.size(); ++i) work_ut_[i] += 0.5 * h * nl_hat_[i];
      kernels::omp::apply_2x2(half2_, work_u_, work_ut_);
    }
    nonlinearity(work_u_, work_ut_);
    if (m_ == 1) {
      kernels::omp::scale_modes(u_hat_, full1_);
      std::vector<Complex> kick = nl_hat_;
      kernels::omp::scale_modes(kick, half1_);
      for (std::size_t i = 0; i < u_hat_.size(); ++i) u_hat_[i] += h * kick[i];
    } else {
      kernels::omp::apply_2x2(full2_, u_hat_, ut_hat_);
      std::vector<Complex> kick_u(nl_hat_.size(), 0.0);
      std::vector<Complex> kick_ut = nl_hat_;
      kernels::omp::apply_2x2(half2_, kick_u, kick_ut);
      for (std::size_t i = 0; i < u_hat_.size(); ++i) {
        u_hat_[i] += h * kick_u[i];
        ut_hat_[i] += h * kick_ut[i];
      }
    }
    refresh();
  }

  const GridFunction& u() const { return u_; }
  const GridFunction& v() const { return ell_ == 0 ? u_ : ut_; }
  const GridFunction& ut() const { return ut_; }

  GridFunction source() const {
    GridFunction s = grid_;
    if (c_.nonlinear) kernels::omp::abs_pow(v().values, c_.p, s.values);
    return s;
  }

 private:
  void refresh() {
    fft_.inverse(u_hat_, u_.values);
    if (m_ == 2) fft_.inverse(ut_hat_, ut_.values);
  }

  // nl_hat_ = F(|d_t^ell u|^p) for the state (uh, uth).
  void nonlinearity(const std::vector<Complex>& uh, const std::vector<Complex>& uth) {
    if (!c_.nonlinear) {
      std::fill(nl_hat_.begin(), nl_hat_.end(), Complex(0.0));
      return;
    }
    fft_.inverse(ell_ == 0 ? uh : uth, scratch_);
    kernels::omp::abs_pow(scratch_, c_.p, scratch_);
    fft_.forward(scratch_, nl_hat_);
  }

  const SimConfig& c_;
  int m_;
  int ell_;
  GridFunction grid_;
  RealFft fft_;
  std::vector<double> full1_, half1_;
  std::vector<kernels::Mat2> full2_, half2_;
  std::vector<Complex> u_hat_, ut_hat_, work_u_, work_ut_, nl_hat_;
  GridFunction u_, ut_;
  std::vector<double> scratch_;
};

SimRun run_once(const SimConfig& config) {
  validate(config);
  SimRun run;
  run.initial_data = sample_data(config);
  Stepper stepper(config);
  stepper.load(run.initial_data);

  const long steps = std::lround(std::ceil(config.t_end / config.dt - 1e-9));
  double running_max = 0.0;
  for (long k = 0;; ++k) {
    const double t = k * config.dt;
    const double sup = kernels::omp::max_abs(stepper.u().values);
    run.sup_series.emplace_back(t, sup);
    run.final_time = t;
    if (!std::isfinite(sup)) {
      run.overflow = true;
      run.blowup_time = t;
      break;
    }
    running_max = std::max(running_max, sup);
    if (config.snapshot_every > 0 && k % config.snapshot_every == 0) {
      run.snapshots.push_back({t, stepper.u(), stepper.v(), stepper.source()});
    }
    if (sup > config.blowup_threshold) {
      run.blowup_time = t;
      break;
    }
    if (k == steps) break;
    stepper.step();
  }

  if (run.blowup_time) {
    run.verdict = Verdict::kBlowup;
    if (run.overflow) run.note = "overflow";
    return run;
  }
  const double final_sup = run.sup_series.back().second;
  run.verdict =
      final_sup < kDecayRatio * running_max ? Verdict::kDecayed : Verdict::kInconclusive;
  const double edge = edge_maximum(stepper.u());
  if (edge > config.support_tolerance) {
    run.support_violation = true;
    run.verdict = Verdict::kInconclusive;
    run.note = "solution reaches the box edge";
  }
  return run;
}

}  // namespace

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::kBlowup:
      return "blowup";
    case Verdict::kDecayed:
      return "decayed";
    case Verdict::kInconclusive:
      return "inconclusive";
  }
  return "inconclusive";
}

kernels::Mat2 companion_exponential(double l0, double l1, double h) {
  // exp(hA) = e^{tau h} [C I + S (A - tau I)], eigenvalues tau +- sqrt(d).
  const double tau = -0.5 * l1;
  const double d = 0.25 * l1 * l1 - l0;
  double c, s;
  if (d > 0.0) {
    const double root = std::sqrt(d);
    if (root * h < 1.0) {
      const double e = std::exp(tau * h);
      c = e * std::cosh(root * h);
      s = e * std::sinh(root * h) / root;
    } else {
      const double up = std::exp((tau + root) * h);
      const double down = std::exp((tau - root) * h);
      c = 0.5 * (up + down);
      s = 0.5 * (up - down) / root;
    }
  } else if (d < 0.0) {
    const double root = std::sqrt(-d);
    const double e = std::exp(tau * h);
    c = e * std::cos(root * h);
    s = e * std::sin(root * h) / root;
  } else {
    c = std::exp(tau * h);
    s = h * c;
  }
  return {c - s * tau, s, -s * l0, c - s * (l1 + tau)};
}

std::vector<GridFunction> sample_data(const SimConfig& config) {
  std::vector<GridFunction> data;
  for (int j = 0; j < config.spec.order(); ++j) {
    const DataProfile* profile = config.data.profile(j);
    if (!profile || profile->kind == DataProfile::Kind::kZero) {
      data.push_back(GridFunction::zeros(config.dim, config.points, config.half_width));
    } else {
      data.push_back(GridFunction::sample(config.dim, config.points, config.half_width,
                                          [&](std::span<const double> x) {
                                            return profile->value(x);
                                          }));
    }
  }
  return data;
}

SimRun simulate(const SimConfig& config) {
  SimRun run = run_once(config);
  if (run.verdict != Verdict::kBlowup || !config.confirm_blowup) return run;
  SimConfig finer = config;
  finer.dt = 0.5 * config.dt;
  finer.snapshot_every = 0;
  finer.confirm_blowup = false;
  finer.t_end = std::min(config.t_end, (1.0 + 2.0 * kConfirmWindow) * *run.blowup_time + config.dt);
  const SimRun check = run_once(finer);
  const double t1 = *run.blowup_time;
  run.blowup_confirmed = check.blowup_time &&
                         std::abs(*check.blowup_time - t1) <= kConfirmWindow * t1;
  if (!run.blowup_confirmed) {
    run.verdict = Verdict::kInconclusive;
    run.note = "blowup not confirmed under dt/2";
  }
  return run;
}

SweepResult sweep_p(const SimConfig& config, std::span<const double> p_values, int jobs) {
  SweepResult result;
  const ExponentReport report = critical_exponent(config.spec);
  result.p_c = report.p_c;
  result.rows.resize(p_values.size());
  const long count = static_cast<long>(p_values.size());
#pragma omp parallel for num_threads(std::max(jobs, 1)) schedule(dynamic)
  for (long i = 0; i < count; ++i) {
    SweepRow& row = result.rows[i];
    row.p = p_values[i];
    if (result.p_c.is_finite() && std::abs(row.p - result.p_c.to_double()) < 1e-12) {
      row.critical = true;
      row.note = "critical power: inconclusive by policy";
      continue;
    }
    try {
      SimConfig c = config;
      c.p = row.p;
      c.snapshot_every = 0;
      const SimRun run = simulate(c);
      row.verdict = run.verdict;
      row.blowup_time = run.blowup_time;
      row.note = run.note;
    } catch (const std::exception& e) {
      row.verdict = Verdict::kInconclusive;
      row.note = e.what();
    }
  }
  return result;
}

SimRun manufactured_run(const SimConfig& config) {
  if (config.spec.order() != 1) throw ValidationError("manufactured run needs m = 1");
  if (config.snapshot_every < 1) throw ValidationError("manufactured run needs snapshots");
  SimRun run;
  run.initial_data = sample_data(config);
  const GridFunction& w = run.initial_data[0];
  GridFunction forcing = w;
  if (const OperatorTerm* term = config.spec.term(0)) {
    const GridFunction aw = term->omega.sign() == 0
                                ? w
                                : spectral_apply(w, term->sigma().to_double());
    const double a = term->a.to_double();
    for (std::size_t i = 0; i < forcing.values.size(); ++i) {
      forcing.values[i] = a * aw.values[i] - w.values[i];
    }
  } else {
    for (double& v : forcing.values) v = -v;
  }
  const double spacing = config.snapshot_every * config.dt;
  const long count = std::lround(std::floor(config.t_end / spacing + 1e-9));
  for (long k = 0; k <= count; ++k) {
    const double t = k * spacing;
    const double decay = std::exp(-t);
    Snapshot s{t, w, w, forcing};
    for (auto* f : {&s.u, &s.v, &s.source}) {
      for (double& v : f->values) v *= decay;
    }
    run.sup_series.emplace_back(t, decay * kernels::omp::max_abs(w.values));
    run.snapshots.push_back(std::move(s));
  }
  run.final_time = run.snapshots.back().t;
  run.verdict = Verdict::kDecayed;
  run.note = "manufactured";
  return run;
}

bool monotone_pattern(const std::vector<SweepRow>& rows) {
  std::vector<std::pair<double, int>> ranked;
  for (const auto& row : rows) {
    const int rank = row.verdict == Verdict::kBlowup ? 0
                     : row.verdict == Verdict::kInconclusive ? 1
                                                              : 2;
    ranked.emplace_back(row.p, rank);
  }
  std::sort(ranked.begin(), ranked.end());
  for (std::size_t i = 1; i < ranked.size(); ++i) {
    if (ranked[i].second < ranked[i - 1].second) return false;
  }
  return true;
}

double weak_residual(const SimRun& run, const OperatorSpec& spec,
                     const TestFunctionFamily& fam, const Rational& q) {
  const auto& snaps = run.snapshots;
  if (snaps.size() < 3) throw ValidationError("insufficient snapshot density");
  const double dt = snaps[1].t - snaps[0].t;
  for (std::size_t k = 1; k < snaps.size(); ++k) {
    if (std::abs(snaps[k].t - snaps[k - 1].t - dt) > 1e-9 * dt) {
      throw ValidationError("insufficient snapshot density: snapshots must be uniform");
    }
  }
  if (snaps.front().t != 0.0) throw ValidationError("snapshots must start at t = 0");
  if (fam.m < spec.order()) throw ValidationError("test family order below m");
  const double support = std::pow(fam.R, fam.eta.to_double());
  if (!(support < snaps.back().t)) {
    throw ValidationError("psi_R support exceeds the recorded time span");
  }
  const GridFunction& grid = snaps.front().u;
  if (grid.half_width < 20.0 * fam.R) {
    throw ValidationError("box half-width must be at least 20 R");
  }
  if (static_cast<int>(run.initial_data.size()) != spec.order()) {
    throw ValidationError("run lacks initial data");
  }

  const GridFunction phi = GridFunction::sample(
      grid.dim, grid.shape[0], grid.half_width,
      [&](std::span<const double> x) { return phi_scaled(q, fam.R, x); });
  // A_j phi for every j in [0, m]; empty when a_j = 0.
  std::vector<std::optional<GridFunction>> a_phi(spec.order() + 1);
  for (const auto& term : spec.terms()) {
    GridFunction g = term.omega.sign() == 0 ? phi : spectral_apply(phi, term.sigma().to_double());
    for (double& v : g.values) v *= term.a.to_double();
    a_phi[term.j] = std::move(g);
  }

  auto trapezoid = [&](auto&& integrand) {
    double sum = 0.0;
    for (std::size_t k = 0; k < snaps.size(); ++k) {
      const double w = (k == 0 || k + 1 == snaps.size()) ? 0.5 : 1.0;
      sum += w * integrand(snaps[k]);
    }
    return sum * dt;
  };

  const int ell = spec.ell();
  const double lhs = trapezoid([&](const Snapshot& s) {
    return scaled_psi(fam, 0, s.t) * grid_dot(s.source, phi);
  });
  double rhs = 0.0;
  double scale = std::abs(lhs);
  for (int j = 0; j <= spec.order(); ++j) {
    if (!a_phi[j]) continue;
    const int order = j - ell;
    const double sign = order % 2 == 0 ? 1.0 : -1.0;
    const double term = sign * trapezoid([&](const Snapshot& s) {
      return scaled_psi(fam, order, s.t) * grid_dot(s.v, *a_phi[j]);
    });
    rhs += term;
    scale += std::abs(term);
  }
  for (int j = ell; j <= spec.order() - 1; ++j) {
    if (!a_phi[j + 1]) continue;
    const double term = -grid_dot(run.initial_data[j], *a_phi[j + 1]);
    rhs += term;
    scale += std::abs(term);
  }
  return std::abs(lhs - rhs) / (scale + kResidualEpsilon);
}

double sign_functional(const OperatorSpec& spec, const std::vector<GridFunction>& data) {
  double total = 0.0;
  for (int j : index_set_I(spec)) {
    if (j >= static_cast<int>(data.size())) throw ValidationError("missing data grid");
    total += spec.coefficient(j + 1).to_double() * data[j].integral();
  }
  return total;
}

}  // namespace critex
