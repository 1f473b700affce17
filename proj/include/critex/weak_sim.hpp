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

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "critex/fraclap.hpp"
#include "critex/kernels.hpp"
#include "critex/operator_model.hpp"
#include "critex/testfn.hpp"

namespace critex {

/// Pseudo-spectral run of L u = |d_t^ell u|^p on a periodic box, m in {1, 2}.
struct SimConfig {
  explicit SimConfig(OperatorSpec s) : spec(std::move(s)) {}

  OperatorSpec spec;
  double p = 2.0;
  bool nonlinear = true;
  int dim = 1;
  int points = 1024;
  double half_width = 90.0;
  double dt = 0.01;
  double t_end = 50.0;
  double blowup_threshold = 1e6;
  DataSpec data;
  /// Store a snapshot every k steps (0: none).
  int snapshot_every = 0;
  /// Re-run with dt / 2 to confirm a threshold crossing.
  bool confirm_blowup = true;
  /// Level below which the final state counts as zero near the box edge.
  double support_tolerance = 1e-10;
  /// Prefactor c of the cap dt <= c h^{max omega}.
  double dt_cap_constant = 1.0;
};

enum class Verdict { kBlowup, kDecayed, kInconclusive };

std::string verdict_name(Verdict v);

struct Snapshot {
  double t = 0.0;
  GridFunction u;
  /// d_t^ell u.
  GridFunction v;
  /// Right-hand side of L u = source at this time.
  GridFunction source;
};

struct SimRun {
  Verdict verdict = Verdict::kInconclusive;
  std::optional<double> blowup_time;
  bool overflow = false;
  bool support_violation = false;
  bool blowup_confirmed = false;
  std::string note;
  double final_time = 0.0;
  std::vector<std::pair<double, double>> sup_series;
  std::vector<Snapshot> snapshots;
  /// u_j(0) for j = 0..m-1.
  std::vector<GridFunction> initial_data;
  std::optional<double> weak_residual;
};

/// The 2x2 propagator exp(h A), A = [[0, 1], [-l0, -l1]].
kernels::Mat2 companion_exponential(double l0, double l1, double h);

SimRun simulate(const SimConfig& config);

struct SweepRow {
  double p = 0.0;
  Verdict verdict = Verdict::kInconclusive;
  std::optional<double> blowup_time;
  bool critical = false;
  std::string note;
};

struct SweepResult {
  std::vector<SweepRow> rows;
  ExtendedRational p_c;
};

/// One simulate per p with identical data; rows in input order. Rows with
/// p == p_c are reported inconclusive without running.
SweepResult sweep_p(const SimConfig& config, std::span<const double> p_values, int jobs = 1);

/// True when the verdicts read blowup* inconclusive* decayed* in order of p.
bool monotone_pattern(const std::vector<SweepRow>& rows);

/// Samples u_j on the config grid.
std::vector<GridFunction> sample_data(const SimConfig& config);

/// Exact run u = e^{-t} w for an m = 1 operator, w = the u_0 profile. The
/// snapshot source is the forcing u_t + A_0 u, so the identity holds exactly
/// up to discretization. Snapshots every snapshot_every * dt up to t_end.
SimRun manufactured_run(const SimConfig& config);

/// Relative defect of the weak identity tested with psi_R(t) phi_R(x),
/// phi_R = <x/R>^{-q}: |LHS - RHS| / (|LHS| + sum of |RHS terms| + eps).
double weak_residual(const SimRun& run, const OperatorSpec& spec,
                     const TestFunctionFamily& fam, const Rational& q);

/// sum_{j in I} a_{j+1} int u_j dx by the trapezoid rule; data[j] = u_j.
double sign_functional(const OperatorSpec& spec, const std::vector<GridFunction>& data);

}  // namespace critex
