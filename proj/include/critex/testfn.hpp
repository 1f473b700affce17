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

#include <span>
#include <string>
#include <vector>

#include "critex/operator_model.hpp"
#include "critex/rational.hpp"

namespace critex {

/// psi = chi^{m p'} and its scaled versions psi_R(t) = psi(R^{-eta} t).
struct TestFunctionFamily {
  int m = 1;
  double p = 2.0;
  Rational eta{1};
  double R = 1.0;

  double p_prime() const { return p / (p - 1.0); }
  void validate() const;
};

/// Smooth transition: 1 on [0, 1/2], 0 on [1, inf), decreasing in between.
double chi(double t);
/// The reversed transition 1 - chi(t), computed independently.
double chi_reversed(double t);

/// Derivatives t -> d^k/dt^k chi(t)^power for k = 0..order (Taylor jets).
std::vector<double> chi_power_derivatives(double power, int order, double t);

/// psi^{(order)}(t) for order in [-m, m]; negative orders are the primitives
/// vanishing on [1, inf).
double psi_derivative(const TestFunctionFamily& fam, int order, double t);

/// R^{-order eta} psi^{(order)}(R^{-eta} t).
double scaled_psi(const TestFunctionFamily& fam, int order, double t);

struct AaaBound {
  double c_est = 0.0;
  bool holds = false;
};

/// Smallest C with |psi^{(order)}(t)| <= C psi(t)^{1/p} on a uniform sample
/// of [0, 1) (the scaled form reduces to this one).
AaaBound check_aaa_bound(const TestFunctionFamily& fam, int order, int samples);

/// <x / R>^{-q}.
double phi_scaled(const Rational& q, double R, std::span<const double> x);

/// -(j - ell) eta - omega_j + (n + eta) / p', exact.
Rational holder_exponent(const OperatorSpec& spec, int j, const Rational& eta,
                         const Rational& p);

/// CSV with columns t and psi^{(k)} for k = -m..m.
std::string psi_table_csv(const TestFunctionFamily& fam, int samples);

}  // namespace critex
