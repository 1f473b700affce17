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
#include <string>
#include <vector>

#include "critex/operator_model.hpp"
#include "critex/rational.hpp"

namespace critex {

/// One line (j - ell) eta + omega_j.
struct EnvelopeLine {
  Rational slope;
  Rational intercept;
  int source_j = 0;

  Rational at(const Rational& eta) const { return slope * eta + intercept; }
};

/// Piece k of the envelope: line of j_k on [eta_k, eta_{k+1}).
struct EnvelopePiece {
  Rational eta;
  EnvelopeLine line;
  int j() const { return line.source_j; }
};

/// Lower envelope g of the active lines on [0, inf].
struct Envelope {
  std::vector<EnvelopePiece> pieces;
  /// Every active line, by ascending j.
  std::vector<EnvelopeLine> lines;
  int ell = 0;
  /// min{j : a_j != 0, omega_j = 0}.
  int j_first = 0;
  /// min{j : a_j != 0}.
  int j_last = 0;
};

Envelope lower_envelope(const OperatorSpec& spec);
ExtendedRational g_eval(const Envelope& env, const ExtendedRational& eta);
ExtendedRational h_eval(const OperatorSpec& spec, const ExtendedRational& eta);
ExtendedRational h_eval(const OperatorSpec& spec, const Envelope& env,
                        const ExtendedRational& eta);

enum class ExponentStatus { kFinite, kInfinite, kNoResult };

struct ExponentReport {
  ExponentStatus status = ExponentStatus::kFinite;
  ExtendedRational p_c;
  std::optional<ExtendedRational> eta_opt;
  Envelope envelope;
  /// s_k = sign(n (j_k - ell) - omega_{j_k}) per piece.
  std::vector<int> signs;
  std::vector<int> J_p;
  /// max(g(eta) - eta) == n exactly.
  bool boundary_case = false;
  std::optional<Rational> s;
  std::optional<Rational> q;
  std::vector<int> I;
  std::string classification;
};

ExponentReport critical_exponent(const OperatorSpec& spec);

struct BruteForceResult {
  double p_hat = 1.0;
  double eta_hat = 0.0;
  /// h exceeded 1e6 somewhere, or the eta -> inf limit is infinite.
  bool unbounded = false;
};

/// Grid maximum of h in double precision; an oracle for critical_exponent.
BruteForceResult brute_force_pc(const OperatorSpec& spec, const Rational& eta_max,
                                long steps);

/// Damping label for m = 2 models with terms in {0, 1, 2}; "generic" otherwise.
std::string classify(const ExponentReport& report, const OperatorSpec& spec);

std::string status_name(ExponentStatus status);

}  // namespace critex
