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

namespace critex {

/// Gamma function for x > 0 (Lanczos, g = 7, nine terms).
double gamma(double x);
/// log Gamma(x) for x > 0.
double log_gamma(double x);

/// Modified Bessel function of the second kind K_nu(x), x > 0, from
/// K_nu(x) = int_0^inf exp(-x cosh t) cosh(nu t) dt.
double bessel_k(double nu, double x);
/// exp(x) K_nu(x).
double bessel_k_scaled(double nu, double x);

}  // namespace critex
