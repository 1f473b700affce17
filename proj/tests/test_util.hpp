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

#include <initializer_list>
#include <string>
#include <tuple>
#include <vector>

#include "critex/operator_model.hpp"

namespace critex::testing {

// (j, a, omega) with rationals as strings.
using TermText = std::tuple<int, std::string, std::string>;

inline OperatorSpec make_op(int n, int m, int ell, std::initializer_list<TermText> terms) {
  std::vector<OperatorTerm> list;
  for (const auto& [j, a, omega] : terms) {
    list.push_back({j, Rational::parse(a), Rational::parse(omega)});
  }
  return OperatorSpec::create(n, m, ell, std::move(list));
}

inline OperatorSpec make_op(int n, int m, int ell, const std::vector<OperatorTerm>& terms) {
  return OperatorSpec::create(n, m, ell, terms);
}

}  // namespace critex::testing
