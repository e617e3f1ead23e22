// Copyright 2026 The TopTalk Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "toptalk/rational.hpp"

namespace toptalk {

/// Law of the number of good attributes: pi[j] = P(|theta| = j), j = 0..N.
/// The prior over states is exchangeable, so this vector determines it.
struct CountPrior {
  RationalVector pi;
};

/// Consumption utility by number of good attributes, v[j] for j = 0..N.
struct UtilityLevels {
  RationalVector v;
};

/// One problem instance. Plain value type; check it with validate().
struct GameSpec {
  int N = 0;  // attributes
  int n = 1;  // checking capacity
  Rational price;
  CountPrior prior;
  UtilityLevels utility;

  const Rational& pi(int j) const { return prior.pi(j); }
  const Rational& v(int j) const { return utility.v(j); }
};

GameSpec with_price(GameSpec spec, const Rational& price);

/// Attribute subsets and states are bitmasks over [N], bit i = attribute i+1.
using Mask = std::uint32_t;

inline int popcount(Mask m) { return __builtin_popcount(m); }
inline Mask full_mask(int N) { return N >= 32 ? ~Mask{0} : (Mask{1} << N) - 1; }

struct State {
  std::vector<std::uint8_t> bits;

  int size() const { return static_cast<int>(bits.size()); }
  int good_count() const;
  Mask mask() const;
  static State from_mask(Mask mask, int N);
};

/// P(theta) = pi_{|theta|} / C(N, |theta|).
Rational state_probability(const GameSpec& spec, Mask theta);

struct Violation {
  std::string field;
  std::string invariant;
};

struct ValidationResult {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  std::string summary() const;
};

ValidationResult validate(const GameSpec& spec);

/// Thrown by precondition checks on inputs a caller controls.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A proven ordering or equivalence failed; indicates a bug here,
/// never bad input.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace toptalk
