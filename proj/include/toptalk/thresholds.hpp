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

#include <utility>
#include <vector>

#include "toptalk/combinatorics.hpp"
#include "toptalk/model.hpp"

namespace toptalk {

/// E[v(theta) | E] by Bayes over j, weights pi_j P(E | j).
Rational posterior_mean(const GameSpec& spec, const RationalVector& likelihood);

/// (E[v | theta_1 = 0], E[v | theta_1 = 1]).
std::pair<Rational, Rational> nu_bounds(const GameSpec& spec);

/// E[v | T_n^k = 0]. Accepts k = N, where it equals the lower nu bound for n = 1.
Rational lower_threshold(const GameSpec& spec, int k, int n);
/// E[v | (T_n^k, B_n^{N-k}) = (n∧k, 0)]. Accepts k = N.
Rational upper_threshold(const GameSpec& spec, int k, int n);

/// Closed price interval [lo, hi].
struct PriceInterval {
  Rational lo;
  Rational hi;

  bool contains(const Rational& p) const { return lo <= p && p <= hi; }
};

/// Prices at which the top-k equilibrium exists, 1 <= k <= N-1.
PriceInterval existence_interval(const GameSpec& spec, int k, int n);
bool top_k_exists(const GameSpec& spec, int k, int n);

struct ThresholdTable {
  int N = 0;
  int n = 1;
  std::vector<Rational> lower;  // lower[k-1], k = 1..N-1
  std::vector<Rational> upper;  // upper[k-1]
  Rational nu_lo;
  Rational nu_hi;

  const Rational& lower_at(int k) const { return lower.at(k - 1); }
  const Rational& upper_at(int k) const { return upper.at(k - 1); }
  /// Revenue grid with edge conventions: 0 -> nu_lo, N -> nu_hi.
  const Rational& price_grid(int k) const;
};

/// Assembles every threshold and checks the orderings. For n = 1:
///   v_0 = lower_1 < ... < lower_{N-1} < nu_lo < upper_1 < ... < upper_{N-1} < nu_hi.
/// For n >= 2: lower_k < upper_k, upper strictly increasing, and lower equal
/// to v_0 for k <= n (T_n^k = 0 then forces |theta| = 0) and strictly
/// increasing from k = n on. Throws InvariantViolation otherwise.
ThresholdTable threshold_table(const GameSpec& spec, int n);

}  // namespace toptalk
