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

#include <compare>
#include <functional>
#include <stdexcept>
#include <vector>

#include "toptalk/model.hpp"
#include "toptalk/rational.hpp"

namespace toptalk {

/// a ∧ b. Every closed form here reads "a - b ∧ c" as a - (b ∧ c).
constexpr int meet(int a, int b) { return a < b ? a : b; }
constexpr int positive_part(int a) { return a > 0 ? a : 0; }

/// (t, b): good counts among the n∧k checked recommended attributes and the
/// n∧(N-k) checked unrecommended ones. On S(n,k) the product order is total
/// and agrees with the lexicographic order below.
struct SignalPoint {
  int t = 0;
  int b = 0;

  auto operator<=>(const SignalPoint&) const = default;
};

/// S(n,k) in increasing order:
/// (0,0), (1,0), ..., (n∧k, 0), (n∧k, 1), ..., (n∧k, n∧(N-k)).
/// Accepts 1 <= n <= N-1 and 1 <= k <= N (k = N has no unrecommended part).
std::vector<SignalPoint> support(int n, int k, int N);

/// f(t,b | j) for every j = 0..N and every (t,b) in S(n,k).
struct SignalLaw {
  int n = 0;
  int k = 0;
  int N = 0;
  std::vector<SignalPoint> points;
  RationalMatrix probs;  // (N+1) x |points|, row j is the law given |theta| = j

  int index_of(SignalPoint p) const;
  const Rational& at(int j, SignalPoint p) const { return probs(j, index_of(p)); }
  RationalVector likelihood(SignalPoint p) const { return probs.col(index_of(p)); }
  /// P(T = t | j), marginalizing b.
  RationalVector recommended_marginal(int t) const;
};

/// Closed-form hypergeometric law.
SignalLaw signal_law(int n, int k, int N);

/// Exhaustive oracle: all states with |theta| = j, every argmax k-subset with
/// equal weight, every pair of checked samples. Guarded by enumeration_cap().
SignalLaw brute_force_signal_law(int n, int k, int N);

/// Largest N accepted by enumeration routines. Default 12; the environment
/// variable TOPTALK_ENUM_CAP overrides it.
int enumeration_cap();

class EnumerationLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void require_enumerable(int N);

/// Calls fn(subset) for every subset of `universe` with exactly `size`
/// elements, in increasing numeric order.
void for_each_subset(Mask universe, int size, const std::function<void(Mask)>& fn);

/// P(E | |theta| = j) for j = 0..N.
struct LikelihoodVector {
  RationalVector probs;

  /// { j : P(E | j) > 0 }.
  std::vector<int> support() const;
};

LikelihoodVector point_event(const SignalLaw& law, SignalPoint p);
/// {T_n^k = 0}.
LikelihoodVector lower_event(const SignalLaw& law);
/// {(T_n^k, B_n^{N-k}) = (n∧k, 0)}.
LikelihoodVector upper_event(const SignalLaw& law);
/// {theta_1 = value}: P = (N-j)/N for value 0, j/N for value 1.
LikelihoodVector attribute_event(int N, int value);

enum class Favorability { StrictlyMore, WeaklyMoreNotStrict, Incomparable };

struct FavorabilityResult {
  Favorability order = Favorability::Incomparable;
  // supp E ∪ supp F is a single point, so the ratio is trivially constant.
  bool single_point_union = false;
};

/// Likelihood-ratio comparison: is P(E|j)/P(F|j) weakly increasing in j over
/// supp E ∪ supp F, with a/0 = ∞ for a > 0? Strict additionally needs the
/// ratio to be non-constant there.
FavorabilityResult favorability(const LikelihoodVector& e, const LikelihoodVector& f);

}  // namespace toptalk
