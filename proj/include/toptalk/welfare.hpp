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

#include <Eigen/Core>

#include "toptalk/equilibrium.hpp"
#include "toptalk/model.hpp"
#include "toptalk/thresholds.hpp"

// Welfare results hold for the single-check game; every function here uses
// n = 1 regardless of spec.n.

namespace toptalk {

/// (x(q), y(q)) = (sum_j pi_j q_j, sum_j pi_j q_j v_j).
template <typename DerivedP, typename DerivedV, typename DerivedQ>
std::pair<typename DerivedQ::Scalar, typename DerivedQ::Scalar> payoff_point(
    const Eigen::MatrixBase<DerivedP>& pi, const Eigen::MatrixBase<DerivedV>& v,
    const Eigen::MatrixBase<DerivedQ>& q) {
  auto weighted = pi.cwiseProduct(q);
  return {weighted.sum(), weighted.dot(v)};
}

struct PayoffPoint {
  Rational x;
  Rational y;

  bool operator==(const PayoffPoint&) const = default;
};

PayoffPoint payoff_point(const GameSpec& spec, const RationalVector& q);

struct EnvelopeVertex {
  int k = 0;
  Rational x;
  Rational y;
};

/// Vertices (x(q^k), y(q^k)) for k = 0..N+1, i.e. from (1, E[v]) down to (0, 0).
std::vector<EnvelopeVertex> upper_envelope(const GameSpec& spec);

/// beta_k = (y_k - y_{k+1}) / (x_k - x_{k+1}), k = 0..N.
std::vector<Rational> envelope_slopes(const std::vector<EnvelopeVertex>& vertices);

/// Closed boundary of the payoff set: lower chain from (0,0) through the
/// partial sums of (pi_j, pi_j v_j), then the upper envelope back toward the
/// origin (the origin itself is not repeated).
std::vector<PayoffPoint> region_boundary(const GameSpec& spec);

struct RevenueValue {
  Rational value;
  PayoffPoint argmax;
};

/// Upper bound V(p) on sender revenue over all equilibria, as a function of
/// price. Kinks at pbar_0 = nu_lo, pbar_1..pbar_{N-1}, pbar_N = nu_hi;
/// on (pbar_k, pbar_{k+1}) with k <= N-2, V(p) = (p^2 x_N + p gamma_k) / (p - beta_k).
class RevenueCurve {
 public:
  explicit RevenueCurve(const GameSpec& spec);

  RevenueValue operator()(const Rational& price) const;

  int N() const { return N_; }
  const std::vector<Rational>& breakpoints() const { return breakpoints_; }
  const std::vector<EnvelopeVertex>& vertices() const { return vertices_; }
  const std::vector<Rational>& beta() const { return beta_; }
  const std::vector<Rational>& gamma() const { return gamma_; }

 private:
  int N_;
  std::vector<Rational> breakpoints_;  // pbar_0..pbar_N
  std::vector<EnvelopeVertex> vertices_;
  std::vector<Rational> beta_;   // beta_0..beta_N
  std::vector<Rational> gamma_;  // gamma_0..gamma_{N-2}
};

RevenueValue revenue_bound(const GameSpec& spec, const Rational& price);

struct OptimalPrice {
  int k_star = 0;
  Rational price;
  Rational revenue;
  std::vector<int> ties;  // every k attaining the maximum, ascending
};

/// Maximizes V over the kink grid pbar_0..pbar_N, ties to the smallest k.
/// With sweep_points > 0 the result is also checked against V on a rational
/// grid over (0, 2 nu_hi]; a grid point beating it throws InvariantViolation.
OptimalPrice optimal_price(const GameSpec& spec, int sweep_points = 0);

/// Sender revenue without communication: p below nu_lo, p x_N up to nu_hi, 0 above.
Rational no_communication_revenue(const GameSpec& spec, const Rational& price);

/// nu_lo < p <= pbar_{N-1} at the game's price.
bool benefits_from_communication(const GameSpec& spec);

enum class Verdict { Yes, Unknown };

struct OptimalityFlags {
  Verdict pareto_efficient = Verdict::Unknown;
  Verdict sender_optimal = Verdict::Unknown;
};

/// Sufficient conditions only: Pareto efficient when pbar_{k-1} <= p <= pbar_k,
/// sender-optimal when p = pbar_k. Throws InvalidArgument unless 1 <= k <= N-1
/// and the top-k equilibrium exists at the game's price.
OptimalityFlags pareto_and_optimality_flags(const GameSpec& spec, int k);

}  // namespace toptalk
