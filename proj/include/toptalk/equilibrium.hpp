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

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "toptalk/combinatorics.hpp"
#include "toptalk/model.hpp"
#include "toptalk/rational.hpp"

namespace toptalk {

/// q[j] = buying probability given |theta| = j.
template <typename Scalar>
using BuyingVector = Vector<Scalar>;

/// q^k: (j∧k)/k for 1 <= k <= N, all ones for k = 0, all zeros for k = N+1.
template <typename Scalar = Rational>
BuyingVector<Scalar> top_k_buying_vector(int N, int k) {
  if (k < 0 || k > N + 1) throw InvalidArgument("k must lie in [0, N+1], got " + std::to_string(k));
  BuyingVector<Scalar> q(N + 1);
  for (int j = 0; j <= N; ++j) {
    if (k == 0) {
      q(j) = Scalar(1);
    } else if (k == N + 1) {
      q(j) = Scalar(0);
    } else {
      q(j) = Scalar(meet(j, k)) / Scalar(k);
    }
  }
  return q;
}

/// Membership in Q: q in [0,1]^{N+1} and j q_{j-1} >= (j-1) q_j for j = 1..N.
template <typename Derived>
bool polytope_contains(const Eigen::MatrixBase<Derived>& q) {
  using Scalar = typename Derived::Scalar;
  const Eigen::Index size = q.size();
  for (Eigen::Index j = 0; j < size; ++j) {
    if (q(j) < Scalar(0) || q(j) > Scalar(1)) return false;
  }
  for (Eigen::Index j = 1; j < size; ++j) {
    if (Scalar(j) * q(j - 1) < Scalar(j - 1) * q(j)) return false;
  }
  return true;
}

/// Indices j in 1..N where j q_{j-1} = (j-1) q_j holds with equality.
template <typename Derived>
std::vector<int> tight_constraints(const Eigen::MatrixBase<Derived>& q) {
  using Scalar = typename Derived::Scalar;
  std::vector<int> out;
  for (Eigen::Index j = 1; j < q.size(); ++j) {
    if (Scalar(j) * q(j - 1) == Scalar(j - 1) * q(j)) out.push_back(static_cast<int>(j));
  }
  return out;
}

/// Delta^k: (j/k)[j <= k] for k >= 1, the unit vector e_0 for k = 0.
template <typename Scalar = Rational>
Vector<Scalar> delta_vector(int N, int k) {
  if (k < 0 || k > N) throw InvalidArgument("k must lie in [0, N], got " + std::to_string(k));
  Vector<Scalar> d = Vector<Scalar>::Zero(N + 1);
  if (k == 0) {
    d(0) = Scalar(1);
    return d;
  }
  for (int j = 0; j <= k; ++j) d(j) = Scalar(j) / Scalar(k);
  return d;
}

/// Coefficients c with q = sum_k c_k Delta^k:
/// c_k = q_k - k/(k+1) q_{k+1} for k < N, c_N = q_N.
/// Every c_k is nonnegative exactly when q satisfies the Q inequalities.
template <typename Derived>
Vector<typename Derived::Scalar> delta_decomposition(const Eigen::MatrixBase<Derived>& q) {
  using Scalar = typename Derived::Scalar;
  const int N = static_cast<int>(q.size()) - 1;
  Vector<Scalar> c(N + 1);
  for (int k = 0; k < N; ++k) c(k) = q(k) - Scalar(k) / Scalar(k + 1) * q(k + 1);
  c(N) = q(N);
  return c;
}

/// sum_k c_k Delta^k.
template <typename Derived>
Vector<typename Derived::Scalar> delta_reconstruct(const Eigen::MatrixBase<Derived>& c) {
  using Scalar = typename Derived::Scalar;
  const int N = static_cast<int>(c.size()) - 1;
  Vector<Scalar> q = Vector<Scalar>::Zero(N + 1);
  for (int k = 0; k <= N; ++k) q += c(k) * delta_vector<Scalar>(N, k);
  return q;
}

/// u(q, p) = sum_j pi_j q_j (v_j - p).
template <typename DerivedP, typename DerivedV, typename DerivedQ>
typename DerivedQ::Scalar receiver_utility(const Eigen::MatrixBase<DerivedP>& pi,
                                           const Eigen::MatrixBase<DerivedV>& v,
                                           const Eigen::MatrixBase<DerivedQ>& q,
                                           const typename DerivedQ::Scalar& price) {
  using Scalar = typename DerivedQ::Scalar;
  Vector<Scalar> surplus = v.array() - price;
  return pi.cwiseProduct(q).dot(surplus);
}

Rational receiver_utility(const GameSpec& spec, const RationalVector& q);

/// u_k(p) = sum_j pi_j Delta^k_j (v_j - p), evaluated at `price`.
Rational u_k(const GameSpec& spec, int k, const Rational& price);
/// u_k at the game's own price.
Rational u_k(const GameSpec& spec, int k);

/// Exact extreme-point test for Q: the active constraints (Q inequalities
/// and box bounds) at q must have full rank N+1.
bool is_extreme_point(const RationalVector& q);

/// Receiver buy rule over the sufficient statistic (T_n^k, B_n^{N-k}).
struct BuyRule {
  enum class Kind { Never, AtOrAbove, Always };

  Kind kind = Kind::Never;
  SignalPoint threshold;  // meaningful for AtOrAbove only

  bool operator==(const BuyRule&) const = default;
};

struct BestResponse {
  BuyRule rule;
  std::vector<SignalPoint> points;
  std::vector<Rational> posterior_means;  // E[v | (t,b)] along points
  bool indifferent = false;               // some E[v | (t,b)] equals the price
};

/// Best response of a receiver who observes (T_n^k, B_n^{N-k}), 1 <= k <= N-1.
/// Always only when E[v | (0,0)] > p. Otherwise the smallest point above
/// (0,0) with E[v | point] >= p, so indifference buys, except at (0,0)
/// where it resolves to the threshold (1,0). Never when no point qualifies.
BestResponse best_response(const GameSpec& spec, int k, int n);
BuyRule best_response_rule(const GameSpec& spec, int k, int n);

/// Uniform weights over argmax_{|A| = k} |theta_A|, 1 <= k <= N.
std::map<Mask, Rational> tie_break_weights(const State& theta, int k);

/// Top-k profile. For 1 <= k <= N-1 the sender names the k best attributes
/// and off-path messages are read as the lexicographically smallest k-subset.
/// k = 0 and k = N carry no message and check attribute 1.
struct TopKProfile {
  int N = 0;
  int k = 0;

  bool has_messages() const { return 0 < k && k < N; }
  Mask off_path_message() const { return (Mask{1} << k) - 1; }
  int canonical_check() const { return 0; }
  std::map<Mask, Rational> messages(Mask theta) const {
    return tie_break_weights(State::from_mask(theta, N), k);
  }
};

}  // namespace toptalk
