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

#include "toptalk/equilibrium.hpp"

#include <Eigen/LU>

#include "toptalk/thresholds.hpp"

namespace toptalk {

Rational receiver_utility(const GameSpec& spec, const RationalVector& q) {
  return receiver_utility(spec.prior.pi, spec.utility.v, q, spec.price);
}

Rational u_k(const GameSpec& spec, int k, const Rational& price) {
  return receiver_utility(spec.prior.pi, spec.utility.v, delta_vector<Rational>(spec.N, k), price);
}

Rational u_k(const GameSpec& spec, int k) { return u_k(spec, k, spec.price); }

bool is_extreme_point(const RationalVector& q) {
  if (!polytope_contains(q)) return false;
  const Eigen::Index dim = q.size();
  std::vector<RationalVector> rows;
  for (Eigen::Index j = 1; j < dim; ++j) {
    if (Rational(j) * q(j - 1) == Rational(j - 1) * q(j)) {
      RationalVector row = RationalVector::Zero(dim);
      row(j - 1) = Rational(j);
      row(j) = Rational(-(j - 1));
      rows.push_back(row);
    }
  }
  for (Eigen::Index j = 0; j < dim; ++j) {
    if (q(j) == 0 || q(j) == 1) {
      RationalVector row = RationalVector::Zero(dim);
      row(j) = 1;
      rows.push_back(row);
    }
  }
  if (static_cast<Eigen::Index>(rows.size()) < dim) return false;

  RationalMatrix active(static_cast<Eigen::Index>(rows.size()), dim);
  for (std::size_t r = 0; r < rows.size(); ++r) active.row(static_cast<Eigen::Index>(r)) = rows[r].transpose();
  Eigen::FullPivLU<RationalMatrix> lu(active);
  lu.setThreshold(Rational(0));  // exact arithmetic: any nonzero pivot counts
  return lu.rank() == dim;
}

BestResponse best_response(const GameSpec& spec, int k, int n) {
  if (k < 1 || k > spec.N - 1) throw InvalidArgument("k must lie in [1, N-1], got " + std::to_string(k));
  const SignalLaw law = signal_law(n, k, spec.N);

  BestResponse out;
  out.points = law.points;
  for (const auto& point : law.points) out.posterior_means.push_back(posterior_mean(spec, law.likelihood(point)));

  const Rational& p = spec.price;
  for (const auto& mean : out.posterior_means) out.indifferent = out.indifferent || mean == p;

  if (out.posterior_means.front() > p) {
    out.rule = {BuyRule::Kind::Always, {}};
    return out;
  }
  for (std::size_t i = 1; i < out.points.size(); ++i) {
    if (out.posterior_means[i] >= p) {
      out.rule = {BuyRule::Kind::AtOrAbove, out.points[i]};
      return out;
    }
  }
  out.rule = {BuyRule::Kind::Never, {}};
  return out;
}

BuyRule best_response_rule(const GameSpec& spec, int k, int n) { return best_response(spec, k, n).rule; }

std::map<Mask, Rational> tie_break_weights(const State& theta, int k) {
  const int N = theta.size();
  if (k < 1 || k > N) throw InvalidArgument("k must lie in [1, N], got " + std::to_string(k));
  const Mask bits = theta.mask();
  int best = -1;
  std::vector<Mask> argmax;
  for_each_subset(full_mask(N), k, [&](Mask a) {
    const int good = popcount(bits & a);
    if (good > best) {
      best = good;
      argmax.clear();
    }
    if (good == best) argmax.push_back(a);
  });
  std::map<Mask, Rational> weights;
  const Rational w(1, static_cast<long>(argmax.size()));
  for (Mask a : argmax) weights.emplace(a, w);
  return weights;
}

}  // namespace toptalk
