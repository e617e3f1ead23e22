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

#include "toptalk/welfare.hpp"

#include <string>

namespace toptalk {

PayoffPoint payoff_point(const GameSpec& spec, const RationalVector& q) {
  auto [x, y] = payoff_point(spec.prior.pi, spec.utility.v, q);
  return {x, y};
}

std::vector<EnvelopeVertex> upper_envelope(const GameSpec& spec) {
  std::vector<EnvelopeVertex> out;
  for (int k = 0; k <= spec.N + 1; ++k) {
    auto point = payoff_point(spec, top_k_buying_vector<Rational>(spec.N, k));
    out.push_back({k, point.x, point.y});
  }
  return out;
}

std::vector<Rational> envelope_slopes(const std::vector<EnvelopeVertex>& vertices) {
  std::vector<Rational> beta;
  for (std::size_t k = 0; k + 1 < vertices.size(); ++k) {
    beta.push_back((vertices[k].y - vertices[k + 1].y) / (vertices[k].x - vertices[k + 1].x));
  }
  return beta;
}

std::vector<PayoffPoint> region_boundary(const GameSpec& spec) {
  std::vector<PayoffPoint> out{{Rational(0), Rational(0)}};
  Rational x = 0;
  Rational y = 0;
  for (int j = 0; j <= spec.N; ++j) {
    x += spec.pi(j);
    y += spec.pi(j) * spec.v(j);
    out.push_back({x, y});
  }
  const auto envelope = upper_envelope(spec);
  for (int k = 1; k <= spec.N; ++k) out.push_back({envelope[k].x, envelope[k].y});
  return out;
}

RevenueCurve::RevenueCurve(const GameSpec& spec) : N_(spec.N) {
  const ThresholdTable table = threshold_table(spec, 1);
  for (int k = 0; k <= N_; ++k) breakpoints_.push_back(table.price_grid(k));
  vertices_ = upper_envelope(spec);
  beta_ = envelope_slopes(vertices_);
  const auto& tail = vertices_[N_];
  for (int k = 0; k + 2 <= N_; ++k) {
    gamma_.push_back(vertices_[k + 1].y - tail.y - beta_[k] * vertices_[k + 1].x);
  }
}

RevenueValue RevenueCurve::operator()(const Rational& p) const {
  auto at_vertex = [&](int k) {
    const auto& v = vertices_[k];
    return RevenueValue{p * v.x, {v.x, v.y}};
  };
  if (p <= breakpoints_[0]) return at_vertex(0);
  if (p < breakpoints_[N_ - 1]) {
    int k = 0;
    while (k + 1 <= N_ - 2 && breakpoints_[k + 1] < p) ++k;
    const auto& next = vertices_[k + 1];
    const Rational x = (p * vertices_[N_].x + gamma_[k]) / (p - beta_[k]);
    const Rational y = next.y + beta_[k] * (x - next.x);
    return {p * x, {x, y}};
  }
  if (p == breakpoints_[N_ - 1]) return at_vertex(N_ - 1);
  if (p <= breakpoints_[N_]) return at_vertex(N_);
  return at_vertex(N_ + 1);
}

RevenueValue revenue_bound(const GameSpec& spec, const Rational& price) {
  if (price <= 0) throw InvalidArgument("price must be positive");
  return RevenueCurve(spec)(price);
}

OptimalPrice optimal_price(const GameSpec& spec, int sweep_points) {
  const RevenueCurve curve(spec);
  OptimalPrice best;
  for (int k = 0; k <= spec.N; ++k) {
    const Rational& p = curve.breakpoints()[k];
    const Rational value = curve(p).value;
    if (k == 0 || value > best.revenue) {
      best = {k, p, value, {k}};
    } else if (value == best.revenue) {
      best.ties.push_back(k);
    }
  }
  if (sweep_points > 0) {
    const Rational top = 2 * curve.breakpoints()[spec.N];
    for (int i = 1; i <= sweep_points; ++i) {
      const Rational p = top * Rational(i, sweep_points);
      if (curve(p).value > best.revenue) {
        throw InvariantViolation("revenue bound at price " + to_string(p) + " exceeds the kink-grid optimum");
      }
    }
  }
  return best;
}

Rational no_communication_revenue(const GameSpec& spec, const Rational& price) {
  const auto [nu_lo, nu_hi] = nu_bounds(spec);
  if (price <= nu_lo) return price;
  if (price <= nu_hi) {
    return price * payoff_point(spec, top_k_buying_vector<Rational>(spec.N, spec.N)).x;
  }
  return 0;
}

bool benefits_from_communication(const GameSpec& spec) {
  const auto [nu_lo, nu_hi] = nu_bounds(spec);
  return nu_lo < spec.price && spec.price <= upper_threshold(spec, spec.N - 1, 1);
}

OptimalityFlags pareto_and_optimality_flags(const GameSpec& spec, int k) {
  if (k < 1 || k > spec.N - 1) throw InvalidArgument("k must lie in [1, N-1], got " + std::to_string(k));
  if (!top_k_exists(spec, k, 1)) {
    throw InvalidArgument("top-" + std::to_string(k) + " equilibrium does not exist at price " +
                          to_string(spec.price));
  }
  const Rational previous = k == 1 ? nu_bounds(spec).first : upper_threshold(spec, k - 1, 1);
  const Rational current = upper_threshold(spec, k, 1);
  OptimalityFlags flags;
  if (previous <= spec.price && spec.price <= current) flags.pareto_efficient = Verdict::Yes;
  if (spec.price == current) flags.sender_optimal = Verdict::Yes;
  return flags;
}

}  // namespace toptalk
