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

#include "toptalk/thresholds.hpp"

#include <string>

namespace toptalk {

namespace {

void check_k(int k, int max_k) {
  if (k < 1 || k > max_k) {
    throw InvalidArgument("k must lie in [1, " + std::to_string(max_k) + "], got " + std::to_string(k));
  }
}

void expect(bool condition, const std::string& what) {
  if (!condition) throw InvariantViolation("threshold ordering violated: " + what);
}

}  // namespace

Rational posterior_mean(const GameSpec& spec, const RationalVector& likelihood) {
  RationalVector weights = spec.prior.pi.cwiseProduct(likelihood);
  Rational mass = weights.sum();
  if (mass == 0) throw InvalidArgument("conditioning event has zero probability");
  return weights.dot(spec.utility.v) / mass;
}

std::pair<Rational, Rational> nu_bounds(const GameSpec& spec) {
  return {posterior_mean(spec, attribute_event(spec.N, 0).probs),
          posterior_mean(spec, attribute_event(spec.N, 1).probs)};
}

Rational lower_threshold(const GameSpec& spec, int k, int n) {
  check_k(k, spec.N);
  return posterior_mean(spec, lower_event(signal_law(n, k, spec.N)).probs);
}

Rational upper_threshold(const GameSpec& spec, int k, int n) {
  check_k(k, spec.N);
  return posterior_mean(spec, upper_event(signal_law(n, k, spec.N)).probs);
}

PriceInterval existence_interval(const GameSpec& spec, int k, int n) {
  check_k(k, spec.N - 1);
  return {lower_threshold(spec, k, n), upper_threshold(spec, k, n)};
}

bool top_k_exists(const GameSpec& spec, int k, int n) {
  return existence_interval(spec, k, n).contains(spec.price);
}

const Rational& ThresholdTable::price_grid(int k) const {
  if (k == 0) return nu_lo;
  if (k == N) return nu_hi;
  return upper_at(k);
}

ThresholdTable threshold_table(const GameSpec& spec, int n) {
  ThresholdTable table;
  table.N = spec.N;
  table.n = n;
  for (int k = 1; k <= spec.N - 1; ++k) {
    const SignalLaw law = signal_law(n, k, spec.N);
    table.lower.push_back(posterior_mean(spec, lower_event(law).probs));
    table.upper.push_back(posterior_mean(spec, upper_event(law).probs));
  }
  std::tie(table.nu_lo, table.nu_hi) = nu_bounds(spec);

  const int K = spec.N - 1;
  expect(table.nu_lo < table.nu_hi, "nu_lo < nu_hi");
  for (int k = 1; k <= K; ++k) {
    expect(table.lower_at(k) < table.upper_at(k), "lower_k < upper_k at k=" + std::to_string(k));
  }
  for (int k = 1; k < K; ++k) {
    expect(table.upper_at(k) < table.upper_at(k + 1), "upper strictly increasing at k=" + std::to_string(k));
    if (k + 1 <= n) {
      expect(table.lower_at(k + 1) == spec.v(0), "lower_k = v_0 for k <= n at k=" + std::to_string(k + 1));
    } else {
      expect(table.lower_at(k) < table.lower_at(k + 1), "lower strictly increasing at k=" + std::to_string(k));
    }
  }
  expect(table.lower_at(1) == spec.v(0), "lower_1 = v_0");
  if (n == 1) {
    expect(table.lower_at(K) < table.nu_lo, "lower_{N-1} < nu_lo");
    expect(table.nu_lo < table.upper_at(1), "nu_lo < upper_1");
    expect(table.upper_at(K) < table.nu_hi, "upper_{N-1} < nu_hi");
  }
  return table;
}

}  // namespace toptalk
