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

#include <algorithm>
#include <random>
#include <vector>

#include "toptalk/cli.hpp"
#include "toptalk/model.hpp"
#include "toptalk/rational.hpp"

namespace toptalk::testing {

inline GameSpec fig1() { return builtin_examples().at("fig1"); }

inline RationalVector vec(std::initializer_list<Rational> xs) {
  RationalVector out(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (const auto& x : xs) out(i++) = x;
  return out;
}

inline GameSpec uniform_linear(int N, int n = 1, Rational price = 1) {
  GameSpec spec;
  spec.N = N;
  spec.n = n;
  spec.price = price;
  spec.prior.pi = RationalVector::Constant(N + 1, Rational(1, N + 1));
  spec.utility.v = RationalVector(N + 1);
  for (int j = 0; j <= N; ++j) spec.utility.v(j) = j;
  return spec;
}

/// Full-support prior with integer weights in [1, 30]; v strictly increasing
/// with rational steps, v_0 >= min_v0.
inline GameSpec random_spec(std::mt19937_64& rng, int N, int n = 1, int min_v0 = 0) {
  std::uniform_int_distribution<int> weight(1, 30);
  std::uniform_int_distribution<int> step(1, 9);
  std::uniform_int_distribution<int> denom(1, 4);
  GameSpec spec;
  spec.N = N;
  spec.n = n;
  spec.prior.pi = RationalVector(N + 1);
  Rational total = 0;
  for (int j = 0; j <= N; ++j) {
    spec.prior.pi(j) = weight(rng);
    total += spec.prior.pi(j);
  }
  spec.prior.pi /= total;
  spec.utility.v = RationalVector(N + 1);
  spec.utility.v(0) = Rational(min_v0) + Rational(step(rng) - 1, denom(rng));
  for (int j = 1; j <= N; ++j) spec.utility.v(j) = spec.utility.v(j - 1) + Rational(step(rng), denom(rng));
  spec.price = spec.utility.v(N);
  return spec;
}

/// Uniform rational in (0, hi] on a 1/denominator lattice.
inline Rational random_price(std::mt19937_64& rng, const Rational& hi, long denominator = 100000) {
  std::uniform_int_distribution<long> tick(1, denominator);
  return hi * Rational(tick(rng), denominator);
}

/// V(p) from its definition: max p x over the upper envelope subject to
/// y - p x >= max(0, y_N - p x_N). Vertices come from q^k_j = min(j,k)/k,
/// written out here rather than taken from the library.
inline Rational revenue_oracle(const GameSpec& spec, const Rational& p) {
  const int N = spec.N;
  std::vector<Rational> xs;
  std::vector<Rational> ys;
  for (int k = 0; k <= N + 1; ++k) {
    Rational x = 0;
    Rational y = 0;
    for (int j = 0; j <= N; ++j) {
      Rational q = k == 0 ? Rational(1) : k == N + 1 ? Rational(0) : Rational(std::min(j, k), k);
      x += spec.pi(j) * q;
      y += spec.pi(j) * q * spec.v(j);
    }
    xs.push_back(x);
    ys.push_back(y);
  }
  const Rational floor = std::max(Rational(0), ys[N] - p * xs[N]);
  Rational best = 0;
  for (int k = 0; k <= N; ++k) {
    const Rational ga = ys[k] - p * xs[k];
    const Rational gb = ys[k + 1] - p * xs[k + 1];
    Rational lambda;
    if (ga >= floor) {
      lambda = 0;
    } else if (gb >= floor) {
      lambda = (floor - ga) / (gb - ga);
    } else {
      continue;
    }
    const Rational x = xs[k] + lambda * (xs[k + 1] - xs[k]);
    best = std::max(best, p * x);
  }
  return best;
}

}  // namespace toptalk::testing
