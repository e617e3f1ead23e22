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

#include <doctest.h>

#include <cmath>

#include "support/fixtures.hpp"
#include "toptalk/simulate.hpp"
#include "toptalk/thresholds.hpp"

using namespace toptalk;
using namespace toptalk::testing;

TEST_CASE("Philox4x32-10 known-answer vectors") {
  using B = Philox4x32::Block;
  CHECK(Philox4x32::generate({0, 0, 0, 0}, {0, 0}) == B{0x6627e8d5, 0xe169c58d, 0xbc57ac4c, 0x9b00dbd8});
  CHECK(Philox4x32::generate({0xffffffff, 0xffffffff, 0xffffffff, 0xffffffff}, {0xffffffff, 0xffffffff}) ==
        B{0x408f276d, 0x41c83b0e, 0xa20bc7c6, 0x6d5451fd});
  CHECK(Philox4x32::generate({0x243f6a88, 0x85a308d3, 0x13198a2e, 0x03707344}, {0xa4093822, 0x299f31d0}) ==
        B{0xd16cfe09, 0x94fdcceb, 0x5001e420, 0x24126ea1});
}

TEST_CASE("Philox streams are reproducible and distinct") {
  Philox4x32 a(42, 7);
  Philox4x32 b(42, 7);
  Philox4x32 c(42, 8);
  bool differs = false;
  for (int i = 0; i < 64; ++i) {
    const auto x = a();
    CHECK(x == b());
    differs = differs || x != c();
  }
  CHECK(differs);
}

TEST_CASE("state sampler follows the prior") {
  const GameSpec spec = fig1();
  const StateSampler sampler(spec.prior);
  std::vector<int> counts(5, 0);
  std::vector<int> first_good(5, 0);
  const int trials = 200000;
  for (int i = 0; i < trials; ++i) {
    Philox4x32 rng(1, static_cast<std::uint64_t>(i));
    const Mask theta = sampler(rng);
    ++counts[popcount(theta)];
    first_good[popcount(theta)] += theta & 1U;
  }
  for (int j = 0; j <= 4; ++j) {
    CHECK(std::abs(counts[j] / double(trials) - 0.2) < 0.006);
    // Exchangeability: attribute 1 is good with probability j / N.
    if (counts[j] > 0) CHECK(std::abs(first_good[j] / double(counts[j]) - j / 4.0) < 0.02);
  }
}

TEST_CASE("simulation does not depend on the worker count") {
  GameSpec spec = uniform_linear(6, 2, 2);
  const int t = top_k_buy_threshold(spec, 3, 2);
  const PlayStats one = play_top_k(spec, 3, {20000, 99, 1}, 2, t);
  const PlayStats many = play_top_k(spec, 3, {20000, 99, 7}, 2, t);
  for (int j = 0; j <= 6; ++j) {
    CHECK(one.strata[j].trials == many.strata[j].trials);
    CHECK(one.strata[j].buys == many.strata[j].buys);
  }
}

TEST_CASE("edge profiles") {
  const GameSpec spec = fig1();
  const PlayStats always = play_top_k(spec, 0, {5000, 1, 2});
  CHECK(always.buys == always.trials);
  CHECK(exact_play_vector(spec, 4) == vec({0, Rational(1, 4), Rational(1, 2), Rational(3, 4), 1}));
  const PlayStats none = play_top_k(spec, 4, {50000, 2, 2});
  for (const auto& s : none.strata) CHECK(std::abs(s.frequency - s.j / 4.0) < 0.02);
}

TEST_CASE("exact play vector with one check is q^k") {
  for (int N = 2; N <= 7; ++N) {
    for (int k = 1; k <= N; ++k) CHECK(exact_play_vector(uniform_linear(N), k) == top_k_buying_vector(N, k));
  }
}

TEST_CASE("regrets on the four-attribute example") {
  GameSpec spec = fig1();
  spec.price = 2;
  CHECK(receiver_regret_exact(spec, 2, 1) == 0);
  CHECK(sender_regret_exact(spec, 2, 1) == 0);
  spec.price = Rational(201, 100);
  CHECK(receiver_regret_exact(spec, 2, 1) > 0);
  spec.price = Rational(33, 100);
  CHECK(receiver_regret_exact(spec, 2, 1) > 0);
}

TEST_CASE("a sender who ignores the state has positive regret") {
  GameSpec spec = fig1();
  spec.price = 2;
  const Rational regret = sender_regret_exact(spec, 2, 1, fixed_message(0b0011), 1);
  CHECK(regret > 0);
  // The receiver checks one of attributes 1, 2; the sender could have shown
  // good ones. Lost buying probability, summed over states:
  // j = 1: 1/2 of states lose 1 (good attribute outside {1,2}), 1/2 lose 1/2.
  Rational expected = 0;
  for (Mask theta = 0; theta <= full_mask(4); ++theta) {
    const int j = popcount(theta);
    const Rational best(std::min(j, 2), 2);
    const Rational played(popcount(theta & 0b0011), 2);
    expected += state_probability(spec, theta) * (best - played);
  }
  CHECK(regret == expected);
}

TEST_CASE("closed-form buy threshold matches enumeration") {
  std::mt19937_64 rng(17);
  for (int N = 3; N <= 6; ++N) {
    const GameSpec base = random_spec(rng, N, 1, 1);
    for (int n = 2; n < N; ++n) {
      for (int k = 1; k < N; ++k) {
        const PriceInterval iv = existence_interval(base, k, n);
        for (const Rational& p : {iv.lo, (iv.lo + iv.hi) / 2, iv.hi}) {
          const GameSpec spec = with_price(base, p);
          CHECK(top_k_buy_threshold(spec, k, n) == analyze_receiver(spec, k, n).profile_threshold);
        }
      }
    }
  }
}

TEST_CASE("verify_equilibrium report") {
  GameSpec spec = fig1();
  spec.price = 2;
  const EquilibriumReport r = verify_equilibrium(spec, 2, 1, {100000, 7, 2});
  CHECK(r.analytic_exists);
  CHECK(r.sender_regret == 0);
  CHECK(r.receiver_regret == 0);
  CHECK_FALSE(r.critical_mismatch);
  CHECK(r.exact_buying_vector == top_k_buying_vector(4, 2));
  CHECK(r.sender_payoff == Rational(7, 5));
  CHECK(r.receiver_payoff == Rational(19, 10) - Rational(7, 5));
  CHECK(r.monte_carlo.trials == 100000);

  spec.price = 3;
  const EquilibriumReport off = verify_equilibrium(spec, 2, 1, {1000, 7, 1});
  CHECK_FALSE(off.analytic_exists);
  CHECK(off.receiver_regret > 0);
  CHECK_FALSE(off.critical_mismatch);
}
