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

#include "support/fixtures.hpp"
#include "toptalk/welfare.hpp"

using namespace toptalk;
using namespace toptalk::testing;

TEST_CASE("envelope of the four-attribute example") {
  const auto env = upper_envelope(fig1());
  const std::vector<std::pair<Rational, Rational>> expected{{1, 2},
                                                            {Rational(4, 5), 2},
                                                            {Rational(7, 10), Rational(19, 10)},
                                                            {Rational(3, 5), Rational(26, 15)},
                                                            {Rational(1, 2), Rational(3, 2)},
                                                            {0, 0}};
  REQUIRE(env.size() == expected.size());
  for (std::size_t k = 0; k < env.size(); ++k) {
    CHECK(env[k].k == static_cast<int>(k));
    CHECK(env[k].x == expected[k].first);
    CHECK(env[k].y == expected[k].second);
  }
  CHECK(envelope_slopes(env) == std::vector<Rational>{0, 1, Rational(5, 3), Rational(7, 3), 3});
}

TEST_CASE("payoff region boundary") {
  const auto region = region_boundary(fig1());
  REQUIRE(region.size() == 10);
  CHECK(region.front() == PayoffPoint{0, 0});
  CHECK(region[2] == PayoffPoint{Rational(2, 5), Rational(1, 5)});
  CHECK(region[5] == PayoffPoint{1, 2});
  CHECK(region.back() == PayoffPoint{Rational(1, 2), Rational(3, 2)});
}

TEST_CASE("revenue curve matches the definition at random prices") {
  std::mt19937_64 rng(21);
  for (int N = 2; N <= 7; ++N) {
    for (int rep = 0; rep < 5; ++rep) {
      const GameSpec spec = random_spec(rng, N);
      const RevenueCurve curve(spec);
      const Rational top = 2 * curve.breakpoints().back();
      for (int i = 0; i < 200; ++i) {
        const Rational p = random_price(rng, top);
        CHECK(curve(p).value == revenue_oracle(spec, p));
      }
      for (int k = 0; k <= N; ++k) {
        const Rational& p = curve.breakpoints()[k];
        CHECK(curve(p).value == revenue_oracle(spec, p));
        // At a kink the bound is attained by the top-k vertex.
        CHECK(curve(p).value == p * curve.vertices()[k].x);
      }
    }
  }
}

TEST_CASE("revenue bound rejects non-positive prices") {
  CHECK_THROWS_AS(revenue_bound(fig1(), 0), InvalidArgument);
  CHECK(revenue_bound(fig1(), 2).value == Rational(7, 5));
}

TEST_CASE("optimal price for the two-attribute example") {
  GameSpec spec = builtin_examples().at("n2");
  OptimalPrice best = optimal_price(spec, 400);
  CHECK(best.k_star == 2);
  CHECK(best.price == Rational(5, 3));
  CHECK(best.revenue == Rational(5, 6));

  spec.prior.pi = vec({Rational(1, 4), Rational(1, 2), Rational(1, 4)});
  best = optimal_price(spec, 400);
  CHECK(best.k_star == 1);
  CHECK(best.ties == std::vector<int>{1, 2});
  CHECK(best.revenue == Rational(3, 4));
}

TEST_CASE("four-attribute example prefers no communication at the top price") {
  const OptimalPrice best = optimal_price(fig1(), 400);
  CHECK(best.k_star == 4);
  CHECK(best.price == 3);
  CHECK(best.revenue == Rational(3, 2));
}

TEST_CASE("no-communication revenue") {
  const GameSpec spec = fig1();
  CHECK(no_communication_revenue(spec, Rational(1, 2)) == Rational(1, 2));
  CHECK(no_communication_revenue(spec, 1) == 1);
  CHECK(no_communication_revenue(spec, 2) == 1);
  CHECK(no_communication_revenue(spec, 3) == Rational(3, 2));
  CHECK(no_communication_revenue(spec, 4) == 0);
}

TEST_CASE("benefit from communication on the example") {
  GameSpec spec = fig1();
  for (const auto& [p, expected] : std::vector<std::pair<Rational, bool>>{
           {Rational(1, 2), false}, {1, false}, {Rational(3, 2), true}, {Rational(7, 3), true}, {Rational(12, 5), false}}) {
    CAPTURE(p);
    CHECK(benefits_from_communication(with_price(spec, p)) == expected);
  }
}

TEST_CASE("Pareto and sender-optimality flags") {
  GameSpec spec = fig1();
  spec.price = 2;
  auto flags = pareto_and_optimality_flags(spec, 2);
  CHECK(flags.pareto_efficient == Verdict::Yes);
  CHECK(flags.sender_optimal == Verdict::Yes);

  spec.price = Rational(1, 2);
  flags = pareto_and_optimality_flags(spec, 2);
  CHECK(flags.pareto_efficient == Verdict::Unknown);
  CHECK(flags.sender_optimal == Verdict::Unknown);

  spec.price = Rational(5, 2);
  CHECK_THROWS_AS(pareto_and_optimality_flags(spec, 2), InvalidArgument);
}
