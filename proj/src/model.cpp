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

#include "toptalk/model.hpp"

#include <sstream>

namespace toptalk {

GameSpec with_price(GameSpec spec, const Rational& price) {
  spec.price = price;
  return spec;
}

int State::good_count() const {
  int count = 0;
  for (auto b : bits) count += b ? 1 : 0;
  return count;
}

Mask State::mask() const {
  Mask m = 0;
  for (int i = 0; i < size(); ++i) {
    if (bits[i]) m |= Mask{1} << i;
  }
  return m;
}

State State::from_mask(Mask mask, int N) {
  State s;
  s.bits.resize(N);
  for (int i = 0; i < N; ++i) s.bits[i] = (mask >> i) & 1U;
  return s;
}

Rational state_probability(const GameSpec& spec, Mask theta) {
  int j = popcount(theta);
  return spec.pi(j) / Rational(binomial(spec.N, j));
}

std::string ValidationResult::summary() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < violations.size(); ++i) {
    if (i) os << "; ";
    os << violations[i].field << ": " << violations[i].invariant;
  }
  return os.str();
}

ValidationResult validate(const GameSpec& spec) {
  ValidationResult result;
  auto fail = [&](std::string field, std::string what) {
    result.violations.push_back({std::move(field), std::move(what)});
  };

  if (spec.N < 2) fail("N", "N >= 2");
  if (spec.n < 1 || spec.n > spec.N - 1) fail("n", "1 <= n <= N-1");
  if (spec.price <= 0) fail("price", "price > 0");

  const auto expected = static_cast<Eigen::Index>(spec.N) + 1;
  if (spec.N < 0 || spec.prior.pi.size() != expected) {
    fail("pi", "length N+1");
  } else {
    bool positive = true;
    for (Eigen::Index j = 0; j < expected; ++j) positive = positive && spec.prior.pi(j) > 0;
    if (!positive) fail("pi", "full support (every pi[j] > 0)");
    if (spec.prior.pi.sum() != 1) fail("pi", "sums to 1");
  }

  if (spec.N < 0 || spec.utility.v.size() != expected) {
    fail("v", "length N+1");
  } else {
    if (spec.utility.v(0) < 0) fail("v", "nonnegative (v[0] >= 0)");
    bool increasing = true;
    for (Eigen::Index j = 1; j < expected; ++j) {
      increasing = increasing && spec.utility.v(j - 1) < spec.utility.v(j);
    }
    if (!increasing) fail("v", "strictly increasing");
  }
  return result;
}

}  // namespace toptalk
