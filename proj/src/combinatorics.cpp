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

#include "toptalk/combinatorics.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <optional>
#include <string>

namespace toptalk {

namespace {

void check_nk(int n, int k, int N) {
  if (N < 2) throw InvalidArgument("N must be at least 2");
  if (n < 1 || n > N - 1) throw InvalidArgument("n must lie in [1, N-1], got " + std::to_string(n));
  if (k < 1 || k > N) throw InvalidArgument("k must lie in [1, N], got " + std::to_string(k));
}

Rational choose_ratio(const Integer& num, const Integer& den) {
  return Rational(num) / Rational(den);
}

// Ratio P(E|j)/P(F|j) on supp E ∪ supp F; nullopt encodes a/0 = ∞.
using ExtendedRatio = std::optional<Rational>;

// -1, 0, +1 for a < b, a == b, a > b with ∞ as the top element.
int compare(const ExtendedRatio& a, const ExtendedRatio& b) {
  if (!a && !b) return 0;
  if (!a) return 1;
  if (!b) return -1;
  if (*a < *b) return -1;
  if (*b < *a) return 1;
  return 0;
}

}  // namespace

std::vector<SignalPoint> support(int n, int k, int N) {
  check_nk(n, k, N);
  const int top = meet(n, k);
  const int bottom = meet(n, N - k);
  std::vector<SignalPoint> points;
  for (int t = 0; t <= top; ++t) points.push_back({t, 0});
  for (int b = 1; b <= bottom; ++b) points.push_back({top, b});
  return points;
}

int SignalLaw::index_of(SignalPoint p) const {
  auto it = std::lower_bound(points.begin(), points.end(), p);
  if (it == points.end() || *it != p) {
    throw InvalidArgument("(" + std::to_string(p.t) + "," + std::to_string(p.b) + ") is not in S(n,k)");
  }
  return static_cast<int>(it - points.begin());
}

RationalVector SignalLaw::recommended_marginal(int t) const {
  RationalVector out = RationalVector::Zero(N + 1);
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (points[i].t == t) out += probs.col(static_cast<Eigen::Index>(i));
  }
  return out;
}

SignalLaw signal_law(int n, int k, int N) {
  SignalLaw law;
  law.n = n;
  law.k = k;
  law.N = N;
  law.points = support(n, k, N);
  law.probs = RationalMatrix::Zero(N + 1, static_cast<Eigen::Index>(law.points.size()));

  const int top = meet(n, k);
  const int bottom = meet(n, N - k);
  // C(0,0) = 1 covers k = N, where nothing is unrecommended.
  const Integer top_samples = binomial(k, top);
  const Integer bottom_samples = binomial(N - k, bottom);

  for (int j = 0; j <= N; ++j) {
    const int good_top = meet(j, k);
    const int bad_bottom = meet(N - j, N - k);
    for (std::size_t i = 0; i < law.points.size(); ++i) {
      const auto [t, b] = law.points[i];
      Rational value = 0;
      if (b == 0 && t < top) {
        if (t <= j && j <= k - top + t) {
          value = choose_ratio(binomial(good_top, t) * binomial(k - good_top, top - t) *
                                   binomial(bad_bottom, bottom),
                               top_samples * bottom_samples);
        }
      } else if (b == 0) {
        if (top <= j && j <= N - bottom) {
          value = choose_ratio(binomial(good_top, top) * binomial(bad_bottom, bottom),
                               top_samples * bottom_samples);
        }
      } else {
        if (k + b <= j && j <= N - bottom + b) {
          value = choose_ratio(binomial(j - k, b) * binomial(bad_bottom, bottom - b), bottom_samples);
        }
      }
      law.probs(j, static_cast<Eigen::Index>(i)) = value;
    }
  }
  return law;
}

int enumeration_cap() {
  if (const char* env = std::getenv("TOPTALK_ENUM_CAP")) {
    char* end = nullptr;
    long cap = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && cap > 0 && cap <= 30) return static_cast<int>(cap);
  }
  return 12;
}

void require_enumerable(int N) {
  const int cap = enumeration_cap();
  if (N > cap) {
    throw EnumerationLimitError("N = " + std::to_string(N) + " exceeds the enumeration cap " +
                                std::to_string(cap) + " (set TOPTALK_ENUM_CAP to raise it)");
  }
}

void for_each_subset(Mask universe, int size, const std::function<void(Mask)>& fn) {
  if (size < 0 || size > popcount(universe)) return;
  if (size == 0) {
    fn(0);
    return;
  }
  // Submask walk in decreasing order, collected then replayed ascending so
  // callers see a stable order.
  std::vector<Mask> found;
  for (Mask s = universe;; s = (s - 1) & universe) {
    if (popcount(s) == size) found.push_back(s);
    if (s == 0) break;
  }
  for (auto it = found.rbegin(); it != found.rend(); ++it) fn(*it);
}

SignalLaw brute_force_signal_law(int n, int k, int N) {
  check_nk(n, k, N);
  require_enumerable(N);

  SignalLaw law;
  law.n = n;
  law.k = k;
  law.N = N;
  law.points = support(n, k, N);
  law.probs = RationalMatrix::Zero(N + 1, static_cast<Eigen::Index>(law.points.size()));

  const Mask all = full_mask(N);
  const int top = meet(n, k);
  const int bottom = meet(n, N - k);

  std::vector<Mask> messages;
  for_each_subset(all, k, [&](Mask a) { messages.push_back(a); });

  for (Mask theta = 0; theta <= all; ++theta) {
    const int j = popcount(theta);
    int best = -1;
    std::vector<Mask> argmax;
    for (Mask a : messages) {
      const int good = popcount(theta & a);
      if (good > best) {
        best = good;
        argmax.clear();
      }
      if (good == best) argmax.push_back(a);
    }

    // Integer tallies for this state, then one exact division.
    std::map<SignalPoint, long> tally;
    long samples = 0;
    for (Mask a : argmax) {
      for_each_subset(a, top, [&](Mask checked_top) {
        for_each_subset(all & ~a, bottom, [&](Mask checked_bottom) {
          ++tally[{popcount(theta & checked_top), popcount(theta & checked_bottom)}];
          ++samples;
        });
      });
    }
    const Rational state_weight = Rational(1) / Rational(binomial(N, j));
    for (const auto& [point, count] : tally) {
      law.probs(j, law.index_of(point)) += state_weight * Rational(count, samples);
    }
    if (theta == all) break;
  }
  return law;
}

std::vector<int> LikelihoodVector::support() const {
  std::vector<int> out;
  for (Eigen::Index j = 0; j < probs.size(); ++j) {
    if (probs(j) > 0) out.push_back(static_cast<int>(j));
  }
  return out;
}

LikelihoodVector point_event(const SignalLaw& law, SignalPoint p) { return {law.likelihood(p)}; }

LikelihoodVector lower_event(const SignalLaw& law) { return {law.recommended_marginal(0)}; }

LikelihoodVector upper_event(const SignalLaw& law) {
  return {law.likelihood({meet(law.n, law.k), 0})};
}

LikelihoodVector attribute_event(int N, int value) {
  RationalVector probs(N + 1);
  for (int j = 0; j <= N; ++j) probs(j) = value ? Rational(j, N) : Rational(N - j, N);
  return {probs};
}

FavorabilityResult favorability(const LikelihoodVector& e, const LikelihoodVector& f) {
  if (e.probs.size() != f.probs.size()) throw InvalidArgument("events over different N");
  if (e.support().empty() || f.support().empty()) {
    throw InvalidArgument("favorability needs events with positive probability");
  }

  std::vector<ExtendedRatio> ratios;
  for (Eigen::Index j = 0; j < e.probs.size(); ++j) {
    const Rational& a = e.probs(j);
    const Rational& b = f.probs(j);
    if (a == 0 && b == 0) continue;  // outside the union
    if (b == 0) {
      ratios.emplace_back(std::nullopt);
    } else {
      ratios.emplace_back(a / b);
    }
  }

  FavorabilityResult result;
  result.single_point_union = ratios.size() == 1;
  bool increasing = true;
  bool constant = true;
  for (std::size_t i = 1; i < ratios.size(); ++i) {
    int c = compare(ratios[i - 1], ratios[i]);
    if (c > 0) increasing = false;
    if (c != 0) constant = false;
  }
  if (!increasing) {
    result.order = Favorability::Incomparable;
  } else if (constant) {
    result.order = Favorability::WeaklyMoreNotStrict;
  } else {
    result.order = Favorability::StrictlyMore;
  }
  return result;
}

}  // namespace toptalk
