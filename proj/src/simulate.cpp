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

#include "toptalk/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <thread>

#include "toptalk/combinatorics.hpp"
#include "toptalk/thresholds.hpp"
#include "toptalk/welfare.hpp"

namespace toptalk {

namespace {

constexpr std::uint32_t kMul0 = 0xD2511F53;
constexpr std::uint32_t kMul1 = 0xCD9E8D57;
constexpr std::uint32_t kWeyl0 = 0x9E3779B9;
constexpr std::uint32_t kWeyl1 = 0xBB67AE85;

void mulhilo(std::uint32_t a, std::uint32_t b, std::uint32_t& hi, std::uint32_t& lo) {
  const std::uint64_t product = static_cast<std::uint64_t>(a) * b;
  hi = static_cast<std::uint32_t>(product >> 32);
  lo = static_cast<std::uint32_t>(product);
}

void check_k_interior(const GameSpec& spec, int k) {
  if (k < 1 || k > spec.N - 1) throw InvalidArgument("k must lie in [1, N-1], got " + std::to_string(k));
}

struct EnumeratedState {
  Mask theta;
  Rational probability;
  Rational surplus;  // v_{|theta|} - p
  std::map<Mask, Rational> messages;
};

std::vector<EnumeratedState> enumerate_states(const GameSpec& spec, int k) {
  require_enumerable(spec.N);
  std::vector<EnumeratedState> states;
  const Mask all = full_mask(spec.N);
  for (Mask theta = 0;; ++theta) {
    EnumeratedState s;
    s.theta = theta;
    s.probability = state_probability(spec, theta);
    s.surplus = spec.v(popcount(theta)) - spec.price;
    s.messages = tie_break_weights(State::from_mask(theta, spec.N), k);
    states.push_back(std::move(s));
    if (theta == all) break;
  }
  return states;
}

struct MessageEvaluation {
  Rational best_deviation;
  std::vector<Rational> threshold_values;  // index t = 1..n∧k, slot 0 unused
};

// Receiver values after message `a`, weighted by P(theta, a).
MessageEvaluation evaluate_message(const GameSpec& spec, int k, int n, Mask a,
                                   const std::vector<EnumeratedState>& states) {
  std::vector<Rational> weighted(states.size());
  for (std::size_t i = 0; i < states.size(); ++i) {
    auto it = states[i].messages.find(a);
    weighted[i] = it == states[i].messages.end() ? Rational(0)
                                                  : states[i].probability * it->second * states[i].surplus;
  }

  MessageEvaluation out;
  bool first = true;
  for_each_subset(full_mask(spec.N), n, [&](Mask checked) {
    std::map<Mask, Rational> by_observation;
    for (std::size_t i = 0; i < states.size(); ++i) {
      if (weighted[i] != 0) by_observation[states[i].theta & checked] += weighted[i];
    }
    Rational value = 0;
    for (const auto& [bits, sum] : by_observation) {
      if (sum > 0) value += sum;
    }
    if (first || value > out.best_deviation) out.best_deviation = value;
    first = false;
  });

  const int sample = meet(n, k);
  std::vector<Rational> by_count(sample + 1, Rational(0));
  long subsets = 0;
  for_each_subset(a, sample, [&](Mask checked) {
    ++subsets;
    for (std::size_t i = 0; i < states.size(); ++i) {
      if (weighted[i] != 0) by_count[popcount(states[i].theta & checked)] += weighted[i];
    }
  });
  out.threshold_values.assign(sample + 1, Rational(0));
  Rational tail = 0;
  for (int t = sample; t >= 1; --t) {
    tail += by_count[t];
    out.threshold_values[t] = tail / Rational(subsets);
  }
  return out;
}

// P(at least t good among a uniform (n∧k)-subset of a), by enumeration.
Rational buy_probability(Mask theta, Mask a, int sample, int threshold) {
  long hits = 0;
  long total = 0;
  for_each_subset(a, sample, [&](Mask checked) {
    ++total;
    if (popcount(theta & checked) >= threshold) ++hits;
  });
  return Rational(hits, total);
}

}  // namespace

Philox4x32::Philox4x32(std::uint64_t seed, std::uint64_t stream)
    : key_{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)},
      counter_{0, 0, static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)} {}

Philox4x32::Block Philox4x32::generate(Block ctr, Key key) {
  for (int round = 0; round < 10; ++round) {
    if (round > 0) {
      key[0] += kWeyl0;
      key[1] += kWeyl1;
    }
    std::uint32_t hi0, lo0, hi1, lo1;
    mulhilo(kMul0, ctr[0], hi0, lo0);
    mulhilo(kMul1, ctr[2], hi1, lo1);
    ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
  }
  return ctr;
}

Philox4x32::result_type Philox4x32::operator()() {
  if (next_ == 4) {
    buffer_ = generate(counter_, key_);
    if (++counter_[0] == 0) ++counter_[1];
    next_ = 0;
  }
  return buffer_[next_++];
}

StateSampler::StateSampler(const CountPrior& prior) : N_(static_cast<int>(prior.pi.size()) - 1) {
  if (N_ < 1 || N_ > 31) throw InvalidArgument("sampler supports 1 <= N <= 31");
  std::vector<double> weights;
  for (Eigen::Index j = 0; j < prior.pi.size(); ++j) weights.push_back(to_double(prior.pi(j)));
  count_ = std::discrete_distribution<int>(weights.begin(), weights.end());
}

int top_k_buy_threshold(const GameSpec& spec, int k, int n) {
  if (k < 1 || k > spec.N) throw InvalidArgument("k must lie in [1, N], got " + std::to_string(k));
  const SignalLaw law = signal_law(n, k, spec.N);
  RationalVector surplus(spec.N + 1);
  for (int j = 0; j <= spec.N; ++j) surplus(j) = spec.pi(j) * (spec.v(j) - spec.price);

  int best = 1;
  Rational best_value;
  RationalVector tail = RationalVector::Zero(spec.N + 1);
  for (int t = meet(n, k); t >= 1; --t) {
    tail += law.recommended_marginal(t);
    const Rational value = surplus.dot(tail);
    if (t == meet(n, k) || value >= best_value) {
      best = t;
      best_value = value;
    }
  }
  return best;
}

RationalVector exact_play_vector(const GameSpec& spec, int k, int n, int buy_threshold) {
  if (k < 0 || k > spec.N) throw InvalidArgument("k must lie in [0, N], got " + std::to_string(k));
  if (k == 0) return RationalVector::Ones(spec.N + 1);
  const SignalLaw law = signal_law(n, k, spec.N);
  RationalVector q = RationalVector::Zero(spec.N + 1);
  for (int t = std::max(buy_threshold, 0); t <= meet(n, k); ++t) q += law.recommended_marginal(t);
  return q;
}

PlayStats play_top_k(const GameSpec& spec, int k, const SimConfig& sim, int n, int buy_threshold) {
  if (k < 0 || k > spec.N) throw InvalidArgument("k must lie in [0, N], got " + std::to_string(k));
  if (sim.trials < 1) throw InvalidArgument("trials must be at least 1");
  const int N = spec.N;
  const int sample = k == 0 ? 0 : meet(n, k);
  const StateSampler sampler(spec.prior);

  const unsigned workers = std::max(1U, sim.workers);
  std::vector<std::vector<std::uint64_t>> trials(workers, std::vector<std::uint64_t>(N + 1, 0));
  std::vector<std::vector<std::uint64_t>> buys(workers, std::vector<std::uint64_t>(N + 1, 0));

  auto run = [&](unsigned w, std::uint64_t begin, std::uint64_t end) {
    for (std::uint64_t trial = begin; trial < end; ++trial) {
      Philox4x32 rng(sim.seed, trial);
      const Mask theta = sampler(rng);
      const int j = popcount(theta);
      bool buy = true;
      if (k > 0) {
        std::array<int, 32> good;
        std::array<int, 32> bad;
        int g = 0;
        int b = 0;
        for (int i = 0; i < N; ++i) ((theta >> i) & 1U ? good[g++] : bad[b++]) = i;
        // Top-k set: k random good attributes, or all good plus random bad ones.
        std::array<int, 32> chosen;
        int size = 0;
        auto draw = [&](std::array<int, 32>& pool, int pool_size, int count) {
          for (int i = 0; i < count; ++i) {
            std::uniform_int_distribution<int> pick(i, pool_size - 1);
            std::swap(pool[i], pool[pick(rng)]);
            chosen[size++] = pool[i];
          }
        };
        if (j >= k) {
          draw(good, g, k);
        } else {
          for (int i = 0; i < g; ++i) chosen[size++] = good[i];
          draw(bad, b, k - j);
        }
        int seen_good = 0;
        for (int i = 0; i < sample; ++i) {
          std::uniform_int_distribution<int> pick(i, size - 1);
          std::swap(chosen[i], chosen[pick(rng)]);
          seen_good += (theta >> chosen[i]) & 1U;
        }
        buy = seen_good >= buy_threshold;
      }
      ++trials[w][j];
      if (buy) ++buys[w][j];
    }
  };

  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    const std::uint64_t begin = sim.trials * w / workers;
    const std::uint64_t end = sim.trials * (w + 1) / workers;
    if (workers == 1) {
      run(w, begin, end);
    } else {
      pool.emplace_back(run, w, begin, end);
    }
  }
  for (auto& t : pool) t.join();

  PlayStats stats;
  for (int j = 0; j <= N; ++j) {
    StratumStats s;
    s.j = j;
    for (unsigned w = 0; w < workers; ++w) {
      s.trials += trials[w][j];
      s.buys += buys[w][j];
    }
    if (s.trials > 0) {
      s.frequency = static_cast<double>(s.buys) / static_cast<double>(s.trials);
      s.standard_error = std::sqrt(s.frequency * (1.0 - s.frequency) / static_cast<double>(s.trials));
    }
    stats.trials += s.trials;
    stats.buys += s.buys;
    stats.strata.push_back(s);
  }
  return stats;
}

MessagingRule top_k_messaging(int N, int k) {
  return [N, k](Mask theta) { return tie_break_weights(State::from_mask(theta, N), k); };
}

MessagingRule fixed_message(Mask message) {
  return [message](Mask) { return std::map<Mask, Rational>{{message, Rational(1)}}; };
}

ReceiverAnalysis analyze_receiver(const GameSpec& spec, int k, int n) {
  check_k_interior(spec, k);
  if (n < 1 || n > spec.N - 1) throw InvalidArgument("n must lie in [1, N-1], got " + std::to_string(n));
  const auto states = enumerate_states(spec, k);

  const Mask first = (Mask{1} << k) - 1;
  const Mask last = first << (spec.N - k);
  const MessageEvaluation rep = evaluate_message(spec, k, n, first, states);
  if (last != first) {
    const MessageEvaluation other = evaluate_message(spec, k, n, last, states);
    if (other.best_deviation != rep.best_deviation || other.threshold_values != rep.threshold_values) {
      throw InvariantViolation("on-path messages are not symmetric");
    }
  }

  ReceiverAnalysis out;
  Rational best_value = rep.threshold_values[1];
  for (int t = 2; t < static_cast<int>(rep.threshold_values.size()); ++t) {
    if (rep.threshold_values[t] > best_value) {
      best_value = rep.threshold_values[t];
      out.profile_threshold = t;
    }
  }
  const Rational messages(binomial(spec.N, k));
  out.equilibrium_value = messages * best_value;
  out.best_deviation_value = messages * rep.best_deviation;
  out.regret = out.best_deviation_value - out.equilibrium_value;
  return out;
}

Rational receiver_regret_exact(const GameSpec& spec, int k, int n) { return analyze_receiver(spec, k, n).regret; }

Rational sender_regret_exact(const GameSpec& spec, int k, int n, const MessagingRule& rule,
                             int profile_threshold) {
  check_k_interior(spec, k);
  require_enumerable(spec.N);
  const int sample = meet(n, k);
  std::vector<Mask> messages;
  for_each_subset(full_mask(spec.N), k, [&](Mask a) { messages.push_back(a); });

  // Only |theta_A| matters for the buying probability; enumerate once per count.
  const Mask reference = messages.front();
  std::vector<Rational> by_good(k + 1);
  for (int g = 0; g <= k; ++g) by_good[g] = buy_probability((Mask{1} << g) - 1, reference, sample, profile_threshold);

  Rational regret = 0;
  const Mask all = full_mask(spec.N);
  for (Mask theta = 0;; ++theta) {
    std::map<Mask, Rational> buy;
    Rational best = 0;
    for (Mask a : messages) {
      const Rational& b = by_good[popcount(theta & a)];
      buy.emplace(a, b);
      if (b > best) best = b;
    }
    Rational played = 0;
    for (const auto& [message, weight] : rule(theta)) {
      auto it = buy.find(message);
      // Anything outside P_k is read as the smallest k-subset.
      played += weight * (it != buy.end() ? it->second : buy.at(messages.front()));
    }
    regret += state_probability(spec, theta) * (best - played);
    if (theta == all) break;
  }
  return regret;
}

Rational sender_regret_exact(const GameSpec& spec, int k, int n) {
  const int threshold = analyze_receiver(spec, k, n).profile_threshold;
  return sender_regret_exact(spec, k, n, top_k_messaging(spec.N, k), threshold);
}

EquilibriumReport verify_equilibrium(const GameSpec& spec, int k, int n, const SimConfig& sim) {
  check_k_interior(spec, k);
  EquilibriumReport report;
  report.k = k;
  report.n = n;
  report.price = spec.price;
  report.analytic_exists = top_k_exists(spec, k, n);

  const ReceiverAnalysis receiver = analyze_receiver(spec, k, n);
  report.profile_threshold = receiver.profile_threshold;
  if (top_k_buy_threshold(spec, k, n) != receiver.profile_threshold) {
    throw InvariantViolation("closed-form buy threshold disagrees with enumeration");
  }
  report.receiver_regret = receiver.regret;
  report.sender_regret =
      sender_regret_exact(spec, k, n, top_k_messaging(spec.N, k), receiver.profile_threshold);

  report.exact_buying_vector = exact_play_vector(spec, k, n, receiver.profile_threshold);
  report.monte_carlo = play_top_k(spec, k, sim, n, receiver.profile_threshold);

  const PayoffPoint point = payoff_point(spec, report.exact_buying_vector);
  report.sender_payoff = spec.price * point.x;
  report.receiver_payoff = point.y - spec.price * point.x;

  const bool certified = report.sender_regret == 0 && report.receiver_regret == 0;
  report.critical_mismatch = certified != report.analytic_exists;
  return report;
}

}  // namespace toptalk
