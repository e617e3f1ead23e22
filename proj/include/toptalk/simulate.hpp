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

#include <array>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <random>
#include <vector>

#include "toptalk/equilibrium.hpp"
#include "toptalk/model.hpp"

namespace toptalk {

/// Philox4x32-10 counter-based generator. The 64-bit seed is the key; the
/// stream id fills the upper half of the 128-bit counter, so every
/// (seed, stream) pair is an independent substream.
class Philox4x32 {
 public:
  using result_type = std::uint32_t;
  using Block = std::array<std::uint32_t, 4>;
  using Key = std::array<std::uint32_t, 2>;

  Philox4x32(std::uint64_t seed, std::uint64_t stream);

  static Block generate(Block counter, Key key);

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }
  result_type operator()();

 private:
  Key key_;
  Block counter_;
  Block buffer_{};
  int next_ = 4;
};

struct SimConfig {
  std::uint64_t trials = 100000;
  std::uint64_t seed = 0;
  unsigned workers = 1;
};

/// Draws |theta| = j with probability pi_j, then places j good attributes
/// uniformly among the N positions.
class StateSampler {
 public:
  explicit StateSampler(const CountPrior& prior);

  template <typename Rng>
  Mask operator()(Rng& rng) const {
    const int j = count_(rng);
    std::array<int, 32> positions;
    for (int i = 0; i < N_; ++i) positions[i] = i;
    Mask theta = 0;
    for (int i = 0; i < j; ++i) {
      std::uniform_int_distribution<int> pick(i, N_ - 1);
      std::swap(positions[i], positions[pick(rng)]);
      theta |= Mask{1} << positions[i];
    }
    return theta;
  }

  int N() const { return N_; }

 private:
  int N_;
  mutable std::discrete_distribution<int> count_;
};

template <typename Rng>
State sample_state(const CountPrior& prior, Rng& rng) {
  StateSampler sampler(prior);
  const Mask theta = sampler(rng);
  return State::from_mask(theta, static_cast<int>(prior.pi.size()) - 1);
}

struct StratumStats {
  int j = 0;
  std::uint64_t trials = 0;
  std::uint64_t buys = 0;
  double frequency = 0.0;
  double standard_error = 0.0;  // sqrt(f (1 - f) / trials)
};

struct PlayStats {
  std::vector<StratumStats> strata;  // j = 0..N
  std::uint64_t trials = 0;
  std::uint64_t buys = 0;

  double buy_rate() const { return trials ? static_cast<double>(buys) / static_cast<double>(trials) : 0.0; }
};

/// Receiver's buy threshold under the top-k profile: the t in 1..n∧k that
/// maximizes sum_j pi_j (v_j - p) P(T >= t | j), smallest on ties. Closed
/// form, no enumeration. 1 <= k <= N.
int top_k_buy_threshold(const GameSpec& spec, int k, int n);

/// Exact counterpart of play_top_k: P(buy | |theta| = j) for j = 0..N.
RationalVector exact_play_vector(const GameSpec& spec, int k, int n = 1, int buy_threshold = 1);

/// Plays the top-k profile forward. k = 0: always buy. 1 <= k <= N: the
/// sender names a uniformly tie-broken top-k set, the receiver checks a
/// uniform (n∧k)-subset of it and buys iff at least `buy_threshold` checked
/// attributes are good. Trial i draws from substream (seed, i), so the
/// output does not depend on the worker count.
PlayStats play_top_k(const GameSpec& spec, int k, const SimConfig& sim, int n = 1, int buy_threshold = 1);

/// Message distribution of the sender in state theta.
using MessagingRule = std::function<std::map<Mask, Rational>(Mask theta)>;

MessagingRule top_k_messaging(int N, int k);
/// Always sends `message`, whatever the state.
MessagingRule fixed_message(Mask message);

/// Receiver side of the top-k profile, computed by enumerating all states.
struct ReceiverAnalysis {
  int profile_threshold = 1;     // best of the thresholds 1..n∧k, smallest on ties
  Rational equilibrium_value;    // summed over messages, unnormalized by P(message)
  Rational best_deviation_value;
  Rational regret;
};

/// Deviations range over every check set C in P_n with the optimal buy rule
/// given (message, C, observed bits). Mixed checks are averages of pure ones,
/// so the pure maximum bounds them. One representative message is evaluated
/// and the result scaled by C(N,k); a second representative is compared
/// against it and a mismatch throws InvariantViolation.
ReceiverAnalysis analyze_receiver(const GameSpec& spec, int k, int n);
Rational receiver_regret_exact(const GameSpec& spec, int k, int n);

/// sum_theta P(theta) [max_A buy(theta, A) - E_{A ~ rule(theta)} buy(theta, A)],
/// in units of buying probability, against the receiver's top-k strategy
/// with the given threshold. Off-path messages are read as an on-path one,
/// so the maximum over k-subsets covers them.
Rational sender_regret_exact(const GameSpec& spec, int k, int n, const MessagingRule& rule,
                             int profile_threshold = 1);
Rational sender_regret_exact(const GameSpec& spec, int k, int n = 1);

struct EquilibriumReport {
  int k = 0;
  int n = 1;
  Rational price;
  bool analytic_exists = false;
  int profile_threshold = 1;
  Rational sender_regret;
  Rational receiver_regret;
  RationalVector exact_buying_vector;
  PlayStats monte_carlo;
  Rational sender_payoff;
  Rational receiver_payoff;
  // analytic_exists disagrees with (both regrets zero). Should never happen.
  bool critical_mismatch = false;
};

EquilibriumReport verify_equilibrium(const GameSpec& spec, int k, int n, const SimConfig& sim);

}  // namespace toptalk
