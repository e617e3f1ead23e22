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

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "toptalk/combinatorics.hpp"
#include "toptalk/equilibrium.hpp"
#include "toptalk/model.hpp"
#include "toptalk/simulate.hpp"
#include "toptalk/thresholds.hpp"
#include "toptalk/welfare.hpp"

// JSON and CSV surfaces. Every rational is written as "num/den".

namespace toptalk {

using Json = nlohmann::ordered_json;

Json to_json(const GameSpec& spec);
/// Reads {"N", "n", "price", "pi", "v"}. Rationals may be strings ("3/2",
/// "0.25") or JSON integers; JSON floats are refused. Structural problems
/// throw InvalidArgument naming the field; validate() is not applied.
GameSpec game_spec_from_json(const Json& doc);
GameSpec load_game_spec(const std::string& path);

Json to_json(const SignalLaw& law);
Json to_json(const RationalVector& q);
Json to_json(const BuyRule& rule);
Json to_json(const OptimalPrice& best);
Json to_json(const EquilibriumReport& report);

/// nu_lo,nu_hi header and values, then k,lower,upper rows.
void write_thresholds_csv(std::ostream& os, const ThresholdTable& table);
/// k,x,y.
void write_envelope_csv(std::ostream& os, const std::vector<EnvelopeVertex>& vertices);
/// Thresholds plus the top-k buying probability for each k.
void write_figure1_csv(std::ostream& os, const GameSpec& spec);
/// x,y along the closed boundary of the payoff set.
void write_region_csv(std::ostream& os, const std::vector<PayoffPoint>& boundary);
/// j,exact_q,empirical_q,stderr,trials.
void write_simulation_csv(std::ostream& os, const RationalVector& exact, const PlayStats& stats);

}  // namespace toptalk
