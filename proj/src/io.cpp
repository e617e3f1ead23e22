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

#include "toptalk/io.hpp"

#include <fstream>
#include <iomanip>
#include <ostream>
#include <set>

namespace toptalk {

namespace {

Rational rational_field(const Json& value, const std::string& field) {
  if (value.is_string()) {
    try {
      return parse_rational(value.get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw InvalidArgument(field + ": " + e.what());
    }
  }
  if (value.is_number_integer()) return Rational(value.get<long long>());
  if (value.is_number_float()) throw InvalidArgument(field + ": write rationals as strings, not JSON floats");
  throw InvalidArgument(field + ": expected a rational string");
}

RationalVector vector_field(const Json& doc, const std::string& field) {
  if (!doc.contains(field)) throw InvalidArgument(field + ": missing");
  const Json& arr = doc.at(field);
  if (!arr.is_array()) throw InvalidArgument(field + ": expected an array");
  RationalVector out(static_cast<Eigen::Index>(arr.size()));
  for (std::size_t i = 0; i < arr.size(); ++i) {
    out(static_cast<Eigen::Index>(i)) = rational_field(arr[i], field + "[" + std::to_string(i) + "]");
  }
  return out;
}

int int_field(const Json& doc, const std::string& field) {
  if (!doc.contains(field)) throw InvalidArgument(field + ": missing");
  const Json& value = doc.at(field);
  if (!value.is_number_integer()) throw InvalidArgument(field + ": expected an integer");
  const auto x = value.get<long long>();
  if (x < -1000000 || x > 1000000) throw InvalidArgument(field + ": out of range");
  return static_cast<int>(x);
}

std::string point_key(SignalPoint p) { return "(" + std::to_string(p.t) + "," + std::to_string(p.b) + ")"; }

}  // namespace

Json to_json(const GameSpec& spec) {
  Json doc;
  doc["N"] = spec.N;
  doc["n"] = spec.n;
  doc["price"] = to_string(spec.price);
  doc["pi"] = to_json(spec.prior.pi);
  doc["v"] = to_json(spec.utility.v);
  return doc;
}

GameSpec game_spec_from_json(const Json& doc) {
  if (!doc.is_object()) throw InvalidArgument("spec: expected a JSON object");
  static const std::set<std::string> known{"N", "n", "price", "pi", "v"};
  for (const auto& [key, value] : doc.items()) {
    if (!known.count(key)) throw InvalidArgument(key + ": unknown field");
  }
  GameSpec spec;
  spec.N = int_field(doc, "N");
  spec.n = doc.contains("n") ? int_field(doc, "n") : 1;
  if (!doc.contains("price")) throw InvalidArgument("price: missing");
  spec.price = rational_field(doc.at("price"), "price");
  spec.prior.pi = vector_field(doc, "pi");
  spec.utility.v = vector_field(doc, "v");
  return spec;
}

GameSpec load_game_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("spec: cannot read " + path);
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InvalidArgument("spec: malformed JSON in " + path + " (byte " + std::to_string(e.byte) + ")");
  }
  return game_spec_from_json(doc);
}

Json to_json(const SignalLaw& law) {
  Json doc;
  doc["n"] = law.n;
  doc["k"] = law.k;
  doc["N"] = law.N;
  Json rows = Json::object();
  for (int j = 0; j <= law.N; ++j) {
    Json row = Json::object();
    for (const auto& p : law.points) row[point_key(p)] = to_string(law.at(j, p));
    rows[std::to_string(j)] = row;
  }
  doc["rows"] = rows;
  return doc;
}

Json to_json(const RationalVector& q) {
  Json arr = Json::array();
  for (Eigen::Index j = 0; j < q.size(); ++j) arr.push_back(to_string(q(j)));
  return arr;
}

Json to_json(const BuyRule& rule) {
  Json doc;
  switch (rule.kind) {
    case BuyRule::Kind::Never:
      doc["kind"] = "never";
      break;
    case BuyRule::Kind::Always:
      doc["kind"] = "always";
      break;
    case BuyRule::Kind::AtOrAbove:
      doc["kind"] = "at_or_above";
      doc["threshold"] = {rule.threshold.t, rule.threshold.b};
      break;
  }
  return doc;
}

Json to_json(const OptimalPrice& best) {
  Json doc;
  doc["k_star"] = best.k_star;
  doc["price"] = to_string(best.price);
  doc["revenue"] = to_string(best.revenue);
  doc["ties"] = best.ties;
  return doc;
}

Json to_json(const EquilibriumReport& report) {
  Json doc;
  doc["k"] = report.k;
  doc["n"] = report.n;
  doc["price"] = to_string(report.price);
  doc["analytic_exists"] = report.analytic_exists;
  doc["buy_threshold"] = report.profile_threshold;
  doc["sender_regret"] = to_string(report.sender_regret);
  doc["receiver_regret"] = to_string(report.receiver_regret);
  doc["exact_buying_vector"] = to_json(report.exact_buying_vector);
  Json mc = Json::array();
  for (const auto& s : report.monte_carlo.strata) {
    mc.push_back({{"j", s.j}, {"trials", s.trials}, {"frequency", s.frequency}, {"stderr", s.standard_error}});
  }
  doc["mc_buying_vector"] = mc;
  doc["sender_payoff"] = to_string(report.sender_payoff);
  doc["receiver_payoff"] = to_string(report.receiver_payoff);
  doc["critical_mismatch"] = report.critical_mismatch;
  return doc;
}

void write_thresholds_csv(std::ostream& os, const ThresholdTable& table) {
  os << "nu_lo,nu_hi\n" << to_string(table.nu_lo) << ',' << to_string(table.nu_hi) << '\n';
  os << "k,lower,upper\n";
  for (int k = 1; k < table.N; ++k) {
    os << k << ',' << to_string(table.lower_at(k)) << ',' << to_string(table.upper_at(k)) << '\n';
  }
}

void write_envelope_csv(std::ostream& os, const std::vector<EnvelopeVertex>& vertices) {
  os << "k,x,y\n";
  for (const auto& v : vertices) os << v.k << ',' << to_string(v.x) << ',' << to_string(v.y) << '\n';
}

void write_figure1_csv(std::ostream& os, const GameSpec& spec) {
  const ThresholdTable table = threshold_table(spec, 1);
  os << "nu_lo,nu_hi\n" << to_string(table.nu_lo) << ',' << to_string(table.nu_hi) << '\n';
  os << "k,lower,upper,buy_probability\n";
  for (int k = 1; k < spec.N; ++k) {
    const PayoffPoint point = payoff_point(spec, top_k_buying_vector<Rational>(spec.N, k));
    os << k << ',' << to_string(table.lower_at(k)) << ',' << to_string(table.upper_at(k)) << ','
       << to_string(point.x) << '\n';
  }
}

void write_region_csv(std::ostream& os, const std::vector<PayoffPoint>& boundary) {
  os << "x,y\n";
  for (const auto& p : boundary) os << to_string(p.x) << ',' << to_string(p.y) << '\n';
}

void write_simulation_csv(std::ostream& os, const RationalVector& exact, const PlayStats& stats) {
  os << "j,exact_q,empirical_q,stderr,trials\n";
  const auto old_flags = os.flags();
  const auto old_precision = os.precision();
  os << std::setprecision(17);
  for (const auto& s : stats.strata) {
    os << s.j << ',' << to_string(exact(s.j)) << ',' << s.frequency << ',' << s.standard_error << ',' << s.trials
       << '\n';
  }
  os.flags(old_flags);
  os.precision(old_precision);
}

}  // namespace toptalk
