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

#include "toptalk/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "toptalk/io.hpp"

namespace toptalk {

namespace {

struct Options {
  std::string spec_path;
  std::string example;
  std::optional<int> n;
  std::optional<int> k;
  std::string price;
  std::string pi;
  std::uint64_t trials = 100000;
  std::uint64_t seed = 0;
  unsigned workers = 1;
  std::string out_dir;
  std::string example_name;  // positional for the `example` subcommand
};

void add_common(CLI::App* cmd, Options& o, bool needs_k, bool sampling) {
  cmd->add_option("--spec", o.spec_path, "game spec JSON file");
  cmd->add_option("--example", o.example, "built-in spec")->check(CLI::IsMember({"fig1", "n2"}));
  cmd->add_option("--n", o.n, "checking capacity, overrides the loaded game");
  cmd->add_option("--price", o.price, "price as num/den or decimal, overrides the loaded game");
  cmd->add_option("--pi", o.pi, "comma-separated prior over |theta|, overrides the loaded game");
  cmd->add_option("--out", o.out_dir, "directory for output files (default stdout)");
  if (needs_k) cmd->add_option("--k", o.k, "top-k profile")->required();
  if (sampling) {
    cmd->add_option("--trials", o.trials, "Monte Carlo trials")->check(CLI::PositiveNumber);
    cmd->add_option("--seed", o.seed, "Monte Carlo seed");
    cmd->add_option("--workers", o.workers, "worker threads")->check(CLI::PositiveNumber);
  }
}

RationalVector parse_vector(const std::string& text, const std::string& field) {
  std::vector<Rational> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      parts.push_back(parse_rational(item));
    } catch (const std::invalid_argument& e) {
      throw InvalidArgument(field + "[" + std::to_string(parts.size()) + "]: " + e.what());
    }
  }
  RationalVector out(static_cast<Eigen::Index>(parts.size()));
  for (std::size_t i = 0; i < parts.size(); ++i) out(static_cast<Eigen::Index>(i)) = parts[i];
  return out;
}

GameSpec resolve_spec(const Options& o) {
  if (o.spec_path.empty() == o.example.empty()) throw InvalidArgument("spec: give exactly one of --spec or --example");
  GameSpec spec = o.spec_path.empty() ? builtin_examples().at(o.example) : load_game_spec(o.spec_path);
  if (o.n) spec.n = *o.n;
  if (!o.price.empty()) {
    try {
      spec.price = parse_rational(o.price);
    } catch (const std::invalid_argument& e) {
      throw InvalidArgument(std::string("price: ") + e.what());
    }
  }
  if (!o.pi.empty()) spec.prior.pi = parse_vector(o.pi, "pi");
  const ValidationResult check = validate(spec);
  if (!check.ok()) throw InvalidArgument(check.summary());
  return spec;
}

class Sink {
 public:
  Sink(std::string dir, std::ostream& out) : dir_(std::move(dir)), out_(out) {}

  void emit(const std::string& file, const std::string& content) {
    if (dir_.empty()) {
      if (!first_) out_ << '\n';
      out_ << content;
      first_ = false;
      return;
    }
    std::filesystem::create_directories(dir_);
    const auto path = std::filesystem::path(dir_) / file;
    std::ofstream f(path, std::ios::binary);
    if (!f) throw InvalidArgument("out: cannot write " + path.string());
    f << content;
  }

 private:
  std::string dir_;
  std::ostream& out_;
  bool first_ = true;
};

template <typename Fn>
std::string capture(Fn&& fn) {
  std::ostringstream os;
  fn(os);
  return os.str();
}

}  // namespace

std::map<std::string, GameSpec> builtin_examples() {
  std::map<std::string, GameSpec> out;

  GameSpec fig1;
  fig1.N = 4;
  fig1.n = 1;
  fig1.price = Rational(3, 2);
  fig1.prior.pi = RationalVector::Constant(5, Rational(1, 5));
  fig1.utility.v = RationalVector(5);
  fig1.utility.v << 0, 1, 2, 3, 4;
  out.emplace("fig1", fig1);

  GameSpec n2;
  n2.N = 2;
  n2.n = 1;
  n2.price = Rational(1);
  n2.prior.pi = RationalVector::Constant(3, Rational(1, 3));
  n2.utility.v = RationalVector(3);
  n2.utility.v << 0, 1, 2;
  out.emplace("n2", n2);
  return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact top-k equilibria of cheap talk with partial verification", "toptalk"};
  app.require_subcommand(1);
  Options o;

  auto* thresholds = app.add_subcommand("thresholds", "threshold table as CSV");
  auto* envelope = app.add_subcommand("envelope", "upper envelope vertices as CSV");
  auto* optimal = app.add_subcommand("optimal-price", "revenue-maximizing price as JSON");
  auto* verify = app.add_subcommand("verify", "certify a top-k equilibrium, JSON report");
  auto* simulate = app.add_subcommand("simulate", "Monte Carlo play of a top-k profile, CSV");
  auto* figure1 = app.add_subcommand("figure1", "thresholds and buying probabilities, CSV");
  auto* figure2 = app.add_subcommand("figure2", "envelope vertices and payoff region, CSV");
  auto* example = app.add_subcommand("example", "print a built-in spec as JSON");

  for (auto* cmd : {thresholds, envelope, optimal, figure1, figure2}) add_common(cmd, o, false, false);
  add_common(verify, o, true, true);
  add_common(simulate, o, true, true);
  example->add_option("name", o.example_name, "fig1 or n2")->required()->check(CLI::IsMember({"fig1", "n2"}));
  example->add_option("--pi", o.pi, "comma-separated prior over |theta|");
  example->add_option("--out", o.out_dir, "directory for output files (default stdout)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    std::string what = e.what();
    std::replace(what.begin(), what.end(), '\n', ' ');
    err << "error: " << what << '\n';
    return 2;
  }

  Sink sink(o.out_dir, out);
  try {
    if (*example) {
      o.example = o.example_name;
      sink.emit("example.json", to_json(resolve_spec(o)).dump(2) + "\n");
      return 0;
    }
    const GameSpec spec = resolve_spec(o);
    if (*thresholds) {
      sink.emit("thresholds.csv", capture([&](std::ostream& os) { write_thresholds_csv(os, threshold_table(spec, spec.n)); }));
    } else if (*envelope) {
      sink.emit("envelope.csv", capture([&](std::ostream& os) { write_envelope_csv(os, upper_envelope(spec)); }));
    } else if (*optimal) {
      sink.emit("optimal_price.json", to_json(optimal_price(spec)).dump(2) + "\n");
    } else if (*verify) {
      const EquilibriumReport report = verify_equilibrium(spec, *o.k, spec.n, {o.trials, o.seed, o.workers});
      sink.emit("verify.json", to_json(report).dump(2) + "\n");
      if (report.critical_mismatch) {
        err << "error: analytic existence disagrees with exact regrets\n";
        return 1;
      }
    } else if (*simulate) {
      const int k = *o.k;
      if (k < 0 || k > spec.N) throw InvalidArgument("k: must lie in [0, N]");
      const int threshold = k == 0 ? 1 : top_k_buy_threshold(spec, k, spec.n);
      const PlayStats stats = play_top_k(spec, k, {o.trials, o.seed, o.workers}, spec.n, threshold);
      const RationalVector exact = exact_play_vector(spec, k, spec.n, threshold);
      sink.emit("simulate.csv", capture([&](std::ostream& os) { write_simulation_csv(os, exact, stats); }));
    } else if (*figure1) {
      sink.emit("figure1.csv", capture([&](std::ostream& os) { write_figure1_csv(os, spec); }));
    } else if (*figure2) {
      sink.emit("figure2_vertices.csv",
                capture([&](std::ostream& os) { write_envelope_csv(os, upper_envelope(spec)); }));
      sink.emit("figure2_region.csv",
                capture([&](std::ostream& os) { write_region_csv(os, region_boundary(spec)); }));
    }
  } catch (const InvariantViolation& e) {
    err << "internal error: " << e.what() << '\n';
    return 1;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const EnumerationLimitError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}

}  // namespace toptalk
