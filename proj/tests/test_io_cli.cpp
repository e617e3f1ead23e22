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

#include <filesystem>
#include <fstream>
#include <sstream>

#include "support/fixtures.hpp"
#include "toptalk/cli.hpp"
#include "toptalk/io.hpp"

using namespace toptalk;
using namespace toptalk::testing;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome cli(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string error_for(const std::string& text) {
  try {
    game_spec_from_json(Json::parse(text));
  } catch (const InvalidArgument& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("game spec JSON round trip") {
  const GameSpec spec = fig1();
  const Json doc = to_json(spec);
  CHECK(doc["price"] == "3/2");
  CHECK(doc["pi"][0] == "1/5");
  const GameSpec back = game_spec_from_json(doc);
  CHECK(back.N == spec.N);
  CHECK(back.n == spec.n);
  CHECK(back.price == spec.price);
  CHECK(back.prior.pi == spec.prior.pi);
  CHECK(back.utility.v == spec.utility.v);
}

TEST_CASE("game spec JSON errors name the field") {
  CHECK(error_for(R"({"n":1,"price":"1","pi":[],"v":[]})").rfind("N:", 0) == 0);
  CHECK(error_for(R"({"N":2,"price":"1","pi":["1/2",0.5,"0"],"v":[0,1,2]})").rfind("pi[1]:", 0) == 0);
  CHECK(error_for(R"({"N":2,"price":"x","pi":[1,0,0],"v":[0,1,2]})").rfind("price:", 0) == 0);
  CHECK(error_for(R"({"N":2,"price":1,"pi":[1,0,0],"v":[0,1,2],"extra":1})").rfind("extra:", 0) == 0);
  CHECK(error_for(R"({"N":2,"price":1,"pi":[1,0,0],"v":"012"})").rfind("v:", 0) == 0);
  CHECK(error_for(R"({"N":2.5,"price":1,"pi":[1,0,0],"v":[0,1,2]})").rfind("N:", 0) == 0);
}

TEST_CASE("signal law and rule JSON") {
  const Json law = to_json(signal_law(1, 2, 4));
  CHECK(law["rows"]["1"]["(1,0)"] == "1/2");
  CHECK(law["rows"]["0"]["(0,0)"] == "1/1");
  CHECK(to_json(BuyRule{BuyRule::Kind::AtOrAbove, {1, 0}}).dump() == R"({"kind":"at_or_above","threshold":[1,0]})");
  CHECK(to_json(top_k_buying_vector(2, 1)).dump() == R"(["0/1","1/1","1/1"])");
}

TEST_CASE("thresholds subcommand prints the exact table") {
  const Outcome r = cli({"thresholds", "--example", "fig1", "--n", "1"});
  CHECK(r.code == 0);
  CHECK(r.out == "nu_lo,nu_hi\n1/1,3/1\nk,lower,upper\n1,0/1,5/3\n2,1/3,2/1\n3,2/3,7/3\n");
}

TEST_CASE("figure2 subcommand prints the envelope and the region") {
  const Outcome r = cli({"figure2", "--example", "fig1"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("k,x,y\n0,1/1,2/1\n1,4/5,2/1\n2,7/10,19/10\n3,3/5,26/15\n4,1/2,3/2\n5,0/1,0/1\n", 0) == 0);
  CHECK(r.out.find("x,y\n0/1,0/1\n1/5,0/1\n") != std::string::npos);
}

TEST_CASE("verify subcommand") {
  const Outcome r = cli({"verify", "--example", "fig1", "--k", "2", "--price", "2", "--trials", "100000", "--seed", "7"});
  CHECK(r.code == 0);
  const Json report = Json::parse(r.out);
  CHECK(report["analytic_exists"] == true);
  CHECK(report["sender_regret"] == "0/1");
  CHECK(report["receiver_regret"] == "0/1");
  CHECK(report["critical_mismatch"] == false);
}

TEST_CASE("optimal-price and example subcommands") {
  Outcome r = cli({"optimal-price", "--example", "n2", "--pi", "1/4,1/2,1/4"});
  CHECK(r.code == 0);
  CHECK(Json::parse(r.out)["ties"] == Json::array({1, 2}));
  r = cli({"optimal-price", "--example", "n2", "--pi", "0.25,0.5,0.25"});
  CHECK(Json::parse(r.out)["k_star"] == 1);
  r = cli({"example", "fig1"});
  CHECK(r.code == 0);
  CHECK(game_spec_from_json(Json::parse(r.out)).price == Rational(3, 2));
}

TEST_CASE("simulate output is byte-identical across runs and worker counts") {
  const Outcome a = cli({"simulate", "--example", "fig1", "--k", "1", "--trials", "5000", "--seed", "3"});
  const Outcome b = cli({"simulate", "--example", "fig1", "--k", "1", "--trials", "5000", "--seed", "3", "--workers", "3"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.rfind("j,exact_q,empirical_q,stderr,trials\n0,0/1,0,0,", 0) == 0);
}

TEST_CASE("spec files and output directories") {
  const auto dir = std::filesystem::temp_directory_path() / "toptalk_cli_test";
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  {
    std::ofstream f(dir / "spec.json");
    f << to_json(fig1()).dump();
  }
  const Outcome r = cli({"figure1", "--spec", (dir / "spec.json").string(), "--out", (dir / "out").string()});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(dir / "out" / "figure1.csv");
  std::stringstream contents;
  contents << in.rdbuf();
  CHECK(contents.str().find("1,0/1,5/3,4/5\n") != std::string::npos);
  std::filesystem::remove_all(dir);
}

TEST_CASE("bad input exits with 2 and one diagnostic line") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"thresholds", "--example", "fig1", "--bogus"},
           {"thresholds"},
           {"thresholds", "--spec", "/nonexistent/spec.json"},
           {"thresholds", "--example", "fig1", "--price", "-1"},
           {"thresholds", "--example", "fig1", "--price", "abc"},
           {"thresholds", "--example", "fig1", "--pi", "1/2,1/2"},
           {"verify", "--example", "fig1"},
           {"nope"}}) {
    const Outcome r = cli(args);
    CAPTURE(args[0]);
    CAPTURE(r.err);
    CHECK(r.code == 2);
    CHECK(std::count(r.err.begin(), r.err.end(), '\n') == 1);
  }
  CHECK(cli({"thresholds", "--example", "fig1", "--price", "abc"}).err.find("price") != std::string::npos);
}
