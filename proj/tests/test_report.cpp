// Copyright 2026 The cycloprime Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <string>
#include <vector>

#include <json.hpp>

#include "cycloprime/baselines.hpp"
#include "cycloprime/report.hpp"

using namespace cycloprime;
using nlohmann::ordered_json;

namespace {

std::vector<std::string> keys_of(const ordered_json& j) {
  std::vector<std::string> out;
  for (auto it = j.begin(); it != j.end(); ++it) out.push_back(it.key());
  return out;
}

}  // namespace

TEST_CASE("prime report") {
  const auto params = build_params(3, 2);
  const auto r = make_test_report(params, run_test(params, EngineMode::kAuto));
  const auto text = to_json(r);
  const auto j = ordered_json::parse(text);
  CHECK(keys_of(j) == std::vector<std::string>{"kind", "test", "p", "n", "digits", "number", "mode",
                                               "verdict", "witness", "symbol", "outside_table",
                                               "iterations", "elapsed_seconds", "final_sequence"});
  CHECK(j["number"] == "1297");
  CHECK(j["digits"] == 4);
  CHECK(j["verdict"] == "prime");
  CHECK(j["mode"] == "recurrence-p3");
  CHECK(j["iterations"] == 3);
  CHECK(j["symbol"]["text"] == "zeta_3^2");
  CHECK(j["witness"].is_null());
  CHECK(j["final_sequence"] == ordered_json::array({"1296"}));
  CHECK(text.find('\n') == std::string::npos);
}

TEST_CASE("composite report carries the witness") {
  const auto params = build_params(5, 3);
  const auto r = make_test_report(params, run_test(params, EngineMode::kGeneral));
  const auto j = ordered_json::parse(to_json(r));
  CHECK(j["verdict"] == "composite");
  CHECK(j["witness"]["type"] == "congruence");
  CHECK(j["witness"]["j"].get<int>() >= 1);
  CHECK(j["final_sequence"].is_null());
  CHECK(to_summary(r).find("composite") != std::string::npos);
}

TEST_CASE("large numbers are reported by digit count") {
  const auto params = build_params(7, 7);
  Verdict v;
  v.outcome = Outcome::kComposite;
  const auto r = make_test_report(params, v);
  CHECK_FALSE(r.number.has_value());
  CHECK(r.digits == params.M.get_str().size());
  CHECK(to_summary(r).find("digits") != std::string::npos);
}

TEST_CASE("JSON round-trips byte for byte") {
  std::vector<Report> reports;
  for (auto [p, n] : {std::pair{3, 1}, {3, 3}, {5, 1}, {7, 1}, {7, 2}, {13, 3}, {19, 2}}) {
    const auto params = build_params(p, n);
    reports.push_back(make_test_report(params, run_test(params, EngineMode::kAuto)));
  }
  reports.push_back(make_baseline_report("lucas-lehmer", 11, 2047, lucas_lehmer(11)));
  for (const auto& r : reports) {
    const auto text = to_json(r);
    CHECK(ordered_json::parse(text).dump() == text);
    CHECK(to_json(r) == text);
  }
}

TEST_CASE("elapsed time is rounded to milliseconds") {
  Report r = make_test_report(build_params(3, 1), Verdict{});
  r.verdict.elapsed_seconds = 1.23456;
  CHECK(ordered_json::parse(to_json(r))["elapsed_seconds"].get<double>() == 1.235);
  CHECK(to_json(r).find("\"elapsed_seconds\":1.235") != std::string::npos);
  r.verdict.elapsed_seconds = 0.0001;
  CHECK(to_json(r).find("\"elapsed_seconds\":0.0") != std::string::npos);
}

TEST_CASE("primality labels") {
  CHECK(std::string(primality_label(Outcome::kPrime)) == "yes");
  CHECK(std::string(primality_label(Outcome::kComposite)) == "no");
  CHECK(std::string(primality_label(Outcome::kInapplicable)) == "n/a");
  CHECK(decimal_digits(BigInt(-100)) == 3);
}
