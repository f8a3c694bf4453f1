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

#include "cycloprime/report.hpp"

#include <cmath>
#include <iomanip>
#include <sstream>

#include <json.hpp>

namespace cycloprime {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json witness_json(const Witness& w) {
  ordered_json out;  // null for monostate
  if (const auto* f = std::get_if<FactorWitness>(&w)) {
    out["type"] = "factor";
    out["factor"] = f->factor.get_str();
    out["source"] = f->source;
  } else if (const auto* c = std::get_if<CongruenceWitness>(&w)) {
    out["type"] = "congruence";
    out["j"] = c->j;
    out["observed"] = c->observed.get_str();
    out["expected"] = c->expected.get_str();
  } else if (const auto* r = std::get_if<ReasonWitness>(&w)) {
    out["type"] = "reason";
    out["reason"] = r->reason;
  }
  return out;
}

double round_millis(double seconds) { return std::round(seconds * 1000.0) / 1000.0; }

}  // namespace

std::size_t decimal_digits(const BigInt& v) { return BigInt(abs(v)).get_str().size(); }

const char* primality_label(Outcome outcome) noexcept {
  switch (outcome) {
    case Outcome::kPrime: return "yes";
    case Outcome::kComposite: return "no";
    case Outcome::kInapplicable: return "n/a";
  }
  return "n/a";
}

Report make_test_report(const TestParams& params, Verdict verdict) {
  Report r;
  r.kind = "test";
  r.test = "cyclotomic";
  r.p = params.p;
  r.n = params.n;
  r.digits = decimal_digits(params.M);
  if (r.digits <= kMaxPrintedDigits) r.number = params.M.get_str();
  r.verdict = std::move(verdict);
  return r;
}

Report make_baseline_report(const std::string& test, int index, const BigInt& number,
                            Verdict verdict) {
  Report r;
  r.kind = "baseline";
  r.test = test;
  r.n = index;
  r.digits = decimal_digits(number);
  if (r.digits <= kMaxPrintedDigits) r.number = number.get_str();
  r.verdict = std::move(verdict);
  return r;
}

std::string to_json(const Report& report) {
  const Verdict& v = report.verdict;
  ordered_json j;
  j["kind"] = report.kind;
  j["test"] = report.test;
  j["p"] = report.p;
  j["n"] = report.n;
  j["digits"] = report.digits;
  j["number"] = report.number ? ordered_json(*report.number) : ordered_json(nullptr);
  j["mode"] = mode_name(v.mode);
  j["verdict"] = outcome_name(v.outcome);
  j["witness"] = witness_json(v.witness);
  if (v.symbol) {
    j["symbol"] = {{"sign", v.symbol->sign},
                   {"l", v.symbol->l},
                   {"text", v.symbol->to_string(report.p)}};
  } else {
    j["symbol"] = nullptr;
  }
  j["outside_table"] = v.outside_table;
  j["iterations"] = v.iterations;
  j["elapsed_seconds"] = round_millis(v.elapsed_seconds);
  if (v.outcome == Outcome::kPrime && v.final_state) {
    ordered_json seq = ordered_json::array();
    for (const auto& s : v.final_state->values) seq.push_back(s.get_str());
    j["final_sequence"] = std::move(seq);
  } else {
    j["final_sequence"] = nullptr;
  }
  return j.dump();
}

std::string to_summary(const Report& report) {
  const Verdict& v = report.verdict;
  std::ostringstream os;
  if (report.kind == "test") {
    os << "(2*" << report.p << ")^(2^" << report.n << ")+1";
  } else {
    os << report.test << " " << report.n;
  }
  if (report.number) {
    os << " = " << *report.number;
  } else {
    os << " [" << report.digits << " digits]";
  }
  os << ": " << outcome_name(v.outcome) << " (" << mode_name(v.mode);
  if (v.symbol) os << ", symbol " << v.symbol->to_string(report.p);
  os << ", " << std::fixed << std::setprecision(3) << v.elapsed_seconds << " s)";
  if (const auto* f = std::get_if<FactorWitness>(&v.witness)) {
    os << " factor " << f->factor.get_str() << " via " << f->source;
  } else if (const auto* c = std::get_if<CongruenceWitness>(&v.witness)) {
    os << " congruence fails at j = " << c->j;
  } else if (const auto* r = std::get_if<ReasonWitness>(&v.witness)) {
    os << " " << r->reason;
  }
  return os.str();
}

}  // namespace cycloprime
