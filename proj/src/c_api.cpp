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

#include "cycloprime/cycloprime.h"

#include <exception>
#include <memory>
#include <new>
#include <string>
#include <vector>

#include "cycloprime/baselines.hpp"
#include "cycloprime/engine.hpp"
#include "cycloprime/errors.hpp"
#include "cycloprime/report.hpp"

using namespace cycloprime;

struct cyp_result {
  Report report;
  std::string json;
  std::string summary;
  std::vector<std::string> sequence;
};

namespace {

thread_local std::string last_error;

cyp_status status_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::kUnsupportedP: return CYP_ERR_UNSUPPORTED_P;
    case ErrorCode::kBadN: return CYP_ERR_BAD_N;
    case ErrorCode::kInvalidArgument: return CYP_ERR_INVALID_ARGUMENT;
    default: return CYP_ERR_INTERNAL;
  }
}

template <typename Fn>
cyp_status guarded(Fn&& fn) {
  try {
    last_error.clear();
    fn();
    return CYP_OK;
  } catch (const Error& e) {
    last_error = std::string(error_code_name(e.code())) + ": " + e.what();
    return status_for(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return CYP_ERR_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return CYP_ERR_INTERNAL;
  }
}

cyp_result* wrap(Report report) {
  auto result = std::make_unique<cyp_result>();
  result->json = to_json(report);
  result->summary = to_summary(report);
  if (report.verdict.final_state) {
    for (const auto& v : report.verdict.final_state->values) result->sequence.push_back(v.get_str());
  }
  result->report = std::move(report);
  return result.release();
}

cyp_outcome outcome_code(Outcome o) {
  switch (o) {
    case Outcome::kPrime: return CYP_PRIME;
    case Outcome::kComposite: return CYP_COMPOSITE;
    case Outcome::kInapplicable: return CYP_INAPPLICABLE;
  }
  return CYP_INAPPLICABLE;
}

OracleConfig oracle_config(unsigned rounds, uint64_t seed) {
  OracleConfig cfg;
  if (rounds > 0) cfg.rounds = rounds;
  cfg.seed = seed;
  return cfg;
}

}  // namespace

extern "C" {

const char* cyp_version(void) { return "1.0.0"; }

const char* cyp_last_error(void) { return last_error.c_str(); }

int cyp_is_supported_prime(int p) { return is_supported_prime(p) ? 1 : 0; }

cyp_status cyp_modulus_digits(int p, int n, size_t* digits) {
  if (digits == nullptr) return CYP_ERR_INVALID_ARGUMENT;
  return guarded([&] { *digits = decimal_digits(build_params(p, n).M); });
}

cyp_status cyp_test(int p, int n, cyp_mode mode, cyp_result** out) {
  if (out == nullptr) return CYP_ERR_INVALID_ARGUMENT;
  *out = nullptr;
  return guarded([&] {
    EngineMode m = EngineMode::kAuto;
    switch (mode) {
      case CYP_MODE_AUTO: m = EngineMode::kAuto; break;
      case CYP_MODE_GENERAL: m = EngineMode::kGeneral; break;
      case CYP_MODE_RECURRENCE: m = EngineMode::kRecurrence; break;
      default: throw Error(ErrorCode::kInvalidArgument, "unknown mode");
    }
    const TestParams params = build_params(p, n);
    *out = wrap(make_test_report(params, run_test(params, m)));
  });
}

cyp_status cyp_baseline_run(cyp_baseline kind, int index, cyp_result** out) {
  if (out == nullptr) return CYP_ERR_INVALID_ARGUMENT;
  *out = nullptr;
  return guarded([&] {
    BigInt number;
    if (kind == CYP_BASELINE_LUCAS_LEHMER) {
      Verdict v = lucas_lehmer(index);
      mpz_ui_pow_ui(number.get_mpz_t(), 2, static_cast<unsigned long>(index));
      number -= 1;
      *out = wrap(make_baseline_report("lucas-lehmer", index, number, std::move(v)));
    } else if (kind == CYP_BASELINE_PEPIN) {
      Verdict v = pepin(index);
      mpz_ui_pow_ui(number.get_mpz_t(), 2, 1UL << index);
      number += 1;
      *out = wrap(make_baseline_report("pepin", index, number, std::move(v)));
    } else {
      throw Error(ErrorCode::kInvalidArgument, "unknown baseline");
    }
  });
}

void cyp_result_free(cyp_result* result) { delete result; }

cyp_outcome cyp_result_outcome(const cyp_result* result) {
  return outcome_code(result->report.verdict.outcome);
}

double cyp_result_elapsed(const cyp_result* result) {
  return result->report.verdict.elapsed_seconds;
}

const char* cyp_result_mode(const cyp_result* result) {
  return mode_name(result->report.verdict.mode);
}

const char* cyp_result_json(const cyp_result* result) { return result->json.c_str(); }

const char* cyp_result_summary(const cyp_result* result) { return result->summary.c_str(); }

size_t cyp_result_sequence_size(const cyp_result* result) { return result->sequence.size(); }

const char* cyp_result_sequence_value(const cyp_result* result, size_t index) {
  if (index >= result->sequence.size()) return nullptr;
  return result->sequence[index].c_str();
}

cyp_status cyp_oracle(int p, int n, unsigned rounds, uint64_t seed, int* probably_prime) {
  if (probably_prime == nullptr) return CYP_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    const TestParams params = build_params(p, n);
    *probably_prime =
        miller_rabin(params.M, oracle_config(rounds, seed)) == OracleVerdict::kProbablyPrime;
  });
}

cyp_status cyp_oracle_decimal(const char* number, unsigned rounds, uint64_t seed,
                              int* probably_prime) {
  if (number == nullptr || probably_prime == nullptr) return CYP_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    BigInt N;
    if (N.set_str(number, 10) != 0) {
      throw Error(ErrorCode::kInvalidArgument, "not a decimal integer");
    }
    *probably_prime =
        miller_rabin(N, oracle_config(rounds, seed)) == OracleVerdict::kProbablyPrime;
  });
}

}  // extern "C"
