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

#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "cycloprime/engine.hpp"

namespace cycloprime {

/// One run, as written to reports. Field order in JSON is fixed.
struct Report {
  std::string kind;  // "test" or "baseline"
  std::string test;  // "cyclotomic", "lucas-lehmer" or "pepin"
  int p = 0;         // base prime; 0 for baselines
  int n = 0;         // n, or the baseline index
  std::size_t digits = 0;
  std::optional<std::string> number;  // decimal, only when digits <= kMaxPrintedDigits
  Verdict verdict;
};

inline constexpr std::size_t kMaxPrintedDigits = 100;

Report make_test_report(const TestParams& params, Verdict verdict);
Report make_baseline_report(const std::string& test, int index, const BigInt& number,
                            Verdict verdict);

/// Compact single-line JSON with stable key order; elapsed time is rounded to
/// milliseconds.
std::string to_json(const Report& report);

/// One human-readable line.
std::string to_summary(const Report& report);

/// "yes", "no" or "n/a", as in the result tables.
const char* primality_label(Outcome outcome) noexcept;

std::size_t decimal_digits(const BigInt& v);

}  // namespace cycloprime
