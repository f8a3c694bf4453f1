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

#include <cstdint>
#include <optional>
#include <vector>

#include "cycloprime/engine.hpp"
#include "cycloprime/residue_ring.hpp"

namespace cycloprime {

/// Prime iff u_{p-2} = 0 (mod 2^p - 1), u_0 = 4, u_k = u_{k-1}^2 - 2.
Verdict lucas_lehmer(int p);

/// Prime iff 3^{(F_n - 1)/2} = -1 (mod F_n), F_n = 2^{2^n} + 1.
Verdict pepin(int n);

/// Witness configuration for the Miller-Rabin oracle. Below
/// kDeterministicBound the fixed bases decide; above it `rounds` random
/// bases drawn from a generator seeded with `seed` are added.
struct OracleConfig {
  unsigned rounds = 20;
  std::vector<unsigned long> deterministic_bases{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};
  std::uint64_t seed = 0x5eed;
};

// The first thirteen prime bases are exact below this value.
inline const char* const kDeterministicBound = "3317044064679887385961981";

enum class OracleVerdict { kProbablyPrime, kComposite };

/// Strong-pseudoprime test on GMP's own powm. N must be >= 3.
OracleVerdict miller_rabin(const BigInt& N, const OracleConfig& config = {});

/// Smallest prime factor <= bound, if any.
std::optional<unsigned long> trial_division(const BigInt& N, unsigned long bound);

}  // namespace cycloprime
