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

#include <set>

#include "cycloprime/baselines.hpp"
#include "cycloprime/errors.hpp"
#include "oracles.hpp"

using namespace cycloprime;

TEST_CASE("Lucas-Lehmer examples") {
  const auto v3 = lucas_lehmer(3);
  CHECK(v3.outcome == Outcome::kPrime);
  CHECK(v3.mode == Mode::kLucasLehmer);
  CHECK(lucas_lehmer(7).outcome == Outcome::kPrime);
  CHECK(lucas_lehmer(11).outcome == Outcome::kComposite);
  CHECK(lucas_lehmer(13).outcome == Outcome::kPrime);
  CHECK_THROWS_AS(lucas_lehmer(2), Error);
  CHECK_THROWS_AS(lucas_lehmer(9), Error);
}

TEST_CASE("Lucas-Lehmer for every prime exponent up to 31") {
  const std::set<int> mersenne{3, 5, 7, 13, 17, 19, 31};
  for (int p = 3; p <= 31; ++p) {
    if (!oracle::is_prime_u64(p)) continue;
    CAPTURE(p);
    const std::uint64_t m = (std::uint64_t{1} << p) - 1;
    CHECK(oracle::is_prime_u64(m) == mersenne.contains(p));
    CHECK((lucas_lehmer(p).outcome == Outcome::kPrime) == mersenne.contains(p));
  }
}

TEST_CASE("Pepin for n <= 5") {
  const auto v1 = pepin(1);
  CHECK(v1.outcome == Outcome::kPrime);
  REQUIRE(v1.final_state.has_value());
  CHECK(v1.final_state->values[0] == 4);
  for (int n = 1; n <= 4; ++n) CHECK(pepin(n).outcome == Outcome::kPrime);
  const auto v5 = pepin(5);
  CHECK(v5.outcome == Outcome::kComposite);
  CHECK(oracle::is_prime_u64((std::uint64_t{1} << 32) + 1) == false);
  CHECK(pepin(6).outcome == Outcome::kComposite);
  CHECK_THROWS_AS(pepin(0), Error);
}

TEST_CASE("Miller-Rabin examples") {
  CHECK(miller_rabin(37) == OracleVerdict::kProbablyPrime);
  CHECK(miller_rabin(1297) == OracleVerdict::kProbablyPrime);
  CHECK(miller_rabin(build_params(3, 3).M) == OracleVerdict::kComposite);
  CHECK(miller_rabin(3) == OracleVerdict::kProbablyPrime);
  CHECK(miller_rabin(4) == OracleVerdict::kComposite);
  CHECK_THROWS_AS(miller_rabin(2), Error);
}

TEST_CASE("Miller-Rabin agrees with trial division below 200000") {
  for (std::uint64_t n = 3; n < 200000; ++n) {
    const bool mr = miller_rabin(BigInt(static_cast<unsigned long>(n))) == OracleVerdict::kProbablyPrime;
    if (mr != oracle::is_prime_u64(n)) {
      FAIL("disagreement at " << n);
    }
  }
}

TEST_CASE("Miller-Rabin catches strong pseudoprimes and Carmichael numbers") {
  // psi_11 is a strong pseudoprime to the first eleven prime bases.
  CHECK(miller_rabin(BigInt("3825123056546413051")) == OracleVerdict::kComposite);
  CHECK(miller_rabin(BigInt("318665857834031151167461")) == OracleVerdict::kComposite);
  CHECK(miller_rabin(561) == OracleVerdict::kComposite);
  CHECK(miller_rabin(BigInt("170141183460469231731687303715884105727")) ==
        OracleVerdict::kProbablyPrime);
  // Same answer for different generator seeds above the deterministic bound.
  OracleConfig cfg;
  cfg.seed = 42;
  CHECK(miller_rabin(BigInt("170141183460469231731687303715884105727"), cfg) ==
        OracleVerdict::kProbablyPrime);
}

TEST_CASE("trial_division") {
  CHECK(trial_division(2047, 100) == 23UL);
  CHECK_FALSE(trial_division(101, 10).has_value());
  CHECK_FALSE(trial_division(1297, 36).has_value());
  BigInt f5;
  mpz_ui_pow_ui(f5.get_mpz_t(), 2, 32);
  f5 += 1;
  CHECK(trial_division(f5, 1000) == 641UL);
  CHECK_THROWS_AS(trial_division(10, 1), Error);
}
