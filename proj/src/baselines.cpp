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

#include "cycloprime/baselines.hpp"

#include <chrono>
#include <string>

#include "cycloprime/errors.hpp"

namespace cycloprime {

namespace {

using Clock = std::chrono::steady_clock;

bool is_small_prime(long p) {
  if (p < 2) return false;
  for (long d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

// One strong-pseudoprime round: N - 1 = d * 2^s with d odd.
bool strong_probable_prime(const BigInt& N, const BigInt& base, const BigInt& d, unsigned long s) {
  const BigInt n_minus_1 = N - 1;
  BigInt x;
  mpz_powm(x.get_mpz_t(), base.get_mpz_t(), d.get_mpz_t(), N.get_mpz_t());
  if (x == 1 || x == n_minus_1) return true;
  for (unsigned long i = 1; i < s; ++i) {
    mpz_powm_ui(x.get_mpz_t(), x.get_mpz_t(), 2, N.get_mpz_t());
    if (x == n_minus_1) return true;
    if (x == 1) return false;
  }
  return false;
}

}  // namespace

Verdict lucas_lehmer(int p) {
  if (p < 3 || !is_small_prime(p)) {
    throw Error(ErrorCode::kInvalidArgument, "Lucas-Lehmer needs an odd prime exponent");
  }
  const auto start = Clock::now();
  BigInt m;
  mpz_ui_pow_ui(m.get_mpz_t(), 2, static_cast<unsigned long>(p));
  m -= 1;
  BigInt u = 4;
  for (int k = 1; k <= p - 2; ++k) {
    u = u * u - 2;
    reduce_canonical(u, m);
  }
  Verdict v;
  v.mode = Mode::kLucasLehmer;
  v.iterations = static_cast<std::uint64_t>(p - 2);
  if (u == 0) {
    v.outcome = Outcome::kPrime;
  } else {
    v.outcome = Outcome::kComposite;
    v.witness = CongruenceWitness{1, u, BigInt(0)};
  }
  v.final_state = SequenceState{v.iterations, {u}};
  v.elapsed_seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return v;
}

Verdict pepin(int n) {
  if (n < 1 || n > kMaxN) throw Error(ErrorCode::kBadN, "Pepin needs 1 <= n <= " + std::to_string(kMaxN));
  const auto start = Clock::now();
  BigInt f;
  mpz_ui_pow_ui(f.get_mpz_t(), 2, 1UL << n);
  f += 1;
  const ModulusPtr mod = make_modulus(f);
  const Residue x = mod_pow(Residue(3L, mod), BigInt((f - 1) / 2));
  const BigInt minus_one = f - 1;
  Verdict v;
  v.mode = Mode::kPepin;
  v.iterations = (std::uint64_t{1} << n) - 1;
  if (x.value() == minus_one) {
    v.outcome = Outcome::kPrime;
  } else {
    v.outcome = Outcome::kComposite;
    v.witness = CongruenceWitness{1, x.value(), minus_one};
  }
  v.final_state = SequenceState{v.iterations, {x.value()}};
  v.elapsed_seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return v;
}

OracleVerdict miller_rabin(const BigInt& N, const OracleConfig& config) {
  if (N < 3) throw Error(ErrorCode::kInvalidArgument, "Miller-Rabin needs N >= 3");
  if (mpz_even_p(N.get_mpz_t())) return OracleVerdict::kComposite;

  for (unsigned long b : config.deterministic_bases) {
    if (N == b) return OracleVerdict::kProbablyPrime;
    if (mpz_divisible_ui_p(N.get_mpz_t(), b)) return OracleVerdict::kComposite;
  }

  BigInt d = N - 1;
  const unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
  mpz_fdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);

  for (unsigned long b : config.deterministic_bases) {
    if (!strong_probable_prime(N, BigInt(b), d, s)) return OracleVerdict::kComposite;
  }
  if (N < BigInt(kDeterministicBound)) return OracleVerdict::kProbablyPrime;

  gmp_randclass rng(gmp_randinit_mt);
  rng.seed(static_cast<unsigned long>(config.seed));
  const BigInt span = N - 3;  // bases drawn from [2, N - 2]
  for (unsigned i = 0; i < config.rounds; ++i) {
    const BigInt base = rng.get_z_range(span) + 2;
    if (!strong_probable_prime(N, base, d, s)) return OracleVerdict::kComposite;
  }
  return OracleVerdict::kProbablyPrime;
}

std::optional<unsigned long> trial_division(const BigInt& N, unsigned long bound) {
  if (bound < 2) throw Error(ErrorCode::kInvalidArgument, "trial division bound must be >= 2");
  for (unsigned long d = 2; d <= bound; ++d) {
    if (BigInt(d) >= N) break;
    if (mpz_divisible_ui_p(N.get_mpz_t(), d)) return d;
  }
  return std::nullopt;
}

}  // namespace cycloprime
