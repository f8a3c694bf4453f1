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

#include "cycloprime/engine.hpp"

#include <algorithm>
#include <array>
#include <chrono>

#include "cycloprime/chebyshev.hpp"
#include "cycloprime/errors.hpp"

namespace cycloprime {

const char* outcome_name(Outcome outcome) noexcept {
  switch (outcome) {
    case Outcome::kPrime: return "prime";
    case Outcome::kComposite: return "composite";
    case Outcome::kInapplicable: return "inapplicable";
  }
  return "unknown";
}

const char* mode_name(Mode mode) noexcept {
  switch (mode) {
    case Mode::kGeneral: return "general";
    case Mode::kRecurrenceP3: return "recurrence-p3";
    case Mode::kRecurrenceP5: return "recurrence-p5";
    case Mode::kLucasLehmer: return "lucas-lehmer";
    case Mode::kPepin: return "pepin";
  }
  return "unknown";
}

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// The p = 5 recurrences. S^{(2)} carries +2640 (S^{(2)})^3; see the unit test
// that rederives both from G_10 applied to the conjugate traces.
constexpr std::array<BivariateTerm, 21> kP5S1{{
    {1, 10, 0},   {-10, 8, 1}, {35, 6, 2},   {-50, 4, 3},  {25, 2, 4},  {-10, 8, 0},
    {80, 6, 1},   {-200, 4, 2}, {160, 2, 3}, {-20, 0, 4},  {35, 6, 0},  {-210, 4, 1},
    {315, 2, 2},  {-70, 0, 3}, {-50, 4, 0},  {200, 2, 1},  {-100, 0, 2}, {-2, 0, 5},
    {25, 2, 0},   {-50, 0, 1}, {-4, 0, 0},
}};

constexpr std::array<BivariateTerm, 36> kP5S2{{
    {1, 0, 10},     {20, 0, 9},     {-10, 2, 8},   {170, 0, 8},   {-140, 2, 7},
    {800, 0, 7},    {35, 4, 6},     {-800, 2, 6},  {2275, 0, 6},  {300, 4, 5},
    {-2400, 2, 5},  {4004, 0, 5},   {-50, 6, 4},   {1000, 4, 4},  {-4050, 2, 4},
    {4290, 0, 4},   {-200, 6, 3},   {1600, 4, 3},  {-3820, 2, 3}, {2640, 0, 3},
    {25, 8, 2},     {-320, 6, 2},   {1275, 4, 2},  {-1880, 2, 2}, {825, 0, 2},
    {20, 8, 1},     {-160, 6, 1},   {420, 4, 1},   {-400, 2, 1},  {-2, 10, 0},
    {20, 8, 0},     {-70, 6, 0},    {100, 4, 0},   {-50, 2, 0},   {100, 0, 1},
    {4, 0, 0},
}};

// Horner in s2 with coefficients that are polynomials in s1.
BigInt eval_bivariate(std::span<const BivariateTerm> terms, const std::vector<BigInt>& s1_pow,
                      const BigInt& s2, const BigInt& M) {
  int max_e2 = 0;
  for (const auto& t : terms) max_e2 = std::max(max_e2, t.e2);
  std::vector<BigInt> by_e2(static_cast<std::size_t>(max_e2 + 1));
  for (const auto& t : terms) {
    if (t.coeff >= 0) {
      mpz_addmul_ui(by_e2[t.e2].get_mpz_t(), s1_pow[t.e1].get_mpz_t(),
                    static_cast<unsigned long>(t.coeff));
    } else {
      mpz_submul_ui(by_e2[t.e2].get_mpz_t(), s1_pow[t.e1].get_mpz_t(),
                    static_cast<unsigned long>(-t.coeff));
    }
  }
  BigInt acc = by_e2[max_e2];
  reduce_canonical(acc, M);
  for (int b = max_e2 - 1; b >= 0; --b) {
    acc *= s2;
    acc += by_e2[b];
    reduce_canonical(acc, M);
  }
  return acc;
}

struct SymbolStep {
  std::optional<SymbolValue> value;
  bool outside_table = false;
  std::optional<Verdict> early;  // set when the symbol step already decides
};

SymbolStep symbol_step(const TestParams& params, const SeedRecord& seed, Mode mode) {
  SymbolStep step;
  try {
    step.value = compute_symbol(params, seed);
  } catch (const SeedDividesM& e) {
    Verdict v;
    v.mode = mode;
    if (params.M == BigInt(e.q())) {
      v.outcome = Outcome::kPrime;
    } else {
      v.outcome = Outcome::kComposite;
      v.witness = FactorWitness{BigInt(e.q()), "seed-norm"};
    }
    step.early = std::move(v);
    return step;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kSymbolIsPlusMinusOne) throw;
    Verdict v;
    v.mode = mode;
    v.outcome = Outcome::kInapplicable;
    v.witness = ReasonWitness{e.what()};
    step.early = std::move(v);
    return step;
  }
  if (params.n < seed.n_min) {
    step.outside_table = true;
  } else {
    try {
      step.outside_table = !(table_lookup(params.p, params.M) == *step.value);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kUnlistedResidue) throw;
      step.outside_table = true;
    }
  }
  return step;
}

// Prime iff every S^{(j)} matches; otherwise the first mismatch is the witness.
void judge(const TestParams& params, Case c, SequenceState state, Verdict& v) {
  const auto expected = expected_sequence(params, c);
  v.outcome = Outcome::kPrime;
  for (std::size_t j = 0; j < expected.size(); ++j) {
    if (state.values[j] != expected[j]) {
      v.outcome = Outcome::kComposite;
      v.witness = CongruenceWitness{static_cast<int>(j + 1), state.values[j], expected[j]};
      break;
    }
  }
  v.final_state = std::move(state);
}

Verdict factor_verdict(Mode mode, BigInt factor, std::string source) {
  Verdict v;
  v.mode = mode;
  v.outcome = Outcome::kComposite;
  v.witness = FactorWitness{std::move(factor), std::move(source)};
  return v;
}

Verdict zero_divisor_verdict(Mode mode, const Error& e) {
  Verdict v;
  v.mode = mode;
  v.outcome = Outcome::kComposite;
  v.witness = ReasonWitness{std::string("conj(pi) is not a unit mod M: ") + e.what()};
  return v;
}

}  // namespace

std::vector<BigInt> precondition_solutions(int p, std::uint64_t r) {
  if (p < 3 || r < 1) throw Error(ErrorCode::kInvalidArgument, "precondition_solutions: bad p or r");
  BigInt pr;
  mpz_ui_pow_ui(pr.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(r));
  const long p2 = static_cast<long>(p) * p;

  // Smallest primitive root mod p^2; it generates (Z/p^r)^* for every r.
  std::vector<long> prime_factors;
  for (long m = p - 1, d = 2; m > 1; ++d) {
    if (m % d == 0) {
      prime_factors.push_back(d);
      while (m % d == 0) m /= d;
    }
  }
  auto pow_small = [](long b, long e, long m) {
    long acc = 1 % m;
    b %= m;
    while (e > 0) {
      if (e & 1) acc = acc * b % m;
      b = b * b % m;
      e >>= 1;
    }
    return acc;
  };
  long g = 2;
  for (;; ++g) {
    bool primitive = std::all_of(prime_factors.begin(), prime_factors.end(),
                                 [&](long l) { return pow_small(g, (p - 1) / l, p) != 1; });
    if (primitive && pow_small(g, p - 1, p2) != 1) break;
  }

  // h = g^{p^{r-1}} generates the subgroup of order p - 1.
  BigInt e;
  mpz_ui_pow_ui(e.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(r - 1));
  const ModulusPtr mod = make_modulus(pr);
  const Residue h = mod_pow(Residue(g, mod), e);

  std::vector<BigInt> out;
  Residue x = h;
  for (int k = 1; k <= p - 2; ++k) {
    out.push_back(x.value());
    x = mod_mul(x, h);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<BigInt> precondition_check(const TestParams& params) {
  for (const auto& x : precondition_solutions(params.p, params.r)) {
    if (mpz_divisible_p(params.M.get_mpz_t(), x.get_mpz_t())) return x;
  }
  return std::nullopt;
}

CycElem compute_alpha(const RingPtr& ring, const SeedRecord& seed) {
  const CycElem pi = from_zeta_p_terms(ring, seed.pi);
  const CycElem ratio = cyc_mul(pi, cyc_inverse(conj(pi)));
  return apply_group_ring(ratio, compute_gamma(seed.p));
}

SequenceState sequence_from_power(const CycElem& beta, std::uint64_t k) {
  const int p = beta.p();
  const int d = (p - 1) / 2;
  const CycElem trace = cyc_add(beta, conj(beta));

  // e[j] = j-th elementary symmetric function of the conjugate traces seen so far.
  std::vector<CycElem> e;
  e.reserve(static_cast<std::size_t>(d + 1));
  e.push_back(CycElem::one(beta.ring()));
  for (int i = 1; i <= d; ++i) {
    const CycElem a = galois(trace, 2 * i - 1);
    e.push_back(cyc_mul(e.back(), a));
    for (int j = i - 1; j >= 1; --j) e[j] = cyc_add(e[j], cyc_mul(e[j - 1], a));
  }

  SequenceState s;
  s.k = k;
  for (int j = 1; j <= d; ++j) s.values.push_back(rational_value(e[j]).value());
  return s;
}

SequenceState initial_sequence(const TestParams& params, const SeedRecord& seed) {
  const RingPtr ring = CycRing::create(params.p, params.M);
  return sequence_from_power(compute_alpha(ring, seed), 0);
}

std::vector<BigInt> expected_sequence(const TestParams& params, Case c) {
  const auto a = acceptance_constants(params.p);
  std::vector<BigInt> out;
  for (std::size_t j = 0; j < a.size(); ++j) {
    BigInt v = a[j];
    if (c == Case::kII && (j + 1) % 2 == 1) v = -v;
    reduce_canonical(v, params.M);
    out.push_back(std::move(v));
  }
  return out;
}

Verdict run_general(const TestParams& params, const SeedRecord& seed, const EngineOptions& options) {
  if (params.p != seed.p) throw Error(ErrorCode::kInvalidArgument, "seed is for a different p");
  const auto start = Clock::now();
  const auto finish = [&](Verdict v) {
    v.elapsed_seconds = seconds_since(start);
    return v;
  };
  constexpr Mode mode = Mode::kGeneral;

  if (auto x = precondition_check(params)) return finish(factor_verdict(mode, *x, "precondition"));

  SymbolStep sym = symbol_step(params, seed, mode);
  if (sym.early) return finish(*std::move(sym.early));
  const Case c = case_of(*sym.value, params.p);

  const RingPtr ring = CycRing::create(params.p, params.M);
  std::optional<CycElem> alpha;
  try {
    alpha = compute_alpha(ring, seed);
  } catch (const FactorFound& e) {
    auto v = factor_verdict(mode, e.factor(), "inversion");
    v.symbol = sym.value;
    v.outside_table = sym.outside_table;
    return finish(std::move(v));
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kZeroDivisor) throw;
    auto v = zero_divisor_verdict(mode, e);
    v.symbol = sym.value;
    v.outside_table = sym.outside_table;
    return finish(std::move(v));
  }

  const unsigned long step_exponent = 2UL * static_cast<unsigned long>(params.p);
  const BigInt step_e(step_exponent);
  CycElem beta = *alpha;
  for (std::uint64_t k = 0;; ++k) {
    if (options.on_power) options.on_power(k, beta);
    if (options.on_sequence) options.on_sequence(sequence_from_power(beta, k));
    if (k + 1 >= params.r) break;
    beta = cyc_pow(beta, step_e);
  }

  Verdict v;
  v.mode = mode;
  v.symbol = sym.value;
  v.outside_table = sym.outside_table;
  v.iterations = params.r - 1;
  judge(params, c, sequence_from_power(beta, params.r - 1), v);
  return finish(std::move(v));
}

BigInt p3_initial(const BigInt& M) {
  const ModulusPtr mod = make_modulus(M);
  return mod_mul(Residue(-13L, mod), mod_inverse(Residue(7L, mod))).value();
}

BigInt p3_step(const BigInt& s, const BigInt& M) {
  // G_6(s) = ((s^2 - 6) s^2 + 9) s^2 - 2
  BigInt sq = s * s;
  reduce_canonical(sq, M);
  BigInt acc = sq - 6;
  acc *= sq;
  acc += 9;
  reduce_canonical(acc, M);
  acc *= sq;
  acc -= 2;
  reduce_canonical(acc, M);
  return acc;
}

Verdict run_recurrence_p3(const TestParams& params, const EngineOptions& options) {
  if (params.p != 3) throw Error(ErrorCode::kInvalidArgument, "p = 3 recurrence needs p = 3");
  const auto start = Clock::now();
  constexpr Mode mode = Mode::kRecurrenceP3;

  SymbolStep sym = symbol_step(params, seed_for(3), mode);
  if (sym.early) {
    sym.early->elapsed_seconds = seconds_since(start);
    return *std::move(sym.early);
  }
  const Case c = case_of(*sym.value, 3);

  BigInt s = p3_initial(params.M);
  for (std::uint64_t k = 0;; ++k) {
    if (options.on_sequence) options.on_sequence(SequenceState{k, {s}});
    if (k + 1 >= params.r) break;
    s = p3_step(s, params.M);
  }

  Verdict v;
  v.mode = mode;
  v.symbol = sym.value;
  v.outside_table = sym.outside_table;
  v.iterations = params.r - 1;
  judge(params, c, SequenceState{params.r - 1, {s}}, v);
  v.elapsed_seconds = seconds_since(start);
  return v;
}

std::span<const BivariateTerm> p5_recurrence_s1() { return kP5S1; }
std::span<const BivariateTerm> p5_recurrence_s2() { return kP5S2; }

std::pair<BigInt, BigInt> p5_step(const BigInt& s1, const BigInt& s2, const BigInt& M) {
  std::vector<BigInt> s1_pow(11);
  s1_pow[0] = 1;
  for (std::size_t e = 1; e < s1_pow.size(); ++e) {
    s1_pow[e] = s1_pow[e - 1] * s1;
    reduce_canonical(s1_pow[e], M);
  }
  return {eval_bivariate(kP5S1, s1_pow, s2, M), eval_bivariate(kP5S2, s1_pow, s2, M)};
}

Verdict run_recurrence_p5(const TestParams& params, const EngineOptions& options) {
  if (params.p != 5) throw Error(ErrorCode::kInvalidArgument, "p = 5 recurrence needs p = 5");
  const auto start = Clock::now();
  const auto finish = [&](Verdict v) {
    v.elapsed_seconds = seconds_since(start);
    return v;
  };
  constexpr Mode mode = Mode::kRecurrenceP5;
  const SeedRecord& seed = seed_for(5);

  if (auto x = precondition_check(params)) return finish(factor_verdict(mode, *x, "precondition"));

  SymbolStep sym = symbol_step(params, seed, mode);
  if (sym.early) return finish(*std::move(sym.early));
  const Case c = case_of(*sym.value, 5);

  SequenceState state;
  try {
    state = initial_sequence(params, seed);
  } catch (const FactorFound& e) {
    auto v = factor_verdict(mode, e.factor(), "inversion");
    v.symbol = sym.value;
    return finish(std::move(v));
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kZeroDivisor) throw;
    auto v = zero_divisor_verdict(mode, e);
    v.symbol = sym.value;
    return finish(std::move(v));
  }

  BigInt s1 = state.values[0];
  BigInt s2 = state.values[1];
  for (std::uint64_t k = 0;; ++k) {
    if (options.on_sequence) options.on_sequence(SequenceState{k, {s1, s2}});
    if (k + 1 >= params.r) break;
    auto next = p5_step(s1, s2, params.M);
    s1 = std::move(next.first);
    s2 = std::move(next.second);
  }

  Verdict v;
  v.mode = mode;
  v.symbol = sym.value;
  v.outside_table = sym.outside_table;
  v.iterations = params.r - 1;
  judge(params, c, SequenceState{params.r - 1, {s1, s2}}, v);
  return finish(std::move(v));
}

Verdict run_test(const TestParams& params, EngineMode mode, const EngineOptions& options) {
  const bool has_recurrence = params.p == 3 || params.p == 5;
  if (mode == EngineMode::kRecurrence && !has_recurrence) {
    throw Error(ErrorCode::kInvalidArgument,
                "no recurrence path for p = " + std::to_string(params.p));
  }
  if (mode == EngineMode::kGeneral || !has_recurrence) {
    return run_general(params, seed_for(params.p), options);
  }
  return params.p == 3 ? run_recurrence_p3(params, options) : run_recurrence_p5(params, options);
}

bool baseline_correction_check(const TestParams& params, const SequenceState& general,
                               const SequenceState& recurrence) {
  return general.k == params.r - 1 && recurrence.k == params.r - 1 &&
         general.values == recurrence.values;
}

bool baseline_correction_check(const TestParams& params, std::span<const SequenceState> general,
                               std::span<const SequenceState> recurrence) {
  if (general.size() != params.r || recurrence.size() != params.r) return false;
  for (std::size_t k = 0; k < general.size(); ++k) {
    if (general[k].k != k || !(general[k] == recurrence[k])) return false;
  }
  return true;
}

}  // namespace cycloprime
