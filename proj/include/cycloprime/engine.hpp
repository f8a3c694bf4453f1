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
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "cycloprime/cyclotomic.hpp"
#include "cycloprime/residue_ring.hpp"
#include "cycloprime/symbol.hpp"

namespace cycloprime {

enum class Outcome { kPrime, kComposite, kInapplicable };

enum class Mode { kGeneral, kRecurrenceP3, kRecurrenceP5, kLucasLehmer, kPepin };

const char* outcome_name(Outcome outcome) noexcept;
const char* mode_name(Mode mode) noexcept;

/// S_k^{(1)}, ..., S_k^{((p-1)/2)} as residues mod M.
struct SequenceState {
  std::uint64_t k = 0;
  std::vector<BigInt> values;

  friend bool operator==(const SequenceState&, const SequenceState&) = default;
};

struct FactorWitness {
  BigInt factor;
  std::string source;  // "precondition", "seed-norm", "inversion", "trial-division"
};

/// First j (1-based) with S^{(j)} != expected.
struct CongruenceWitness {
  int j = 0;
  BigInt observed;
  BigInt expected;
};

struct ReasonWitness {
  std::string reason;
};

using Witness = std::variant<std::monostate, FactorWitness, CongruenceWitness, ReasonWitness>;

struct Verdict {
  Outcome outcome = Outcome::kInapplicable;
  Witness witness;
  Mode mode = Mode::kGeneral;
  double elapsed_seconds = 0.0;
  std::optional<SymbolValue> symbol;
  // True when the symbol was not covered by the residue-class table (or n < n_min).
  bool outside_table = false;
  std::optional<SequenceState> final_state;
  std::uint64_t iterations = 0;
};

struct EngineOptions {
  // General path: beta = alpha^{(2p)^k} for every k in [0, r-1].
  std::function<void(std::uint64_t, const CycElem&)> on_power;
  // Every S_k. On the general path this costs an extra symmetric-function
  // evaluation per step.
  std::function<void(const SequenceState&)> on_sequence;
};

/// The p-2 solutions of x^{p-1} = 1 (mod p^r) with 1 < x < p^r, ascending.
std::vector<BigInt> precondition_solutions(int p, std::uint64_t r);

/// A solution x dividing M, if one exists.
std::optional<BigInt> precondition_check(const TestParams& params);

/// alpha = (pi / conj(pi))^gamma in Z[zeta]/(M). Throws FactorFound or
/// Error(kZeroDivisor) when conj(pi) is not a unit.
CycElem compute_alpha(const RingPtr& ring, const SeedRecord& seed);

/// Elementary symmetric functions of sigma_{2i-1}(beta + conj(beta)).
/// Throws NotRational if a coordinate fails to vanish (an internal bug).
SequenceState sequence_from_power(const CycElem& beta, std::uint64_t k);

/// S_0 for the seed of params.p.
SequenceState initial_sequence(const TestParams& params, const SeedRecord& seed);

/// Expected S_{r-1} values for the given case, as residues mod M.
std::vector<BigInt> expected_sequence(const TestParams& params, Case c);

Verdict run_general(const TestParams& params, const SeedRecord& seed,
                    const EngineOptions& options = {});
Verdict run_recurrence_p3(const TestParams& params, const EngineOptions& options = {});
Verdict run_recurrence_p5(const TestParams& params, const EngineOptions& options = {});

enum class EngineMode { kAuto, kGeneral, kRecurrence };

/// kAuto picks the recurrence for p in {3, 5}. kRecurrence for other p throws
/// Error(kInvalidArgument).
Verdict run_test(const TestParams& params, EngineMode mode, const EngineOptions& options = {});

/// True iff both final states agree at k = r-1.
bool baseline_correction_check(const TestParams& params, const SequenceState& general,
                               const SequenceState& recurrence);
/// Verbose variant: both traces must cover k = 0..r-1 and agree everywhere.
bool baseline_correction_check(const TestParams& params, std::span<const SequenceState> general,
                               std::span<const SequenceState> recurrence);

/// coeff * s1^e1 * s2^e2
struct BivariateTerm {
  long coeff = 0;
  int e1 = 0;
  int e2 = 0;
};

std::span<const BivariateTerm> p5_recurrence_s1();
std::span<const BivariateTerm> p5_recurrence_s2();

/// One step S_k -> S_{k+1} of the p = 5 recurrences.
std::pair<BigInt, BigInt> p5_step(const BigInt& s1, const BigInt& s2, const BigInt& M);

/// S_0 = -13/7 for the p = 3 seed.
BigInt p3_initial(const BigInt& M);
/// S -> G_6(S) mod M.
BigInt p3_step(const BigInt& s, const BigInt& M);

}  // namespace cycloprime
