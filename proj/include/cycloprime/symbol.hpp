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

// Power residue symbol (M/pi)_{2p} for the tabulated seeds pi.
//
// Each seed has prime norm q = 1 (mod 2p), so Z[zeta]/(pi) is the field F_q
// and zeta reduces to an element t of order 2p there. The symbol is the
// power t^i congruent to M^{(q-1)/2p}; it is reported as +/- zeta_p^l.

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cycloprime/cyclotomic.hpp"
#include "cycloprime/residue_ring.hpp"

namespace cycloprime {

struct SeedRecord {
  int p = 0;
  std::vector<ZetaTerm> pi;  // in powers of zeta_p
  GroupRingExponent tau;     // as written next to the seed
  unsigned long q = 0;       // norm of pi
  int n_min = 1;

  ExactCycElem exact_pi() const { return exact_from_zeta_p_terms(p, pi); }
};

/// Seed table for every supported p.
const SeedRecord& seed_for(int p);
std::span<const SeedRecord> all_seeds();

/// sign * zeta_p^l, sign in {+1, -1}, l in [0, p).
struct SymbolValue {
  int sign = 1;
  int l = 0;

  /// Exponent i in [0, 2p) with zeta_2p^i equal to this value.
  int exponent(int p) const;
  static SymbolValue from_exponent(int i, int p);
  std::string to_string(int p) const;

  friend bool operator==(const SymbolValue&, const SymbolValue&) = default;
};

/// Reduction of zeta modulo pi: the unique t in F_q with Phi_2p(t) = 0 and
/// pi(t) = 0. Throws Error(kNoEmbedding) if none exists.
unsigned long embed_root(const SeedRecord& seed);

/// Throws SeedDividesM when q | M and Error(kSymbolIsPlusMinusOne) when the
/// symbol is +/-1.
SymbolValue compute_symbol(const TestParams& params, const SeedRecord& seed);

/// Same computation from the residue of M mod q; no +/-1 rejection.
SymbolValue symbol_from_residue(const SeedRecord& seed, unsigned long m_mod_q);

enum class Case { kI, kII };

/// Case I expects S^{(j)} = a_j, case II expects (-1)^j a_j.
/// Throws Error(kSymbolIsPlusMinusOne) if v.l = 0 (mod p).
Case case_of(const SymbolValue& v, int p);

struct CaseEntry {
  long residue;  // as listed, may be negative
  SymbolValue value;
};

struct CaseTable {
  int p = 0;
  unsigned long q = 0;
  std::vector<CaseEntry> entries;
};

const CaseTable& case_table(int p);

/// Tabulated symbol for M mod q. Throws Error(kUnlistedResidue) when the
/// class is not listed.
SymbolValue table_lookup(int p, const BigInt& M);

}  // namespace cycloprime
