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

#include "cycloprime/symbol.hpp"

#include <array>
#include <sstream>

#include "cycloprime/errors.hpp"

namespace cycloprime {

namespace {

using SignedTerms = std::vector<std::pair<long, long>>;

SeedRecord make_seed(int p, std::vector<ZetaTerm> pi, const SignedTerms& tau, unsigned long q,
                     int n_min) {
  return SeedRecord{p, std::move(pi), GroupRingExponent(p, tau), q, n_min};
}

const std::vector<SeedRecord>& seed_table() {
  static const std::vector<SeedRecord> seeds = [] {
    std::vector<SeedRecord> s;
    // 2 + 3 zeta_3
    s.push_back(make_seed(3, {{2, 0}, {3, 1}}, {{1, 1}}, 7, 1));
    // 1 - zeta_5 - zeta_5^3
    s.push_back(make_seed(5, {{1, 0}, {-1, 1}, {-1, 3}}, {{1, 1}, {3, -3}}, 11, 1));
    // 1 - zeta_7 + zeta_7^4
    s.push_back(make_seed(7, {{1, 0}, {-1, 1}, {1, 4}}, {{1, 1}, {3, 5}, {5, 3}}, 29, 2));
    // 1 + zeta_11^7 + zeta_11^8
    s.push_back(make_seed(11, {{1, 0}, {1, 7}, {1, 8}},
                          {{1, 1}, {3, -7}, {5, 9}, {7, -3}, {9, 5}}, 23, 1));
    // 1 + zeta_13^2 + zeta_13^5
    s.push_back(make_seed(13, {{1, 0}, {1, 2}, {1, 5}},
                          {{1, 1}, {3, 9}, {5, -5}, {7, -11}, {9, 3}, {11, -7}}, 53, 2));
    // 1 + zeta_17^2 + zeta_17^9
    s.push_back(make_seed(17, {{1, 0}, {1, 2}, {1, 9}},
                          {{1, 1}, {3, -11}, {5, 7}, {7, 5}, {9, -15}, {11, -3}, {13, -13},
                           {15, -9}},
                          103, 1));
    // -1 - zeta_19^2 + zeta_19^15
    s.push_back(make_seed(19, {{-1, 0}, {-1, 2}, {1, 15}},
                          {{1, 1}, {3, 13}, {5, -15}, {7, 11}, {9, 17}, {11, 7}, {13, 3},
                           {15, -5}, {17, 9}},
                          229, 2));
    return s;
  }();
  return seeds;
}

unsigned long pow_mod_small(unsigned long base, unsigned long e, unsigned long q) {
  unsigned long acc = 1 % q;
  base %= q;
  while (e > 0) {
    if (e & 1) acc = acc * base % q;
    base = base * base % q;
    e >>= 1;
  }
  return acc;
}

unsigned long reduce_small(long v, unsigned long q) {
  const long m = static_cast<long>(q);
  long r = v % m;
  if (r < 0) r += m;
  return static_cast<unsigned long>(r);
}

CaseEntry entry(long residue, int sign, int l) { return CaseEntry{residue, SymbolValue{sign, l}}; }

std::vector<CaseTable> build_case_tables() {
  std::vector<CaseTable> t;
  t.push_back({3, 7, {entry(2, 1, 2)}});
  t.push_back({5, 11, {entry(2, -1, 1)}});
  t.push_back({7, 29, {entry(8, -1, 3), entry(-8, -1, 3), entry(-5, 1, 1)}});
  t.push_back({11, 23, {entry(2, 1, 2)}});
  // Listed verbatim. The class -5 is given as zeta_13^8, but 25 = (-5)^2 is an
  // odd power of the image of zeta in F_53, so compute_symbol returns -zeta_13^8.
  t.push_back({13,
               53,
               {entry(25, 1, 3), entry(16, 1, 4), entry(-16, 1, 4), entry(-6, 1, 5),
                entry(11, 1, 6), entry(-24, 1, 7), entry(-5, 1, 8), entry(-10, 1, 9),
                entry(17, 1, 10), entry(14, -1, 2), entry(-8, -1, 3), entry(-3, -1, 4)}});
  t.push_back({17,
               103,
               {entry(-21, 1, 2), entry(15, 1, 7), entry(35, -1, 3), entry(24, -1, 4),
                entry(-2, -1, 6), entry(-9, -1, 6), entry(10, -1, 10), entry(-30, -1, 13)}});
  t.push_back({19,
               229,
               {entry(-48, 1, 1),   entry(-44, 1, 2),   entry(15, 1, 3),    entry(-4, 1, 6),
                entry(56, 1, 8),    entry(-55, 1, 10),  entry(-45, 1, 11),  entry(-61, 1, 16),
                entry(26, 1, 17),   entry(49, 1, 17),   entry(-98, -1, 1),  entry(38, -1, 8),
                entry(92, -1, 8),   entry(-69, -1, 10), entry(112, -1, 11), entry(-35, -1, 13),
                entry(-77, -1, 14), entry(-32, -1, 15)}});
  return t;
}

}  // namespace

const SeedRecord& seed_for(int p) {
  for (const auto& s : seed_table()) {
    if (s.p == p) return s;
  }
  throw Error(ErrorCode::kUnsupportedP, "no seed for p = " + std::to_string(p));
}

std::span<const SeedRecord> all_seeds() { return seed_table(); }

int SymbolValue::exponent(int p) const {
  const int base = 2 * l + (sign < 0 ? p : 0);
  return ((base % (2 * p)) + 2 * p) % (2 * p);
}

SymbolValue SymbolValue::from_exponent(int i, int p) {
  i = ((i % (2 * p)) + 2 * p) % (2 * p);
  if (i % 2 == 0) return SymbolValue{1, (i / 2) % p};
  // zeta_2p^i = -zeta_2p^(i+p) and i+p is even
  return SymbolValue{-1, ((i + p) / 2) % p};
}

std::string SymbolValue::to_string(int p) const {
  std::ostringstream os;
  if (sign < 0) os << "-";
  if (l == 0) {
    os << "1";
  } else {
    os << "zeta_" << p;
    if (l != 1) os << "^" << l;
  }
  return os.str();
}

unsigned long embed_root(const SeedRecord& seed) {
  const unsigned long q = seed.q;
  const int p = seed.p;
  const ExactCycElem pi = seed.exact_pi();
  for (unsigned long t = 1; t < q; ++t) {
    unsigned long phi = 0;
    unsigned long pw = 1;
    for (int i = 0; i < p; ++i) {
      phi = (i % 2 == 0) ? (phi + pw) % q : (phi + q - pw) % q;
      pw = pw * t % q;
    }
    if (phi != 0) continue;
    unsigned long val = 0;
    pw = 1;
    for (const auto& c : pi.coeffs) {
      const unsigned long ci = reduce_small(c.get_si(), q);
      val = (val + ci * pw) % q;
      pw = pw * t % q;
    }
    if (val == 0) return t;
  }
  throw Error(ErrorCode::kNoEmbedding,
              "no root of Phi_2p in F_" + std::to_string(q) + " annihilates the seed");
}

SymbolValue symbol_from_residue(const SeedRecord& seed, unsigned long m_mod_q) {
  const unsigned long q = seed.q;
  const int p = seed.p;
  m_mod_q %= q;
  if (m_mod_q == 0) {
    throw SeedDividesM(q, "q = " + std::to_string(q) + " divides M");
  }
  const unsigned long t = embed_root(seed);
  const unsigned long v = pow_mod_small(m_mod_q, (q - 1) / (2 * static_cast<unsigned long>(p)), q);
  unsigned long pw = 1;
  for (int i = 0; i < 2 * p; ++i) {
    if (pw == v) return SymbolValue::from_exponent(i, p);
    pw = pw * t % q;
  }
  throw Error(ErrorCode::kNoEmbedding, "M^((q-1)/2p) is not a power of the embedded root");
}

SymbolValue compute_symbol(const TestParams& params, const SeedRecord& seed) {
  if (params.p != seed.p) {
    throw Error(ErrorCode::kInvalidArgument, "seed and parameters disagree on p");
  }
  const unsigned long m_mod_q = mpz_fdiv_ui(params.M.get_mpz_t(), seed.q);
  const SymbolValue v = symbol_from_residue(seed, m_mod_q);
  if (v.l == 0) {
    throw Error(ErrorCode::kSymbolIsPlusMinusOne,
                "(M/pi) = " + v.to_string(seed.p) + "; the test does not apply");
  }
  return v;
}

Case case_of(const SymbolValue& v, int p) {
  if (v.l % p == 0) {
    throw Error(ErrorCode::kSymbolIsPlusMinusOne, "symbol is +/-1; no case applies");
  }
  return v.sign > 0 ? Case::kI : Case::kII;
}

const CaseTable& case_table(int p) {
  static const std::vector<CaseTable> tables = build_case_tables();
  for (const auto& t : tables) {
    if (t.p == p) return t;
  }
  throw Error(ErrorCode::kUnsupportedP, "no case table for p = " + std::to_string(p));
}

SymbolValue table_lookup(int p, const BigInt& M) {
  const CaseTable& table = case_table(p);
  const unsigned long r = mpz_fdiv_ui(M.get_mpz_t(), table.q);
  for (const auto& e : table.entries) {
    if (reduce_small(e.residue, table.q) == r) return e.value;
  }
  throw Error(ErrorCode::kUnlistedResidue, "M = " + std::to_string(r) + " (mod " +
                                               std::to_string(table.q) +
                                               ") is not a listed class for p = " +
                                               std::to_string(p));
}

}  // namespace cycloprime
