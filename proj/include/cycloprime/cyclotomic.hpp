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

// Arithmetic in R = Z[zeta]/(M) with zeta a primitive 2p-th root of unity.
//
// Elements are stored in the power basis {1, zeta, ..., zeta^(p-2)} and kept
// reduced modulo Phi_2p(x) = sum_{i<p} (-x)^i. Galois automorphisms sigma_c
// send zeta to zeta^c for c odd and prime to p.

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cycloprime/residue_ring.hpp"

namespace cycloprime {

struct CycBasis {
  int p = 0;
  int degree = 0;
  // Coefficients of Phi_2p, lowest degree first: 1, -1, 1, ..., 1.
  std::vector<int> reduction_poly;

  static CycBasis make(int p);

  friend bool operator==(const CycBasis& a, const CycBasis& b) { return a.p == b.p; }
};

/// A basis together with the modulus M. Shared by every element of the ring.
class CycRing {
 public:
  CycRing(int p, ModulusPtr modulus);

  static std::shared_ptr<const CycRing> create(int p, const BigInt& modulus);

  const CycBasis& basis() const noexcept { return basis_; }
  int p() const noexcept { return basis_.p; }
  int degree() const noexcept { return basis_.degree; }
  const BigInt& modulus() const noexcept { return *modulus_; }
  const ModulusPtr& modulus_ptr() const noexcept { return modulus_; }

 private:
  CycBasis basis_;
  ModulusPtr modulus_;
};

using RingPtr = std::shared_ptr<const CycRing>;

/// coeff * zeta_p^k, where zeta_p = zeta^2.
struct ZetaTerm {
  long coeff = 0;
  long k = 0;
};

class CycElem {
 public:
  /// coeffs must have ring->degree() entries; each is reduced into [0, M).
  CycElem(RingPtr ring, std::vector<BigInt> coeffs);

  static CycElem zero(RingPtr ring);
  static CycElem one(RingPtr ring);
  static CycElem constant(RingPtr ring, const BigInt& value);
  /// zeta^e for any integer e.
  static CycElem zeta_power(RingPtr ring, long e);

  const RingPtr& ring() const noexcept { return ring_; }
  int p() const noexcept { return ring_->p(); }
  const BigInt& modulus() const noexcept { return ring_->modulus(); }
  const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }
  Residue coeff(std::size_t i) const;

  bool is_zero() const noexcept;
  bool is_one() const noexcept;
  /// True when every non-constant coordinate is 0 mod M.
  bool is_rational() const noexcept;

  friend bool operator==(const CycElem& a, const CycElem& b);

 private:
  struct Trusted {};
  CycElem(Trusted, RingPtr ring, std::vector<BigInt> coeffs) noexcept
      : ring_(std::move(ring)), coeffs_(std::move(coeffs)) {}

  friend class CycElemAccess;

  RingPtr ring_;
  std::vector<BigInt> coeffs_;
};

CycElem from_zeta_p_terms(RingPtr ring, std::span<const ZetaTerm> terms);

// Binary ops throw Error(kBasisMismatch) when the rings differ in p or M.
CycElem cyc_add(const CycElem& a, const CycElem& b);
CycElem cyc_sub(const CycElem& a, const CycElem& b);
CycElem cyc_mul(const CycElem& a, const CycElem& b);
CycElem cyc_square(const CycElem& a);
CycElem cyc_scale(const CycElem& a, const BigInt& k);
CycElem cyc_pow(const CycElem& a, const BigInt& e);

/// sigma_c. Negative c is normalized mod 2p; throws Error(kBadAutomorphismIndex)
/// if gcd(c, 2p) != 1.
CycElem galois(const CycElem& a, long c);
/// Complex conjugation, sigma_{-1}.
CycElem conj(const CycElem& a);

/// Extended Euclid over (Z/M)[x] against Phi_2p.
/// Throws FactorFound when a leading coefficient shares a factor with M,
/// Error(kDegenerateElement) for a = 0 and Error(kZeroDivisor) when a and
/// Phi_2p have a nonconstant common factor mod M.
CycElem cyc_inverse(const CycElem& a);

/// Constant coordinate, if all others vanish; NotRational(index) otherwise.
Residue rational_value(const CycElem& a);

inline CycElem operator+(const CycElem& a, const CycElem& b) { return cyc_add(a, b); }
inline CycElem operator-(const CycElem& a, const CycElem& b) { return cyc_sub(a, b); }
inline CycElem operator*(const CycElem& a, const CycElem& b) { return cyc_mul(a, b); }

/// k * sigma_c with c an odd residue mod 2p prime to p.
struct GroupRingTerm {
  long k = 0;
  int c = 1;

  friend bool operator==(const GroupRingTerm&, const GroupRingTerm&) = default;
};

/// Formal sum of Galois automorphisms acting multiplicatively on R.
class GroupRingExponent {
 public:
  /// Terms as (k, c) with c in the +/- notation; indices are normalized mod 2p,
  /// repeated indices merged and the result sorted by c.
  GroupRingExponent(int p, std::span<const std::pair<long, long>> signed_terms);

  int p() const noexcept { return p_; }
  const std::vector<GroupRingTerm>& terms() const noexcept { return terms_; }
  std::string to_string() const;

  friend bool operator==(const GroupRingExponent&, const GroupRingExponent&) = default;

 private:
  int p_;
  std::vector<GroupRingTerm> terms_;
};

/// Normalizes an automorphism index into [1, 2p). Throws on gcd(c, 2p) != 1.
int normalize_automorphism_index(long c, int p);

/// sum_{i=1}^{(p-1)/2} (2i-1) sigma_{(2i-1)^{-1}}, inverses taken mod 2p.
GroupRingExponent compute_gamma(int p);

/// prod_c sigma_c(a)^{k_c}; negative k_c go through cyc_inverse.
CycElem apply_group_ring(const CycElem& a, const GroupRingExponent& e);

/// Element of Z[zeta] with unbounded integer coordinates.
struct ExactCycElem {
  int p = 0;
  std::vector<BigInt> coeffs;

  friend bool operator==(const ExactCycElem&, const ExactCycElem&) = default;
};

ExactCycElem exact_from_zeta_p_terms(int p, std::span<const ZetaTerm> terms);
ExactCycElem exact_mul(const ExactCycElem& a, const ExactCycElem& b);
ExactCycElem exact_galois(const ExactCycElem& a, long c);
CycElem to_ring(const ExactCycElem& a, RingPtr ring);

/// Product of all p-1 conjugates, computed exactly. Throws
/// Error(kNonRationalNorm) if the product is not a rational integer.
BigInt norm_exact(const ExactCycElem& seed);

}  // namespace cycloprime
