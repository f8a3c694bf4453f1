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

#include <array>
#include <cstdint>
#include <memory>

#include <gmpxx.h>

namespace cycloprime {

using BigInt = mpz_class;

inline constexpr std::array<int, 7> kSupportedPrimes{3, 5, 7, 11, 13, 17, 19};

// Largest n accepted by build_params; r = 2^n must stay addressable.
inline constexpr int kMaxN = 32;

bool is_supported_prime(int p) noexcept;

/// Parameters of the tested number M = (2p)^r + 1 with r = 2^n.
struct TestParams {
  int p = 0;
  int n = 0;
  std::uint64_t r = 0;
  BigInt M;
};

/// Throws Error(kUnsupportedP) for p outside {3,...,19} and Error(kBadN) for
/// n < 1 or n > kMaxN.
TestParams build_params(int p, int n);

using ModulusPtr = std::shared_ptr<const BigInt>;

/// Shared immutable modulus. Throws Error(kInvalidArgument) unless m > 1.
ModulusPtr make_modulus(BigInt m);

/// Canonical residue in [0, modulus). Negative inputs are reduced.
class Residue {
 public:
  Residue(BigInt value, ModulusPtr modulus);
  Residue(long value, ModulusPtr modulus);

  const BigInt& value() const noexcept { return value_; }
  const BigInt& modulus() const noexcept { return *modulus_; }
  const ModulusPtr& modulus_ptr() const noexcept { return modulus_; }

  bool is_zero() const noexcept { return value_ == 0; }
  bool is_one() const noexcept { return value_ == 1; }

  friend bool operator==(const Residue& a, const Residue& b) {
    return a.value_ == b.value_ && a.modulus() == b.modulus();
  }

 private:
  BigInt value_;
  ModulusPtr modulus_;
};

bool same_modulus(const Residue& a, const Residue& b) noexcept;

// Binary ops throw Error(kModulusMismatch) when moduli differ.
Residue mod_add(const Residue& a, const Residue& b);
Residue mod_sub(const Residue& a, const Residue& b);
Residue mod_mul(const Residue& a, const Residue& b);
Residue mod_neg(const Residue& a);

/// Left-to-right square-and-multiply; e must be nonnegative.
Residue mod_pow(const Residue& a, const BigInt& e);

/// Throws NotInvertible carrying gcd(a, modulus) when it exceeds 1.
Residue mod_inverse(const Residue& a);

inline Residue operator+(const Residue& a, const Residue& b) { return mod_add(a, b); }
inline Residue operator-(const Residue& a, const Residue& b) { return mod_sub(a, b); }
inline Residue operator*(const Residue& a, const Residue& b) { return mod_mul(a, b); }
inline Residue operator-(const Residue& a) { return mod_neg(a); }

/// Reduces v into [0, m) in place. m must be positive.
void reduce_canonical(BigInt& v, const BigInt& m);

}  // namespace cycloprime
