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

#include "cycloprime/residue_ring.hpp"

#include <algorithm>
#include <string>

#include "cycloprime/errors.hpp"

namespace cycloprime {

const char* error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kUnsupportedP: return "UnsupportedP";
    case ErrorCode::kBadN: return "BadN";
    case ErrorCode::kModulusMismatch: return "ModulusMismatch";
    case ErrorCode::kNotInvertible: return "NotInvertible";
    case ErrorCode::kBasisMismatch: return "BasisMismatch";
    case ErrorCode::kBadAutomorphismIndex: return "BadAutomorphismIndex";
    case ErrorCode::kFactorFound: return "FactorFound";
    case ErrorCode::kDegenerateElement: return "DegenerateElement";
    case ErrorCode::kZeroDivisor: return "ZeroDivisor";
    case ErrorCode::kNonRationalNorm: return "NonRationalNorm";
    case ErrorCode::kNotRational: return "NotRational";
    case ErrorCode::kNoEmbedding: return "NoEmbedding";
    case ErrorCode::kSeedDividesM: return "SeedDividesM";
    case ErrorCode::kSymbolIsPlusMinusOne: return "SymbolIsPlusMinusOne";
    case ErrorCode::kUnlistedResidue: return "UnlistedResidue";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

bool is_supported_prime(int p) noexcept {
  return std::find(kSupportedPrimes.begin(), kSupportedPrimes.end(), p) !=
         kSupportedPrimes.end();
}

TestParams build_params(int p, int n) {
  if (!is_supported_prime(p)) {
    throw Error(ErrorCode::kUnsupportedP,
                "p = " + std::to_string(p) + " is not one of 3,5,7,11,13,17,19");
  }
  if (n < 1 || n > kMaxN) {
    throw Error(ErrorCode::kBadN, "n = " + std::to_string(n) + " is outside [1, " +
                                      std::to_string(kMaxN) + "]");
  }
  TestParams params;
  params.p = p;
  params.n = n;
  params.r = std::uint64_t{1} << n;
  mpz_ui_pow_ui(params.M.get_mpz_t(), static_cast<unsigned long>(2 * p),
                static_cast<unsigned long>(params.r));
  params.M += 1;
  return params;
}

ModulusPtr make_modulus(BigInt m) {
  if (m <= 1) throw Error(ErrorCode::kInvalidArgument, "modulus must exceed 1");
  return std::make_shared<const BigInt>(std::move(m));
}

void reduce_canonical(BigInt& v, const BigInt& m) {
  mpz_fdiv_r(v.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
}

Residue::Residue(BigInt value, ModulusPtr modulus)
    : value_(std::move(value)), modulus_(std::move(modulus)) {
  if (!modulus_ || *modulus_ <= 1) {
    throw Error(ErrorCode::kInvalidArgument, "modulus must exceed 1");
  }
  reduce_canonical(value_, *modulus_);
}

Residue::Residue(long value, ModulusPtr modulus) : Residue(BigInt(value), std::move(modulus)) {}

bool same_modulus(const Residue& a, const Residue& b) noexcept {
  return a.modulus_ptr() == b.modulus_ptr() || a.modulus() == b.modulus();
}

namespace {

void require_same_modulus(const Residue& a, const Residue& b) {
  if (!same_modulus(a, b)) {
    throw Error(ErrorCode::kModulusMismatch, "operands live in different residue rings");
  }
}

}  // namespace

Residue mod_add(const Residue& a, const Residue& b) {
  require_same_modulus(a, b);
  BigInt v = a.value() + b.value();
  if (v >= a.modulus()) v -= a.modulus();
  return Residue(std::move(v), a.modulus_ptr());
}

Residue mod_sub(const Residue& a, const Residue& b) {
  require_same_modulus(a, b);
  BigInt v = a.value() - b.value();
  if (v < 0) v += a.modulus();
  return Residue(std::move(v), a.modulus_ptr());
}

Residue mod_mul(const Residue& a, const Residue& b) {
  require_same_modulus(a, b);
  return Residue(BigInt(a.value() * b.value()), a.modulus_ptr());
}

Residue mod_neg(const Residue& a) {
  if (a.is_zero()) return a;
  return Residue(BigInt(a.modulus() - a.value()), a.modulus_ptr());
}

Residue mod_pow(const Residue& a, const BigInt& e) {
  if (e < 0) throw Error(ErrorCode::kInvalidArgument, "mod_pow exponent must be nonnegative");
  const BigInt& m = a.modulus();
  BigInt acc = 1;
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    acc *= acc;
    acc %= m;
    if (mpz_tstbit(e.get_mpz_t(), i)) {
      acc *= a.value();
      acc %= m;
    }
  }
  return Residue(std::move(acc), a.modulus_ptr());
}

Residue mod_inverse(const Residue& a) {
  BigInt g;
  mpz_gcd(g.get_mpz_t(), a.value().get_mpz_t(), a.modulus().get_mpz_t());
  if (g != 1) {
    throw NotInvertible(g, "residue " + a.value().get_str() + " shares factor " + g.get_str() +
                               " with the modulus");
  }
  BigInt inv;
  mpz_invert(inv.get_mpz_t(), a.value().get_mpz_t(), a.modulus().get_mpz_t());
  return Residue(std::move(inv), a.modulus_ptr());
}

}  // namespace cycloprime
