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

#include <cstddef>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace cycloprime {

enum class ErrorCode {
  kUnsupportedP,
  kBadN,
  kModulusMismatch,
  kNotInvertible,
  kBasisMismatch,
  kBadAutomorphismIndex,
  kFactorFound,
  kDegenerateElement,
  kZeroDivisor,
  kNonRationalNorm,
  kNotRational,
  kNoEmbedding,
  kSeedDividesM,
  kSymbolIsPlusMinusOne,
  kUnlistedResidue,
  kInvalidArgument,
};

const char* error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// gcd(value, modulus) > 1. When 1 < gcd < modulus the gcd splits the modulus.
class NotInvertible : public Error {
 public:
  NotInvertible(mpz_class gcd, const std::string& message)
      : Error(ErrorCode::kNotInvertible, message), gcd_(std::move(gcd)) {}

  const mpz_class& gcd() const noexcept { return gcd_; }

 private:
  mpz_class gcd_;
};

// A nontrivial factor of the ring modulus met during an inversion.
class FactorFound : public Error {
 public:
  FactorFound(mpz_class factor, const std::string& message)
      : Error(ErrorCode::kFactorFound, message), factor_(std::move(factor)) {}

  const mpz_class& factor() const noexcept { return factor_; }

 private:
  mpz_class factor_;
};

class NotRational : public Error {
 public:
  NotRational(std::size_t index, const std::string& message)
      : Error(ErrorCode::kNotRational, message), index_(index) {}

  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

class SeedDividesM : public Error {
 public:
  SeedDividesM(unsigned long q, const std::string& message)
      : Error(ErrorCode::kSeedDividesM, message), q_(q) {}

  unsigned long q() const noexcept { return q_; }

 private:
  unsigned long q_;
};

}  // namespace cycloprime
