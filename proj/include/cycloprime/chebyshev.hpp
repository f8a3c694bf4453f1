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
#include <string>
#include <vector>

#include "cycloprime/residue_ring.hpp"

namespace cycloprime {

/// Integer polynomial, lowest degree first, no trailing zeros.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<BigInt> coeffs);
  IntPoly(std::initializer_list<long> coeffs);

  const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  BigInt coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : BigInt(0); }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }
  std::string to_string() const;

  friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend bool operator==(const IntPoly&, const IntPoly&) = default;

 private:
  void normalize();
  std::vector<BigInt> coeffs_;
};

/// G_0 = 1, G_1 = x, G_n = G_{n/2}^2 - 2 (n even), G_{(n-1)/2} G_{(n+1)/2} - x (n odd).
IntPoly g_poly(int n);

/// sum_{k=0}^{(p-1)/2} G_k, the minimal polynomial of zeta_p + zeta_p^{-1}.
IntPoly f_poly(int p);

/// a_1..a_{(p-1)/2} with f_poly(p) = sum_j (-1)^j a_j x^{(p-1)/2-j}.
std::vector<long> acceptance_constants(int p);

/// Horner evaluation in the residue ring of x.
Residue eval_poly(const IntPoly& f, const Residue& x);

}  // namespace cycloprime
