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

#include "cycloprime/chebyshev.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "cycloprime/errors.hpp"

namespace cycloprime {

IntPoly::IntPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
  for (long c : coeffs) coeffs_.emplace_back(c);
  normalize();
}

void IntPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::string IntPoly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const BigInt& c = coeffs_[i];
    if (c == 0) continue;
    BigInt mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (mag != 1 || i == 0) os << mag.get_str();
    if (i >= 1) os << "x";
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
  std::vector<BigInt> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.coeff(i) + b.coeff(i);
  return IntPoly(std::move(out));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) {
  std::vector<BigInt> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.coeff(i) - b.coeff(i);
  return IntPoly(std::move(out));
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.coeffs_.empty() || b.coeffs_.empty()) return IntPoly();
  std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return IntPoly(std::move(out));
}

namespace {

const IntPoly& g_memo(int n, std::map<int, IntPoly>& memo) {
  if (auto it = memo.find(n); it != memo.end()) return it->second;
  IntPoly g;
  if (n % 2 == 0) {
    const IntPoly& half = g_memo(n / 2, memo);
    g = half * half - IntPoly{2};
  } else {
    const IntPoly lo = g_memo((n - 1) / 2, memo);
    const IntPoly& hi = g_memo((n + 1) / 2, memo);
    g = lo * hi - IntPoly{0, 1};
  }
  return memo.emplace(n, std::move(g)).first->second;
}

}  // namespace

IntPoly g_poly(int n) {
  if (n < 0) throw Error(ErrorCode::kInvalidArgument, "G_n needs n >= 0");
  std::map<int, IntPoly> memo{{0, IntPoly{1}}, {1, IntPoly{0, 1}}};
  return g_memo(n, memo);
}

IntPoly f_poly(int p) {
  if (!is_supported_prime(p)) {
    throw Error(ErrorCode::kUnsupportedP, "f_poly: unsupported p = " + std::to_string(p));
  }
  IntPoly f;
  for (int k = 0; k <= (p - 1) / 2; ++k) f = f + g_poly(k);
  return f;
}

std::vector<long> acceptance_constants(int p) {
  const IntPoly f = f_poly(p);
  const int d = (p - 1) / 2;
  std::vector<long> a;
  for (int j = 1; j <= d; ++j) {
    const long c = f.coeff(static_cast<std::size_t>(d - j)).get_si();
    a.push_back(j % 2 == 0 ? c : -c);
  }
  return a;
}

Residue eval_poly(const IntPoly& f, const Residue& x) {
  const BigInt& m = x.modulus();
  BigInt acc = 0;
  for (int i = f.degree(); i >= 0; --i) {
    acc *= x.value();
    acc += f.coeffs()[i];
    reduce_canonical(acc, m);
  }
  return Residue(std::move(acc), x.modulus_ptr());
}

}  // namespace cycloprime
