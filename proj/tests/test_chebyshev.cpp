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

#include <doctest.h>

#include <cmath>
#include <map>
#include <numbers>
#include <vector>

#include "cycloprime/chebyshev.hpp"

using namespace cycloprime;

namespace {

// Laurent polynomial in x as exponent -> coefficient.
using Laurent = std::map<int, BigInt>;

Laurent laurent_mul(const Laurent& a, const Laurent& b) {
  Laurent out;
  for (const auto& [i, x] : a) {
    for (const auto& [j, y] : b) out[i + j] += x * y;
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

// f(x + 1/x) expanded.
Laurent substitute(const IntPoly& f) {
  const Laurent u{{-1, 1}, {1, 1}};
  Laurent power{{0, 1}};
  Laurent out;
  for (int k = 0; k <= f.degree(); ++k) {
    for (const auto& [e, c] : power) out[e] += c * f.coeff(k);
    power = laurent_mul(power, u);
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

}  // namespace

TEST_CASE("G_0 .. G_9 match the published listing") {
  CHECK(g_poly(0) == IntPoly{1});
  CHECK(g_poly(1) == IntPoly{0, 1});
  CHECK(g_poly(2) == IntPoly{-2, 0, 1});
  CHECK(g_poly(3) == IntPoly{0, -3, 0, 1});
  CHECK(g_poly(4) == IntPoly{2, 0, -4, 0, 1});
  CHECK(g_poly(5) == IntPoly{0, 5, 0, -5, 0, 1});
  CHECK(g_poly(6) == IntPoly{-2, 0, 9, 0, -6, 0, 1});
  CHECK(g_poly(7) == IntPoly{0, -7, 0, 14, 0, -7, 0, 1});
  CHECK(g_poly(8) == IntPoly{2, 0, -16, 0, 20, 0, -8, 0, 1});
  CHECK(g_poly(9) == IntPoly{0, 9, 0, -30, 0, 27, 0, -9, 0, 1});
}

TEST_CASE("G_n(x + 1/x) = x^n + x^-n") {
  // G_0 is 1 by definition, not x^0 + x^0.
  CHECK(substitute(g_poly(0)) == Laurent{{0, 1}});
  for (int n = 1; n <= 40; ++n) {
    CAPTURE(n);
    CHECK(substitute(g_poly(n)) == Laurent{{-n, 1}, {n, 1}});
    CHECK(g_poly(n).is_monic());
    CHECK(g_poly(n).degree() == n);
  }
}

TEST_CASE("F_p match the published listing") {
  CHECK(f_poly(3) == IntPoly{1, 1});
  CHECK(f_poly(5) == IntPoly{-1, 1, 1});
  CHECK(f_poly(7) == IntPoly{-1, -2, 1, 1});
  CHECK(f_poly(11) == IntPoly{1, 3, -3, -4, 1, 1});
  CHECK(f_poly(13) == IntPoly{-1, 3, 6, -4, -5, 1, 1});
  CHECK(f_poly(17) == IntPoly{1, -4, -10, 10, 15, -6, -7, 1, 1});
  CHECK(f_poly(19) == IntPoly{1, 5, -10, -20, 15, 21, -7, -8, 1, 1});
}

TEST_CASE("F_p vanishes at 2cos(2 pi k / p)") {
  for (int p : kSupportedPrimes) {
    const auto f = f_poly(p);
    CHECK(f.degree() == (p - 1) / 2);
    for (int k = 1; k <= (p - 1) / 2; ++k) {
      const double x = 2.0 * std::cos(2.0 * std::numbers::pi * k / p);
      double acc = 0.0;
      for (int i = f.degree(); i >= 0; --i) acc = acc * x + f.coeff(i).get_d();
      CHECK(std::abs(acc) < 1e-9);
    }
  }
}

TEST_CASE("acceptance constants") {
  CHECK(acceptance_constants(3) == std::vector<long>{-1});
  CHECK(acceptance_constants(5) == std::vector<long>{-1, -1});
  CHECK(acceptance_constants(7) == std::vector<long>{-1, -2, 1});
  CHECK(acceptance_constants(11) == std::vector<long>{-1, -4, 3, 3, -1});
  CHECK(acceptance_constants(13) == std::vector<long>{-1, -5, 4, 6, -3, -1});
  CHECK(acceptance_constants(17) == std::vector<long>{-1, -7, 6, 15, -10, -10, 4, 1});
  CHECK(acceptance_constants(19) == std::vector<long>{-1, -8, 7, 21, -15, -20, 10, 5, -1});
}

TEST_CASE("eval_poly") {
  const auto m37 = make_modulus(37);
  CHECK(eval_poly(g_poly(6), Residue(14L, m37)).value() == 36);
  const Residue x(29L, m37);
  CHECK(eval_poly(g_poly(1), x) == x);
  const BigInt M = build_params(3, 2).M;
  CHECK(eval_poly(IntPoly{1, 1}, Residue(M - 1, make_modulus(M))).is_zero());
  CHECK(eval_poly(IntPoly{}, x).is_zero());
}

TEST_CASE("IntPoly arithmetic") {
  const IntPoly a{1, 1};
  const IntPoly b{-1, 1};
  CHECK(a * b == IntPoly{-1, 0, 1});
  CHECK(a - a == IntPoly{});
  CHECK((a - a).degree() == -1);
  CHECK(a + b == IntPoly{0, 2});
  CHECK(IntPoly{-1, 0, 1}.to_string() == "x^2 - 1");
}
