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

#include <vector>

#include "cycloprime/cyclotomic.hpp"
#include "cycloprime/errors.hpp"
#include "cycloprime/symbol.hpp"
#include "oracles.hpp"

using namespace cycloprime;

namespace {

std::vector<BigInt> lift(const CycElem& a) {
  std::vector<BigInt> out = a.coeffs();
  out.push_back(0);  // pad to length p for the negacyclic oracle
  return out;
}

CycElem random_elem(const RingPtr& ring, gmp_randclass& rng) {
  std::vector<BigInt> c;
  for (int i = 0; i < ring->degree(); ++i) c.push_back(rng.get_z_range(ring->modulus()));
  return CycElem(ring, c);
}

std::vector<BigInt> mod_vec(std::vector<long> v, const BigInt& m) {
  std::vector<BigInt> out;
  for (long x : v) {
    BigInt b = x;
    reduce_canonical(b, m);
    out.push_back(b);
  }
  return out;
}

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::kInvalidArgument;
}

}  // namespace

TEST_CASE("basis") {
  const auto b = CycBasis::make(5);
  CHECK(b.degree == 4);
  CHECK(b.reduction_poly == std::vector<int>{1, -1, 1, -1, 1});
}

TEST_CASE("from_zeta_p_terms examples") {
  const auto r3 = CycRing::create(3, 37);
  const std::vector<ZetaTerm> pi3{{2, 0}, {3, 1}};
  CHECK(from_zeta_p_terms(r3, pi3).coeffs() == mod_vec({-1, 3}, 37));

  const auto r5 = CycRing::create(5, 101);
  const std::vector<ZetaTerm> pi5{{1, 0}, {-1, 1}, {-1, 3}};
  CHECK(from_zeta_p_terms(r5, pi5).coeffs() == mod_vec({1, 1, -1, 0}, 101));

  for (int p : kSupportedPrimes) {
    const auto ring = CycRing::create(p, 1000003);
    const std::vector<ZetaTerm> one{{1, 0}};
    CHECK(from_zeta_p_terms(ring, one).is_one());
  }
}

TEST_CASE("norms of the seeds via ring products") {
  const auto r3 = CycRing::create(3, 37);
  const auto pi3 = from_zeta_p_terms(r3, seed_for(3).pi);
  CHECK(rational_value(pi3 * conj(pi3)).value() == 7);

  const auto r5 = CycRing::create(5, 101);
  const auto pi5 = from_zeta_p_terms(r5, seed_for(5).pi);
  const auto pp = pi5 * conj(pi5);
  CHECK(rational_value(pp * galois(pp, 3)).value() == 11);
}

TEST_CASE("multiplication matches the negacyclic oracle") {
  gmp_randclass rng(gmp_randinit_mt);
  rng.seed(7UL);
  for (int p : kSupportedPrimes) {
    const BigInt m = rng.get_z_bits(160) + 3;
    const auto ring = CycRing::create(p, m);
    for (int i = 0; i < 20; ++i) {
      const auto a = random_elem(ring, rng);
      const auto b = random_elem(ring, rng);
      const auto expected = oracle::reduce_phi(oracle::negacyclic_mul(lift(a), lift(b), p), p, m);
      CHECK((a * b).coeffs() == expected);
      CHECK(cyc_square(a) == a * a);
      CHECK(a * CycElem::one(ring) == a);
      CHECK((a + b) - b == a);
    }
  }
}

TEST_CASE("galois maps") {
  const auto r5 = CycRing::create(5, 101);
  CHECK(galois(CycElem::zeta_power(r5, 1), 3).coeffs() == mod_vec({0, 0, 0, 1}, 101));

  gmp_randclass rng(gmp_randinit_mt);
  rng.seed(11UL);
  for (int p : kSupportedPrimes) {
    const BigInt m = rng.get_z_bits(128) + 3;
    const auto ring = CycRing::create(p, m);
    const auto a = random_elem(ring, rng);
    const auto b = random_elem(ring, rng);
    CHECK(galois(a, 1) == a);
    CHECK(conj(conj(a)) == a);
    CHECK(galois(a, -1) == conj(a));
    for (long c = 1; c < 2 * p; c += 2) {
      if (c % p == 0) continue;
      CHECK(galois(a * b, c) == galois(a, c) * galois(b, c));
      const auto expected =
          oracle::reduce_phi(oracle::negacyclic_galois(lift(a), p, c), p, m);
      CHECK(galois(a, c).coeffs() == expected);
      CHECK(galois(a, c - 2 * p) == galois(a, c));
    }
    CHECK(code_of([&] { galois(a, 2); }) == ErrorCode::kBadAutomorphismIndex);
    CHECK(code_of([&] { galois(a, p); }) == ErrorCode::kBadAutomorphismIndex);
  }
}

TEST_CASE("zeta_power") {
  const auto ring = CycRing::create(7, 197);
  CHECK(CycElem::zeta_power(ring, 7) == CycElem::constant(ring, -1));
  CHECK(CycElem::zeta_power(ring, 14).is_one());
  CHECK(CycElem::zeta_power(ring, -1) * CycElem::zeta_power(ring, 1) == CycElem::one(ring));
  CHECK(CycElem::zeta_power(ring, 3) ==
        CycElem::zeta_power(ring, 1) * CycElem::zeta_power(ring, 2));
}

TEST_CASE("inverse") {
  const auto r3 = CycRing::create(3, 37);
  CHECK(cyc_inverse(CycElem::one(r3)).is_one());
  const auto pibar = conj(from_zeta_p_terms(r3, seed_for(3).pi));
  CHECK((cyc_inverse(pibar) * pibar).is_one());
  CHECK(code_of([&] { cyc_inverse(CycElem::zero(r3)); }) == ErrorCode::kDegenerateElement);

  gmp_randclass rng(gmp_randinit_mt);
  rng.seed(13UL);
  for (int p : kSupportedPrimes) {
    const auto ring = CycRing::create(p, build_params(p, 3).M);
    for (int i = 0; i < 5; ++i) {
      const auto a = random_elem(ring, rng);
      try {
        const auto inv = cyc_inverse(a);
        CHECK((a * inv).is_one());
      } catch (const FactorFound& f) {
        // A random element may expose a factor of a composite M.
        CHECK(f.factor() > 1);
        CHECK(f.factor() < ring->modulus());
        CHECK(ring->modulus() % f.factor() == 0);
      }
    }
  }
}

TEST_CASE("inverse of a zero divisor") {
  // pi for p = 3 has norm 7; modulo 7 it generates a proper ideal.
  const auto r = CycRing::create(3, 7);
  const auto pi = from_zeta_p_terms(r, seed_for(3).pi);
  CHECK(code_of([&] { cyc_inverse(pi); }) == ErrorCode::kZeroDivisor);

  // Modulo 7 * 37 the failure surfaces as a factor of the modulus.
  const auto r2 = CycRing::create(3, 7 * 37);
  const auto pi2 = from_zeta_p_terms(r2, seed_for(3).pi);
  const auto code = code_of([&] { cyc_inverse(pi2); });
  CHECK((code == ErrorCode::kFactorFound || code == ErrorCode::kZeroDivisor));
}

TEST_CASE("rational_value") {
  const auto ring = CycRing::create(5, 101);
  CHECK(rational_value(CycElem::constant(ring, 5)).value() == 5);
  CHECK(rational_value(CycElem::one(ring)).is_one());
  try {
    (void)rational_value(CycElem::zeta_power(ring, 2));
    FAIL("zeta^2 is not rational");
  } catch (const NotRational& e) {
    CHECK(e.index() == 2);
  }
}

TEST_CASE("ring mismatch") {
  const auto a = CycElem::one(CycRing::create(5, 101));
  const auto b = CycElem::one(CycRing::create(5, 103));
  const auto c = CycElem::one(CycRing::create(7, 101));
  CHECK(code_of([&] { (void)(a * b); }) == ErrorCode::kBasisMismatch);
  CHECK(code_of([&] { (void)(a + c); }) == ErrorCode::kBasisMismatch);
  CHECK(code_of([&] { CycElem(CycRing::create(5, 101), {1, 2}); }) == ErrorCode::kBasisMismatch);
}

TEST_CASE("compute_gamma examples") {
  CHECK(compute_gamma(3).terms() == std::vector<GroupRingTerm>{{1, 1}});
  CHECK(compute_gamma(5).terms() == std::vector<GroupRingTerm>{{1, 1}, {3, 7}});
  CHECK(compute_gamma(7).terms() == std::vector<GroupRingTerm>{{1, 1}, {5, 3}, {3, 5}});
  CHECK(compute_gamma(5).to_string() == "1 + 3*s7");
}

TEST_CASE("gamma matches the tabulated tau") {
  for (int p : kSupportedPrimes) {
    CAPTURE(p);
    CHECK(compute_gamma(p) == seed_for(p).tau);
  }
}

TEST_CASE("group ring exponent normalization") {
  const std::vector<std::pair<long, long>> t{{1, 1}, {3, -3}, {2, 7}};
  const GroupRingExponent e(5, t);
  CHECK(e.terms() == std::vector<GroupRingTerm>{{1, 1}, {5, 7}});
  CHECK(normalize_automorphism_index(-3, 5) == 7);
  CHECK(normalize_automorphism_index(-1, 19) == 37);
}

TEST_CASE("apply_group_ring") {
  const auto ring = CycRing::create(5, 101);
  const auto pi = from_zeta_p_terms(ring, seed_for(5).pi);
  const std::vector<std::pair<long, long>> id{{1, 1}};
  CHECK(apply_group_ring(pi, GroupRingExponent(5, id)) == pi);

  const auto ratio = pi * cyc_inverse(conj(pi));
  const auto alpha = apply_group_ring(ratio, compute_gamma(5));
  CHECK((alpha * conj(alpha)).is_one());
  CHECK(alpha == ratio * cyc_pow(galois(ratio, 7), 3));

  const std::vector<std::pair<long, long>> neg{{-2, 3}};
  const auto inv = apply_group_ring(pi, GroupRingExponent(5, neg));
  CHECK((inv * galois(pi * pi, 3)).is_one());
}

TEST_CASE("cyc_pow") {
  const auto ring = CycRing::create(7, 197);
  const auto z = CycElem::zeta_power(ring, 1);
  CHECK(cyc_pow(z, 14).is_one());
  CHECK(cyc_pow(z, 0).is_one());
  CHECK(cyc_pow(z, 5) == CycElem::zeta_power(ring, 5));
  CHECK(cyc_scale(CycElem::one(ring), 200) == CycElem::constant(ring, 3));
}

TEST_CASE("norm_exact") {
  const std::vector<ZetaTerm> pi3{{2, 0}, {3, 1}};
  CHECK(norm_exact(exact_from_zeta_p_terms(3, pi3)) == 7);
  const std::vector<ZetaTerm> pi11{{1, 0}, {1, 7}, {1, 8}};
  CHECK(norm_exact(exact_from_zeta_p_terms(11, pi11)) == 23);
  const std::vector<ZetaTerm> pi19{{-1, 0}, {-1, 2}, {1, 15}};
  CHECK(norm_exact(exact_from_zeta_p_terms(19, pi19)) == 229);
}

TEST_CASE("exact arithmetic agrees with the ring") {
  for (int p : kSupportedPrimes) {
    const auto& seed = seed_for(p);
    const auto ring = CycRing::create(p, 1000003);
    const auto x = seed.exact_pi();
    const long c = p == 3 ? 5 : 3;
    const auto y = exact_galois(x, c);
    CHECK(to_ring(exact_mul(x, y), ring) == to_ring(x, ring) * galois(to_ring(x, ring), c));
  }
}
