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

#include "cycloprime/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "cycloprime/errors.hpp"

namespace cycloprime {

class CycElemAccess {
 public:
  static CycElem make(RingPtr ring, std::vector<BigInt> coeffs) {
    return CycElem(CycElem::Trusted{}, std::move(ring), std::move(coeffs));
  }
};

namespace {

long floor_mod(long a, long m) {
  long r = a % m;
  return r < 0 ? r + m : r;
}

// Folds a coefficient vector in powers of zeta (any length) down to the
// p-1 basis coordinates, using zeta^p = -1 and then Phi_2p(zeta) = 0.
std::vector<BigInt> fold(const std::vector<BigInt>& wide, int p) {
  std::vector<BigInt> acc(static_cast<std::size_t>(p));
  const std::size_t period = static_cast<std::size_t>(2 * p);
  for (std::size_t i = 0; i < wide.size(); ++i) {
    const std::size_t j = i % period;
    if (j < static_cast<std::size_t>(p)) {
      acc[j] += wide[i];
    } else {
      acc[j - p] -= wide[i];
    }
  }
  // zeta^(p-1) = -sum_{i<p-1} (-1)^i zeta^i
  const BigInt top = acc[p - 1];
  acc.pop_back();
  if (top != 0) {
    for (std::size_t i = 0; i < acc.size(); ++i) {
      if (i % 2 == 0) {
        acc[i] -= top;
      } else {
        acc[i] += top;
      }
    }
  }
  return acc;
}

void reduce_all(std::vector<BigInt>& v, const BigInt& m) {
  for (auto& c : v) reduce_canonical(c, m);
}

void require_same_ring(const CycElem& a, const CycElem& b) {
  if (a.ring() == b.ring()) return;
  if (a.p() != b.p() || a.modulus() != b.modulus()) {
    throw Error(ErrorCode::kBasisMismatch, "operands live in different cyclotomic rings");
  }
}

CycElem make_reduced(const RingPtr& ring, std::vector<BigInt> wide) {
  auto folded = fold(wide, ring->p());
  reduce_all(folded, ring->modulus());
  return CycElemAccess::make(ring, std::move(folded));
}

std::vector<BigInt> wide_from_zeta_p(int p, std::span<const ZetaTerm> terms) {
  std::vector<BigInt> wide(static_cast<std::size_t>(2 * p));
  for (const auto& t : terms) {
    const long e = 2 * floor_mod(t.k, p);
    wide[static_cast<std::size_t>(e)] += t.coeff;
  }
  return wide;
}

std::vector<BigInt> wide_galois(const std::vector<BigInt>& coeffs, int c, int p) {
  std::vector<BigInt> wide(static_cast<std::size_t>(2 * p));
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    const std::size_t j = (i * static_cast<std::size_t>(c)) % static_cast<std::size_t>(2 * p);
    wide[j] += coeffs[i];
  }
  return wide;
}

// Polynomial helpers over Z/M for the extended Euclidean algorithm. Vectors
// hold coefficients lowest degree first with no trailing zeros.
using ModPoly = std::vector<BigInt>;

void trim(ModPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

int degree(const ModPoly& f) { return static_cast<int>(f.size()) - 1; }

BigInt invert_leading(const BigInt& lc, const ModulusPtr& m) {
  try {
    return mod_inverse(Residue(lc, m)).value();
  } catch (const NotInvertible& e) {
    throw FactorFound(e.gcd(), "inversion met a zero divisor; gcd " + e.gcd().get_str() +
                                   " divides the modulus");
  }
}

// num = quot * den + rem, deg rem < deg den. den must have an invertible lead.
void divmod(const ModPoly& num, const ModPoly& den, const BigInt& lead_inv, const BigInt& m,
            ModPoly& quot, ModPoly& rem) {
  rem = num;
  const int dd = degree(den);
  quot.assign(rem.size() >= den.size() ? rem.size() - den.size() + 1 : 0, BigInt(0));
  for (int k = degree(rem); k >= dd; --k) {
    BigInt coef = rem[k] * lead_inv;
    reduce_canonical(coef, m);
    if (coef == 0) continue;
    quot[k - dd] = coef;
    for (int i = 0; i <= dd; ++i) {
      rem[k - dd + i] -= coef * den[i];
      reduce_canonical(rem[k - dd + i], m);
    }
  }
  trim(quot);
  trim(rem);
}

ModPoly poly_mul(const ModPoly& a, const ModPoly& b, const BigInt& m) {
  if (a.empty() || b.empty()) return {};
  ModPoly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      mpz_addmul(out[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
  }
  reduce_all(out, m);
  trim(out);
  return out;
}

ModPoly poly_sub(const ModPoly& a, const ModPoly& b, const BigInt& m) {
  ModPoly out(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (i < a.size()) out[i] += a[i];
    if (i < b.size()) out[i] -= b[i];
    reduce_canonical(out[i], m);
  }
  trim(out);
  return out;
}

}  // namespace

CycBasis CycBasis::make(int p) {
  if (p < 3 || p % 2 == 0) {
    throw Error(ErrorCode::kInvalidArgument, "cyclotomic basis needs an odd prime p");
  }
  CycBasis b;
  b.p = p;
  b.degree = p - 1;
  b.reduction_poly.resize(static_cast<std::size_t>(p));
  for (int i = 0; i < p; ++i) b.reduction_poly[i] = (i % 2 == 0) ? 1 : -1;
  return b;
}

CycRing::CycRing(int p, ModulusPtr modulus)
    : basis_(CycBasis::make(p)), modulus_(std::move(modulus)) {
  if (!modulus_ || *modulus_ <= 1) {
    throw Error(ErrorCode::kInvalidArgument, "ring modulus must exceed 1");
  }
}

std::shared_ptr<const CycRing> CycRing::create(int p, const BigInt& modulus) {
  return std::make_shared<const CycRing>(p, make_modulus(modulus));
}

CycElem::CycElem(RingPtr ring, std::vector<BigInt> coeffs)
    : ring_(std::move(ring)), coeffs_(std::move(coeffs)) {
  if (!ring_) throw Error(ErrorCode::kInvalidArgument, "null ring");
  if (coeffs_.size() != static_cast<std::size_t>(ring_->degree())) {
    throw Error(ErrorCode::kBasisMismatch, "coefficient vector length must equal p - 1");
  }
  reduce_all(coeffs_, ring_->modulus());
}

CycElem CycElem::zero(RingPtr ring) {
  const auto d = static_cast<std::size_t>(ring->degree());
  return CycElemAccess::make(std::move(ring), std::vector<BigInt>(d));
}

CycElem CycElem::one(RingPtr ring) { return constant(std::move(ring), BigInt(1)); }

CycElem CycElem::constant(RingPtr ring, const BigInt& value) {
  std::vector<BigInt> c(static_cast<std::size_t>(ring->degree()));
  c[0] = value;
  return CycElem(std::move(ring), std::move(c));
}

CycElem CycElem::zeta_power(RingPtr ring, long e) {
  const int p = ring->p();
  std::vector<BigInt> wide(static_cast<std::size_t>(2 * p));
  wide[static_cast<std::size_t>(floor_mod(e, 2L * p))] = 1;
  return make_reduced(ring, std::move(wide));
}

Residue CycElem::coeff(std::size_t i) const { return Residue(coeffs_.at(i), ring_->modulus_ptr()); }

bool CycElem::is_zero() const noexcept {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const BigInt& c) { return c == 0; });
}

bool CycElem::is_one() const noexcept { return coeffs_[0] == 1 && is_rational(); }

bool CycElem::is_rational() const noexcept {
  return std::all_of(coeffs_.begin() + 1, coeffs_.end(), [](const BigInt& c) { return c == 0; });
}

bool operator==(const CycElem& a, const CycElem& b) {
  return a.p() == b.p() && a.modulus() == b.modulus() && a.coeffs_ == b.coeffs_;
}

CycElem from_zeta_p_terms(RingPtr ring, std::span<const ZetaTerm> terms) {
  auto wide = wide_from_zeta_p(ring->p(), terms);
  return make_reduced(ring, std::move(wide));
}

CycElem cyc_add(const CycElem& a, const CycElem& b) {
  require_same_ring(a, b);
  std::vector<BigInt> out(a.coeffs().size());
  const BigInt& m = a.modulus();
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = a.coeffs()[i] + b.coeffs()[i];
    if (out[i] >= m) out[i] -= m;
  }
  return CycElemAccess::make(a.ring(), std::move(out));
}

CycElem cyc_sub(const CycElem& a, const CycElem& b) {
  require_same_ring(a, b);
  std::vector<BigInt> out(a.coeffs().size());
  const BigInt& m = a.modulus();
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = a.coeffs()[i] - b.coeffs()[i];
    if (out[i] < 0) out[i] += m;
  }
  return CycElemAccess::make(a.ring(), std::move(out));
}

CycElem cyc_mul(const CycElem& a, const CycElem& b) {
  require_same_ring(a, b);
  const auto& x = a.coeffs();
  const auto& y = b.coeffs();
  std::vector<BigInt> wide(x.size() + y.size() - 1);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < y.size(); ++j) {
      mpz_addmul(wide[i + j].get_mpz_t(), x[i].get_mpz_t(), y[j].get_mpz_t());
    }
  }
  return make_reduced(a.ring(), std::move(wide));
}

CycElem cyc_square(const CycElem& a) {
  const auto& x = a.coeffs();
  const std::size_t d = x.size();
  std::vector<BigInt> cross(2 * d - 1);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i + 1; j < d; ++j) {
      mpz_addmul(cross[i + j].get_mpz_t(), x[i].get_mpz_t(), x[j].get_mpz_t());
    }
  }
  for (std::size_t i = 0; i < cross.size(); ++i) {
    mpz_mul_2exp(cross[i].get_mpz_t(), cross[i].get_mpz_t(), 1);
  }
  for (std::size_t i = 0; i < d; ++i) {
    mpz_addmul(cross[2 * i].get_mpz_t(), x[i].get_mpz_t(), x[i].get_mpz_t());
  }
  return make_reduced(a.ring(), std::move(cross));
}

CycElem cyc_scale(const CycElem& a, const BigInt& k) {
  std::vector<BigInt> out(a.coeffs().size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.coeffs()[i] * k;
  return CycElem(a.ring(), std::move(out));
}

CycElem cyc_pow(const CycElem& a, const BigInt& e) {
  if (e < 0) return cyc_pow(cyc_inverse(a), BigInt(-e));
  CycElem acc = CycElem::one(a.ring());
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  bool started = false;
  for (std::size_t i = bits; i-- > 0;) {
    if (started) acc = cyc_square(acc);
    if (mpz_tstbit(e.get_mpz_t(), i)) {
      acc = started ? cyc_mul(acc, a) : a;
      started = true;
    }
  }
  return acc;
}

int normalize_automorphism_index(long c, int p) {
  const long m = 2L * p;
  const long r = floor_mod(c, m);
  if (std::gcd(r, m) != 1) {
    throw Error(ErrorCode::kBadAutomorphismIndex,
                "sigma_" + std::to_string(c) + " is not an automorphism for 2p = " +
                    std::to_string(m));
  }
  return static_cast<int>(r);
}

CycElem galois(const CycElem& a, long c) {
  const int idx = normalize_automorphism_index(c, a.p());
  if (idx == 1) return a;
  return make_reduced(a.ring(), wide_galois(a.coeffs(), idx, a.p()));
}

CycElem conj(const CycElem& a) { return galois(a, -1); }

CycElem cyc_inverse(const CycElem& a) {
  if (a.is_zero()) {
    throw Error(ErrorCode::kDegenerateElement, "cannot invert the zero element");
  }
  const BigInt& m = a.modulus();
  const ModulusPtr& mp = a.ring()->modulus_ptr();

  ModPoly r0;
  for (int c : a.ring()->basis().reduction_poly) {
    BigInt v(c);
    reduce_canonical(v, m);
    r0.push_back(v);
  }
  ModPoly r1 = a.coeffs();
  trim(r1);
  ModPoly t0;                // coefficient of a in r0
  ModPoly t1{BigInt(1)};     // coefficient of a in r1

  while (degree(r1) > 0) {
    const BigInt lead_inv = invert_leading(r1.back(), mp);
    ModPoly quot, rem;
    divmod(r0, r1, lead_inv, m, quot, rem);
    if (rem.empty()) {
      throw Error(ErrorCode::kZeroDivisor,
                  "element shares a nonconstant factor with the cyclotomic polynomial mod M");
    }
    ModPoly t2 = poly_sub(t0, poly_mul(quot, t1, m), m);
    r0 = std::move(r1);
    r1 = std::move(rem);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }

  const BigInt c_inv = invert_leading(r1[0], mp);
  std::vector<BigInt> wide(t1.begin(), t1.end());
  for (auto& v : wide) v *= c_inv;
  if (wide.size() < static_cast<std::size_t>(a.p())) wide.resize(static_cast<std::size_t>(a.p()));
  return make_reduced(a.ring(), std::move(wide));
}

Residue rational_value(const CycElem& a) {
  for (std::size_t i = 1; i < a.coeffs().size(); ++i) {
    if (a.coeffs()[i] != 0) {
      throw NotRational(i, "coordinate " + std::to_string(i) + " of a rational element is nonzero");
    }
  }
  return a.coeff(0);
}

GroupRingExponent::GroupRingExponent(int p, std::span<const std::pair<long, long>> signed_terms)
    : p_(p) {
  std::map<int, long> merged;
  for (const auto& [k, c] : signed_terms) merged[normalize_automorphism_index(c, p)] += k;
  for (const auto& [c, k] : merged) {
    if (k != 0) terms_.push_back(GroupRingTerm{k, c});
  }
}

std::string GroupRingExponent::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    if (!first) os << " + ";
    first = false;
    if (t.c == 1) {
      os << t.k;
    } else {
      os << t.k << "*s" << t.c;
    }
  }
  return first ? "0" : os.str();
}

GroupRingExponent compute_gamma(int p) {
  const long m = 2L * p;
  std::vector<std::pair<long, long>> terms;
  for (long i = 1; i <= (p - 1) / 2; ++i) {
    const long u = 2 * i - 1;
    long inv = 0;
    for (long v = 1; v < m; v += 2) {
      if ((u * v) % m == 1) {
        inv = v;
        break;
      }
    }
    terms.emplace_back(u, inv);
  }
  return GroupRingExponent(p, terms);
}

CycElem apply_group_ring(const CycElem& a, const GroupRingExponent& e) {
  if (e.p() != a.p()) {
    throw Error(ErrorCode::kBasisMismatch, "group ring exponent is for a different p");
  }
  CycElem acc = CycElem::one(a.ring());
  for (const auto& t : e.terms()) {
    acc = cyc_mul(acc, cyc_pow(galois(a, t.c), BigInt(t.k)));
  }
  return acc;
}

ExactCycElem exact_from_zeta_p_terms(int p, std::span<const ZetaTerm> terms) {
  return ExactCycElem{p, fold(wide_from_zeta_p(p, terms), p)};
}

ExactCycElem exact_mul(const ExactCycElem& a, const ExactCycElem& b) {
  if (a.p != b.p) throw Error(ErrorCode::kBasisMismatch, "exact elements for different p");
  std::vector<BigInt> wide(a.coeffs.size() + b.coeffs.size() - 1);
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs.size(); ++j) {
      mpz_addmul(wide[i + j].get_mpz_t(), a.coeffs[i].get_mpz_t(), b.coeffs[j].get_mpz_t());
    }
  }
  return ExactCycElem{a.p, fold(wide, a.p)};
}

ExactCycElem exact_galois(const ExactCycElem& a, long c) {
  const int idx = normalize_automorphism_index(c, a.p);
  return ExactCycElem{a.p, fold(wide_galois(a.coeffs, idx, a.p), a.p)};
}

CycElem to_ring(const ExactCycElem& a, RingPtr ring) {
  if (ring->p() != a.p) throw Error(ErrorCode::kBasisMismatch, "exact element is for a different p");
  return CycElem(std::move(ring), a.coeffs);
}

BigInt norm_exact(const ExactCycElem& seed) {
  ExactCycElem acc{seed.p, std::vector<BigInt>(static_cast<std::size_t>(seed.p - 1))};
  acc.coeffs[0] = 1;
  for (long c = 1; c < 2L * seed.p; c += 2) {
    if (c == seed.p) continue;
    acc = exact_mul(acc, exact_galois(seed, c));
  }
  for (std::size_t i = 1; i < acc.coeffs.size(); ++i) {
    if (acc.coeffs[i] != 0) {
      throw Error(ErrorCode::kNonRationalNorm,
                  "norm has nonzero coordinate at zeta^" + std::to_string(i));
    }
  }
  return acc.coeffs[0];
}

}  // namespace cycloprime
