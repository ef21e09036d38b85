/*
 * Copyright 2026 the sl2eps authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef SL2EPS_CYCLO_HPP
#define SL2EPS_CYCLO_HPP

#include <string>
#include <vector>

#include "sl2eps/common.hpp"

namespace sl2eps {

class CycCtx;

/**
 * Element of the cyclotomic field Q(zeta_m), stored as exact rational
 * coordinates in the power basis 1, zeta, ..., zeta^{phi(m)-1}.
 * Representation is canonical, so coefficient equality is field equality.
 */
class CycNum {
 public:
  CycNum() : ctx_(nullptr) {}

  const CycCtx* ctx() const { return ctx_; }
  const std::vector<Rat>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_rational() const;
  // Throws check_error unless the value lies in Q (resp. Z).
  Rat as_rational() const;
  BigInt as_rational_integer() const;

  CycNum operator-() const;
  friend CycNum operator+(const CycNum& a, const CycNum& b);
  friend CycNum operator-(const CycNum& a, const CycNum& b);
  friend CycNum operator*(const CycNum& a, const CycNum& b);
  friend bool operator==(const CycNum& a, const CycNum& b);
  friend bool operator!=(const CycNum& a, const CycNum& b) { return !(a == b); }

  CycNum& operator+=(const CycNum& b) { return *this = *this + b; }
  CycNum& operator-=(const CycNum& b) { return *this = *this - b; }
  CycNum& operator*=(const CycNum& b) { return *this = *this * b; }

  std::string to_string() const;

 private:
  friend class CycCtx;
  CycNum(const CycCtx* ctx, std::vector<Rat> c) : ctx_(ctx), c_(std::move(c)) {}

  const CycCtx* ctx_;
  std::vector<Rat> c_;
};

// Lexicographic order on coefficient vectors; a deterministic total order
// used for canonical sorting, with no algebraic meaning.
int cyc_compare(const CycNum& a, const CycNum& b);

// Complex conjugation, zeta -> zeta^{m-1}.
CycNum conj(const CycNum& a);

/**
 * Arithmetic context for Q(zeta_m).  Owns the minimal polynomial Phi_m and
 * the reduction table of powers zeta^t; all CycNum arithmetic goes through
 * the context its operands were created by.
 */
class CycCtx {
 public:
  // Throws config_error unless 1 <= m <= 4096.
  static CycCtx create(int m);

  int conductor() const { return m_; }
  int degree() const { return phi_; }

  // Integer coefficients of Phi_m, constant term first, monic.
  const std::vector<BigInt>& minimal_polynomial() const { return phim_; }

  CycNum zero() const;
  CycNum one() const;
  CycNum from_rational(const Rat& r) const;
  // zeta_m^t, any integer t.
  CycNum root(std::int64_t t) const;
  // Galois substitution zeta -> zeta^k, requires gcd(k, m) = 1.
  CycNum galois(const CycNum& a, std::int64_t k) const;

  // Serialized form: {"m": m, "coeffs": ["num/den", ...]} with phi(m) entries.
  std::string to_json(const CycNum& a) const;
  CycNum from_json(const std::string& text) const;

 private:
  friend class CycNum;
  friend CycNum operator*(const CycNum& a, const CycNum& b);

  CycCtx() = default;

  int m_ = 0, phi_ = 0;
  std::vector<BigInt> phim_;
  // power_[t] = coordinates of zeta^t, for t in [0, max(m, 2 phi - 1)).
  std::vector<std::vector<Rat>> power_;
};

}  // namespace sl2eps

#endif
