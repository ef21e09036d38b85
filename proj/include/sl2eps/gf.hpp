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

#ifndef SL2EPS_GF_HPP
#define SL2EPS_GF_HPP

#include <cstdint>
#include <vector>

#include "sl2eps/common.hpp"

namespace sl2eps {

/**
 * Element of a finite field F_q, held as an index into the owning
 * FieldCtx's tables.  The index encodes the polynomial-basis coefficient
 * vector (c_0, ..., c_{f-1}) as c_0 + c_1 p + ... + c_{f-1} p^{f-1},
 * so index arithmetic never needs the modulus once the tables exist.
 */
class Fq {
 public:
  Fq() : v_(0) {}
  explicit Fq(int idx) : v_(static_cast<std::uint16_t>(idx)) {}

  int idx() const { return v_; }

  friend bool operator==(Fq a, Fq b) { return a.v_ == b.v_; }
  friend bool operator!=(Fq a, Fq b) { return a.v_ != b.v_; }
  friend bool operator<(Fq a, Fq b) { return a.v_ < b.v_; }

 private:
  std::uint16_t v_;
};

/**
 * Arithmetic context for F_q, q = p^f with p an odd prime.
 *
 * The modulus is the lexicographically smallest monic irreducible of degree
 * f over F_p, coefficient tuples compared from the highest-degree
 * coefficient down.  All operations are table lookups after construction.
 */
class FieldCtx {
 public:
  // Throws config_error unless p is an odd prime and 3 <= p^f <= 2048.
  static FieldCtx create(int p, int f);

  int p() const { return p_; }
  int f() const { return f_; }
  int q() const { return q_; }

  // Modulus coefficients (c_0, ..., c_f), monic so c_f = 1.
  const std::vector<int>& modulus() const { return modulus_; }

  Fq zero() const { return Fq(0); }
  Fq one() const { return Fq(1); }

  // Image of an integer under Z -> F_q (lands in the prime subfield).
  Fq from_int(std::int64_t n) const;

  // Element with the given polynomial-basis coefficients (length <= f).
  Fq from_coeffs(const std::vector<int>& coeffs) const;
  std::vector<int> coeffs(Fq x) const;

  Fq add(Fq a, Fq b) const { return Fq(add_[a.idx() * q_ + b.idx()]); }
  Fq sub(Fq a, Fq b) const { return add(a, neg(b)); }
  Fq neg(Fq a) const { return Fq(neg_[a.idx()]); }
  Fq mul(Fq a, Fq b) const { return Fq(mul_[a.idx() * q_ + b.idx()]); }

  // Throws check_error on zero.
  Fq inv(Fq a) const;
  Fq div(Fq a, Fq b) const { return mul(a, inv(b)); }
  Fq pow(Fq a, std::int64_t e) const;

  // x -> x^p.
  Fq frobenius(Fq a) const { return Fq(frob_[a.idx()]); }

  // Absolute trace, F_q -> F_p, returned as an element of the prime subfield.
  Fq trace(Fq a) const { return Fq(trace_[a.idx()]); }
  // Same value as an integer in [0, p).
  int trace_int(Fq a) const;

  // True iff a = y^2 for some y (0 counts as a square).
  bool is_square(Fq a) const { return is_square_[a.idx()]; }

  // Smallest non-square in index order.
  Fq smallest_non_square() const;

  // Multiplicative order; throws check_error on zero.
  int mult_order(Fq a) const;

  std::vector<Fq> all_elements() const;

 private:
  FieldCtx() = default;

  int p_ = 0, f_ = 0, q_ = 0;
  std::vector<int> modulus_;
  std::vector<std::uint16_t> add_, mul_;
  std::vector<std::uint16_t> neg_, inv_, frob_, trace_;
  std::vector<char> is_square_;
};

}  // namespace sl2eps

#endif
