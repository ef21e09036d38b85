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

#ifndef SL2EPS_MAT2_HPP
#define SL2EPS_MAT2_HPP

#include "sl2eps/ring_eps.hpp"

namespace sl2eps {

/** 2x2 matrix (a b; c d) over F_q[eps]. */
struct Mat2 {
  REps a, b, c, d;

  friend bool operator==(const Mat2& x, const Mat2& y) {
    return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
  }
  friend bool operator!=(const Mat2& x, const Mat2& y) { return !(x == y); }
};

/** 2x2 matrix over F_q (the eps = 0 reduction). */
struct Mat2f {
  Fq a, b, c, d;

  friend bool operator==(const Mat2f& x, const Mat2f& y) {
    return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
  }
  friend bool operator!=(const Mat2f& x, const Mat2f& y) { return !(x == y); }
};

/**
 * Matrix arithmetic over F_q[eps].  Element keys pack the 8 field
 * coordinates (a0 a1 b0 b1 c0 c1 d0 d1) base q, a0 most significant, so key
 * order is a deterministic total order on matrices.
 */
class MatCtx {
 public:
  explicit MatCtx(const FieldCtx& F) : F_(&F), R_(F) {}

  const FieldCtx& field() const { return *F_; }
  const REpsCtx& ring() const { return R_; }

  Mat2 identity() const {
    return {R_.one(), R_.zero(), R_.zero(), R_.one()};
  }

  Mat2 mul(const Mat2& x, const Mat2& y) const {
    return {R_.add(R_.mul(x.a, y.a), R_.mul(x.b, y.c)),
            R_.add(R_.mul(x.a, y.b), R_.mul(x.b, y.d)),
            R_.add(R_.mul(x.c, y.a), R_.mul(x.d, y.c)),
            R_.add(R_.mul(x.c, y.b), R_.mul(x.d, y.d))};
  }

  REps det(const Mat2& x) const {
    return R_.sub(R_.mul(x.a, x.d), R_.mul(x.b, x.c));
  }

  // Inverse of a matrix with unit determinant (adjugate over det).
  Mat2 inv(const Mat2& x) const {
    const REps idet = R_.invert(det(x));
    return {R_.mul(idet, x.d), R_.mul(idet, R_.neg(x.b)),
            R_.mul(idet, R_.neg(x.c)), R_.mul(idet, x.a)};
  }

  std::uint64_t key(const Mat2& x) const {
    const int q = F_->q();
    std::uint64_t k = 0;
    for (const REps e : {x.a, x.b, x.c, x.d}) {
      k = (k * q + e.r0.idx()) * q + e.r1.idx();
    }
    return k;
  }

  Mat2 from_key(std::uint64_t k) const {
    const int q = F_->q();
    int digits[8];
    for (int i = 7; i >= 0; --i) {
      digits[i] = static_cast<int>(k % q);
      k /= q;
    }
    return {{Fq(digits[0]), Fq(digits[1])},
            {Fq(digits[2]), Fq(digits[3])},
            {Fq(digits[4]), Fq(digits[5])},
            {Fq(digits[6]), Fq(digits[7])}};
  }

  // eps = 0 reduction.
  Mat2f reduce(const Mat2& x) const { return {x.a.r0, x.b.r0, x.c.r0, x.d.r0}; }

  Mat2 lift(const Mat2f& x) const {
    return {R_.lift(x.a), R_.lift(x.b), R_.lift(x.c), R_.lift(x.d)};
  }

  // F_q-level helpers used by the orbit machinery.
  Mat2f fmul(const Mat2f& x, const Mat2f& y) const {
    return {F_->add(F_->mul(x.a, y.a), F_->mul(x.b, y.c)),
            F_->add(F_->mul(x.a, y.b), F_->mul(x.b, y.d)),
            F_->add(F_->mul(x.c, y.a), F_->mul(x.d, y.c)),
            F_->add(F_->mul(x.c, y.b), F_->mul(x.d, y.d))};
  }

  Fq fdet(const Mat2f& x) const {
    return F_->sub(F_->mul(x.a, x.d), F_->mul(x.b, x.c));
  }

  Mat2f finv(const Mat2f& x) const {
    const Fq idet = F_->inv(fdet(x));
    return {F_->mul(idet, x.d), F_->mul(idet, F_->neg(x.b)),
            F_->mul(idet, F_->neg(x.c)), F_->mul(idet, x.a)};
  }

 private:
  const FieldCtx* F_;
  REpsCtx R_;
};

}  // namespace sl2eps

#endif
