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

#ifndef SL2EPS_RING_EPS_HPP
#define SL2EPS_RING_EPS_HPP

#include "sl2eps/gf.hpp"

namespace sl2eps {

/** Element r0 + r1*eps of the dual numbers F_q[eps], eps^2 = 0. */
struct REps {
  Fq r0, r1;

  friend bool operator==(REps a, REps b) { return a.r0 == b.r0 && a.r1 == b.r1; }
  friend bool operator!=(REps a, REps b) { return !(a == b); }
};

/**
 * Arithmetic on F_q[eps] in terms of a FieldCtx.  Elements are indexed
 * 0..q^2-1 by idx = r0 * q + r1; the constant part is the major digit.
 */
class REpsCtx {
 public:
  explicit REpsCtx(const FieldCtx& F) : F_(&F) {}

  const FieldCtx& field() const { return *F_; }
  int size() const { return F_->q() * F_->q(); }

  REps zero() const { return {F_->zero(), F_->zero()}; }
  REps one() const { return {F_->one(), F_->zero()}; }
  REps eps() const { return {F_->zero(), F_->one()}; }

  REps lift(Fq x) const { return {x, F_->zero()}; }
  Fq reduce(REps a) const { return a.r0; }

  int index(REps a) const { return a.r0.idx() * F_->q() + a.r1.idx(); }
  REps from_index(int i) const { return {Fq(i / F_->q()), Fq(i % F_->q())}; }

  REps add(REps a, REps b) const {
    return {F_->add(a.r0, b.r0), F_->add(a.r1, b.r1)};
  }
  REps sub(REps a, REps b) const {
    return {F_->sub(a.r0, b.r0), F_->sub(a.r1, b.r1)};
  }
  REps neg(REps a) const { return {F_->neg(a.r0), F_->neg(a.r1)}; }
  REps mul(REps a, REps b) const {
    // (a0 + a1 e)(b0 + b1 e) = a0 b0 + (a0 b1 + a1 b0) e
    return {F_->mul(a.r0, b.r0),
            F_->add(F_->mul(a.r0, b.r1), F_->mul(a.r1, b.r0))};
  }

  bool is_unit(REps a) const { return a.r0 != F_->zero(); }

  // (r0 + r1 e)^{-1} = r0^{-1} - r0^{-2} r1 e; throws check_error otherwise.
  REps invert(REps a) const {
    require(is_unit(a), "inverting a non-unit in F_q[eps]");
    const Fq i0 = F_->inv(a.r0);
    return {i0, F_->neg(F_->mul(F_->mul(i0, i0), a.r1))};
  }

 private:
  const FieldCtx* F_;
};

}  // namespace sl2eps

#endif
