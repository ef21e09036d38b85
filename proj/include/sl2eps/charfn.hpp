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

#ifndef SL2EPS_CHARFN_HPP
#define SL2EPS_CHARFN_HPP

#include "sl2eps/cyclo.hpp"
#include "sl2eps/group.hpp"

namespace sl2eps {

/**
 * Function constant on the conjugacy classes of a fixed domain, with exact
 * cyclotomic values.  value(i) is the value on class i of the domain.
 */
struct ClassFunction {
  const ClassSet* domain = nullptr;
  std::string label;
  std::vector<CycNum> values;

  const CycNum& value(int cls) const { return values[cls]; }
  // Value on the identity class as an exact integer.
  BigInt degree() const { return values.at(0).as_rational_integer(); }

  friend bool operator==(const ClassFunction& a, const ClassFunction& b) {
    require(a.domain == b.domain, "class functions on different domains");
    return a.values == b.values;
  }
  friend bool operator!=(const ClassFunction& a, const ClassFunction& b) {
    return !(a == b);
  }
};

ClassFunction constant_class_function(const ClassSet& dom, const CycCtx& C,
                                      const Rat& value, std::string label);
ClassFunction trivial_character(const ClassSet& dom, const CycCtx& C);
// |G| on the identity class, 0 elsewhere.
ClassFunction regular_character(const ClassSet& dom, const CycCtx& C);

ClassFunction cf_add(const ClassFunction& a, const ClassFunction& b);
ClassFunction cf_sub(const ClassFunction& a, const ClassFunction& b);
// Pointwise product (tensor product of characters).
ClassFunction cf_mul(const ClassFunction& a, const ClassFunction& b);
ClassFunction cf_scale(const Rat& r, const ClassFunction& a);

// (1/|H|) sum over classes of |C| a(C) conj(b(C)).
CycNum inner_product(const ClassFunction& a, const ClassFunction& b);

// Frobenius induction from a subgroup to its parent, through class fusion:
// (ind f)(g) = |C_G(g)| * sum over H-classes c fusing into [g] of f(c)/|C_H(c)|.
ClassFunction induce(const Subgroup& H, const ClassFunction& f);

// Restriction of a parent class function to a subgroup.
ClassFunction restrict_to(const Subgroup& H, const ClassFunction& f);

// Pullback of a class function on H/K to a class function on H.
ClassFunction inflate_from_quotient(const Subgroup& H, const QuotientGroup& Q,
                                    const ClassFunction& f);

// Deterministic total order for canonical sorting: degree, then value
// vectors lexicographically.
bool cf_canonical_less(const ClassFunction& a, const ClassFunction& b);

}  // namespace sl2eps

#endif
