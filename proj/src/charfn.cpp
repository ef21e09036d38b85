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

#include "sl2eps/charfn.hpp"

#include <algorithm>

namespace sl2eps {

namespace {

const CycCtx& ctx_of(const ClassFunction& f) {
  require(!f.values.empty() && f.values[0].ctx() != nullptr,
          "class function without values");
  return *f.values[0].ctx();
}

}  // namespace

ClassFunction constant_class_function(const ClassSet& dom, const CycCtx& C,
                                      const Rat& value, std::string label) {
  ClassFunction f;
  f.domain = &dom;
  f.label = std::move(label);
  f.values.assign(dom.count(), C.from_rational(value));
  return f;
}

ClassFunction trivial_character(const ClassSet& dom, const CycCtx& C) {
  return constant_class_function(dom, C, Rat(1), "1");
}

ClassFunction regular_character(const ClassSet& dom, const CycCtx& C) {
  ClassFunction f;
  f.domain = &dom;
  f.label = "reg";
  f.values.assign(dom.count(), C.zero());
  f.values[0] = C.from_rational(Rat(dom.group_order()));
  return f;
}

ClassFunction cf_add(const ClassFunction& a, const ClassFunction& b) {
  require(a.domain == b.domain, "class functions on different domains");
  ClassFunction r;
  r.domain = a.domain;
  r.label = "(" + a.label + "+" + b.label + ")";
  r.values.reserve(a.values.size());
  for (std::size_t i = 0; i < a.values.size(); ++i)
    r.values.push_back(a.values[i] + b.values[i]);
  return r;
}

ClassFunction cf_sub(const ClassFunction& a, const ClassFunction& b) {
  require(a.domain == b.domain, "class functions on different domains");
  ClassFunction r;
  r.domain = a.domain;
  r.label = "(" + a.label + "-" + b.label + ")";
  r.values.reserve(a.values.size());
  for (std::size_t i = 0; i < a.values.size(); ++i)
    r.values.push_back(a.values[i] - b.values[i]);
  return r;
}

ClassFunction cf_mul(const ClassFunction& a, const ClassFunction& b) {
  require(a.domain == b.domain, "class functions on different domains");
  ClassFunction r;
  r.domain = a.domain;
  r.label = "(" + a.label + "*" + b.label + ")";
  r.values.reserve(a.values.size());
  for (std::size_t i = 0; i < a.values.size(); ++i)
    r.values.push_back(a.values[i] * b.values[i]);
  return r;
}

ClassFunction cf_scale(const Rat& s, const ClassFunction& a) {
  const CycCtx& C = ctx_of(a);
  ClassFunction r;
  r.domain = a.domain;
  r.label = a.label;
  const CycNum cs = C.from_rational(s);
  r.values.reserve(a.values.size());
  for (const CycNum& v : a.values) r.values.push_back(cs * v);
  return r;
}

CycNum inner_product(const ClassFunction& a, const ClassFunction& b) {
  require(a.domain == b.domain, "inner product across different domains");
  const ClassSet& dom = *a.domain;
  const CycCtx& C = ctx_of(a);
  CycNum acc = C.zero();
  for (int i = 0; i < dom.count(); ++i) {
    const CycNum term = a.values[i] * conj(b.values[i]);
    acc += C.from_rational(Rat(dom[i].size)) * term;
  }
  return C.from_rational(Rat(1, dom.group_order())) * acc;
}

ClassFunction induce(const Subgroup& H, const ClassFunction& f) {
  require(f.domain == &H.classes(), "inducing a function not on the subgroup");
  const GroupTable& G = H.parent();
  const ClassSet& gc = G.classes();
  const ClassSet& hc = H.classes();
  const std::vector<int>& fus = H.fusion();
  const CycCtx& C = ctx_of(f);

  ClassFunction r;
  r.domain = &gc;
  r.label = "ind[" + H.name() + "](" + f.label + ")";
  r.values.assign(gc.count(), C.zero());
  for (int i = 0; i < hc.count(); ++i) {
    const int j = fus[i];
    r.values[j] += C.from_rational(Rat(1, hc.centralizer_order(i))) * f.values[i];
  }
  for (int j = 0; j < gc.count(); ++j)
    r.values[j] = C.from_rational(Rat(gc.centralizer_order(j))) * r.values[j];
  return r;
}

ClassFunction restrict_to(const Subgroup& H, const ClassFunction& f) {
  require(f.domain == &H.parent().classes(),
          "restricting a function not on the parent group");
  const ClassSet& hc = H.classes();
  const std::vector<int>& fus = H.fusion();
  ClassFunction r;
  r.domain = &hc;
  r.label = "res[" + H.name() + "](" + f.label + ")";
  r.values.reserve(hc.count());
  for (int i = 0; i < hc.count(); ++i) r.values.push_back(f.values[fus[i]]);
  return r;
}

ClassFunction inflate_from_quotient(const Subgroup& H, const QuotientGroup& Q,
                                    const ClassFunction& f) {
  require(f.domain == &Q.classes(), "inflating a function not on the quotient");
  const ClassSet& hc = H.classes();
  const ClassSet& qc = Q.classes();
  ClassFunction r;
  r.domain = &hc;
  r.label = "infl(" + f.label + ")";
  r.values.reserve(hc.count());
  for (int i = 0; i < hc.count(); ++i) {
    const int parent_id = H.member(hc[i].rep);
    r.values.push_back(f.values[qc.class_of(Q.coset_of(parent_id))]);
  }
  return r;
}

bool cf_canonical_less(const ClassFunction& a, const ClassFunction& b) {
  const BigInt da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  for (std::size_t i = 0; i < a.values.size(); ++i) {
    const int c = cyc_compare(a.values[i], b.values[i]);
    if (c != 0) return c < 0;
  }
  return false;
}

}  // namespace sl2eps
