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

#include "sl2eps/gf.hpp"

#include <algorithm>

namespace sl2eps {

namespace {

// Dense polynomial over F_p, coefficient i at position i, no trailing zeros.
using Poly = std::vector<int>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b, int p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  trim(r);
  return r;
}

// Remainder of a modulo monic m.
Poly poly_mod(Poly a, const Poly& m, int p) {
  trim(a);
  while (a.size() >= m.size()) {
    const int lead = a.back();
    const std::size_t shift = a.size() - m.size();
    for (std::size_t i = 0; i < m.size(); ++i) {
      int& c = a[shift + i];
      c = ((c - lead * m[i]) % p + p) % p;
    }
    trim(a);
  }
  return a;
}

bool poly_divides(const Poly& d, const Poly& a, int p) {
  return poly_mod(a, d, p).empty();
}

// Trial division by every monic polynomial of degree in [1, deg/2].
bool poly_irreducible(const Poly& m, int p) {
  const int deg = static_cast<int>(m.size()) - 1;
  for (int d = 1; 2 * d <= deg; ++d) {
    const std::int64_t count = ipow(p, d);
    for (std::int64_t n = 0; n < count; ++n) {
      Poly cand(d + 1, 0);
      std::int64_t t = n;
      for (int i = 0; i < d; ++i) {
        cand[i] = static_cast<int>(t % p);
        t /= p;
      }
      cand[d] = 1;
      if (poly_divides(cand, m, p)) return false;
    }
  }
  return true;
}

Poly index_to_poly(std::int64_t idx, int p, int f) {
  Poly c(f, 0);
  for (int i = 0; i < f; ++i) {
    c[i] = static_cast<int>(idx % p);
    idx /= p;
  }
  trim(c);
  return c;
}

std::int64_t poly_to_index(const Poly& a, int p) {
  std::int64_t idx = 0;
  for (std::size_t i = a.size(); i-- > 0;) idx = idx * p + a[i];
  return idx;
}

}  // namespace

FieldCtx FieldCtx::create(int p, int f) {
  require_config(p >= 3 && is_prime(p), "field characteristic must be an odd prime");
  require_config(f >= 1, "field degree must be positive");
  const std::int64_t q64 = ipow(p, f);
  require_config(q64 <= 2048, "field size exceeds the supported budget (p^f <= 2048)");

  FieldCtx F;
  F.p_ = p;
  F.f_ = f;
  F.q_ = static_cast<int>(q64);

  // Smallest monic irreducible of degree f: minimizing the index below is
  // the same as lexicographic order on (c_{f-1}, ..., c_0).
  Poly mod;
  for (std::int64_t n = 0; n < q64; ++n) {
    Poly cand(f + 1, 0);
    std::int64_t t = n;
    for (int i = 0; i < f; ++i) {
      cand[i] = static_cast<int>(t % p);
      t /= p;
    }
    cand[f] = 1;
    if (poly_irreducible(cand, p)) {
      mod = cand;
      break;
    }
  }
  require(!mod.empty(), "no irreducible modulus found");
  F.modulus_ = mod;

  const int q = F.q_;
  F.add_.resize(static_cast<std::size_t>(q) * q);
  F.mul_.resize(static_cast<std::size_t>(q) * q);
  F.neg_.resize(q);
  F.inv_.resize(q);
  F.frob_.resize(q);
  F.trace_.resize(q);
  F.is_square_.assign(q, 0);

  for (int a = 0; a < q; ++a) {
    const Poly pa = index_to_poly(a, p, f);
    for (int b = 0; b < q; ++b) {
      const Poly pb = index_to_poly(b, p, f);
      Poly s(std::max(pa.size(), pb.size()), 0);
      for (std::size_t i = 0; i < pa.size(); ++i) s[i] = pa[i];
      for (std::size_t i = 0; i < pb.size(); ++i) s[i] = (s[i] + pb[i]) % p;
      trim(s);
      F.add_[static_cast<std::size_t>(a) * q + b] =
          static_cast<std::uint16_t>(poly_to_index(s, p));
      F.mul_[static_cast<std::size_t>(a) * q + b] = static_cast<std::uint16_t>(
          poly_to_index(poly_mod(poly_mul(pa, pb, p), mod, p), p));
    }
  }

  for (int a = 0; a < q; ++a) {
    Poly pa = index_to_poly(a, p, f);
    for (auto& c : pa) c = (p - c) % p;
    trim(pa);
    F.neg_[a] = static_cast<std::uint16_t>(poly_to_index(pa, p));
  }

  // Inverses by a full scan of each row of the multiplication table.
  F.inv_[0] = 0;
  for (int a = 1; a < q; ++a) {
    int found = -1;
    for (int b = 1; b < q; ++b)
      if (F.mul_[static_cast<std::size_t>(a) * q + b] == 1) {
        found = b;
        break;
      }
    require(found > 0, "nonzero element without inverse");
    F.inv_[a] = static_cast<std::uint16_t>(found);
  }

  for (int a = 0; a < q; ++a) {
    int x = a;
    for (int i = 1; i < p; ++i) x = F.mul_[static_cast<std::size_t>(x) * q + a];
    F.frob_[a] = static_cast<std::uint16_t>(x);
  }

  for (int a = 0; a < q; ++a) {
    int acc = a;
    int x = a;
    for (int i = 1; i < f; ++i) {
      x = F.frob_[x];
      acc = F.add_[static_cast<std::size_t>(acc) * q + x];
    }
    F.trace_[a] = static_cast<std::uint16_t>(acc);
  }

  F.is_square_[0] = 1;
  for (int y = 1; y < q; ++y) F.is_square_[F.mul_[static_cast<std::size_t>(y) * q + y]] = 1;

  return F;
}

Fq FieldCtx::from_int(std::int64_t n) const {
  std::int64_t r = n % p_;
  if (r < 0) r += p_;
  Fq x = zero();
  for (std::int64_t i = 0; i < r; ++i) x = add(x, one());
  return x;
}

Fq FieldCtx::from_coeffs(const std::vector<int>& coeffs) const {
  require_config(static_cast<int>(coeffs.size()) <= f_, "coefficient vector too long");
  std::int64_t idx = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    require_config(coeffs[i] >= 0 && coeffs[i] < p_, "coefficient out of range");
    idx = idx * p_ + coeffs[i];
  }
  return Fq(static_cast<int>(idx));
}

std::vector<int> FieldCtx::coeffs(Fq x) const {
  std::vector<int> c(f_, 0);
  int v = x.idx();
  for (int i = 0; i < f_; ++i) {
    c[i] = v % p_;
    v /= p_;
  }
  return c;
}

Fq FieldCtx::inv(Fq a) const {
  require(a != zero(), "division by zero in F_q");
  return Fq(inv_[a.idx()]);
}

Fq FieldCtx::pow(Fq a, std::int64_t e) const {
  if (e < 0) return pow(inv(a), -e);
  Fq r = one();
  Fq base = a;
  while (e > 0) {
    if (e & 1) r = mul(r, base);
    base = mul(base, base);
    e >>= 1;
  }
  return r;
}

int FieldCtx::trace_int(Fq a) const {
  const Fq t = trace(a);
  // The prime subfield is {0, 1, 1+1, ...}; recover the counter.
  Fq x = zero();
  for (int n = 0; n < p_; ++n) {
    if (x == t) return n;
    x = add(x, one());
  }
  throw check_error("trace landed outside the prime subfield");
}

Fq FieldCtx::smallest_non_square() const {
  for (int a = 1; a < q_; ++a)
    if (!is_square_[a]) return Fq(a);
  throw check_error("no non-square exists (field of even characteristic?)");
}

int FieldCtx::mult_order(Fq a) const {
  require(a != zero(), "multiplicative order of zero");
  int n = 1;
  Fq x = a;
  while (x != one()) {
    x = mul(x, a);
    ++n;
    require(n <= q_, "multiplicative order runaway");
  }
  return n;
}

std::vector<Fq> FieldCtx::all_elements() const {
  std::vector<Fq> r;
  r.reserve(q_);
  for (int i = 0; i < q_; ++i) r.push_back(Fq(i));
  return r;
}

}  // namespace sl2eps
