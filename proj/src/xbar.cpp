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

#include "sl2eps/xbar.hpp"

#include <array>
#include <map>

namespace sl2eps {

SignedShift signed_shift_coords(const MatCtx& M, const Mat2& m) {
  const FieldCtx& F = M.field();
  const Fq zero = F.zero();
  require(m.b == REps{zero, zero} && m.a.r1 == zero && m.d.r1 == zero &&
              m.c.r0 == zero && m.a.r0 == m.d.r0 &&
              F.mul(m.a.r0, m.a.r0) == F.one(),
          "matrix is not a signed shift");
  return {m.a.r0, m.c.r1};
}

Mat2 signed_shift_element(const MatCtx& M, SignedShift s) {
  const FieldCtx& F = M.field();
  require(F.mul(s.sigma, s.sigma) == F.one(), "signed shift needs sigma = +/-1");
  const Fq zero = F.zero();
  return {{s.sigma, zero}, {zero, zero}, {zero, s.x}, {s.sigma, zero}};
}

SignedShift signed_shift_mul(const FieldCtx& F, SignedShift a, SignedShift b) {
  return {F.mul(a.sigma, b.sigma),
          F.add(F.mul(a.x, b.sigma), F.mul(a.sigma, b.x))};
}

XbarSpace::XbarSpace(const GroupTable& G2) : G2_(&G2), F_(&G2.field()) {
  const int q = F_->q();
  const std::int64_t full =
      static_cast<std::int64_t>(q) * q * q * q * (static_cast<std::int64_t>(q) * q - 1);
  require(G2.order() == full, "variety needs the full dual-number group");
  size_ = static_cast<std::int64_t>(q) * (static_cast<std::int64_t>(q) * q - 1);

  // Parts: group point indices by the sign pair of the base column.  Parts
  // are numbered by their smallest point index.
  part_of_.assign(size_, -1);
  std::map<int, int> pair_part;
  for (std::int64_t i = 0; i < size_; ++i) {
    const XbarPoint P = point(i);
    const int fwd = P.a0.idx() * q + P.c0.idx();
    const int bwd = F_->neg(P.a0).idx() * q + F_->neg(P.c0).idx();
    const int canon = std::min(fwd, bwd);
    auto [it, fresh] = pair_part.try_emplace(canon, part_count());
    if (fresh) part_points_.emplace_back();
    part_of_[i] = it->second;
    part_points_[it->second].push_back(i);
  }
  for (const auto& pts : part_points_)
    require(static_cast<int>(pts.size()) == 2 * q,
            "every part must have exactly 2q points");
  require(part_count() * 2 == static_cast<int>(q) * q - 1,
          "part count must be (q^2-1)/2");

  // The left action must permute parts; generators suffice because the
  // property is closed under products and inverses.
  for (int g : G2.generators())
    for (int p = 0; p < part_count(); ++p) {
      const int image = part_of_[act(g, part_points_[p].front())];
      for (std::int64_t i : part_points_[p])
        require(part_of_[act(g, i)] == image,
                "left action does not respect the part decomposition");
    }
}

XbarPoint XbarSpace::point(std::int64_t i) const {
  const int q = F_->q();
  require(i >= 0 && i < size_, "point index out of range");
  const int t = static_cast<int>(i % q);
  const int pair = static_cast<int>(i / q) + 1;
  return {Fq(pair / q), Fq(pair % q), Fq(t)};
}

std::int64_t XbarSpace::index(XbarPoint P) const {
  const int q = F_->q();
  const int pair = P.a0.idx() * q + P.c0.idx();
  require(pair != 0, "base column of a variety point must be nonzero");
  return static_cast<std::int64_t>(pair - 1) * q + P.t.idx();
}

std::int64_t XbarSpace::act(int g, std::int64_t i) const {
  const FieldCtx& F = *F_;
  const Mat2& m = G2_->element(g);
  const XbarPoint P = point(i);
  const Fq x0 = m.a.r0, x1 = m.a.r1, y0 = m.b.r0, y1 = m.b.r1;
  const Fq z0 = m.c.r0, z1 = m.c.r1, w0 = m.d.r0, w1 = m.d.r1;
  const Fq a0 = F.add(F.mul(x0, P.a0), F.mul(y0, P.c0));
  const Fq c0 = F.add(F.mul(z0, P.a0), F.mul(w0, P.c0));
  const Fq qa = F.sub(F.mul(x0, z1), F.mul(z0, x1));
  const Fq qm = F.sub(F.add(F.mul(x0, w1), F.mul(y0, z1)),
                      F.add(F.mul(z0, y1), F.mul(w0, x1)));
  const Fq qc = F.sub(F.mul(y0, w1), F.mul(w0, y1));
  const Fq shift = F.add(F.add(F.mul(F.mul(P.a0, P.a0), qa),
                               F.mul(F.mul(P.a0, P.c0), qm)),
                         F.mul(F.mul(P.c0, P.c0), qc));
  return index({a0, c0, F.add(P.t, shift)});
}

std::int64_t XbarSpace::act_shift(std::int64_t i, SignedShift s) const {
  const FieldCtx& F = *F_;
  require(F.mul(s.sigma, s.sigma) == F.one(), "signed shift needs sigma = +/-1");
  const XbarPoint P = point(i);
  return index({F.mul(s.sigma, P.a0), F.mul(s.sigma, P.c0),
                F.add(P.t, F.mul(s.sigma, s.x))});
}

const std::vector<std::int64_t>& XbarSpace::part_points(int part) const {
  require(part >= 0 && part < part_count(), "part index out of range");
  return part_points_[part];
}

int XbarSpace::act_on_part(int g, int part) const {
  return part_of_[act(g, part_points(part).front())];
}

std::int64_t XbarSpace::base_index() const {
  return index({F_->one(), F_->zero(), F_->zero()});
}

ClassFunction XbarSpace::permutation_character(const CycCtx& C) const {
  const ClassSet& cls = G2_->classes();
  ClassFunction f{&cls, "perm(variety)", {}};
  f.values.reserve(cls.count());
  for (int c = 0; c < cls.count(); ++c) {
    const int rep = cls[c].rep;
    std::int64_t fixed = 0;
    for (std::int64_t i = 0; i < size_; ++i)
      if (act(rep, i) == i) ++fixed;
    f.values.push_back(C.from_rational(Rat(fixed)));
  }
  return f;
}

ClassFunction XbarSpace::part_permutation_character(const CycCtx& C) const {
  const ClassSet& cls = G2_->classes();
  ClassFunction f{&cls, "perm(parts)", {}};
  f.values.reserve(cls.count());
  for (int c = 0; c < cls.count(); ++c) {
    const int rep = cls[c].rep;
    std::int64_t fixed = 0;
    for (int p = 0; p < part_count(); ++p)
      if (act_on_part(rep, p) == p) ++fixed;
    f.values.push_back(C.from_rational(Rat(fixed)));
  }
  return f;
}

std::vector<int> XbarSpace::part_stabilizer_members() const {
  const int base = base_part();
  std::vector<int> members;
  for (int g = 0; g < G2_->order(); ++g)
    if (act_on_part(g, base) == base) members.push_back(g);
  return members;
}

std::vector<SignedShift> XbarSpace::transfer(const Subgroup& H) const {
  const FieldCtx& F = *F_;
  require(&H.parent() == G2_, "transfer needs a subgroup of the variety's group");
  const std::int64_t b0 = base_index();
  const int bpart = base_part();

  std::vector<SignedShift> m;
  m.reserve(H.order());
  for (int pos = 0; pos < H.order(); ++pos) {
    const std::int64_t j = act(H.member(pos), b0);
    require(part_of_[j] == bpart, "transfer needs a part-stabilizing subgroup");
    const XbarPoint P = point(j);
    // (1,0,0) . (sigma, x) = (sigma, 0, sigma x).
    require(P.c0 == F.zero() && F.mul(P.a0, P.a0) == F.one(),
            "image of the base point is outside the base orbit");
    m.push_back({P.a0, F.mul(P.a0, P.t)});
  }

  // Deterministic multiplicativity sample (full when small).
  const std::int64_t n = H.order();
  const std::int64_t stride = n <= 512 ? 1 : n / 256 + 1;
  for (std::int64_t i = 0; i < n; i += stride)
    for (std::int64_t j = 0; j < n; j += stride) {
      const int prod = H.mul(static_cast<int>(i), static_cast<int>(j));
      require(m[prod] == signed_shift_mul(F, m[i], m[j]),
              "transfer map is not multiplicative");
    }
  return m;
}

bool variety_axioms_hold(const XbarSpace& X, bool exhaustive) {
  const GroupTable& G = X.group();
  const FieldCtx& F = X.field();
  const std::int64_t n = X.size();
  bool ok = true;

  // Identity.
  const int e = G.identity();
  for (std::int64_t i = 0; i < n && ok; ++i) ok = X.act(e, i) == i;

  // Left axiom (g h) . x = g . (h . x).
  std::vector<int> outer;
  if (exhaustive)
    for (int g = 0; g < G.order(); ++g) outer.push_back(g);
  else
    outer = G.generators();
  for (int g : outer) {
    std::vector<std::int64_t> g_of(n);
    for (std::int64_t i = 0; i < n; ++i) g_of[i] = X.act(g, i);
    for (int h = 0; h < G.order() && ok; ++h) {
      const int gh = G.mul(g, h);
      for (std::int64_t i = 0; i < n && ok; ++i)
        ok = X.act(gh, i) == g_of[X.act(h, i)];
    }
  }

  // Right axiom x . (r s) = (x . r) . s, complete.
  std::vector<SignedShift> shifts;
  for (Fq sigma : {F.one(), F.neg(F.one())})
    for (int xi = 0; xi < F.q(); ++xi) shifts.push_back({sigma, Fq(xi)});
  for (SignedShift r : shifts)
    for (SignedShift s : shifts) {
      const SignedShift rs = signed_shift_mul(F, r, s);
      for (std::int64_t i = 0; i < n && ok; ++i)
        ok = X.act_shift(i, rs) == X.act_shift(X.act_shift(i, r), s);
    }

  // Commutation (g . x) . s = g . (x . s), complete in (s, x) and over the
  // same g range as the left axiom.
  for (int g : outer)
    for (SignedShift s : shifts)
      for (std::int64_t i = 0; i < n && ok; ++i)
        ok = X.act_shift(X.act(g, i), s) == X.act(g, X.act_shift(i, s));

  return ok;
}

bool lefschetz_is_class_function(const XbarSpace& X, bool exhaustive) {
  const GroupTable& G = X.group();
  const ClassSet& cls = G.classes();
  const std::int64_t n = X.size();
  const auto fixed_count = [&](int g) {
    std::int64_t c = 0;
    for (std::int64_t i = 0; i < n; ++i)
      if (X.act(g, i) == i) ++c;
    return c;
  };
  bool ok = true;
  if (exhaustive) {
    std::vector<std::int64_t> per_class(cls.count(), -1);
    for (int g = 0; g < G.order() && ok; ++g) {
      const std::int64_t c = fixed_count(g);
      std::int64_t& slot = per_class[cls.class_of(g)];
      if (slot < 0)
        slot = c;
      else
        ok = slot == c;
    }
  } else {
    for (int t = 0; t < cls.count() && ok; ++t) {
      const std::int64_t base = fixed_count(cls[t].rep);
      for (int g : G.generators())
        ok = ok &&
             fixed_count(G.mul(G.mul(g, cls[t].rep), G.inv(g))) == base;
    }
  }
  return ok;
}

DoubleCosets double_cosets(const GroupTable& G, const Subgroup& B) {
  require(&B.parent() == &G, "double cosets need a subgroup of this group");
  DoubleCosets dc;
  dc.coset_of.assign(G.order(), -1);
  std::vector<int> stack;
  for (int g = 0; g < G.order(); ++g) {
    if (dc.coset_of[g] >= 0) continue;
    const int c = static_cast<int>(dc.reps.size());
    dc.reps.push_back(g);
    dc.coset_of[g] = c;
    stack.push_back(g);
    while (!stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      for (int b : B.members()) {
        for (int y : {G.mul(b, x), G.mul(x, b)}) {
          if (dc.coset_of[y] < 0) {
            dc.coset_of[y] = c;
            stack.push_back(y);
          }
        }
      }
    }
  }
  return dc;
}

namespace {

// Sparse integer polynomial in the twelve letters
// x0 y0 z0 w0 x1 y1 z1 w1 a0 c0 a1 c1 (exponent-vector keyed).
struct Poly {
  std::map<std::array<int, 12>, long long> terms;

  static Poly var(int i) {
    Poly p;
    std::array<int, 12> e{};
    e[i] = 1;
    p.terms[e] = 1;
    return p;
  }
  static Poly constant(long long c) {
    Poly p;
    if (c != 0) p.terms[std::array<int, 12>{}] = c;
    return p;
  }

  Poly& operator+=(const Poly& o) {
    for (const auto& [e, c] : o.terms) {
      const long long s = (terms[e] += c);
      if (s == 0) terms.erase(e);
    }
    return *this;
  }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a += b * Poly::constant(-1); }
  friend Poly operator*(const Poly& a, const Poly& b) {
    Poly r;
    for (const auto& [ea, ca] : a.terms)
      for (const auto& [eb, cb] : b.terms) {
        std::array<int, 12> e;
        for (int i = 0; i < 12; ++i) e[i] = ea[i] + eb[i];
        const long long s = (r.terms[e] += ca * cb);
        if (s == 0) r.terms.erase(e);
      }
    return r;
  }
  bool is_zero() const { return terms.empty(); }
};

}  // namespace

bool shift_formula_symbolic_check() {
  const Poly x0 = Poly::var(0), y0 = Poly::var(1), z0 = Poly::var(2),
             w0 = Poly::var(3), x1 = Poly::var(4), y1 = Poly::var(5),
             z1 = Poly::var(6), w1 = Poly::var(7), a0 = Poly::var(8),
             c0 = Poly::var(9), a1 = Poly::var(10), c1 = Poly::var(11);

  // Column (a0 + a1 e, c0 + c1 e) pushed through the matrix with entries
  // x0 + x1 e, ..., collected by powers of e (e^2 = 0).
  const Poly a0p = x0 * a0 + y0 * c0;
  const Poly a1p = x0 * a1 + x1 * a0 + y0 * c1 + y1 * c0;
  const Poly c0p = z0 * a0 + w0 * c0;
  const Poly c1p = z0 * a1 + z1 * a0 + w0 * c1 + w1 * c0;

  const Poly f = a0 * c1 - c0 * a1;
  const Poly fp = a0p * c1p - c0p * a1p;

  const Poly D = a0 * a0 * (x0 * z1 - z0 * x1) +
                 a0 * c0 * (x0 * w1 + y0 * z1 - z0 * y1 - w0 * x1) +
                 c0 * c0 * (y0 * w1 - w0 * y1);
  const Poly det0_minus_1 = x0 * w0 - y0 * z0 - Poly::constant(1);

  const Poly residue = fp - f - D - det0_minus_1 * f;
  require(residue.is_zero(), "fiber shift identity fails as a polynomial");
  return true;
}

}  // namespace sl2eps
