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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "sl2eps/xbar.hpp"

using namespace sl2eps;

namespace {

// Integer value of a prime-field element, for embedding into an extension.
int int_of_prime(const FieldCtx& F, Fq x) {
  for (int v = 0; v < F.q(); ++v)
    if (F.from_int(v) == x) return v;
  REQUIRE(false);
  return -1;
}

}  // namespace

TEST_CASE("point set has q(q^2-1) points in (q^2-1)/2 free orbits") {
  const FieldCtx F = FieldCtx::create(3, 1);
  const GroupTable G2 = GroupTable::build_g2f(F);
  const XbarSpace X(G2);

  CHECK(X.size() == 24);
  CHECK(X.part_count() == 4);
  for (int p = 0; p < X.part_count(); ++p)
    CHECK(X.part_points(p).size() == 6);

  for (std::int64_t i = 0; i < X.size(); ++i) {
    const XbarPoint P = X.point(i);
    CHECK(!(P.a0 == F.zero() && P.c0 == F.zero()));
    CHECK(X.index(P) == i);
  }
  CHECK_THROWS_AS(X.index(XbarPoint{F.zero(), F.zero(), F.one()}),
                  check_error);
}

TEST_CASE("only the full dual-number group carries the variety") {
  const FieldCtx F = FieldCtx::create(3, 1);
  const GroupTable GF = GroupTable::build_gf(F);
  CHECK_THROWS_AS(XbarSpace{GF}, check_error);
}

TEST_CASE("action axioms hold exhaustively at q=3") {
  const FieldCtx F = FieldCtx::create(3, 1);
  const GroupTable G2 = GroupTable::build_g2f(F);
  const XbarSpace X(G2);
  CHECK(variety_axioms_hold(X, true));
  CHECK(lefschetz_is_class_function(X, true));
}

TEST_CASE("kernel element with lower-left c eps shifts the fiber by c") {
  const FieldCtx F = FieldCtx::create(3, 1);
  const GroupTable G2 = GroupTable::build_g2f(F);
  const MatCtx M(F);
  const XbarSpace X(G2);
  for (int ci = 0; ci < 3; ++ci)
    for (int ti = 0; ti < 3; ++ti) {
      const Fq c(ci), t(ti);
      const int g = G2.id_of(n_element(M, NCoords{F.zero(), F.zero(), c}));
      const XbarPoint P{F.one(), F.zero(), t};
      const XbarPoint Q = X.point(X.act(g, X.index(P)));
      CHECK(Q.a0 == F.one());
      CHECK(Q.c0 == F.zero());
      CHECK(Q.t == F.add(t, c));
    }
}

TEST_CASE("minus identity negates the base column and keeps the fiber") {
  const FieldCtx F = FieldCtx::create(3, 1);
  const GroupTable G2 = GroupTable::build_g2f(F);
  const XbarSpace X(G2);
  const SignedShift minus{F.neg(F.one()), F.zero()};
  for (std::int64_t i = 0; i < X.size(); ++i) {
    const XbarPoint P = X.point(i);
    const XbarPoint Q = X.point(X.act_shift(i, minus));
    CHECK(Q.a0 == F.neg(P.a0));
    CHECK(Q.c0 == F.neg(P.c0));
    CHECK(Q.t == P.t);
  }
}

TEST_CASE("signed shifts form a subgroup with the twisted product") {
  const FieldCtx F = FieldCtx::create(5, 1);
  const GroupTable G2 = GroupTable::build_g2f(F);
  const MatCtx M(F);
  const Subgroup A = named_subgroup(G2, NamedSubgroup::A);
  CHECK(A.order() == 10);
  for (int i = 0; i < A.order(); ++i) {
    const SignedShift a = signed_shift_coords(M, G2.element(A.member(i)));
    CHECK(G2.id_of(signed_shift_element(M, a)) == A.member(i));
    for (int j = 0; j < A.order(); ++j) {
      const SignedShift b = signed_shift_coords(M, G2.element(A.member(j)));
      const int prod = A.member(A.mul(i, j));
      CHECK(signed_shift_coords(M, G2.element(prod)) ==
            signed_shift_mul(F, a, b));
    }
  }
  const Mat2 e1{REps{F.one(), F.zero()}, REps{F.one(), F.zero()},
                REps{F.zero(), F.zero()}, REps{F.one(), F.zero()}};
  CHECK_THROWS_AS(signed_shift_coords(M, e1), check_error);
}

TEST_CASE("transfer reads off the sign and the lower-left eps coefficient") {
  for (int q : {3, 5}) {
    const FieldCtx F = FieldCtx::create(q, 1);
    const GroupTable G2 = GroupTable::build_g2f(F);
    const XbarSpace X(G2);
    const Subgroup SF = named_subgroup(G2, NamedSubgroup::S_F);
    CHECK(X.part_stabilizer_members() == SF.members());
    const std::vector<SignedShift> m = X.transfer(SF);
    for (int pos = 0; pos < SF.order(); ++pos) {
      const Mat2& s = G2.element(SF.member(pos));
      CHECK(m[pos] == SignedShift{s.a.r0, s.c.r1});
    }
    // Full multiplicativity, not just the constructor's sample.
    for (int i = 0; i < SF.order(); ++i)
      for (int j = 0; j < SF.order(); ++j)
        CHECK(m[SF.mul(i, j)] == signed_shift_mul(F, m[i], m[j]));
    // The kernel has index |A| = 2q, and the central subgroup SS sits
    // inside it (the quotient SF/SS still separates the 2q shifts).
    const Subgroup SS = named_subgroup(G2, NamedSubgroup::SS);
    std::int64_t kernel = 0;
    for (int pos = 0; pos < SF.order(); ++pos)
      if (m[pos] == SignedShift{F.one(), F.zero()}) ++kernel;
    CHECK(kernel == SF.order() / (2 * q));
    for (int pos = 0; pos < SS.order(); ++pos) {
      const int sf_pos = SF.position_of(SS.member(pos));
      REQUIRE(sf_pos >= 0);
      CHECK(m[sf_pos] == SignedShift{F.one(), F.zero()});
    }
  }
}

TEST_CASE("abstract left action matches the torsor over F_27, both roots") {
  const FieldCtx F3 = FieldCtx::create(3, 1);
  const GroupTable G2 = GroupTable::build_g2f(F3);
  const XbarSpace X(G2);
  const FieldCtx F27 = FieldCtx::create(3, 3);
  const auto emb = [&](Fq x) { return F27.from_int(int_of_prime(F3, x)); };

  std::vector<int> sample = G2.generators();
  for (int g = 0; g < G2.order(); g += 97) sample.push_back(g);

  for (int kint : {1, 2}) {
    const Fq k27 = F27.from_int(kint);
    Fq fstar = F27.zero();
    bool found = false;
    for (int i = 0; i < 27 && !found; ++i)
      if (F27.sub(F27.frobenius(Fq(i)), Fq(i)) == k27) {
        fstar = Fq(i);
        found = true;
      }
    REQUIRE(found);
    // The root generates the cubic extension: it is not prime-field.
    CHECK(F27.frobenius(fstar) != fstar);

    for (std::int64_t i = 0; i < X.size(); ++i) {
      const XbarPoint P = X.point(i);
      const Fq a0 = emb(P.a0), c0 = emb(P.c0);
      const Fq target = F27.add(fstar, emb(P.t));
      // A concrete lift (a0 + a1 e, c0 + c1 e) with a0 c1 - c0 a1 = f* + t.
      Fq a1 = F27.zero(), c1 = F27.zero();
      if (P.a0 != F3.zero())
        c1 = F27.div(target, a0);
      else
        a1 = F27.neg(F27.div(target, c0));
      REQUIRE(F27.sub(F27.mul(a0, c1), F27.mul(c0, a1)) == target);

      for (int g : sample) {
        const Mat2& m = G2.element(g);
        const Fq x0 = emb(m.a.r0), x1 = emb(m.a.r1), y0 = emb(m.b.r0),
                 y1 = emb(m.b.r1), z0 = emb(m.c.r0), z1 = emb(m.c.r1),
                 w0 = emb(m.d.r0), w1 = emb(m.d.r1);
        const Fq a0p = F27.add(F27.mul(x0, a0), F27.mul(y0, c0));
        const Fq c0p = F27.add(F27.mul(z0, a0), F27.mul(w0, c0));
        const Fq a1p =
            F27.add(F27.add(F27.mul(x0, a1), F27.mul(x1, a0)),
                    F27.add(F27.mul(y0, c1), F27.mul(y1, c0)));
        const Fq c1p =
            F27.add(F27.add(F27.mul(z0, a1), F27.mul(z1, a0)),
                    F27.add(F27.mul(w0, c1), F27.mul(w1, c0)));
        const Fq fp = F27.sub(F27.mul(a0p, c1p), F27.mul(c0p, a1p));

        const XbarPoint Q = X.point(X.act(g, i));
        CHECK(a0p == emb(Q.a0));
        CHECK(c0p == emb(Q.c0));
        const Fq diff = F27.sub(fp, fstar);
        CHECK(F27.frobenius(diff) == diff);  // the shift stays rational
        CHECK(diff == emb(Q.t));
        CHECK(F27.sub(F27.frobenius(fp), fp) == k27);  // still on the torsor
      }
    }
  }
}

TEST_CASE("abstract right action matches concrete right multiplication") {
  const FieldCtx F3 = FieldCtx::create(3, 1);
  const GroupTable G2 = GroupTable::build_g2f(F3);
  const XbarSpace X(G2);
  const FieldCtx F27 = FieldCtx::create(3, 3);
  const auto emb = [&](Fq x) { return F27.from_int(int_of_prime(F3, x)); };

  const Fq k27 = F27.from_int(1);
  Fq fstar = F27.zero();
  for (int i = 0; i < 27; ++i)
    if (F27.sub(F27.frobenius(Fq(i)), Fq(i)) == k27) {
      fstar = Fq(i);
      break;
    }

  std::vector<SignedShift> shifts;
  for (Fq sigma : {F3.one(), F3.neg(F3.one())})
    for (int xi = 0; xi < 3; ++xi) shifts.push_back({sigma, Fq(xi)});

  for (std::int64_t i = 0; i < X.size(); ++i) {
    const XbarPoint P = X.point(i);
    const Fq a0 = emb(P.a0), c0 = emb(P.c0);
    const Fq target = F27.add(fstar, emb(P.t));
    Fq a1 = F27.zero(), c1 = F27.zero();
    if (P.a0 != F3.zero())
      c1 = F27.div(target, a0);
    else
      a1 = F27.neg(F27.div(target, c0));

    // Complete the column to a determinant-one matrix over F_27[eps]; the
    // fiber shift must not depend on the completion, so try two.
    const Fq zero = F27.zero();
    Fq b0, d0;
    if (P.a0 != F3.zero()) {
      d0 = F27.inv(a0);
      b0 = zero;
    } else {
      b0 = F27.neg(F27.inv(c0));
      d0 = zero;
    }
    Fq b1 = zero, d1 = zero;
    if (P.a0 != F3.zero())
      d1 = F27.div(F27.sub(F27.mul(b0, c1), F27.mul(a1, d0)), a0);
    else
      b1 = F27.neg(F27.div(F27.mul(b0, c1), c0));
    // det = 1 exactly, in both coordinates of the dual numbers.
    REQUIRE(F27.sub(F27.mul(a0, d0), F27.mul(b0, c0)) == F27.one());
    REQUIRE(F27.add(F27.sub(F27.mul(a0, d1), F27.mul(b1, c0)),
                    F27.sub(F27.mul(a1, d0), F27.mul(b0, c1))) == zero);

    for (const SignedShift s : shifts) {
      const std::int64_t j = X.act_shift(i, s);
      const XbarPoint Q = X.point(j);
      const Fq sg = emb(s.sigma), x = emb(s.x);

      for (int variant = 0; variant < 2; ++variant) {
        // Second completion: add r * (first column) to the second column.
        Fq bb0 = b0, bb1 = b1, dd0 = d0, dd1 = d1;
        if (variant == 1) {
          const Fq r0 = Fq(5), r1 = Fq(7);  // arbitrary fixed F27[eps] unit
          bb0 = F27.add(b0, F27.mul(r0, a0));
          bb1 = F27.add(b1, F27.add(F27.mul(r0, a1), F27.mul(r1, a0)));
          dd0 = F27.add(d0, F27.mul(r0, c0));
          dd1 = F27.add(d1, F27.add(F27.mul(r0, c1), F27.mul(r1, c0)));
        }
        // First column of M * (sigma, 0; x eps, sigma).
        const Fq na0 = F27.mul(a0, sg);
        const Fq na1 = F27.add(F27.mul(a1, sg), F27.mul(bb0, x));
        const Fq nc0 = F27.mul(c0, sg);
        const Fq nc1 = F27.add(F27.mul(c1, sg), F27.mul(dd0, x));
        const Fq fp = F27.sub(F27.mul(na0, nc1), F27.mul(nc0, na1));

        CHECK(na0 == emb(Q.a0));
        CHECK(nc0 == emb(Q.c0));
        CHECK(F27.sub(fp, fstar) == emb(Q.t));
      }
    }
  }
}

TEST_CASE("fiber shift identity holds in the integer polynomial ring") {
  CHECK(shift_formula_symbolic_check());
}

TEST_CASE("parts are permuted transitively with the expected stabilizer") {
  const FieldCtx F = FieldCtx::create(3, 1);
  const GroupTable G2 = GroupTable::build_g2f(F);
  const XbarSpace X(G2);
  const CycCtx C = CycCtx::create(static_cast<int>(G2.exponent()));

  // act_on_part is transitive from the base part.
  std::vector<char> seen(X.part_count(), 0);
  std::vector<int> stack{X.base_part()};
  seen[X.base_part()] = 1;
  int reached = 1;
  while (!stack.empty()) {
    const int p = stack.back();
    stack.pop_back();
    for (int g : G2.generators()) {
      const int r = X.act_on_part(g, p);
      if (!seen[r]) {
        seen[r] = 1;
        ++reached;
        stack.push_back(r);
      }
    }
  }
  CHECK(reached == X.part_count());

  const ClassFunction pc = X.permutation_character(C);
  CHECK(pc.degree() == 24);
  const ClassFunction pp = X.part_permutation_character(C);
  CHECK(pp.degree() == 4);
  // Transitive in both cases: one copy of the trivial character.
  const ClassFunction triv = trivial_character(G2.classes(), C);
  CHECK(inner_product(pc, triv) == C.one());
  CHECK(inner_product(pp, triv) == C.one());
}
