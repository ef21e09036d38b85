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

#include <set>

#include "sl2eps/group.hpp"

using namespace sl2eps;

TEST_CASE("the dual-number group has order q^4 (q^2 - 1) and works as a group") {
  const FieldCtx F = FieldCtx::create(3, 1);
  const GroupTable G = GroupTable::build_g2f(F);
  CHECK(G.order() == 648);

  const int e = G.identity();
  CHECK(G.mul(e, e) == e);
  // Spot-check associativity and inverses on a deterministic slice.
  for (int i = 0; i < G.order(); i += 37) {
    CHECK(G.mul(i, G.inv(i)) == e);
    for (int j = 1; j < G.order(); j += 101)
      for (int k = 2; k < G.order(); k += 149)
        CHECK(G.mul(G.mul(i, j), k) == G.mul(i, G.mul(j, k)));
  }
}

TEST_CASE("the eps-free group is SL_2(F_q)") {
  const FieldCtx F = FieldCtx::create(3, 1);
  const GroupTable G = GroupTable::build_gf(F);
  CHECK(G.order() == 24);
  CHECK(G.classes().count() == 7);
  CHECK(G.exponent() == 12);
  // Unique element of order 2 (the central -I).
  int involutions = 0;
  for (int i = 0; i < G.order(); ++i)
    if (G.element_order(i) == 2) ++involutions;
  CHECK(involutions == 1);
}

TEST_CASE("class partition is sane and canonical") {
  const FieldCtx F = FieldCtx::create(3, 1);
  const GroupTable G = GroupTable::build_g2f(F);
  const ClassSet& cls = G.classes();
  CHECK(cls.count() == 25);
  CHECK(cls[0].size == 1);
  CHECK(cls[0].rep == G.identity());
  std::int64_t total = 0;
  for (int i = 0; i < cls.count(); ++i) {
    total += cls[i].size;
    CHECK(cls[cls[i].inverse_class].size == cls[i].size);
    CHECK(cls.class_of(cls[i].rep) == i);
    // Same element order across a sampled slice of the class.
    CHECK(G.element_order(cls[i].rep) == cls[i].element_order);
  }
  CHECK(total == G.order());
  // Kernel lifts of order-o elements can have order 3o; the regular
  // unipotent lifts to order 9, so the exponent is 36, not 12.
  CHECK(G.exponent() == 36);
}

TEST_CASE("q=5 table matches the census of orders and classes") {
  const FieldCtx F = FieldCtx::create(5, 1);
  const GroupTable G = GroupTable::build_g2f(F);
  CHECK(G.order() == 15000);
  CHECK(G.classes().count() == 49);
  // Unlike q=3, unipotent lifts stay at order 5 (p >= 5), so the exponent
  // matches the eps-free group's.
  CHECK(G.exponent() == 60);
}

TEST_CASE("the reduction kernel gives a semidirect decomposition") {
  for (int q : {3, 5}) {
    const FieldCtx F = FieldCtx::create(q, 1);
    const GroupTable G = GroupTable::build_g2f(F);
    const SemidirectReport rep = check_semidirect(G);
    CHECK(rep.ok());
    CHECK(rep.n_order == q * q * q);
    CHECK(rep.gf_order == q * (q * q - 1));
    CHECK(rep.group_order == G.order());
  }
}

TEST_CASE("named subgroups have the expected orders") {
  const FieldCtx F = FieldCtx::create(3, 1);
  const GroupTable G = GroupTable::build_g2f(F);
  const int q = 3;
  CHECK(named_subgroup(G, NamedSubgroup::N).order() == q * q * q);
  CHECK(named_subgroup(G, NamedSubgroup::U2).order() == q * q);
  CHECK(named_subgroup(G, NamedSubgroup::U2_1).order() == q);
  CHECK(named_subgroup(G, NamedSubgroup::T2).order() == q * (q - 1));
  CHECK(named_subgroup(G, NamedSubgroup::B2).order() == q * q * q * (q - 1));
  CHECK(named_subgroup(G, NamedSubgroup::Z).order() == 2);
  CHECK(named_subgroup(G, NamedSubgroup::GF_embedded).order() == q * (q * q - 1));
  CHECK(named_subgroup(G, NamedSubgroup::S_F).order() == 2 * q * q * q * q);
  CHECK(named_subgroup(G, NamedSubgroup::A).order() == 2 * q);
  CHECK(named_subgroup(G, NamedSubgroup::SS).order() == q * q);
}

TEST_CASE("the center is plus/minus the identity, computed not assumed") {
  for (int q : {3, 5}) {
    const FieldCtx F = FieldCtx::create(q, 1);
    const GroupTable G = GroupTable::build_g2f(F);
    const Subgroup Z = named_subgroup(G, NamedSubgroup::Z);
    CHECK(Z.order() == 2);
    // Every member commutes with everything (exhaustive).
    for (int pos = 0; pos < Z.order(); ++pos) {
      const int z = Z.member(pos);
      bool central = true;
      for (int g = 0; g < G.order(); ++g)
        if (G.mul(z, g) != G.mul(g, z)) central = false;
      CHECK(central);
    }
  }
}

TEST_CASE("derived subgroup of the sign-diagonal parabolic part") {
  const FieldCtx F = FieldCtx::create(3, 1);
  const GroupTable G = GroupTable::build_g2f(F);
  const Subgroup SF = named_subgroup(G, NamedSubgroup::S_F);
  CHECK(SF.order() == 162);
  CHECK(G.order() / SF.order() == 4);  // index (q^2 - 1)/2

  const Subgroup D = derived_subgroup(SF);
  const Subgroup SS = named_subgroup(G, NamedSubgroup::SS);
  CHECK(D.order() == 9);
  CHECK(D.members() == SS.members());
}

TEST_CASE("quotient by the derived subgroup is abelian of order 2 q^2") {
  const FieldCtx F = FieldCtx::create(3, 1);
  const GroupTable G = GroupTable::build_g2f(F);
  const Subgroup SF = named_subgroup(G, NamedSubgroup::S_F);
  const Subgroup SS = named_subgroup(G, NamedSubgroup::SS);
  const QuotientGroup Q(SF, SS);
  CHECK(Q.order() == 18);
  CHECK(Q.classes().count() == 18);  // abelian: singleton classes
  for (int i = 0; i < Q.order(); ++i)
    for (int j = 0; j < Q.order(); ++j)
      CHECK(Q.mul(i, j) == Q.mul(j, i));
}

TEST_CASE("kernel coordinates round trip and add componentwise") {
  const FieldCtx F = FieldCtx::create(5, 1);
  const GroupTable G = GroupTable::build_g2f(F);
  const MatCtx& M = G.mats();
  for (int a = 0; a < 5; ++a)
    for (int b = 0; b < 5; ++b)
      for (int c = 0; c < 5; ++c) {
        const NCoords n{Fq(a), Fq(b), Fq(c)};
        const Mat2 x = n_element(M, n);
        const NCoords back = n_coords(M, x);
        CHECK(back.a == n.a);
        CHECK(back.b == n.b);
        CHECK(back.c == n.c);
      }
  // n(1,0,0) n(2,3,4) has coordinates (3,3,4): the kernel is additive.
  const Mat2 prod = M.mul(n_element(M, {Fq(1), Fq(0), Fq(0)}),
                          n_element(M, {Fq(2), Fq(3), Fq(4)}));
  const NCoords s = n_coords(M, prod);
  CHECK(s.a == Fq(3));
  CHECK(s.b == Fq(3));
  CHECK(s.c == Fq(4));
}

TEST_CASE("subgroup construction rejects non-closed member sets") {
  const FieldCtx F = FieldCtx::create(3, 1);
  const GroupTable G = GroupTable::build_g2f(F);
  // The identity plus a single transvection is not closed.
  const int t = G.generators().at(0);
  CHECK(G.mul(t, t) != G.identity());
  CHECK_THROWS_AS(Subgroup(G, "bad", std::vector<int>{G.identity(), t}),
                  check_error);
  CHECK_THROWS_AS(Subgroup(G, "empty", std::vector<int>{}), check_error);
}

TEST_CASE("subgroup class fusion lands in parent classes") {
  const FieldCtx F = FieldCtx::create(3, 1);
  const GroupTable G = GroupTable::build_g2f(F);
  const Subgroup H = named_subgroup(G, NamedSubgroup::GF_embedded);
  const std::vector<int>& fus = H.fusion();
  CHECK(static_cast<int>(fus.size()) == H.classes().count());
  for (int j = 0; j < H.classes().count(); ++j) {
    const int parent_cls = G.classes().class_of(H.member(H.classes()[j].rep));
    CHECK(fus[j] == parent_cls);
  }
}

TEST_CASE("find rejects matrices outside the group") {
  const FieldCtx F = FieldCtx::create(3, 1);
  const GroupTable G = GroupTable::build_g2f(F);
  const MatCtx& M = G.mats();
  const REpsCtx& R = M.ring();
  // det = 2, not 1.
  const Mat2 bad{REps{Fq(2), Fq(0)}, R.zero(), R.zero(), R.one()};
  CHECK_FALSE(G.find(bad).has_value());
  CHECK_THROWS_AS(G.id_of(bad), check_error);
}
