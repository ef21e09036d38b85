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

/*
 * End-to-end acceptance run.  Each numbered criterion prints exactly one
 * [PASS]/[FAIL] line; the process exits nonzero if any criterion fails.
 * Everything is exact arithmetic - there are no tolerances anywhere.
 */

#include <cstdio>
#include <exception>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "sl2eps/realize.hpp"
#include "sl2eps/report.hpp"

using namespace sl2eps;

namespace {

int g_failures = 0;

void criterion(int n, const std::string& name,
               const std::function<void()>& body) {
  try {
    body();
    std::printf("[PASS] criterion %d: %s\n", n, name.c_str());
  } catch (const std::exception& e) {
    ++g_failures;
    std::printf("[FAIL] criterion %d: %s -- %s\n", n, name.c_str(), e.what());
  }
  std::fflush(stdout);
}

// Shared per-q state so the expensive builds happen once.
struct QCtx {
  FieldCtx F;
  GroupTable G2;
  CycCtx C;
  CharacterTable T;
  std::unique_ptr<VarietyDecomposition> dec;

  explicit QCtx(int q)
      : F(FieldCtx::create(q, 1)),
        G2(GroupTable::build_g2f(F)),
        C(CycCtx::create(static_cast<int>(G2.exponent()))),
        T(little_group_table(G2, C)) {}
};

QCtx& qctx(int q) {
  static std::map<int, std::unique_ptr<QCtx>> cache;
  auto& slot = cache[q];
  if (!slot) slot = std::make_unique<QCtx>(q);
  return *slot;
}

const VarietyDecomposition& decomposition(int q) {
  QCtx& c = qctx(q);
  if (!c.dec)
    c.dec = std::make_unique<VarietyDecomposition>(
        decompose_variety_character(c.G2, c.T, c.C));
  return *c.dec;
}

BigInt group_order_formula(int q) {
  const BigInt Q = q;
  return Q * Q * Q * Q * (Q * Q - 1);
}

void check_census(int q) {
  const std::vector<DimRow> dt = dimension_table(q);
  const BigInt order = group_order_formula(q);
  require(census_weighted_sum(dt) == order,
          "squared dimensions miss the group order");
  const BigInt Q = q;
  require(census_total_count(dt) == (Q + 2) * (Q + 2),
          "family counts miss the class number");
  // The superseded variant of the census lists 2q members in the last
  // family instead of 4q; its squared-dimension total must fall short of
  // the group order by exactly 2q ((q^2-1)/2)^2.
  const BigInt half = (Q * Q - 1) / 2;
  require(dt.back().count == 4 * Q, "last family should have 4q members");
  BigInt variant = 0;
  for (std::size_t i = 0; i < dt.size(); ++i) {
    const BigInt cnt = (i + 1 == dt.size()) ? BigInt(2 * Q) : dt[i].count;
    variant += dt[i].dim * dt[i].dim * cnt;
  }
  require(order - variant == 2 * Q * half * half,
          "superseded-variant deficit is not 2q((q^2-1)/2)^2");
}

void check_class_count(int q) {
  QCtx& c = qctx(q);
  const ClassSet& cls = c.G2.classes();
  require(cls.count() == (q + 2) * (q + 2), "class count is not (q+2)^2");
  std::int64_t covered = 0;
  for (int i = 0; i < cls.count(); ++i) covered += cls[i].size;
  require(covered == c.G2.order(), "class sizes do not cover the group");
}

void column_orthogonality(const CharacterTable& T, const CycCtx& C) {
  const ClassSet& cls = *T.domain;
  for (int c1 = 0; c1 < cls.count(); ++c1)
    for (int c2 = 0; c2 < cls.count(); ++c2) {
      CycNum sum = C.zero();
      for (const ClassFunction& chi : T.irreducibles)
        sum = sum + chi.value(c1) * conj(chi.value(c2));
      const CycNum want =
          c1 == c2 ? C.from_rational(Rat(BigInt(cls.centralizer_order(c1))))
                   : C.zero();
      require(sum == want, "column orthogonality fails");
    }
}

void check_both_methods(int q) {
  QCtx& c = qctx(q);
  const CharacterTable dixon = dixon_table(c.G2.view(), c.C);
  verify_irreducible_table(c.T);   // row orthonormality + completeness
  verify_irreducible_table(dixon);
  column_orthogonality(c.T, c.C);
  column_orthogonality(dixon, c.C);
  require(tables_agree_up_to_row_permutation(c.T, dixon),
          "methods disagree");
  const std::vector<DimRow> dt = dimension_table(q);
  require(matches_degree_census(dt, c.T), "census mismatch (kernel method)");
  require(matches_degree_census(dt, dixon),
          "census mismatch (eigenvector method)");
}

void check_orbit_split(int q) {
  const FieldCtx F = FieldCtx::create(q, 1);
  const GroupTable GF = GroupTable::build_gf(F);
  const ChiPsiReport r = chi_psi_report(GF);
  require(r.stabilizer_order == 2 * q, "stabilizer order is not 2q");
  require(r.stabilizer_is_signed_unipotent, "stabilizer has the wrong shape");
  require(r.orbits_split_by_square_class, "square-class split fails");
  require(r.orbit_of_square != r.orbit_of_nonsquare, "orbits coincide");
  require(r.chi_in_square_orbit == (q - 1) / 2 &&
              r.chi_in_nonsquare_orbit == (q - 1) / 2,
          "each orbit should carry (q-1)/2 of the characters");
}

void check_multiplicities(int q) {
  QCtx& c = qctx(q);
  const VarietyDecomposition& d = decomposition(q);
  require(d.census_matches, "multiplicity pattern mismatch");
  require(d.large_constituents_from_transfer,
          "large constituents are not the transfer inductions");
  BigInt total = 0;
  for (int r = 0; r < c.T.count(); ++r)
    total += d.multiplicities[r] * c.T.irreducibles[r].degree();
  const BigInt Q = q;
  require(total == Q * (Q * Q - 1), "total dimension is not q(q^2-1)");
}

void check_isotypic(int q) {
  const VarietyDecomposition& d = decomposition(q);
  require(d.isotypic_sum_matches, "isotypic averages do not sum to Fix");
  require(d.parts_match_part_induction, "part character is not induced");
  require(d.induced_sum_matches,
          "transfer inductions do not sum to the permutation character");
  require(d.h0_traces_match, "section traces disagree with the transfer");
}

void check_realization(int q) {
  QCtx& c = qctx(q);
  const InducedFamilyReport r = verify_induced_family(c.G2, c.T, c.C);
  require(r.dual_count == 2 * q * q, "dual count is not 2q^2");
  require(r.dual_all_linear, "non-linear dual character");
  require(r.z_params_equidistributed, "additive parameters unbalanced");
  require(r.admissible_irreducible, "nonzero parameter fails to induce "
                                    "irreducibly");
  require(r.inadmissible_reducible, "zero parameter induces irreducibly");
  require(r.family_realized_exactly,
          "inductions miss the degree-(q^2-1)/2 family");
  require(r.square_twist_collapses, "square twist changes the induction");
  require(r.coset_action_free, "right action is not free");
  require(r.lefschetz_matches, "fixed-point averages disagree");
}

void frobenius_reciprocity(const QCtx& c, NamedSubgroup which) {
  const Subgroup H = named_subgroup(c.G2, which);
  const CharacterTable TH = dixon_table(H.view(), c.C);
  for (const ClassFunction& f : TH.irreducibles) {
    const ClassFunction indf = induce(H, f);
    for (const ClassFunction& g : c.T.irreducibles)
      require(inner_product(indf, g) == inner_product(f, restrict_to(H, g)),
              "Frobenius reciprocity fails");
  }
}

void field_and_ring_axioms() {
  const FieldCtx F = FieldCtx::create(3, 1);
  const int q = F.q();
  for (int ia = 0; ia < q; ++ia)
    for (int ib = 0; ib < q; ++ib) {
      const Fq a(ia), b(ib);
      require(F.add(a, b) == F.add(b, a) && F.mul(a, b) == F.mul(b, a),
              "commutativity fails");
      for (int ic = 0; ic < q; ++ic) {
        const Fq cc(ic);
        require(F.add(F.add(a, b), cc) == F.add(a, F.add(b, cc)),
                "additive associativity fails");
        require(F.mul(F.mul(a, b), cc) == F.mul(a, F.mul(b, cc)),
                "multiplicative associativity fails");
        require(F.mul(a, F.add(b, cc)) == F.add(F.mul(a, b), F.mul(a, cc)),
                "distributivity fails");
      }
      require(F.add(a, F.neg(a)) == F.zero(), "negation fails");
      if (a != F.zero())
        require(F.mul(a, F.inv(a)) == F.one(), "field inverse fails");
    }

  const REpsCtx R(F);
  for (int ia = 0; ia < R.size(); ++ia)
    for (int ib = 0; ib < R.size(); ++ib) {
      const REps a = R.from_index(ia), b = R.from_index(ib);
      require(R.add(a, b) == R.add(b, a) && R.mul(a, b) == R.mul(b, a),
              "ring commutativity fails");
      for (int ic = 0; ic < R.size(); ++ic) {
        const REps cc = R.from_index(ic);
        require(R.add(R.add(a, b), cc) == R.add(a, R.add(b, cc)),
                "ring additive associativity fails");
        require(R.mul(R.mul(a, b), cc) == R.mul(a, R.mul(b, cc)),
                "ring multiplicative associativity fails");
        require(R.mul(a, R.add(b, cc)) == R.add(R.mul(a, b), R.mul(a, cc)),
                "ring distributivity fails");
      }
      require(R.add(a, R.neg(a)) == R.zero(), "ring negation fails");
      require(R.is_unit(a) == (a.r0 != F.zero()), "unit detection fails");
      if (R.is_unit(a))
        require(R.mul(a, R.invert(a)) == R.one(), "ring inverse fails");
    }
  // eps^2 = 0, and the worked inverse (2 + eps)^{-1} = 2 + 2 eps.
  require(R.mul(R.eps(), R.eps()) == R.zero(), "eps is not nilpotent");
  require(R.invert(REps{Fq(2), Fq(1)}) == REps{Fq(2), Fq(2)},
          "dual-number inverse example fails");
}

void check_exhaustive() {
  QCtx& c = qctx(3);
  const XbarSpace X(c.G2);
  require(variety_axioms_hold(X, true), "variety action axioms fail");
  require(lefschetz_is_class_function(X, true),
          "fixed-point counts are not class functions");

  // Burnside: <perm, 1> is an exact integer, 1 (the action is transitive).
  const ClassFunction perm = X.permutation_character(c.C);
  const ClassFunction triv = trivial_character(c.G2.classes(), c.C);
  const CycNum avg = inner_product(perm, triv);
  require(avg.is_rational(), "orbit average is not rational");
  require(avg.as_rational_integer() == 1, "the action should be transitive");
  require(decomposition(3).burnside_matches, "Burnside cross-check fails");

  frobenius_reciprocity(c, NamedSubgroup::B2);
  frobenius_reciprocity(c, NamedSubgroup::S_F);

  field_and_ring_axioms();
}

}  // namespace

int main() {
  criterion(1,
            "dimension census identities and superseded-variant deficit "
            "(q = 3, 5, 7)",
            [] {
              for (int q : {3, 5, 7}) check_census(q);
            });

  criterion(2, "conjugacy class count is (q+2)^2 (q = 3, 5)", [] {
    for (int q : {3, 5}) check_class_count(q);
  });

  criterion(3,
            "kernel-orbit and eigenvector tables agree, with exact row and "
            "column orthogonality and the census degrees (q = 3)",
            [] { check_both_methods(3); });

  criterion(4,
            "chi_psi stabilizer has order 2q and signed-unipotent shape; "
            "two coadjoint orbits split by square class (q = 3, 5, 7)",
            [] {
              for (int q : {3, 5, 7}) check_orbit_split(q);
            });

  criterion(5,
            "variety character multiplicities match the stated pattern and "
            "total dimension q(q^2-1) (q = 3, 5)",
            [] {
              for (int q : {3, 5}) check_multiplicities(q);
            });

  criterion(6,
            "isotypic sums, part-induction identity and section traces are "
            "exact (q = 3, 5)",
            [] {
              for (int q : {3, 5}) check_isotypic(q);
            });

  criterion(7,
            "shift-character inductions realize the degree-(q^2-1)/2 family "
            "exactly, with the square-twist collapse (q = 3, 5)",
            [] {
              for (int q : {3, 5}) check_realization(q);
            });

  criterion(8,
            "exhaustive axioms at q = 3: group/shift actions, Burnside "
            "integrality, Frobenius reciprocity, field and ring laws",
            [] { check_exhaustive(); });

  if (g_failures == 0) {
    std::printf("all 8 acceptance criteria passed\n");
    return 0;
  }
  std::printf("%d acceptance criteria FAILED\n", g_failures);
  return 1;
}
