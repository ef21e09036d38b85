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

#include "sl2eps/realize.hpp"

#include <algorithm>
#include <set>

namespace sl2eps {

namespace {

CycNum cyc_int(const CycCtx& C, std::int64_t n) {
  return C.from_rational(Rat(n));
}

// <Res_H chi, 1_H> as an exact integer: the dimension of H-fixed vectors.
BigInt fixed_dim(const Subgroup& H, const ClassFunction& chi,
                 const ClassFunction& triv_h) {
  return inner_product(restrict_to(H, chi), triv_h).as_rational_integer();
}

// The eps-free unipotent {(1, y; 0, 1) : y in F_q}, order q.
Subgroup eps_free_unipotent(const GroupTable& G2) {
  const FieldCtx& F = G2.field();
  const Fq zero = F.zero(), one = F.one();
  std::vector<int> members;
  for (int id = 0; id < G2.order(); ++id) {
    const Mat2& m = G2.element(id);
    if (m.a == REps{one, zero} && m.d == REps{one, zero} &&
        m.c == REps{zero, zero} && m.b.r1 == zero)
      members.push_back(id);
  }
  return Subgroup(G2, "U1", std::move(members));
}

// Parent id of (1, 0; x eps, 1).
int z_element_id(const GroupTable& G2, Fq x) {
  const FieldCtx& F = G2.field();
  const Fq zero = F.zero(), one = F.one();
  return G2.id_of(Mat2{{one, zero}, {zero, zero}, {zero, x}, {one, zero}});
}

// Additive character psi_a(x) = zeta_p^{trace(a x)}.
CycNum psi_value(const CycCtx& C, const FieldCtx& F, Fq a, Fq x) {
  const std::int64_t step = C.conductor() / F.p();
  return C.root(step * F.trace_int(F.mul(a, x)));
}

// The unique a with values(x) = psi_a(x) for all x; throws check_error
// unless exactly one parameter matches.
Fq additive_parameter(const CycCtx& C, const FieldCtx& F,
                      const std::function<CycNum(Fq)>& values) {
  int found = -1;
  for (int ai = 0; ai < F.q(); ++ai) {
    bool all = true;
    for (int xi = 0; xi < F.q() && all; ++xi)
      all = values(Fq(xi)) == psi_value(C, F, Fq(ai), Fq(xi));
    if (all) {
      require(found < 0, "restriction matches two additive characters");
      found = ai;
    }
  }
  require(found >= 0, "restriction is not an additive character");
  return Fq(found);
}

// Value of the signed-shift character indexed by (e, u):
// chi(sigma, x) = sign(sigma)^e * psi_u(sigma x).
CycNum shift_char_value(const CycCtx& C, const FieldCtx& F, int e, Fq u,
                        SignedShift s) {
  CycNum v = psi_value(C, F, u, F.mul(s.sigma, s.x));
  if (e == 1 && s.sigma != F.one()) v = -v;
  return v;
}

std::vector<SignedShift> all_shifts(const FieldCtx& F) {
  std::vector<SignedShift> r;
  r.reserve(2 * F.q());
  for (Fq sigma : {F.one(), F.neg(F.one())})
    for (int xi = 0; xi < F.q(); ++xi) r.push_back({sigma, Fq(xi)});
  return r;
}

}  // namespace

std::vector<int> classify_families(const GroupTable& G2,
                                   const CharacterTable& T, const CycCtx& C) {
  const FieldCtx& F = G2.field();
  const int q = F.q();
  require(T.domain == &G2.classes(), "table does not belong to this group");
  const std::vector<DimRow> rows = dimension_table(q);

  const Subgroup N = named_subgroup(G2, NamedSubgroup::N);
  const Subgroup U1 = eps_free_unipotent(G2);
  const ClassFunction triv_n = trivial_character(N.classes(), C);
  const ClassFunction triv_u = trivial_character(U1.classes(), C);

  std::vector<int> family(T.count(), -1);
  for (int i = 0; i < T.count(); ++i) {
    const ClassFunction& chi = T.irreducibles[i];
    const BigInt d = chi.degree();
    const bool kernel_trivial = fixed_dim(N, chi, triv_n) == d;
    if (kernel_trivial) {
      bool all_one = true;
      for (const CycNum& v : chi.values) all_one = all_one && v == C.one();
      const BigInt ufix = fixed_dim(U1, chi, triv_u);
      if (all_one)
        family[i] = 0;
      else if (d == q)
        family[i] = 1;
      else if (d == q + 1)
        family[i] = 2;
      else if (d == (q + 1) / 2 && ufix == 1)
        family[i] = 3;
      else if (d == q - 1 && ufix == 0)
        family[i] = 4;
      else if (d == (q - 1) / 2 && ufix == 0)
        family[i] = 5;
    } else {
      if (d == static_cast<std::int64_t>(q) * q + q)
        family[i] = 6;
      else if (d == static_cast<std::int64_t>(q) * q - q)
        family[i] = 7;
      else if (d == (static_cast<std::int64_t>(q) * q - 1) / 2)
        family[i] = 8;
    }
    require(family[i] >= 0, "table row " + chi.label + " fits no family");
    require(rows[family[i]].dim == d, "family dimension mismatch");
  }

  std::vector<std::int64_t> count(rows.size(), 0);
  for (int f : family) ++count[f];
  for (std::size_t f = 0; f < rows.size(); ++f)
    require(count[f] == rows[f].count, "family sizes disagree with the census");
  return family;
}

VarietyDecomposition decompose_variety_character(const GroupTable& G2,
                                                 const CharacterTable& T,
                                                 const CycCtx& C) {
  const FieldCtx& F = G2.field();
  const int q = F.q();
  require(T.domain == &G2.classes(), "table does not belong to this group");
  require(C.conductor() % F.p() == 0, "conductor must allow p-th roots");

  const XbarSpace X(G2);
  VarietyDecomposition out;
  out.perm = X.permutation_character(C);
  out.multiplicities = decompose(out.perm, T);
  out.family_of = classify_families(G2, T, C);
  require(out.perm.degree() == X.size(), "permutation degree mismatch");

  // Orbits by generator closure, and Burnside's count.
  {
    std::vector<char> seen(X.size(), 0);
    std::int64_t orbits = 0;
    std::vector<std::int64_t> stack;
    for (std::int64_t i = 0; i < X.size(); ++i) {
      if (seen[i]) continue;
      ++orbits;
      seen[i] = 1;
      stack.push_back(i);
      while (!stack.empty()) {
        const std::int64_t y = stack.back();
        stack.pop_back();
        for (int g : G2.generators()) {
          const std::int64_t z = X.act(g, y);
          if (!seen[z]) {
            seen[z] = 1;
            stack.push_back(z);
          }
        }
      }
    }
    out.orbit_count = orbits;
    const CycNum avg =
        inner_product(out.perm, trivial_character(G2.classes(), C));
    out.burnside_matches =
        avg.is_rational() && avg.as_rational() == Rat(orbits);
  }

  // Independent code path: induce the trivial character from a point
  // stabilizer and from the part stabilizer.
  {
    std::vector<int> fixers;
    for (int g = 0; g < G2.order(); ++g)
      if (X.act(g, X.base_index()) == X.base_index()) fixers.push_back(g);
    const Subgroup stab_point(G2, "stab(point)", std::move(fixers));
    out.perm_matches_point_induction =
        induce(stab_point, trivial_character(stab_point.classes(), C)) ==
        out.perm;
  }

  const Subgroup SF = named_subgroup(G2, NamedSubgroup::S_F);
  out.stabilizer_is_named = X.part_stabilizer_members() == SF.members();
  out.parts_match_part_induction =
      induce(SF, trivial_character(SF.classes(), C)) ==
      X.part_permutation_character(C);

  // Transfer characters: the 2q linear characters of the signed-shift
  // subgroup pulled back along the transfer homomorphism.
  const std::vector<SignedShift> mvec = X.transfer(SF);
  const std::vector<SignedShift> shifts = all_shifts(F);
  const ClassSet& sfc = SF.classes();

  std::vector<ClassFunction> xis;
  std::vector<Fq> xi_param;  // additive parameter of each transfer character
  for (int e = 0; e < 2; ++e)
    for (int ui = 0; ui < q; ++ui) {
      ClassFunction xi{&sfc,
                       std::string("transfer(") + (e ? "-" : "+") + "," +
                           std::to_string(ui) + ")",
                       {}};
      xi.values.reserve(sfc.count());
      for (int c = 0; c < sfc.count(); ++c)
        xi.values.push_back(shift_char_value(C, F, e, Fq(ui), mvec[sfc[c].rep]));
      xis.push_back(std::move(xi));
      xi_param.push_back(Fq(ui));
    }

  // Triviality on SS (so each factors through the abelianization SF/SS).
  {
    const Subgroup SSg = named_subgroup(G2, NamedSubgroup::SS);
    bool ok = true;
    for (int id : SSg.members()) {
      const int pos = SF.position_of(id);
      ok = ok && pos >= 0 && mvec[pos] == SignedShift{F.one(), F.zero()};
    }
    out.transfer_factors_through_quotient = ok;
  }

  // Additive parameters: recompute from values on (1, 0; x eps, 1) and
  // check every parameter is realized exactly twice.
  {
    std::vector<int> hits(q, 0);
    bool ok = true;
    for (std::size_t j = 0; j < xis.size(); ++j) {
      const ClassFunction& xi = xis[j];
      const Fq a = additive_parameter(C, F, [&](Fq x) {
        const int pos = SF.position_of(z_element_id(G2, x));
        require(pos >= 0, "shift kernel escapes the part stabilizer");
        return xi.value(sfc.class_of(pos));
      });
      ok = ok && a == xi_param[j];
      ++hits[a.idx()];
    }
    for (int a = 0; a < q; ++a) ok = ok && hits[a] == 2;
    out.transfer_a_values_expected = ok;
  }

  // Partition identity: perm == sum of the induced transfer characters.
  std::vector<ClassFunction> inds;
  inds.reserve(xis.size());
  {
    ClassFunction sum =
        constant_class_function(G2.classes(), C, Rat(0), "zero");
    for (const ClassFunction& xi : xis) {
      inds.push_back(induce(SF, xi));
      sum = cf_add(sum, inds.back());
    }
    out.induced_sum_matches = sum == out.perm;
  }

  // Fixed-point structure of the base part: s fixes the r-translate of a
  // base-part point exactly when r equals the transfer of s, so the trace
  // of s on the chi-isotypic line is conj(chi(m(s))) = chi(m(s^{-1})).
  {
    bool ok = true;
    const std::vector<std::int64_t>& pts = X.part_points(X.base_part());
    for (int spos = 0; spos < SF.order(); ++spos) {
      std::vector<std::int64_t> image(pts.size());
      for (std::size_t k = 0; k < pts.size(); ++k)
        image[k] = X.act(SF.member(spos), pts[k]);
      std::vector<std::int64_t> fix(shifts.size(), 0);
      for (std::size_t ri = 0; ri < shifts.size(); ++ri)
        for (std::size_t k = 0; k < pts.size(); ++k)
          if (X.act_shift(pts[k], shifts[ri]) == image[k]) ++fix[ri];
      for (std::size_t ri = 0; ri < shifts.size(); ++ri) {
        const std::int64_t want = shifts[ri] == mvec[spos] ? 2 * q : 0;
        ok = ok && fix[ri] == want;
      }
      // The base-part character of the stabilizer equals the sum of all
      // 2q signed-shift characters pulled back through the transfer map.
      CycNum chsum = C.zero();
      for (int e = 0; e < 2; ++e)
        for (int ui = 0; ui < q; ++ui)
          chsum += shift_char_value(C, F, e, Fq(ui), mvec[spos]);
      ok = ok && chsum == cyc_int(C, fix[0]);
      // Trace identity, with the Fourier average written out in full.
      const SignedShift minv = mvec[SF.inv(spos)];
      for (int e = 0; e < 2 && ok; ++e)
        for (int ui = 0; ui < q && ok; ++ui) {
          CycNum acc = C.zero();
          for (std::size_t ri = 0; ri < shifts.size(); ++ri)
            acc += conj(shift_char_value(C, F, e, Fq(ui), shifts[ri])) *
                   cyc_int(C, fix[ri]);
          acc *= C.from_rational(Rat(1, 2 * q));
          ok = ok && acc == shift_char_value(C, F, e, Fq(ui), minv);
        }
    }
    out.h0_traces_match = ok;
  }

  // Isotypic fixed-point averages over the whole variety sum back to the
  // plain fixed-point count, for every element of the part stabilizer.
  {
    bool ok = true;
    for (int spos = 0; spos < SF.order(); ++spos) {
      std::vector<std::int64_t> image(X.size());
      for (std::int64_t i = 0; i < X.size(); ++i)
        image[i] = X.act(SF.member(spos), i);
      std::vector<std::int64_t> fix(shifts.size(), 0);
      for (std::size_t ri = 0; ri < shifts.size(); ++ri)
        for (std::int64_t i = 0; i < X.size(); ++i)
          if (X.act_shift(i, shifts[ri]) == image[i]) ++fix[ri];
      // fix at the identity shift is the plain Lefschetz number |X^s|.
      CycNum acc = C.zero();
      for (int e = 0; e < 2; ++e)
        for (int ui = 0; ui < q; ++ui)
          for (std::size_t ri = 0; ri < shifts.size(); ++ri)
            acc += conj(shift_char_value(C, F, e, Fq(ui), shifts[ri])) *
                   cyc_int(C, fix[ri]);
      ok = ok && acc == cyc_int(C, 2 * q * fix[0]);
    }
    out.isotypic_sum_matches = ok;
  }

  // The four large constituents of perm are the inductions of the transfer
  // characters with nonzero additive parameter.
  {
    std::set<int> in_perm;
    for (int i = 0; i < T.count(); ++i)
      if (out.family_of[i] == 8 && out.multiplicities[i] > 0) in_perm.insert(i);
    std::set<int> realized;
    bool ok = true;
    for (std::size_t j = 0; j < xis.size(); ++j) {
      if (xi_param[j] == F.zero()) continue;
      int row = -1;
      for (int i = 0; i < T.count() && row < 0; ++i)
        if (T.irreducibles[i] == inds[j]) row = i;
      ok = ok && row >= 0;
      if (row >= 0) realized.insert(row);
    }
    out.large_constituents_from_transfer =
        ok && realized.size() == 4 && realized == in_perm;
  }

  // Multiplicity pattern by family.
  {
    bool ok = true;
    BigInt total = 0;
    int large = 0;
    for (int i = 0; i < T.count(); ++i) {
      const BigInt& m = out.multiplicities[i];
      total += m * T.irreducibles[i].degree();
      switch (out.family_of[i]) {
        case 0: ok = ok && m == 1; break;
        case 1: ok = ok && m == 1; break;
        case 2: ok = ok && m == 2; break;
        case 3: ok = ok && m == 1; break;
        case 8:
          if (m != 0) {
            ok = ok && m == (q - 1) / 2;
            ++large;
          }
          break;
        default: ok = ok && m == 0; break;
      }
    }
    ok = ok && large == 4;
    ok = ok && total == static_cast<std::int64_t>(q) *
                            (static_cast<std::int64_t>(q) * q - 1);
    out.census_matches = ok;
  }

  return out;
}

namespace {

/** Left cosets of a subgroup, numbered by smallest member. */
struct CosetSpace {
  std::vector<int> coset_of;  // group element id -> coset index
  std::vector<int> reps;      // coset index -> smallest member id
};

CosetSpace build_cosets(const GroupTable& G, const Subgroup& K) {
  CosetSpace cs;
  cs.coset_of.assign(G.order(), -1);
  for (int g = 0; g < G.order(); ++g) {
    if (cs.coset_of[g] >= 0) continue;
    const int c = static_cast<int>(cs.reps.size());
    cs.reps.push_back(g);
    for (int k : K.members()) cs.coset_of[G.mul(g, k)] = c;
  }
  for (int g = 0; g < G.order(); ++g)
    require(cs.coset_of[g] >= 0, "coset construction missed an element");
  return cs;
}

}  // namespace

InducedFamilyReport verify_induced_family(const GroupTable& G2,
                                          const CharacterTable& T,
                                          const CycCtx& C) {
  const FieldCtx& F = G2.field();
  const int q = F.q();
  require(T.domain == &G2.classes(), "table does not belong to this group");
  require(C.conductor() % F.p() == 0, "conductor must allow p-th roots");

  const Subgroup SF = named_subgroup(G2, NamedSubgroup::S_F);
  const Subgroup SSg = named_subgroup(G2, NamedSubgroup::SS);
  const QuotientGroup Q(SF, SSg);
  const CharacterTable Qhat = dixon_table(Q.view(), C);

  InducedFamilyReport out;
  out.dual_count = Qhat.count();
  require(out.dual_count == 2 * q * q, "abelianization has the wrong order");

  out.dual_all_linear = true;
  for (const ClassFunction& xi : Qhat.irreducibles)
    out.dual_all_linear = out.dual_all_linear && xi.degree() == 1;

  // Additive parameter of each dual character from its values on the
  // one-parameter subgroup (1, 0; x eps, 1).
  out.z_params.reserve(Qhat.count());
  std::vector<int> hits(q, 0);
  for (const ClassFunction& xi : Qhat.irreducibles) {
    const Fq a = additive_parameter(C, F, [&](Fq x) {
      const int coset = Q.coset_of(z_element_id(G2, x));
      return xi.value(Q.classes().class_of(coset));
    });
    out.z_params.push_back(a);
    ++hits[a.idx()];
  }
  out.z_params_equidistributed = true;
  for (int a = 0; a < q; ++a)
    out.z_params_equidistributed = out.z_params_equidistributed &&
                                   hits[a] == 2 * q;

  // Inflate, induce, and test irreducibility against the parameter.
  const std::int64_t half = (static_cast<std::int64_t>(q) * q - 1) / 2;
  std::vector<ClassFunction> tilde, ind;
  tilde.reserve(Qhat.count());
  ind.reserve(Qhat.count());
  out.admissible_irreducible = true;
  out.inadmissible_reducible = true;
  for (int j = 0; j < Qhat.count(); ++j) {
    tilde.push_back(inflate_from_quotient(SF, Q, Qhat.irreducibles[j]));
    ind.push_back(induce(SF, tilde.back()));
    require(ind.back().degree() == half, "induced degree mismatch");
    const BigInt norm = inner_product(ind.back(), ind.back()).as_rational_integer();
    if (out.z_params[j] == F.zero())
      out.inadmissible_reducible = out.inadmissible_reducible && norm > 1;
    else
      out.admissible_irreducible = out.admissible_irreducible && norm == 1;
  }

  // The two realization sets a = 1 and a = least non-square: pairwise
  // distinct inductions that exhaust the degree-(q^2-1)/2 rows.
  {
    const Fq nu = F.smallest_non_square();
    std::set<int> realized;
    std::int64_t chosen = 0;
    bool ok = true;
    for (int j = 0; j < Qhat.count(); ++j) {
      if (!(out.z_params[j] == F.one() || out.z_params[j] == nu)) continue;
      ++chosen;
      int row = -1;
      for (int i = 0; i < T.count() && row < 0; ++i)
        if (T.irreducibles[i] == ind[j]) row = i;
      ok = ok && row >= 0;
      if (row >= 0) {
        ok = ok && realized.insert(row).second;  // no repeats
      }
    }
    std::set<int> family_rows;
    for (int i = 0; i < T.count(); ++i)
      if (T.irreducibles[i].degree() == half) family_rows.insert(i);
    out.family_realized_exactly =
        ok && chosen == 4 * q && realized == family_rows;
  }

  // Conjugation by a lifted diag(x, 1/x) divides the parameter by x^2 and
  // fixes the induced character.
  {
    bool ok = true;
    const ClassSet& sfc = SF.classes();
    for (int j = 0; j < Qhat.count(); ++j) {
      const Fq nu = F.smallest_non_square();
      if (!(out.z_params[j] == F.one() || out.z_params[j] == nu)) continue;
      for (int xi_ = 1; xi_ < q; ++xi_) {
        const Fq x(xi_);
        const Fq zero = F.zero();
        const int d_id = G2.id_of(
            Mat2{{x, zero}, {zero, zero}, {zero, zero}, {F.inv(x), zero}});
        ClassFunction twisted{&sfc, tilde[j].label + "^d", {}};
        twisted.values.reserve(sfc.count());
        for (int c = 0; c < sfc.count(); ++c) {
          const int rep_id = SF.member(sfc[c].rep);
          const int conj_id =
              G2.mul(G2.mul(d_id, rep_id), G2.inv(d_id));
          const int cpos = SF.position_of(conj_id);
          require(cpos >= 0, "diagonal does not normalize the stabilizer");
          twisted.values.push_back(tilde[j].value(sfc.class_of(cpos)));
        }
        const Fq a_twisted = additive_parameter(C, F, [&](Fq t) {
          const int pos = SF.position_of(z_element_id(G2, t));
          return twisted.value(sfc.class_of(pos));
        });
        ok = ok && a_twisted == F.div(out.z_params[j], F.mul(x, x));
        ok = ok && induce(SF, twisted) == ind[j];
      }
    }
    out.square_twist_collapses = ok;
  }

  // Coset space of SS: free right action of the abelianization, exhaustive
  // well-definedness, and the isotypic fixed-point identity
  //   (1/|Q|) sum_c xi(c) #{y : y.c = g.y}  ==  Ind(xi)(g)
  // for every dual character and every class; the projector here picks the
  // component where right translation by c acts as conj(xi(c)), which is
  // the labeling that makes the identity come out with xi on both sides.
  {
    const CosetSpace Y = build_cosets(G2, SSg);
    const int ny = static_cast<int>(Y.reps.size());
    require(static_cast<std::int64_t>(ny) * SSg.order() == G2.order(),
            "coset count mismatch");

    // Right action well defined: independent of coset representative.
    for (int g = 0; g < G2.order(); ++g)
      for (int c = 0; c < Q.order(); ++c)
        require(Y.coset_of[G2.mul(g, Q.rep(c))] ==
                    Y.coset_of[G2.mul(Y.reps[Y.coset_of[g]], Q.rep(c))],
                "right coset action depends on the representative");

    out.coset_action_free = true;
    std::vector<std::vector<int>> right(Q.order(), std::vector<int>(ny));
    for (int c = 0; c < Q.order(); ++c)
      for (int y = 0; y < ny; ++y) {
        right[c][y] = Y.coset_of[G2.mul(Y.reps[y], Q.rep(c))];
        if (right[c][y] == y && c != Q.identity())
          out.coset_action_free = false;
      }

    const ClassSet& cls = G2.classes();
    bool lefschetz = true;
    for (int t = 0; t < cls.count(); ++t) {
      std::vector<int> left(ny);
      for (int y = 0; y < ny; ++y)
        left[y] = Y.coset_of[G2.mul(cls[t].rep, Y.reps[y])];
      std::vector<std::int64_t> fix(Q.order(), 0);
      for (int c = 0; c < Q.order(); ++c)
        for (int y = 0; y < ny; ++y)
          if (right[c][y] == left[y]) ++fix[c];
      CycNum total = C.zero();
      for (int j = 0; j < Qhat.count(); ++j) {
        CycNum acc = C.zero();
        for (int c = 0; c < Q.order(); ++c)
          acc += Qhat.irreducibles[j].value(Q.classes().class_of(c)) *
                 cyc_int(C, fix[c]);
        acc *= C.from_rational(Rat(1, Q.order()));
        total += acc;
        lefschetz = lefschetz && acc == ind[j].value(t);
      }
      // Summing all isotypic averages recovers the plain fixed-point count.
      lefschetz = lefschetz && total == cyc_int(C, fix[Q.identity()]);
    }
    out.lefschetz_matches = lefschetz;
  }

  return out;
}

}  // namespace sl2eps
