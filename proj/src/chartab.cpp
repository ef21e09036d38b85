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

#include "sl2eps/chartab.hpp"

#include <algorithm>

#include "sl2eps/orbits.hpp"

namespace sl2eps {

CharacterTable little_group_table(const GroupTable& G2, const CycCtx& C) {
  const FieldCtx& F = G2.field();
  const MatCtx& M = G2.mats();
  const int q = F.q();
  const std::int64_t q3 = static_cast<std::int64_t>(q) * q * q;
  require(G2.order() == q3 * q * (q * q - 1),
          "little-group construction needs the full dual-number table");
  require_config(C.conductor() % F.p() == 0,
                 "cyclotomic conductor lacks the additive character order");

  const Subgroup GF = named_subgroup(G2, NamedSubgroup::GF_embedded);
  const Subgroup N = named_subgroup(G2, NamedSubgroup::N);

  std::vector<Mat2f> actors;
  actors.reserve(GF.order());
  for (int pos = 0; pos < GF.order(); ++pos)
    actors.push_back(M.reduce(G2.element(GF.member(pos))));
  const KernelOrbitSet orbits = kernel_orbits(F, M, actors);

  // psi(x) = zeta_p^{Tr x}; chi value on kernel coordinates.
  const int m = C.conductor();
  const auto chi_value = [&](KCharCoords x, NCoords n) {
    const Fq arg = F.add(F.add(F.mul(x.u, n.a), F.mul(x.v, n.b)), F.mul(x.w, n.c));
    return C.root(static_cast<std::int64_t>(m / F.p()) * F.trace_int(arg));
  };

  CharacterTable table;
  table.domain = &G2.classes();
  table.group_name = G2.name();
  table.method = "little_group";

  const CharacterTable gf_table = dixon_table(GF.view(), C);

  for (const KernelOrbit& orb : orbits.orbits) {
    const KCharCoords rep = kchar_from_id(F, orb.rep_id);

    if (orb.rep_id == 0) {
      // Trivial kernel character: the whole eps-free table inflates.
      require(static_cast<std::int64_t>(orb.stabilizer_positions.size()) == GF.order(),
              "trivial character with a proper stabilizer");
      for (const ClassFunction& rho : gf_table.irreducibles) {
        ClassFunction f;
        f.domain = &G2.classes();
        f.label = "infl(" + rho.label + ")";
        f.values.reserve(G2.classes().count());
        for (int j = 0; j < G2.classes().count(); ++j) {
          const int g = G2.classes()[j].rep;
          const int red = G2.id_of(M.lift(M.reduce(G2.element(g))));
          f.values.push_back(rho.values[GF.classes().class_of(GF.position_of(red))]);
        }
        table.irreducibles.push_back(std::move(f));
      }
      continue;
    }

    // Inertia subgroup: stabilizer lifted times the kernel.
    std::vector<int> stab_ids;
    stab_ids.reserve(orb.stabilizer_positions.size());
    for (int pos : orb.stabilizer_positions) stab_ids.push_back(GF.member(pos));
    const Subgroup stab(G2, "stab(k" + std::to_string(orb.rep_id) + ")", stab_ids);
    const CharacterTable stab_table = dixon_table(stab.view(), C);

    std::vector<int> inertia_ids;
    inertia_ids.reserve(stab_ids.size() * N.order());
    for (int s : stab_ids)
      for (int n : N.members()) inertia_ids.push_back(G2.mul(s, n));
    const Subgroup inertia(G2, "inertia(k" + std::to_string(orb.rep_id) + ")",
                           std::move(inertia_ids));
    require(inertia.order() == static_cast<std::int64_t>(stab.order()) * N.order(),
            "inertia subgroup has the wrong order");

    // theta = (inflated stabilizer irreducible) * (extension of chi), then
    // induced up.  chi extends by ignoring the eps-free part.
    const ClassSet& ic = inertia.classes();
    for (const ClassFunction& rho : stab_table.irreducibles) {
      ClassFunction theta;
      theta.domain = &ic;
      theta.label = "k" + std::to_string(orb.rep_id) + "*" + rho.label;
      theta.values.reserve(ic.count());
      for (int j = 0; j < ic.count(); ++j) {
        const int h = inertia.member(ic[j].rep);
        const int gpart = G2.id_of(M.lift(M.reduce(G2.element(h))));
        const int spos = stab.position_of(gpart);
        require(spos >= 0, "inertia element reduces outside the stabilizer");
        const int npart = G2.mul(G2.inv(gpart), h);
        const NCoords nc = n_coords(M, G2.element(npart));
        theta.values.push_back(rho.values[stab.classes().class_of(spos)] *
                               chi_value(rep, nc));
      }
      ClassFunction ind = induce(inertia, theta);
      ind.label = "ind(" + theta.label + ")";
      table.irreducibles.push_back(std::move(ind));
    }
  }

  std::sort(table.irreducibles.begin(), table.irreducibles.end(), cf_canonical_less);
  verify_irreducible_table(table);
  return table;
}

}  // namespace sl2eps
