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

#include "sl2eps/census.hpp"

#include <map>

namespace sl2eps {

namespace {

bool is_odd_prime_power(int q) {
  if (q < 3 || q % 2 == 0) return false;
  int p = 3;
  while (p * p <= q) {
    if (q % p == 0) break;
    p += 2;
  }
  if (q % p != 0) p = q;
  while (q % p == 0) q /= p;
  return q == 1;
}

}  // namespace

std::vector<DimRow> dimension_table(int q) {
  require_config(is_odd_prime_power(q), "dimension table needs an odd prime power q");
  const BigInt Q = q;
  std::vector<DimRow> rows = {
      {"1", "1", BigInt(1), BigInt(1)},
      {"q", "1", Q, BigInt(1)},
      {"q+1", "(q-3)/2", Q + 1, BigInt((q - 3) / 2)},
      {"(q+1)/2", "2", BigInt((q + 1) / 2), BigInt(2)},
      {"q-1", "(q-1)/2", Q - 1, BigInt((q - 1) / 2)},
      {"(q-1)/2", "2", BigInt((q - 1) / 2), BigInt(2)},
      {"q^2+q", "(q-1)^2/2", Q * Q + Q, BigInt(q - 1) * (q - 1) / 2},
      {"q^2-q", "(q^2-1)/2", Q * Q - Q, BigInt(q * q - 1) / 2},
      {"(q^2-1)/2", "4q", BigInt((q * q - 1) / 2), BigInt(4 * q)},
  };
  require(census_weighted_sum(rows) == Q * Q * Q * Q * (Q * Q - 1),
          "squared dimensions do not sum to the group order");
  require(census_total_count(rows) == (Q + 2) * (Q + 2),
          "family sizes do not sum to (q+2)^2");
  return rows;
}

BigInt census_weighted_sum(const std::vector<DimRow>& rows) {
  BigInt s = 0;
  for (const DimRow& r : rows) s += r.count * r.dim * r.dim;
  return s;
}

BigInt census_total_count(const std::vector<DimRow>& rows) {
  BigInt s = 0;
  for (const DimRow& r : rows) s += r.count;
  return s;
}

bool matches_degree_census(const std::vector<DimRow>& rows,
                           const CharacterTable& t) {
  std::map<std::int64_t, std::int64_t> expected;
  for (const DimRow& r : rows) {
    if (r.count == 0) continue;
    expected[static_cast<std::int64_t>(r.dim)] +=
        static_cast<std::int64_t>(r.count);
  }
  return expected == t.degree_census();
}

namespace {

std::vector<Mat2f> field_level_actors(const GroupTable& GF) {
  const FieldCtx& F = GF.field();
  const int q = F.q();
  require(GF.order() == static_cast<std::int64_t>(q) * (q * q - 1),
          "kernel orbit census needs an eps-free table");
  std::vector<Mat2f> actors;
  actors.reserve(GF.order());
  for (int g = 0; g < GF.order(); ++g)
    actors.push_back(GF.mats().reduce(GF.element(g)));
  return actors;
}

}  // namespace

std::vector<KernelOrbitCensusRow> kernel_orbit_census(const GroupTable& GF) {
  const KernelOrbitSet os =
      kernel_orbits(GF.field(), GF.mats(), field_level_actors(GF));
  std::vector<KernelOrbitCensusRow> rows;
  rows.reserve(os.orbits.size());
  for (const KernelOrbit& o : os.orbits)
    rows.push_back({o.rep_id, o.size,
                    static_cast<std::int64_t>(o.stabilizer_positions.size())});
  return rows;
}

ChiPsiReport chi_psi_report(const GroupTable& GF) {
  const FieldCtx& F = GF.field();
  const int q = F.q();
  const std::vector<Mat2f> actors = field_level_actors(GF);
  const KernelOrbitSet os = kernel_orbits(F, GF.mats(), actors);

  ChiPsiReport rep;
  const auto chi_id = [&](Fq k) { return kchar_id(F, {F.zero(), F.zero(), k}); };
  rep.orbit_of_square = os.orbit_of[chi_id(F.one())];
  rep.orbit_of_nonsquare = os.orbit_of[chi_id(F.smallest_non_square())];

  // Every chi_k lands in the orbit of its square class, the two orbits
  // differ, and the orbit of chi_1 contains no chi_k of the other class.
  rep.orbits_split_by_square_class = rep.orbit_of_square != rep.orbit_of_nonsquare;
  for (int k = 1; k < q; ++k) {
    const int orbit = os.orbit_of[chi_id(Fq(k))];
    if (orbit == rep.orbit_of_square) ++rep.chi_in_square_orbit;
    if (orbit == rep.orbit_of_nonsquare) ++rep.chi_in_nonsquare_orbit;
    const int expected =
        F.is_square(Fq(k)) ? rep.orbit_of_square : rep.orbit_of_nonsquare;
    if (orbit != expected) rep.orbits_split_by_square_class = false;
  }
  rep.orbit_size_square = os.orbits[rep.orbit_of_square].size;
  rep.orbit_size_nonsquare = os.orbits[rep.orbit_of_nonsquare].size;

  const KernelOrbit& orb = os.orbits[rep.orbit_of_square];
  rep.stabilizer_order = static_cast<std::int64_t>(orb.stabilizer_positions.size());
  require(orb.rep_id == chi_id(F.one()),
          "orbit representative of chi_1 is not chi_1 itself");
  rep.stabilizer_is_signed_unipotent = true;
  for (int pos : orb.stabilizer_positions) {
    const Mat2f s = actors[static_cast<std::size_t>(pos)];
    const bool shape = s.c == F.zero() && s.a == s.d &&
                       F.mul(s.a, s.a) == F.one();
    if (!shape) rep.stabilizer_is_signed_unipotent = false;
  }
  return rep;
}

}  // namespace sl2eps
