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

#ifndef SL2EPS_CENSUS_HPP
#define SL2EPS_CENSUS_HPP

#include <string>
#include <vector>

#include "sl2eps/chartab.hpp"
#include "sl2eps/orbits.hpp"

namespace sl2eps {

/** One family of irreducibles: closed-form dimension and count in q. */
struct DimRow {
  std::string dim_formula;
  std::string count_formula;
  BigInt dim;
  BigInt count;
};

/**
 * The nine families of irreducible representations of SL_2(F_q[eps]),
 * as closed forms evaluated at q.  Construction verifies that squared
 * dimensions sum to q^4 (q^2 - 1) and that the family sizes sum to
 * (q + 2)^2.  Requires odd prime-power q >= 3.
 */
std::vector<DimRow> dimension_table(int q);

BigInt census_weighted_sum(const std::vector<DimRow>& rows);
BigInt census_total_count(const std::vector<DimRow>& rows);

// True iff the families agree exactly with the degree census of a computed
// character table.
bool matches_degree_census(const std::vector<DimRow>& rows,
                           const CharacterTable& t);

struct KernelOrbitCensusRow {
  int rep_id = 0;
  std::int64_t size = 0;
  std::int64_t stabilizer_order = 0;
};

// Orbit census of the eps-free group acting on the q^3 kernel characters.
// Expects a table built over F_q with no eps part (order q (q^2 - 1)).
std::vector<KernelOrbitCensusRow> kernel_orbit_census(const GroupTable& GF);

/**
 * Facts about the characters chi_k (a, b; c, -a) = psi(k c), k != 0:
 * their stabilizer and how they fall into coadjoint orbits.
 */
struct ChiPsiReport {
  std::int64_t stabilizer_order = 0;      // expected 2q
  bool stabilizer_is_signed_unipotent = false;  // shape (s, y; 0, s), s^2 = 1
  bool orbits_split_by_square_class = false;
  int orbit_of_square = -1;     // orbit index of chi_1
  int orbit_of_nonsquare = -1;  // orbit index of chi_nu, nu the least non-square
  // How many of the q-1 characters chi_k land in each of the two orbits;
  // both are (q-1)/2 when the square-class split holds.
  int chi_in_square_orbit = 0;
  int chi_in_nonsquare_orbit = 0;
  // Full sizes of the two ambient orbits inside the q^3 kernel characters.
  std::int64_t orbit_size_square = 0;
  std::int64_t orbit_size_nonsquare = 0;
};

ChiPsiReport chi_psi_report(const GroupTable& GF);

}  // namespace sl2eps

#endif
