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

#ifndef SL2EPS_REALIZE_HPP
#define SL2EPS_REALIZE_HPP

#include "sl2eps/census.hpp"
#include "sl2eps/chartab.hpp"
#include "sl2eps/xbar.hpp"

namespace sl2eps {

/**
 * Family index (0..8, aligned with dimension_table(q)) of every row of the
 * character table.  Rows are told apart by degree, by triviality on the
 * reduction kernel (the first six families are inflated from the eps-free
 * quotient), and - where degrees collide, as they do at q = 3 - by the
 * dimension of the space of vectors fixed by the eps-free unipotent
 * {(1, y; 0, 1)}.  Throws check_error unless every row lands in exactly one
 * family and the family sizes match dimension_table(q).
 */
std::vector<int> classify_families(const GroupTable& G2,
                                   const CharacterTable& T, const CycCtx& C);

/**
 * Exact decomposition of the permutation character of the group on the
 * fiber variety, with every structural step cross-checked.  Bool fields
 * record claim outcomes; structural impossibilities throw check_error.
 */
struct VarietyDecomposition {
  ClassFunction perm;                  // fixed points per conjugacy class
  std::vector<BigInt> multiplicities;  // <perm, row> per table row
  std::vector<int> family_of;          // classify_families output
  BigInt orbit_count;                  // group orbits on the variety

  // <perm, 1> is an exact integer equal to orbit_count (Burnside).
  bool burnside_matches = false;
  // perm equals the induction of the trivial character from a point
  // stabilizer (second, independent code path).
  bool perm_matches_point_induction = false;
  // The part permutation character equals the induction of the trivial
  // character from the part stabilizer.
  bool parts_match_part_induction = false;
  // The stabilizer of the base part is exactly the named subgroup SF.
  bool stabilizer_is_named = false;
  // Every transfer character is trivial on the named subgroup SS.
  bool transfer_factors_through_quotient = false;
  // Restricted to {(1,0; x eps, 1)}, the 2q transfer characters realize
  // each additive parameter a exactly twice.
  bool transfer_a_values_expected = false;
  // perm == sum over the 2q transfer characters xi of Ind(xi).
  bool induced_sum_matches = false;
  // Trace of s on the chi-isotypic line of functions on the base part
  // equals chi evaluated at the transfer of s^{-1}, for every s in the
  // part stabilizer and every signed-shift character chi.
  bool h0_traces_match = false;
  // Summing the isotypic fixed-point averages over all 2q signed-shift
  // characters returns the plain fixed-point count, exactly.
  bool isotypic_sum_matches = false;
  // The degree-(q^2-1)/2 constituents of perm are exactly the inductions
  // of the transfer characters with nonzero additive parameter.
  bool large_constituents_from_transfer = false;
  // Multiplicity pattern: trivial and degree-q rows once, both
  // degree-(q+1)/2 rows once, every degree-(q+1) row twice, exactly four
  // degree-(q^2-1)/2 rows (q-1)/2 times, everything else zero.
  bool census_matches = false;

  bool ok() const {
    return burnside_matches && perm_matches_point_induction &&
           parts_match_part_induction && stabilizer_is_named &&
           transfer_factors_through_quotient && transfer_a_values_expected &&
           induced_sum_matches && h0_traces_match && isotypic_sum_matches &&
           large_constituents_from_transfer && census_matches;
  }
};

VarietyDecomposition decompose_variety_character(const GroupTable& G2,
                                                 const CharacterTable& T,
                                                 const CycCtx& C);

/**
 * Realization of the degree-(q^2-1)/2 family: characters of the
 * abelianization Q = SF/SS, classified by their restriction to
 * {(1,0; x eps, 1)} (the additive parameter a), induce irreducibly from SF
 * exactly when a != 0, and the two parameter choices a = 1 and a = least
 * non-square realize the whole family without repetition.  The coset space
 * of SS carries a free right Q-action whose isotypic fixed-point averages
 * reproduce the induced characters.
 */
struct InducedFamilyReport {
  int dual_count = 0;       // |Q^|, expected 2 q^2
  std::vector<Fq> z_params; // additive parameter per dual row

  bool dual_all_linear = false;
  // Each additive parameter a is realized by exactly 2q dual characters.
  bool z_params_equidistributed = false;
  // a != 0 -> Ind irreducible of degree (q^2-1)/2.
  bool admissible_irreducible = false;
  // a == 0 -> Ind reducible.
  bool inadmissible_reducible = false;
  // The 4q inductions from a in {1, least non-square} are pairwise
  // distinct and equal, as a set, to the degree-(q^2-1)/2 table rows.
  bool family_realized_exactly = false;
  // Conjugating by a lifted diag(x, 1/x) scales a by 1/x^2 and leaves the
  // induced character unchanged.
  bool square_twist_collapses = false;
  // The right action of Q on the coset space is free.
  bool coset_action_free = false;
  // Isotypic fixed-point average on the coset space == induced character,
  // for every dual row and every conjugacy class; their sum over all dual
  // rows returns the plain fixed-point count.
  bool lefschetz_matches = false;

  bool ok() const {
    return dual_all_linear && z_params_equidistributed &&
           admissible_irreducible && inadmissible_reducible &&
           family_realized_exactly && square_twist_collapses &&
           coset_action_free && lefschetz_matches;
  }
};

InducedFamilyReport verify_induced_family(const GroupTable& G2,
                                          const CharacterTable& T,
                                          const CycCtx& C);

}  // namespace sl2eps

#endif
