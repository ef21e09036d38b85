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

#ifndef SL2EPS_CHARTAB_HPP
#define SL2EPS_CHARTAB_HPP

#include <map>

#include "sl2eps/charfn.hpp"

namespace sl2eps {

/**
 * Complete list of irreducible characters of one group, canonically sorted
 * by (degree, value vector).  Always verified orthonormal and complete
 * before being returned by a constructor function.
 */
struct CharacterTable {
  const ClassSet* domain = nullptr;
  std::string group_name;
  std::string method;
  std::vector<ClassFunction> irreducibles;

  int count() const { return static_cast<int>(irreducibles.size()); }
  // Multiset {degree -> number of irreducibles of that degree}.
  std::map<std::int64_t, std::int64_t> degree_census() const;
};

// Throws check_error unless the rows are pairwise orthonormal, the squared
// degrees sum to the group order, and the row count equals the class count.
void verify_irreducible_table(const CharacterTable& t);

/**
 * Character table from simultaneous eigenvectors of the class-sum matrices
 * over a prime field, lifted to exact cyclotomic values through power-map
 * Fourier inversion and re-verified exactly.  Works for any finite group
 * whose exponent divides the conductor of C.
 */
CharacterTable dixon_table(const GroupView& V, const CycCtx& C,
                           std::int64_t max_order = 20000);

/**
 * Character table of SL_2(F_q[eps]) built from the normal abelian kernel:
 * orbits of the eps-free quotient on the kernel's character group, one
 * induced character per (orbit, stabilizer irreducible) pair.
 */
CharacterTable little_group_table(const GroupTable& G2, const CycCtx& C);

// Exact multiplicities <f, irr_i>; verifies they are nonnegative integers
// and that they reconstruct f.
std::vector<BigInt> decompose(const ClassFunction& f, const CharacterTable& t);

}  // namespace sl2eps

#endif
