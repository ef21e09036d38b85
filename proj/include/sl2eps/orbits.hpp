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

#ifndef SL2EPS_ORBITS_HPP
#define SL2EPS_ORBITS_HPP

#include <vector>

#include "sl2eps/mat2.hpp"

namespace sl2eps {

/**
 * Coordinates (u, v, w) of a character of the reduction kernel:
 * chi(1 + eps(a, b; c, -a)) = psi_1(u a + v b + w c).  Characters are
 * indexed by (u q + v) q + w.
 */
struct KCharCoords {
  Fq u, v, w;
};

int kchar_id(const FieldCtx& F, KCharCoords x);
KCharCoords kchar_from_id(const FieldCtx& F, int id);

/**
 * 3x3 matrix over F_q of the conjugation action of an eps-free element on
 * kernel coordinates; column k holds the coordinates of s^{-1} C_k s for
 * the basis eps-parts C_a = (1 0; 0 -1), C_b = (0 1; 0 0), C_c = (0 0; 1 0).
 * Characters transform by row vector times matrix.
 */
struct Coad3 {
  Fq t[3][3];
};

Coad3 coadjoint_matrix(const FieldCtx& F, const MatCtx& M, const Mat2f& s);
KCharCoords apply_coadjoint(const FieldCtx& F, KCharCoords x, const Coad3& T);

struct KernelOrbit {
  int rep_id = 0;             // smallest character id in the orbit
  std::int64_t size = 0;
  std::vector<int> stabilizer_positions;  // indices into the actor list
};

struct KernelOrbitSet {
  std::vector<KernelOrbit> orbits;  // ordered by ascending rep_id
  std::vector<int> orbit_of;        // character id -> orbit index
};

// Orbit partition of all q^3 kernel characters under a group of eps-free
// actors (which must be closed under multiplication).  Verifies the
// orbit-stabilizer identity for every orbit.
KernelOrbitSet kernel_orbits(const FieldCtx& F, const MatCtx& M,
                             const std::vector<Mat2f>& actors);

}  // namespace sl2eps

#endif
