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

#include "sl2eps/orbits.hpp"

namespace sl2eps {

int kchar_id(const FieldCtx& F, KCharCoords x) {
  return (x.u.idx() * F.q() + x.v.idx()) * F.q() + x.w.idx();
}

KCharCoords kchar_from_id(const FieldCtx& F, int id) {
  const int q = F.q();
  return {Fq(id / (q * q)), Fq((id / q) % q), Fq(id % q)};
}

Coad3 coadjoint_matrix(const FieldCtx& F, const MatCtx& M, const Mat2f& s) {
  const Mat2f sinv = M.finv(s);
  const Fq zero = F.zero(), one = F.one();
  const Mat2f basis[3] = {{one, zero, zero, F.neg(one)},
                          {zero, one, zero, zero},
                          {zero, zero, one, zero}};
  Coad3 T;
  for (int k = 0; k < 3; ++k) {
    const Mat2f img = M.fmul(M.fmul(sinv, basis[k]), s);
    require(img.d == F.neg(img.a), "conjugated kernel coordinate lost trace zero");
    T.t[0][k] = img.a;
    T.t[1][k] = img.b;
    T.t[2][k] = img.c;
  }
  return T;
}

KCharCoords apply_coadjoint(const FieldCtx& F, KCharCoords x, const Coad3& T) {
  const auto dot = [&](int col) {
    return F.add(F.add(F.mul(x.u, T.t[0][col]), F.mul(x.v, T.t[1][col])),
                 F.mul(x.w, T.t[2][col]));
  };
  return {dot(0), dot(1), dot(2)};
}

KernelOrbitSet kernel_orbits(const FieldCtx& F, const MatCtx& M,
                             const std::vector<Mat2f>& actors) {
  const int q = F.q();
  const int q3 = q * q * q;

  std::vector<Coad3> coad;
  coad.reserve(actors.size());
  for (const Mat2f& s : actors) coad.push_back(coadjoint_matrix(F, M, s));

  KernelOrbitSet out;
  out.orbit_of.assign(q3, -1);
  for (int rep_id = 0; rep_id < q3; ++rep_id) {
    if (out.orbit_of[rep_id] >= 0) continue;
    const int orbit_index = static_cast<int>(out.orbits.size());
    const KCharCoords rep = kchar_from_id(F, rep_id);
    KernelOrbit orb;
    orb.rep_id = rep_id;
    for (std::size_t pos = 0; pos < actors.size(); ++pos) {
      const int img = kchar_id(F, apply_coadjoint(F, rep, coad[pos]));
      if (img == rep_id) orb.stabilizer_positions.push_back(static_cast<int>(pos));
      if (out.orbit_of[img] < 0) {
        out.orbit_of[img] = orbit_index;
        ++orb.size;
      } else {
        require(out.orbit_of[img] == orbit_index, "kernel character orbits collide");
      }
    }
    require(orb.size * static_cast<std::int64_t>(orb.stabilizer_positions.size()) ==
                static_cast<std::int64_t>(actors.size()),
            "orbit-stabilizer mismatch in the kernel character action");
    out.orbits.push_back(std::move(orb));
  }
  return out;
}

}  // namespace sl2eps
