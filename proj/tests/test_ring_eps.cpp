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

#include "sl2eps/mat2.hpp"
#include "sl2eps/ring_eps.hpp"

using namespace sl2eps;

TEST_CASE("ring axioms hold exhaustively over F_3 and F_9") {
  for (auto [p, f] : {std::pair{3, 1}, std::pair{3, 2}}) {
    const FieldCtx F = FieldCtx::create(p, f);
    const REpsCtx R(F);
    const auto all = [&] {
      std::vector<REps> v;
      for (int i = 0; i < F.q() * F.q(); ++i) v.push_back(R.from_index(i));
      return v;
    }();
    for (const REps& x : all) {
      CHECK(R.add(x, R.zero()) == x);
      CHECK(R.mul(x, R.one()) == x);
      CHECK(R.add(x, R.neg(x)) == R.zero());
      for (const REps& y : all) {
        CHECK(R.add(x, y) == R.add(y, x));
        CHECK(R.mul(x, y) == R.mul(y, x));
        for (const REps& z : all) {
          CHECK(R.mul(x, R.add(y, z)) == R.add(R.mul(x, y), R.mul(x, z)));
          CHECK(R.mul(R.mul(x, y), z) == R.mul(x, R.mul(y, z)));
        }
      }
    }
  }
}

TEST_CASE("eps squares to zero and spans the nilradical") {
  const FieldCtx F = FieldCtx::create(5, 1);
  const REpsCtx R(F);
  CHECK(R.mul(R.eps(), R.eps()) == R.zero());
  for (int i = 0; i < 25; ++i) {
    const REps x = R.from_index(i);
    const bool nilpotent = R.mul(x, x) == R.zero() && !(x == R.zero());
    CHECK(nilpotent == (x.r0 == F.zero() && x.r1 != F.zero()));
  }
}

TEST_CASE("units are exactly the elements with invertible constant term") {
  const FieldCtx F = FieldCtx::create(7, 1);
  const REpsCtx R(F);
  int units = 0;
  for (int i = 0; i < 49; ++i) {
    const REps x = R.from_index(i);
    CHECK(R.is_unit(x) == (x.r0 != F.zero()));
    if (R.is_unit(x)) {
      ++units;
      CHECK(R.mul(x, R.invert(x)) == R.one());
    } else {
      CHECK_THROWS_AS(R.invert(x), check_error);
    }
  }
  CHECK(units == 42);
}

TEST_CASE("a concrete inverse: (2 + eps)^{-1} = 2 + 2 eps over F_3") {
  const FieldCtx F = FieldCtx::create(3, 1);
  const REpsCtx R(F);
  const REps x{Fq(2), Fq(1)};
  const REps xi = R.invert(x);
  CHECK(xi.r0 == Fq(2));
  CHECK(xi.r1 == Fq(2));
}

TEST_CASE("lift and reduce are a section and a retraction") {
  const FieldCtx F = FieldCtx::create(3, 1);
  const REpsCtx R(F);
  for (int a = 0; a < 3; ++a) {
    CHECK(R.reduce(R.lift(Fq(a))) == Fq(a));
    CHECK(R.lift(Fq(a)).r1 == F.zero());
  }
  CHECK(R.reduce(REps{Fq(2), Fq(1)}) == Fq(2));
}

TEST_CASE("matrix determinant is multiplicative and inverse works on units") {
  const FieldCtx F = FieldCtx::create(3, 1);
  const MatCtx M(F);
  const REpsCtx& R = M.ring();
  // A couple of fixed matrices with unit determinant.
  const Mat2 a{R.from_index(4), R.from_index(1), R.from_index(3), R.from_index(5)};
  if (R.is_unit(M.det(a))) {
    const Mat2 ai = M.inv(a);
    CHECK(M.mul(a, ai) == M.identity());
    CHECK(M.mul(ai, a) == M.identity());
  }
  // Exhaustive det multiplicativity on a deterministic slice.
  std::vector<Mat2> sample;
  for (int k = 0; k < 81; k += 7) {
    sample.push_back(Mat2{R.from_index(k % 9), R.from_index((k * 2 + 1) % 9),
                          R.from_index((k * 4 + 2) % 9), R.from_index((k * 5 + 3) % 9)});
  }
  for (const Mat2& x : sample)
    for (const Mat2& y : sample)
      CHECK(M.det(M.mul(x, y)) == R.mul(M.det(x), M.det(y)));
}

TEST_CASE("matrix keys are a bijection onto 8-digit base-q strings") {
  const FieldCtx F = FieldCtx::create(3, 1);
  const MatCtx M(F);
  const REpsCtx& R = M.ring();
  for (std::uint64_t key = 0; key < 6561; ++key) {
    CHECK(M.key(M.from_key(key)) == key);
  }
  // The identity has a0 = d0 = 1 and everything else 0.
  const std::uint64_t id_key = M.key(M.identity());
  CHECK(id_key == 1ULL * 3 * 3 * 3 * 3 * 3 * 3 * 3 + 1ULL * 3);
  CHECK(M.from_key(id_key) == M.identity());
  (void)R;
}

TEST_CASE("reduction to F_q matrices is a ring map on the sample") {
  const FieldCtx F = FieldCtx::create(5, 1);
  const MatCtx M(F);
  const REpsCtx& R = M.ring();
  std::vector<Mat2> sample;
  for (int k = 0; k < 625; k += 41)
    sample.push_back(Mat2{R.from_index(k % 25), R.from_index((k + 3) % 25),
                          R.from_index((k * 7 + 1) % 25), R.from_index((k * 11 + 4) % 25)});
  for (const Mat2& x : sample)
    for (const Mat2& y : sample) {
      const Mat2f lhs = M.reduce(M.mul(x, y));
      const Mat2f rhs = M.fmul(M.reduce(x), M.reduce(y));
      CHECK(lhs == rhs);
    }
}
