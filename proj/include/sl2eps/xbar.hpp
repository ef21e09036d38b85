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

#ifndef SL2EPS_XBAR_HPP
#define SL2EPS_XBAR_HPP

#include "sl2eps/charfn.hpp"
#include "sl2eps/group.hpp"

namespace sl2eps {

/**
 * Point of the fiber variety attached to SL_2(F_q[eps]): a nonzero base
 * column (a0, c0) over F_q together with a fiber coordinate t in F_q.
 *
 * Concretely the variety consists of triples (a0, c0, f) with f a root of
 * f^q - f = k in an algebraic closure; the q roots form a coset f* + F_q
 * of the prime-invariant subfield, and t parameterizes that coset through
 * a fixed base root f*.  Nothing below depends on k or on the choice of
 * f*, which is why the model stores t alone.
 */
struct XbarPoint {
  Fq a0, c0, t;

  friend bool operator==(XbarPoint p, XbarPoint q) {
    return p.a0 == q.a0 && p.c0 == q.c0 && p.t == q.t;
  }
  friend bool operator!=(XbarPoint p, XbarPoint q) { return !(p == q); }
};

/**
 * Element (sigma, x) of the signed-shift subgroup, i.e. the matrix
 * (sigma, 0; x eps, sigma) with sigma = +/-1.  The subgroup has order 2q
 * and multiplies by (s1, x1)(s2, x2) = (s1 s2, x1 s2 + s1 x2).
 */
struct SignedShift {
  Fq sigma, x;

  friend bool operator==(SignedShift a, SignedShift b) {
    return a.sigma == b.sigma && a.x == b.x;
  }
  friend bool operator!=(SignedShift a, SignedShift b) { return !(a == b); }
};

// Coordinates of a signed-shift matrix; throws check_error on any other
// shape.  signed_shift_element is its inverse.
SignedShift signed_shift_coords(const MatCtx& M, const Mat2& m);
Mat2 signed_shift_element(const MatCtx& M, SignedShift s);
SignedShift signed_shift_mul(const FieldCtx& F, SignedShift a, SignedShift b);

/**
 * The variety as a finite left G-set with a commuting free right action of
 * the signed-shift subgroup:
 *
 *   g . (a0, c0, t)      = (x0 a0 + y0 c0,  z0 a0 + w0 c0,  t + D_g(a0, c0))
 *   (a0, c0, t) . (s, x) = (s a0, s c0, t + s x)
 *
 * for g = (x0 + x1 e, y0 + y1 e; z0 + z1 e, w0 + w1 e), where D_g is the
 * quadratic form
 *
 *   D_g(a0, c0) = a0^2 (x0 z1 - z0 x1)
 *               + a0 c0 (x0 w1 + y0 z1 - z0 y1 - w0 x1)
 *               + c0^2 (y0 w1 - w0 y1),
 *
 * read off by pushing a lifted column (a, c) through the matrix product
 * and tracking the invariant a0 c1 - c0 a1.  Points are indexed
 * 0 .. q(q^2-1) - 1; a part is an orbit of the right action, indexed by
 * the sign pair {(a0, c0), (-a0, -c0)} of its base columns.
 */
class XbarSpace {
 public:
  explicit XbarSpace(const GroupTable& G2);

  const GroupTable& group() const { return *G2_; }
  const FieldCtx& field() const { return *F_; }
  std::int64_t size() const { return size_; }

  XbarPoint point(std::int64_t i) const;
  // Throws check_error when (a0, c0) = (0, 0).
  std::int64_t index(XbarPoint P) const;

  // Left action by a group element id.
  std::int64_t act(int g, std::int64_t i) const;
  // Right action by a signed shift; requires sigma = +/-1.
  std::int64_t act_shift(std::int64_t i, SignedShift s) const;

  int part_of(std::int64_t i) const { return part_of_[i]; }
  int part_count() const { return static_cast<int>(part_points_.size()); }
  // Point indices of one part, ascending; every part has exactly 2q points.
  const std::vector<std::int64_t>& part_points(int part) const;

  // Left action induced on parts (verified well defined on construction).
  int act_on_part(int g, int part) const;

  // The part containing (1, 0, 0), the base point of the transfer map.
  int base_part() const { return part_of_[base_index()]; }
  std::int64_t base_index() const;

  // Fixed points of a class representative, per conjugacy class.
  ClassFunction permutation_character(const CycCtx& C) const;
  // Same for the induced action on parts.
  ClassFunction part_permutation_character(const CycCtx& C) const;

  // Group elements sending the base part to itself.
  std::vector<int> part_stabilizer_members() const;

  /**
   * Transfer homomorphism to the signed-shift subgroup.  For s in the part
   * stabilizer H of the base point's part, s . (1,0,0) lies in the free
   * orbit (1,0,0) . A, so there is a unique m(s) with
   * s . (1,0,0) = (1,0,0) . m(s); commuting actions make s -> m(s) a
   * homomorphism.  Returns m at every member of H, indexed by member
   * position, after verifying multiplicativity on a deterministic sample.
   */
  std::vector<SignedShift> transfer(const Subgroup& H) const;

 private:
  const GroupTable* G2_;
  const FieldCtx* F_;
  std::int64_t size_ = 0;
  std::vector<int> part_of_;
  std::vector<std::vector<std::int64_t>> part_points_;
};

/**
 * Action axioms: identity, associativity of the left action, the right
 * action being an anti-action of the signed shifts written as a right
 * action, and commutation of the two.  When exhaustive is set the left
 * axiom runs over every (g, h, point) triple (intended for the smallest
 * q); otherwise g ranges over the generators only.  The right axiom and
 * commutation are always complete.
 */
bool variety_axioms_hold(const XbarSpace& X, bool exhaustive);

/**
 * The fixed-point count of the left action is constant on conjugacy
 * classes.  Exhaustive mode checks every group element; otherwise each
 * class representative is compared against its conjugates by the
 * generators.
 */
bool lefschetz_is_class_function(const XbarSpace& X, bool exhaustive);

/**
 * Double cosets of the upper-triangular subgroup acting on both sides.
 * Returns the partition as {coset index per element, representative ids};
 * representatives are the smallest element id per coset, so the identity
 * labels the coset of the subgroup itself.
 */
struct DoubleCosets {
  std::vector<int> coset_of;
  std::vector<int> reps;
};
DoubleCosets double_cosets(const GroupTable& G, const Subgroup& B);

/**
 * Symbolic proof that the fiber shift is independent of the defining
 * constant.  Over the integer polynomial ring in the twelve letters
 * x0, y0, z0, w0, x1, y1, z1, w1, a0, c0, a1, c1, writing
 * f = a0 c1 - c0 a1 and pushing the column through the matrix product,
 * the identity
 *
 *   f' - f  =  D(a0, c0)  +  (x0 w0 - y0 z0 - 1) f
 *
 * holds exactly, with D the quadratic form used by XbarSpace::act.  Since
 * the base determinant is 1, the shift is D(a0, c0) on the nose: it never
 * mentions the constant k that selects the root coset, and it lies in the
 * prime-invariant subfield.  Returns true; throws check_error if the
 * polynomial identity fails.
 */
bool shift_formula_symbolic_check();

}  // namespace sl2eps

#endif
