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

#ifndef SL2EPS_GROUP_HPP
#define SL2EPS_GROUP_HPP

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "sl2eps/mat2.hpp"

namespace sl2eps {

struct ClassDesc {
  std::int64_t size = 0;
  int element_order = 0;
  int rep = 0;            // smallest position in the class
  int inverse_class = 0;  // class containing rep^{-1}
};

/**
 * Conjugacy class partition of a finite group whose elements are positions
 * 0..n-1.  Classes are sorted by (element order, size, representative), so
 * the identity class is always class 0.
 */
class ClassSet {
 public:
  int count() const { return static_cast<int>(classes_.size()); }
  const ClassDesc& operator[](int i) const { return classes_[i]; }
  int class_of(int pos) const { return class_of_[pos]; }
  std::int64_t group_order() const { return static_cast<std::int64_t>(class_of_.size()); }
  int identity_pos() const { return classes_[0].rep; }
  std::int64_t centralizer_order(int i) const { return group_order() / classes_[i].size; }

 private:
  friend ClassSet compute_classes(int n, const std::function<int(int, int)>& mul,
                                  const std::function<int(int)>& inv, int identity,
                                  const std::vector<int>& gens);
  std::vector<ClassDesc> classes_;
  std::vector<std::int32_t> class_of_;
};

// Conjugacy classes by orbit closure under conjugation by the given
// generators (which must generate the group).
ClassSet compute_classes(int n, const std::function<int(int, int)>& mul,
                         const std::function<int(int)>& inv, int identity,
                         const std::vector<int>& gens);

/**
 * Uniform handle on a finite group for algorithms that only need
 * multiplication, inversion and the class partition (character table
 * machinery).  Positions index elements of the underlying structure.
 */
struct GroupView {
  std::string name;
  std::int64_t order = 0;
  int identity = 0;
  const ClassSet* classes = nullptr;
  std::function<int(int, int)> mul;
  std::function<int(int)> inv;
};

/**
 * Exhaustive element table of SL_2 over F_q[eps] (or over F_q), with O(1)
 * product lookup through packed coordinate keys.  Elements are sorted by
 * key; the element id is the position in that order.
 */
class GroupTable {
 public:
  static constexpr std::int64_t kDefaultMaxElements = 2'000'000;

  // SL_2(F_q[eps]), order q^4 (q^2 - 1).
  static GroupTable build_g2f(const FieldCtx& F,
                              std::int64_t max_elements = kDefaultMaxElements);
  // SL_2(F_q) embedded with zero eps parts, order q (q^2 - 1).
  static GroupTable build_gf(const FieldCtx& F,
                             std::int64_t max_elements = kDefaultMaxElements);

  const FieldCtx& field() const { return *F_; }
  const MatCtx& mats() const { return M_; }
  const std::string& name() const { return name_; }

  std::int64_t order() const { return static_cast<std::int64_t>(elements_.size()); }
  const Mat2& element(int id) const { return elements_[id]; }
  std::uint64_t key(int id) const { return keys_[id]; }

  // Id of a matrix, or nullopt if it is not in the group.
  std::optional<int> find(const Mat2& m) const;
  // Same, but throws check_error when absent.
  int id_of(const Mat2& m) const;

  int identity() const { return identity_; }
  int mul(int i, int j) const { return id_of(M_.mul(elements_[i], elements_[j])); }
  int inv(int i) const { return inv_[i]; }
  int conjugate(int g, int x) const { return mul(mul(g, x), inv(g)); }
  int element_order(int id) const;
  std::int64_t exponent() const;

  // Elementary transvection generators E(t), F(t), t in an F_p-basis of the
  // base ring.
  const std::vector<int>& generators() const { return gens_; }

  const ClassSet& classes() const;

  GroupView view() const;

 private:
  explicit GroupTable(const FieldCtx& F) : F_(&F), M_(F) {}

  static GroupTable assemble(const FieldCtx& F, std::vector<Mat2> elements,
                             std::string name);

  const FieldCtx* F_ = nullptr;
  MatCtx M_;
  std::string name_;
  std::vector<Mat2> elements_;
  std::vector<std::uint64_t> keys_;
  // Flat key -> id map when the keyspace is small, else empty (binary search).
  std::vector<std::int32_t> flat_;
  std::uint64_t keyspace_ = 0;
  std::vector<std::int32_t> inv_;
  std::vector<int> gens_;
  int identity_ = -1;
  mutable std::unique_ptr<ClassSet> classes_;
};

/**
 * Subgroup handle: sorted parent ids plus its own conjugacy structure.
 * Verified closed under product and inverse at construction.
 */
class Subgroup {
 public:
  Subgroup(const GroupTable& G, std::string name, std::vector<int> member_ids);

  const GroupTable& parent() const { return *G_; }
  const std::string& name() const { return name_; }
  std::int64_t order() const { return static_cast<std::int64_t>(members_.size()); }

  int member(int pos) const { return members_[pos]; }
  const std::vector<int>& members() const { return members_; }
  // Position of a parent id, or -1.
  int position_of(int parent_id) const;
  bool contains(int parent_id) const { return position_of(parent_id) >= 0; }

  int identity_pos() const { return position_of(G_->identity()); }
  int mul(int i, int j) const;
  int inv(int i) const;

  // H-conjugacy classes (positions are subgroup positions).
  const ClassSet& classes() const;
  // H-class index -> parent class index.
  const std::vector<int>& fusion() const;

  GroupView view() const;

 private:
  const GroupTable* G_;
  std::string name_;
  std::vector<int> members_;
  mutable std::unique_ptr<ClassSet> classes_;
  mutable std::vector<int> fusion_;
};

enum class NamedSubgroup {
  N,            // kernel of reduction: I + eps * (trace-zero matrix)
  U2,           // upper unitriangular over the ring
  U2_1,         // upper unitriangular with eps-divisible corner
  T2,           // diagonal torus over the ring
  B2,           // upper triangular Borel over the ring
  Z,            // center (computed, not assumed)
  GF_embedded,  // matrices with all eps parts zero
  S_F,          // +-1 diagonal mod eps, lower-left divisible by eps
  A,            // (s 0; x eps s), s = +-1
  SS,           // (1 + x eps, y eps; 0, 1 - x eps)
};

const char* to_string(NamedSubgroup s);
std::optional<NamedSubgroup> named_subgroup_from_string(const std::string& s);

Subgroup named_subgroup(const GroupTable& G, NamedSubgroup which);

// Commutator subgroup of H inside its parent.
Subgroup derived_subgroup(const Subgroup& H);
// Commutator subgroup of the whole group.
Subgroup derived_subgroup(const GroupTable& G);

/** Cosets H/K for K normal in H, as a group in its own right. */
class QuotientGroup {
 public:
  QuotientGroup(const Subgroup& H, const Subgroup& K);

  int order() const { return static_cast<int>(reps_.size()); }
  // Coset of an H-member (parent id).
  int coset_of(int parent_id) const;
  // Canonical representative (smallest parent id in the coset).
  int rep(int coset) const { return reps_[coset]; }
  int mul(int i, int j) const { return mul_[static_cast<std::size_t>(i) * reps_.size() + j]; }
  int inv(int i) const { return inv_[i]; }
  int identity() const { return identity_; }
  const ClassSet& classes() const { return *classes_; }
  GroupView view() const;
  const std::string& name() const { return name_; }

 private:
  const GroupTable* G_;
  std::string name_;
  std::vector<int> reps_;
  std::vector<int> coset_of_member_;  // parallel to sorted member ids
  std::vector<int> member_ids_;       // sorted H members
  std::vector<int> mul_;
  std::vector<int> inv_;
  int identity_ = -1;
  std::unique_ptr<ClassSet> classes_;
};

struct SemidirectReport {
  std::int64_t group_order = 0;
  std::int64_t gf_order = 0;
  std::int64_t n_order = 0;
  bool n_normal = false;
  bool intersection_trivial = false;
  bool factorization_unique = false;
  bool n_additive_cube = false;
  bool ok() const {
    return n_normal && intersection_trivial && factorization_unique &&
           n_additive_cube && group_order == gf_order * n_order;
  }
};

// Verifies that the table is the semidirect product of its eps-free part
// with the reduction kernel, and that the kernel is (F_q^+)^3.
SemidirectReport check_semidirect(const GroupTable& G2);

// Coordinates of a reduction-kernel element (1 + a eps, b eps; c eps, 1 - a eps).
struct NCoords {
  Fq a, b, c;
};
Mat2 n_element(const MatCtx& M, NCoords n);
NCoords n_coords(const MatCtx& M, const Mat2& m);

}  // namespace sl2eps

#endif
