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

#include "sl2eps/group.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

namespace sl2eps {

namespace {
constexpr std::uint64_t kFlatKeyspaceLimit = 1ull << 23;
}

ClassSet compute_classes(int n, const std::function<int(int, int)>& mul,
                         const std::function<int(int)>& inv, int identity,
                         const std::vector<int>& gens) {
  ClassSet cs;
  cs.class_of_.assign(n, -1);

  struct RawClass {
    int rep;
    std::int64_t size;
    int element_order;
  };
  std::vector<RawClass> raw;
  std::vector<int> inv_of_gen;
  inv_of_gen.reserve(gens.size());
  for (int g : gens) inv_of_gen.push_back(inv(g));

  std::vector<int> stack;
  for (int x = 0; x < n; ++x) {
    if (cs.class_of_[x] != -1) continue;
    const int cls = static_cast<int>(raw.size());
    std::int64_t size = 0;
    cs.class_of_[x] = cls;
    stack.push_back(x);
    while (!stack.empty()) {
      const int y = stack.back();
      stack.pop_back();
      ++size;
      for (std::size_t k = 0; k < gens.size(); ++k) {
        const int z = mul(mul(gens[k], y), inv_of_gen[k]);
        if (cs.class_of_[z] == -1) {
          cs.class_of_[z] = cls;
          stack.push_back(z);
        }
      }
    }
    int ord = 1;
    int y = x;
    while (y != identity) {
      y = mul(y, x);
      ++ord;
      require(ord <= n, "element order exceeds the group order");
    }
    raw.push_back({x, size, ord});  // x is minimal: positions scanned ascending
  }

  std::vector<int> perm(raw.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(), [&raw](int a, int b) {
    const RawClass &x = raw[a], &y = raw[b];
    if (x.element_order != y.element_order) return x.element_order < y.element_order;
    if (x.size != y.size) return x.size < y.size;
    return x.rep < y.rep;
  });
  std::vector<int> new_of_old(raw.size());
  for (std::size_t i = 0; i < perm.size(); ++i) new_of_old[perm[i]] = static_cast<int>(i);

  cs.classes_.resize(raw.size());
  for (std::size_t i = 0; i < perm.size(); ++i) {
    const RawClass& r = raw[perm[i]];
    cs.classes_[i] = {r.size, r.element_order, r.rep, -1};
  }
  for (int x = 0; x < n; ++x) cs.class_of_[x] = new_of_old[cs.class_of_[x]];
  for (std::size_t i = 0; i < cs.classes_.size(); ++i)
    cs.classes_[i].inverse_class = cs.class_of_[inv(cs.classes_[i].rep)];

  require(cs.classes_[0].element_order == 1 && cs.classes_[0].size == 1,
          "identity class is not first");
  std::int64_t total = 0;
  for (const auto& c : cs.classes_) {
    require(static_cast<std::int64_t>(n) % c.size == 0, "class size does not divide the order");
    total += c.size;
  }
  require(total == n, "classes do not partition the group");
  return cs;
}

GroupTable GroupTable::assemble(const FieldCtx& F, std::vector<Mat2> elements,
                                std::string name) {
  GroupTable G(F);
  G.name_ = std::move(name);
  G.elements_ = std::move(elements);

  std::sort(G.elements_.begin(), G.elements_.end(),
            [&G](const Mat2& x, const Mat2& y) { return G.M_.key(x) < G.M_.key(y); });
  G.keys_.reserve(G.elements_.size());
  for (const Mat2& m : G.elements_) G.keys_.push_back(G.M_.key(m));
  for (std::size_t i = 1; i < G.keys_.size(); ++i)
    require(G.keys_[i - 1] < G.keys_[i], "duplicate element in group enumeration");

  const int q = F.q();
  G.keyspace_ = 1;
  for (int i = 0; i < 8; ++i) G.keyspace_ *= static_cast<std::uint64_t>(q);
  if (G.keyspace_ <= kFlatKeyspaceLimit) {
    G.flat_.assign(G.keyspace_, -1);
    for (std::size_t i = 0; i < G.keys_.size(); ++i)
      G.flat_[G.keys_[i]] = static_cast<std::int32_t>(i);
  }

  G.identity_ = G.id_of(G.M_.identity());

  G.inv_.resize(G.elements_.size());
  for (std::size_t i = 0; i < G.elements_.size(); ++i)
    G.inv_[i] = static_cast<std::int32_t>(G.id_of(G.M_.inv(G.elements_[i])));

  // Transvections over an F_p-basis of the base ring generate SL_2 over a
  // local ring (Gaussian elimination on unit pivots).  The polynomial basis
  // element x^i of F_q has index p^i.
  const REpsCtx& R = G.M_.ring();
  std::vector<REps> basis;
  for (int i = 0; i < F.f(); ++i) {
    const Fq e = Fq(static_cast<int>(ipow(F.p(), i)));
    basis.push_back(R.lift(e));
    basis.push_back(REps{F.zero(), e});
  }
  for (const REps& t : basis) {
    const Mat2 e_upper{R.one(), t, R.zero(), R.one()};
    const Mat2 e_lower{R.one(), R.zero(), t, R.one()};
    const auto iu = G.find(e_upper);
    const auto il = G.find(e_lower);
    if (iu) G.gens_.push_back(*iu);
    if (il) G.gens_.push_back(*il);
  }
  require(!G.gens_.empty(), "no generators found");
  return G;
}

GroupTable GroupTable::build_g2f(const FieldCtx& F, std::int64_t max_elements) {
  const std::int64_t q = F.q();
  const std::int64_t expected = q * q * q * q * (q * q - 1);
  require_config(expected <= max_elements,
                 "group order " + std::to_string(expected) + " exceeds the element budget");

  const REpsCtx R(F);
  const MatCtx M(F);
  std::vector<Mat2> els;
  els.reserve(static_cast<std::size_t>(expected));

  const int n = R.size();
  // a unit: d = a^{-1}(1 + bc).
  for (int ai = 0; ai < n; ++ai) {
    const REps a = R.from_index(ai);
    if (!R.is_unit(a)) continue;
    const REps ainv = R.invert(a);
    for (int bi = 0; bi < n; ++bi) {
      const REps b = R.from_index(bi);
      for (int ci = 0; ci < n; ++ci) {
        const REps c = R.from_index(ci);
        const REps d = R.mul(ainv, R.add(R.one(), R.mul(b, c)));
        els.push_back({a, b, c, d});
      }
    }
  }
  // a not a unit: then b must be one, and c = b^{-1}(ad - 1).
  for (int ai = 0; ai < n; ++ai) {
    const REps a = R.from_index(ai);
    if (R.is_unit(a)) continue;
    for (int bi = 0; bi < n; ++bi) {
      const REps b = R.from_index(bi);
      if (!R.is_unit(b)) continue;
      const REps binv = R.invert(b);
      for (int di = 0; di < n; ++di) {
        const REps d = R.from_index(di);
        const REps c = R.mul(binv, R.sub(R.mul(a, d), R.one()));
        els.push_back({a, b, c, d});
      }
    }
  }
  require(static_cast<std::int64_t>(els.size()) == expected,
          "SL_2(F_q[eps]) enumeration has the wrong size");

  GroupTable G = assemble(F, std::move(els), "SL2(F_" + std::to_string(q) + "[eps])");
  for (std::size_t i = 0; i < G.elements_.size(); ++i)
    require(G.M_.det(G.elements_[i]) == R.one(), "non-unimodular element in the table");
  return G;
}

GroupTable GroupTable::build_gf(const FieldCtx& F, std::int64_t max_elements) {
  const std::int64_t q = F.q();
  const std::int64_t expected = q * (q * q - 1);
  require_config(expected <= max_elements,
                 "group order " + std::to_string(expected) + " exceeds the element budget");

  const REpsCtx R(F);
  std::vector<Mat2> els;
  els.reserve(static_cast<std::size_t>(expected));
  for (int a = 0; a < F.q(); ++a) {
    for (int b = 0; b < F.q(); ++b) {
      for (int c = 0; c < F.q(); ++c) {
        const Fq fa(a), fb(b), fc(c);
        if (fa != F.zero()) {
          const Fq d = F.div(F.add(F.one(), F.mul(fb, fc)), fa);
          els.push_back({R.lift(fa), R.lift(fb), R.lift(fc), R.lift(d)});
        } else if (fb != F.zero()) {
          // a = 0: bc = -1 fixes c; d is free and is this loop's c variable.
          const Fq d = fc;
          const Fq cc = F.neg(F.inv(fb));
          els.push_back({R.lift(fa), R.lift(fb), R.lift(cc), R.lift(d)});
        }
      }
    }
  }
  require(static_cast<std::int64_t>(els.size()) == expected,
          "SL_2(F_q) enumeration has the wrong size");
  return assemble(F, std::move(els), "SL2(F_" + std::to_string(q) + ")");
}

std::optional<int> GroupTable::find(const Mat2& m) const {
  const std::uint64_t k = M_.key(m);
  if (!flat_.empty()) {
    const std::int32_t id = flat_[k];
    if (id < 0) return std::nullopt;
    return static_cast<int>(id);
  }
  const auto it = std::lower_bound(keys_.begin(), keys_.end(), k);
  if (it == keys_.end() || *it != k) return std::nullopt;
  return static_cast<int>(it - keys_.begin());
}

int GroupTable::id_of(const Mat2& m) const {
  const auto id = find(m);
  require(id.has_value(), "matrix is not an element of " + name_);
  return *id;
}

int GroupTable::element_order(int id) const {
  int ord = 1;
  int x = id;
  while (x != identity_) {
    x = mul(x, id);
    ++ord;
    require(ord <= order(), "element order exceeds the group order");
  }
  return ord;
}

std::int64_t GroupTable::exponent() const {
  const ClassSet& cs = classes();
  std::int64_t e = 1;
  for (int i = 0; i < cs.count(); ++i) e = lcm64(e, cs[i].element_order);
  return e;
}

const ClassSet& GroupTable::classes() const {
  if (!classes_) {
    classes_ = std::make_unique<ClassSet>(compute_classes(
        static_cast<int>(order()), [this](int i, int j) { return mul(i, j); },
        [this](int i) { return inv(i); }, identity_, gens_));
  }
  return *classes_;
}

GroupView GroupTable::view() const {
  GroupView v;
  v.name = name_;
  v.order = order();
  v.identity = identity_;
  v.classes = &classes();
  v.mul = [this](int i, int j) { return mul(i, j); };
  v.inv = [this](int i) { return inv(i); };
  return v;
}

Subgroup::Subgroup(const GroupTable& G, std::string name, std::vector<int> member_ids)
    : G_(&G), name_(std::move(name)), members_(std::move(member_ids)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  require(!members_.empty(), "empty subgroup " + name_);
  require(contains(G.identity()), "subgroup " + name_ + " lacks the identity");
  for (int x : members_) {
    require(contains(G.inv(x)), "subgroup " + name_ + " is not inverse-closed");
  }
  // Exhaustive product closure up to a size cutoff; beyond it, every member
  // is multiplied against a deterministic stride sample (quadratic cost gets
  // prohibitive, and large subgroups here come from verified constructions).
  constexpr std::int64_t kFullClosureLimit = 5000;
  const std::int64_t n = order();
  const std::int64_t stride = n <= kFullClosureLimit ? 1 : (n / 256 + 1);
  for (int x : members_)
    for (std::int64_t j = 0; j < n; j += stride)
      require(contains(G.mul(x, members_[static_cast<std::size_t>(j)])),
              "subgroup " + name_ + " is not product-closed");
}

int Subgroup::position_of(int parent_id) const {
  const auto it = std::lower_bound(members_.begin(), members_.end(), parent_id);
  if (it == members_.end() || *it != parent_id) return -1;
  return static_cast<int>(it - members_.begin());
}

int Subgroup::mul(int i, int j) const {
  const int pos = position_of(G_->mul(members_[i], members_[j]));
  require(pos >= 0, "subgroup product escaped " + name_);
  return pos;
}

int Subgroup::inv(int i) const {
  const int pos = position_of(G_->inv(members_[i]));
  require(pos >= 0, "subgroup inverse escaped " + name_);
  return pos;
}

const ClassSet& Subgroup::classes() const {
  if (!classes_) {
    std::vector<int> gens(members_.size());
    std::iota(gens.begin(), gens.end(), 0);
    classes_ = std::make_unique<ClassSet>(compute_classes(
        static_cast<int>(members_.size()), [this](int i, int j) { return mul(i, j); },
        [this](int i) { return inv(i); }, identity_pos(), gens));
  }
  return *classes_;
}

const std::vector<int>& Subgroup::fusion() const {
  if (fusion_.empty()) {
    const ClassSet& hc = classes();
    const ClassSet& gc = G_->classes();
    fusion_.resize(hc.count());
    for (int i = 0; i < hc.count(); ++i)
      fusion_[i] = gc.class_of(members_[hc[i].rep]);
  }
  return fusion_;
}

GroupView Subgroup::view() const {
  GroupView v;
  v.name = name_;
  v.order = order();
  v.identity = identity_pos();
  v.classes = &classes();
  v.mul = [this](int i, int j) { return mul(i, j); };
  v.inv = [this](int i) { return inv(i); };
  return v;
}

const char* to_string(NamedSubgroup s) {
  switch (s) {
    case NamedSubgroup::N: return "N";
    case NamedSubgroup::U2: return "U2";
    case NamedSubgroup::U2_1: return "U2_1";
    case NamedSubgroup::T2: return "T2";
    case NamedSubgroup::B2: return "B2";
    case NamedSubgroup::Z: return "Z";
    case NamedSubgroup::GF_embedded: return "GF";
    case NamedSubgroup::S_F: return "SF";
    case NamedSubgroup::A: return "A";
    case NamedSubgroup::SS: return "SS";
  }
  return "?";
}

std::optional<NamedSubgroup> named_subgroup_from_string(const std::string& s) {
  using NS = NamedSubgroup;
  for (NS v : {NS::N, NS::U2, NS::U2_1, NS::T2, NS::B2, NS::Z, NS::GF_embedded,
               NS::S_F, NS::A, NS::SS})
    if (s == to_string(v)) return v;
  return std::nullopt;
}

Subgroup named_subgroup(const GroupTable& G, NamedSubgroup which) {
  const FieldCtx& F = G.field();
  const Fq zero = F.zero(), one = F.one();
  const Fq minus_one = F.neg(one);

  std::vector<int> members;
  if (which == NamedSubgroup::Z) {
    // Brute-force center: commuting with a generating set is commuting with
    // everything.
    for (int x = 0; x < G.order(); ++x) {
      bool central = true;
      for (int g : G.generators())
        if (G.mul(x, g) != G.mul(g, x)) {
          central = false;
          break;
        }
      if (central) members.push_back(x);
    }
    return Subgroup(G, "Z", std::move(members));
  }

  const auto sign_pair = [&](Fq x, Fq y) {
    return x == y && (x == one || x == minus_one);
  };
  for (int id = 0; id < G.order(); ++id) {
    const Mat2& m = G.element(id);
    bool in = false;
    switch (which) {
      case NamedSubgroup::N:
        in = m.a.r0 == one && m.d.r0 == one && m.b.r0 == zero && m.c.r0 == zero;
        break;
      case NamedSubgroup::U2:
        in = m.a == REps{one, zero} && m.d == REps{one, zero} &&
             m.c == REps{zero, zero};
        break;
      case NamedSubgroup::U2_1:
        in = m.a == REps{one, zero} && m.d == REps{one, zero} &&
             m.c == REps{zero, zero} && m.b.r0 == zero;
        break;
      case NamedSubgroup::T2:
        in = m.b == REps{zero, zero} && m.c == REps{zero, zero};
        break;
      case NamedSubgroup::B2:
        in = m.c == REps{zero, zero};
        break;
      case NamedSubgroup::GF_embedded:
        in = m.a.r1 == zero && m.b.r1 == zero && m.c.r1 == zero && m.d.r1 == zero;
        break;
      case NamedSubgroup::S_F:
        in = m.c.r0 == zero && sign_pair(m.a.r0, m.d.r0);
        break;
      case NamedSubgroup::A:
        in = m.b == REps{zero, zero} && m.a.r1 == zero && m.d.r1 == zero &&
             m.c.r0 == zero && sign_pair(m.a.r0, m.d.r0);
        break;
      case NamedSubgroup::SS:
        in = m.a.r0 == one && m.d.r0 == one && m.b.r0 == zero &&
             m.c == REps{zero, zero};
        break;
      case NamedSubgroup::Z:
        break;
    }
    if (in) members.push_back(id);
  }
  return Subgroup(G, to_string(which), std::move(members));
}

namespace {

// Span of a generating set inside G by left-multiplication closure.
std::vector<int> span_subgroup(const GroupTable& G, std::vector<int> gen_set) {
  std::sort(gen_set.begin(), gen_set.end());
  gen_set.erase(std::unique(gen_set.begin(), gen_set.end()), gen_set.end());
  std::vector<char> seen(G.order(), 0);
  std::deque<int> frontier;
  seen[G.identity()] = 1;
  frontier.push_back(G.identity());
  std::vector<int> members{G.identity()};
  while (!frontier.empty()) {
    const int x = frontier.front();
    frontier.pop_front();
    for (int g : gen_set) {
      const int y = G.mul(x, g);
      if (!seen[y]) {
        seen[y] = 1;
        members.push_back(y);
        frontier.push_back(y);
      }
    }
  }
  return members;
}

}  // namespace

Subgroup derived_subgroup(const Subgroup& H) {
  const GroupTable& G = H.parent();
  std::vector<char> seen(G.order(), 0);
  std::vector<int> comms;
  for (int x : H.members())
    for (int y : H.members()) {
      const int c = G.mul(G.mul(x, y), G.mul(G.inv(x), G.inv(y)));
      if (!seen[c]) {
        seen[c] = 1;
        comms.push_back(c);
      }
    }
  return Subgroup(G, "[" + H.name() + "," + H.name() + "]",
                  span_subgroup(G, std::move(comms)));
}

Subgroup derived_subgroup(const GroupTable& G) {
  // The derived subgroup is the normal closure of the commutators of any
  // generating set: the quotient by that closure has commuting generators.
  std::vector<char> seen(G.order(), 0);
  std::vector<int> comms;
  std::deque<int> frontier;
  const auto add = [&](int c) {
    if (!seen[c]) {
      seen[c] = 1;
      comms.push_back(c);
      frontier.push_back(c);
    }
  };
  for (int x : G.generators())
    for (int y : G.generators())
      add(G.mul(G.mul(x, y), G.mul(G.inv(x), G.inv(y))));
  while (!frontier.empty()) {
    const int c = frontier.front();
    frontier.pop_front();
    for (int g : G.generators()) add(G.conjugate(g, c));
  }
  return Subgroup(G, "[G,G]", span_subgroup(G, std::move(comms)));
}

QuotientGroup::QuotientGroup(const Subgroup& H, const Subgroup& K)
    : G_(&H.parent()), name_(H.name() + "/" + K.name()) {
  for (int k : K.members())
    require(H.contains(k), "denominator is not inside the numerator");
  for (int h : H.members())
    for (int k : K.members())
      require(K.contains(G_->conjugate(h, k)), "denominator is not normal");

  member_ids_ = H.members();
  coset_of_member_.assign(member_ids_.size(), -1);

  // Canonical label of a coset: the smallest parent id it contains.
  std::vector<int> label(member_ids_.size());
  for (std::size_t i = 0; i < member_ids_.size(); ++i) {
    int best = -1;
    for (int k : K.members()) {
      const int y = G_->mul(member_ids_[i], k);
      if (best < 0 || y < best) best = y;
    }
    label[i] = best;
  }
  reps_ = label;
  std::sort(reps_.begin(), reps_.end());
  reps_.erase(std::unique(reps_.begin(), reps_.end()), reps_.end());
  require(static_cast<std::int64_t>(reps_.size()) * K.order() == H.order(),
          "coset count mismatch");
  for (std::size_t i = 0; i < member_ids_.size(); ++i) {
    const auto it = std::lower_bound(reps_.begin(), reps_.end(), label[i]);
    coset_of_member_[i] = static_cast<int>(it - reps_.begin());
  }

  const int n = order();
  mul_.assign(static_cast<std::size_t>(n) * n, -1);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      mul_[static_cast<std::size_t>(i) * n + j] = coset_of(G_->mul(reps_[i], reps_[j]));
  inv_.resize(n);
  for (int i = 0; i < n; ++i) inv_[i] = coset_of(G_->inv(reps_[i]));
  identity_ = coset_of(G_->identity());

  std::vector<int> gens(n);
  std::iota(gens.begin(), gens.end(), 0);
  classes_ = std::make_unique<ClassSet>(compute_classes(
      n, [this](int i, int j) { return mul(i, j); },
      [this](int i) { return inv(i); }, identity_, gens));
}

int QuotientGroup::coset_of(int parent_id) const {
  const auto it = std::lower_bound(member_ids_.begin(), member_ids_.end(), parent_id);
  require(it != member_ids_.end() && *it == parent_id,
          "element outside the numerator subgroup");
  return coset_of_member_[it - member_ids_.begin()];
}

GroupView QuotientGroup::view() const {
  GroupView v;
  v.name = name_;
  v.order = order();
  v.identity = identity_;
  v.classes = classes_.get();
  v.mul = [this](int i, int j) { return mul(i, j); };
  v.inv = [this](int i) { return inv(i); };
  return v;
}

Mat2 n_element(const MatCtx& M, NCoords n) {
  const FieldCtx& F = M.field();
  return {{F.one(), n.a}, {F.zero(), n.b}, {F.zero(), n.c}, {F.one(), F.neg(n.a)}};
}

NCoords n_coords(const MatCtx& M, const Mat2& m) {
  const FieldCtx& F = M.field();
  require(m.a.r0 == F.one() && m.d.r0 == F.one() && m.b.r0 == F.zero() &&
              m.c.r0 == F.zero() && m.d.r1 == F.neg(m.a.r1),
          "matrix is not in the reduction kernel");
  return {m.a.r1, m.b.r1, m.c.r1};
}

SemidirectReport check_semidirect(const GroupTable& G2) {
  const MatCtx& M = G2.mats();
  const FieldCtx& F = G2.field();
  SemidirectReport rep;
  rep.group_order = G2.order();

  const Subgroup N = named_subgroup(G2, NamedSubgroup::N);
  const Subgroup GF = named_subgroup(G2, NamedSubgroup::GF_embedded);
  rep.n_order = N.order();
  rep.gf_order = GF.order();

  rep.n_normal = true;
  for (int g : G2.generators())
    for (int n : N.members())
      if (!N.contains(G2.conjugate(g, n))) rep.n_normal = false;

  rep.intersection_trivial = true;
  for (int n : N.members())
    if (GF.contains(n) && n != G2.identity()) rep.intersection_trivial = false;

  // Every g factors as lift(reduce(g)) * n with n in the kernel.
  rep.factorization_unique = true;
  for (int g = 0; g < G2.order(); ++g) {
    const Mat2 lifted = M.lift(M.reduce(G2.element(g)));
    const auto lid = G2.find(lifted);
    if (!lid || !GF.contains(*lid)) {
      rep.factorization_unique = false;
      break;
    }
    const int n = G2.mul(G2.inv(*lid), g);
    if (!N.contains(n)) {
      rep.factorization_unique = false;
      break;
    }
  }

  // The kernel is (F_q^+)^3 in the coordinates of n_element.
  rep.n_additive_cube = N.order() == static_cast<std::int64_t>(F.q()) * F.q() * F.q();
  for (int i : N.members()) {
    for (int j : N.members()) {
      const NCoords x = n_coords(M, G2.element(i));
      const NCoords y = n_coords(M, G2.element(j));
      const NCoords s{F.add(x.a, y.a), F.add(x.b, y.b), F.add(x.c, y.c)};
      if (G2.element(G2.mul(i, j)) != n_element(M, s)) {
        rep.n_additive_cube = false;
        break;
      }
    }
    if (!rep.n_additive_cube) break;
  }
  return rep;
}

}  // namespace sl2eps
