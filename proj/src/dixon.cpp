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

#include "sl2eps/chartab.hpp"

#include <algorithm>

namespace sl2eps {

namespace {

// Dense matrix over F_ell, row major.  ell is small (< 2^20), so products
// fit comfortably in int64.
struct ModMat {
  int rows = 0, cols = 0;
  std::int64_t ell = 0;
  std::vector<std::int64_t> a;

  ModMat() = default;
  ModMat(int r, int c, std::int64_t l) : rows(r), cols(c), ell(l), a(static_cast<std::size_t>(r) * c, 0) {}

  std::int64_t& at(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
  std::int64_t at(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }
};

std::int64_t mod_pow(std::int64_t b, std::int64_t e, std::int64_t ell) {
  std::int64_t r = 1;
  b %= ell;
  while (e > 0) {
    if (e & 1) r = r * b % ell;
    b = b * b % ell;
    e >>= 1;
  }
  return r;
}

std::int64_t mod_inv(std::int64_t x, std::int64_t ell) {
  require(x % ell != 0, "inverting zero mod ell");
  return mod_pow((x % ell + ell) % ell, ell - 2, ell);
}

ModMat mat_mul(const ModMat& x, const ModMat& y) {
  require(x.cols == y.rows && x.ell == y.ell, "matrix shape mismatch");
  ModMat r(x.rows, y.cols, x.ell);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      const std::int64_t v = x.at(i, k);
      if (v == 0) continue;
      for (int j = 0; j < y.cols; ++j)
        r.at(i, j) = (r.at(i, j) + v * y.at(k, j)) % x.ell;
    }
  return r;
}

// Column-reduced echelon basis of the column space: pivot rows strictly
// increasing, pivot entries 1, pivot rows zero elsewhere.  Canonical for
// the subspace, which keeps the whole algorithm deterministic.
ModMat column_echelon(ModMat b, std::vector<int>* pivot_rows_out = nullptr) {
  const std::int64_t ell = b.ell;
  int lead_col = 0;
  std::vector<int> pivots;
  for (int row = 0; row < b.rows && lead_col < b.cols; ++row) {
    int src = -1;
    for (int j = lead_col; j < b.cols; ++j)
      if (b.at(row, j) != 0) {
        src = j;
        break;
      }
    if (src < 0) continue;
    for (int i = 0; i < b.rows; ++i) std::swap(b.at(i, src), b.at(i, lead_col));
    const std::int64_t inv = mod_inv(b.at(row, lead_col), ell);
    for (int i = 0; i < b.rows; ++i) b.at(i, lead_col) = b.at(i, lead_col) * inv % ell;
    for (int j = 0; j < b.cols; ++j) {
      if (j == lead_col) continue;
      const std::int64_t f = b.at(row, j);
      if (f == 0) continue;
      for (int i = 0; i < b.rows; ++i)
        b.at(i, j) = ((b.at(i, j) - f * b.at(i, lead_col)) % ell + ell) % ell;
    }
    pivots.push_back(row);
    ++lead_col;
  }
  ModMat out(b.rows, lead_col, ell);
  for (int i = 0; i < b.rows; ++i)
    for (int j = 0; j < lead_col; ++j) out.at(i, j) = b.at(i, j);
  if (pivot_rows_out) *pivot_rows_out = pivots;
  return out;
}

// Characteristic polynomial by the Faddeev-LeVerrier recurrence; requires
// ell > dim.  Returns monic coefficients c with p(x) = x^d + c[1] x^{d-1} + ...
std::vector<std::int64_t> char_poly(const ModMat& A) {
  const int d = A.rows;
  const std::int64_t ell = A.ell;
  require(ell > d, "modulus too small for the characteristic polynomial");
  std::vector<std::int64_t> c(d + 1, 0);
  c[0] = 1;
  ModMat M(d, d, ell);
  for (int i = 0; i < d; ++i) M.at(i, i) = 1;
  for (int k = 1; k <= d; ++k) {
    M = mat_mul(A, M);
    std::int64_t tr = 0;
    for (int i = 0; i < d; ++i) tr = (tr + M.at(i, i)) % ell;
    const std::int64_t ck = (ell - tr % ell) % ell * mod_inv(k, ell) % ell;
    c[k] = ck;
    for (int i = 0; i < d; ++i) M.at(i, i) = (M.at(i, i) + ck) % ell;
  }
  return c;
}

// Null space basis of A in column echelon form.
ModMat null_space(const ModMat& A) {
  const std::int64_t ell = A.ell;
  const int n = A.rows, m = A.cols;
  // Row reduce a working copy.
  ModMat w = A;
  std::vector<int> pivot_col_of_row;
  int r = 0;
  for (int col = 0; col < m && r < n; ++col) {
    int piv = -1;
    for (int i = r; i < n; ++i)
      if (w.at(i, col) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    for (int j = 0; j < m; ++j) std::swap(w.a[static_cast<std::size_t>(piv) * m + j], w.a[static_cast<std::size_t>(r) * m + j]);
    const std::int64_t inv = mod_inv(w.at(r, col), ell);
    for (int j = 0; j < m; ++j) w.at(r, j) = w.at(r, j) * inv % ell;
    for (int i = 0; i < n; ++i) {
      if (i == r) continue;
      const std::int64_t f = w.at(i, col);
      if (f == 0) continue;
      for (int j = 0; j < m; ++j)
        w.at(i, j) = ((w.at(i, j) - f * w.at(r, j)) % ell + ell) % ell;
    }
    pivot_col_of_row.push_back(col);
    ++r;
  }
  std::vector<char> is_pivot(m, 0);
  for (int col : pivot_col_of_row) is_pivot[col] = 1;
  std::vector<int> free_cols;
  for (int j = 0; j < m; ++j)
    if (!is_pivot[j]) free_cols.push_back(j);

  ModMat basis(m, static_cast<int>(free_cols.size()), ell);
  for (std::size_t kf = 0; kf < free_cols.size(); ++kf) {
    const int fc = free_cols[kf];
    basis.at(fc, static_cast<int>(kf)) = 1;
    for (int i = 0; i < r; ++i) {
      const std::int64_t v = w.at(i, fc);
      if (v != 0) basis.at(pivot_col_of_row[i], static_cast<int>(kf)) = (ell - v) % ell;
    }
  }
  return basis;
}

std::int64_t primitive_root(std::int64_t ell) {
  std::vector<std::int64_t> prime_factors;
  std::int64_t n = ell - 1;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) {
      prime_factors.push_back(d);
      while (n % d == 0) n /= d;
    }
  if (n > 1) prime_factors.push_back(n);
  for (std::int64_t g = 2; g < ell; ++g) {
    bool ok = true;
    for (std::int64_t r : prime_factors)
      if (mod_pow(g, (ell - 1) / r, ell) == 1) {
        ok = false;
        break;
      }
    if (ok) return g;
  }
  throw check_error("no primitive root found");
}

}  // namespace

std::map<std::int64_t, std::int64_t> CharacterTable::degree_census() const {
  std::map<std::int64_t, std::int64_t> census;
  for (const ClassFunction& f : irreducibles)
    ++census[static_cast<std::int64_t>(f.degree())];
  return census;
}

void verify_irreducible_table(const CharacterTable& t) {
  const ClassSet& dom = *t.domain;
  require(t.count() == dom.count(), "row count differs from class count");
  require(!t.irreducibles.empty(), "empty character table");
  const CycCtx& C = *t.irreducibles[0].values[0].ctx();
  BigInt degree_sq_sum = 0;
  for (const ClassFunction& f : t.irreducibles) degree_sq_sum += f.degree() * f.degree();
  require(degree_sq_sum == BigInt(dom.group_order()),
          "squared degrees do not sum to the group order");
  std::vector<char> row_ok(t.count(), 0);
  parallel_for(t.count(), [&](std::int64_t i) {
    bool ok = true;
    for (int j = static_cast<int>(i); j < t.count(); ++j) {
      const CycNum ip =
          inner_product(t.irreducibles[static_cast<std::size_t>(i)], t.irreducibles[j]);
      const CycNum expected = i == j ? C.one() : C.zero();
      if (ip != expected) ok = false;
    }
    row_ok[static_cast<std::size_t>(i)] = ok;
  });
  for (int i = 0; i < t.count(); ++i)
    require(row_ok[i], "orthonormality failure in " + t.group_name);
}

CharacterTable dixon_table(const GroupView& V, const CycCtx& C,
                           std::int64_t max_order) {
  const ClassSet& cls = *V.classes;
  const int k = cls.count();
  const std::int64_t n = V.order;
  require_config(n <= max_order, "group order " + std::to_string(n) +
                                     " exceeds the eigenvector-method budget");

  std::int64_t exponent = 1;
  for (int i = 0; i < k; ++i) exponent = lcm64(exponent, cls[i].element_order);
  const int m = C.conductor();
  require_config(m % exponent == 0,
                 "cyclotomic conductor does not contain the group exponent");

  // Smallest usable prime: splits completely in Q(zeta_m), larger than
  // 2 sqrt(n) so degrees are determined, prime to n, and > k for the
  // characteristic polynomial recurrence.
  std::int64_t ell = m + 1;
  while (!(is_prime(ell) && (ell - 1) % m == 0 && ell * ell > 4 * n && n % ell != 0 &&
           ell > k))
    ell += m;

  // Class structure.
  std::vector<int> reps(k), ords(k), invc(k);
  std::vector<std::int64_t> sizes(k);
  for (int i = 0; i < k; ++i) {
    reps[i] = cls[i].rep;
    ords[i] = cls[i].element_order;
    invc[i] = cls[i].inverse_class;
    sizes[i] = cls[i].size;
  }

  // power_class[j][s] = class of rep_j^s.
  std::vector<std::vector<int>> power_class(k);
  for (int j = 0; j < k; ++j) {
    power_class[j].resize(ords[j]);
    int x = V.identity;
    for (int s = 0; s < ords[j]; ++s) {
      power_class[j][s] = cls.class_of(x);
      x = V.mul(x, reps[j]);
    }
  }

  // Class-sum matrices: M_i[j][t] = #{x in C_i : x^{-1} rep_t in C_j}.
  std::vector<ModMat> M(k, ModMat(k, k, ell));
  for (int pos = 0; pos < n; ++pos) {
    const int i = cls.class_of(pos);
    const int xinv = V.inv(pos);
    for (int t = 0; t < k; ++t) {
      const int j = cls.class_of(V.mul(xinv, reps[t]));
      M[i].at(j, t) += 1;
    }
  }
  for (auto& mat : M)
    for (auto& v : mat.a) v %= ell;

  // Split the common eigenspaces.  Bases are kept in canonical column
  // echelon form; every step is deterministic.
  std::vector<ModMat> spaces;
  {
    ModMat full(k, k, ell);
    for (int i = 0; i < k; ++i) full.at(i, i) = 1;
    spaces.push_back(std::move(full));
  }
  for (int i = 1; i < k; ++i) {
    std::vector<ModMat> next;
    for (ModMat& W : spaces) {
      const int d = W.cols;
      if (d == 1) {
        next.push_back(std::move(W));
        continue;
      }
      std::vector<int> pivots;
      ModMat B = column_echelon(W, &pivots);
      // Restriction R of M_i to the invariant subspace: rows of M_i B at
      // the pivot positions.
      const ModMat MB = mat_mul(M[i], B);
      ModMat R(d, d, ell);
      for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c) R.at(r, c) = MB.at(pivots[r], c);

      const std::vector<std::int64_t> poly = char_poly(R);
      std::vector<std::int64_t> roots;
      for (std::int64_t lam = 0; lam < ell; ++lam) {
        std::int64_t acc = 0;
        for (int t = 0; t <= d; ++t) acc = (acc * lam + poly[t]) % ell;
        if (acc == 0) roots.push_back(lam);
      }
      for (std::int64_t lam : roots) {
        ModMat shifted = R;
        for (int r = 0; r < d; ++r)
          shifted.at(r, r) = ((shifted.at(r, r) - lam) % ell + ell) % ell;
        const ModMat kernel = null_space(shifted);
        require(kernel.cols > 0, "eigenvalue with empty eigenspace");
        next.push_back(column_echelon(mat_mul(B, kernel)));
      }
      // The class-sum matrices are simultaneously diagonalizable, so the
      // eigenspaces exhaust W.
      int total = 0;
      for (std::size_t s = next.size() - roots.size(); s < next.size(); ++s)
        total += next[s].cols;
      require(total == d, "eigenspace dimensions do not add up");
    }
    spaces = std::move(next);
  }
  require(static_cast<int>(spaces.size()) == k, "failed to separate all eigenvectors");
  for (const ModMat& W : spaces) require(W.cols == 1, "unsplit eigenspace remains");

  // Orbit sums omega(chi, C_j) = |C_j| chi(g_j) / chi(1), one column each.
  // Normalize so the identity-class entry is 1.
  std::vector<std::vector<std::int64_t>> omega(k, std::vector<std::int64_t>(k));
  for (int s = 0; s < k; ++s) {
    std::vector<std::int64_t> w(k);
    for (int j = 0; j < k; ++j) w[j] = spaces[s].at(j, 0);
    require(w[0] != 0, "eigenvector vanishes on the identity class");
    const std::int64_t scale = mod_inv(w[0], ell);
    for (int j = 0; j < k; ++j) omega[s][j] = w[j] * scale % ell;
  }

  const std::int64_t nsqrt = isqrt(n);
  const std::int64_t z = mod_pow(primitive_root(ell), (ell - 1) / m, ell);

  CharacterTable table;
  table.domain = &cls;
  table.group_name = V.name;
  table.method = "dixon";

  for (int s = 0; s < k; ++s) {
    // 1/d^2 = (1/n) sum_j omega_j omega_{j*} / h_j, from column orthogonality.
    std::int64_t acc = 0;
    for (int j = 0; j < k; ++j)
      acc = (acc + omega[s][j] * omega[s][invc[j]] % ell * mod_inv(sizes[j] % ell, ell)) % ell;
    require(acc != 0, "degree denominator vanished");
    const std::int64_t d2 = n % ell * mod_inv(acc, ell) % ell;
    std::int64_t degree = -1;
    for (std::int64_t d = 1; d <= nsqrt; ++d)
      if (d * d % ell == d2) {
        degree = d;
        break;
      }
    require(degree > 0, "no integer degree matches the eigenvector");

    // chi(g_j) mod ell, then exact values by Fourier inversion over the
    // cyclic group generated by each representative.
    std::vector<std::int64_t> chi_mod(k);
    for (int j = 0; j < k; ++j)
      chi_mod[j] = degree % ell * omega[s][j] % ell * mod_inv(sizes[j] % ell, ell) % ell;

    ClassFunction f;
    f.domain = &cls;
    f.label = "X" + std::to_string(s + 1);
    f.values.reserve(k);
    for (int j = 0; j < k; ++j) {
      const int o = ords[j];
      const std::int64_t zo = mod_pow(z, m / o, ell);
      const std::int64_t o_inv = mod_inv(o, ell);
      CycNum val = C.zero();
      BigInt mult_sum = 0;
      for (int t = 0; t < o; ++t) {
        std::int64_t ct = 0;
        for (int sx = 0; sx < o; ++sx) {
          const std::int64_t zterm =
              mod_pow(zo, static_cast<std::int64_t>(o - 1) * sx % o * t % o, ell);
          ct = (ct + chi_mod[power_class[j][sx]] * zterm) % ell;
        }
        ct = ct * o_inv % ell;
        // ct is the true multiplicity of the eigenvalue zeta_o^t, a
        // nonnegative integer at most the degree < ell.
        mult_sum += ct;
        if (ct != 0)
          val += C.from_rational(Rat(ct)) * C.root(static_cast<std::int64_t>(m / o) * t);
      }
      require(mult_sum == degree, "eigenvalue multiplicities do not sum to the degree");
      f.values.push_back(std::move(val));
    }
    require(f.degree() == degree, "lifted degree mismatch");
    table.irreducibles.push_back(std::move(f));
  }

  std::sort(table.irreducibles.begin(), table.irreducibles.end(), cf_canonical_less);
  verify_irreducible_table(table);
  return table;
}

std::vector<BigInt> decompose(const ClassFunction& f, const CharacterTable& t) {
  require(f.domain == t.domain, "decomposing against a table on another domain");
  require(!t.irreducibles.empty(), "empty character table");
  const CycCtx& C = *t.irreducibles[0].values[0].ctx();
  std::vector<BigInt> mult;
  mult.reserve(t.count());
  ClassFunction recon = constant_class_function(*t.domain, C, Rat(0), "0");
  for (const ClassFunction& chi : t.irreducibles) {
    const CycNum m = inner_product(f, chi);
    const BigInt mi = m.as_rational_integer();
    require(mi >= 0, "negative multiplicity: not a character");
    mult.push_back(mi);
    if (mi != 0) recon = cf_add(recon, cf_scale(Rat(mi), chi));
  }
  recon.label = f.label;
  require(recon.values == f.values, "decomposition does not reconstruct the function");
  return mult;
}

}  // namespace sl2eps
