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

#include "sl2eps/cyclo.hpp"

#include <algorithm>
#include <sstream>

#include <nlohmann/json.hpp>

namespace sl2eps {

namespace {

// Dense polynomial with exact rational coefficients, constant term first.
using RPoly = std::vector<Rat>;

void trim(RPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

RPoly rpoly_mul(const RPoly& a, const RPoly& b) {
  if (a.empty() || b.empty()) return {};
  RPoly r(a.size() + b.size() - 1, Rat(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

// Exact division; throws if the remainder is nonzero.
RPoly rpoly_div_exact(RPoly a, const RPoly& d) {
  trim(a);
  RPoly q(a.size() >= d.size() ? a.size() - d.size() + 1 : 0, Rat(0));
  while (a.size() >= d.size()) {
    const Rat c = a.back() / d.back();
    const std::size_t shift = a.size() - d.size();
    q[shift] = c;
    for (std::size_t i = 0; i < d.size(); ++i) a[shift + i] -= c * d[i];
    trim(a);
  }
  require(a.empty(), "inexact polynomial division");
  return q;
}

RPoly cyclotomic(int m) {
  // x^m - 1 divided by the product of Phi_d over proper divisors d of m.
  RPoly num(m + 1, Rat(0));
  num[0] = Rat(-1);
  num[m] = Rat(1);
  RPoly den{Rat(1)};
  for (int d = 1; d < m; ++d)
    if (m % d == 0) den = rpoly_mul(den, cyclotomic(d));
  return rpoly_div_exact(num, den);
}

std::string rat_to_string(const Rat& r) {
  std::ostringstream os;
  os << boost::multiprecision::numerator(r) << "/"
     << boost::multiprecision::denominator(r);
  return os.str();
}

Rat rat_from_string(const std::string& s) {
  const auto slash = s.find('/');
  if (slash == std::string::npos) return Rat(BigInt(s));
  const BigInt num(s.substr(0, slash));
  const BigInt den(s.substr(slash + 1));
  require_config(den != 0, "rational with zero denominator");
  return Rat(num) / Rat(den);
}

}  // namespace

CycCtx CycCtx::create(int m) {
  require_config(m >= 1 && m <= 4096, "cyclotomic conductor must be in [1, 4096]");
  CycCtx C;
  C.m_ = m;
  C.phi_ = euler_phi(m);

  const RPoly phim = cyclotomic(m);
  require(static_cast<int>(phim.size()) == C.phi_ + 1, "Phi_m has wrong degree");
  C.phim_.reserve(phim.size());
  for (const Rat& c : phim) {
    require(boost::multiprecision::denominator(c) == 1, "Phi_m not integral");
    C.phim_.push_back(boost::multiprecision::numerator(c));
  }
  require(C.phim_.back() == 1, "Phi_m not monic");

  const int phi = C.phi_;
  const int table = std::max(m, 2 * phi - 1);
  C.power_.assign(table, std::vector<Rat>(phi, Rat(0)));
  C.power_[0][0] = Rat(1);
  for (int t = 1; t < table; ++t) {
    // zeta^t = zeta * zeta^{t-1}, reduced by the monic Phi_m.
    std::vector<Rat> v(phi + 1, Rat(0));
    for (int i = 0; i < phi; ++i) v[i + 1] = C.power_[t - 1][i];
    const Rat lead = v[phi];
    if (lead != 0)
      for (int i = 0; i <= phi; ++i) v[i] -= lead * Rat(C.phim_[i]);
    require(v[phi] == 0, "power reduction failed");
    v.pop_back();
    C.power_[t] = std::move(v);
  }
  return C;
}

CycNum CycCtx::zero() const { return CycNum(this, std::vector<Rat>(phi_, Rat(0))); }

CycNum CycCtx::one() const { return from_rational(Rat(1)); }

CycNum CycCtx::from_rational(const Rat& r) const {
  std::vector<Rat> c(phi_, Rat(0));
  c[0] = r;
  return CycNum(this, std::move(c));
}

CycNum CycCtx::root(std::int64_t t) const {
  std::int64_t r = t % m_;
  if (r < 0) r += m_;
  return CycNum(this, power_[static_cast<std::size_t>(r)]);
}

CycNum CycCtx::galois(const CycNum& a, std::int64_t k) const {
  require(a.ctx() == this, "CycNum from a different context");
  std::int64_t r = k % m_;
  if (r < 0) r += m_;
  require(gcd64(r, m_) == 1, "Galois exponent not coprime to the conductor");
  std::vector<Rat> out(phi_, Rat(0));
  for (int t = 0; t < phi_; ++t) {
    if (a.coeffs()[t] == 0) continue;
    const auto& img = power_[static_cast<std::size_t>((t * r) % m_)];
    for (int i = 0; i < phi_; ++i) out[i] += a.coeffs()[t] * img[i];
  }
  return CycNum(this, std::move(out));
}

std::string CycCtx::to_json(const CycNum& a) const {
  require(a.ctx() == this, "CycNum from a different context");
  nlohmann::ordered_json j;
  j["m"] = m_;
  auto& arr = j["coeffs"] = nlohmann::ordered_json::array();
  for (const Rat& c : a.coeffs()) arr.push_back(rat_to_string(c));
  return j.dump();
}

CycNum CycCtx::from_json(const std::string& text) const {
  const auto j = nlohmann::json::parse(text);
  require_config(j.contains("m") && j.contains("coeffs"), "missing m/coeffs");
  require_config(j["m"].get<int>() == m_, "conductor mismatch");
  const auto& arr = j["coeffs"];
  require_config(static_cast<int>(arr.size()) == phi_, "coefficient count mismatch");
  std::vector<Rat> c;
  c.reserve(phi_);
  for (const auto& e : arr) c.push_back(rat_from_string(e.get<std::string>()));
  return CycNum(this, std::move(c));
}

bool CycNum::is_zero() const {
  require(ctx_ != nullptr, "uninitialized CycNum");
  return std::all_of(c_.begin(), c_.end(), [](const Rat& r) { return r == 0; });
}

bool CycNum::is_rational() const {
  require(ctx_ != nullptr, "uninitialized CycNum");
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

Rat CycNum::as_rational() const {
  require(is_rational(), "cyclotomic number is not rational");
  return c_[0];
}

BigInt CycNum::as_rational_integer() const {
  const Rat r = as_rational();
  require(boost::multiprecision::denominator(r) == 1,
          "cyclotomic number is rational but not an integer");
  return boost::multiprecision::numerator(r);
}

CycNum CycNum::operator-() const {
  require(ctx_ != nullptr, "uninitialized CycNum");
  std::vector<Rat> out(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) out[i] = -c_[i];
  return CycNum(ctx_, std::move(out));
}

CycNum operator+(const CycNum& a, const CycNum& b) {
  require(a.ctx_ != nullptr && a.ctx_ == b.ctx_, "CycNum context mismatch");
  std::vector<Rat> out(a.c_.size());
  for (std::size_t i = 0; i < a.c_.size(); ++i) out[i] = a.c_[i] + b.c_[i];
  return CycNum(a.ctx_, std::move(out));
}

CycNum operator-(const CycNum& a, const CycNum& b) {
  require(a.ctx_ != nullptr && a.ctx_ == b.ctx_, "CycNum context mismatch");
  std::vector<Rat> out(a.c_.size());
  for (std::size_t i = 0; i < a.c_.size(); ++i) out[i] = a.c_[i] - b.c_[i];
  return CycNum(a.ctx_, std::move(out));
}

CycNum operator*(const CycNum& a, const CycNum& b) {
  require(a.ctx_ != nullptr && a.ctx_ == b.ctx_, "CycNum context mismatch");
  const CycCtx& C = *a.ctx_;
  const int phi = C.phi_;
  std::vector<Rat> prod(2 * phi - 1, Rat(0));
  for (int i = 0; i < phi; ++i) {
    if (a.c_[i] == 0) continue;
    for (int j = 0; j < phi; ++j) {
      if (b.c_[j] == 0) continue;
      prod[i + j] += a.c_[i] * b.c_[j];
    }
  }
  std::vector<Rat> out(prod.begin(), prod.begin() + phi);
  for (int t = phi; t < 2 * phi - 1; ++t) {
    if (prod[t] == 0) continue;
    const auto& red = C.power_[static_cast<std::size_t>(t)];
    for (int i = 0; i < phi; ++i) {
      if (red[i] == 0) continue;
      out[i] += prod[t] * red[i];
    }
  }
  return CycNum(a.ctx_, std::move(out));
}

bool operator==(const CycNum& a, const CycNum& b) {
  require(a.ctx_ != nullptr && a.ctx_ == b.ctx_, "CycNum context mismatch");
  return a.c_ == b.c_;
}

std::string CycNum::to_string() const {
  require(ctx_ != nullptr, "uninitialized CycNum");
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    if (!first) os << " + ";
    os << "(" << c_[i] << ")";
    if (i == 1) os << "*z";
    if (i > 1) os << "*z^" << i;
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

int cyc_compare(const CycNum& a, const CycNum& b) {
  require(a.ctx() != nullptr && a.ctx() == b.ctx(), "CycNum context mismatch");
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    if (a.coeffs()[i] < b.coeffs()[i]) return -1;
    if (b.coeffs()[i] < a.coeffs()[i]) return 1;
  }
  return 0;
}

CycNum conj(const CycNum& a) {
  require(a.ctx() != nullptr, "uninitialized CycNum");
  return a.ctx()->galois(a, a.ctx()->conductor() - 1);
}

}  // namespace sl2eps
