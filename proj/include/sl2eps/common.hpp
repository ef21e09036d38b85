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

#ifndef SL2EPS_COMMON_HPP
#define SL2EPS_COMMON_HPP

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace sl2eps {

// Exact rational scalar used for all character-theoretic arithmetic.
using Rat = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// Rejected input: bad parameters, out-of-budget requests, malformed data.
class config_error : public std::runtime_error {
 public:
  explicit config_error(const std::string& what) : std::runtime_error(what) {}
};

// A mathematical invariant failed to hold.  Any instance of this exception
// means either a bug or a genuinely false claim; it is never swallowed.
class check_error : public std::logic_error {
 public:
  explicit check_error(const std::string& what) : std::logic_error(what) {}
};

inline void require(bool cond, const std::string& what) {
  if (!cond) throw check_error(what);
}

inline void require_config(bool cond, const std::string& what) {
  if (!cond) throw config_error(what);
}

// Global worker count for parallel_for; 1 = serial.  Set once by the CLI.
void set_thread_count(int n);
int thread_count();

// Runs fn(i) for i in [0, n).  Work is split into contiguous chunks, one per
// worker; every fn(i) must write only to slot i of its output, so the result
// is identical for any worker count.
void parallel_for(std::int64_t n, const std::function<void(std::int64_t)>& fn);

// x^e for small exact integers, e >= 0.
std::int64_t ipow(std::int64_t x, int e);

// Floor square root, with exactness flag.
std::int64_t isqrt(std::int64_t n);

bool is_prime(std::int64_t n);

// Euler phi for small n.
int euler_phi(int n);

std::int64_t gcd64(std::int64_t a, std::int64_t b);
std::int64_t lcm64(std::int64_t a, std::int64_t b);

}  // namespace sl2eps

#endif
