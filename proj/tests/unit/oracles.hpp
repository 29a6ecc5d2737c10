// Copyright 2026 The onefact Authors
// SPDX-License-Identifier: Apache-2.0

// Independent reference computations shared by the unit tests. Nothing here
// calls into the library's fast paths; where field multiplication is needed
// it goes through poly_mul, which bypasses the log tables.

#pragma once

#include <gtest/gtest.h>

#include <cstdint>
#include <functional>
#include <set>
#include <vector>

#include "onefact/algebra.hpp"
#include "onefact/error.hpp"

namespace onefact::testing {

inline bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

/// Odd prime powers in [lo, hi], by trial division.
inline std::vector<std::uint32_t> odd_prime_powers(std::uint32_t lo, std::uint32_t hi) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t q = lo; q <= hi; ++q) {
    if (q % 2 == 0 || q < 3) continue;
    std::uint32_t p = 3;
    while (q % p != 0) p += 2;
    std::uint32_t r = q;
    while (r % p == 0) r /= p;
    if (r == 1) out.push_back(q);
  }
  return out;
}

inline std::vector<std::uint32_t> orders_3_mod_4(std::uint32_t lo, std::uint32_t hi) {
  std::vector<std::uint32_t> out;
  for (auto q : odd_prime_powers(lo, hi)) {
    if (q % 4 == 3) out.push_back(q);
  }
  return out;
}

/// Set of nonzero squares, enumerated with the polynomial multiplier.
inline std::set<std::uint32_t> squares(const Field& f) {
  std::set<std::uint32_t> s;
  for (std::uint32_t x = 1; x < f.order(); ++x) s.insert(f.poly_mul(Elem{x}, Elem{x}).value);
  return s;
}

template <typename Fn>
void expect_error(Fn&& fn, ErrorCode code) {
  try {
    fn();
    ADD_FAILURE() << "expected " << to_string(code);
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), code) << e.what();
  }
}

}  // namespace onefact::testing
