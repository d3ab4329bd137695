#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "boolfun/boolean_function.hpp"
#include "boolfun/decompose.hpp"
#include "boolfun/rng.hpp"

namespace testutil {

using boolfun::BooleanFunction;
using boolfun::QPair;
using boolfun::SplitMix64;

inline BooleanFunction random_function(SplitMix64& rng, int n, std::int64_t lo = -2,
                                       std::int64_t hi = 2) {
  std::vector<std::int64_t> values(std::size_t(1) << n, 0);
  for (std::size_t m = 1; m < values.size(); ++m) values[m] = rng.range(lo, hi);
  return BooleanFunction(n, std::move(values));
}

// Independent subset-sum evaluation of the theta transform.
inline BooleanFunction theta_oracle(const BooleanFunction& f, std::int64_t q) {
  int n = f.ground_size();
  std::vector<std::int64_t> values(f.table_size(), 0);
  for (std::uint32_t a = 0; a < values.size(); ++a) {
    std::int64_t acc = 0;
    for (std::uint32_t b = 0; b < values.size(); ++b) {
      if ((b & a) != b) continue;
      std::int64_t w = 1;
      for (int k = 0; k < std::popcount(a) - std::popcount(b); ++k) w *= q;
      acc += w * f(b);
    }
    values[a] = acc;
  }
  return BooleanFunction(n, std::move(values));
}

// Value of the iterated ordered product of the restrictions of f to the
// blocks of a composition, evaluated directly from the product formula.
inline bool equals_iterated_product(const BooleanFunction& f,
                                    const std::vector<std::uint32_t>& blocks,
                                    QPair q) {
  std::uint32_t full = f.full_mask();
  for (std::uint32_t a = 0;; ++a) {
    __int128 total = 0;
    std::uint32_t earlier = 0;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      std::uint32_t later = 0;
      for (std::size_t j = i + 1; j < blocks.size(); ++j) later |= blocks[j];
      __int128 w1 = 1, w2 = 1;
      for (int k = 0; k < std::popcount(a & later); ++k) w1 *= q.q1;
      for (int k = 0; k < std::popcount(a & earlier); ++k) w2 *= q.q2;
      total += w1 * w2 * static_cast<__int128>(f(a & blocks[i]));
      earlier |= blocks[i];
    }
    if (total != static_cast<__int128>(f(a))) return false;
    if (a == full) break;
  }
  return true;
}

// All ordered compositions of the full mask into valid indecomposable
// factorizations of f: the brute-force route to the uniqueness statement.
inline void ordered_factorizations(const BooleanFunction& f, QPair q,
                                   std::uint32_t remaining,
                                   std::vector<std::uint32_t>& current,
                                   std::vector<std::vector<std::uint32_t>>& out) {
  if (remaining == 0) {
    if (equals_iterated_product(f, current, q)) out.push_back(current);
    return;
  }
  for (std::uint32_t first = remaining; first != 0;
       first = (first - 1) & remaining) {
    if (!boolfun::restriction_indecomposable(f, first, q)) continue;
    current.push_back(first);
    ordered_factorizations(f, q, remaining & ~first, current, out);
    current.pop_back();
  }
}

}  // namespace testutil
