#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "boolfun/caps.hpp"
#include "boolfun/errors.hpp"

namespace boolfun {

struct QPair {
  std::int64_t q1 = 1;
  std::int64_t q2 = 1;
};

// A boolean function: a map f from subsets of {1..n} to Z with f(empty) = 0,
// stored as a dense table indexed by bitmask (bit i <=> element i+1 in the
// subset). All value arithmetic is overflow-checked 64-bit.
class BooleanFunction {
 public:
  // The unit: the unique boolean function on the empty ground set.
  BooleanFunction() : n_(0), values_{0} {}

  BooleanFunction(int n, std::vector<std::int64_t> values);

  int ground_size() const { return n_; }
  std::uint32_t full_mask() const {
    return n_ == 0 ? 0u : (std::uint32_t(1) << n_) - 1u;
  }
  std::size_t table_size() const { return values_.size(); }
  std::int64_t operator()(std::uint32_t subset) const { return values_[subset]; }
  const std::vector<std::int64_t>& values() const { return values_; }

  bool operator==(const BooleanFunction&) const = default;
  std::strong_ordering operator<=>(const BooleanFunction&) const = default;

 private:
  int n_;
  std::vector<std::int64_t> values_;
};

// f restricted to a subset of the ground set, re-indexed onto {1..popcount},
// keeping the relative order of the surviving elements.
BooleanFunction restrict_to(const BooleanFunction& f, std::uint32_t subset);

// The two-parameter product: f occupies positions 1..n_f, g the positions
// above, and (f*g)(A) = q1^|A∩Y| f(A∩X) + q2^|A∩X| g(A∩Y).
BooleanFunction star_product(const BooleanFunction& f, const BooleanFunction& g,
                             QPair q);

// theta_q(f)(A) = sum_{B ⊆ A} q^(|A|-|B|) f(B).
BooleanFunction theta(const BooleanFunction& f, std::int64_t q);

// The function A |-> lambda (q1^|A| - q2^|A|)/(q1 - q2), evaluated through the
// integer geometric sum. Requires q1 != q2.
BooleanFunction f_lambda(int n, std::int64_t lambda, QPair q);

// Lexicographically smallest value table over all relabelings of the ground
// set; two functions are isomorphic iff their canonical forms are equal.
BooleanFunction canonical_form(const BooleanFunction& f);

}  // namespace boolfun
