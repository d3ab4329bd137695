#pragma once

#include <cstdint>
#include <vector>

#include "boolfun/boolean_function.hpp"

namespace boolfun {

// A partition of {1..n}, stored as a restricted-growth string: rgs[i] is the
// block label of element i+1, rgs[0] = 0 and rgs[i] <= 1 + max(rgs[0..i-1]).
// Block labels coincide with the order of the blocks' smallest elements.
class SetPartition {
 public:
  SetPartition(int n, std::vector<int> rgs);

  static SetPartition discrete(int n);
  static SetPartition one_block(int n);
  // Blocks given as disjoint nonempty bitmasks covering {1..n}.
  static SetPartition from_blocks(int n, const std::vector<std::uint32_t>& blocks);

  int ground_size() const { return n_; }
  int block_count() const { return static_cast<int>(blocks_.size()); }
  const std::vector<int>& rgs() const { return rgs_; }
  // Block bitmasks in label order (= ascending smallest element).
  const std::vector<std::uint32_t>& blocks() const { return blocks_; }

  bool operator==(const SetPartition&) const = default;
  std::strong_ordering operator<=>(const SetPartition&) const = default;

 private:
  int n_;
  std::vector<int> rgs_;
  std::vector<std::uint32_t> blocks_;
};

// All partitions of {1..n} in lexicographic rgs order.
std::vector<SetPartition> enumerate_partitions(int n);

// True iff every block of p is contained in a block of q.
bool refines(const SetPartition& p, const SetPartition& q);

// For p refining q: the partition of the quotient set {blocks of p} whose
// blocks group p-blocks lying in a common q-block.
SetPartition induced_partition(const SetPartition& p, const SetPartition& q);

// Contraction: a function on the blocks of p, (f/p)(A) = f(union of blocks in A).
BooleanFunction contract(const BooleanFunction& f, const SetPartition& p);

// Restriction by a partition: (f|p)(A) = sum over blocks Y of f(A ∩ Y).
BooleanFunction restrict_by(const BooleanFunction& f, const SetPartition& p);

}  // namespace boolfun
