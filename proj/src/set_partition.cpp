#include "boolfun/set_partition.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <string>

namespace boolfun {

namespace {

std::vector<std::uint32_t> blocks_of_rgs(int n, const std::vector<int>& rgs) {
  int cl = n == 0 ? 0 : 1 + *std::max_element(rgs.begin(), rgs.end());
  std::vector<std::uint32_t> blocks(cl, 0);
  for (int i = 0; i < n; ++i) blocks[rgs[i]] |= (1u << i);
  return blocks;
}

}  // namespace

SetPartition::SetPartition(int n, std::vector<int> rgs) : n_(n), rgs_(std::move(rgs)) {
  if (n < 0 || n > caps().arithmetic) {
    throw Error(Errc::GroundSetTooLarge, "partition ground set exceeds cap");
  }
  if (rgs_.size() != static_cast<std::size_t>(n)) {
    throw Error(Errc::WrongLength, "rgs length must equal the ground-set size");
  }
  int max_label = -1;
  for (int i = 0; i < n; ++i) {
    if (rgs_[i] < 0 || rgs_[i] > max_label + 1) {
      throw Error(Errc::InvalidArgument, "not a restricted-growth string");
    }
    max_label = std::max(max_label, rgs_[i]);
  }
  blocks_ = blocks_of_rgs(n_, rgs_);
}

SetPartition SetPartition::discrete(int n) {
  std::vector<int> rgs(n);
  for (int i = 0; i < n; ++i) rgs[i] = i;
  return SetPartition(n, std::move(rgs));
}

SetPartition SetPartition::one_block(int n) {
  return SetPartition(n, std::vector<int>(n, 0));
}

SetPartition SetPartition::from_blocks(int n, const std::vector<std::uint32_t>& blocks) {
  std::uint32_t full = n == 0 ? 0u : (std::uint32_t(1) << n) - 1u;
  std::uint32_t seen = 0;
  for (std::uint32_t b : blocks) {
    if (b == 0 || (b & ~full) != 0 || (b & seen) != 0) {
      throw Error(Errc::InvalidArgument, "blocks must be disjoint nonempty subsets");
    }
    seen |= b;
  }
  if (seen != full) {
    throw Error(Errc::InvalidArgument, "blocks must cover the ground set");
  }
  std::vector<int> rgs(n, -1);
  int next = 0;
  for (int i = 0; i < n; ++i) {
    if (rgs[i] >= 0) continue;
    for (std::uint32_t b : blocks) {
      if (b & (1u << i)) {
        for (int j = i; j < n; ++j) {
          if (b & (1u << j)) rgs[j] = next;
        }
        ++next;
        break;
      }
    }
  }
  return SetPartition(n, std::move(rgs));
}

std::vector<SetPartition> enumerate_partitions(int n) {
  if (n > caps().partition) {
    throw Error(Errc::GroundSetTooLarge, "partition enumeration is capped at n = " +
                                             std::to_string(caps().partition));
  }
  if (n < 0) throw Error(Errc::InvalidArgument, "negative ground-set size");
  std::vector<SetPartition> out;
  std::vector<int> rgs(n, 0);
  if (n == 0) {
    out.emplace_back(0, std::vector<int>{});
    return out;
  }
  // Lexicographic enumeration of restricted-growth strings.
  std::vector<int> maxes(n, 0);
  while (true) {
    out.emplace_back(n, rgs);
    int i = n - 1;
    while (i > 0) {
      if (rgs[i] <= maxes[i - 1]) break;
      --i;
    }
    if (i == 0) break;
    ++rgs[i];
    maxes[i] = std::max(maxes[i - 1], rgs[i]);
    for (int j = i + 1; j < n; ++j) {
      rgs[j] = 0;
      maxes[j] = maxes[i];
    }
  }
  return out;
}

bool refines(const SetPartition& p, const SetPartition& q) {
  if (p.ground_size() != q.ground_size()) {
    throw Error(Errc::MismatchedGroundSets, "partitions live on different ground sets");
  }
  const auto& qr = q.rgs();
  for (std::uint32_t block : p.blocks()) {
    int label = -1;
    for (int i = 0; i < p.ground_size(); ++i) {
      if (!(block & (1u << i))) continue;
      if (label < 0) {
        label = qr[i];
      } else if (qr[i] != label) {
        return false;
      }
    }
  }
  return true;
}

SetPartition induced_partition(const SetPartition& p, const SetPartition& q) {
  if (!refines(p, q)) {
    throw Error(Errc::NotARefinement, "first partition does not refine the second");
  }
  int k = p.block_count();
  std::vector<int> rgs(k);
  std::vector<int> relabel(q.block_count(), -1);
  int next = 0;
  for (int j = 0; j < k; ++j) {
    int first = std::countr_zero(p.blocks()[j]);
    int qlabel = q.rgs()[first];
    if (relabel[qlabel] < 0) relabel[qlabel] = next++;
    rgs[j] = relabel[qlabel];
  }
  return SetPartition(k, std::move(rgs));
}

BooleanFunction contract(const BooleanFunction& f, const SetPartition& p) {
  if (f.ground_size() != p.ground_size()) {
    throw Error(Errc::MismatchedGroundSets, "partition does not match the function");
  }
  int cl = p.block_count();
  std::vector<std::uint32_t> preimage(std::size_t(1) << cl, 0);
  for (std::uint32_t a = 1; a < preimage.size(); ++a) {
    std::uint32_t low = a & (a - 1);
    preimage[a] = preimage[low] | p.blocks()[std::countr_zero(a)];
  }
  std::vector<std::int64_t> values(preimage.size());
  for (std::uint32_t a = 0; a < preimage.size(); ++a) values[a] = f(preimage[a]);
  return BooleanFunction(cl, std::move(values));
}

BooleanFunction restrict_by(const BooleanFunction& f, const SetPartition& p) {
  if (f.ground_size() != p.ground_size()) {
    throw Error(Errc::MismatchedGroundSets, "partition does not match the function");
  }
  std::vector<std::int64_t> values(f.table_size());
  for (std::uint32_t a = 0; a < values.size(); ++a) {
    __int128 acc = 0;
    for (std::uint32_t block : p.blocks()) acc += f(a & block);
    if (acc > std::numeric_limits<std::int64_t>::max() ||
        acc < std::numeric_limits<std::int64_t>::min()) {
      throw Error(Errc::Overflow, "value does not fit in 64 signed bits");
    }
    values[a] = static_cast<std::int64_t>(acc);
  }
  return BooleanFunction(f.ground_size(), std::move(values));
}

}  // namespace boolfun
