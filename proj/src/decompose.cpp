#include "boolfun/decompose.hpp"

#include <bit>
#include <limits>

namespace boolfun {

namespace {

using int128 = __int128;

std::vector<int128> pow_table(std::int64_t q, int n) {
  std::vector<int128> p(n + 1);
  p[0] = 1;
  for (int k = 1; k <= n; ++k) {
    if (__builtin_mul_overflow(p[k - 1], static_cast<int128>(q), &p[k])) {
      throw Error(Errc::Overflow, "q-power exceeds the working range");
    }
  }
  return p;
}

// f restricted to `within` equals (f restricted to within∖part) * (f
// restricted to part), elements kept in place.
bool splits_as(const BooleanFunction& f, std::uint32_t within, std::uint32_t part,
               const std::vector<int128>& p1, const std::vector<int128>& p2) {
  std::uint32_t rest = within & ~part;
  for (std::uint32_t a = within;; a = (a - 1) & within) {
    std::uint32_t ay = a & part;
    std::uint32_t ax = a & rest;
    int128 lhs = p1[std::popcount(ay)] * static_cast<int128>(f(ax)) +
                 p2[std::popcount(ax)] * static_cast<int128>(f(ay));
    if (lhs != static_cast<int128>(f(a))) return false;
    if (a == 0) break;
  }
  return true;
}

}  // namespace

bool is_modular(const BooleanFunction& f) {
  std::vector<std::int64_t> additive(f.table_size());
  for (std::uint32_t a = 1; a < additive.size(); ++a) {
    int128 s = static_cast<int128>(additive[a & (a - 1)]) +
               f(std::uint32_t(1) << std::countr_zero(a));
    if (s != static_cast<int128>(static_cast<std::int64_t>(s))) return false;
    additive[a] = static_cast<std::int64_t>(s);
    if (f(a) != additive[a]) return false;
  }
  return true;
}

bool restriction_indecomposable(const BooleanFunction& f, std::uint32_t subset,
                                QPair q) {
  if (subset == 0) {
    throw Error(Errc::EmptyGroundSet, "indecomposability needs a nonempty ground set");
  }
  if ((subset & ~f.full_mask()) != 0) {
    throw Error(Errc::SubsetOutOfRange, "subset is not contained in the ground set");
  }
  int k = std::popcount(subset);
  if (k == 1) return true;
  auto p1 = pow_table(q.q1, k);
  auto p2 = pow_table(q.q2, k);
  for (std::uint32_t part = (subset - 1) & subset; part != 0;
       part = (part - 1) & subset) {
    if (splits_as(f, subset, part, p1, p2)) return false;
  }
  return true;
}

bool is_indecomposable(const BooleanFunction& f, QPair q) {
  if (f.ground_size() == 0) {
    throw Error(Errc::EmptyGroundSet, "indecomposability needs a nonempty ground set");
  }
  return restriction_indecomposable(f, f.full_mask(), q);
}

Decomposition decompose(const BooleanFunction& f, QPair q) {
  if (f.ground_size() == 0) {
    throw Error(Errc::EmptyGroundSet, "decomposition needs a nonempty ground set");
  }
  auto p1 = pow_table(q.q1, f.ground_size());
  auto p2 = pow_table(q.q2, f.ground_size());
  Decomposition out;
  out.q = q;
  // Iterative first-block peeling: the candidate first parts of `within` are
  // its subsets F with f|within = f|F * f|(within∖F); the smallest valid
  // bitmask wins, then the tail is processed the same way.
  std::vector<std::uint32_t> stack{f.full_mask()};
  while (!stack.empty()) {
    std::uint32_t within = stack.back();
    stack.pop_back();
    std::uint32_t chosen = 0;
    if (std::popcount(within) > 1) {
      for (std::uint32_t first = 1; first < within; ++first) {
        if ((first & within) != first) continue;
        if (splits_as(f, within, within & ~first, p1, p2)) {
          chosen = first;
          break;
        }
      }
    }
    if (chosen == 0) {
      out.blocks.push_back(within);
    } else {
      // The remainder goes on the stack first so blocks come out in order.
      stack.push_back(within & ~chosen);
      stack.push_back(chosen);
    }
  }
  return out;
}

SetPartition component_partition(const BooleanFunction& f) {
  int n = f.ground_size();
  if (n == 0) {
    throw Error(Errc::EmptyGroundSet, "components need a nonempty ground set");
  }
  std::uint32_t full = f.full_mask();
  // Splitting subsets (f = f|S *_1 f|complement) are closed under complement
  // and intersection; the components are the atoms of that subalgebra.
  std::vector<std::uint32_t> atom(n, full);
  for (std::uint32_t s = 1; s < full; ++s) {
    bool splits = true;
    for (std::uint32_t a = 0; a <= full && splits; ++a) {
      int128 sum = static_cast<int128>(f(a & s)) + f(a & ~s & full);
      if (sum != static_cast<int128>(f(a))) splits = false;
    }
    if (!splits) continue;
    for (int i = 0; i < n; ++i) {
      atom[i] &= (s & (1u << i)) ? s : ~s;
    }
  }
  std::vector<std::uint32_t> blocks;
  std::uint32_t seen = 0;
  for (int i = 0; i < n; ++i) {
    if (seen & (1u << i)) continue;
    blocks.push_back(atom[i]);
    seen |= atom[i];
  }
  return SetPartition::from_blocks(n, blocks);
}

int ic(const BooleanFunction& f) {
  if (f.ground_size() == 0) return 0;
  return component_partition(f).block_count();
}

bool commutes(const BooleanFunction& f, const BooleanFunction& g, QPair q) {
  int nf = f.ground_size(), ng = g.ground_size();
  int n = nf + ng;
  if (n > caps().arithmetic) {
    throw Error(Errc::GroundSetTooLarge, "product ground set exceeds cap");
  }
  auto p1 = pow_table(q.q1, n);
  auto p2 = pow_table(q.q2, n);
  std::uint32_t fmask = f.full_mask();
  for (std::uint32_t a = 0; a < (std::uint32_t(1) << n); ++a) {
    std::uint32_t ax = a & fmask;
    std::uint32_t ay = a >> nf;
    int kx = std::popcount(ax), ky = std::popcount(ay);
    int128 fg = p1[ky] * static_cast<int128>(f(ax)) + p2[kx] * static_cast<int128>(g(ay));
    int128 gf = p2[ky] * static_cast<int128>(f(ax)) + p1[kx] * static_cast<int128>(g(ay));
    if (fg != gf) return false;
  }
  return true;
}

}  // namespace boolfun
