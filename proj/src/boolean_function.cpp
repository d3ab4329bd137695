#include "boolfun/boolean_function.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <string>

namespace boolfun {

const Caps& caps() {
  static const Caps value = [] {
    Caps c;
    if (const char* env = std::getenv("BOOLFUN_MAX_N")) {
      char* end = nullptr;
      long limit = std::strtol(env, &end, 10);
      if (end != env && limit >= 0) {
        c.arithmetic = std::min<long>(c.arithmetic, limit);
        c.partition = std::min<long>(c.partition, limit);
        c.canonical = std::min<long>(c.canonical, limit);
        c.bool_max = std::min<long>(c.bool_max, limit);
      }
    }
    return c;
  }();
  return value;
}

const char* to_string(Errc code) {
  switch (code) {
    case Errc::WrongLength: return "WrongLength";
    case Errc::NonzeroEmptySet: return "NonzeroEmptySet";
    case Errc::SubsetOutOfRange: return "SubsetOutOfRange";
    case Errc::Overflow: return "Overflow";
    case Errc::EqualParameters: return "EqualParameters";
    case Errc::GroundSetTooLarge: return "GroundSetTooLarge";
    case Errc::MismatchedGroundSets: return "MismatchedGroundSets";
    case Errc::NotARefinement: return "NotARefinement";
    case Errc::EmptyGroundSet: return "EmptyGroundSet";
    case Errc::EnumerationTooLarge: return "EnumerationTooLarge";
    case Errc::NotAMatroid: return "NotAMatroid";
    case Errc::NotABasis: return "NotABasis";
    case Errc::NotInBoolMax: return "NotInBoolMax";
    case Errc::EmptyVertexSet: return "EmptyVertexSet";
    case Errc::InvalidArgument: return "InvalidArgument";
  }
  return "UnknownError";
}

namespace detail {

using int128 = __int128;

int128 checked_mul(int128 a, int128 b) {
  int128 out;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw Error(Errc::Overflow, "product exceeds the working range");
  }
  return out;
}

int128 checked_add(int128 a, int128 b) {
  int128 out;
  if (__builtin_add_overflow(a, b, &out)) {
    throw Error(Errc::Overflow, "sum exceeds the working range");
  }
  return out;
}

std::int64_t narrow(int128 v) {
  if (v > std::numeric_limits<std::int64_t>::max() ||
      v < std::numeric_limits<std::int64_t>::min()) {
    throw Error(Errc::Overflow, "value does not fit in 64 signed bits");
  }
  return static_cast<std::int64_t>(v);
}

// powers[k] = q^k for k = 0..n
std::vector<int128> powers(std::int64_t q, int n) {
  std::vector<int128> p(n + 1);
  p[0] = 1;
  for (int k = 1; k <= n; ++k) p[k] = checked_mul(p[k - 1], q);
  return p;
}

}  // namespace detail

BooleanFunction::BooleanFunction(int n, std::vector<std::int64_t> values)
    : n_(n), values_(std::move(values)) {
  if (n < 0 || n > caps().arithmetic) {
    throw Error(Errc::GroundSetTooLarge,
                "ground set of size " + std::to_string(n) + " exceeds cap " +
                    std::to_string(caps().arithmetic));
  }
  if (values_.size() != (std::size_t(1) << n)) {
    throw Error(Errc::WrongLength, "expected 2^" + std::to_string(n) + " values, got " +
                                       std::to_string(values_.size()));
  }
  if (values_[0] != 0) {
    throw Error(Errc::NonzeroEmptySet, "f(empty) must be 0");
  }
}

BooleanFunction restrict_to(const BooleanFunction& f, std::uint32_t subset) {
  if ((subset & ~f.full_mask()) != 0) {
    throw Error(Errc::SubsetOutOfRange, "subset is not contained in the ground set");
  }
  int k = std::popcount(subset);
  std::vector<std::uint32_t> bits;
  bits.reserve(k);
  for (int i = 0; i < f.ground_size(); ++i) {
    if (subset & (1u << i)) bits.push_back(1u << i);
  }
  std::vector<std::int64_t> values(std::size_t(1) << k);
  for (std::uint32_t b = 0; b < values.size(); ++b) {
    std::uint32_t expanded = 0;
    for (int j = 0; j < k; ++j) {
      if (b & (1u << j)) expanded |= bits[j];
    }
    values[b] = f(expanded);
  }
  return BooleanFunction(k, std::move(values));
}

BooleanFunction star_product(const BooleanFunction& f, const BooleanFunction& g,
                             QPair q) {
  int nf = f.ground_size(), ng = g.ground_size();
  int n = nf + ng;
  if (n > caps().arithmetic) {
    throw Error(Errc::GroundSetTooLarge, "product ground set exceeds cap");
  }
  auto p1 = detail::powers(q.q1, ng);
  auto p2 = detail::powers(q.q2, nf);
  std::uint32_t fmask = f.full_mask();
  std::vector<std::int64_t> values(std::size_t(1) << n);
  for (std::uint32_t a = 0; a < values.size(); ++a) {
    std::uint32_t ax = a & fmask;
    std::uint32_t ay = a >> nf;
    detail::int128 lhs = detail::checked_mul(p1[std::popcount(ay)], f(ax));
    detail::int128 rhs = detail::checked_mul(p2[std::popcount(ax)], g(ay));
    values[a] = detail::narrow(detail::checked_add(lhs, rhs));
  }
  return BooleanFunction(n, std::move(values));
}

BooleanFunction theta(const BooleanFunction& f, std::int64_t q) {
  int n = f.ground_size();
  auto pw = detail::powers(q, n);
  std::vector<std::int64_t> values(f.table_size());
  for (std::uint32_t a = 0; a < values.size(); ++a) {
    detail::int128 acc = 0;
    int ka = std::popcount(a);
    std::uint32_t b = a;
    while (true) {
      acc = detail::checked_add(acc, detail::checked_mul(pw[ka - std::popcount(b)], f(b)));
      if (b == 0) break;
      b = (b - 1) & a;
    }
    values[a] = detail::narrow(acc);
  }
  return BooleanFunction(n, std::move(values));
}

BooleanFunction f_lambda(int n, std::int64_t lambda, QPair q) {
  if (q.q1 == q.q2) {
    throw Error(Errc::EqualParameters, "q1 and q2 must differ");
  }
  if (n < 0 || n > caps().arithmetic) {
    throw Error(Errc::GroundSetTooLarge, "ground set exceeds cap");
  }
  // geom[k] = q1^(k-1) + q1^(k-2) q2 + ... + q2^(k-1), geom[0] = 0
  std::vector<detail::int128> geom(n + 1);
  geom[0] = 0;
  auto p2 = detail::powers(q.q2, n);
  for (int k = 1; k <= n; ++k) {
    geom[k] = detail::checked_add(detail::checked_mul(geom[k - 1], q.q1), p2[k - 1]);
  }
  std::vector<std::int64_t> values(std::size_t(1) << n);
  for (std::uint32_t a = 0; a < values.size(); ++a) {
    values[a] = detail::narrow(detail::checked_mul(geom[std::popcount(a)], lambda));
  }
  return BooleanFunction(n, std::move(values));
}

BooleanFunction canonical_form(const BooleanFunction& f) {
  int n = f.ground_size();
  if (n > caps().canonical) {
    throw Error(Errc::GroundSetTooLarge, "canonicalization is capped at n = " +
                                             std::to_string(caps().canonical));
  }
  if (n <= 1) return f;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::int64_t> best = f.values();
  std::vector<std::int64_t> image(f.table_size());
  std::vector<std::uint32_t> mapped(f.table_size());
  while (std::next_permutation(perm.begin(), perm.end())) {
    mapped[0] = 0;
    for (std::uint32_t m = 1; m < mapped.size(); ++m) {
      std::uint32_t low = m & (m - 1);
      int bit = std::countr_zero(m);
      mapped[m] = mapped[low] | (1u << perm[bit]);
    }
    for (std::uint32_t m = 0; m < image.size(); ++m) image[mapped[m]] = f(m);
    if (image < best) best = image;
  }
  return BooleanFunction(n, std::move(best));
}

}  // namespace boolfun
