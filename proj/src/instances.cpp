#include "boolfun/instances.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>

namespace boolfun {

Hypergraph::Hypergraph(int n_, std::vector<std::uint32_t> edges_)
    : n(n_), edges(std::move(edges_)) {
  if (n < 0 || n > caps().arithmetic) {
    throw Error(Errc::GroundSetTooLarge, "vertex set exceeds cap");
  }
  std::uint32_t full = n == 0 ? 0u : (std::uint32_t(1) << n) - 1u;
  for (std::uint32_t e : edges) {
    if (e == 0) throw Error(Errc::InvalidArgument, "empty hyperedge");
    if ((e & ~full) != 0) {
      throw Error(Errc::InvalidArgument, "hyperedge leaves the vertex set");
    }
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
}

MultiGraph::MultiGraph(int vcount_, std::vector<std::pair<int, int>> ends_)
    : vcount(vcount_), ends(std::move(ends_)) {
  if (vcount < 0) throw Error(Errc::InvalidArgument, "negative vertex count");
  if (ends.size() > static_cast<std::size_t>(caps().arithmetic)) {
    throw Error(Errc::GroundSetTooLarge, "edge set exceeds cap");
  }
  for (auto& [u, v] : ends) {
    if (u < 1 || v < 1 || u > vcount || v > vcount) {
      throw Error(Errc::InvalidArgument, "edge endpoint out of range");
    }
    if (u == v) throw Error(Errc::InvalidArgument, "loops are not allowed");
  }
}

VectorFamily::VectorFamily(int dim_, std::vector<std::vector<mpq_class>> columns_)
    : dim(dim_), columns(std::move(columns_)) {
  if (dim < 0) throw Error(Errc::InvalidArgument, "negative dimension");
  if (columns.size() > static_cast<std::size_t>(caps().arithmetic)) {
    throw Error(Errc::GroundSetTooLarge, "column set exceeds cap");
  }
  for (auto& col : columns) {
    if (col.size() != static_cast<std::size_t>(dim)) {
      throw Error(Errc::WrongLength, "column length must equal the dimension");
    }
    for (auto& entry : col) entry.canonicalize();
  }
}

BooleanFunction iota(const Hypergraph& h) {
  std::vector<std::int64_t> values(std::size_t(1) << h.n, 0);
  for (std::uint32_t e : h.edges) values[e] = 1;
  return BooleanFunction(h.n, std::move(values));
}

BooleanFunction gamma(const Hypergraph& h) { return theta(iota(h), 1); }

Hypergraph restrict_hypergraph(const Hypergraph& h, std::uint32_t subset) {
  if ((subset & ~(h.n == 0 ? 0u : (std::uint32_t(1) << h.n) - 1u)) != 0) {
    throw Error(Errc::SubsetOutOfRange, "subset is not contained in the vertex set");
  }
  std::vector<std::uint32_t> bits;
  for (int i = 0; i < h.n; ++i) {
    if (subset & (1u << i)) bits.push_back(1u << i);
  }
  std::vector<std::uint32_t> kept;
  for (std::uint32_t e : h.edges) {
    if ((e & ~subset) != 0) continue;
    std::uint32_t compressed = 0;
    for (std::size_t j = 0; j < bits.size(); ++j) {
      if (e & bits[j]) compressed |= (1u << j);
    }
    kept.push_back(compressed);
  }
  return Hypergraph(std::popcount(subset), std::move(kept));
}

Hypergraph disjoint_union(const Hypergraph& g, const Hypergraph& h) {
  std::vector<std::uint32_t> edges = g.edges;
  for (std::uint32_t e : h.edges) edges.push_back(e << g.n);
  return Hypergraph(g.n + h.n, std::move(edges));
}

bool is_connected(const Hypergraph& h) {
  if (h.n == 0) throw Error(Errc::EmptyVertexSet, "connectivity needs a vertex");
  std::uint32_t full = (std::uint32_t(1) << h.n) - 1u;
  for (std::uint32_t s = 1; s < full; s += 2) {  // fix vertex 1 on one side
    bool separated = true;
    for (std::uint32_t e : h.edges) {
      if ((e & s) != 0 && (e & ~s & full) != 0) {
        separated = false;
        break;
      }
    }
    if (separated) return false;
  }
  return true;
}

bool is_matroid_rank(const BooleanFunction& f) {
  std::uint32_t full = f.full_mask();
  for (std::uint32_t a = 0; a <= full; ++a) {
    std::int64_t v = f(a);
    if (v < 0 || v > std::popcount(a)) return false;
    if (a == full) break;
  }
  for (std::uint32_t a = 0; a <= full; ++a) {
    for (int i = 0; i < f.ground_size(); ++i) {
      if (!(a & (1u << i)) && f(a | (1u << i)) < f(a)) return false;
    }
    if (a == full) break;
  }
  for (std::uint32_t a = 0; a <= full; ++a) {
    for (std::uint32_t b = a; b <= full; ++b) {
      if (f(a | b) + f(a & b) > f(a) + f(b)) return false;
      if (b == full) break;
    }
    if (a == full) break;
  }
  return true;
}

namespace {

struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool merge(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

}  // namespace

BooleanFunction graphic_rank(const MultiGraph& g) {
  int n = g.edge_count();
  std::vector<std::int64_t> values(std::size_t(1) << n, 0);
  for (std::uint32_t y = 1; y < values.size(); ++y) {
    // rank = number of merges when inserting the edges of y one by one
    Dsu dsu(g.vcount);
    std::int64_t merges = 0;
    for (int i = 0; i < n; ++i) {
      if (!(y & (1u << i))) continue;
      if (dsu.merge(g.ends[i].first - 1, g.ends[i].second - 1)) ++merges;
    }
    values[y] = merges;
  }
  return BooleanFunction(n, std::move(values));
}

bool is_forest(const MultiGraph& g) {
  Dsu dsu(g.vcount);
  for (const auto& [u, v] : g.ends) {
    if (!dsu.merge(u - 1, v - 1)) return false;
  }
  return true;
}

namespace {

// Rank of an integer matrix by Bareiss fraction-free elimination.
int bareiss_rank(std::vector<std::vector<mpz_class>> m) {
  if (m.empty() || m[0].empty()) return 0;
  std::size_t rows = m.size(), cols = m[0].size();
  mpz_class prev(1);
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t pivot = row;
    while (pivot < rows && m[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[row], m[pivot]);
    for (std::size_t i = row + 1; i < rows; ++i) {
      for (std::size_t j = col + 1; j < cols; ++j) {
        mpz_class num = m[row][col] * m[i][j] - m[i][col] * m[row][j];
        mpz_divexact(m[i][j].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
      m[i][col] = 0;
    }
    prev = m[row][col];
    ++row;
  }
  return static_cast<int>(row);
}

std::vector<std::vector<mpz_class>> integer_columns(const VectorFamily& v) {
  std::vector<std::vector<mpz_class>> cols;
  cols.reserve(v.columns.size());
  for (const auto& col : v.columns) {
    mpz_class common(1);
    for (const auto& entry : col) mpz_lcm(common.get_mpz_t(), common.get_mpz_t(),
                                          entry.get_den().get_mpz_t());
    std::vector<mpz_class> scaled;
    scaled.reserve(col.size());
    for (const auto& entry : col) {
      scaled.push_back(entry.get_num() * (common / entry.get_den()));
    }
    cols.push_back(std::move(scaled));
  }
  return cols;
}

}  // namespace

BooleanFunction linear_rank(const VectorFamily& v) {
  int n = v.column_count();
  auto cols = integer_columns(v);
  std::vector<std::int64_t> values(std::size_t(1) << n, 0);
  for (std::uint32_t y = 1; y < values.size(); ++y) {
    std::vector<std::vector<mpz_class>> m(v.dim);
    for (int r = 0; r < v.dim; ++r) {
      for (int c = 0; c < n; ++c) {
        if (y & (1u << c)) m[r].push_back(cols[c][r]);
      }
    }
    values[y] = bareiss_rank(std::move(m));
  }
  return BooleanFunction(n, std::move(values));
}

namespace {

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
  std::uint64_t out = 1 % mod;
  base %= mod;
  while (exp) {
    if (exp & 1) out = out * base % mod;
    base = base * base % mod;
    exp >>= 1;
  }
  return out;
}

int gf_rank(std::vector<std::vector<std::uint64_t>> m, std::uint64_t p) {
  if (m.empty() || m[0].empty()) return 0;
  std::size_t rows = m.size(), cols = m[0].size();
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t pivot = row;
    while (pivot < rows && m[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[row], m[pivot]);
    std::uint64_t inv = mod_pow(m[row][col], p - 2, p);
    for (std::size_t i = row + 1; i < rows; ++i) {
      if (m[i][col] == 0) continue;
      std::uint64_t factor = m[i][col] * inv % p;
      for (std::size_t j = col; j < cols; ++j) {
        m[i][j] = (m[i][j] + p - factor * m[row][j] % p) % p;
      }
    }
    ++row;
  }
  return static_cast<int>(row);
}

}  // namespace

BooleanFunction linear_rank_gfp(const VectorFamily& v, std::uint32_t p) {
  if (!is_prime(p)) throw Error(Errc::InvalidArgument, "p must be prime");
  if (p >= (std::uint32_t(1) << 31)) {
    throw Error(Errc::InvalidArgument, "p must be below 2^31");
  }
  int n = v.column_count();
  // Reduce the rational entries mod p.
  std::vector<std::vector<std::uint64_t>> cols(n, std::vector<std::uint64_t>(v.dim));
  for (int c = 0; c < n; ++c) {
    for (int r = 0; r < v.dim; ++r) {
      const mpq_class& entry = v.columns[c][r];
      mpz_class den_mod = entry.get_den() % p;
      if (den_mod == 0) {
        throw Error(Errc::InvalidArgument, "denominator not invertible mod p");
      }
      mpz_class num_mod = entry.get_num() % p;
      if (num_mod < 0) num_mod += p;
      std::uint64_t num = num_mod.get_ui();
      std::uint64_t den = den_mod.get_ui();
      cols[c][r] = num * mod_pow(den, p - 2, p) % p;
    }
  }
  std::vector<std::int64_t> values(std::size_t(1) << n, 0);
  for (std::uint32_t y = 1; y < values.size(); ++y) {
    std::vector<std::vector<std::uint64_t>> m(v.dim);
    for (int r = 0; r < v.dim; ++r) {
      for (int c = 0; c < n; ++c) {
        if (y & (1u << c)) m[r].push_back(cols[c][r]);
      }
    }
    values[y] = gf_rank(std::move(m), p);
  }
  return BooleanFunction(n, std::move(values));
}

namespace {

std::uint32_t greedy_extend(const BooleanFunction& f, std::uint32_t base,
                            std::uint32_t candidates, std::int64_t target) {
  std::uint32_t b = base;
  while (f(b) < target) {
    bool advanced = false;
    for (int i = 0; i < f.ground_size(); ++i) {
      std::uint32_t bit = 1u << i;
      if (!(candidates & bit) || (b & bit)) continue;
      if (f(b | bit) == f(b) + 1) {
        b |= bit;
        advanced = true;
        break;
      }
    }
    if (!advanced) {
      throw Error(Errc::NotAMatroid, "greedy extension stalled below the target rank");
    }
  }
  return b;
}

}  // namespace

std::uint32_t basis_of(const BooleanFunction& f, std::uint32_t y) {
  if ((y & ~f.full_mask()) != 0) {
    throw Error(Errc::SubsetOutOfRange, "subset is not contained in the ground set");
  }
  if (!is_matroid_rank(f)) {
    throw Error(Errc::NotAMatroid, "rank axioms fail");
  }
  return greedy_extend(f, 0, y, f(y));
}

std::uint32_t extend_basis(const BooleanFunction& f, std::uint32_t z,
                           std::uint32_t basis_z, std::uint32_t y) {
  if ((y & ~f.full_mask()) != 0 || (z & ~y) != 0 || (basis_z & ~z) != 0) {
    throw Error(Errc::SubsetOutOfRange, "need basis_z ⊆ z ⊆ y ⊆ ground set");
  }
  if (!is_matroid_rank(f)) {
    throw Error(Errc::NotAMatroid, "rank axioms fail");
  }
  if (f(basis_z) != std::popcount(basis_z) || f(basis_z) != f(z)) {
    throw Error(Errc::NotABasis, "basis_z is not a basis of z");
  }
  std::uint32_t extended = greedy_extend(f, basis_z, y & ~z, f(y));
  std::uint32_t added = extended & ~basis_z;
  if ((added & z) != 0) {
    throw Error(Errc::NotABasis, "extension re-entered z");
  }
  return added;
}

}  // namespace boolfun
