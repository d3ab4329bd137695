#include <algorithm>

#include "boolfun/coalgebra.hpp"
#include "boolfun/instances.hpp"
#include "doctest.h"
#include "helpers.hpp"

using namespace boolfun;
using testutil::random_function;

namespace {

Hypergraph triangle() { return Hypergraph(3, {0b011, 0b101, 0b110}); }

Hypergraph random_hypergraph(SplitMix64& rng, int n) {
  std::vector<std::uint32_t> edges;
  std::uint32_t full = (std::uint32_t(1) << n) - 1u;
  for (std::uint32_t e = 1; e <= full; ++e) {
    if (rng.below(3) == 0) edges.push_back(e);
  }
  return Hypergraph(n, std::move(edges));
}

MultiGraph random_multigraph(SplitMix64& rng, int vcount, int edges) {
  std::vector<std::pair<int, int>> ends;
  for (int i = 0; i < edges; ++i) {
    int u = 1 + int(rng.below(std::uint64_t(vcount)));
    int v = 1 + int(rng.below(std::uint64_t(vcount)));
    while (v == u) v = 1 + int(rng.below(std::uint64_t(vcount)));
    ends.emplace_back(u, v);
  }
  return MultiGraph(vcount, std::move(ends));
}

// Exact rational elimination, kept independent of the fraction-free route.
int rational_rank_oracle(const VectorFamily& v, std::uint32_t subset) {
  std::vector<std::vector<mpq_class>> rows(v.dim);
  for (int r = 0; r < v.dim; ++r) {
    for (int c = 0; c < v.column_count(); ++c) {
      if (subset & (1u << c)) rows[r].push_back(v.columns[c][r]);
    }
  }
  int rank = 0;
  std::size_t cols = rows.empty() ? 0 : rows[0].size();
  std::size_t lead = 0;
  for (std::size_t col = 0; col < cols; ++col) {
    std::size_t pivot = lead;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[lead], rows[pivot]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == lead || rows[i][col] == 0) continue;
      mpq_class factor = rows[i][col] / rows[lead][col];
      for (std::size_t j = col; j < cols; ++j) rows[i][j] -= factor * rows[lead][j];
    }
    ++lead;
    ++rank;
  }
  return rank;
}

}  // namespace

TEST_CASE("hyperedge indicator and its product identity") {
  CHECK(iota(Hypergraph(2, {})) == BooleanFunction(2, {0, 0, 0, 0}));
  CHECK(iota(Hypergraph(2, {0b11})) == BooleanFunction(2, {0, 0, 0, 1}));
  SplitMix64 rng(61);
  for (int trial = 0; trial < 40; ++trial) {
    auto g = random_hypergraph(rng, 1 + int(rng.below(2)));
    auto h = random_hypergraph(rng, 1 + int(rng.below(2)));
    CHECK(iota(disjoint_union(g, h)) == star_product(iota(g), iota(h), {0, 0}));
  }
}

TEST_CASE("hyperedge counting function") {
  // counting equals the level-one transform of the indicator
  Hypergraph small(2, {0b01, 0b11});
  CHECK(gamma(small) == BooleanFunction(2, {0, 1, 0, 2}));
  CHECK(gamma(small) == theta(iota(small), 1));
  CHECK(gamma(triangle()) == BooleanFunction(3, {0, 0, 0, 1, 0, 1, 1, 3}));
  Hypergraph h(3, {0b001, 0b010, 0b100, 0b111});
  auto g = gamma(h);
  CHECK(g(0b001) == 1);
  CHECK(g(0b011) == 2);
  CHECK(g(0b111) == 4);
  SplitMix64 rng(62);
  for (int trial = 0; trial < 60; ++trial) {
    auto hg = random_hypergraph(rng, 1 + int(rng.below(4)));
    CHECK(is_rigid(gamma(hg)));
  }
}

TEST_CASE("gamma is a product and restriction morphism") {
  SplitMix64 rng(63);
  for (int trial = 0; trial < 60; ++trial) {
    auto g = random_hypergraph(rng, 1 + int(rng.below(2)));
    auto h = random_hypergraph(rng, 1 + int(rng.below(2)));
    CHECK(gamma(disjoint_union(g, h)) ==
          star_product(gamma(g), gamma(h), {1, 1}));
    auto whole = random_hypergraph(rng, 1 + int(rng.below(4)));
    std::uint32_t full = (std::uint32_t(1) << whole.n) - 1u;
    for (std::uint32_t s = 0; s <= full; ++s) {
      CHECK(restrict_to(gamma(whole), s) == gamma(restrict_hypergraph(whole, s)));
    }
  }
}

TEST_CASE("gamma is modular exactly on singleton-edge hypergraphs") {
  SplitMix64 rng(64);
  for (int trial = 0; trial < 80; ++trial) {
    auto h = random_hypergraph(rng, 1 + int(rng.below(4)));
    bool all_singletons = std::all_of(h.edges.begin(), h.edges.end(),
                                      [](std::uint32_t e) { return (e & (e - 1)) == 0; });
    CHECK(is_modular(gamma(h)) == all_singletons);
  }
}

TEST_CASE("connectivity matches indecomposability of the counting function") {
  CHECK(is_connected(Hypergraph(1, {})));
  CHECK_FALSE(is_connected(Hypergraph(2, {})));
  CHECK_THROWS_WITH_AS(is_connected(Hypergraph(0, {})),
                       doctest::Contains("EmptyVertexSet"), Error);
  SplitMix64 rng(65);
  for (int trial = 0; trial < 120; ++trial) {
    auto h = random_hypergraph(rng, 1 + int(rng.below(3)));
    CHECK(is_connected(h) == is_indecomposable(gamma(h), {1, 1}));
  }
}

TEST_CASE("rank axioms") {
  // uniform rank-two function
  for (int n = 2; n <= 4; ++n) {
    std::vector<std::int64_t> values(std::size_t(1) << n);
    for (std::uint32_t a = 0; a < values.size(); ++a) {
      values[a] = std::min(std::popcount(a), 2);
    }
    CHECK(is_matroid_rank(BooleanFunction(n, std::move(values))));
  }
  CHECK_FALSE(is_matroid_rank(BooleanFunction(2, {0, 1, 1, 3})));
  CHECK(is_matroid_rank(BooleanFunction(3, {0, 1, 1, 2, 1, 2, 2, 2})));
  // increasing fails
  CHECK_FALSE(is_matroid_rank(BooleanFunction(2, {0, 1, 1, 0})));
}

TEST_CASE("graphic ranks") {
  CHECK(graphic_rank(MultiGraph(2, {{1, 2}})) == BooleanFunction(1, {0, 1}));
  CHECK(graphic_rank(MultiGraph(2, {{1, 2}, {1, 2}})) ==
        BooleanFunction(2, {0, 1, 1, 1}));
  MultiGraph tri(3, {{1, 2}, {1, 3}, {2, 3}});
  CHECK(graphic_rank(tri) == BooleanFunction(3, {0, 1, 1, 2, 1, 2, 2, 2}));
}

TEST_CASE("every graphic rank is a rigid matroid rank") {
  SplitMix64 rng(66);
  for (int trial = 0; trial < 120; ++trial) {
    auto g = random_multigraph(rng, 2 + int(rng.below(3)), 1 + int(rng.below(4)));
    auto rank = graphic_rank(g);
    CHECK(is_matroid_rank(rank));
    CHECK(is_rigid(rank));
  }
}

TEST_CASE("forest criterion agrees with cycle detection") {
  SplitMix64 rng(67);
  for (int trial = 0; trial < 200; ++trial) {
    auto g = random_multigraph(rng, 2 + int(rng.below(3)), 1 + int(rng.below(4)));
    CHECK(is_modular(graphic_rank(g)) == is_forest(g));
  }
}

TEST_CASE("linear ranks over the rationals") {
  VectorFamily v(2, {{mpq_class(1), mpq_class(0)},
                     {mpq_class(0), mpq_class(1)},
                     {mpq_class(1), mpq_class(1)}});
  CHECK(linear_rank(v) == BooleanFunction(3, {0, 1, 1, 2, 1, 2, 2, 2}));
  VectorFamily zeros(2, {{mpq_class(0), mpq_class(0)}, {mpq_class(0), mpq_class(0)}});
  CHECK(linear_rank(zeros) == BooleanFunction(2, {0, 0, 0, 0}));
}

TEST_CASE("linear rank matches the rational elimination oracle") {
  SplitMix64 rng(68);
  for (int trial = 0; trial < 60; ++trial) {
    int dim = 1 + int(rng.below(3));
    int cols = 1 + int(rng.below(4));
    std::vector<std::vector<mpq_class>> columns;
    for (int c = 0; c < cols; ++c) {
      std::vector<mpq_class> col;
      for (int r = 0; r < dim; ++r) {
        col.emplace_back(rng.range(-3, 3), 1 + rng.below(3));
      }
      columns.push_back(std::move(col));
    }
    VectorFamily v(dim, std::move(columns));
    auto rank = linear_rank(v);
    CHECK(is_matroid_rank(rank));
    CHECK(is_rigid(rank));
    for (std::uint32_t s = 0; s <= rank.full_mask(); ++s) {
      CHECK(rank(s) == rational_rank_oracle(v, s));
    }
  }
}

TEST_CASE("free families give modular ranks") {
  VectorFamily v(3, {{mpq_class(1), mpq_class(0), mpq_class(0)},
                     {mpq_class(0), mpq_class(1), mpq_class(0)},
                     {mpq_class(0), mpq_class(0), mpq_class(1)}});
  auto rank = linear_rank(v);
  CHECK(is_modular(rank));
  for (std::uint32_t a = 0; a <= rank.full_mask(); ++a) {
    CHECK(rank(a) == std::popcount(a));
  }
}

TEST_CASE("prime-field ranks") {
  // columns (1,0), (0,1), (1,1), dependent mod 2 on the last pair only when
  // the characteristic divides the determinant
  VectorFamily v(2, {{mpq_class(1), mpq_class(1)}, {mpq_class(1), mpq_class(-1)}});
  auto over_q = linear_rank(v);
  auto over_2 = linear_rank_gfp(v, 2);
  CHECK(over_q(0b11) == 2);
  CHECK(over_2(0b11) == 1);  // det = -2 vanishes mod 2
  CHECK(linear_rank_gfp(v, 3) == over_q);
  CHECK_THROWS_AS(linear_rank_gfp(v, 4), Error);
  VectorFamily w(1, {{mpq_class(1, 2)}});
  CHECK_THROWS_AS(linear_rank_gfp(w, 2), Error);
  CHECK(linear_rank_gfp(w, 5)(1) == 1);
}

TEST_CASE("matroid ranks are closed under products and restrictions") {
  SplitMix64 rng(69);
  for (int trial = 0; trial < 60; ++trial) {
    auto g1 = random_multigraph(rng, 2 + int(rng.below(2)), 1 + int(rng.below(2)));
    auto g2 = random_multigraph(rng, 2 + int(rng.below(2)), 1 + int(rng.below(2)));
    auto product = star_product(graphic_rank(g1), graphic_rank(g2), {1, 1});
    CHECK(is_matroid_rank(product));
    auto rank = graphic_rank(random_multigraph(rng, 3, 3));
    for (std::uint32_t s = 0; s <= rank.full_mask(); ++s) {
      CHECK(is_matroid_rank(restrict_to(rank, s)));
    }
  }
}

TEST_CASE("contraction keeps the rank axioms only on rank-one blocks") {
  SplitMix64 rng(70);
  for (int trial = 0; trial < 80; ++trial) {
    auto g = random_multigraph(rng, 2 + int(rng.below(3)), 2 + int(rng.below(3)));
    auto rank = graphic_rank(g);
    for (const auto& p : enumerate_partitions(rank.ground_size())) {
      bool rank_one_blocks = true;
      for (std::uint32_t b : p.blocks()) {
        if (rank(b) > 1) rank_one_blocks = false;
      }
      CHECK(is_matroid_rank(contract(rank, p)) == rank_one_blocks);
      // for graphic ranks this is the parallel-edge criterion
      auto unordered = [&](int i) {
        auto [u, v] = g.ends[i];
        return std::make_pair(std::min(u, v), std::max(u, v));
      };
      bool parallel = true;
      for (std::uint32_t b : p.blocks()) {
        int first = std::countr_zero(b);
        for (int i = first + 1; i < rank.ground_size(); ++i) {
          if ((b & (1u << i)) && unordered(i) != unordered(first)) parallel = false;
        }
      }
      CHECK(rank_one_blocks == parallel);
    }
  }
}

TEST_CASE("linear contraction admissibility is pairwise colinearity") {
  SplitMix64 rng(73);
  for (int trial = 0; trial < 40; ++trial) {
    int dim = 2, cols = 3;
    std::vector<std::vector<mpq_class>> columns;
    for (int c = 0; c < cols; ++c) {
      columns.push_back({mpq_class(rng.range(-1, 1)), mpq_class(rng.range(-1, 1))});
    }
    VectorFamily v(dim, columns);
    auto rank = linear_rank(v);
    for (const auto& p : enumerate_partitions(cols)) {
      bool colinear = true;
      for (std::uint32_t b : p.blocks()) {
        for (int i = 0; i < cols && colinear; ++i) {
          for (int j = i + 1; j < cols && colinear; ++j) {
            if (!(b & (1u << i)) || !(b & (1u << j))) continue;
            mpq_class det = columns[i][0] * columns[j][1] -
                            columns[i][1] * columns[j][0];
            if (det != 0) colinear = false;
          }
        }
      }
      CHECK(is_matroid_rank(contract(rank, p)) == colinear);
    }
  }
}

TEST_CASE("subsets of free sets stay free") {
  SplitMix64 rng(71);
  for (int trial = 0; trial < 60; ++trial) {
    auto rank = graphic_rank(random_multigraph(rng, 2 + int(rng.below(3)),
                                               1 + int(rng.below(4))));
    for (std::uint32_t y = 0; y <= rank.full_mask(); ++y) {
      if (rank(y) != std::popcount(y)) continue;
      for (std::uint32_t z = y;; z = (z - 1) & y) {
        CHECK(rank(z) == std::popcount(z));
        if (z == 0) break;
      }
    }
  }
}

TEST_CASE("greedy bases") {
  MultiGraph tri(3, {{1, 2}, {1, 3}, {2, 3}});
  auto rank = graphic_rank(tri);
  CHECK(basis_of(rank, 0) == 0);
  CHECK(basis_of(rank, 0b111) == 0b011);
  CHECK(extend_basis(rank, 0b001, 0b001, 0b111) == 0b010);
  CHECK(extend_basis(rank, 0b111, 0b011, 0b111) == 0);
  CHECK(extend_basis(rank, 0, 0, 0b111) == basis_of(rank, 0b111));
  CHECK_THROWS_WITH_AS(basis_of(BooleanFunction(2, {0, 1, 1, 3}), 0b11),
                       doctest::Contains("NotAMatroid"), Error);
  CHECK_THROWS_WITH_AS(extend_basis(rank, 0b011, 0b001, 0b111),
                       doctest::Contains("NotABasis"), Error);
}

TEST_CASE("greedy bases satisfy the defining equations") {
  SplitMix64 rng(72);
  for (int trial = 0; trial < 80; ++trial) {
    auto rank = graphic_rank(random_multigraph(rng, 2 + int(rng.below(3)),
                                               1 + int(rng.below(4))));
    std::uint32_t full = rank.full_mask();
    for (std::uint32_t y = 0; y <= full; ++y) {
      std::uint32_t b = basis_of(rank, y);
      CHECK((b & ~y) == 0);
      CHECK(rank(b) == std::popcount(b));
      CHECK(rank(b) == rank(y));
      // extension from a sub-basis
      std::uint32_t z = y & (y >> 1);
      std::uint32_t bz = basis_of(rank, z);
      std::uint32_t added = extend_basis(rank, z, bz, y);
      CHECK((added & z) == 0);
      std::uint32_t joint = bz | added;
      CHECK(rank(joint) == std::popcount(joint));
      CHECK(rank(joint) == rank(y));
    }
  }
}

TEST_CASE("modular ranks behave like free families") {
  BooleanFunction rank(3, {0, 1, 1, 2, 1, 2, 2, 3});
  REQUIRE(is_modular(rank));
  for (std::uint32_t y = 0; y <= rank.full_mask(); ++y) {
    CHECK(basis_of(rank, y) == y);
  }
}
