#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <utility>
#include <vector>

#include "boolfun/boolean_function.hpp"

namespace boolfun {

// A set of nonempty subsets of {1..n}, stored as sorted unique bitmasks.
struct Hypergraph {
  Hypergraph(int n, std::vector<std::uint32_t> edges);

  int n;
  std::vector<std::uint32_t> edges;
};

// A multigraph whose edges are indexed by the ground set {1..n}; vertices are
// {1..vcount}. Multiple edges are allowed, loops are not.
struct MultiGraph {
  MultiGraph(int vcount, std::vector<std::pair<int, int>> ends);

  int edge_count() const { return static_cast<int>(ends.size()); }

  int vcount;
  std::vector<std::pair<int, int>> ends;
};

// Exact rational column vectors indexed by the ground set {1..n}.
struct VectorFamily {
  VectorFamily(int dim, std::vector<std::vector<mpq_class>> columns);

  int column_count() const { return static_cast<int>(columns.size()); }

  int dim;
  std::vector<std::vector<mpq_class>> columns;
};

// Indicator of the hyperedges.
BooleanFunction iota(const Hypergraph& h);

// Counts the hyperedges contained in each subset; equals theta(iota(h), 1).
BooleanFunction gamma(const Hypergraph& h);

// The sub-hypergraph keeping the hyperedges inside the vertex subset.
Hypergraph restrict_hypergraph(const Hypergraph& h, std::uint32_t subset);

// Disjoint union; g occupies the low vertex positions.
Hypergraph disjoint_union(const Hypergraph& g, const Hypergraph& h);

// No proper nonempty vertex bipartition separates every hyperedge.
bool is_connected(const Hypergraph& h);

// The three rank axioms: 0 <= f(A) <= |A|, monotone, submodular.
bool is_matroid_rank(const BooleanFunction& f);

// rank(Y) = #vertices touched by the edges of Y minus #components of the
// subgraph made of exactly the edges of Y and their endpoints.
BooleanFunction graphic_rank(const MultiGraph& g);

// True iff no edge subset closes a cycle (every subgraph has rank = size).
bool is_forest(const MultiGraph& g);

// rank(Y) = matrix rank of the columns indexed by Y, by fraction-free
// elimination over the integers after clearing denominators.
BooleanFunction linear_rank(const VectorFamily& v);

// Rank over the prime field GF(p), p prime below 2^31; entries are mapped via
// num * den^-1 mod p.
BooleanFunction linear_rank_gfp(const VectorFamily& v, std::uint32_t p);

// Greedy basis of Y: repeatedly adds the smallest-index element that raises
// the rank by one. Requires a matroid rank function.
std::uint32_t basis_of(const BooleanFunction& f, std::uint32_t y);

// Extends a basis of Z to a basis of Y ⊇ Z using candidates from Y∖Z only;
// returns the added part.
std::uint32_t extend_basis(const BooleanFunction& f, std::uint32_t z,
                           std::uint32_t basis_z, std::uint32_t y);

}  // namespace boolfun
