#pragma once

#include <cstdint>

#include "boolfun/coalgebra.hpp"
#include "boolfun/decompose.hpp"
#include "boolfun/instances.hpp"
#include "boolfun/invariants.hpp"
#include "json.hpp"

namespace boolfun::io {

using json = nlohmann::json;

// Subsets travel as arrays of 1-based elements.
json subset_to_json(std::uint32_t mask);
std::uint32_t subset_from_json(const json& j, int n);

json to_json(const BooleanFunction& f);
BooleanFunction boolean_function_from_json(const json& j);

json to_json(const SetPartition& p);
SetPartition set_partition_from_json(const json& j);

json to_json(const Hypergraph& h);
Hypergraph hypergraph_from_json(const json& j);

json to_json(const MultiGraph& g);
MultiGraph multigraph_from_json(const json& j);

json to_json(const VectorFamily& v);
VectorFamily vector_family_from_json(const json& j);

json to_json(const Polynomial& p);
Polynomial polynomial_from_json(const json& j);

json to_json(const BivariatePolynomial& p);
BivariatePolynomial bivariate_from_json(const json& j);

json to_json(const Decomposition& d);
json to_json(const FormalSum& s);
json to_json(const FormalTensorSum& s);
json to_json(const AxiomCheck& c);
json to_json(const PhiCompatReport& r);

}  // namespace boolfun::io
