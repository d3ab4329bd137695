#include "boolfun/json_io.hpp"

#include <string>

namespace boolfun::io {

namespace {

void expect(bool ok, const std::string& what) {
  if (!ok) throw Error(Errc::InvalidArgument, what);
}

mpz_class mpz_from_json(const json& j, const std::string& what) {
  if (j.is_number_integer()) return mpz_class(j.get<std::int64_t>());
  expect(j.is_string(), what + " must be an integer or a decimal string");
  try {
    return mpz_class(j.get<std::string>());
  } catch (const std::invalid_argument&) {
    throw Error(Errc::InvalidArgument, what + " is not a decimal integer");
  }
}

json mpz_to_json(const mpz_class& v) { return v.get_str(); }

}  // namespace

json subset_to_json(std::uint32_t mask) {
  json out = json::array();
  for (int i = 0; i < 32; ++i) {
    if (mask & (1u << i)) out.push_back(i + 1);
  }
  return out;
}

std::uint32_t subset_from_json(const json& j, int n) {
  expect(j.is_array(), "subset must be an array of elements");
  std::uint32_t mask = 0;
  for (const auto& e : j) {
    expect(e.is_number_integer(), "subset elements must be integers");
    std::int64_t x = e.get<std::int64_t>();
    if (x < 1 || x > n) {
      throw Error(Errc::SubsetOutOfRange, "element " + std::to_string(x) +
                                              " is outside the ground set");
    }
    mask |= (std::uint32_t(1) << (x - 1));
  }
  return mask;
}

json to_json(const BooleanFunction& f) {
  return json{{"n", f.ground_size()}, {"values", f.values()}};
}

BooleanFunction boolean_function_from_json(const json& j) {
  expect(j.is_object() && j.contains("n") && j.contains("values"),
         "boolean function needs fields n and values");
  expect(j["n"].is_number_integer(), "n must be an integer");
  expect(j["values"].is_array(), "values must be an array");
  std::vector<std::int64_t> values;
  values.reserve(j["values"].size());
  for (const auto& v : j["values"]) {
    expect(v.is_number_integer(), "values must be integers");
    values.push_back(v.get<std::int64_t>());
  }
  return BooleanFunction(j["n"].get<int>(), std::move(values));
}

json to_json(const SetPartition& p) {
  return json{{"n", p.ground_size()}, {"rgs", p.rgs()}};
}

SetPartition set_partition_from_json(const json& j) {
  expect(j.is_object() && j.contains("n") && j.contains("rgs"),
         "partition needs fields n and rgs");
  expect(j["rgs"].is_array(), "rgs must be an array");
  std::vector<int> rgs;
  for (const auto& v : j["rgs"]) {
    expect(v.is_number_integer(), "rgs entries must be integers");
    rgs.push_back(v.get<int>());
  }
  return SetPartition(j["n"].get<int>(), std::move(rgs));
}

json to_json(const Hypergraph& h) {
  json edges = json::array();
  for (std::uint32_t e : h.edges) edges.push_back(subset_to_json(e));
  return json{{"n", h.n}, {"edges", edges}};
}

Hypergraph hypergraph_from_json(const json& j) {
  expect(j.is_object() && j.contains("n") && j.contains("edges"),
         "hypergraph needs fields n and edges");
  int n = j["n"].get<int>();
  expect(j["edges"].is_array(), "edges must be an array");
  std::vector<std::uint32_t> edges;
  for (const auto& e : j["edges"]) edges.push_back(subset_from_json(e, n));
  return Hypergraph(n, std::move(edges));
}

json to_json(const MultiGraph& g) {
  json ends = json::array();
  for (const auto& [u, v] : g.ends) ends.push_back(json::array({u, v}));
  return json{{"vcount", g.vcount}, {"ends", ends}};
}

MultiGraph multigraph_from_json(const json& j) {
  expect(j.is_object() && j.contains("vcount") && j.contains("ends"),
         "multigraph needs fields vcount and ends");
  expect(j["ends"].is_array(), "ends must be an array");
  std::vector<std::pair<int, int>> ends;
  for (const auto& e : j["ends"]) {
    expect(e.is_array() && e.size() == 2, "each edge needs two endpoints");
    ends.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  return MultiGraph(j["vcount"].get<int>(), std::move(ends));
}

json to_json(const VectorFamily& v) {
  json columns = json::array();
  for (const auto& col : v.columns) {
    json jcol = json::array();
    for (const auto& entry : col) {
      jcol.push_back(json::array(
          {entry.get_num().get_str(), entry.get_den().get_str()}));
    }
    columns.push_back(jcol);
  }
  return json{{"dim", v.dim}, {"columns", columns}};
}

VectorFamily vector_family_from_json(const json& j) {
  expect(j.is_object() && j.contains("dim") && j.contains("columns"),
         "vector family needs fields dim and columns");
  int dim = j["dim"].get<int>();
  expect(j["columns"].is_array(), "columns must be an array");
  std::vector<std::vector<mpq_class>> columns;
  for (const auto& jcol : j["columns"]) {
    expect(jcol.is_array(), "each column must be an array");
    std::vector<mpq_class> col;
    for (const auto& entry : jcol) {
      expect(entry.is_array() && entry.size() == 2,
             "each entry must be a [num, den] pair");
      mpz_class num = mpz_from_json(entry[0], "numerator");
      mpz_class den = mpz_from_json(entry[1], "denominator");
      expect(den != 0, "denominator must be nonzero");
      mpq_class value(num, den);
      value.canonicalize();
      col.push_back(std::move(value));
    }
    columns.push_back(std::move(col));
  }
  return VectorFamily(dim, std::move(columns));
}

json to_json(const Polynomial& p) {
  json coeffs = json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(mpz_to_json(c));
  return json{{"coeffs", coeffs}};
}

Polynomial polynomial_from_json(const json& j) {
  expect(j.is_object() && j.contains("coeffs"), "polynomial needs field coeffs");
  expect(j["coeffs"].is_array(), "coeffs must be an array");
  std::vector<mpz_class> coeffs;
  for (const auto& c : j["coeffs"]) coeffs.push_back(mpz_from_json(c, "coefficient"));
  return Polynomial(std::move(coeffs));
}

json to_json(const BivariatePolynomial& p) {
  json rows = json::array();
  for (const auto& row : p.coeffs()) {
    json jrow = json::array();
    for (const auto& c : row) jrow.push_back(mpz_to_json(c));
    rows.push_back(jrow);
  }
  return json{{"coeffs", rows}};
}

BivariatePolynomial bivariate_from_json(const json& j) {
  expect(j.is_object() && j.contains("coeffs"), "polynomial needs field coeffs");
  expect(j["coeffs"].is_array(), "coeffs must be an array");
  std::vector<std::vector<mpz_class>> rows;
  for (const auto& jrow : j["coeffs"]) {
    expect(jrow.is_array(), "each row must be an array");
    std::vector<mpz_class> row;
    for (const auto& c : jrow) row.push_back(mpz_from_json(c, "coefficient"));
    rows.push_back(std::move(row));
  }
  return BivariatePolynomial(std::move(rows));
}

json to_json(const Decomposition& d) {
  json blocks = json::array();
  for (std::uint32_t b : d.blocks) blocks.push_back(subset_to_json(b));
  return json{{"q1", d.q.q1}, {"q2", d.q.q2}, {"blocks", blocks}};
}

json to_json(const FormalSum& s) {
  json terms = json::array();
  for (const auto& [fn, c] : s.terms()) {
    terms.push_back(json{{"coeff", mpz_to_json(c)}, {"fn", to_json(fn)}});
  }
  return json{{"terms", terms}};
}

json to_json(const FormalTensorSum& s) {
  json terms = json::array();
  for (const auto& [key, c] : s.terms()) {
    terms.push_back(json{{"coeff", mpz_to_json(c)},
                         {"left", to_json(key.first)},
                         {"right", to_json(key.second)}});
  }
  return json{{"terms", terms}};
}

json to_json(const AxiomCheck& c) {
  json out{{"input", c.input},
           {"axiom", c.axiom},
           {"family", std::string(to_string(c.family))},
           {"pass", c.pass}};
  if (!c.pass) {
    json witness;
    json partitions = json::array();
    for (const auto& p : c.witness) partitions.push_back(to_json(p));
    witness["partitions"] = partitions;
    if (!c.note.empty()) witness["note"] = c.note;
    out["witness"] = witness;
  }
  return out;
}

json to_json(const PhiCompatReport& r) {
  return json{{"counitary", r.counitary},
              {"phi_deltaW", to_json(r.phi_deltaW)},
              {"phi_deltaS", to_json(r.phi_deltaS)},
              {"delta_phi", to_json(r.delta_phi)},
              {"agree_W_delta", r.agree_W_delta},
              {"agree_S_delta", r.agree_S_delta},
              {"agree_W_S", r.agree_W_S}};
}

}  // namespace boolfun::io
