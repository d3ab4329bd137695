#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "boolfun/invariants.hpp"
#include "boolfun/json_io.hpp"

namespace py = pybind11;
using namespace boolfun;

namespace {

py::int_ to_py(const mpz_class& v) {
  return py::reinterpret_steal<py::int_>(
      PyLong_FromString(v.get_str().c_str(), nullptr, 10));
}

std::uint32_t mask_from_elements(const std::vector<int>& elements, int n) {
  std::uint32_t mask = 0;
  for (int x : elements) {
    if (x < 1 || x > n) throw Error(Errc::SubsetOutOfRange, "element out of range");
    mask |= (std::uint32_t(1) << (x - 1));
  }
  return mask;
}

std::vector<int> elements_from_mask(std::uint32_t mask) {
  std::vector<int> out;
  for (int i = 0; i < 32; ++i) {
    if (mask & (1u << i)) out.push_back(i + 1);
  }
  return out;
}

py::list poly_to_list(const Polynomial& p) {
  py::list out;
  for (const auto& c : p.coeffs()) out.append(to_py(c));
  return out;
}

py::list bivariate_to_list(const BivariatePolynomial& p) {
  py::list rows;
  for (const auto& row : p.coeffs()) {
    py::list jrow;
    for (const auto& c : row) jrow.append(to_py(c));
    rows.append(jrow);
  }
  return rows;
}

py::list formal_sum_to_list(const FormalSum& s) {
  py::list out;
  for (const auto& [fn, c] : s.terms()) out.append(py::make_tuple(to_py(c), fn));
  return out;
}

QPair qpair(std::int64_t q1, std::int64_t q2) { return QPair{q1, q2}; }

}  // namespace

PYBIND11_MODULE(_boolfun, m) {
  m.doc() = "exact algebra of integer-valued boolean functions on finite sets";

  py::register_exception<Error>(m, "BoolfunError");

  py::class_<BooleanFunction>(m, "BooleanFunction")
      .def(py::init<>())
      .def(py::init<int, std::vector<std::int64_t>>(), py::arg("n"), py::arg("values"))
      .def_property_readonly("n", &BooleanFunction::ground_size)
      .def_property_readonly("values",
                             [](const BooleanFunction& f) { return f.values(); })
      .def("__call__",
           [](const BooleanFunction& f, const std::vector<int>& subset) {
             return f(mask_from_elements(subset, f.ground_size()));
           })
      .def(py::self == py::self)
      .def("__repr__", [](const BooleanFunction& f) {
        return io::to_json(f).dump();
      });

  py::class_<SetPartition>(m, "SetPartition")
      .def(py::init<int, std::vector<int>>(), py::arg("n"), py::arg("rgs"))
      .def_property_readonly("n", &SetPartition::ground_size)
      .def_property_readonly("rgs", [](const SetPartition& p) { return p.rgs(); })
      .def_property_readonly("blocks",
                             [](const SetPartition& p) {
                               std::vector<std::vector<int>> out;
                               for (std::uint32_t b : p.blocks()) {
                                 out.push_back(elements_from_mask(b));
                               }
                               return out;
                             })
      .def(py::self == py::self)
      .def("__repr__", [](const SetPartition& p) { return io::to_json(p).dump(); });

  py::class_<Hypergraph>(m, "Hypergraph")
      .def(py::init([](int n, const std::vector<std::vector<int>>& edges) {
             std::vector<std::uint32_t> masks;
             for (const auto& e : edges) masks.push_back(mask_from_elements(e, n));
             return Hypergraph(n, std::move(masks));
           }),
           py::arg("n"), py::arg("edges"))
      .def_property_readonly("n", [](const Hypergraph& h) { return h.n; })
      .def_property_readonly("edges", [](const Hypergraph& h) {
        std::vector<std::vector<int>> out;
        for (std::uint32_t e : h.edges) out.push_back(elements_from_mask(e));
        return out;
      });

  py::class_<MultiGraph>(m, "MultiGraph")
      .def(py::init<int, std::vector<std::pair<int, int>>>(), py::arg("vcount"),
           py::arg("ends"))
      .def_property_readonly("vcount", [](const MultiGraph& g) { return g.vcount; })
      .def_property_readonly("ends", [](const MultiGraph& g) { return g.ends; });

  m.def("star_product",
        [](const BooleanFunction& f, const BooleanFunction& g, std::int64_t q1,
           std::int64_t q2) { return star_product(f, g, qpair(q1, q2)); },
        py::arg("f"), py::arg("g"), py::arg("q1") = 1, py::arg("q2") = 1);
  m.def("theta", [](const BooleanFunction& f, std::int64_t q) { return theta(f, q); },
        py::arg("f"), py::arg("q"));
  m.def("f_lambda",
        [](int n, std::int64_t lam, std::int64_t q1, std::int64_t q2) {
          return f_lambda(n, lam, qpair(q1, q2));
        },
        py::arg("n"), py::arg("lambda_"), py::arg("q1"), py::arg("q2"));
  m.def("restrict",
        [](const BooleanFunction& f, const std::vector<int>& subset) {
          return restrict_to(f, mask_from_elements(subset, f.ground_size()));
        },
        py::arg("f"), py::arg("subset"));
  m.def("canonical_form", &canonical_form, py::arg("f"));

  m.def("enumerate_partitions", &enumerate_partitions, py::arg("n"));
  m.def("refines", &refines, py::arg("p"), py::arg("q"));
  m.def("induced_partition", &induced_partition, py::arg("p"), py::arg("q"));
  m.def("contract", &contract, py::arg("f"), py::arg("p"));
  m.def("restrict_by", &restrict_by, py::arg("f"), py::arg("p"));

  m.def("is_modular", &is_modular, py::arg("f"));
  m.def("is_indecomposable",
        [](const BooleanFunction& f, std::int64_t q1, std::int64_t q2) {
          return is_indecomposable(f, qpair(q1, q2));
        },
        py::arg("f"), py::arg("q1") = 1, py::arg("q2") = 1);
  m.def("decompose",
        [](const BooleanFunction& f, std::int64_t q1, std::int64_t q2) {
          std::vector<std::vector<int>> out;
          for (std::uint32_t b : decompose(f, qpair(q1, q2)).blocks) {
            out.push_back(elements_from_mask(b));
          }
          return out;
        },
        py::arg("f"), py::arg("q1") = 1, py::arg("q2") = 1);
  m.def("component_partition", &component_partition, py::arg("f"));
  m.def("ic", &ic, py::arg("f"));
  m.def("commutes",
        [](const BooleanFunction& f, const BooleanFunction& g, std::int64_t q1,
           std::int64_t q2) { return commutes(f, g, qpair(q1, q2)); },
        py::arg("f"), py::arg("g"), py::arg("q1") = 1, py::arg("q2") = 1);

  m.def("weak_equivalences", &weak_equivalences, py::arg("f"));
  m.def("strong_equivalences", &strong_equivalences, py::arg("f"));
  m.def("coproduct_delta",
        [](const BooleanFunction& f) {
          py::list out;
          FormalTensorSum sum = coproduct_delta(f);
          for (const auto& [key, c] : sum.terms()) {
            out.append(py::make_tuple(to_py(c), key.first, key.second));
          }
          return out;
        },
        py::arg("f"));
  m.def("coproduct_deltaW",
        [](const BooleanFunction& f) {
          py::list out;
          FormalTensorSum sum = coproduct_deltaW(f);
          for (const auto& [key, c] : sum.terms()) {
            out.append(py::make_tuple(to_py(c), key.first, key.second));
          }
          return out;
        },
        py::arg("f"));
  m.def("coproduct_deltaS",
        [](const BooleanFunction& f) {
          py::list out;
          FormalTensorSum sum = coproduct_deltaS(f);
          for (const auto& [key, c] : sum.terms()) {
            out.append(py::make_tuple(to_py(c), key.first, key.second));
          }
          return out;
        },
        py::arg("f"));
  m.def("is_counitary", &is_counitary, py::arg("f"));
  m.def("is_rigid", &is_rigid, py::arg("f"));
  m.def("is_hyper_rigid", &is_hyper_rigid, py::arg("f"));
  m.def("in_bool_max", &in_bool_max, py::arg("f"));

  m.def("iota", [](const Hypergraph& h) { return iota(h); }, py::arg("h"));
  m.def("gamma", [](const Hypergraph& h) { return boolfun::gamma(h); }, py::arg("h"));
  m.def("is_connected", &is_connected, py::arg("h"));
  m.def("is_matroid_rank", &is_matroid_rank, py::arg("f"));
  m.def("graphic_rank", &graphic_rank, py::arg("g"));
  m.def("is_forest", &is_forest, py::arg("g"));
  m.def("linear_rank",
        [](int dim, const std::vector<std::vector<std::pair<std::string, std::string>>>&
                        columns) {
          std::vector<std::vector<mpq_class>> cols;
          for (const auto& col : columns) {
            std::vector<mpq_class> entries;
            for (const auto& [num, den] : col) {
              mpq_class value{mpz_class(num), mpz_class(den)};
              value.canonicalize();
              entries.push_back(std::move(value));
            }
            cols.push_back(std::move(entries));
          }
          return linear_rank(VectorFamily(dim, std::move(cols)));
        },
        py::arg("dim"), py::arg("columns"));
  m.def("basis_of",
        [](const BooleanFunction& f, const std::vector<int>& subset) {
          return elements_from_mask(
              basis_of(f, mask_from_elements(subset, f.ground_size())));
        },
        py::arg("f"), py::arg("subset"));
  m.def("extend_basis",
        [](const BooleanFunction& f, const std::vector<int>& z,
           const std::vector<int>& basis_z, const std::vector<int>& y) {
          int n = f.ground_size();
          return elements_from_mask(extend_basis(f, mask_from_elements(z, n),
                                                 mask_from_elements(basis_z, n),
                                                 mask_from_elements(y, n)));
        },
        py::arg("f"), py::arg("z"), py::arg("basis_z"), py::arg("y"));

  m.def("phi", [](const BooleanFunction& f) { return poly_to_list(phi(f)); },
        py::arg("f"));
  m.def("phi_count", &phi_count, py::arg("f"), py::arg("colors"));
  m.def("chromatic_polynomial",
        [](const Hypergraph& h) { return poly_to_list(chromatic_polynomial(h)); },
        py::arg("h"));
  m.def("mu", [](const BooleanFunction& f) { return to_py(mu(f)); }, py::arg("f"));
  m.def("antipode",
        [](const BooleanFunction& f, bool checked) {
          return formal_sum_to_list(antipode(f, checked));
        },
        py::arg("f"), py::arg("checked") = true);
  m.def("phi_compat_report",
        [](const BooleanFunction& f) {
          auto report = phi_compat_report(f);
          py::dict out;
          out["counitary"] = report.counitary;
          out["phi_deltaW"] = bivariate_to_list(report.phi_deltaW);
          out["phi_deltaS"] = bivariate_to_list(report.phi_deltaS);
          out["delta_phi"] = bivariate_to_list(report.delta_phi);
          out["agree_W_delta"] = report.agree_W_delta;
          out["agree_S_delta"] = report.agree_S_delta;
          out["agree_W_S"] = report.agree_W_S;
          return out;
        },
        py::arg("f"));
}
