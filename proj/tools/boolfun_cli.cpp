#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "boolfun/json_io.hpp"
#include "boolfun/rng.hpp"

namespace {

using boolfun::io::json;

json parse_input(const std::string& arg) {
  std::string text;
  if (arg == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    text = buffer.str();
  } else if (!arg.empty() && (arg[0] == '{' || arg[0] == '[')) {
    text = arg;
  } else {
    std::ifstream file(arg);
    if (!file) {
      throw boolfun::Error(boolfun::Errc::InvalidArgument, "cannot open " + arg);
    }
    std::ostringstream buffer;
    buffer << file.rdbuf();
    text = buffer.str();
  }
  json parsed = json::parse(text, nullptr, false);
  if (parsed.is_discarded()) {
    throw boolfun::Error(boolfun::Errc::InvalidArgument, "malformed JSON input");
  }
  return parsed;
}

boolfun::BooleanFunction read_function(const std::string& arg) {
  return boolfun::io::boolean_function_from_json(parse_input(arg));
}

void emit(const json& out, bool pretty) {
  if (pretty) {
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << out.dump() << "\n";
  }
}

boolfun::EquivFamily parse_family(const std::string& name) {
  if (name == "W") return boolfun::EquivFamily::Weak;
  if (name == "S") return boolfun::EquivFamily::Strong;
  throw boolfun::Error(boolfun::Errc::InvalidArgument, "family must be W or S");
}

json classify(const boolfun::BooleanFunction& f) {
  json out;
  out["modular"] = boolfun::is_modular(f);
  out["indecomposable"] =
      f.ground_size() == 0 ? false
                           : boolfun::is_indecomposable(f, boolfun::QPair{1, 1});
  out["rigid"] = boolfun::is_rigid(f);
  out["hyper_rigid"] = boolfun::is_hyper_rigid(f);
  if (f.ground_size() <= boolfun::caps().partition) {
    out["counitary"] = boolfun::is_counitary(f);
  } else {
    out["counitary"] = nullptr;
  }
  if (f.ground_size() <= boolfun::caps().bool_max) {
    out["in_bool_max"] = boolfun::in_bool_max(f);
  } else {
    out["in_bool_max"] = nullptr;
  }
  out["is_matroid_rank"] = boolfun::is_matroid_rank(f);
  return out;
}

// Axioms a family is expected to satisfy; the rest are informative.
bool required_axiom(boolfun::EquivFamily family, const std::string& axiom) {
  if (axiom == "star1-condition" || axiom == "epsilonDelta-compat") return true;
  if (family == boolfun::EquivFamily::Weak) {
    return axiom == "Delta-condition" || axiom == "right-counit";
  }
  return axiom == "delta-condition" || axiom == "epsilon-condition" ||
         axiom == "counit";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact algebra of integer-valued boolean functions on finite sets"};
  app.require_subcommand(1);
  app.fallthrough();
  bool pretty = false;
  app.add_flag("--pretty", pretty, "indent JSON output");

  std::string in_a, in_b, subset_arg, partition_arg, family_arg = "S";
  std::string sample_arg, field_arg = "q";
  std::int64_t q1 = 1, q2 = 1, q = 0, colors = 1;
  std::uint64_t seed = 0;
  int random_count = 0, max_n = 4;
  bool unchecked = false;

  auto* product = app.add_subcommand("product", "star product of two functions");
  product->add_option("f", in_a)->required();
  product->add_option("g", in_b)->required();
  product->add_option("--q1", q1);
  product->add_option("--q2", q2);

  auto* theta_cmd = app.add_subcommand("theta", "theta_q transform");
  theta_cmd->add_option("f", in_a)->required();
  theta_cmd->add_option("--q", q)->required();

  auto* restrict_cmd = app.add_subcommand("restrict", "restrict to a subset");
  restrict_cmd->add_option("f", in_a)->required();
  restrict_cmd->add_option("--subset", subset_arg)->required();

  auto* contract_cmd = app.add_subcommand("contract", "contract by a partition");
  contract_cmd->add_option("f", in_a)->required();
  contract_cmd->add_option("--partition", partition_arg)->required();

  auto* restrict_by_cmd =
      app.add_subcommand("restrict-by", "restrict by a partition");
  restrict_by_cmd->add_option("f", in_a)->required();
  restrict_by_cmd->add_option("--partition", partition_arg)->required();

  auto* decompose_cmd =
      app.add_subcommand("decompose", "split into indecomposable components");
  decompose_cmd->add_option("f", in_a)->required();
  decompose_cmd->add_option("--q1", q1);
  decompose_cmd->add_option("--q2", q2);

  auto* classify_cmd = app.add_subcommand("classify", "classification predicates");
  classify_cmd->add_option("f", in_a)->required();

  auto* weak_cmd = app.add_subcommand("weak-equivs", "weak equivalence family");
  weak_cmd->add_option("f", in_a)->required();

  auto* strong_cmd = app.add_subcommand("strong-equivs", "strong equivalence family");
  strong_cmd->add_option("f", in_a)->required();

  auto* delta_cmd =
      app.add_subcommand("delta", "contraction-restriction coproduct");
  delta_cmd->add_option("f", in_a)->required();
  delta_cmd->add_option("--family", family_arg)->required();

  auto* phi_cmd = app.add_subcommand("phi", "polynomial invariant");
  phi_cmd->add_option("f", in_a)->required();

  auto* phi_count_cmd =
      app.add_subcommand("phi-count", "coloring-count oracle for the invariant");
  phi_count_cmd->add_option("f", in_a)->required();
  phi_count_cmd->add_option("--colors", colors)->required();

  auto* antipode_cmd = app.add_subcommand("antipode", "antipode as a formal sum");
  antipode_cmd->add_option("f", in_a)->required();
  antipode_cmd->add_flag("--unchecked", unchecked,
                         "skip the maximal-subspecies membership check");

  auto* from_hg = app.add_subcommand("from-hypergraph", "hyperedge-count function");
  from_hg->add_option("hypergraph", in_a)->required();

  auto* from_graph = app.add_subcommand("from-graph", "graphic matroid rank");
  from_graph->add_option("graph", in_a)->required();

  auto* from_vectors = app.add_subcommand("from-vectors", "linear matroid rank");
  from_vectors->add_option("vectors", in_a)->required();
  from_vectors->add_option("--field", field_arg, "q or gf:<p>");

  auto* chromatic_cmd = app.add_subcommand("chromatic", "chromatic polynomial");
  chromatic_cmd->add_option("hypergraph", in_a)->required();

  auto* basis_cmd = app.add_subcommand("basis", "greedy basis of a subset");
  basis_cmd->add_option("f", in_a)->required();
  basis_cmd->add_option("--subset", subset_arg)->required();

  auto* verify_cmd = app.add_subcommand("verify-axioms", "structural axiom checks");
  verify_cmd->add_option("--family", family_arg)->required();
  verify_cmd->add_option("--sample", sample_arg, "path to a JSON array of functions");
  verify_cmd->add_option("--random", random_count, "number of random samples");
  verify_cmd->add_option("--max-n", max_n);
  verify_cmd->add_option("--seed", seed);

  auto* compat_cmd = app.add_subcommand("compat-report", "invariant compatibility");
  compat_cmd->add_option("f", in_a)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    namespace io = boolfun::io;
    if (product->parsed()) {
      emit(io::to_json(star_product(read_function(in_a), read_function(in_b),
                                    boolfun::QPair{q1, q2})),
           pretty);
    } else if (theta_cmd->parsed()) {
      emit(io::to_json(theta(read_function(in_a), q)), pretty);
    } else if (restrict_cmd->parsed()) {
      auto f = read_function(in_a);
      auto mask = io::subset_from_json(parse_input(subset_arg), f.ground_size());
      emit(io::to_json(restrict_to(f, mask)), pretty);
    } else if (contract_cmd->parsed()) {
      auto f = read_function(in_a);
      auto p = io::set_partition_from_json(parse_input(partition_arg));
      emit(io::to_json(contract(f, p)), pretty);
    } else if (restrict_by_cmd->parsed()) {
      auto f = read_function(in_a);
      auto p = io::set_partition_from_json(parse_input(partition_arg));
      emit(io::to_json(restrict_by(f, p)), pretty);
    } else if (decompose_cmd->parsed()) {
      emit(io::to_json(decompose(read_function(in_a), boolfun::QPair{q1, q2})),
           pretty);
    } else if (classify_cmd->parsed()) {
      emit(classify(read_function(in_a)), pretty);
    } else if (weak_cmd->parsed()) {
      json out = json::array();
      for (const auto& p : weak_equivalences(read_function(in_a))) {
        out.push_back(io::to_json(p));
      }
      emit(json{{"partitions", out}}, pretty);
    } else if (strong_cmd->parsed()) {
      json out = json::array();
      for (const auto& p : strong_equivalences(read_function(in_a))) {
        out.push_back(io::to_json(p));
      }
      emit(json{{"partitions", out}}, pretty);
    } else if (delta_cmd->parsed()) {
      auto f = read_function(in_a);
      auto family = parse_family(family_arg);
      emit(io::to_json(family == boolfun::EquivFamily::Weak
                           ? coproduct_deltaW(f)
                           : coproduct_deltaS(f)),
           pretty);
    } else if (phi_cmd->parsed()) {
      emit(io::to_json(phi(read_function(in_a))), pretty);
    } else if (phi_count_cmd->parsed()) {
      emit(json{{"count", phi_count(read_function(in_a), colors)}}, pretty);
    } else if (antipode_cmd->parsed()) {
      emit(io::to_json(antipode(read_function(in_a), !unchecked)), pretty);
    } else if (from_hg->parsed()) {
      emit(io::to_json(gamma(io::hypergraph_from_json(parse_input(in_a)))), pretty);
    } else if (from_graph->parsed()) {
      emit(io::to_json(graphic_rank(io::multigraph_from_json(parse_input(in_a)))),
           pretty);
    } else if (from_vectors->parsed()) {
      auto v = io::vector_family_from_json(parse_input(in_a));
      if (field_arg == "q") {
        emit(io::to_json(linear_rank(v)), pretty);
      } else if (field_arg.rfind("gf:", 0) == 0) {
        unsigned long p = std::stoul(field_arg.substr(3));
        emit(io::to_json(linear_rank_gfp(v, static_cast<std::uint32_t>(p))), pretty);
      } else {
        throw boolfun::Error(boolfun::Errc::InvalidArgument,
                             "field must be q or gf:<p>");
      }
    } else if (chromatic_cmd->parsed()) {
      emit(io::to_json(
               chromatic_polynomial(io::hypergraph_from_json(parse_input(in_a)))),
           pretty);
    } else if (basis_cmd->parsed()) {
      auto f = read_function(in_a);
      auto mask = io::subset_from_json(parse_input(subset_arg), f.ground_size());
      emit(json{{"basis", io::subset_to_json(basis_of(f, mask))}}, pretty);
    } else if (verify_cmd->parsed()) {
      auto family = parse_family(family_arg);
      std::vector<boolfun::BooleanFunction> sample;
      json header;
      if (!sample_arg.empty()) {
        json input = parse_input(sample_arg);
        if (!input.is_array()) {
          throw boolfun::Error(boolfun::Errc::InvalidArgument,
                               "sample must be a JSON array of functions");
        }
        for (const auto& jf : input) {
          sample.push_back(io::boolean_function_from_json(jf));
        }
      } else if (random_count > 0) {
        if (max_n < 1 || max_n > boolfun::caps().canonical) {
          throw boolfun::Error(boolfun::Errc::InvalidArgument,
                               "max-n must lie in 1..canonicalization cap");
        }
        boolfun::SplitMix64 rng(seed);
        for (int i = 0; i < random_count; ++i) {
          int n = 1 + static_cast<int>(rng.below(std::uint64_t(max_n)));
          std::vector<std::int64_t> values(std::size_t(1) << n, 0);
          for (std::size_t m = 1; m < values.size(); ++m) values[m] = rng.range(-2, 2);
          sample.emplace_back(n, std::move(values));
        }
        header["rng"] = "splitmix64";
        header["seed"] = seed;
        header["count"] = random_count;
        header["max_n"] = max_n;
      } else {
        throw boolfun::Error(boolfun::Errc::InvalidArgument,
                             "need --sample or --random");
      }
      auto report = verify_axioms(sample, family);
      json entries = json::array();
      bool failed = false;
      for (const auto& check : report) {
        entries.push_back(io::to_json(check));
        if (!check.pass && required_axiom(family, check.axiom)) failed = true;
      }
      header["family"] = family_arg;
      header["report"] = entries;
      emit(header, pretty);
      return failed ? 2 : 0;
    } else if (compat_cmd->parsed()) {
      emit(io::to_json(phi_compat_report(read_function(in_a))), pretty);
    }
  } catch (const boolfun::Error& err) {
    json out{{"error", boolfun::to_string(err.code())}, {"detail", err.detail()}};
    std::cerr << out.dump() << "\n";
    return 1;
  } catch (const std::exception& err) {
    json out{{"error", "InvalidArgument"}, {"detail", err.what()}};
    std::cerr << out.dump() << "\n";
    return 1;
  }
  return 0;
}
