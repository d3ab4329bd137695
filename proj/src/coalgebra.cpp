#include "boolfun/coalgebra.hpp"

#include <bit>
#include <mutex>

namespace boolfun {

FormalSum FormalSum::of(const BooleanFunction& f) {
  FormalSum s;
  s.add(f, 1);
  return s;
}

void FormalSum::add(const BooleanFunction& f, const mpz_class& coeff) {
  if (coeff == 0) return;
  BooleanFunction key = canonical_form(f);
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(std::move(key), coeff);
  } else {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

FormalSum& FormalSum::operator+=(const FormalSum& other) {
  for (const auto& [fn, c] : other.terms_) add(fn, c);
  return *this;
}

FormalSum& FormalSum::operator*=(const mpz_class& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [fn, c] : terms_) c *= scalar;
  return *this;
}

FormalSum star1(const FormalSum& a, const FormalSum& b) {
  FormalSum out;
  for (const auto& [fa, ca] : a.terms()) {
    for (const auto& [fb, cb] : b.terms()) {
      out.add(star_product(fa, fb, QPair{1, 1}), ca * cb);
    }
  }
  return out;
}

void FormalTensorSum::add(const BooleanFunction& left, const BooleanFunction& right,
                          const mpz_class& coeff) {
  if (coeff == 0) return;
  Key key{canonical_form(left), canonical_form(right)};
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(std::move(key), coeff);
  } else {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

FormalTensorSum& FormalTensorSum::operator+=(const FormalTensorSum& other) {
  for (const auto& [key, c] : other.terms_) add(key.first, key.second, c);
  return *this;
}

FormalTensorSum FormalTensorSum::swapped() const {
  FormalTensorSum out;
  for (const auto& [key, c] : terms_) out.add(key.second, key.first, c);
  return out;
}

FormalSum FormalTensorSum::apply_left(
    const std::function<mpz_class(const BooleanFunction&)>& fn) const {
  FormalSum out;
  for (const auto& [key, c] : terms_) out.add(key.second, c * fn(key.first));
  return out;
}

FormalSum FormalTensorSum::apply_right(
    const std::function<mpz_class(const BooleanFunction&)>& fn) const {
  FormalSum out;
  for (const auto& [key, c] : terms_) out.add(key.first, c * fn(key.second));
  return out;
}

int counit_restriction(const BooleanFunction& f) {
  return f.ground_size() == 0 ? 1 : 0;
}

int counit_contraction(const BooleanFunction& f) { return is_modular(f) ? 1 : 0; }

FormalTensorSum coproduct_delta(const BooleanFunction& f) {
  if (f.ground_size() > caps().canonical) {
    throw Error(Errc::GroundSetTooLarge, "coproduct is capped by canonicalization");
  }
  FormalTensorSum out;
  std::uint32_t full = f.full_mask();
  for (std::uint32_t s = 0;; ++s) {
    out.add(restrict_to(f, s), restrict_to(f, full & ~s), 1);
    if (s == full) break;
  }
  return out;
}

namespace {

// indecomposable[m] for every nonempty subset m of the ground set.
std::vector<bool> indecomposable_table(const BooleanFunction& f) {
  std::vector<bool> table(f.table_size(), false);
  for (std::uint32_t m = 1; m < table.size(); ++m) {
    table[m] = restriction_indecomposable(f, m, QPair{1, 1});
  }
  return table;
}

bool all_blocks_indecomposable(const SetPartition& p, const std::vector<bool>& table) {
  for (std::uint32_t b : p.blocks()) {
    if (!table[b]) return false;
  }
  return true;
}

}  // namespace

std::vector<SetPartition> weak_equivalences(const BooleanFunction& f) {
  if (f.ground_size() > caps().partition) {
    throw Error(Errc::GroundSetTooLarge, "equivalence families are capped with partitions");
  }
  auto table = indecomposable_table(f);
  std::vector<SetPartition> out;
  for (auto& p : enumerate_partitions(f.ground_size())) {
    if (all_blocks_indecomposable(p, table)) out.push_back(std::move(p));
  }
  return out;
}

std::vector<SetPartition> strong_equivalences(const BooleanFunction& f) {
  std::vector<SetPartition> out;
  int components = ic(f);
  for (auto& p : weak_equivalences(f)) {
    if (ic(contract(f, p)) == components) out.push_back(std::move(p));
  }
  return out;
}

namespace {

FormalTensorSum contraction_coproduct(const BooleanFunction& f,
                                      const std::vector<SetPartition>& family) {
  if (f.ground_size() > caps().canonical) {
    throw Error(Errc::GroundSetTooLarge, "coproduct is capped by canonicalization");
  }
  FormalTensorSum out;
  for (const auto& p : family) out.add(contract(f, p), restrict_by(f, p), 1);
  return out;
}

}  // namespace

FormalTensorSum coproduct_deltaW(const BooleanFunction& f) {
  return contraction_coproduct(f, weak_equivalences(f));
}

FormalTensorSum coproduct_deltaS(const BooleanFunction& f) {
  return contraction_coproduct(f, strong_equivalences(f));
}

bool is_counitary(const BooleanFunction& f) {
  return weak_equivalences(f).size() == strong_equivalences(f).size();
}

namespace {

// Restriction of f to `within` splits additively along (part, within∖part)
// on every pair of subsets.
bool fully_additive(const BooleanFunction& f, std::uint32_t within, std::uint32_t part) {
  for (std::uint32_t a = within;; a = (a - 1) & within) {
    __int128 sum = static_cast<__int128>(f(a & part)) + f(a & ~part);
    if (sum != static_cast<__int128>(f(a))) return false;
    if (a == 0) break;
  }
  return true;
}

bool component_rigid(const BooleanFunction& f, std::uint32_t component) {
  // Pairs (A, B) of disjoint nonempty subsets of the component.
  for (std::uint32_t a = component; a != 0; a = (a - 1) & component) {
    std::uint32_t rest = component & ~a;
    for (std::uint32_t b = rest; b != 0; b = (b - 1) & rest) {
      __int128 sum = static_cast<__int128>(f(a)) + f(b);
      if (sum != static_cast<__int128>(f(a | b))) continue;
      if (!fully_additive(f, a | b, a)) return false;
    }
  }
  return true;
}

bool component_hyper_rigid(const BooleanFunction& f, std::uint32_t component) {
  for (std::uint32_t a = component; a != 0; a = (a - 1) & component) {
    std::uint32_t rest = component & ~a;
    for (std::uint32_t b = rest; b != 0; b = (b - 1) & rest) {
      __int128 sum = static_cast<__int128>(f(a)) + f(b);
      if (sum == static_cast<__int128>(f(a | b))) return false;
    }
  }
  return true;
}

}  // namespace

bool is_rigid(const BooleanFunction& f) {
  if (f.ground_size() == 0) return true;
  SetPartition components = component_partition(f);
  for (std::uint32_t block : components.blocks()) {
    if (!component_rigid(f, block)) return false;
  }
  return true;
}

bool is_hyper_rigid(const BooleanFunction& f) {
  if (f.ground_size() == 0) return true;
  SetPartition components = component_partition(f);
  for (std::uint32_t block : components.blocks()) {
    if (!component_hyper_rigid(f, block)) return false;
  }
  return true;
}

namespace {

bool in_bool_max_memo(const BooleanFunction& f,
                      std::map<std::vector<std::int64_t>, bool>& memo);

bool in_bool_max_compute(const BooleanFunction& f,
                         std::map<std::vector<std::int64_t>, bool>& memo) {
  if (f.ground_size() == 0) return true;
  auto weak = weak_equivalences(f);
  auto strong = strong_equivalences(f);
  if (weak.size() != strong.size()) return false;
  std::uint32_t full = f.full_mask();
  for (std::uint32_t s = 0; s < full; ++s) {
    if (!in_bool_max_memo(restrict_to(f, s), memo)) return false;
  }
  SetPartition discrete = SetPartition::discrete(f.ground_size());
  for (const auto& p : weak) {
    if (p == discrete) continue;
    if (!in_bool_max_memo(contract(f, p), memo)) return false;
  }
  return true;
}

bool in_bool_max_memo(const BooleanFunction& f,
                      std::map<std::vector<std::int64_t>, bool>& memo) {
  BooleanFunction key = canonical_form(f);
  auto it = memo.find(key.values());
  if (it != memo.end()) return it->second;
  bool result = in_bool_max_compute(key, memo);
  memo.emplace(key.values(), result);
  return result;
}

}  // namespace

bool in_bool_max(const BooleanFunction& f) {
  if (f.ground_size() > caps().bool_max) {
    throw Error(Errc::GroundSetTooLarge, "membership test is capped at n = " +
                                             std::to_string(caps().bool_max));
  }
  static std::mutex mutex;
  static std::map<std::vector<std::int64_t>, bool> memo;
  std::lock_guard<std::mutex> lock(mutex);
  return in_bool_max_memo(f, memo);
}

const char* to_string(EquivFamily family) {
  return family == EquivFamily::Weak ? "W" : "S";
}

namespace {

bool in_family(const BooleanFunction& f, const SetPartition& p, EquivFamily family) {
  for (std::uint32_t b : p.blocks()) {
    if (!restriction_indecomposable(f, b, QPair{1, 1})) return false;
  }
  if (family == EquivFamily::Weak) return true;
  return ic(contract(f, p)) == ic(f);
}

std::vector<SetPartition> family_of(const BooleanFunction& f, EquivFamily family) {
  return family == EquivFamily::Weak ? weak_equivalences(f) : strong_equivalences(f);
}

// Partitions of the subset `s` of the ambient ground set: the local partition
// of the re-indexed subset together with its blocks as ambient masks.
struct SubsetPartition {
  SetPartition local;
  std::vector<std::uint32_t> ambient_blocks;
};

std::vector<SubsetPartition> subset_partitions(int n, std::uint32_t s) {
  std::vector<std::uint32_t> bits;
  for (int i = 0; i < n; ++i) {
    if (s & (1u << i)) bits.push_back(1u << i);
  }
  std::vector<SubsetPartition> out;
  for (auto& p : enumerate_partitions(static_cast<int>(bits.size()))) {
    std::vector<std::uint32_t> blocks;
    blocks.reserve(p.block_count());
    for (std::uint32_t b : p.blocks()) {
      std::uint32_t expanded = 0;
      for (std::size_t j = 0; j < bits.size(); ++j) {
        if (b & (1u << j)) expanded |= bits[j];
      }
      blocks.push_back(expanded);
    }
    out.push_back(SubsetPartition{std::move(p), std::move(blocks)});
  }
  return out;
}

AxiomCheck check_star1_condition(const BooleanFunction& f, EquivFamily family) {
  AxiomCheck check{0, "star1-condition", family, true, {}, {}};
  int n = f.ground_size();
  std::uint32_t full = f.full_mask();
  for (std::uint32_t s = 1; s < full; ++s) {
    if (!(s & 1u)) continue;  // each unordered split once
    BooleanFunction left = restrict_to(f, s);
    BooleanFunction right = restrict_to(f, full & ~s);
    BooleanFunction h = star_product(left, right, QPair{1, 1});
    // Expected family of h: pairs of member partitions, concatenated.
    std::vector<std::vector<int>> expected;
    auto family_left = family_of(left, family);
    auto family_right = family_of(right, family);
    for (const auto& pl : family_left) {
      for (const auto& pr : family_right) {
        std::vector<int> rgs = pl.rgs();
        for (int label : pr.rgs()) rgs.push_back(label + pl.block_count());
        expected.push_back(std::move(rgs));
      }
    }
    std::sort(expected.begin(), expected.end());
    std::vector<std::vector<int>> actual;
    for (const auto& p : family_of(h, family)) actual.push_back(p.rgs());
    std::sort(actual.begin(), actual.end());
    if (expected != actual) {
      check.pass = false;
      check.note = "product family mismatch for split mask " + std::to_string(s);
      for (const auto& rgs : actual) {
        bool found = std::binary_search(expected.begin(), expected.end(), rgs);
        if (!found) {
          check.witness.emplace_back(n, rgs);
          break;
        }
      }
      if (check.witness.empty() && !expected.empty()) {
        check.witness.emplace_back(n, expected.front());
      }
      return check;
    }
  }
  return check;
}

AxiomCheck check_delta_condition(const BooleanFunction& f, EquivFamily family) {
  AxiomCheck check{0, "delta-condition", family, true, {}, {}};
  auto partitions = enumerate_partitions(f.ground_size());
  for (const auto& fine : partitions) {
    for (const auto& coarse : partitions) {
      if (!refines(fine, coarse)) continue;
      SetPartition quotient = induced_partition(fine, coarse);
      bool first = in_family(f, fine, family) &&
                   in_family(contract(f, fine), quotient, family);
      bool second = in_family(f, coarse, family) &&
                    in_family(restrict_by(f, coarse), fine, family);
      if (first != second) {
        check.pass = false;
        check.witness = {fine, coarse};
        check.note = first ? "chain holds downward only" : "chain holds upward only";
        return check;
      }
    }
  }
  return check;
}

AxiomCheck check_Delta_condition(const BooleanFunction& f, EquivFamily family) {
  AxiomCheck check{0, "Delta-condition", family, true, {}, {}};
  int n = f.ground_size();
  std::uint32_t full = f.full_mask();
  for (std::uint32_t s = 0;; ++s) {
    BooleanFunction left = restrict_to(f, s);
    BooleanFunction right = restrict_to(f, full & ~s);
    auto left_parts = subset_partitions(n, s);
    auto right_parts = subset_partitions(n, full & ~s);
    for (const auto& lp : left_parts) {
      bool left_member = in_family(left, lp.local, family);
      for (const auto& rp : right_parts) {
        std::vector<std::uint32_t> blocks = lp.ambient_blocks;
        blocks.insert(blocks.end(), rp.ambient_blocks.begin(), rp.ambient_blocks.end());
        SetPartition combined = SetPartition::from_blocks(n, blocks);
        bool whole = in_family(f, combined, family);
        bool split = left_member && in_family(right, rp.local, family);
        if (whole != split) {
          check.pass = false;
          check.witness = {combined};
          check.note = "bipartition mask " + std::to_string(s);
          return check;
        }
      }
    }
    if (s == full) break;
  }
  return check;
}

AxiomCheck check_epsilon_condition(const BooleanFunction& f, EquivFamily family) {
  AxiomCheck check{0, "epsilon-condition", family, true, {}, {}};
  int n = f.ground_size();
  auto members = family_of(f, family);
  SetPartition discrete = SetPartition::discrete(n);
  SetPartition components =
      n == 0 ? SetPartition(0, {}) : component_partition(f);
  auto contains = [&](const SetPartition& p) {
    for (const auto& q : members) {
      if (q == p) return true;
    }
    return false;
  };
  if (!contains(discrete) || !contains(components)) {
    check.pass = false;
    check.witness = {contains(discrete) ? components : discrete};
    check.note = "required member missing";
    return check;
  }
  for (const auto& p : members) {
    bool restriction_modular = is_modular(restrict_by(f, p));
    if (restriction_modular != (p == discrete)) {
      check.pass = false;
      check.witness = {p};
      check.note = "restriction-modularity does not single out the discrete partition";
      return check;
    }
    bool contraction_modular = is_modular(contract(f, p));
    if (contraction_modular != (p == components)) {
      check.pass = false;
      check.witness = {p};
      check.note = "contraction-modularity does not single out the component partition";
      return check;
    }
  }
  return check;
}

AxiomCheck check_counit(const BooleanFunction& f, EquivFamily family) {
  bool two_sided = family == EquivFamily::Strong;
  AxiomCheck check{0, two_sided ? "counit" : "right-counit", family, true, {}, {}};
  FormalTensorSum delta = family == EquivFamily::Weak ? coproduct_deltaW(f)
                                                      : coproduct_deltaS(f);
  auto eps = [](const BooleanFunction& g) { return mpz_class(counit_contraction(g)); };
  FormalSum expected = FormalSum::of(f);
  if (!(delta.apply_right(eps) == expected)) {
    check.pass = false;
    check.note = "right counit identity fails";
    return check;
  }
  if (two_sided && !(delta.apply_left(eps) == expected)) {
    check.pass = false;
    check.note = "left counit identity fails";
    return check;
  }
  return check;
}

AxiomCheck check_counit_restriction_compat(const BooleanFunction& f,
                                           EquivFamily family) {
  AxiomCheck check{0, "epsilonDelta-compat", family, true, {}, {}};
  FormalTensorSum delta = family == EquivFamily::Weak ? coproduct_deltaW(f)
                                                      : coproduct_deltaS(f);
  auto eps = [](const BooleanFunction& g) { return mpz_class(counit_restriction(g)); };
  FormalSum lhs = delta.apply_left(eps);
  FormalSum rhs;
  rhs.add(BooleanFunction(), counit_restriction(f));
  if (!(lhs == rhs)) {
    check.pass = false;
    check.note = "collapse against the restriction counit fails";
  }
  return check;
}

}  // namespace

std::vector<AxiomCheck> verify_axioms(const std::vector<BooleanFunction>& sample,
                                      EquivFamily family) {
  std::vector<AxiomCheck> report;
  for (std::size_t i = 0; i < sample.size(); ++i) {
    const BooleanFunction& f = sample[i];
    if (f.ground_size() > caps().canonical || f.ground_size() > caps().partition) {
      throw Error(Errc::GroundSetTooLarge, "sample element exceeds the verification cap");
    }
    AxiomCheck checks[] = {
        check_star1_condition(f, family),   check_delta_condition(f, family),
        check_Delta_condition(f, family),   check_epsilon_condition(f, family),
        check_counit(f, family),            check_counit_restriction_compat(f, family),
    };
    for (auto& c : checks) {
      c.input = i;
      report.push_back(std::move(c));
    }
  }
  return report;
}

}  // namespace boolfun
