#include "boolfun/invariants.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

namespace boolfun {

Polynomial::Polynomial(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) {
  trim();
}

Polynomial Polynomial::constant(const mpz_class& c) {
  return Polynomial(std::vector<mpz_class>{c});
}

Polynomial Polynomial::monomial(const mpz_class& c, int degree) {
  std::vector<mpz_class> coeffs(degree + 1, 0);
  coeffs[degree] = c;
  return Polynomial(std::move(coeffs));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

mpz_class Polynomial::eval(const mpz_class& point) const {
  mpz_class out(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    out = out * point + *it;
  }
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size(), 0);
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size(), 0);
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return Polynomial();
  std::vector<mpz_class> coeffs(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      coeffs[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return Polynomial(std::move(coeffs));
}

Polynomial falling_factorial(int k) {
  Polynomial out = Polynomial::constant(1);
  for (int i = 0; i < k; ++i) {
    out = out * Polynomial(std::vector<mpz_class>{-i, 1});
  }
  return out;
}

BivariatePolynomial::BivariatePolynomial(std::vector<std::vector<mpz_class>> coeffs)
    : coeffs_(std::move(coeffs)) {
  std::size_t width = 0;
  for (const auto& row : coeffs_) width = std::max(width, row.size());
  for (auto& row : coeffs_) row.resize(width, 0);
  trim();
}

void BivariatePolynomial::trim() {
  std::size_t width = 0;
  for (const auto& row : coeffs_) {
    for (std::size_t j = row.size(); j > width; --j) {
      if (row[j - 1] != 0) {
        width = j;
        break;
      }
    }
  }
  for (auto& row : coeffs_) row.resize(width);
  while (!coeffs_.empty()) {
    bool zero_row = true;
    for (const auto& c : coeffs_.back()) {
      if (c != 0) {
        zero_row = false;
        break;
      }
    }
    if (!zero_row) break;
    coeffs_.pop_back();
  }
  if (!coeffs_.empty() && width == 0) coeffs_.clear();
}

BivariatePolynomial BivariatePolynomial::separable(const Polynomial& p,
                                                   const Polynomial& q) {
  if (p.is_zero() || q.is_zero()) return BivariatePolynomial();
  std::vector<std::vector<mpz_class>> coeffs(
      p.coeffs().size(), std::vector<mpz_class>(q.coeffs().size(), 0));
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    for (std::size_t j = 0; j < q.coeffs().size(); ++j) {
      coeffs[i][j] = p.coeffs()[i] * q.coeffs()[j];
    }
  }
  return BivariatePolynomial(std::move(coeffs));
}

BivariatePolynomial BivariatePolynomial::diagonal(const Polynomial& p) {
  if (p.is_zero()) return BivariatePolynomial();
  std::vector<std::vector<mpz_class>> coeffs(
      p.coeffs().size(), std::vector<mpz_class>(p.coeffs().size(), 0));
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) coeffs[i][i] = p.coeffs()[i];
  return BivariatePolynomial(std::move(coeffs));
}

BivariatePolynomial& BivariatePolynomial::operator+=(const BivariatePolynomial& other) {
  std::size_t rows = std::max(coeffs_.size(), other.coeffs_.size());
  std::size_t cols = 0;
  if (!coeffs_.empty()) cols = coeffs_[0].size();
  if (!other.coeffs_.empty()) cols = std::max(cols, other.coeffs_[0].size());
  coeffs_.resize(rows);
  for (auto& row : coeffs_) row.resize(cols, 0);
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < other.coeffs_[i].size(); ++j) {
      coeffs_[i][j] += other.coeffs_[i][j];
    }
  }
  trim();
  return *this;
}

namespace {

// modular[s] = restriction of f to s is modular, for every subset s.
std::vector<bool> modular_table(const BooleanFunction& f) {
  std::vector<std::int64_t> additive(f.table_size(), 0);
  std::vector<bool> exact(f.table_size(), true);
  std::vector<bool> table(f.table_size(), true);
  for (std::uint32_t a = 1; a < additive.size(); ++a) {
    std::uint32_t low = a & (a - 1);
    __int128 sum = static_cast<__int128>(additive[low]) +
                   f(std::uint32_t(1) << std::countr_zero(a));
    exact[a] = exact[low] && sum == static_cast<__int128>(static_cast<std::int64_t>(sum));
    additive[a] = static_cast<std::int64_t>(sum);
  }
  // f|s modular <=> every subset of s matches its additive value.
  for (std::uint32_t s = 1; s < table.size(); ++s) {
    std::uint32_t low = s & (s - 1);
    std::uint32_t bit = std::uint32_t(1) << std::countr_zero(s);
    // subsets of s split into subsets of low and subsets of low plus bit
    table[s] = table[low];
    if (table[s]) {
      for (std::uint32_t b = low;; b = (b - 1) & low) {
        std::uint32_t a = b | bit;
        if (!exact[a] || f(a) != additive[a]) {
          table[s] = false;
          break;
        }
        if (b == 0) break;
      }
    }
  }
  return table;
}

}  // namespace

Polynomial phi(const BooleanFunction& f) {
  int n = f.ground_size();
  if (n > caps().partition) {
    throw Error(Errc::GroundSetTooLarge, "invariant is capped with partitions");
  }
  if (n == 0) return Polynomial::constant(1);
  auto modular = modular_table(f);
  std::vector<mpz_class> count_by_blocks(n + 1, 0);
  for (const auto& p : enumerate_partitions(n)) {
    bool admissible = true;
    for (std::uint32_t b : p.blocks()) {
      if (!modular[b]) {
        admissible = false;
        break;
      }
    }
    if (admissible) ++count_by_blocks[p.block_count()];
  }
  Polynomial out;
  for (int k = 1; k <= n; ++k) {
    if (count_by_blocks[k] == 0) continue;
    out += Polynomial::constant(count_by_blocks[k]) * falling_factorial(k);
  }
  return out;
}

std::int64_t phi_count(const BooleanFunction& f, std::int64_t colors) {
  if (colors < 1) throw Error(Errc::InvalidArgument, "colors must be positive");
  int n = f.ground_size();
  double budget = n * std::log2(static_cast<double>(colors));
  if (budget > 24.0) {
    throw Error(Errc::EnumerationTooLarge, "colors^n is beyond the enumeration budget");
  }
  if (n == 0) return 1;
  auto modular = modular_table(f);
  std::vector<std::int64_t> assignment(n, 0);
  std::int64_t count = 0;
  while (true) {
    // fibers of the assignment, as masks keyed by the colors in use
    std::vector<std::pair<std::int64_t, std::uint32_t>> fibers;
    for (int i = 0; i < n; ++i) {
      bool found = false;
      for (auto& [color, mask] : fibers) {
        if (color == assignment[i]) {
          mask |= (1u << i);
          found = true;
          break;
        }
      }
      if (!found) fibers.emplace_back(assignment[i], 1u << i);
    }
    bool good = true;
    for (const auto& [color, mask] : fibers) {
      if (!modular[mask]) {
        good = false;
        break;
      }
    }
    if (good) ++count;
    int pos = 0;
    while (pos < n && assignment[pos] == colors - 1) {
      assignment[pos] = 0;
      ++pos;
    }
    if (pos == n) break;
    ++assignment[pos];
  }
  return count;
}

Polynomial chromatic_polynomial(const Hypergraph& h) { return phi(gamma(h)); }

mpz_class mu(const BooleanFunction& f) { return phi(f).eval(-1); }

FormalSum antipode(const BooleanFunction& f, bool checked) {
  if (checked && !in_bool_max(f)) {
    throw Error(Errc::NotInBoolMax, "antipode formula needs the maximal subspecies");
  }
  if (f.ground_size() > caps().canonical) {
    throw Error(Errc::GroundSetTooLarge, "antipode is capped by canonicalization");
  }
  FormalSum out;
  for (const auto& p : weak_equivalences(f)) {
    out.add(restrict_by(f, p), mu(contract(f, p)));
  }
  return out;
}

PhiCompatReport phi_compat_report(const BooleanFunction& f) {
  PhiCompatReport report;
  report.counitary = is_counitary(f);
  FormalTensorSum weak = coproduct_deltaW(f);
  for (const auto& [key, c] : weak.terms()) {
    report.phi_deltaW += BivariatePolynomial::separable(
        Polynomial::constant(c) * phi(key.first), phi(key.second));
  }
  FormalTensorSum strong = coproduct_deltaS(f);
  for (const auto& [key, c] : strong.terms()) {
    report.phi_deltaS += BivariatePolynomial::separable(
        Polynomial::constant(c) * phi(key.first), phi(key.second));
  }
  report.delta_phi = BivariatePolynomial::diagonal(phi(f));
  report.agree_W_delta = report.phi_deltaW == report.delta_phi;
  report.agree_S_delta = report.phi_deltaS == report.delta_phi;
  report.agree_W_S = report.phi_deltaW == report.phi_deltaS;
  if (report.agree_W_delta != report.counitary) {
    throw std::logic_error("compatibility disagrees with the counitary test");
  }
  return report;
}

}  // namespace boolfun
