#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <vector>

#include "boolfun/coalgebra.hpp"
#include "boolfun/instances.hpp"

namespace boolfun {

// Integer-coefficient polynomial in one indeterminate, coefficients in
// ascending degree, no trailing zeros; the zero polynomial is empty.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<mpz_class> coeffs);
  static Polynomial constant(const mpz_class& c);
  static Polynomial monomial(const mpz_class& c, int degree);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<mpz_class>& coeffs() const { return coeffs_; }
  mpz_class eval(const mpz_class& point) const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

  bool operator==(const Polynomial&) const = default;

 private:
  void trim();
  std::vector<mpz_class> coeffs_;
};

// T (T-1) ... (T-k+1); the empty product for k = 0.
Polynomial falling_factorial(int k);

// Integer-coefficient polynomial in T and T'; coeffs[i][j] multiplies
// T^i T'^j, rows and columns trimmed.
class BivariatePolynomial {
 public:
  BivariatePolynomial() = default;
  explicit BivariatePolynomial(std::vector<std::vector<mpz_class>> coeffs);

  // p(T) q(T')
  static BivariatePolynomial separable(const Polynomial& p, const Polynomial& q);
  // p with T replaced by T T'
  static BivariatePolynomial diagonal(const Polynomial& p);

  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<std::vector<mpz_class>>& coeffs() const { return coeffs_; }

  BivariatePolynomial& operator+=(const BivariatePolynomial& other);

  bool operator==(const BivariatePolynomial&) const = default;

 private:
  void trim();
  std::vector<std::vector<mpz_class>> coeffs_;
};

// The polynomial invariant: sum over the set partitions of the ground set all
// of whose block restrictions are modular of the falling factorial of the
// block count.
Polynomial phi(const BooleanFunction& f);

// Number of maps c from the ground set to {1..colors} all of whose fiber
// restrictions are modular: the counting oracle for phi. Requires
// n*log2(colors) <= 24.
std::int64_t phi_count(const BooleanFunction& f, std::int64_t colors);

// phi(gamma(h)): counts colorings with no hyperedge of size >= 2 monochromatic.
Polynomial chromatic_polynomial(const Hypergraph& h);

// phi(f) evaluated at -1.
mpz_class mu(const BooleanFunction& f);

// The antipode: sum over the weak family of mu(f/~) * class(f|~). In checked
// mode the function must lie in the maximal subspecies.
FormalSum antipode(const BooleanFunction& f, bool checked = true);

struct PhiCompatReport {
  bool counitary = false;
  BivariatePolynomial phi_deltaW;  // (phi ⊗ phi) after the weak coproduct
  BivariatePolynomial phi_deltaS;  // (phi ⊗ phi) after the strong coproduct
  BivariatePolynomial delta_phi;   // phi with T replaced by T T'
  bool agree_W_delta = false;
  bool agree_S_delta = false;
  bool agree_W_S = false;
};

// Computes the three bivariate polynomials and which pairs agree; the first
// and third agree exactly on counitary functions.
PhiCompatReport phi_compat_report(const BooleanFunction& f);

}  // namespace boolfun
