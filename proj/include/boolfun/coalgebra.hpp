#pragma once

#include <gmpxx.h>

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "boolfun/boolean_function.hpp"
#include "boolfun/decompose.hpp"
#include "boolfun/set_partition.hpp"

namespace boolfun {

// Z-linear combination of isomorphism classes of boolean functions; keys are
// canonical forms, zero coefficients are never stored.
class FormalSum {
 public:
  FormalSum() = default;
  static FormalSum of(const BooleanFunction& f);

  void add(const BooleanFunction& f, const mpz_class& coeff);
  FormalSum& operator+=(const FormalSum& other);
  FormalSum& operator*=(const mpz_class& scalar);

  bool is_zero() const { return terms_.empty(); }
  const std::map<BooleanFunction, mpz_class>& terms() const { return terms_; }

  bool operator==(const FormalSum&) const = default;

 private:
  std::map<BooleanFunction, mpz_class> terms_;
};

// Bilinear extension of the q = (1,1) product to formal sums.
FormalSum star1(const FormalSum& a, const FormalSum& b);

// Z-linear combination of ordered pairs of isomorphism classes.
class FormalTensorSum {
 public:
  using Key = std::pair<BooleanFunction, BooleanFunction>;

  FormalTensorSum() = default;

  void add(const BooleanFunction& left, const BooleanFunction& right,
           const mpz_class& coeff);
  FormalTensorSum& operator+=(const FormalTensorSum& other);

  bool is_zero() const { return terms_.empty(); }
  const std::map<Key, mpz_class>& terms() const { return terms_; }
  FormalTensorSum swapped() const;

  // Collapse one tensor leg with a linear functional.
  FormalSum apply_left(const std::function<mpz_class(const BooleanFunction&)>& fn) const;
  FormalSum apply_right(const std::function<mpz_class(const BooleanFunction&)>& fn) const;

  bool operator==(const FormalTensorSum&) const = default;

 private:
  std::map<Key, mpz_class> terms_;
};

// Counit of the restriction coproduct: 1 on the unit, 0 elsewhere.
int counit_restriction(const BooleanFunction& f);

// Counit of the contraction coproduct: 1 on modular functions, 0 elsewhere.
int counit_contraction(const BooleanFunction& f);

// Restriction coproduct: sum over the 2^n ordered splits of the ground set of
// class(f|X') ⊗ class(f|X'').
FormalTensorSum coproduct_delta(const BooleanFunction& f);

// Partitions all of whose block restrictions of f are indecomposable.
std::vector<SetPartition> weak_equivalences(const BooleanFunction& f);

// Weak equivalences that also preserve the number of indecomposable
// components under contraction.
std::vector<SetPartition> strong_equivalences(const BooleanFunction& f);

FormalTensorSum coproduct_deltaW(const BooleanFunction& f);
FormalTensorSum coproduct_deltaS(const BooleanFunction& f);

// The weak and strong families coincide.
bool is_counitary(const BooleanFunction& f);

// Every additive split inside an indecomposable component extends to a full
// product factorization of the restriction.
bool is_rigid(const BooleanFunction& f);

// No additive split with two nonempty parts exists inside any indecomposable
// component.
bool is_hyper_rigid(const BooleanFunction& f);

// Membership in the maximal subspecies closed under products, restrictions
// and weak contractions on which the two families agree: recursive check with
// memoization on canonical forms.
bool in_bool_max(const BooleanFunction& f);

enum class EquivFamily { Weak, Strong };

const char* to_string(EquivFamily family);

struct AxiomCheck {
  std::size_t input = 0;
  std::string axiom;
  EquivFamily family = EquivFamily::Weak;
  bool pass = true;
  std::vector<SetPartition> witness;  // offending partitions, empty when pass
  std::string note;
};

// Runs the structural checks of the chosen equivalence family on each sample
// element: the product condition, the coassociativity chain condition, the
// split condition, the counit-uniqueness condition, the one- or two-sided
// counit identity, and compatibility with the restriction counit. Failures
// are report entries, not errors.
std::vector<AxiomCheck> verify_axioms(const std::vector<BooleanFunction>& sample,
                                      EquivFamily family);

}  // namespace boolfun
