// Graded algebras by structure constants, bicharacters, twisted tensor
// products and twisted bimodules.
#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "twistbv/linalg.hpp"

namespace twistbv::algebra {

using linalg::Matrix;

// Element of the free abelian grading group Z^r.
using Degree = std::vector<long>;

Degree add(const Degree& a, const Degree& b);
Degree subtract(const Degree& a, const Degree& b);
Degree negate(const Degree& a);
Degree concat(const Degree& a, const Degree& b);
bool is_zero_degree(const Degree& d);
std::string format_degree(const Degree& d);

struct Term {
  std::size_t index;
  Scalar coeff;
};

// Finite-dimensional Z^r-graded algebra with the unit as a basis element.
class GradedAlgebra {
 public:
  GradedAlgebra() = default;
  GradedAlgebra(std::size_t grading_rank, std::vector<std::string> names,
                std::vector<Degree> degrees, std::size_t unit_index);

  std::size_t dim() const { return names_.size(); }
  std::size_t grading_rank() const { return rank_; }
  std::size_t unit_index() const { return unit_; }
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<Degree>& degrees() const { return degrees_; }
  const Degree& degree(std::size_t i) const { return degrees_[i]; }

  // Sparse product e_i e_j, terms sorted by index with nonzero coefficients.
  const std::vector<Term>& product(std::size_t i, std::size_t j) const { return table_[i * dim() + j]; }
  Scalar constant(std::size_t i, std::size_t j, std::size_t k) const;
  void set_constant(std::size_t i, std::size_t j, std::size_t k, const Scalar& value);

  Vector basis_vector(std::size_t i) const;
  Vector unit_vector() const { return basis_vector(unit_); }
  // Matrices of x -> e_i x and x -> x e_i.
  Matrix left_multiplication(std::size_t i) const;
  Matrix right_multiplication(std::size_t i) const;

  // Non-unit basis indices in increasing order; they span the reduced quotient.
  const std::vector<std::size_t>& reduced_basis() const { return reduced_; }
  // Position of a basis index in reduced_basis(), or -1 for the unit.
  long reduced_position(std::size_t i) const { return reduced_pos_[i]; }

  friend bool operator==(const GradedAlgebra& a, const GradedAlgebra& b);

 private:
  std::size_t rank_ = 0;
  std::vector<std::string> names_;
  std::vector<Degree> degrees_;
  std::size_t unit_ = 0;
  std::vector<std::vector<Term>> table_;
  std::vector<std::size_t> reduced_;
  std::vector<long> reduced_pos_;
};

Vector multiply(const GradedAlgebra& alg, const Vector& x, const Vector& y);

struct AlgebraViolation {
  enum class Kind { Associativity, UnitLaw, Grading, UnitDegree };
  Kind kind;
  std::size_t i = 0, j = 0, k = 0;
  std::string message;
};

struct AlgebraReport {
  std::vector<AlgebraViolation> violations;
  bool ok() const { return violations.empty(); }
};

AlgebraReport check_algebra(const GradedAlgebra& alg);

// t(a, b) = prod q[i][j]^(a_i b_j) for a in Z^rows, b in Z^cols.
struct Bicharacter {
  Matrix q;
  static Bicharacter trivial(std::size_t rows, std::size_t cols);
  static Bicharacter scalar(const Scalar& q);
};

void validate_bicharacter(const Bicharacter& t);
Scalar bicharacter_eval(const Bicharacter& t, const Degree& a, const Degree& b);

// Multiplicative character Z^r -> Q^x given by its values on generators.
struct Character {
  std::vector<Scalar> values;
  Scalar operator()(const Degree& d) const;
  Character inverse() const;
};

Character trivial_character(std::size_t rank);
// b^ = t(-, b) on the first grading group.
Character right_character(const Bicharacter& t, const Degree& b);
// a^ = t(a, -) on the second grading group.
Character left_character(const Bicharacter& t, const Degree& a);

Vector character_action(const GradedAlgebra& alg, const Character& chi, const Vector& x);
// Diagonal matrix of the character action on the basis.
Matrix character_matrix(const GradedAlgebra& alg, const Character& chi);

// R (x)^t S with basis e_i (x) f_j at index i * dim(S) + j, degrees (|e_i|, |f_j|).
GradedAlgebra twisted_tensor(const GradedAlgebra& r, const GradedAlgebra& s, const Bicharacter& t);

// Bimodule structure on a graded vector space; left[i] and right[i] are the
// matrices of m -> e_i . m and m -> m . e_i.
struct TwistedBimodule {
  std::size_t dim = 0;
  std::vector<Degree> degrees;
  std::vector<Matrix> left;
  std::vector<Matrix> right;
};

TwistedBimodule regular_bimodule(const GradedAlgebra& alg);
// R_b^: right action m . x = t(|x|, b) m x.
TwistedBimodule twisted_bimodule_right(const GradedAlgebra& r, const Bicharacter& t, const Degree& b);
// _a^S: left action x . m = t(a, |x|) x m.
TwistedBimodule twisted_bimodule_left(const GradedAlgebra& s, const Bicharacter& t, const Degree& a);
// A_phi: right action m . x = m phi(x). Throws InputError naming the failed law.
TwistedBimodule automorphism_twisted_module(const GradedAlgebra& alg, const Matrix& phi);

// nullopt when phi is a graded unital multiplicative bijection, else the failed law.
std::optional<std::string> automorphism_failure(const GradedAlgebra& alg, const Matrix& phi);

struct BimoduleReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};
BimoduleReport check_bimodule(const GradedAlgebra& alg, const TwistedBimodule& m);

}  // namespace twistbv::algebra
