#include <gtest/gtest.h>

#include "twistbv/examples.hpp"
#include "twistbv/frobenius.hpp"

namespace twistbv {
namespace {

using algebra::Bicharacter;
using frobenius::FrobeniusStructure;
using linalg::Matrix;

// Independent Nakayama solve: <a, b> = <b, nu(a)> means G^T = G N.
Matrix nakayama_oracle(const Matrix& gram) { return *linalg::inverse(gram) * linalg::transpose(gram); }

TEST(Validate, Truncated) {
  auto f = examples::build_truncated(3);
  EXPECT_EQ(f.sigma, (algebra::Degree{-2}));
  EXPECT_EQ(f.nakayama, Matrix::identity(3));
  auto f2 = examples::build_truncated(2);
  EXPECT_EQ(f2.nakayama, Matrix::identity(2));
  EXPECT_EQ(f2.gram, Matrix::from_rows({{0, 1}, {1, 0}}));
  EXPECT_TRUE(frobenius::nakayama_semisimple(f));
}

TEST(Validate, Rejections) {
  auto f = examples::build_truncated(3);
  Matrix zero_row = f.gram;
  for (std::size_t j = 0; j < 3; ++j) zero_row(0, j) = 0;
  EXPECT_THROW(frobenius::validate_frobenius(f.algebra, zero_row), frobenius::ValidationError);
  // <1, 1> = 1 in addition breaks the grading shift.
  Matrix no_sigma = f.gram;
  no_sigma(0, 0) = 1;
  EXPECT_THROW(frobenius::validate_frobenius(f.algebra, no_sigma), frobenius::ValidationError);
  // Nondegenerate but not invariant: <x, x> = 1, <1, x^2> = <x^2, 1> = 2.
  Matrix not_inv(3, 3);
  not_inv(1, 1) = 1;
  not_inv(0, 2) = 2;
  not_inv(2, 0) = 2;
  EXPECT_THROW(frobenius::validate_frobenius(f.algebra, not_inv), frobenius::ValidationError);
}

TEST(Nakayama, NonSemisimpleDetected) {
  FrobeniusStructure f = examples::build_truncated(2);
  f.nakayama = Matrix::from_rows({{1, 1}, {0, 1}});
  EXPECT_FALSE(frobenius::nakayama_semisimple(f));
}

TEST(Product, QciNakayama) {
  auto d = examples::build_qci(2, 2, 2);
  auto p = examples::qci_product(d);
  EXPECT_EQ(p.nakayama, nakayama_oracle(p.gram));
  // Basis index i * 2 + j: x (x) 1 is 2, 1 (x) y is 1.
  EXPECT_EQ(p.nakayama.column(2), (Vector{0, 0, Scalar(1, 2), 0}));
  EXPECT_EQ(p.nakayama.column(1), (Vector{0, 2, 0, 0}));
  EXPECT_TRUE(frobenius::nakayama_semisimple(p));
  EXPECT_EQ(p.sigma, (algebra::Degree{-1, -1}));
}

TEST(Product, TrivialBicharacterIsKronecker) {
  auto a = examples::build_truncated(2), b = examples::build_truncated(3);
  auto p = frobenius::twisted_frobenius_product(a, b, Bicharacter::trivial(1, 1));
  EXPECT_EQ(p.gram, linalg::kronecker(a.gram, b.gram));
  EXPECT_EQ(p.nakayama, linalg::kronecker(a.nakayama, b.nakayama));
  EXPECT_TRUE(frobenius::check_nakayama_product_formula(a, b, Bicharacter::trivial(1, 1)));
}

TEST(Product, FormulaMatchesGramSolve) {
  for (std::size_t m = 2; m <= 4; ++m)
    for (std::size_t n = 2; n <= 3; ++n)
      for (const Scalar& q : {Scalar(1), Scalar(2), Scalar(1, 3)}) {
        auto d = examples::build_qci(m, n, q);
        auto p = examples::qci_product(d);
        EXPECT_EQ(frobenius::nakayama_product_formula(d.left, d.right, d.t), nakayama_oracle(p.gram));
        EXPECT_TRUE(frobenius::check_nakayama_product_formula(d.left, d.right, d.t));
      }
}

TEST(DualBases, Pairings) {
  auto p = examples::qci_product(examples::build_qci(2, 3, Scalar(1, 3)));
  auto db = frobenius::dualizing_bases(p);
  const std::size_t n = p.algebra.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Scalar want = i == j ? 1 : 0;
      EXPECT_EQ(frobenius::pairing(p, db.left[i], p.algebra.basis_vector(j)), want);
      EXPECT_EQ(frobenius::pairing(p, p.algebra.basis_vector(i), db.right[j]), want);
    }
}

TEST(DualBases, OrthonormalSymmetric) {
  // k x k with the identity Gram: both dualizing bases are the basis.
  algebra::GradedAlgebra a(0, {"e", "f"}, {{}, {}}, 0);
  a.set_constant(0, 0, 0, 1);
  a.set_constant(0, 1, 1, 1);
  a.set_constant(1, 0, 1, 1);
  a.set_constant(1, 1, 0, 1);  // k[C_2]
  auto f = frobenius::validate_frobenius(a, Matrix::identity(2));
  auto db = frobenius::dualizing_bases(f);
  EXPECT_EQ(db.left[0], a.basis_vector(0));
  EXPECT_EQ(db.right[1], a.basis_vector(1));
}

}  // namespace
}  // namespace twistbv
