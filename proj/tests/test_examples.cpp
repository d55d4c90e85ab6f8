#include <gtest/gtest.h>

#include "twistbv/bv.hpp"
#include "twistbv/examples.hpp"

namespace twistbv {
namespace {

using hochschild::Cochain;

TEST(Truncated, Structure) {
  EXPECT_THROW(examples::build_truncated(1), InputError);
  auto f2 = examples::build_truncated(2);
  EXPECT_EQ(f2.algebra.dim(), 2u);
  EXPECT_EQ(f2.gram, linalg::Matrix::from_rows({{0, 1}, {1, 0}}));
  for (std::size_t n = 2; n <= 5; ++n) {
    auto f = examples::build_truncated(n);
    EXPECT_TRUE(algebra::check_algebra(f.algebra).ok());
    EXPECT_EQ(f.sigma, (algebra::Degree{-static_cast<long>(n - 1)}));
    EXPECT_EQ(f.nakayama, linalg::Matrix::identity(n));
    // Revalidating the stored form reproduces the structure.
    auto again = frobenius::validate_frobenius(f.algebra, f.gram);
    EXPECT_EQ(again.nakayama, f.nakayama);
  }
}

TEST(Qci, Structure) {
  EXPECT_THROW(examples::build_qci(2, 2, 0), InputError);
  auto d = examples::build_qci(2, 2, 2);
  auto p = examples::qci_product(d);
  EXPECT_EQ(p.algebra.dim(), 4u);
  EXPECT_TRUE(algebra::check_algebra(p.algebra).ok());
  // q = 1 is the untwisted tensor square.
  auto u = examples::qci_product(examples::build_qci(2, 2, 1));
  EXPECT_EQ(u.algebra, algebra::twisted_tensor(d.left.algebra, d.right.algebra, algebra::Bicharacter::trivial(1, 1)));
  EXPECT_EQ(u.gram, linalg::kronecker(d.left.gram, d.right.gram));
}

TEST(QciReport, TwoTwo) {
  auto r = examples::qci_report(2, 2, 2, 3);
  EXPECT_EQ(r.dims.level_totals, (std::vector<std::size_t>{2, 2, 1, 0}));
  EXPECT_TRUE(r.dims.ok());
  EXPECT_TRUE(r.delta_u_zero);
  EXPECT_EQ(r.delta_v, 1);
  EXPECT_EQ(r.delta_w, 1);
  EXPECT_EQ(r.bracket_vu_tradler, 1);
  EXPECT_EQ(r.bracket_vu_definition, -1);
  EXPECT_TRUE(r.theorem.ok());
  EXPECT_EQ(r.u.rep.degree, (algebra::Degree{1, 1}));
}

// Frozen regression values from the bar-complex computation: the class built
// from k[x]/(x^m) has Delta = m - 1.
TEST(QciReport, FrozenLabelling) {
  auto r23 = examples::qci_report(2, 3, 2, 3);
  EXPECT_EQ(r23.delta_v, 1);
  EXPECT_EQ(r23.delta_w, 2);
  EXPECT_EQ(r23.bracket_vu_tradler, 1);
  auto r32 = examples::qci_report(3, 2, Scalar(1, 3), 3);
  EXPECT_EQ(r32.delta_v, 2);
  EXPECT_EQ(r32.delta_w, 1);
  EXPECT_EQ(r32.bracket_vu_tradler, 2);
  EXPECT_EQ(r32.bracket_vu_definition, -2);
}

// Cross-check through the first factor alone: Delta of its Euler derivation.
TEST(QciReport, AgreesWithFactorDelta) {
  for (std::size_t m = 2; m <= 4; ++m) {
    auto fr = examples::build_truncated(m);
    bv::BVContext ctx(fr);
    Cochain e{1, Vector((m - 1) * m), algebra::Degree{0}};
    for (std::size_t i = 1; i < m; ++i) e.values[(i - 1) * m + i] = static_cast<long>(i);
    Scalar factor = bv::bv_delta(ctx, e).values[0];
    EXPECT_EQ(examples::qci_report(m, 2, 2, 1).delta_v, factor);
    EXPECT_EQ(examples::qci_report(2, m, 2, 1).delta_w, factor);
  }
}

TEST(QciReport, RefusesRootsOfUnity) {
  EXPECT_THROW(examples::qci_report(2, 2, 1, 2), InputError);
  EXPECT_THROW(examples::qci_report(2, 2, -1, 2), InputError);
  EXPECT_THROW(examples::qci_report(2, 2, 0, 2), InputError);
}

}  // namespace
}  // namespace twistbv
