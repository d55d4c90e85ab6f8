#include <gtest/gtest.h>

#include "test_support.hpp"
#include "twistbv/bv.hpp"
#include "twistbv/examples.hpp"

namespace twistbv {
namespace {

using algebra::Degree;
using bv::BVContext;
using hochschild::Cochain;
using hochschild::Twist;

// The Euler derivation x^i -> i x^i on k[x]/(x^m).
Cochain euler_derivation(const frobenius::FrobeniusStructure& fr) {
  const std::size_t m = fr.algebra.dim();
  Cochain f{1, Vector((m - 1) * m), Degree{0}};
  for (std::size_t i = 1; i < m; ++i) f.values[(i - 1) * m + i] = static_cast<long>(i);
  return f;
}

TEST(BVDelta, EulerDerivationOnTruncated) {
  for (std::size_t m = 2; m <= 4; ++m) {
    auto fr = examples::build_truncated(m);
    BVContext ctx(fr);
    Cochain f = euler_derivation(fr);
    ASSERT_TRUE(ctx.complex().is_cocycle(f));
    Cochain d = bv::bv_delta(ctx, f);
    Vector expect(m);
    expect[0] = static_cast<long>(m - 1);
    EXPECT_EQ(d.values, expect) << "m = " << m;
  }
}

// Oracle for level one on a symmetric algebra: <Delta f, a_0> = <f(a_0), 1>.
TEST(BVDelta, LevelOneMatchesSingleTerm) {
  auto fr = examples::build_truncated(3);
  BVContext ctx(fr);
  const auto& alg = fr.algebra;
  for (const auto& rep : hochschild::cohomology(ctx.complex(), 1).representatives) {
    Cochain inv = ctx.invariant_representative(rep);
    Cochain d = bv::bv_delta(ctx, inv);
    for (std::size_t a0 = 0; a0 < alg.dim(); ++a0) {
      Scalar lhs(0), rhs(0);
      for (std::size_t k = 0; k < alg.dim(); ++k) lhs += d.values[k] * fr.gram(k, a0);
      long pos = alg.reduced_position(a0);
      if (pos >= 0)
        for (std::size_t k = 0; k < alg.dim(); ++k)
          rhs += inv.values[static_cast<std::size_t>(pos) * alg.dim() + k] * fr.gram(k, alg.unit_index());
      EXPECT_EQ(lhs, rhs);
    }
  }
}

TEST(BVDelta, Guards) {
  auto fr = examples::qci_product(examples::build_qci(2, 2, 2));
  BVContext ctx(fr);
  Cochain unit{0, fr.algebra.unit_vector(), std::nullopt};
  EXPECT_THROW(bv::bv_delta(ctx, unit), InputError);
  EXPECT_FALSE(bv::delta_or_zero(ctx, unit).has_value());
  // A cocycle that is not T*-invariant is refused.
  bool found = false;
  for (const auto& rep : hochschild::cohomology(ctx.complex(), 1).representatives) {
    if (ctx.duality().is_invariant(rep)) continue;
    found = true;
    EXPECT_THROW(bv::bv_delta(ctx, rep), InputError);
  }
  (void)found;
  std::mt19937 rng(5);
  Cochain noise = testing::random_cochain(ctx.complex(), 1, rng);
  EXPECT_THROW(bv::bv_delta(ctx, noise), InputError);
  EXPECT_THROW(bv::bv_delta_right(ctx, noise), InputError);
}

TEST(BVDelta, ZeroTwistAgreesWithUntwisted) {
  auto fr = examples::build_truncated(3);
  BVContext plain(fr);
  BVContext right(fr, Twist::right(algebra::Bicharacter::scalar(2), {0}));
  BVContext left(fr, Twist::left(algebra::Bicharacter::scalar(2), {0}));
  for (std::size_t p = 1; p <= 3; ++p)
    for (const auto& rep : hochschild::cohomology(plain.complex(), p).representatives) {
      Cochain inv = plain.invariant_representative(rep);
      Cochain d = bv::bv_delta(plain, inv);
      EXPECT_EQ(bv::bv_delta_right(right, inv).values, d.values);
      EXPECT_EQ(bv::bv_delta_left(left, inv).values, d.values);
    }
}

TEST(BVDelta, TwistedPreservesDegreeAndClosedness) {
  auto fr = examples::build_truncated(3);
  const auto t = algebra::Bicharacter::scalar(2);
  for (long b = -2; b <= 2; ++b)
    for (auto tw : {Twist::right(t, {b}), Twist::left(t, {b})}) {
      BVContext ctx(fr, tw);
      for (std::size_t p = 1; p <= 3; ++p)
        for (const auto& rep : hochschild::cohomology(ctx.complex(), p).representatives) {
          Cochain inv = ctx.invariant_representative(rep);
          Cochain d = bv::delta_or_zero(ctx, inv).value();
          EXPECT_TRUE(ctx.complex().is_cocycle(d));
          if (!is_zero(d.values)) {
            EXPECT_EQ(ctx.complex().homogeneous_degree(d), ctx.complex().homogeneous_degree(inv));
          }
        }
    }
}

TEST(BVDelta, ClassIndependentOfInvariantRepresentative) {
  std::mt19937 rng(17);
  auto fr = examples::qci_product(examples::build_qci(2, 2, 2));
  BVContext ctx(fr);
  const auto& cx = ctx.complex();
  for (std::size_t p = 1; p <= 2; ++p)
    for (const auto& rep : hochschild::cohomology(cx, p).representatives) {
      Cochain inv = ctx.invariant_representative(rep);
      Cochain h = cx.differential(testing::random_cochain(cx, p - 1, rng));
      // Keep the perturbation invariant.
      Cochain hinv = h;
      hinv = ctx.invariant_representative(h);
      Cochain g = inv;
      for (std::size_t i = 0; i < g.values.size(); ++i) g.values[i] += hinv.values[i];
      EXPECT_TRUE(hochschild::classes_equal(cx, bv::bv_delta(ctx, inv), bv::bv_delta(ctx, g)));
    }
}

TEST(CupProduct, UnitAndGradedCommutativity) {
  auto fr = examples::qci_product(examples::build_qci(2, 2, 2));
  BVContext ctx(fr);
  const auto& cx = ctx.complex();
  const auto& alg = fr.algebra;
  Cochain unit{0, alg.unit_vector(), std::nullopt};
  auto h1 = hochschild::cohomology(cx, 1);
  ASSERT_EQ(h1.dimension, 2u);
  for (const auto& g : h1.representatives) EXPECT_EQ(bv::cup_product(alg, unit, g).values, g.values);
  const Cochain& v = h1.representatives[0];
  const Cochain& w = h1.representatives[1];
  Cochain vw = bv::cup_product(alg, v, w);
  Cochain wv = bv::cup_product(alg, w, v);
  for (auto& x : wv.values) x = -x;
  EXPECT_TRUE(hochschild::classes_equal(cx, vw, wv));
  EXPECT_TRUE(hochschild::is_coboundary(cx, bv::cup_product(alg, v, v)));
  EXPECT_FALSE(hochschild::is_coboundary(cx, vw));
}

TEST(CupProduct, TwistedCoefficientsStayClosed) {
  auto fr = examples::build_truncated(3);
  const auto t = algebra::Bicharacter::scalar(3);
  for (auto side : {hochschild::TwistSide::Right, hochschild::TwistSide::Left}) {
    Twist a{side, {1}, t}, b{side, {-2}, t};
    hochschild::BarComplex ca(fr.algebra, hochschild::coefficient_module(fr, a));
    hochschild::BarComplex cb(fr.algebra, hochschild::coefficient_module(fr, b));
    Twist sum;
    for (std::size_t p = 0; p <= 1; ++p)
      for (std::size_t q = 0; q <= 1; ++q)
        for (const auto& f : hochschild::cohomology(ca, p).representatives)
          for (const auto& g : hochschild::cohomology(cb, q).representatives) {
            Cochain fg = bv::cup_product(fr.algebra, f, a, g, b, &sum);
            hochschild::BarComplex cs(fr.algebra, hochschild::coefficient_module(fr, sum));
            EXPECT_TRUE(cs.is_cocycle(fg));
          }
    EXPECT_EQ(sum.degree, Degree{-1});
  }
}

TEST(Bracket, UnitIsCentral) {
  auto fr = examples::qci_product(examples::build_qci(2, 2, 2));
  BVContext ctx(fr);
  Cochain unit{0, fr.algebra.unit_vector(), std::nullopt};
  for (std::size_t p = 1; p <= 2; ++p)
    for (const auto& rep : hochschild::cohomology(ctx.complex(), p).representatives) {
      auto b = bv::gerstenhaber_bracket(ctx, ctx.invariant_representative(rep), unit);
      ASSERT_TRUE(b.has_value());
      EXPECT_TRUE(hochschild::is_coboundary(ctx.complex(), *b));
    }
}

TEST(Axioms, TruncatedTwoPasses) {
  BVContext ctx(examples::build_truncated(2));
  auto rep = bv::check_bv_axioms(ctx, 3);
  EXPECT_TRUE(rep.ok()) << rep.failures.front().axiom << " " << rep.failures.front().witness;
  EXPECT_GT(rep.instances_checked, 0u);
}

TEST(Axioms, TruncatedThreePasses) {
  BVContext ctx(examples::build_truncated(3));
  auto rep = bv::check_bv_axioms(ctx, 3);
  EXPECT_TRUE(rep.ok()) << rep.failures.front().axiom << " " << rep.failures.front().witness;
}

TEST(Axioms, SignMutationIsDetected) {
  BVContext ctx(examples::build_truncated(3));
  bv::DeltaOptions bad;
  bad.flip_sign = true;
  auto rep = bv::check_bv_axioms(ctx, 3, bad);
  EXPECT_FALSE(rep.ok());
  bool delta_sq = false;
  for (const auto& f : rep.failures) delta_sq = delta_sq || f.axiom == "delta-squared";
  EXPECT_TRUE(delta_sq);
}

}  // namespace
}  // namespace twistbv
