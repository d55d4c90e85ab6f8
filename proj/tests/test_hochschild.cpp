#include <gtest/gtest.h>

#include "test_support.hpp"
#include "twistbv/examples.hpp"

namespace twistbv {
namespace {

using hochschild::BarComplex;
using hochschild::Chain;
using hochschild::Cochain;
using hochschild::DualityContext;
using hochschild::Twist;
using testing::basis_chain;
using testing::random_cochain;

frobenius::FrobeniusStructure lambda_qci(std::size_t m, std::size_t n, const Scalar& q) {
  return examples::qci_product(examples::build_qci(m, n, q));
}

TEST(CochainDifferential, UnitIsClosedWithRegularCoefficients) {
  auto fr = examples::build_truncated(2);
  BarComplex cx(fr.algebra, algebra::regular_bimodule(fr.algebra));
  Cochain one{0, fr.algebra.unit_vector(), std::nullopt};
  EXPECT_TRUE(is_zero(cx.differential(one).values));
}

TEST(CochainDifferential, TwistedRightActionOnUnit) {
  auto fr = examples::build_truncated(2);
  auto mod = algebra::twisted_bimodule_right(fr.algebra, algebra::Bicharacter::scalar(2), {1});
  BarComplex cx(fr.algebra, mod);
  Cochain one{0, fr.algebra.unit_vector(), std::nullopt};
  Cochain d = cx.differential(one);
  // (delta 1)(x) = x - 2x = -x
  ASSERT_EQ(d.values.size(), 2u);
  EXPECT_EQ(d.values[0], 0);
  EXPECT_EQ(d.values[1], -1);
}

TEST(CochainDifferential, SquaresToZero) {
  std::mt19937 rng(7);
  auto fr = lambda_qci(2, 2, 2);
  std::vector<algebra::TwistedBimodule> mods = {
      algebra::regular_bimodule(fr.algebra),
      algebra::automorphism_twisted_module(fr.algebra, fr.nakayama),
  };
  for (const auto& mod : mods) {
    BarComplex cx(fr.algebra, mod);
    for (std::size_t p = 0; p <= 3; ++p) {
      Cochain f = random_cochain(cx, p, rng);
      EXPECT_TRUE(is_zero(cx.differential(cx.differential(f)).values)) << "level " << p;
    }
  }
  auto r = examples::build_truncated(3);
  BarComplex tw(r.algebra, algebra::twisted_bimodule_right(r.algebra, algebra::Bicharacter::scalar(Scalar(1, 3)), {2}));
  for (std::size_t p = 0; p <= 3; ++p)
    EXPECT_TRUE(is_zero(tw.differential(tw.differential(random_cochain(tw, p, rng))).values));
}

TEST(ChainDifferential, SquaresToZeroAndMatchesTwistedFace) {
  auto fr = lambda_qci(2, 2, 2);
  BarComplex cx(fr.algebra, algebra::automorphism_twisted_module(fr.algebra, fr.nakayama));
  for (std::size_t p = 2; p <= 4; ++p)
    for (std::size_t i = 0; i < cx.space_size(p); ++i) {
      Chain c = basis_chain(cx, p, i);
      EXPECT_TRUE(is_zero(cx.chain_differential(cx.chain_differential(c)).values));
    }
  // d(1, x(x)1) = nu(x(x)1) - x(x)1 = -1/2 x(x)1 at level 0.
  const std::size_t xr = 2;  // x (x) 1 in the product basis
  const long pos = fr.algebra.reduced_position(xr);
  ASSERT_GE(pos, 0);
  Chain c{1, Vector(cx.space_size(1))};
  c.values[static_cast<std::size_t>(pos) * 4 + fr.algebra.unit_index()] = 1;
  Chain d = cx.chain_differential(c);
  Vector expect(4);
  expect[xr] = Scalar(-1, 2);
  EXPECT_EQ(d.values, expect);
  EXPECT_THROW(cx.chain_differential(Chain{0, Vector(4)}), InputError);
}

TEST(Cohomology, TruncatedTwoDimensions) {
  auto fr = examples::build_truncated(2);
  BarComplex cx(fr.algebra, algebra::regular_bimodule(fr.algebra));
  EXPECT_EQ(hochschild::cohomology(cx, 0).dimension, 2u);
  EXPECT_EQ(hochschild::cohomology(cx, 1).dimension, 1u);
  EXPECT_EQ(hochschild::cohomology(cx, 2).dimension, 1u);

  BarComplex tw(fr.algebra, algebra::twisted_bimodule_right(fr.algebra, algebra::Bicharacter::scalar(2), {1}));
  auto h0 = hochschild::cohomology(tw, 0);
  ASSERT_EQ(h0.dimension, 1u);
  EXPECT_EQ(h0.representatives[0].values, (Vector{0, 1}));
}

TEST(Cohomology, ClassesEqual) {
  std::mt19937 rng(3);
  auto fr = examples::build_truncated(2);
  BarComplex cx(fr.algebra, algebra::regular_bimodule(fr.algebra));
  auto h1 = hochschild::cohomology(cx, 1);
  ASSERT_EQ(h1.dimension, 1u);
  const Cochain& f = h1.representatives[0];
  EXPECT_TRUE(hochschild::classes_equal(cx, f, f));
  Cochain g = f;
  Cochain dh = cx.differential(random_cochain(cx, 0, rng));
  for (std::size_t i = 0; i < g.values.size(); ++i) g.values[i] += dh.values[i];
  EXPECT_TRUE(hochschild::classes_equal(cx, f, g));
  EXPECT_FALSE(hochschild::classes_equal(cx, f, cx.zero_cochain(1)));
  Cochain bad = random_cochain(cx, 1, rng);
  if (!cx.is_cocycle(bad)) {
    EXPECT_THROW(hochschild::classes_equal(cx, bad, bad), InputError);
  }
}

TEST(ConnesOperator, LowLevelShape) {
  auto fr = examples::build_truncated(3);
  DualityContext ctx(fr, Twist::none());
  const auto& ch = ctx.chains();
  // beta(x) = (1, x)
  Chain c0{0, Vector(3)};
  c0.values[1] = 1;
  Chain b0 = ctx.connes_beta(c0);
  Vector e0(ch.space_size(1));
  e0[0 * 3 + 0] = 1;  // tuple (x), coefficient 1
  EXPECT_EQ(b0.values, e0);
  // beta(x, x^2) = (1, x, x^2) - (1, x^2, x)
  Chain c1{1, Vector(ch.space_size(1))};
  c1.values[1 * 3 + 1] = 1;  // coefficient x, tuple (x^2)
  Chain b1 = ctx.connes_beta(c1);
  Vector e1(ch.space_size(2));
  e1[(0 * 2 + 1) * 3 + 0] = 1;
  e1[(1 * 2 + 0) * 3 + 0] = -1;
  EXPECT_EQ(b1.values, e1);
}

// d beta + beta d equals T - 1 with the boundary (m a_1, ..) - .. + (-1)^p (a_p m, ..).
void expect_homotopy(const frobenius::FrobeniusStructure& fr, const Twist& tw, std::size_t max_p) {
  DualityContext ctx(fr, tw);
  const auto& ch = ctx.chains();
  for (std::size_t p = 0; p <= max_p; ++p)
    for (std::size_t i = 0; i < ch.space_size(p); ++i) {
      Chain c = basis_chain(ch, p, i);
      Vector lhs = ch.chain_differential(ctx.connes_beta(c)).values;
      if (p > 0) {
        Vector extra = ctx.connes_beta(ch.chain_differential(c)).values;
        for (std::size_t k = 0; k < lhs.size(); ++k) lhs[k] += extra[k];
      }
      Vector rhs = ctx.t_operator(c).values;
      for (std::size_t k = 0; k < rhs.size(); ++k) rhs[k] -= c.values[k];
      ASSERT_EQ(lhs, rhs) << "level " << p << " basis " << i;
    }
}

TEST(ConnesOperator, HomotopyIdentity) {
  expect_homotopy(examples::build_truncated(3), Twist::none(), 3);
  expect_homotopy(lambda_qci(2, 2, 2), Twist::none(), 3);
  auto r = examples::build_truncated(2);
  expect_homotopy(r, Twist::right(algebra::Bicharacter::scalar(3), {1}), 3);
  expect_homotopy(r, Twist::left(algebra::Bicharacter::scalar(3), {1}), 3);
}

TEST(TOperator, NakayamaScalesGenerator) {
  auto fr = lambda_qci(2, 2, 2);
  DualityContext ctx(fr, Twist::none());
  Chain c{0, Vector(4)};
  c.values[2] = 1;  // x (x) 1
  Chain t = ctx.t_operator(c);
  Vector expect(4);
  expect[2] = Scalar(1, 2);
  EXPECT_EQ(t.values, expect);
  // T commutes with the boundary.
  const auto& ch = ctx.chains();
  for (std::size_t i = 0; i < ch.space_size(2); ++i) {
    Chain b = basis_chain(ch, 2, i);
    EXPECT_EQ(ch.chain_differential(ctx.t_operator(b)).values, ctx.t_operator(ch.chain_differential(b)).values);
  }
}

// <delta f, c> = <f, d c> under the transport, for every twist kind.
void expect_transport_chain_map(const frobenius::FrobeniusStructure& fr, const Twist& tw, std::size_t max_p) {
  DualityContext ctx(fr, tw);
  const auto& co = ctx.cochains();
  const auto& ch = ctx.chains();
  for (std::size_t p = 0; p <= max_p; ++p)
    for (const auto& [deg, idx] : co.blocks(p))
      for (std::size_t e : idx) {
        Cochain f = testing::basis_cochain(co, p, e);
        Vector lhs = ctx.dual_transport(co.differential(f));
        Vector phi = ctx.dual_transport(f);
        for (std::size_t c = 0; c < ch.space_size(p + 1); ++c) {
          Chain bc = basis_chain(ch, p + 1, c);
          ASSERT_EQ(lhs[c], testing::dot(phi, ch.chain_differential(bc).values))
              << "level " << p << " entry " << e << " chain " << c;
        }
      }
}

TEST(DualTransport, IsChainMap) {
  auto r = examples::build_truncated(2);
  expect_transport_chain_map(r, Twist::none(), 2);
  expect_transport_chain_map(r, Twist::right(algebra::Bicharacter::scalar(2), {1}), 2);
  expect_transport_chain_map(r, Twist::left(algebra::Bicharacter::scalar(2), {1}), 2);
  expect_transport_chain_map(lambda_qci(2, 2, 3), Twist::none(), 1);
  auto r3 = examples::build_truncated(3);
  expect_transport_chain_map(r3, Twist::right(algebra::Bicharacter::scalar(Scalar(1, 3)), {2}), 2);
}

TEST(DualTransport, RoundTrip) {
  std::mt19937 rng(11);
  auto fr = lambda_qci(2, 2, 2);
  DualityContext ctx(fr, Twist::none());
  for (std::size_t p = 0; p <= 2; ++p) {
    Cochain f = random_cochain(ctx.cochains(), p, rng);
    EXPECT_EQ(ctx.dual_transport_inverse(p, ctx.dual_transport(f)).values, f.values);
  }
  auto r = examples::build_truncated(3);
  DualityContext tw(r, Twist::right(algebra::Bicharacter::scalar(2), {1}));
  for (std::size_t p = 0; p <= 2; ++p)
    for (const auto& [deg, idx] : tw.cochains().blocks(p)) {
      Cochain f{p, Vector(tw.cochains().space_size(p)), deg};
      for (std::size_t i : idx) f.values[i] = static_cast<long>(i % 5) - 2;
      EXPECT_EQ(tw.dual_transport_inverse(p, tw.dual_transport(f)).values, f.values);
    }
  Cochain mixed{0, Vector{1, 1, 0}, std::nullopt};
  EXPECT_THROW(tw.dual_transport(mixed), InputError);
}

TEST(InvariantRepresentative, FixedAndCohomologous) {
  auto fr = lambda_qci(2, 2, 2);
  DualityContext ctx(fr, Twist::none());
  const auto& co = ctx.cochains();
  for (std::size_t p = 0; p <= 3; ++p) {
    auto h = hochschild::cohomology(co, p);
    for (const auto& rep : h.representatives) {
      Cochain inv = ctx.invariant_representative(rep);
      EXPECT_TRUE(ctx.is_invariant(inv));
      EXPECT_TRUE(co.is_cocycle(inv));
      EXPECT_TRUE(hochschild::classes_equal(co, inv, rep));
      EXPECT_EQ(ctx.invariant_representative(inv).values, inv.values);
    }
  }
  auto sym = examples::build_truncated(3);
  DualityContext id_ctx(sym, Twist::none());
  for (const auto& rep : hochschild::cohomology(id_ctx.cochains(), 1).representatives)
    EXPECT_EQ(id_ctx.invariant_representative(rep).values, rep.values);
}

TEST(BarComplex, SizeCapRefusesLargeLevels) {
  auto fr = lambda_qci(2, 2, 2);
  BarComplex cx(fr.algebra, algebra::regular_bimodule(fr.algebra), 1000);
  EXPECT_NO_THROW(cx.space_size(4));
  EXPECT_THROW(cx.space_size(6), SizeError);
}

}  // namespace
}  // namespace twistbv
