#include "twistbv/bv.hpp"

#include <functional>

namespace twistbv::bv {

using algebra::bicharacter_eval;
using algebra::Degree;

namespace {

Scalar sign_of(std::size_t e) { return (e % 2 == 0) ? Scalar(1) : Scalar(-1); }

void require_delta_input(const BVContext& ctx, const Cochain& f) {
  const BarComplex& cx = ctx.complex();
  if (f.level == 0) throw InputError("BV operator is not defined on level 0 input");
  if (f.values.size() != cx.space_size(f.level)) throw InputError("cochain size does not match its level");
  if (!cx.is_cocycle(f)) throw InputError("BV operator needs a cocycle");
  if (!ctx.duality().is_invariant(f))
    throw InputError("BV operator needs a T*-invariant representative (use invariant_representative)");
  if (ctx.twist().side != TwistSide::None && !is_zero(f.values) && !cx.homogeneous_degree(f))
    throw InputError("twisted BV operator needs a homogeneous cochain");
}

// <Delta f(r), e_j> = sum over beta(e_j, r) of <f(tuple), 1>, divided by t(|e_j|, b) for a right twist.
Cochain delta_core(const BVContext& ctx, const Cochain& f, const DeltaOptions& opt) {
  require_delta_input(ctx, f);
  const auto& frob = ctx.frobenius();
  const auto& alg = frob.algebra;
  const BarComplex& cx = ctx.complex();
  const std::size_t n = alg.dim(), u = alg.unit_index();
  const std::size_t level = f.level, p = level - 1;

  Vector with_unit(cx.tuple_count(level));
  for (std::size_t t = 0; t < with_unit.size(); ++t)
    for (std::size_t k = 0; k < n; ++k)
      if (f.values[t * n + k] != 0 && frob.gram(k, u) != 0) with_unit[t] += f.values[t * n + k] * frob.gram(k, u);

  Vector divisor(n, Scalar(1));
  if (ctx.twist().side == TwistSide::Right && !opt.drop_twist_factor)
    for (std::size_t j = 0; j < n; ++j) divisor[j] = bicharacter_eval(ctx.twist().t, alg.degree(j), ctx.twist().degree);

  Cochain out{p, Vector(cx.space_size(p)), f.degree};
  Vector pairings(n);
  for (std::size_t r = 0; r < cx.tuple_count(p); ++r) {
    bool any = false;
    for (std::size_t j = 0; j < n; ++j) {
      pairings[j] = 0;
      long x0 = alg.reduced_position(j);
      if (x0 < 0) continue;
      ctx.duality().beta_tuples(
          p, r, static_cast<std::size_t>(x0),
          [&](std::size_t t, const Scalar& c) {
            if (with_unit[t] != 0) pairings[j] += c * with_unit[t];
          },
          opt.flip_sign);
      if (pairings[j] != 0) {
        pairings[j] /= divisor[j];
        any = true;
      }
    }
    if (!any) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (pairings[j] == 0) continue;
      for (std::size_t k = 0; k < n; ++k)
        if (frob.gram_inverse(j, k) != 0) out.values[r * n + k] += pairings[j] * frob.gram_inverse(j, k);
    }
  }
  return out;
}

}  // namespace

BVContext::BVContext(frobenius::FrobeniusStructure frob, Twist tw, std::size_t size_cap)
    : duality_(std::move(frob), std::move(tw), size_cap) {
  if (!linalg::is_semisimple(duality_.psi()))
    throw frobenius::ValidationError("composite automorphism is not semisimple");
}

Cochain bv_delta(const BVContext& ctx, const Cochain& f, const DeltaOptions& opt) {
  if (ctx.twist().side != TwistSide::None) throw InputError("bv_delta needs an untwisted context");
  return delta_core(ctx, f, opt);
}

Cochain bv_delta_right(const BVContext& ctx, const Cochain& f, const DeltaOptions& opt) {
  if (ctx.twist().side != TwistSide::Right) throw InputError("bv_delta_right needs a right-twisted context");
  return delta_core(ctx, f, opt);
}

Cochain bv_delta_left(const BVContext& ctx, const Cochain& f, const DeltaOptions& opt) {
  if (ctx.twist().side != TwistSide::Left) throw InputError("bv_delta_left needs a left-twisted context");
  return delta_core(ctx, f, opt);
}

std::optional<Cochain> delta_or_zero(const BVContext& ctx, const Cochain& f, const DeltaOptions& opt) {
  if (f.level == 0) return std::nullopt;
  return delta_core(ctx, f, opt);
}

Cochain cup_product(const algebra::GradedAlgebra& alg, const Cochain& f, const Twist& f_twist, const Cochain& g,
                    const Twist& g_twist, Twist* out_twist) {
  const std::size_t n = alg.dim();
  const std::size_t d = alg.reduced_basis().size();
  Twist result = Twist::none();
  if (f_twist.side != TwistSide::None || g_twist.side != TwistSide::None) {
    const Twist& ref = f_twist.side != TwistSide::None ? f_twist : g_twist;
    auto compatible = [&](const Twist& tw) {
      return tw.side == TwistSide::None || (tw.side == ref.side && tw.t.q == ref.t.q);
    };
    if (!compatible(f_twist) || !compatible(g_twist))
      throw InputError("cup product needs coefficients twisted on the same side by the same bicharacter");
    Degree zero(ref.degree.size(), 0);
    const Degree& a = f_twist.side == TwistSide::None ? zero : f_twist.degree;
    const Degree& b = g_twist.side == TwistSide::None ? zero : g_twist.degree;
    result = Twist{ref.side, algebra::add(a, b), ref.t};
  }
  std::size_t fp = 1, gq = 1;
  for (std::size_t i = 0; i < f.level; ++i) fp *= d;
  for (std::size_t i = 0; i < g.level; ++i) gq *= d;
  if (f.values.size() != fp * n || g.values.size() != gq * n) throw InputError("cup product: cochain sizes do not match the algebra");

  // Scalar for m * m' so the product is balanced: t(|m'|, b_f) for right twists, t(a_g, |m|) for left.
  auto factor = [&](std::size_t mk, std::size_t mk2) -> Scalar {
    if (f_twist.side == TwistSide::Right) return bicharacter_eval(f_twist.t, alg.degree(mk2), f_twist.degree);
    if (g_twist.side == TwistSide::Left) return bicharacter_eval(g_twist.t, g_twist.degree, alg.degree(mk));
    return Scalar(1);
  };

  Cochain out{f.level + g.level, Vector(fp * gq * n), std::nullopt};
  if (f.degree && g.degree) out.degree = algebra::add(*f.degree, *g.degree);
  for (std::size_t t1 = 0; t1 < fp; ++t1)
    for (std::size_t k1 = 0; k1 < n; ++k1) {
      const Scalar& a = f.values[t1 * n + k1];
      if (a == 0) continue;
      for (std::size_t t2 = 0; t2 < gq; ++t2)
        for (std::size_t k2 = 0; k2 < n; ++k2) {
          const Scalar& b = g.values[t2 * n + k2];
          if (b == 0) continue;
          Scalar c = a * b * factor(k1, k2);
          for (const auto& term : alg.product(k1, k2)) out.values[(t1 * gq + t2) * n + term.index] += c * term.coeff;
        }
    }
  if (out_twist) *out_twist = result;
  return out;
}

Cochain cup_product(const algebra::GradedAlgebra& alg, const Cochain& f, const Cochain& g) {
  return cup_product(alg, f, Twist::none(), g, Twist::none());
}

std::optional<Cochain> gerstenhaber_bracket(const BVContext& ctx, const Cochain& f, const Cochain& g,
                                            const DeltaOptions& opt, BracketSign sign) {
  if (ctx.twist().side != TwistSide::None) throw InputError("bracket needs regular coefficients");
  if (f.level + g.level == 0) return std::nullopt;
  const auto& alg = ctx.frobenius().algebra;
  const std::size_t level = f.level + g.level - 1;
  Cochain out{level, Vector(ctx.complex().space_size(level)), std::nullopt};
  auto accumulate = [&](const Cochain& c, const Scalar& s) {
    for (std::size_t i = 0; i < c.values.size(); ++i)
      if (c.values[i] != 0) out.values[i] += s * c.values[i];
  };
  Cochain fg = ctx.invariant_representative(cup_product(alg, f, g));
  accumulate(*delta_or_zero(ctx, fg, opt), Scalar(1));
  if (auto df = delta_or_zero(ctx, f, opt)) accumulate(cup_product(alg, *df, g), Scalar(-1));
  if (auto dg = delta_or_zero(ctx, g, opt)) accumulate(cup_product(alg, f, *dg), -sign_of(f.level));
  const Scalar overall =
      sign == BracketSign::Definition ? sign_of(f.level + 1) : sign_of((f.level + 1) * g.level + 1);
  for (auto& v : out.values)
    if (v != 0) v *= overall;
  if (f.degree && g.degree) out.degree = algebra::add(*f.degree, *g.degree);
  return out;
}

namespace {

struct NamedClass {
  std::string name;
  Cochain rep;
};

// Sum of signed optional cochains at one level; empty terms are zero.
bool combination_is_coboundary(const BarComplex& cx, std::size_t level,
                               const std::vector<std::pair<Scalar, std::optional<Cochain>>>& terms) {
  Cochain sum{level, Vector(cx.space_size(level)), std::nullopt};
  for (const auto& [s, c] : terms) {
    if (!c) continue;
    for (std::size_t i = 0; i < c->values.size(); ++i)
      if (c->values[i] != 0) sum.values[i] += s * c->values[i];
  }
  if (!cx.is_cocycle(sum)) return false;
  return hochschild::is_coboundary(cx, sum);
}

}  // namespace

BVAxiomReport check_bv_axioms(const BVContext& ctx, std::size_t max_level, const DeltaOptions& opt,
                              BracketSign sign) {
  BVAxiomReport rep;
  const BarComplex& cx = ctx.complex();
  const auto& alg = ctx.frobenius().algebra;
  std::vector<NamedClass> classes;
  for (std::size_t p = 0; p <= max_level; ++p) {
    auto h = hochschild::cohomology(cx, p);
    for (std::size_t i = 0; i < h.representatives.size(); ++i)
      classes.push_back({"HH^" + std::to_string(p) + "#" + std::to_string(i),
                         ctx.invariant_representative(h.representatives[i])});
  }
  rep.classes_checked = classes.size();
  auto fail = [&](const std::string& axiom, const std::string& witness) { rep.failures.push_back({axiom, witness}); };

  // Bracket with invariant-representative output, cached by class pair.
  std::map<std::pair<std::size_t, std::size_t>, std::optional<Cochain>> bracket_cache;
  auto bracket = [&](std::size_t i, std::size_t j) -> const std::optional<Cochain>& {
    auto key = std::make_pair(i, j);
    auto it = bracket_cache.find(key);
    if (it != bracket_cache.end()) return it->second;
    auto b = gerstenhaber_bracket(ctx, classes[i].rep, classes[j].rep, opt, sign);
    if (b) b = ctx.invariant_representative(*b);
    return bracket_cache.emplace(key, std::move(b)).first->second;
  };

  for (const auto& c : classes) {
    if (c.rep.level < 2) continue;
    ++rep.instances_checked;
    try {
      Cochain d1 = delta_core(ctx, c.rep, opt);
      if (!cx.is_cocycle(d1)) {
        fail("delta-squared", c.name + ": Delta output is not a cocycle");
        continue;
      }
      auto d2 = delta_or_zero(ctx, ctx.invariant_representative(d1), opt);
      if (d2 && !hochschild::is_coboundary(cx, *d2)) fail("delta-squared", c.name);
    } catch (const InputError& e) {
      fail("delta-squared", c.name + ": " + e.what());
    }
  }

  auto sgn = [](long e) { return (e % 2 == 0) ? Scalar(1) : Scalar(-1); };
  const std::size_t nc = classes.size();
  for (std::size_t i = 0; i < nc; ++i)
    for (std::size_t j = 0; j < nc; ++j) {
      const std::size_t p = classes[i].rep.level, q = classes[j].rep.level;
      if (p + q == 0 || p + q - 1 > max_level) continue;
      ++rep.instances_checked;
      const std::string w = "[" + classes[i].name + ", " + classes[j].name + "]";
      try {
        const long e = (static_cast<long>(p) - 1) * (static_cast<long>(q) - 1);
        if (!combination_is_coboundary(cx, p + q - 1, {{Scalar(1), bracket(i, j)}, {sgn(e), bracket(j, i)}}))
          fail("antisymmetry", w);
      } catch (const InputError& e) {
        fail("antisymmetry", w + ": " + e.what());
      }
    }

  for (std::size_t i = 0; i < nc; ++i)
    for (std::size_t j = 0; j < nc; ++j)
      for (std::size_t k = 0; k < nc; ++k) {
        const long p = static_cast<long>(classes[i].rep.level), q = static_cast<long>(classes[j].rep.level),
                   r = static_cast<long>(classes[k].rep.level);
        const std::string w = classes[i].name + ", " + classes[j].name + ", " + classes[k].name;
        // Jacobi: result level p + q + r - 2.
        if (p + q + r >= 2 && p + q + r - 2 <= static_cast<long>(max_level)) {
          ++rep.instances_checked;
          try {
            auto outer = [&](std::size_t a, std::size_t b, std::size_t c) -> std::optional<Cochain> {
              const auto& inner = bracket(a, b);
              if (!inner) return std::nullopt;
              return gerstenhaber_bracket(ctx, *inner, classes[c].rep, opt, sign);
            };
            const std::size_t level = static_cast<std::size_t>(p + q + r - 2);
            if (!combination_is_coboundary(cx, level,
                                           {{sgn((p - 1) * (r - 1)), outer(i, j, k)},
                                            {sgn((q - 1) * (p - 1)), outer(j, k, i)},
                                            {sgn((r - 1) * (q - 1)), outer(k, i, j)}}))
              fail("jacobi", w);
          } catch (const InputError& e) {
            fail("jacobi", w + ": " + e.what());
          }
        }
        // Derivation: [f, g u h] = [f, g] u h + (-1)^{(|f|-1)|g|} g u [f, h], result level p + q + r - 1.
        if (p + q + r >= 1 && p + q + r - 1 <= static_cast<long>(max_level)) {
          ++rep.instances_checked;
          try {
            const std::size_t level = static_cast<std::size_t>(p + q + r - 1);
            Cochain gh = ctx.invariant_representative(cup_product(alg, classes[j].rep, classes[k].rep));
            auto lhs = gerstenhaber_bracket(ctx, classes[i].rep, gh, opt, sign);
            std::optional<Cochain> first, second;
            if (const auto& fg = bracket(i, j)) first = cup_product(alg, *fg, classes[k].rep);
            if (const auto& fh = bracket(i, k)) second = cup_product(alg, classes[j].rep, *fh);
            if (!combination_is_coboundary(cx, level,
                                           {{Scalar(1), lhs}, {Scalar(-1), first}, {-sgn((p - 1) * q), second}}))
              fail("derivation", w);
          } catch (const InputError& e) {
            fail("derivation", w + ": " + e.what());
          }
        }
      }
  return rep;
}

}  // namespace twistbv::bv
