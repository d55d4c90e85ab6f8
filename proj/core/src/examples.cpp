#include "twistbv/examples.hpp"

#include <string>

namespace twistbv::examples {

FrobeniusStructure build_truncated(std::size_t n) {
  if (n < 2) throw InputError("truncated polynomial algebra needs n >= 2");
  std::vector<std::string> names;
  std::vector<algebra::Degree> degrees;
  for (std::size_t i = 0; i < n; ++i) {
    names.push_back(i == 0 ? "1" : i == 1 ? "x" : "x^" + std::to_string(i));
    degrees.push_back({static_cast<long>(i)});
  }
  algebra::GradedAlgebra alg(1, names, degrees, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; i + j < n; ++j) alg.set_constant(i, j, i + j, 1);
  linalg::Matrix gram(n, n);
  for (std::size_t i = 0; i < n; ++i) gram(i, n - 1 - i) = 1;
  return frobenius::validate_frobenius(alg, gram);
}

QciData build_qci(std::size_t m, std::size_t n, const Scalar& q) {
  if (q == 0) throw InputError("quantum parameter must be nonzero");
  return QciData{build_truncated(m), build_truncated(n), algebra::Bicharacter::scalar(q)};
}

FrobeniusStructure qci_product(const QciData& data) {
  return frobenius::twisted_frobenius_product(data.left, data.right, data.t);
}

}  // namespace twistbv::examples

namespace twistbv::examples {

namespace {

using hochschild::Cochain;

// c with v = c * e exactly, where e is a basis vector; throws if v is not such a multiple.
Scalar multiple_of(const Vector& v, std::size_t index, const std::string& what) {
  for (std::size_t i = 0; i < v.size(); ++i)
    if (i != index && v[i] != 0) throw std::logic_error(what + " is not a multiple of the expected class");
  return v[index];
}

// x[1] (x) 1 or 1 (x) y[1]: e -> (grading component of e) * e on the reduced basis.
Cochain euler_derivation(const algebra::GradedAlgebra& alg, std::size_t component) {
  const std::size_t d = alg.dim();
  const auto& red = alg.reduced_basis();
  Cochain f{1, Vector(red.size() * d), algebra::Degree(alg.grading_rank(), 0)};
  for (std::size_t pos = 0; pos < red.size(); ++pos) f.values[pos * d + red[pos]] = alg.degree(red[pos])[component];
  return f;
}

}  // namespace

QciReport qci_report(std::size_t m, std::size_t n, const Scalar& q, std::size_t max_level, std::size_t size_cap) {
  if (q == 0) throw InputError("quantum parameter must be nonzero");
  if (abs(q) == 1) throw InputError("q = " + format_scalar(q) + " is a root of unity; the QCI report covers only |q| != 1");
  QciData data = build_qci(m, n, q);
  comparison::ProductSetup ps(data.left, data.right, data.t, size_cap);
  const bv::BVContext& ctx = ps.product_context();
  const auto& alg = ps.product().algebra;
  const hochschild::BarComplex& cx = ctx.complex();

  QciReport rep;
  rep.m = m;
  rep.n = n;
  rep.q = q;
  rep.max_level = max_level;
  rep.dims = comparison::decomposition_dims(ps, max_level);

  const std::size_t top = ps.product_index(m - 1, n - 1);
  auto power_name = [](const char* var, std::size_t k) { return k == 1 ? std::string(var) : var + ("^" + std::to_string(k)); };
  rep.u = {"U", power_name("x", m - 1) + " (x) " + power_name("y", n - 1), Cochain{0, alg.basis_vector(top), alg.degree(top)}};
  rep.v = {"V", "x[1] (x) 1, Euler derivation of k[x]/(x^" + std::to_string(m) + ")",
           ctx.invariant_representative(euler_derivation(alg, 0))};
  rep.w = {"W", "1 (x) y[1], Euler derivation of k[y]/(y^" + std::to_string(n) + ")",
           ctx.invariant_representative(euler_derivation(alg, 1))};

  // U spans HH^0 in its bidegree; V and W span HH^1 in bidegree (0,0).
  auto h0 = hochschild::cohomology_in_degree(cx, 0, alg.degree(top));
  auto h1 = hochschild::cohomology_in_degree(cx, 1, algebra::Degree{0, 0});
  if (h0.dimension != 1 || !cx.is_cocycle(rep.u.rep)) throw std::logic_error("U does not span its bidegree of HH^0");
  if (h1.dimension != 2 || !cx.is_cocycle(rep.v.rep) || !cx.is_cocycle(rep.w.rep))
    throw std::logic_error("V, W are not cocycles spanning HH^1 in bidegree (0,0)");
  {
    Cochain diff = rep.v.rep;
    for (std::size_t i = 0; i < diff.values.size(); ++i) diff.values[i] += rep.w.rep.values[i];
    if (hochschild::is_coboundary(cx, rep.v.rep) || hochschild::is_coboundary(cx, rep.w.rep) ||
        hochschild::classes_equal(cx, rep.v.rep, rep.w.rep) || hochschild::is_coboundary(cx, diff))
      throw std::logic_error("V and W are not independent classes");
  }

  const std::size_t unit = alg.unit_index();
  rep.delta_u_zero = !bv::delta_or_zero(ctx, rep.u.rep).has_value();
  rep.delta_v = multiple_of(bv::bv_delta(ctx, rep.v.rep).values, unit, "Delta(V)");
  rep.delta_w = multiple_of(bv::bv_delta(ctx, rep.w.rep).values, unit, "Delta(W)");
  rep.bracket_vu_definition = multiple_of(
      bv::gerstenhaber_bracket(ctx, rep.v.rep, rep.u.rep, {}, bv::BracketSign::Definition)->values, top, "[V,U]");
  rep.bracket_vu_tradler = multiple_of(
      bv::gerstenhaber_bracket(ctx, rep.v.rep, rep.u.rep, {}, bv::BracketSign::Tradler)->values, top, "[V,U]");
  rep.theorem = comparison::verify_main_theorem(ps, max_level);
  return rep;
}

}  // namespace twistbv::examples
