#include "twistbv/comparison.hpp"

#include <algorithm>
#include <set>
#include <tuple>

namespace twistbv::comparison {

using algebra::bicharacter_eval;
using hochschild::BarComplex;
using hochschild::Twist;

namespace {

Scalar sign_of(std::size_t e) { return (e % 2 == 0) ? Scalar(1) : Scalar(-1); }

std::size_t ipow(std::size_t base, std::size_t e) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < e; ++i) r *= base;
  return r;
}

std::vector<std::size_t> decode(std::size_t base, std::size_t level, std::size_t idx) {
  std::vector<std::size_t> out(level);
  for (std::size_t i = level; i > 0; --i) {
    out[i - 1] = idx % base;
    idx /= base;
  }
  return out;
}

std::size_t encode(std::size_t base, const std::vector<std::size_t>& slots) {
  std::size_t idx = 0;
  for (std::size_t s : slots) idx = idx * base + s;
  return idx;
}

// Product of basis elements, expanded.
Vector basis_product(const algebra::GradedAlgebra& alg, const std::vector<std::size_t>& factors) {
  Vector acc = alg.unit_vector();
  for (std::size_t f : factors) acc = algebra::multiply(alg, acc, alg.basis_vector(f));
  return acc;
}

}  // namespace

std::vector<Shuffle> shuffles(std::size_t p, std::size_t q) {
  std::vector<Shuffle> out;
  const std::size_t n = p + q;
  std::vector<bool> choose(n, false);
  std::fill(choose.begin(), choose.begin() + static_cast<long>(p), true);
  // prev_permutation on a descending-sorted mask enumerates lexicographic position sets.
  do {
    Shuffle s;
    s.position.resize(n);
    std::size_t a = 0, b = p;
    for (std::size_t pos = 0; pos < n; ++pos) {
      if (choose[pos]) s.position[a++] = pos;
      else s.position[b++] = pos;
    }
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < p; ++i)
      for (std::size_t j = p; j < n; ++j)
        if (s.position[j] < s.position[i]) ++inversions;
    s.sign = inversions % 2 == 0 ? 1 : -1;
    out.push_back(std::move(s));
  } while (std::prev_permutation(choose.begin(), choose.end()));
  return out;
}

ProductSetup::ProductSetup(FrobeniusStructure r, FrobeniusStructure s, Bicharacter t, std::size_t size_cap)
    : r_(std::move(r)), s_(std::move(s)), t_(std::move(t)), cap_(size_cap) {
  algebra::validate_bicharacter(t_);
  if (t_.q.rows() != r_.algebra.grading_rank() || t_.q.cols() != s_.algebra.grading_rank())
    throw InputError("bicharacter shape does not match the grading ranks");
  p_ = frobenius::twisted_frobenius_product(r_, s_, t_);
  const auto& pa = p_.algebra;
  for (std::size_t i : r_.algebra.reduced_basis())
    embed_left_.push_back(static_cast<std::size_t>(pa.reduced_position(product_index(i, s_.algebra.unit_index()))));
  for (std::size_t j : s_.algebra.reduced_basis())
    embed_right_.push_back(static_cast<std::size_t>(pa.reduced_position(product_index(r_.algebra.unit_index(), j))));
}

const bv::BVContext& ProductSetup::product_context() const {
  if (!pctx_) pctx_ = std::make_unique<bv::BVContext>(p_, Twist::none(), cap_);
  return *pctx_;
}

std::vector<SparseEntry> ez_twisted(const ProductSetup& ps, const std::vector<std::size_t>& r_slots,
                                    const std::vector<std::size_t>& s_slots, const ComparisonOptions& opt) {
  const std::size_t n = r_slots.size(), m = s_slots.size();
  const auto& ra = ps.left().algebra;
  const auto& sa = ps.right().algebra;
  const std::size_t base = ps.product().algebra.reduced_basis().size();
  const Scalar global = opt.signs == SignConvention::DropEzSign ? Scalar(1) : sign_of(n * m);
  std::vector<SparseEntry> out;
  for (const Shuffle& sh : shuffles(n, m)) {
    std::vector<std::size_t> z(n + m);
    for (std::size_t a = 0; a < n; ++a) z[sh.position[a]] = ps.embed_left(r_slots[a]);
    for (std::size_t b = 0; b < m; ++b) z[sh.position[n + b]] = ps.embed_right(s_slots[b]);
    Scalar c = global * sh.sign;
    if (!opt.drop_ez_coefficients)
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < m; ++b)
          if (sh.position[n + b] < sh.position[a])
            c /= bicharacter_eval(ps.bichar(), ra.degree(ra.reduced_basis()[r_slots[a]]),
                                  sa.degree(sa.reduced_basis()[s_slots[b]]));
    out.push_back({encode(base, z), c});
  }
  return out;
}

std::vector<AWTerm> aw_split(const ProductSetup& ps, const std::vector<std::size_t>& slots, std::size_t p,
                             const ComparisonOptions& opt) {
  const auto& pa = ps.product().algebra;
  const auto& ra = ps.left().algebra;
  const auto& sa = ps.right().algebra;
  const std::size_t N = slots.size(), ds = sa.dim();
  std::vector<std::size_t> rf(N), sf(N);
  for (std::size_t k = 0; k < N; ++k) {
    const std::size_t idx = pa.reduced_basis()[slots[k]];
    rf[k] = idx / ds;
    sf[k] = idx % ds;
  }
  std::vector<AWTerm> out;
  std::vector<std::size_t> r_tuple, s_tuple;
  for (std::size_t k = p; k < N; ++k) {
    long pos = ra.reduced_position(rf[k]);
    if (pos < 0) return out;
    r_tuple.push_back(static_cast<std::size_t>(pos));
  }
  for (std::size_t k = 0; k < p; ++k) {
    long pos = sa.reduced_position(sf[k]);
    if (pos < 0) return out;
    s_tuple.push_back(static_cast<std::size_t>(pos));
  }
  Scalar coef = opt.signs == SignConvention::DropAwSign ? Scalar(1) : sign_of(p * (N - p));
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = i + 1; j < N; ++j) coef *= bicharacter_eval(ps.bichar(), ra.degree(rf[j]), sa.degree(sf[i]));
  Vector left = basis_product(ra, std::vector<std::size_t>(rf.begin(), rf.begin() + static_cast<long>(p)));
  Vector right = basis_product(sa, std::vector<std::size_t>(sf.begin() + static_cast<long>(p), sf.end()));
  for (std::size_t l = 0; l < left.size(); ++l) {
    if (left[l] == 0) continue;
    for (std::size_t r = 0; r < right.size(); ++r)
      if (right[r] != 0) out.push_back({l, r_tuple, s_tuple, r, coef * left[l] * right[r]});
  }
  return out;
}

std::vector<AWTerm> aw_twisted(const ProductSetup& ps, const std::vector<std::size_t>& slots,
                               const ComparisonOptions& opt) {
  std::vector<AWTerm> out;
  for (std::size_t p = 0; p <= slots.size(); ++p) {
    auto part = aw_split(ps, slots, p, opt);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

IdentityReport identity_check(const ProductSetup& ps, std::size_t max_level, const ComparisonOptions& opt) {
  IdentityReport rep;
  const std::size_t dr = ps.left_reduced_dim(), ds = ps.right_reduced_dim();
  const std::size_t base = ps.product().algebra.reduced_basis().size();
  const std::size_t ur = ps.left().algebra.unit_index(), us = ps.right().algebra.unit_index();
  using Key = std::tuple<std::size_t, std::vector<std::size_t>, std::vector<std::size_t>, std::size_t>;
  for (std::size_t total = 0; total <= max_level; ++total)
    for (std::size_t n = 0; n <= total; ++n) {
      const std::size_t m = total - n;
      for (std::size_t x = 0; x < ipow(dr, n); ++x)
        for (std::size_t y = 0; y < ipow(ds, m); ++y) {
          ++rep.pairs_checked;
          auto rs = decode(dr, n, x);
          auto ss = decode(ds, m, y);
          std::map<Key, Scalar> acc;
          for (const auto& e : ez_twisted(ps, rs, ss, opt))
            for (const auto& term : aw_twisted(ps, decode(base, total, e.index), opt)) {
              Scalar& slot = acc[Key{term.left_multiplier, term.r_slots, term.s_slots, term.right_multiplier}];
              slot += e.coeff * term.coeff;
            }
          bool good = true;
          for (const auto& [key, v] : acc) {
            if (v == 0) continue;
            const bool diag = std::get<0>(key) == ur && std::get<1>(key) == rs && std::get<2>(key) == ss &&
                              std::get<3>(key) == us;
            if (!diag || v != 1) good = false;
          }
          auto it = acc.find(Key{ur, rs, ss, us});
          if (it == acc.end() || it->second != 1) good = false;
          if (!good)
            rep.failures.push_back("levels (" + std::to_string(n) + "," + std::to_string(m) + ") pair (" +
                                   std::to_string(x) + "," + std::to_string(y) + ")");
        }
    }
  return rep;
}

ProductCochain box_product(const ProductSetup& ps, const Cochain& f, const Cochain& g) {
  const auto& ra = ps.left().algebra;
  const auto& sa = ps.right().algebra;
  const std::size_t n = f.level, m = g.level;
  const std::size_t tr = ipow(ps.left_reduced_dim(), n), ts = ipow(ps.right_reduced_dim(), m);
  if (f.values.size() != tr * ra.dim() || g.values.size() != ts * sa.dim())
    throw InputError("box product: cochain sizes do not match the factors");
  const std::size_t dp = ps.product().algebra.dim();
  ProductCochain h{n, m, Vector(tr * ts * dp)};
  const Scalar sg = sign_of(n * m);
  for (std::size_t x = 0; x < tr; ++x)
    for (std::size_t a = 0; a < ra.dim(); ++a) {
      const Scalar& fv = f.values[x * ra.dim() + a];
      if (fv == 0) continue;
      for (std::size_t y = 0; y < ts; ++y)
        for (std::size_t b = 0; b < sa.dim(); ++b) {
          const Scalar& gv = g.values[y * sa.dim() + b];
          if (gv != 0) h.values[(x * ts + y) * dp + ps.product_index(a, b)] += sg * fv * gv;
        }
    }
  return h;
}

void check_box_twists(const ProductSetup& ps, const Cochain& f, const Twist& f_twist, const Cochain& g,
                      const Twist& g_twist) {
  (void)ps;
  if (!f.degree || !g.degree) throw InputError("box product of twisted classes needs homogeneous factors");
  auto twist_degree = [](const Twist& tw, hochschild::TwistSide side, std::size_t rank) {
    if (tw.side == hochschild::TwistSide::None) return Degree(rank, 0);
    if (tw.side != side) throw InputError("box product: factor twisted on the wrong side");
    return tw.degree;
  };
  if (twist_degree(f_twist, hochschild::TwistSide::Right, g.degree->size()) != *g.degree)
    throw InputError("box product: left factor must be twisted by the degree of the right factor");
  if (twist_degree(g_twist, hochschild::TwistSide::Left, f.degree->size()) != *f.degree)
    throw InputError("box product: right factor must be twisted by the degree of the left factor");
}

Cochain pullback(const ProductSetup& ps, const ProductCochain& h, const ComparisonOptions& opt) {
  const auto& pa = ps.product().algebra;
  const auto& ra = ps.left().algebra;
  const auto& sa = ps.right().algebra;
  const std::size_t N = h.n + h.m, dp = pa.dim();
  const std::size_t base = pa.reduced_basis().size();
  const std::size_t ts = ipow(ps.right_reduced_dim(), h.m);
  const BarComplex& cx = ps.product_context().complex();
  Cochain out{N, Vector(cx.space_size(N)), std::nullopt};
  if (h.values.size() != ipow(ps.left_reduced_dim(), h.n) * ts * dp)
    throw InputError("pullback: product cochain has the wrong size");
  for (std::size_t z = 0; z < cx.tuple_count(N); ++z)
    for (const auto& term : aw_split(ps, decode(base, N, z), h.m, opt)) {
      const std::size_t x = encode(ps.left_reduced_dim(), term.r_slots);
      const std::size_t y = encode(ps.right_reduced_dim(), term.s_slots);
      for (std::size_t k = 0; k < dp; ++k) {
        const Scalar& v = h.values[(x * ts + y) * dp + k];
        if (v == 0) continue;
        // (L (x) 1) (a (x) b) (1 (x) R) = L a (x) b R
        for (const auto& lt : ra.product(term.left_multiplier, k / sa.dim()))
          for (const auto& rt : sa.product(k % sa.dim(), term.right_multiplier))
            out.values[z * dp + ps.product_index(lt.index, rt.index)] += term.coeff * v * lt.coeff * rt.coeff;
      }
    }
  return out;
}

ProductCochain pushforward(const ProductSetup& ps, const Cochain& big, std::size_t n, std::size_t m,
                           const ComparisonOptions& opt) {
  const std::size_t dp = ps.product().algebra.dim();
  const std::size_t tr = ipow(ps.left_reduced_dim(), n), ts = ipow(ps.right_reduced_dim(), m);
  if (big.level != n + m) throw InputError("pushforward: level mismatch");
  ProductCochain h{n, m, Vector(tr * ts * dp)};
  for (std::size_t x = 0; x < tr; ++x)
    for (std::size_t y = 0; y < ts; ++y)
      for (const auto& e : ez_twisted(ps, decode(ps.left_reduced_dim(), n, x), decode(ps.right_reduced_dim(), m, y), opt))
        for (std::size_t k = 0; k < dp; ++k) {
          const Scalar& v = big.values[e.index * dp + k];
          if (v != 0) h.values[(x * ts + y) * dp + k] += e.coeff * v;
        }
  return h;
}

std::vector<ProductCochain> delta_tilde(const ProductSetup& ps, const ProductCochain& h,
                                        const ComparisonOptions& opt) {
  const std::size_t N = h.n + h.m;
  if (N == 0) return {};
  const bv::BVContext& ctx = ps.product_context();
  Cochain inv = ctx.invariant_representative(pullback(ps, h, opt));
  Cochain d = bv::bv_delta(ctx, inv, opt.delta);
  std::vector<ProductCochain> out;
  for (std::size_t n = 0; n < N; ++n) out.push_back(pushforward(ps, d, n, N - 1 - n, opt));
  return out;
}

bool DecompositionTable::ok() const {
  for (const auto& r : rows)
    if (r.product_dim != r.component_sum) return false;
  return true;
}

namespace {

// Internal degrees realized by cochains of levels 0..max_level.
std::set<Degree> realized_degrees(const BarComplex& cx, std::size_t max_level) {
  std::set<Degree> out;
  for (std::size_t p = 0; p <= max_level; ++p)
    for (const auto& [deg, idx] : cx.blocks(p)) out.insert(deg);
  return out;
}

Degree head(const Degree& d, std::size_t n) { return Degree(d.begin(), d.begin() + static_cast<long>(n)); }
Degree tail(const Degree& d, std::size_t n) { return Degree(d.begin() + static_cast<long>(n), d.end()); }

}  // namespace

DecompositionTable decomposition_dims(const ProductSetup& ps, std::size_t max_level) {
  DecompositionTable table;
  const auto& r = ps.left();
  const auto& s = ps.right();
  const std::size_t rr = r.algebra.grading_rank();
  const BarComplex& pcx = ps.product_context().complex();

  std::map<std::pair<std::size_t, std::pair<Degree, Degree>>, DecompositionRow> rows;
  for (std::size_t level = 0; level <= max_level; ++level) {
    auto h = hochschild::cohomology(pcx, level);
    table.level_totals.push_back(h.dimension);
    for (const auto& [deg, dim] : h.graded_dims) {
      auto& row = rows[{level, {head(deg, rr), tail(deg, rr)}}];
      row.level = level;
      row.left_degree = head(deg, rr);
      row.right_degree = tail(deg, rr);
      row.product_dim = dim;
    }
  }

  BarComplex r_plain(r.algebra, algebra::regular_bimodule(r.algebra), ps.size_cap());
  BarComplex s_plain(s.algebra, algebra::regular_bimodule(s.algebra), ps.size_cap());
  const auto a_degrees = realized_degrees(r_plain, max_level);
  const auto b_degrees = realized_degrees(s_plain, max_level);

  // dims[b][i][a] = dim HH^i(R, R_b^)^a and sdims[a][j][b] = dim HH^j(S, _a^S)^b
  std::map<Degree, std::vector<std::map<Degree, std::size_t>>> rdims, sdims;
  for (const auto& b : b_degrees) {
    BarComplex cx(r.algebra, algebra::twisted_bimodule_right(r.algebra, ps.bichar(), b), ps.size_cap());
    for (std::size_t i = 0; i <= max_level; ++i) rdims[b].push_back(hochschild::cohomology(cx, i).graded_dims);
  }
  for (const auto& a : a_degrees) {
    BarComplex cx(s.algebra, algebra::twisted_bimodule_left(s.algebra, ps.bichar(), a), ps.size_cap());
    for (std::size_t j = 0; j <= max_level; ++j) sdims[a].push_back(hochschild::cohomology(cx, j).graded_dims);
  }
  for (std::size_t level = 0; level <= max_level; ++level)
    for (const auto& a : a_degrees)
      for (const auto& b : b_degrees) {
        std::size_t sum = 0;
        for (std::size_t i = 0; i <= level; ++i) {
          const auto& ri = rdims[b][i];
          const auto& sj = sdims[a][level - i];
          auto ra = ri.find(a);
          auto sb = sj.find(b);
          if (ra != ri.end() && sb != sj.end()) sum += ra->second * sb->second;
        }
        if (sum == 0) continue;
        auto& row = rows[{level, {a, b}}];
        row.level = level;
        row.left_degree = a;
        row.right_degree = b;
        row.component_sum = sum;
      }
  for (auto& [key, row] : rows) table.rows.push_back(row);
  return table;
}

bool MainTheoremReport::ok() const {
  if (!precondition_failures.empty()) return false;
  for (const auto& p : pairs)
    if (!p.pass) return false;
  return true;
}

namespace {

void accumulate(Cochain& into, const Cochain& c, const Scalar& s) {
  for (std::size_t i = 0; i < c.values.size(); ++i)
    if (c.values[i] != 0) into.values[i] += s * c.values[i];
}

struct ComponentClass {
  Cochain rep;  // invariant representative
  std::size_t index;
};

}  // namespace

MainTheoremReport verify_main_theorem(const ProductSetup& ps, std::size_t max_level, const ComparisonOptions& opt) {
  MainTheoremReport report;
  const auto& r = ps.left();
  const auto& s = ps.right();
  if (!frobenius::nakayama_semisimple(r)) report.precondition_failures.push_back("left Nakayama map is not semisimple");
  if (!frobenius::nakayama_semisimple(s)) report.precondition_failures.push_back("right Nakayama map is not semisimple");
  if (!report.precondition_failures.empty()) return report;

  const bv::BVContext& pctx = ps.product_context();
  const BarComplex& pcx = pctx.complex();
  BarComplex r_plain(r.algebra, algebra::regular_bimodule(r.algebra), ps.size_cap());
  BarComplex s_plain(s.algebra, algebra::regular_bimodule(s.algebra), ps.size_cap());
  const auto d_degrees = realized_degrees(r_plain, max_level);
  const auto c_degrees = realized_degrees(s_plain, max_level);

  std::map<Degree, std::unique_ptr<bv::BVContext>> r_ctx, s_ctx;
  auto right_ctx = [&](const Degree& c) -> const bv::BVContext& {
    auto& slot = r_ctx[c];
    if (!slot) slot = std::make_unique<bv::BVContext>(r, Twist::right(ps.bichar(), c), ps.size_cap());
    return *slot;
  };
  auto left_ctx = [&](const Degree& d) -> const bv::BVContext& {
    auto& slot = s_ctx[d];
    if (!slot) slot = std::make_unique<bv::BVContext>(s, Twist::left(ps.bichar(), d), ps.size_cap());
    return *slot;
  };

  for (const auto& d : d_degrees)
    for (const auto& c : c_degrees) {
      const bv::BVContext* rc = nullptr;
      const bv::BVContext* sc = nullptr;
      try {
        rc = &right_ctx(c);
        sc = &left_ctx(d);
      } catch (const std::exception& e) {
        report.precondition_failures.push_back("twisted context (" + algebra::format_degree(d) + ", " +
                                               algebra::format_degree(c) + "): " + e.what());
        continue;
      }
      for (std::size_t n = 0; n <= max_level; ++n) {
        auto hf = hochschild::cohomology_in_degree(rc->complex(), n, d);
        if (hf.dimension == 0) continue;
        for (std::size_t m = 0; n + m <= max_level; ++m) {
          auto hg = hochschild::cohomology_in_degree(sc->complex(), m, c);
          for (std::size_t fi = 0; fi < hf.dimension; ++fi)
            for (std::size_t gi = 0; gi < hg.dimension; ++gi) {
              PairResult pr{d, c, n, m, fi, gi, false, ""};
              try {
                Cochain f = rc->invariant_representative(hf.representatives[fi]);
                Cochain g = sc->invariant_representative(hg.representatives[gi]);
                f.degree = d;
                g.degree = c;
                check_box_twists(ps, f, rc->twist(), g, sc->twist());
                const std::size_t N = n + m;
                if (N == 0) {
                  pr.pass = true;
                  pr.detail = "level 0: both sides vanish";
                  report.pairs.push_back(std::move(pr));
                  continue;
                }
                Cochain lhs{N - 1, Vector(pcx.space_size(N - 1)), std::nullopt};
                for (const auto& comp : delta_tilde(ps, box_product(ps, f, g), opt))
                  accumulate(lhs, pullback(ps, comp, opt), Scalar(1));

                Cochain rhs{N - 1, Vector(pcx.space_size(N - 1)), std::nullopt};
                const Scalar outer = sign_of(m * n);
                if (auto df = bv::delta_or_zero(*rc, f, opt.delta))
                  accumulate(rhs, pullback(ps, box_product(ps, *df, g), opt), outer);
                if (auto dg = bv::delta_or_zero(*sc, g, opt.delta))
                  accumulate(rhs, pullback(ps, box_product(ps, f, *dg), opt), outer * sign_of(n));

                if (!pcx.is_cocycle(lhs)) {
                  pr.detail = "left side is not a cocycle";
                } else if (!pcx.is_cocycle(rhs)) {
                  pr.detail = "right side is not a cocycle";
                } else {
                  pr.pass = hochschild::classes_equal(pcx, lhs, rhs);
                  pr.detail = pr.pass ? "classes agree" : "classes differ";
                }
              } catch (const std::exception& e) {
                pr.detail = e.what();
              }
              report.pairs.push_back(std::move(pr));
            }
        }
      }
    }
  return report;
}

}  // namespace twistbv::comparison
