#include "twistbv/hochschild.hpp"

#include <algorithm>
#include <functional>
#include <limits>

namespace twistbv::hochschild {

using algebra::add;
using algebra::subtract;

namespace {

Scalar sign_of(std::size_t e) { return (e % 2 == 0) ? Scalar(1) : Scalar(-1); }

// Position of idx inside a sorted block, or -1.
long block_position(const std::vector<std::size_t>& block, std::size_t idx) {
  auto it = std::lower_bound(block.begin(), block.end(), idx);
  if (it == block.end() || *it != idx) return -1;
  return static_cast<long>(it - block.begin());
}

// Expands a product of slotwise linear combinations into (tuple index, coeff).
void expand_slots(const std::vector<const std::vector<SparseEntry>*>& slots, std::size_t base,
                  const std::function<void(std::size_t, const Scalar&)>& emit) {
  const std::size_t n = slots.size();
  if (n == 0) {
    emit(0, Scalar(1));
    return;
  }
  std::vector<std::size_t> pos(n, 0);
  for (const auto* s : slots)
    if (s->empty()) return;
  while (true) {
    std::size_t idx = 0;
    Scalar c(1);
    for (std::size_t i = 0; i < n; ++i) {
      const SparseEntry& e = (*slots[i])[pos[i]];
      idx = idx * base + e.index;
      c *= e.coeff;
    }
    emit(idx, c);
    std::size_t i = n;
    while (i > 0) {
      --i;
      if (++pos[i] < slots[i]->size()) break;
      pos[i] = 0;
      if (i == 0) return;
    }
  }
}

}  // namespace

BarComplex::BarComplex(GradedAlgebra alg, TwistedBimodule module, std::size_t size_cap)
    : alg_(std::move(alg)), module_(std::move(module)), cap_(size_cap) {
  if (module_.left.size() != alg_.dim() || module_.right.size() != alg_.dim())
    throw InputError("bar complex: module actions do not match the algebra");
  const auto& rb = alg_.reduced_basis();
  const std::size_t d = rb.size();
  red_prod_.assign(d * d, {});
  red_fact_.assign(d, {});
  for (std::size_t x = 0; x < d; ++x)
    for (std::size_t y = 0; y < d; ++y)
      for (const auto& t : alg_.product(rb[x], rb[y])) {
        long z = alg_.reduced_position(t.index);
        if (z < 0) continue;
        red_prod_[x * d + y].push_back({static_cast<std::size_t>(z), t.coeff});
        red_fact_[z].push_back({x * d + y, t.coeff});
      }
}

std::size_t BarComplex::tuple_count(std::size_t p) const {
  std::size_t n = 1;
  const std::size_t d = reduced_dim();
  for (std::size_t i = 0; i < p; ++i) {
    if (d != 0 && n > std::numeric_limits<std::size_t>::max() / d) throw SizeError("tuple count overflows");
    n *= d;
  }
  return n;
}

std::size_t BarComplex::space_size(std::size_t p) const {
  std::size_t t = tuple_count(p);
  if (module_dim() != 0 && t > cap_ / module_dim())
    throw SizeError("level " + std::to_string(p) + " needs " + std::to_string(t) + " x " +
                    std::to_string(module_dim()) + " entries, above the cap of " + std::to_string(cap_));
  return t * module_dim();
}

std::vector<std::size_t> BarComplex::decode(std::size_t p, std::size_t tuple) const {
  std::vector<std::size_t> out(p);
  const std::size_t d = reduced_dim();
  for (std::size_t i = p; i > 0; --i) {
    out[i - 1] = tuple % d;
    tuple /= d;
  }
  return out;
}

std::size_t BarComplex::encode(const std::vector<std::size_t>& slots) const {
  std::size_t idx = 0;
  for (std::size_t s : slots) idx = idx * reduced_dim() + s;
  return idx;
}

Degree BarComplex::tuple_degree(std::size_t p, std::size_t tuple) const {
  Degree deg(alg_.grading_rank(), 0);
  for (std::size_t s : decode(p, tuple)) deg = add(deg, alg_.degree(alg_.reduced_basis()[s]));
  return deg;
}

Degree BarComplex::entry_degree(std::size_t p, std::size_t index) const {
  const std::size_t m = module_dim();
  return subtract(module_.degrees[index % m], tuple_degree(p, index / m));
}

const std::map<Degree, std::vector<std::size_t>>& BarComplex::blocks(std::size_t p) const {
  const std::size_t n = space_size(p);
  std::lock_guard<std::mutex> lock(mutex_);
  auto it = blocks_.find(p);
  if (it != blocks_.end()) return *it->second;
  auto b = std::make_unique<std::map<Degree, std::vector<std::size_t>>>();
  const std::size_t m = module_dim();
  for (std::size_t t = 0; t < n / std::max<std::size_t>(m, 1); ++t) {
    Degree td = tuple_degree(p, t);
    for (std::size_t k = 0; k < m; ++k) (*b)[subtract(module_.degrees[k], td)].push_back(t * m + k);
  }
  auto& ref = *b;
  blocks_.emplace(p, std::move(b));
  return ref;
}

Cochain BarComplex::zero_cochain(std::size_t p) const { return Cochain{p, Vector(space_size(p)), std::nullopt}; }

namespace {

// Image of the basis cochain at (tuple, k) of level p under delta, as (index, coeff).
void differential_of_basis(const BarComplex& cx, std::size_t p, std::size_t tuple, std::size_t k,
                           const std::function<void(std::size_t, const Scalar&)>& emit) {
  const auto& alg = cx.algebra();
  const auto& mod = cx.module();
  const auto& rb = alg.reduced_basis();
  const std::size_t d = cx.reduced_dim(), m = cx.module_dim();
  const std::size_t tp = cx.tuple_count(p);
  // a_1 . f(a_2..)
  for (std::size_t a = 0; a < d; ++a) {
    const Matrix& left = mod.left[rb[a]];
    const std::size_t target = a * tp + tuple;
    for (std::size_t kk = 0; kk < m; ++kk)
      if (left(kk, k) != 0) emit(target * m + kk, left(kk, k));
  }
  // f(.. a_i a_{i+1} ..): slot s of the source splits into positions s, s+1 of the target.
  if (p > 0) {
    auto slots = cx.decode(p, tuple);
    for (std::size_t s = 0; s < p; ++s) {
      Scalar sg = sign_of(s + 1);
      for (const auto& fac : cx.reduced_factorizations(slots[s])) {
        std::vector<std::size_t> t2;
        t2.reserve(p + 1);
        t2.insert(t2.end(), slots.begin(), slots.begin() + s);
        t2.push_back(fac.index / d);
        t2.push_back(fac.index % d);
        t2.insert(t2.end(), slots.begin() + s + 1, slots.end());
        emit(cx.encode(t2) * m + k, sg * fac.coeff);
      }
    }
  }
  // (-1)^{p+1} f(a_1..a_p) . a_{p+1}
  Scalar sg = sign_of(p + 1);
  for (std::size_t a = 0; a < d; ++a) {
    const Matrix& right = mod.right[rb[a]];
    const std::size_t target = tuple * d + a;
    for (std::size_t kk = 0; kk < m; ++kk)
      if (right(kk, k) != 0) emit(target * m + kk, sg * right(kk, k));
  }
}

}  // namespace

Cochain BarComplex::differential(const Cochain& f) const {
  const std::size_t p = f.level;
  if (f.values.size() != space_size(p)) throw InputError("cochain size does not match its level");
  Cochain out{p + 1, Vector(space_size(p + 1)), f.degree};
  const std::size_t m = module_dim();
  for (std::size_t i = 0; i < f.values.size(); ++i) {
    if (f.values[i] == 0) continue;
    const Scalar& v = f.values[i];
    differential_of_basis(*this, p, i / m, i % m, [&](std::size_t idx, const Scalar& c) { out.values[idx] += c * v; });
  }
  return out;
}

bool BarComplex::is_cocycle(const Cochain& f) const { return is_zero(differential(f).values); }

const Matrix& BarComplex::differential_block(std::size_t p, const Degree& d) const {
  {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = diff_blocks_.find({p, d});
    if (it != diff_blocks_.end()) return *it->second;
  }
  static const std::vector<std::size_t> empty;
  const auto& src_blocks = blocks(p);
  const auto& dst_blocks = blocks(p + 1);
  auto si = src_blocks.find(d);
  auto di = dst_blocks.find(d);
  const auto& src = si == src_blocks.end() ? empty : si->second;
  const auto& dst = di == dst_blocks.end() ? empty : di->second;
  auto mat = std::make_shared<Matrix>(dst.size(), src.size());
  const std::size_t m = module_dim();
  for (std::size_t c = 0; c < src.size(); ++c)
    differential_of_basis(*this, p, src[c] / m, src[c] % m, [&](std::size_t idx, const Scalar& v) {
      long r = block_position(dst, idx);
      if (r < 0) throw std::logic_error("differential does not preserve internal degree");
      (*mat)(static_cast<std::size_t>(r), c) += v;
    });
  std::lock_guard<std::mutex> lock(mutex_);
  auto [it, inserted] = diff_blocks_.emplace(std::make_pair(p, d), std::move(mat));
  return *it->second;
}

std::map<Degree, Vector> BarComplex::split(const Cochain& f) const {
  std::map<Degree, Vector> out;
  for (const auto& [deg, idx] : blocks(f.level)) {
    Vector v(idx.size());
    bool nz = false;
    for (std::size_t i = 0; i < idx.size(); ++i)
      if (f.values[idx[i]] != 0) {
        v[i] = f.values[idx[i]];
        nz = true;
      }
    if (nz) out.emplace(deg, std::move(v));
  }
  return out;
}

std::optional<Degree> BarComplex::homogeneous_degree(const Cochain& f) const {
  auto parts = split(f);
  if (parts.size() == 1) return parts.begin()->first;
  return std::nullopt;
}

Chain BarComplex::chain_differential(const Chain& c) const {
  const std::size_t p = c.level;
  if (p == 0) throw InputError("chain differential is not defined below level 1");
  if (c.values.size() != space_size(p)) throw InputError("chain size does not match its level");
  Chain out{p - 1, Vector(space_size(p - 1))};
  const auto& rb = alg_.reduced_basis();
  const std::size_t m = module_dim();
  for (std::size_t i = 0; i < c.values.size(); ++i) {
    if (c.values[i] == 0) continue;
    const Scalar& v = c.values[i];
    const std::size_t k = i % m;
    auto slots = decode(p, i / m);
    // (m a_1, a_2..a_p)
    {
      const Matrix& right = module_.right[rb[slots.front()]];
      std::vector<std::size_t> rest(slots.begin() + 1, slots.end());
      const std::size_t t = encode(rest);
      for (std::size_t kk = 0; kk < m; ++kk)
        if (right(kk, k) != 0) out.values[t * m + kk] += v * right(kk, k);
    }
    for (std::size_t s = 1; s < p; ++s) {
      Scalar sg = sign_of(s);
      for (const auto& z : reduced_product(slots[s - 1], slots[s])) {
        std::vector<std::size_t> t2(slots.begin(), slots.begin() + (s - 1));
        t2.push_back(z.index);
        t2.insert(t2.end(), slots.begin() + s + 1, slots.end());
        out.values[encode(t2) * m + k] += sg * z.coeff * v;
      }
    }
    {
      Scalar sg = sign_of(p);
      const Matrix& left = module_.left[rb[slots.back()]];
      std::vector<std::size_t> rest(slots.begin(), slots.end() - 1);
      const std::size_t t = encode(rest);
      for (std::size_t kk = 0; kk < m; ++kk)
        if (left(kk, k) != 0) out.values[t * m + kk] += sg * v * left(kk, k);
    }
  }
  return out;
}

CohomologyGroup cohomology_in_degree(const BarComplex& cx, std::size_t p, const Degree& d) {
  CohomologyGroup g;
  g.level = p;
  const auto& blocks = cx.blocks(p);
  auto bi = blocks.find(d);
  if (bi == blocks.end()) return g;
  const auto& idx = bi->second;
  const std::size_t n = idx.size();

  std::vector<Vector> cycles = linalg::kernel_basis(cx.differential_block(p, d));
  std::vector<Vector> bounds;
  if (p > 0) {
    const Matrix& prev = cx.differential_block(p - 1, d);
    for (std::size_t j = 0; j < prev.cols(); ++j) bounds.push_back(prev.column(j));
  }
  std::vector<Vector> cols = bounds;
  cols.insert(cols.end(), cycles.begin(), cycles.end());
  if (cols.empty()) return g;
  auto ech = linalg::row_reduce(Matrix::from_columns(cols, n));
  std::vector<Vector> boundary_basis;
  for (std::size_t piv : ech.pivots) {
    if (piv < bounds.size()) {
      boundary_basis.push_back(bounds[piv]);
      continue;
    }
    const Vector& z = cycles[piv - bounds.size()];
    Cochain rep{p, Vector(cx.space_size(p)), d};
    for (std::size_t i = 0; i < n; ++i) rep.values[idx[i]] = z[i];
    g.representatives.push_back(std::move(rep));
  }
  g.dimension = g.representatives.size();
  if (g.dimension > 0) g.graded_dims[d] = g.dimension;
  if (!boundary_basis.empty()) g.coboundary_basis[d] = std::move(boundary_basis);
  return g;
}

CohomologyGroup cohomology(const BarComplex& cx, std::size_t p) {
  CohomologyGroup g;
  g.level = p;
  for (const auto& [deg, idx] : cx.blocks(p)) {
    CohomologyGroup part = cohomology_in_degree(cx, p, deg);
    g.dimension += part.dimension;
    for (auto& r : part.representatives) g.representatives.push_back(std::move(r));
    for (auto& [k, v] : part.graded_dims) g.graded_dims[k] = v;
    for (auto& [k, v] : part.coboundary_basis) g.coboundary_basis[k] = std::move(v);
  }
  return g;
}

bool is_coboundary(const BarComplex& cx, const Cochain& f) {
  const std::size_t p = f.level;
  if (f.values.size() != cx.space_size(p)) throw InputError("cochain size does not match its level");
  for (const auto& [deg, v] : cx.split(f)) {
    if (p == 0) return false;
    const Matrix& prev = cx.differential_block(p - 1, deg);
    if (prev.cols() == 0 || !linalg::solve_linear(prev, v)) return false;
  }
  return true;
}

Vector class_coordinates(const BarComplex& cx, const CohomologyGroup& g, const Cochain& f) {
  if (f.level != g.level || f.values.size() != cx.space_size(f.level))
    throw InputError("class_coordinates: cochain level differs from the group");
  if (!cx.is_cocycle(f)) throw InputError("class_coordinates: input is not a cocycle");
  Vector out(g.dimension);
  const auto& blocks = cx.blocks(f.level);
  for (const auto& [deg, v] : cx.split(f)) {
    const auto& idx = blocks.at(deg);
    std::vector<Vector> reps;
    std::vector<std::size_t> slots;
    for (std::size_t r = 0; r < g.representatives.size(); ++r) {
      const auto& rep = g.representatives[r];
      if (rep.degree != deg) continue;
      Vector local(idx.size());
      for (std::size_t i = 0; i < idx.size(); ++i) local[i] = rep.values[idx[i]];
      reps.push_back(std::move(local));
      slots.push_back(r);
    }
    auto it = g.coboundary_basis.find(deg);
    const std::vector<Vector> none;
    Vector c = linalg::quotient_coordinates(reps, it == g.coboundary_basis.end() ? none : it->second, v);
    for (std::size_t r = 0; r < slots.size(); ++r) out[slots[r]] = c[r];
  }
  return out;
}

bool classes_equal(const BarComplex& cx, const Cochain& f, const Cochain& g) {
  if (f.level != g.level || f.values.size() != g.values.size())
    throw InputError("classes_equal: cochains live at different levels");
  if (!cx.is_cocycle(f) || !cx.is_cocycle(g)) throw InputError("classes_equal: input is not a cocycle");
  Cochain h{f.level, f.values, std::nullopt};
  for (std::size_t i = 0; i < h.values.size(); ++i) h.values[i] -= g.values[i];
  return is_coboundary(cx, h);
}

TwistedBimodule coefficient_module(const FrobeniusStructure& f, const Twist& tw) {
  switch (tw.side) {
    case TwistSide::Right:
      return algebra::twisted_bimodule_right(f.algebra, tw.t, tw.degree);
    case TwistSide::Left:
      return algebra::twisted_bimodule_left(f.algebra, tw.t, tw.degree);
    default:
      return algebra::regular_bimodule(f.algebra);
  }
}

Matrix composite_automorphism(const FrobeniusStructure& f, const Twist& tw) {
  const auto& alg = f.algebra;
  const std::size_t n = alg.dim();
  Matrix diag = Matrix::identity(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (tw.side == TwistSide::Right)
      diag(i, i) = 1 / algebra::bicharacter_eval(tw.t, alg.degree(i), tw.degree);
    else if (tw.side == TwistSide::Left)
      diag(i, i) = algebra::bicharacter_eval(tw.t, tw.degree, alg.degree(i));
  }
  return f.nakayama * diag;
}

Vector transport_weights(const FrobeniusStructure& f, const Twist& tw) {
  const auto& alg = f.algebra;
  Vector w(alg.dim(), Scalar(1));
  if (tw.side == TwistSide::Right)
    for (std::size_t k = 0; k < alg.dim(); ++k) w[k] = 1 / algebra::bicharacter_eval(tw.t, alg.degree(k), tw.degree);
  return w;
}

DualityContext::DualityContext(FrobeniusStructure frob, Twist tw, std::size_t size_cap)
    : frob_(std::move(frob)), tw_(std::move(tw)) {
  const auto& alg = frob_.algebra;
  if (tw_.side != TwistSide::None) {
    algebra::validate_bicharacter(tw_.t);
    const std::size_t expect = tw_.side == TwistSide::Right ? tw_.t.q.cols() : tw_.t.q.rows();
    const std::size_t own = tw_.side == TwistSide::Right ? tw_.t.q.rows() : tw_.t.q.cols();
    if (tw_.degree.size() != expect || own != alg.grading_rank())
      throw InputError("twist degree or bicharacter shape does not match the algebra grading");
  }
  psi_ = composite_automorphism(frob_, tw_);
  w_ = transport_weights(frob_, tw_);
  const std::size_t n = alg.dim();
  Matrix wm(n, n), wi(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    wm(k, k) = w_[k];
    wi(k, k) = 1 / w_[k];
  }
  slot_map_ = wi * linalg::transpose(frob_.gram_inverse) * linalg::transpose(psi_) * linalg::transpose(frob_.gram) * wm;

  const auto& rb = alg.reduced_basis();
  psi_red_.assign(rb.size(), {});
  psi_red_pre_.assign(rb.size(), {});
  for (std::size_t x = 0; x < rb.size(); ++x)
    for (std::size_t i = 0; i < n; ++i) {
      if (psi_(i, rb[x]) == 0) continue;
      long y = alg.reduced_position(i);
      if (y < 0) continue;
      psi_red_[x].push_back({static_cast<std::size_t>(y), psi_(i, rb[x])});
      psi_red_pre_[y].push_back({x, psi_(i, rb[x])});
    }

  cochains_ = std::make_unique<BarComplex>(alg, coefficient_module(frob_, tw_), size_cap);
  chains_ = std::make_unique<BarComplex>(alg, algebra::automorphism_twisted_module(alg, psi_), size_cap);
}

Vector DualityContext::dual_transport(const Cochain& f) const {
  const std::size_t n = frob_.algebra.dim();
  if (f.values.size() != cochains_->space_size(f.level)) throw InputError("cochain size does not match its level");
  if (tw_.side == TwistSide::Right && !is_zero(f.values) && !cochains_->homogeneous_degree(f))
    throw InputError("twisted transport needs a homogeneous cochain");
  Vector phi(f.values.size());
  for (std::size_t t = 0; t < f.values.size() / n; ++t)
    for (std::size_t k = 0; k < n; ++k) {
      const Scalar& v = f.values[t * n + k];
      if (v == 0) continue;
      for (std::size_t j = 0; j < n; ++j)
        if (frob_.gram(k, j) != 0) phi[t * n + j] += v * frob_.gram(k, j) * w_[k];
    }
  return phi;
}

Cochain DualityContext::dual_transport_inverse(std::size_t p, const Vector& functional) const {
  const std::size_t n = frob_.algebra.dim();
  if (functional.size() != chains_->space_size(p)) throw InputError("functional size does not match its level");
  Cochain f{p, Vector(functional.size()), std::nullopt};
  for (std::size_t t = 0; t < functional.size() / n; ++t)
    for (std::size_t j = 0; j < n; ++j) {
      const Scalar& v = functional[t * n + j];
      if (v == 0) continue;
      for (std::size_t k = 0; k < n; ++k)
        if (frob_.gram_inverse(j, k) != 0) f.values[t * n + k] += v * frob_.gram_inverse(j, k) / w_[k];
    }
  return f;
}

Chain DualityContext::t_operator(const Chain& c) const {
  const std::size_t p = c.level;
  const std::size_t n = frob_.algebra.dim(), d = chains_->reduced_dim();
  if (c.values.size() != chains_->space_size(p)) throw InputError("chain size does not match its level");
  Chain out{p, Vector(c.values.size())};
  for (std::size_t i = 0; i < c.values.size(); ++i) {
    if (c.values[i] == 0) continue;
    const std::size_t j = i % n;
    auto slots = chains_->decode(p, i / n);
    std::vector<const std::vector<SparseEntry>*> lists;
    for (std::size_t s : slots) lists.push_back(&psi_red_[s]);
    const Scalar& v = c.values[i];
    expand_slots(lists, d, [&](std::size_t t, const Scalar& coef) {
      for (std::size_t jj = 0; jj < n; ++jj)
        if (psi_(jj, j) != 0) out.values[t * n + jj] += v * coef * psi_(jj, j);
    });
  }
  return out;
}

void DualityContext::beta_tuples(std::size_t p, std::size_t tuple, std::size_t x0,
                                 const std::function<void(std::size_t, const Scalar&)>& emit,
                                 bool alternate_sign) const {
  const std::size_t d = chains_->reduced_dim();
  auto slots = chains_->decode(p, tuple);
  for (std::size_t i = 1; i <= p + 1; ++i) {
    Scalar sg = sign_of(i * (alternate_sign ? p + 1 : p));
    // (a_i..a_p, a_0, psi a_1..psi a_{i-1})
    std::size_t head = 0;
    for (std::size_t s = i - 1; s < p; ++s) head = head * d + slots[s];
    head = head * d + x0;
    std::vector<const std::vector<SparseEntry>*> lists;
    for (std::size_t s = 0; s + 1 < i; ++s) lists.push_back(&psi_red_[slots[s]]);
    const std::size_t tail_count = chains_->tuple_count(i - 1);
    expand_slots(lists, d, [&](std::size_t t, const Scalar& coef) { emit(head * tail_count + t, sg * coef); });
  }
}

Chain DualityContext::connes_beta(const Chain& c) const {
  const std::size_t p = c.level;
  const auto& alg = frob_.algebra;
  const std::size_t n = alg.dim(), u = alg.unit_index();
  if (c.values.size() != chains_->space_size(p)) throw InputError("chain size does not match its level");
  Chain out{p + 1, Vector(chains_->space_size(p + 1))};
  for (std::size_t idx = 0; idx < c.values.size(); ++idx) {
    if (c.values[idx] == 0) continue;
    long x0 = alg.reduced_position(idx % n);
    if (x0 < 0) continue;
    const Scalar& v = c.values[idx];
    beta_tuples(p, idx / n, static_cast<std::size_t>(x0),
                [&](std::size_t t, const Scalar& coef) { out.values[t * n + u] += coef * v; });
  }
  return out;
}

Cochain DualityContext::dual_t(const Cochain& f) const {
  const std::size_t p = f.level;
  const std::size_t n = frob_.algebra.dim(), d = cochains_->reduced_dim();
  if (f.values.size() != cochains_->space_size(p)) throw InputError("cochain size does not match its level");
  Cochain out{p, Vector(f.values.size()), f.degree};
  for (std::size_t i = 0; i < f.values.size(); ++i) {
    if (f.values[i] == 0) continue;
    const std::size_t k = i % n;
    auto slots = cochains_->decode(p, i / n);
    std::vector<const std::vector<SparseEntry>*> lists;
    for (std::size_t s : slots) lists.push_back(&psi_red_pre_[s]);
    const Scalar& v = f.values[i];
    expand_slots(lists, d, [&](std::size_t t, const Scalar& coef) {
      for (std::size_t kk = 0; kk < n; ++kk)
        if (slot_map_(kk, k) != 0) out.values[t * n + kk] += v * coef * slot_map_(kk, k);
    });
  }
  return out;
}

Matrix DualityContext::dual_t_block(std::size_t p, const Degree& deg) const {
  const auto& blocks = cochains_->blocks(p);
  auto bi = blocks.find(deg);
  if (bi == blocks.end()) return Matrix();
  const auto& idx = bi->second;
  const std::size_t n = frob_.algebra.dim(), d = cochains_->reduced_dim();
  Matrix m(idx.size(), idx.size());
  for (std::size_t c = 0; c < idx.size(); ++c) {
    const std::size_t k = idx[c] % n;
    auto slots = cochains_->decode(p, idx[c] / n);
    std::vector<const std::vector<SparseEntry>*> lists;
    for (std::size_t s : slots) lists.push_back(&psi_red_pre_[s]);
    expand_slots(lists, d, [&](std::size_t t, const Scalar& coef) {
      for (std::size_t kk = 0; kk < n; ++kk) {
        if (slot_map_(kk, k) == 0) continue;
        long r = block_position(idx, t * n + kk);
        if (r < 0) throw std::logic_error("T* does not preserve internal degree");
        m(static_cast<std::size_t>(r), c) += coef * slot_map_(kk, k);
      }
    });
  }
  return m;
}

bool DualityContext::is_invariant(const Cochain& f) const { return dual_t(f).values == f.values; }

Cochain DualityContext::invariant_representative(const Cochain& f) const {
  if (!cochains_->is_cocycle(f)) throw InputError("invariant representative requested for a non-cocycle");
  const std::size_t p = f.level;
  Cochain out{p, Vector(f.values.size()), f.degree};
  const auto& blocks = cochains_->blocks(p);
  for (const auto& [deg, v] : cochains_->split(f)) {
    Vector fixed = linalg::fixed_space_projection(dual_t_block(p, deg), v);
    const auto& idx = blocks.at(deg);
    for (std::size_t i = 0; i < idx.size(); ++i) out.values[idx[i]] = fixed[i];
  }
  return out;
}

}  // namespace twistbv::hochschild
