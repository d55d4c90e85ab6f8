#include "twistbv/algebra.hpp"

#include <algorithm>
#include <sstream>

namespace twistbv::algebra {

Degree add(const Degree& a, const Degree& b) {
  if (a.size() != b.size()) throw InputError("degree length mismatch");
  Degree c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
  return c;
}

Degree subtract(const Degree& a, const Degree& b) { return add(a, negate(b)); }

Degree negate(const Degree& a) {
  Degree c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = -a[i];
  return c;
}

Degree concat(const Degree& a, const Degree& b) {
  Degree c = a;
  c.insert(c.end(), b.begin(), b.end());
  return c;
}

bool is_zero_degree(const Degree& d) {
  return std::all_of(d.begin(), d.end(), [](long x) { return x == 0; });
}

std::string format_degree(const Degree& d) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < d.size(); ++i) os << (i ? "," : "") << d[i];
  os << ")";
  return os.str();
}

GradedAlgebra::GradedAlgebra(std::size_t grading_rank, std::vector<std::string> names,
                             std::vector<Degree> degrees, std::size_t unit_index)
    : rank_(grading_rank), names_(std::move(names)), degrees_(std::move(degrees)), unit_(unit_index) {
  const std::size_t n = names_.size();
  if (n == 0) throw InputError("algebra must have positive dimension");
  if (degrees_.size() != n) throw InputError("one degree per basis element required");
  for (const auto& d : degrees_)
    if (d.size() != rank_) throw InputError("degree length differs from grading rank");
  if (unit_ >= n) throw InputError("unit index out of range");
  table_.assign(n * n, {});
  reduced_pos_.assign(n, -1);
  for (std::size_t i = 0; i < n; ++i)
    if (i != unit_) {
      reduced_pos_[i] = static_cast<long>(reduced_.size());
      reduced_.push_back(i);
    }
}

Scalar GradedAlgebra::constant(std::size_t i, std::size_t j, std::size_t k) const {
  for (const auto& t : product(i, j))
    if (t.index == k) return t.coeff;
  return Scalar(0);
}

void GradedAlgebra::set_constant(std::size_t i, std::size_t j, std::size_t k, const Scalar& value) {
  const std::size_t n = dim();
  if (i >= n || j >= n || k >= n) throw InputError("structure constant index out of range");
  auto& terms = table_[i * n + j];
  auto it = std::find_if(terms.begin(), terms.end(), [&](const Term& t) { return t.index >= k; });
  if (it != terms.end() && it->index == k) {
    if (value == 0) terms.erase(it);
    else it->coeff = value;
  } else if (value != 0) {
    terms.insert(it, Term{k, value});
  }
}

Vector GradedAlgebra::basis_vector(std::size_t i) const {
  Vector v(dim());
  v[i] = 1;
  return v;
}

Matrix GradedAlgebra::left_multiplication(std::size_t i) const {
  Matrix m(dim(), dim());
  for (std::size_t k = 0; k < dim(); ++k)
    for (const auto& t : product(i, k)) m(t.index, k) = t.coeff;
  return m;
}

Matrix GradedAlgebra::right_multiplication(std::size_t i) const {
  Matrix m(dim(), dim());
  for (std::size_t k = 0; k < dim(); ++k)
    for (const auto& t : product(k, i)) m(t.index, k) = t.coeff;
  return m;
}

bool operator==(const GradedAlgebra& a, const GradedAlgebra& b) {
  if (a.rank_ != b.rank_ || a.names_ != b.names_ || a.degrees_ != b.degrees_ || a.unit_ != b.unit_)
    return false;
  for (std::size_t p = 0; p < a.table_.size(); ++p) {
    const auto &x = a.table_[p], &y = b.table_[p];
    if (x.size() != y.size()) return false;
    for (std::size_t q = 0; q < x.size(); ++q)
      if (x[q].index != y[q].index || x[q].coeff != y[q].coeff) return false;
  }
  return true;
}

Vector multiply(const GradedAlgebra& alg, const Vector& x, const Vector& y) {
  const std::size_t n = alg.dim();
  if (x.size() != n || y.size() != n) throw InputError("multiply: dimension mismatch");
  Vector z(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j] == 0) continue;
      Scalar c = x[i] * y[j];
      for (const auto& t : alg.product(i, j)) z[t.index] += c * t.coeff;
    }
  }
  return z;
}

AlgebraReport check_algebra(const GradedAlgebra& alg) {
  AlgebraReport rep;
  using K = AlgebraViolation::Kind;
  const std::size_t n = alg.dim(), u = alg.unit_index();
  if (!is_zero_degree(alg.degree(u)))
    rep.violations.push_back({K::UnitDegree, u, 0, 0, "unit basis element has nonzero degree"});
  for (std::size_t i = 0; i < n; ++i) {
    Vector ei = alg.basis_vector(i);
    if (multiply(alg, alg.unit_vector(), ei) != ei || multiply(alg, ei, alg.unit_vector()) != ei)
      rep.violations.push_back({K::UnitLaw, i, 0, 0, "unit law fails for " + alg.names()[i]});
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& t : alg.product(i, j))
        if (alg.degree(t.index) != add(alg.degree(i), alg.degree(j)))
          rep.violations.push_back({K::Grading, i, j, t.index,
                                    "product " + alg.names()[i] + "*" + alg.names()[j] + " has a component in " +
                                        alg.names()[t.index] + " of the wrong degree"});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vector eij(n);
      for (const auto& t : alg.product(i, j)) eij[t.index] = t.coeff;
      for (std::size_t k = 0; k < n; ++k) {
        Vector left = multiply(alg, eij, alg.basis_vector(k));
        Vector ejk(n);
        for (const auto& t : alg.product(j, k)) ejk[t.index] = t.coeff;
        Vector right = multiply(alg, alg.basis_vector(i), ejk);
        if (left != right)
          rep.violations.push_back({K::Associativity, i, j, k, "associativity fails on triple (" +
                                                                   std::to_string(i) + "," + std::to_string(j) +
                                                                   "," + std::to_string(k) + ")"});
      }
    }
  return rep;
}

Bicharacter Bicharacter::trivial(std::size_t rows, std::size_t cols) {
  Bicharacter t{Matrix(rows, cols)};
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) t.q(i, j) = 1;
  return t;
}

Bicharacter Bicharacter::scalar(const Scalar& q) {
  Bicharacter t{Matrix(1, 1)};
  t.q(0, 0) = q;
  return t;
}

void validate_bicharacter(const Bicharacter& t) {
  for (std::size_t i = 0; i < t.q.rows(); ++i)
    for (std::size_t j = 0; j < t.q.cols(); ++j)
      if (t.q(i, j) == 0) throw InputError("bicharacter entries must be nonzero");
}

Scalar bicharacter_eval(const Bicharacter& t, const Degree& a, const Degree& b) {
  if (a.size() != t.q.rows() || b.size() != t.q.cols())
    throw InputError("bicharacter_eval: degree length mismatch");
  Scalar r(1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      if (a[i] != 0 && b[j] != 0) r *= power(t.q(i, j), a[i] * b[j]);
  return r;
}

Scalar Character::operator()(const Degree& d) const {
  if (d.size() != values.size()) throw InputError("character: degree length mismatch");
  Scalar r(1);
  for (std::size_t i = 0; i < d.size(); ++i)
    if (d[i] != 0) r *= power(values[i], d[i]);
  return r;
}

Character Character::inverse() const {
  Character c;
  for (const auto& v : values) c.values.push_back(1 / v);
  return c;
}

Character trivial_character(std::size_t rank) { return Character{std::vector<Scalar>(rank, Scalar(1))}; }

Character right_character(const Bicharacter& t, const Degree& b) {
  if (b.size() != t.q.cols()) throw InputError("right_character: degree length mismatch");
  Character c;
  for (std::size_t i = 0; i < t.q.rows(); ++i) {
    Degree e(t.q.rows(), 0);
    e[i] = 1;
    c.values.push_back(bicharacter_eval(t, e, b));
  }
  return c;
}

Character left_character(const Bicharacter& t, const Degree& a) {
  if (a.size() != t.q.rows()) throw InputError("left_character: degree length mismatch");
  Character c;
  for (std::size_t j = 0; j < t.q.cols(); ++j) {
    Degree e(t.q.cols(), 0);
    e[j] = 1;
    c.values.push_back(bicharacter_eval(t, a, e));
  }
  return c;
}

Vector character_action(const GradedAlgebra& alg, const Character& chi, const Vector& x) {
  if (x.size() != alg.dim()) throw InputError("character_action: dimension mismatch");
  Vector y = x;
  for (std::size_t i = 0; i < alg.dim(); ++i)
    if (y[i] != 0) y[i] *= chi(alg.degree(i));
  return y;
}

Matrix character_matrix(const GradedAlgebra& alg, const Character& chi) {
  Matrix m(alg.dim(), alg.dim());
  for (std::size_t i = 0; i < alg.dim(); ++i) m(i, i) = chi(alg.degree(i));
  return m;
}

GradedAlgebra twisted_tensor(const GradedAlgebra& r, const GradedAlgebra& s, const Bicharacter& t) {
  validate_bicharacter(t);
  if (t.q.rows() != r.grading_rank() || t.q.cols() != s.grading_rank())
    throw InputError("twisted_tensor: bicharacter shape does not match grading ranks");
  const std::size_t dr = r.dim(), ds = s.dim();
  std::vector<std::string> names;
  std::vector<Degree> degrees;
  for (std::size_t i = 0; i < dr; ++i)
    for (std::size_t j = 0; j < ds; ++j) {
      names.push_back(r.names()[i] + "⊗" + s.names()[j]);
      degrees.push_back(concat(r.degree(i), s.degree(j)));
    }
  GradedAlgebra out(r.grading_rank() + s.grading_rank(), names, degrees, r.unit_index() * ds + s.unit_index());
  // (e_i f_j)(e_k f_l) = t(|e_k|, |f_j|) e_i e_k (x) f_j f_l
  for (std::size_t i = 0; i < dr; ++i)
    for (std::size_t j = 0; j < ds; ++j)
      for (std::size_t k = 0; k < dr; ++k) {
        const auto& rp = r.product(i, k);
        if (rp.empty()) continue;
        for (std::size_t l = 0; l < ds; ++l) {
          const auto& sp = s.product(j, l);
          if (sp.empty()) continue;
          Scalar tw = bicharacter_eval(t, r.degree(k), s.degree(j));
          for (const auto& a : rp)
            for (const auto& b : sp)
              out.set_constant(i * ds + j, k * ds + l, a.index * ds + b.index, tw * a.coeff * b.coeff);
        }
      }
  return out;
}

TwistedBimodule regular_bimodule(const GradedAlgebra& alg) {
  TwistedBimodule m;
  m.dim = alg.dim();
  m.degrees = alg.degrees();
  for (std::size_t i = 0; i < alg.dim(); ++i) {
    m.left.push_back(alg.left_multiplication(i));
    m.right.push_back(alg.right_multiplication(i));
  }
  return m;
}

TwistedBimodule twisted_bimodule_right(const GradedAlgebra& r, const Bicharacter& t, const Degree& b) {
  Character bhat = right_character(t, b);
  TwistedBimodule m = regular_bimodule(r);
  for (std::size_t i = 0; i < r.dim(); ++i) m.right[i] = bhat(r.degree(i)) * m.right[i];
  return m;
}

TwistedBimodule twisted_bimodule_left(const GradedAlgebra& s, const Bicharacter& t, const Degree& a) {
  Character ahat = left_character(t, a);
  TwistedBimodule m = regular_bimodule(s);
  for (std::size_t i = 0; i < s.dim(); ++i) m.left[i] = ahat(s.degree(i)) * m.left[i];
  return m;
}

std::optional<std::string> automorphism_failure(const GradedAlgebra& alg, const Matrix& phi) {
  const std::size_t n = alg.dim();
  if (phi.rows() != n || phi.cols() != n) return "matrix size differs from algebra dimension";
  if (!linalg::inverse(phi)) return "not invertible";
  if (phi * alg.unit_vector() != alg.unit_vector()) return "does not fix the unit";
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      if (phi(k, i) != 0 && alg.degree(k) != alg.degree(i))
        return "does not preserve degree of " + alg.names()[i];
  std::vector<Vector> images;
  for (std::size_t i = 0; i < n; ++i) images.push_back(phi.column(i));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vector prod(n);
      for (const auto& t : alg.product(i, j)) prod[t.index] = t.coeff;
      if (phi * prod != multiply(alg, images[i], images[j]))
        return "not multiplicative on (" + alg.names()[i] + ", " + alg.names()[j] + ")";
    }
  return std::nullopt;
}

TwistedBimodule automorphism_twisted_module(const GradedAlgebra& alg, const Matrix& phi) {
  if (auto err = automorphism_failure(alg, phi)) throw InputError("automorphism check failed: " + *err);
  TwistedBimodule m = regular_bimodule(alg);
  const std::size_t n = alg.dim();
  for (std::size_t i = 0; i < n; ++i) {
    Matrix r(n, n);
    for (std::size_t k = 0; k < n; ++k)
      if (phi(k, i) != 0) r = r + phi(k, i) * m.right[k];
    m.right[i] = std::move(r);
  }
  return m;
}

BimoduleReport check_bimodule(const GradedAlgebra& alg, const TwistedBimodule& m) {
  BimoduleReport rep;
  const std::size_t n = alg.dim();
  if (m.left.size() != n || m.right.size() != n) {
    rep.violations.push_back("action count differs from algebra dimension");
    return rep;
  }
  const std::size_t u = alg.unit_index();
  if (!(m.left[u] == Matrix::identity(m.dim))) rep.violations.push_back("unit acts nontrivially on the left");
  if (!(m.right[u] == Matrix::identity(m.dim))) rep.violations.push_back("unit acts nontrivially on the right");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (!(m.right[j] * m.left[i] == m.left[i] * m.right[j]))
        rep.violations.push_back("left and right actions do not commute on (" + std::to_string(i) + "," +
                                 std::to_string(j) + ")");
      Matrix lij(m.dim, m.dim), rij(m.dim, m.dim);
      for (const auto& t : alg.product(i, j)) {
        lij = lij + t.coeff * m.left[t.index];
        rij = rij + t.coeff * m.right[t.index];
      }
      if (!(m.left[i] * m.left[j] == lij))
        rep.violations.push_back("left action not associative on (" + std::to_string(i) + "," + std::to_string(j) + ")");
      if (!(m.right[j] * m.right[i] == rij))
        rep.violations.push_back("right action not associative on (" + std::to_string(i) + "," + std::to_string(j) + ")");
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t a = 0; a < m.dim; ++a)
      for (std::size_t b = 0; b < m.dim; ++b) {
        Degree want = add(alg.degree(i), m.degrees[b]);
        if ((m.left[i](a, b) != 0 || m.right[i](a, b) != 0) && m.degrees[a] != want)
          rep.violations.push_back("action of " + alg.names()[i] + " is not graded");
      }
  return rep;
}

}  // namespace twistbv::algebra
