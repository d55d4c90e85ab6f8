#include "twistbv/linalg.hpp"

#include <algorithm>
#include <sstream>

namespace twistbv {

Scalar parse_scalar(const std::string& text) {
  std::string s;
  for (char c : text)
    if (c != ' ' && c != '\t') s.push_back(c);
  if (s.empty()) throw InputError("empty rational literal");
  auto valid_int = [](const std::string& t) {
    std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    if (i >= t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!num.empty() && num[0] == '+') num.erase(0, 1);
  if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+')
    throw InputError("malformed rational literal '" + text + "'");
  mpz_class n(num, 10), d(den, 10);
  if (d == 0) throw InputError("zero denominator in '" + text + "'");
  Scalar q(n, d);
  q.canonicalize();
  return q;
}

std::string format_scalar(const Scalar& x) { return x.get_str(); }

Scalar power(const Scalar& x, long e) {
  if (e == 0) return Scalar(1);
  if (x == 0) {
    if (e < 0) throw InputError("negative power of zero");
    return Scalar(0);
  }
  unsigned long k = static_cast<unsigned long>(e < 0 ? -e : e);
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), x.get_num_mpz_t(), k);
  mpz_pow_ui(d.get_mpz_t(), x.get_den_mpz_t(), k);
  Scalar r = e < 0 ? Scalar(d, n) : Scalar(n, d);
  r.canonicalize();
  return r;
}

bool is_zero(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s == 0; });
}

namespace linalg {

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows) {
  if (rows.empty()) return Matrix();
  Matrix m(rows.size(), rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols_) throw InputError("ragged matrix rows");
    for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

Matrix Matrix::from_columns(const std::vector<Vector>& cols, std::size_t rows) {
  Matrix m(rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != rows) throw InputError("column length mismatch");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
  }
  return m;
}

Vector Matrix::row(std::size_t i) const {
  return Vector(data_.begin() + static_cast<long>(i * cols_),
                data_.begin() + static_cast<long>((i + 1) * cols_));
}

Vector Matrix::column(std::size_t j) const {
  Vector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

bool Matrix::is_zero() const { return twistbv::is_zero(data_); }

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw InputError("matrix product dimension mismatch");
  Matrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Scalar& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (b(k, j) != 0) c(i, j) += aik * b(k, j);
    }
  return c;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw InputError("matrix sum dimension mismatch");
  Matrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) + b(i, j);
  return c;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw InputError("matrix difference dimension mismatch");
  Matrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) - b(i, j);
  return c;
}

Matrix operator*(const Scalar& s, const Matrix& a) {
  Matrix c = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) *= s;
  return c;
}

Vector operator*(const Matrix& a, const Vector& v) {
  if (a.cols() != v.size()) throw InputError("matrix-vector dimension mismatch");
  Vector r(a.rows());
  for (std::size_t j = 0; j < a.cols(); ++j) {
    if (v[j] == 0) continue;
    for (std::size_t i = 0; i < a.rows(); ++i)
      if (a(i, j) != 0) r[i] += a(i, j) * v[j];
  }
  return r;
}

Matrix transpose(const Matrix& a) {
  Matrix t(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
  return t;
}

Matrix kronecker(const Matrix& a, const Matrix& b) {
  Matrix k(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j) == 0) continue;
      for (std::size_t p = 0; p < b.rows(); ++p)
        for (std::size_t q = 0; q < b.cols(); ++q)
          k(i * b.rows() + p, j * b.cols() + q) = a(i, j) * b(p, q);
    }
  return k;
}

Echelon row_reduce(Matrix m) {
  Echelon e;
  const std::size_t rows = m.rows(), cols = m.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = rows;
    for (std::size_t i = r; i < rows; ++i)
      if (m(i, c) != 0) {
        piv = i;
        break;
      }
    if (piv == rows) continue;
    if (piv != r)
      for (std::size_t j = c; j < cols; ++j) std::swap(m(piv, j), m(r, j));
    Scalar inv = 1 / m(r, c);
    for (std::size_t j = c; j < cols; ++j)
      if (m(r, j) != 0) m(r, j) *= inv;
    std::vector<std::size_t> nz;
    for (std::size_t j = c + 1; j < cols; ++j)
      if (m(r, j) != 0) nz.push_back(j);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m(i, c) == 0) continue;
      Scalar f = m(i, c);
      m(i, c) = 0;
      for (std::size_t j : nz) m(i, j) -= f * m(r, j);
    }
    e.pivots.push_back(c);
    ++r;
  }
  e.rref = std::move(m);
  return e;
}

std::size_t rank(const Matrix& m) { return row_reduce(m).pivots.size(); }

std::optional<Vector> solve_linear(const Matrix& m, const Vector& v) {
  if (m.rows() != v.size()) throw InputError("solve_linear: rows(M) != len(v)");
  Matrix aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = v[i];
  }
  Echelon e = row_reduce(std::move(aug));
  Vector x(m.cols());
  for (std::size_t k = 0; k < e.pivots.size(); ++k) {
    if (e.pivots[k] == m.cols()) return std::nullopt;
    x[e.pivots[k]] = e.rref(k, m.cols());
  }
  return x;
}

std::vector<Vector> kernel_basis(const Matrix& m) {
  Echelon e = row_reduce(m);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (std::size_t p : e.pivots) is_pivot[p] = true;
  std::vector<Vector> raw;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    Vector x(n);
    x[f] = 1;
    for (std::size_t k = 0; k < e.pivots.size(); ++k) x[e.pivots[k]] = -e.rref(k, f);
    raw.push_back(std::move(x));
  }
  if (raw.empty()) return raw;
  Echelon k = row_reduce(Matrix::from_rows(raw));
  std::vector<Vector> out;
  for (std::size_t i = 0; i < k.pivots.size(); ++i) out.push_back(k.rref.row(i));
  return out;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (!m.is_square()) throw InputError("inverse of non-square matrix");
  const std::size_t n = m.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  Echelon e = row_reduce(std::move(aug));
  if (e.pivots.size() < n || (n > 0 && e.pivots[n - 1] != n - 1)) return std::nullopt;
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.rref(i, n + j);
  return inv;
}

void Polynomial::trim() {
  while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
}

Polynomial poly_mul(const Polynomial& a, const Polynomial& b) {
  if (a.coeffs.empty() || b.coeffs.empty()) return {};
  Polynomial c;
  c.coeffs.assign(a.coeffs.size() + b.coeffs.size() - 1, Scalar(0));
  for (std::size_t i = 0; i < a.coeffs.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs.size(); ++j) c.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
  c.trim();
  return c;
}

Polynomial poly_derivative(const Polynomial& p) {
  Polynomial d;
  for (std::size_t i = 1; i < p.coeffs.size(); ++i) d.coeffs.push_back(p.coeffs[i] * static_cast<long>(i));
  d.trim();
  return d;
}

static Polynomial poly_mod(Polynomial a, const Polynomial& b) {
  a.trim();
  while (a.degree() >= b.degree() && !a.coeffs.empty()) {
    Scalar f = a.coeffs.back() / b.coeffs.back();
    std::size_t shift = a.coeffs.size() - b.coeffs.size();
    for (std::size_t i = 0; i < b.coeffs.size(); ++i) a.coeffs[shift + i] -= f * b.coeffs[i];
    a.trim();
  }
  return a;
}

Polynomial poly_gcd(Polynomial a, Polynomial b) {
  a.trim();
  b.trim();
  while (!b.coeffs.empty()) {
    Polynomial r = poly_mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.coeffs.empty()) {
    Scalar lead = a.coeffs.back();
    for (auto& c : a.coeffs) c /= lead;
  }
  return a;
}

Matrix poly_eval(const Polynomial& p, const Matrix& m) {
  if (!m.is_square()) throw InputError("polynomial evaluated at non-square matrix");
  Matrix acc(m.rows(), m.cols());
  for (std::size_t k = p.coeffs.size(); k-- > 0;) {
    acc = acc * m;
    for (std::size_t i = 0; i < m.rows(); ++i) acc(i, i) += p.coeffs[k];
  }
  return acc;
}

std::string format_polynomial(const Polynomial& p) {
  if (p.coeffs.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = p.coeffs.size(); k-- > 0;) {
    const Scalar& c = p.coeffs[k];
    if (c == 0) continue;
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    Scalar a = abs(c);
    if (k == 0 || a != 1) os << format_scalar(a);
    if (k >= 1) os << "x";
    if (k >= 2) os << "^" << k;
    first = false;
  }
  return os.str();
}

Polynomial minimal_polynomial(const Matrix& m) {
  if (!m.is_square()) throw InputError("minimal_polynomial: matrix not square");
  const std::size_t n = m.rows();
  // Krylov sequence on vec(M^k); stop at the first linear dependency.
  std::vector<Vector> powers;
  Matrix pk = Matrix::identity(n);
  for (std::size_t k = 0; k <= n; ++k) {
    Vector flat;
    flat.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) flat.push_back(pk(i, j));
    if (k > 0) {
      Matrix basis = Matrix::from_columns(powers, n * n);
      if (auto sol = solve_linear(basis, flat)) {
        Polynomial p;
        for (const auto& c : *sol) p.coeffs.push_back(-c);
        p.coeffs.push_back(1);
        return p;
      }
    }
    powers.push_back(std::move(flat));
    pk = pk * m;
  }
  throw std::logic_error("minimal_polynomial: Cayley-Hamilton bound exceeded");
}

bool is_semisimple(const Matrix& m) {
  Polynomial p = minimal_polynomial(m);
  return poly_gcd(p, poly_derivative(p)).degree() == 0;
}

Vector fixed_space_projection(const Matrix& m, const Vector& v) {
  if (!m.is_square()) throw InputError("fixed_space_projection: matrix not square");
  if (v.size() != m.cols()) throw InputError("fixed_space_projection: vector length mismatch");
  const std::size_t n = m.rows();
  Matrix shifted = m - Matrix::identity(n);
  std::vector<Vector> fixed = kernel_basis(shifted);
  std::vector<Vector> cols = fixed;
  for (std::size_t j = 0; j < n; ++j) cols.push_back(shifted.column(j));
  Matrix split = Matrix::from_columns(cols, n);
  if (fixed.size() + rank(shifted) != n || rank(split) != n)
    throw InputError("fixed_space_projection: ker(M-I) and im(M-I) do not split the space");
  auto sol = solve_linear(split, v);
  if (!sol) throw InputError("fixed_space_projection: decomposition infeasible");
  Vector out(n);
  for (std::size_t k = 0; k < fixed.size(); ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (fixed[k][i] != 0) out[i] += (*sol)[k] * fixed[k][i];
  return out;
}

Vector quotient_coordinates(const std::vector<Vector>& space, const std::vector<Vector>& subspace,
                            const Vector& v) {
  const std::size_t n = v.size();
  std::vector<Vector> cols = subspace;
  cols.insert(cols.end(), space.begin(), space.end());
  for (const auto& c : cols)
    if (c.size() != n) throw InputError("quotient_coordinates: vector length mismatch");
  Echelon e = row_reduce(Matrix::from_columns(cols, n));
  std::vector<std::size_t> sub_piv, comp;
  for (std::size_t p : e.pivots) (p < subspace.size() ? sub_piv : comp).push_back(p);
  std::vector<Vector> basis;
  for (std::size_t p : sub_piv) basis.push_back(cols[p]);
  for (std::size_t p : comp) basis.push_back(cols[p]);
  auto sol = solve_linear(Matrix::from_columns(basis, n), v);
  if (!sol) throw InputError("quotient_coordinates: vector outside span(space)");
  // Complement pivots after all subspace pivots, so coordinates follow the space order.
  return Vector(sol->begin() + static_cast<long>(sub_piv.size()), sol->end());
}

}  // namespace linalg
}  // namespace twistbv
