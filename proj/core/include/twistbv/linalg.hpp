// Exact linear algebra over the rationals.
#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace twistbv {

using Scalar = mpq_class;
using Vector = std::vector<Scalar>;

// Raised for malformed input or violated preconditions.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised when a requested computation exceeds the configured size cap.
struct SizeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Parses "p", "-p" or "p/q" into a canonical rational.
Scalar parse_scalar(const std::string& text);
// Canonical "p" or "p/q" form.
std::string format_scalar(const Scalar& x);
// x^e for integer e; x must be nonzero when e < 0.
Scalar power(const Scalar& x, long e);

bool is_zero(const Vector& v);

namespace linalg {

// Dense row-major matrix of rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<Vector>& rows);
  static Matrix from_columns(const std::vector<Vector>& cols, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vector row(std::size_t i) const;
  Vector column(std::size_t j) const;
  bool is_square() const { return rows_ == cols_; }
  bool is_zero() const;

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator*(const Scalar& s, const Matrix& a);
Vector operator*(const Matrix& a, const Vector& v);
Matrix transpose(const Matrix& a);
// Kronecker product, row index i*rows(b)+k.
Matrix kronecker(const Matrix& a, const Matrix& b);

struct Echelon {
  Matrix rref;                      // reduced row echelon form
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

// Gauss-Jordan elimination. Pivot = leftmost column with a nonzero entry among
// the unreduced rows, taken from the earliest such row.
Echelon row_reduce(Matrix m);
std::size_t rank(const Matrix& m);

// Solution of m x = v with free variables set to zero, or nullopt if inconsistent.
std::optional<Vector> solve_linear(const Matrix& m, const Vector& v);
// Basis of ker(m), returned in reduced row echelon form.
std::vector<Vector> kernel_basis(const Matrix& m);
std::optional<Matrix> inverse(const Matrix& m);

// Coefficients lowest degree first; empty means the zero polynomial.
struct Polynomial {
  std::vector<Scalar> coeffs;
  long degree() const { return static_cast<long>(coeffs.size()) - 1; }
  void trim();
  friend bool operator==(const Polynomial&, const Polynomial&) = default;
};

Polynomial poly_mul(const Polynomial& a, const Polynomial& b);
Polynomial poly_derivative(const Polynomial& p);
Polynomial poly_gcd(Polynomial a, Polynomial b);  // monic
Matrix poly_eval(const Polynomial& p, const Matrix& m);
std::string format_polynomial(const Polynomial& p);

Polynomial minimal_polynomial(const Matrix& m);
bool is_semisimple(const Matrix& m);

// Component of v in ker(m - I) along im(m - I).
Vector fixed_space_projection(const Matrix& m, const Vector& v);

// Coordinates of v in a complement of span(subspace) inside span(space). The
// complement is spanned by the space vectors that are pivots after the
// subspace vectors, in order.
Vector quotient_coordinates(const std::vector<Vector>& space,
                            const std::vector<Vector>& subspace, const Vector& v);

}  // namespace linalg
}  // namespace twistbv
