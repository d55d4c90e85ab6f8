#include "twistbv/frobenius.hpp"

#include <set>

namespace twistbv::frobenius {

using algebra::add;
using algebra::negate;

Scalar pairing(const FrobeniusStructure& f, const Vector& x, const Vector& y) {
  const std::size_t n = f.algebra.dim();
  if (x.size() != n || y.size() != n) throw InputError("pairing: dimension mismatch");
  Scalar s(0);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j)
      if (y[j] != 0 && f.gram(i, j) != 0) s += x[i] * f.gram(i, j) * y[j];
  }
  return s;
}

FrobeniusStructure validate_frobenius(const GradedAlgebra& alg, const Matrix& gram) {
  const std::size_t n = alg.dim();
  if (gram.rows() != n || gram.cols() != n) throw ValidationError("gram matrix size differs from algebra dimension");
  auto inv = linalg::inverse(gram);
  if (!inv) throw ValidationError("gram matrix is degenerate (not invertible)");

  // <e_i e_j, e_k> = <e_i, e_j e_k>
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Scalar lhs(0), rhs(0);
        for (const auto& t : alg.product(i, j)) lhs += t.coeff * gram(t.index, k);
        for (const auto& t : alg.product(j, k)) rhs += t.coeff * gram(i, t.index);
        if (lhs != rhs)
          throw ValidationError("form is not invariant on triple (" + alg.names()[i] + ", " + alg.names()[j] +
                                ", " + alg.names()[k] + ")");
      }

  std::set<Degree> shifts;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (gram(i, j) != 0) shifts.insert(negate(add(alg.degree(i), alg.degree(j))));
  if (shifts.size() != 1) throw ValidationError("no single grading shift is compatible with the form");

  // <e_a, e_x> = <e_x, nu(e_a)>  gives  G^T = G N.
  Matrix nu = *inv * linalg::transpose(gram);
  if (auto err = algebra::automorphism_failure(alg, nu))
    throw ValidationError("Nakayama map is not a graded algebra automorphism: " + *err);

  return FrobeniusStructure{alg, gram, *inv, *shifts.begin(), nu};
}

bool nakayama_semisimple(const FrobeniusStructure& f) { return linalg::is_semisimple(f.nakayama); }

FrobeniusStructure twisted_frobenius_product(const FrobeniusStructure& fr, const FrobeniusStructure& fs,
                                             const algebra::Bicharacter& t) {
  GradedAlgebra prod = algebra::twisted_tensor(fr.algebra, fs.algebra, t);
  const std::size_t dr = fr.algebra.dim(), ds = fs.algebra.dim();
  Matrix g(dr * ds, dr * ds);
  for (std::size_t i = 0; i < dr; ++i)
    for (std::size_t j = 0; j < ds; ++j)
      for (std::size_t k = 0; k < dr; ++k) {
        if (fr.gram(i, k) == 0) continue;
        Scalar tw = algebra::bicharacter_eval(t, fr.algebra.degree(k), fs.algebra.degree(j));
        for (std::size_t l = 0; l < ds; ++l)
          if (fs.gram(j, l) != 0) g(i * ds + j, k * ds + l) = tw * fr.gram(i, k) * fs.gram(j, l);
      }
  FrobeniusStructure out = validate_frobenius(prod, g);
  if (out.sigma != algebra::concat(fr.sigma, fs.sigma))
    throw ValidationError("product grading shift differs from (sigma_R, sigma_S)");
  return out;
}

Matrix nakayama_product_formula(const FrobeniusStructure& fr, const FrobeniusStructure& fs,
                                const algebra::Bicharacter& t) {
  const std::size_t dr = fr.algebra.dim(), ds = fs.algebra.dim();
  Matrix nu(dr * ds, dr * ds);
  for (std::size_t i = 0; i < dr; ++i)
    for (std::size_t j = 0; j < ds; ++j) {
      Scalar c = algebra::bicharacter_eval(t, fr.algebra.degree(i), fs.sigma) /
                 algebra::bicharacter_eval(t, fr.sigma, fs.algebra.degree(j));
      for (std::size_t k = 0; k < dr; ++k) {
        if (fr.nakayama(k, i) == 0) continue;
        for (std::size_t l = 0; l < ds; ++l)
          if (fs.nakayama(l, j) != 0) nu(k * ds + l, i * ds + j) = c * fr.nakayama(k, i) * fs.nakayama(l, j);
      }
    }
  return nu;
}

bool check_nakayama_product_formula(const FrobeniusStructure& fr, const FrobeniusStructure& fs,
                                    const algebra::Bicharacter& t) {
  FrobeniusStructure prod = twisted_frobenius_product(fr, fs, t);
  return prod.nakayama == nakayama_product_formula(fr, fs, t);
}

DualBases dualizing_bases(const FrobeniusStructure& f) {
  DualBases d;
  const std::size_t n = f.algebra.dim();
  for (std::size_t i = 0; i < n; ++i) {
    d.left.push_back(f.gram_inverse.row(i));
    d.right.push_back(f.gram_inverse.column(i));
  }
  return d;
}

}  // namespace twistbv::frobenius
