// Frobenius structures: validation, grading shift, Nakayama automorphism.
#pragma once

#include <stdexcept>
#include <vector>

#include "twistbv/algebra.hpp"

namespace twistbv::frobenius {

using algebra::Degree;
using algebra::GradedAlgebra;
using linalg::Matrix;

// A candidate form failed one of the Frobenius laws.
struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct FrobeniusStructure {
  GradedAlgebra algebra;
  Matrix gram;          // gram(i, j) = <e_i, e_j>
  Matrix gram_inverse;
  Degree sigma;         // <r, r'> != 0 implies |r| + |r'| + sigma = 0
  Matrix nakayama;      // column i holds nu(e_i); <a, -> = <-, nu(a)>
};

Scalar pairing(const FrobeniusStructure& f, const Vector& x, const Vector& y);

FrobeniusStructure validate_frobenius(const GradedAlgebra& alg, const Matrix& gram);
bool nakayama_semisimple(const FrobeniusStructure& f);

// Form on R (x)^t S: <e_i f_j, e_k f_l> = t(|e_k|, |f_j|) <e_i, e_k> <f_j, f_l>.
FrobeniusStructure twisted_frobenius_product(const FrobeniusStructure& fr, const FrobeniusStructure& fs,
                                             const algebra::Bicharacter& t);
// nu(a (x) b) = t(|a|, sigma_S) t(sigma_R, |b|)^-1 nu_R(a) (x) nu_S(b), as a matrix.
Matrix nakayama_product_formula(const FrobeniusStructure& fr, const FrobeniusStructure& fs,
                                const algebra::Bicharacter& t);
bool check_nakayama_product_formula(const FrobeniusStructure& fr, const FrobeniusStructure& fs,
                                    const algebra::Bicharacter& t);

struct DualBases {
  std::vector<Vector> left;   // <left[i], e_j> = delta_ij
  std::vector<Vector> right;  // <e_i, right[j]> = delta_ij
};
DualBases dualizing_bases(const FrobeniusStructure& f);

}  // namespace twistbv::frobenius
