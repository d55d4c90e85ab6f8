// Example algebras: truncated polynomial rings and quantum complete intersections.
#pragma once

#include <optional>

#include "twistbv/comparison.hpp"

namespace twistbv::examples {

using frobenius::FrobeniusStructure;

// k[x]/(x^n), |x| = 1, <x^i, x^j> = 1 iff i + j = n - 1.
FrobeniusStructure build_truncated(std::size_t n);

struct QciData {
  FrobeniusStructure left;   // k[x]/(x^m)
  FrobeniusStructure right;  // k[y]/(y^n)
  algebra::Bicharacter t;    // t(i, j) = q^{ij}
};

QciData build_qci(std::size_t m, std::size_t n, const Scalar& q);
// The twisted product with its Frobenius form.
FrobeniusStructure qci_product(const QciData& data);

// A named class of HH(R (x)^t S) with its invariant representative.
struct NamedClass {
  std::string name;
  std::string description;
  hochschild::Cochain rep;
};

// Cohomology, BV values and main-theorem matrix of k[x]/(x^m) (x)^q k[y]/(y^n).
// V is the Euler derivation of the x factor (x[1] (x) 1, built from the first
// factor k[x]/(x^m)) and W that of the y factor. Scalars are exact multiples:
// Delta(V) = delta_v * 1, [V,U] = bracket_vu * U.
struct QciReport {
  std::size_t m = 0, n = 0, max_level = 0;
  Scalar q;
  comparison::DecompositionTable dims;
  NamedClass u, v, w;
  bool delta_u_zero = false;
  Scalar delta_v, delta_w;
  Scalar bracket_vu_definition;  // BracketSign::Definition
  Scalar bracket_vu_tradler;     // BracketSign::Tradler
  comparison::MainTheoremReport theorem;
};

// Refuses q = 0 and |q| = 1 (roots of unity over Q) with InputError.
QciReport qci_report(std::size_t m, std::size_t n, const Scalar& q, std::size_t max_level,
                     std::size_t size_cap = hochschild::kDefaultSizeCap);

}  // namespace twistbv::examples
