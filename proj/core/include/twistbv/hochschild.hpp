// Reduced bar (co)chain complexes with bimodule coefficients, the Connes-type
// operator, duality transport and invariant representatives.
//
// Layout: a level-p cochain or chain is a dense vector indexed by
// tuple * dim(M) + k, where the tuple enumerates reduced basis positions
// (first slot most significant) and k is a module basis index. For chains the
// module index is the coefficient slot a_0.
#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <utility>
#include <vector>

#include "twistbv/frobenius.hpp"

namespace twistbv::hochschild {

using algebra::Bicharacter;
using algebra::Degree;
using algebra::GradedAlgebra;
using algebra::TwistedBimodule;
using frobenius::FrobeniusStructure;
using linalg::Matrix;

inline constexpr std::size_t kDefaultSizeCap = 1'000'000;

struct Cochain {
  std::size_t level = 0;
  Vector values;
  std::optional<Degree> degree;  // set when homogeneous
};

struct Chain {
  std::size_t level = 0;
  Vector values;
};

struct SparseEntry {
  std::size_t index;
  Scalar coeff;
};

class BarComplex {
 public:
  BarComplex(GradedAlgebra alg, TwistedBimodule module, std::size_t size_cap = kDefaultSizeCap);

  const GradedAlgebra& algebra() const { return alg_; }
  const TwistedBimodule& module() const { return module_; }
  std::size_t reduced_dim() const { return alg_.reduced_basis().size(); }
  std::size_t module_dim() const { return module_.dim; }
  std::size_t size_cap() const { return cap_; }

  std::size_t tuple_count(std::size_t p) const;
  std::size_t space_size(std::size_t p) const;  // throws SizeError above the cap
  std::vector<std::size_t> decode(std::size_t p, std::size_t tuple) const;
  std::size_t encode(const std::vector<std::size_t>& slots) const;
  Degree tuple_degree(std::size_t p, std::size_t tuple) const;
  // Internal degree of a cochain entry: |m_k| - |tuple|.
  Degree entry_degree(std::size_t p, std::size_t index) const;
  // Cochain entries grouped by internal degree.
  const std::map<Degree, std::vector<std::size_t>>& blocks(std::size_t p) const;

  // Reduced product of two reduced positions, unit component dropped.
  const std::vector<SparseEntry>& reduced_product(std::size_t x, std::size_t y) const {
    return red_prod_[x * reduced_dim() + y];
  }
  // Pairs (x, y) whose reduced product has a z-component, as x * D + y with that coefficient.
  const std::vector<SparseEntry>& reduced_factorizations(std::size_t z) const { return red_fact_[z]; }

  Cochain zero_cochain(std::size_t p) const;
  // (delta f)(a_1..a_{p+1}) = a_1 f(a_2..) + sum_i (-1)^i f(.. a_i a_{i+1} ..) + (-1)^{p+1} f(a_1..a_p) a_{p+1}
  Cochain differential(const Cochain& f) const;
  bool is_cocycle(const Cochain& f) const;
  // Matrix of delta^p restricted to internal degree d (rows: level p+1 block).
  // Cached; the reference lives as long as the complex.
  const Matrix& differential_block(std::size_t p, const Degree& d) const;
  // Homogeneous components of a cochain keyed by internal degree.
  std::map<Degree, Vector> split(const Cochain& f) const;
  std::optional<Degree> homogeneous_degree(const Cochain& f) const;

  // Standard boundary: (m a_1, a_2..) + sum_i (-1)^i (m, .. a_i a_{i+1} ..) + (-1)^p (a_p m, a_1..a_{p-1}).
  Chain chain_differential(const Chain& c) const;

 private:
  GradedAlgebra alg_;
  TwistedBimodule module_;
  std::size_t cap_;
  std::vector<std::vector<SparseEntry>> red_prod_;
  std::vector<std::vector<SparseEntry>> red_fact_;
  mutable std::mutex mutex_;
  mutable std::map<std::size_t, std::unique_ptr<std::map<Degree, std::vector<std::size_t>>>> blocks_;
  mutable std::map<std::pair<std::size_t, Degree>, std::shared_ptr<const Matrix>> diff_blocks_;
};

struct CohomologyGroup {
  std::size_t level = 0;
  std::size_t dimension = 0;
  std::vector<Cochain> representatives;  // homogeneous, ordered by degree then pivot order
  std::map<Degree, std::size_t> graded_dims;
  std::map<Degree, std::vector<Vector>> coboundary_basis;  // block-local vectors per degree
};

CohomologyGroup cohomology(const BarComplex& cx, std::size_t p);
// Cohomology restricted to one internal degree.
CohomologyGroup cohomology_in_degree(const BarComplex& cx, std::size_t p, const Degree& d);
// f - g is a coboundary. Both must be cocycles of the same level; throws otherwise.
bool classes_equal(const BarComplex& cx, const Cochain& f, const Cochain& g);
// True iff f is a coboundary.
bool is_coboundary(const BarComplex& cx, const Cochain& f);
// Coordinates of the class of the cocycle f in the representatives of g (same level).
Vector class_coordinates(const BarComplex& cx, const CohomologyGroup& g, const Cochain& f);

// Twisting of the coefficient module and its duality transport.
enum class TwistSide { None, Right, Left };
struct Twist {
  TwistSide side = TwistSide::None;
  Degree degree;  // b for Right (in the second grading group), a for Left (in the first)
  Bicharacter t;
  static Twist none() { return {}; }
  static Twist right(const Bicharacter& t, const Degree& b) { return {TwistSide::Right, b, t}; }
  static Twist left(const Bicharacter& t, const Degree& a) { return {TwistSide::Left, a, t}; }
};

// Coefficients for cochains: A, R_b^ or _a^S.
TwistedBimodule coefficient_module(const FrobeniusStructure& f, const Twist& tw);
// nu, nu b^-1 or nu a^.
Matrix composite_automorphism(const FrobeniusStructure& f, const Twist& tw);
// Per-basis scalar in the transport: t(|e_k|, b)^-1 for a right twist, else 1.
Vector transport_weights(const FrobeniusStructure& f, const Twist& tw);

// Everything needed to move between cochains with twisted coefficients and
// functionals on chains with coefficients in A_psi.
class DualityContext {
 public:
  DualityContext(FrobeniusStructure frob, Twist tw, std::size_t size_cap = kDefaultSizeCap);

  const FrobeniusStructure& frobenius() const { return frob_; }
  const Twist& twist() const { return tw_; }
  const Matrix& psi() const { return psi_; }
  const Vector& weights() const { return w_; }
  const BarComplex& cochains() const { return *cochains_; }
  const BarComplex& chains() const { return *chains_; }

  // Functional on level-p chains: (r_0, r_1..r_p) -> <f(r_1..r_p), r_0> w.
  // With a nontrivial right twist f must be homogeneous.
  Vector dual_transport(const Cochain& f) const;
  Cochain dual_transport_inverse(std::size_t p, const Vector& functional) const;

  // psi applied slotwise on chains, reduced slots projected.
  Chain t_operator(const Chain& c) const;
  // beta(a_0..a_p) = sum_{i=1}^{p+1} (-1)^{ip} (1, a_i..a_p, a_0, psi a_1..psi a_{i-1}).
  Chain connes_beta(const Chain& c) const;
  // Bar tuples of beta(e, a_1..a_p) with e at reduced position x0; the coefficient slot is the unit.
  // alternate_sign replaces (-1)^{ip} by (-1)^{i(p+1)} (mutation testing only).
  void beta_tuples(std::size_t p, std::size_t tuple, std::size_t x0,
                   const std::function<void(std::size_t, const Scalar&)>& emit, bool alternate_sign = false) const;
  // T* = transport o D(T) o transport^-1 on cochains.
  Cochain dual_t(const Cochain& f) const;
  Matrix dual_t_block(std::size_t p, const Degree& d) const;
  bool is_invariant(const Cochain& f) const;
  // Component of a cocycle fixed by T*; cohomologous to the input.
  Cochain invariant_representative(const Cochain& f) const;

  // Reduced image of psi on a reduced position.
  const std::vector<SparseEntry>& psi_reduced(std::size_t x) const { return psi_red_[x]; }

 private:
  FrobeniusStructure frob_;
  Twist tw_;
  Matrix psi_;
  Vector w_;
  Matrix slot_map_;  // M_0 = W^-1 G^-T psi^T G^T W acting on the value slot of T*
  std::vector<std::vector<SparseEntry>> psi_red_;
  std::vector<std::vector<SparseEntry>> psi_red_pre_;  // preimage lists for column building
  std::unique_ptr<BarComplex> cochains_;
  std::unique_ptr<BarComplex> chains_;
};

}  // namespace twistbv::hochschild
