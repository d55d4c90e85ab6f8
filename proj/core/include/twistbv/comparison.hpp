// Comparison maps between the bar complex of a twisted tensor product and the
// tensor product of the factors' bar complexes, and the verification of the
// BV operator formula across the box product.
#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "twistbv/bv.hpp"

namespace twistbv::comparison {

using algebra::Bicharacter;
using algebra::Degree;
using frobenius::FrobeniusStructure;
using hochschild::Cochain;
using hochschild::SparseEntry;

struct Shuffle {
  std::vector<std::size_t> position;  // position[a] = sigma(a+1) - 1
  int sign = 1;
};

// All (p, q)-shuffles in lexicographic order of the positions of the first p elements.
std::vector<Shuffle> shuffles(std::size_t p, std::size_t q);

// Which of the two global signs is kept. Taken literally, EZ carries (-1)^{nm}
// and AW carries (-1)^{pq} on each split; together they give AW o EZ = (-1)^{nm}.
enum class SignConvention { DropEzSign, DropAwSign, Literal };

struct ComparisonOptions {
  SignConvention signs = SignConvention::DropEzSign;
  bool drop_ez_coefficients = false;  // omit the t^-1 inversion weights in EZ (mutation)
  bv::DeltaOptions delta;             // forwarded to the component BV operators
};

// R, S, the bicharacter, and R (x)^t S with its Frobenius form.
class ProductSetup {
 public:
  ProductSetup(FrobeniusStructure r, FrobeniusStructure s, Bicharacter t,
               std::size_t size_cap = hochschild::kDefaultSizeCap);

  const FrobeniusStructure& left() const { return r_; }
  const FrobeniusStructure& right() const { return s_; }
  const FrobeniusStructure& product() const { return p_; }
  const Bicharacter& bichar() const { return t_; }
  std::size_t size_cap() const { return cap_; }

  std::size_t left_reduced_dim() const { return r_.algebra.reduced_basis().size(); }
  std::size_t right_reduced_dim() const { return s_.algebra.reduced_basis().size(); }
  // Reduced position in the product of r (x) 1 and 1 (x) s for reduced positions of R and S.
  std::size_t embed_left(std::size_t r_pos) const { return embed_left_[r_pos]; }
  std::size_t embed_right(std::size_t s_pos) const { return embed_right_[s_pos]; }
  // Product basis index of i (x) j.
  std::size_t product_index(std::size_t i, std::size_t j) const { return i * s_.algebra.dim() + j; }

  // Product bar complex (regular coefficients) and BV context, built once.
  const bv::BVContext& product_context() const;

 private:
  FrobeniusStructure r_, s_, p_;
  Bicharacter t_;
  std::size_t cap_;
  std::vector<std::size_t> embed_left_, embed_right_;
  mutable std::unique_ptr<bv::BVContext> pctx_;
};

// Sum over shuffles of the interleavings of r_a (x) 1 and 1 (x) s_b, weighted by
// sign(sigma) and t(|r_a|, |s_b|)^-1 for every inversion pair. Tuples are in
// reduced product positions, level n + m.
std::vector<SparseEntry> ez_twisted(const ProductSetup& ps, const std::vector<std::size_t>& r_slots,
                                    const std::vector<std::size_t>& s_slots, const ComparisonOptions& opt = {});

struct AWTerm {
  std::size_t left_multiplier;   // basis index of R (after expanding r_1..r_p)
  std::vector<std::size_t> r_slots;
  std::vector<std::size_t> s_slots;
  std::size_t right_multiplier;  // basis index of S
  Scalar coeff;
};

// Alexander-Whitney terms of a product bar tuple (reduced product positions).
// For the split p + q = n: left multiplier r_1..r_p, R-tuple r_{p+1}..r_n,
// S-tuple s_1..s_p, right multiplier s_{p+1}..s_n, sign (-1)^{pq}, times
// prod_{i<j} t(|r_j|, |s_i|). Multipliers are expanded in the basis.
std::vector<AWTerm> aw_twisted(const ProductSetup& ps, const std::vector<std::size_t>& slots,
                               const ComparisonOptions& opt = {});
// The terms of a single split with p slots going to the S-tuple.
std::vector<AWTerm> aw_split(const ProductSetup& ps, const std::vector<std::size_t>& slots, std::size_t p,
                             const ComparisonOptions& opt = {});

struct IdentityReport {
  std::size_t pairs_checked = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};
// AW o EZ = identity on every basis pair of bar tuples with total level <= max_level.
IdentityReport identity_check(const ProductSetup& ps, std::size_t max_level, const ComparisonOptions& opt = {});

// A cochain on BR (x) BS at levels (n, m) with values in R (x)^t S.
// Index: (r_tuple * (dim S-bar)^m + s_tuple) * dim(R (x) S) + k.
struct ProductCochain {
  std::size_t n = 0, m = 0;
  Vector values;
};

// (f [x] g)(x (x) y) = (-1)^{mn} f(x) (x) g(y) for f of level n and g of level m.
ProductCochain box_product(const ProductSetup& ps, const Cochain& f, const Cochain& g);
// Checks the twist pairing of the box product: f in C(R, R_c^) of degree d and g in C(S, _d^S) of degree c.
void check_box_twists(const ProductSetup& ps, const Cochain& f, const hochschild::Twist& f_twist, const Cochain& g,
                      const hochschild::Twist& g_twist);

// h o AW as a cochain on the bar complex of R (x)^t S (regular coefficients).
Cochain pullback(const ProductSetup& ps, const ProductCochain& h, const ComparisonOptions& opt = {});
// F o EZ restricted to bar levels (n, m).
ProductCochain pushforward(const ProductSetup& ps, const Cochain& big, std::size_t n, std::size_t m,
                           const ComparisonOptions& opt = {});

// Delta(h o AW) o EZ on all bar levels (n', m') with n' + m' = n + m - 1. The
// pullback is replaced by its invariant representative first. Empty on level 0.
std::vector<ProductCochain> delta_tilde(const ProductSetup& ps, const ProductCochain& h,
                                        const ComparisonOptions& opt = {});

struct DecompositionRow {
  std::size_t level = 0;
  Degree left_degree, right_degree;
  std::size_t product_dim = 0;    // dim HH^level(R (x)^t S) in this bidegree
  std::size_t component_sum = 0;  // sum_{i+j=level} dim HH^i(R,R_b^)^a dim HH^j(S,_a^S)^b
};

struct DecompositionTable {
  std::vector<DecompositionRow> rows;      // nonzero rows, ordered by level then bidegree
  std::vector<std::size_t> level_totals;   // dim HH^level(R (x)^t S)
  bool ok() const;
};

DecompositionTable decomposition_dims(const ProductSetup& ps, std::size_t max_level);

struct PairResult {
  Degree d, c;  // f in HH^n(R, R_c^)^d, g in HH^m(S, _d^S)^c
  std::size_t n = 0, m = 0;
  std::size_t f_index = 0, g_index = 0;
  bool pass = false;
  std::string detail;
};

struct MainTheoremReport {
  std::vector<PairResult> pairs;
  std::vector<std::string> precondition_failures;
  bool ok() const;
};

// For all component classes f, g with n + m <= max_level: Delta~(f [x] g) equals
// (-1)^{mn} (Delta_c(f) [x] g + (-1)^n f [x] _dDelta(g)) in HH^{n+m-1}(R (x)^t S).
MainTheoremReport verify_main_theorem(const ProductSetup& ps, std::size_t max_level, const ComparisonOptions& opt = {});

}  // namespace twistbv::comparison
