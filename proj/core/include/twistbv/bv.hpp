// BV operators (untwisted and character-twisted), cup product and the
// Gerstenhaber bracket obtained from the BV identity.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "twistbv/hochschild.hpp"

namespace twistbv::bv {

using hochschild::BarComplex;
using hochschild::Cochain;
using hochschild::DualityContext;
using hochschild::Twist;
using hochschild::TwistSide;

// Switches used by the mutation tests; defaults give the correct operators.
struct DeltaOptions {
  bool drop_twist_factor = false;  // omit t(r_0, b) in the right-twisted operator
  bool flip_sign = false;          // use (-1)^{i(p+1)} instead of (-1)^{ip} in the cyclic sum
};

class BVContext {
 public:
  // Throws ValidationError if the composite automorphism is not semisimple.
  explicit BVContext(frobenius::FrobeniusStructure frob, Twist tw = Twist::none(),
                     std::size_t size_cap = hochschild::kDefaultSizeCap);

  const DualityContext& duality() const { return duality_; }
  const BarComplex& complex() const { return duality_.cochains(); }
  const frobenius::FrobeniusStructure& frobenius() const { return duality_.frobenius(); }
  const Twist& twist() const { return duality_.twist(); }
  const linalg::Matrix& composite_automorphism() const { return duality_.psi(); }

  Cochain invariant_representative(const Cochain& f) const { return duality_.invariant_representative(f); }

 private:
  DualityContext duality_;
};

// Delta on an invariant cocycle of level n >= 1, giving level n-1. Throws
// InputError on level 0, on non-cocycles and on non-invariant input.
Cochain bv_delta(const BVContext& ctx, const Cochain& f, const DeltaOptions& opt = {});
Cochain bv_delta_right(const BVContext& ctx, const Cochain& f, const DeltaOptions& opt = {});
Cochain bv_delta_left(const BVContext& ctx, const Cochain& f, const DeltaOptions& opt = {});
// Dispatch on the context's twist. Level-0 input gives nullopt (the zero map).
std::optional<Cochain> delta_or_zero(const BVContext& ctx, const Cochain& f, const DeltaOptions& opt = {});

// (f u g)(a_1..a_{p+q}) = f(a_1..a_p) * g(a_{p+1}..a_{p+q}). Coefficients are
// regular or twisted on the same side by the same bicharacter; the result
// carries the summed twist, returned through out_twist when given.
Cochain cup_product(const algebra::GradedAlgebra& alg, const Cochain& f, const Twist& f_twist, const Cochain& g,
                    const Twist& g_twist, Twist* out_twist = nullptr);
Cochain cup_product(const algebra::GradedAlgebra& alg, const Cochain& f, const Cochain& g);

// Overall sign in front of Delta(f u g) - Delta(f) u g - (-1)^{|f|} f u Delta(g).
// Definition: (-1)^{|f|+1}. Tradler: (-1)^{(|f|-1)|g|+1}, the normalization under
// which a derivation V and a level-0 class U give [V,U] = V(U). Both satisfy the
// Gerstenhaber axioms; they differ by a sign on some degree pairs.
enum class BracketSign { Definition, Tradler };

// The bracket from the BV identity on invariant cocycles with regular
// coefficients. nullopt when |f| = |g| = 0.
std::optional<Cochain> gerstenhaber_bracket(const BVContext& ctx, const Cochain& f, const Cochain& g,
                                            const DeltaOptions& opt = {},
                                            BracketSign sign = BracketSign::Definition);

struct AxiomFailure {
  std::string axiom;    // "delta-squared", "antisymmetry", "jacobi", "derivation"
  std::string witness;  // class indices involved
};

struct BVAxiomReport {
  std::size_t classes_checked = 0;
  std::size_t instances_checked = 0;
  std::vector<AxiomFailure> failures;
  bool ok() const { return failures.empty(); }
};

// Checks the BV axioms on invariant representatives of all classes of level <= P.
// An instance is checked when its inputs and result live in levels <= P.
BVAxiomReport check_bv_axioms(const BVContext& ctx, std::size_t max_level, const DeltaOptions& opt = {},
                              BracketSign sign = BracketSign::Definition);

}  // namespace twistbv::bv
