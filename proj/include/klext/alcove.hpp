#pragma once

#include <cstdint>
#include <vector>

#include "klext/coxeter.hpp"
#include "klext/rootsys.hpp"

namespace klext {

/// w.lambda = w(lambda + rho) - rho
Weight dot_action(const CoxeterGroup& g, const AffineElement& w, const Weight& lambda);

/// True when lambda lies in the closure of C^-: -ell <= <lambda+rho, alpha^vee> <= 0.
bool in_closure_of_antidominant_alcove(const CoxeterGroup& g, const Weight& lambda);

/// True when w.C^- lies in the dominant chamber (w in W_l^+).
bool maps_alcove_to_dominant(const CoxeterGroup& g, const AffineElement& w);

enum class Parity { even, odd };

struct Classification {
  Weight lambda;     ///< orbit representative in the closure of C^-
  AffineElement w;   ///< minimal coset representative with w.lambda = input
  Word word;         ///< canonical word of w
  GeneratorSet J;    ///< stabilizer generators of lambda
  bool regular = false;
  int weight_length = 0;
  Parity parity = Parity::even;
};

/// Writes any integral weight as w.lambda with lambda in the closure of C^-
/// and w in W^J.
Classification classify(const CoxeterGroup& g, const Weight& weight);

/// Generators fixing lambda under the dot action. Throws InputError unless
/// lambda is in the closure of C^-.
GeneratorSet stabilizer(const CoxeterGroup& g, const Weight& lambda);

/// A weight in the closure of C^- whose stabilizer is exactly J (smallest
/// coordinates first). Throws InputError when the facet has no integral weight.
Weight facet_weight(const CoxeterGroup& g, GeneratorSet J);

struct DominantRep {
  AffineElement w;
  Word word;
  int length = 0;
  Weight weight;  ///< w.lambda
};

/// Orbit of lambda restricted to dominant weights of length <= length_bound.
struct BlockData {
  CoxeterGroup group;
  Weight lambda;
  GeneratorSet J;
  int length_bound = 0;
  std::vector<DominantRep> dominant_reps;  ///< (length, word) order

  bool regular() const { return J.empty(); }
  /// Index into dominant_reps, or -1.
  int find(const AffineElement& w) const;
  int find(const Weight& weight) const;
};

BlockData dominant_orbit(const CoxeterGroup& g, const Weight& lambda, int length_bound);

/// Elements of W_l^+ (regular dominant alcoves) of length <= length_bound.
std::vector<DominantRep> regular_dominant_elements(const CoxeterGroup& g, int length_bound);

enum class KLGood { yes, no, unknown };
const char* to_string(KLGood k);

/// Whether ell is known to make the Kazhdan-Lusztig functor an equivalence.
/// Type A: always. D_n: ell >= 3; E6/E7/E8: ell >= 14/20/32. Below those
/// bounds and for B, C, F, G nothing is known.
KLGood kl_good(char type_label, int rank, std::int64_t ell);

/// Whether every wall of C^- carries an integral weight. Requires ell >= h.
bool wall_has_weight(char type_label, int rank, std::int64_t ell);

}  // namespace klext
