#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "klext/alcove.hpp"
#include "klext/intpoly.hpp"
#include "klext/klpoly.hpp"

namespace klext {

/// sum_n dim Ext^n t^n. Coefficients are dimensions, hence non-negative.
class ExtSeries {
 public:
  ExtSeries() = default;
  /// Throws InternalError if a coefficient is negative.
  static ExtSeries from_polynomial(const IntPoly& p);

  const std::vector<std::int64_t>& coeffs() const { return poly_.coeffs(); }
  std::int64_t degree_coeff(int n) const { return poly_.coeff(n); }
  bool is_zero() const { return poly_.is_zero(); }
  std::int64_t eval(std::int64_t t) const { return poly_.eval(t); }
  const IntPoly& polynomial() const { return poly_; }
  /// "1 + 2t^3"
  std::string to_string() const { return poly_.to_string("t"); }

  friend bool operator==(const ExtSeries&, const ExtSeries&) = default;

 private:
  IntPoly poly_;
};

struct ExtOptions {
  /// Compute even when ell is not known to be KL-good.
  bool assume_kl_good = false;
};

/// Throws GatingError unless ell is known KL-good or the override is set.
void require_kl_good(const CoxeterGroup& g, const ExtOptions& opts);

/// t^{l(w)-l(y)} * bar(P^J_{y,w}) as a polynomial in t (q = t^2).
IntPoly delta_irr_polynomial(KLEngine& engine, GeneratorSet J, const AffineElement& y, const AffineElement& w);

/// t^{l(w)-l(y)-i} * sum_{x in W_J, l(x) >= i} (-1)^{l(x)-i} bar(P_{yx,w}), unchecked sign.
IntPoly ui_polynomial(KLEngine& engine, GeneratorSet J, const AffineElement& y, const AffineElement& w, int i);

/// dim Ext^n(Delta(y.mu), L(w.mu)) for y, w in the block's dominant representatives.
ExtSeries ext_delta_irr(KLEngine& engine, const BlockData& block, const AffineElement& y, const AffineElement& w,
                        const ExtOptions& opts = {});

/// dim Ext^n(L(w.mu), nabla(y.mu)); same numbers as ext_delta_irr(y, w).
ExtSeries ext_irr_nabla(KLEngine& engine, const BlockData& block, const AffineElement& w, const AffineElement& y,
                        const ExtOptions& opts = {});

/// dim Ext^n(L(w.mu), L(z.mu)) as a convolution over dominant y below both w and z.
ExtSeries ext_irr_irr(KLEngine& engine, const BlockData& block, const AffineElement& w, const AffineElement& z,
                      const ExtOptions& opts = {});

/// Ext series of the i-th section module U_i of the J-facet crossing of Delta(y.lambda)
/// against L(w.lambda), in a regular block. y must lie in W^J.
ExtSeries ext_ui(KLEngine& engine, const BlockData& regular_block, GeneratorSet J, const AffineElement& y,
                 const AffineElement& w, int i, const ExtOptions& opts = {});

/// Length of the longest element of W_J.
int longest_parabolic_length(KLEngine& engine, GeneratorSet J);

struct CharacterTerm {
  Word word;
  Weight weight;
  int length = 0;
  std::int64_t coeff = 0;
};

/// ch L(w.mu) as a finite combination of ch Delta(y.mu); zero terms omitted,
/// terms in (length, word) order.
struct CharacterVector {
  std::vector<CharacterTerm> terms;
  std::int64_t coeff_of(const Word& y) const;
};

CharacterVector irr_character(KLEngine& engine, const BlockData& block, const AffineElement& w, int truncation_bound);

/// entries[r][c] = [Delta(w_c.mu) : L(w_r.mu)] = P_{w_r, w_c}(1), indexed by legend.
struct DecompositionMatrix {
  std::vector<Word> legend;
  std::vector<Weight> weights;
  std::vector<std::vector<std::int64_t>> entries;
};

DecompositionMatrix decomp_matrix(KLEngine& engine, const BlockData& block, int length_bound,
                                  const ExtOptions& opts = {});

/// Checks that the character matrix and the decomposition matrix are mutually
/// inverse on the dominant representatives of length <= length_bound.
bool verify_inversion(KLEngine& engine, const BlockData& block, int length_bound);
/// Same check on an explicit index set (indices into block.dominant_reps).
/// Throws InputError when the set is not downward closed in the Bruhat order.
bool verify_inversion(KLEngine& engine, const BlockData& block, const std::vector<int>& index_set);

struct VanishingViolation {
  Word y;
  Word w;
  IntPoly sum;
};

struct VanishingReport {
  std::size_t checked = 0;
  std::vector<VanishingViolation> violations;
  bool passed() const { return violations.empty(); }
};

/// For dominant w outside W^J and y among the block's dominant representatives,
/// checks that sum_{x in W_J} (-1)^{l(x)} P_{yx,w} vanishes. Singular blocks only.
VanishingReport verify_vanishing(KLEngine& engine, const BlockData& block, int length_bound);

}  // namespace klext
