#include "klext/ext.hpp"

#include <algorithm>

#include "klext/error.hpp"

namespace klext {

ExtSeries ExtSeries::from_polynomial(const IntPoly& p) {
  for (std::size_t n = 0; n < p.coeffs().size(); ++n)
    if (p.coeffs()[n] < 0)
      throw InternalError("Ext series has a negative dimension in degree " + std::to_string(n) + ": " +
                          p.to_string("t"));
  ExtSeries s;
  s.poly_ = p;
  return s;
}

void require_kl_good(const CoxeterGroup& g, const ExtOptions& opts) {
  const RootSystem& rs = g.root_system();
  if (!g.is_affine()) throw InputError("Ext formulas need the affine Weyl group");
  if (kl_good(rs.type_label(), rs.rank(), g.ell()) == KLGood::yes || opts.assume_kl_good) return;
  throw GatingError("ell=" + std::to_string(g.ell()) + " is not known to be KL-good for type " + rs.name() +
                    ": the Kazhdan-Lusztig functor is known to be an equivalence only for type A (any ell), "
                    "D_n (ell >= 3), E6 (ell >= 14), E7 (ell >= 20) and E8 (ell >= 32); the KL-good bounds "
                    "for non-simply-laced types are not known. Rerun with --assume-kl-good to override.");
}

namespace {

void require_same_group(KLEngine& engine, const BlockData& block) {
  if (!(TableHeader::for_group(engine.group()) == TableHeader::for_group(block.group)))
    throw InputError("KL engine for " + engine.group().describe() + " used with a block of " + block.group.describe());
}

int require_member(const BlockData& block, const AffineElement& e, const char* role) {
  int idx = block.find(e);
  if (idx < 0)
    throw InputError(std::string(role) + " = " + format_word(block.group.canonical_word(e)) +
                     " is not a dominant representative of the block of " + format_weight(block.lambda) +
                     " (length <= " + std::to_string(block.length_bound) + ")");
  return idx;
}

// Adds sign * t^base * bar(p) (q = t^2) into out.
void add_barred(IntPoly& out, const IntPoly& p, int base, std::int64_t sign) {
  for (int k = 0; k <= p.degree(); ++k) {
    std::int64_t c = p.coeff(k);
    if (c == 0) continue;
    const int n = base - 2 * k;
    if (n < 0) throw InternalError("Ext series would need a negative degree (KL degree bound violated)");
    out += IntPoly::monomial(sign * c, n);
  }
}

}  // namespace

IntPoly delta_irr_polynomial(KLEngine& engine, GeneratorSet J, const AffineElement& y, const AffineElement& w) {
  const int d = engine.length(w) - engine.length(y);
  IntPoly pj = alternating_kl_sum(engine, J, y, w);
  IntPoly out;
  if (pj.is_zero()) return out;
  add_barred(out, pj, d, 1);
  return out;
}

IntPoly ui_polynomial(KLEngine& engine, GeneratorSet J, const AffineElement& y, const AffineElement& w, int i) {
  const int base = engine.length(w) - engine.length(y) - i;
  IntPoly out;
  for (const auto& x : engine.parabolic(J)) {
    const int lx = engine.length(x);
    if (lx < i) continue;
    IntPoly p = engine.kl(engine.group().multiply(y, x), w);
    if (p.is_zero()) continue;
    add_barred(out, p, base, (lx - i) % 2 == 0 ? 1 : -1);
  }
  return out;
}

ExtSeries ext_delta_irr(KLEngine& engine, const BlockData& block, const AffineElement& y, const AffineElement& w,
                        const ExtOptions& opts) {
  require_same_group(engine, block);
  require_kl_good(block.group, opts);
  require_member(block, y, "y");
  require_member(block, w, "w");
  return ExtSeries::from_polynomial(delta_irr_polynomial(engine, block.J, y, w));
}

ExtSeries ext_irr_nabla(KLEngine& engine, const BlockData& block, const AffineElement& w, const AffineElement& y,
                        const ExtOptions& opts) {
  return ext_delta_irr(engine, block, y, w, opts);
}

ExtSeries ext_irr_irr(KLEngine& engine, const BlockData& block, const AffineElement& w, const AffineElement& z,
                      const ExtOptions& opts) {
  require_same_group(engine, block);
  require_kl_good(block.group, opts);
  const int iw = require_member(block, w, "w");
  const int iz = require_member(block, z, "z");
  const int top = std::min(block.dominant_reps[static_cast<std::size_t>(iw)].length,
                           block.dominant_reps[static_cast<std::size_t>(iz)].length);
  IntPoly total;
  for (const auto& rep : block.dominant_reps) {
    if (rep.length > top) break;
    if (!engine.leq(rep.w, w) || !engine.leq(rep.w, z)) continue;
    IntPoly a = delta_irr_polynomial(engine, block.J, rep.w, w);
    if (a.is_zero()) continue;
    total += a * delta_irr_polynomial(engine, block.J, rep.w, z);
  }
  return ExtSeries::from_polynomial(total);
}

int longest_parabolic_length(KLEngine& engine, GeneratorSet J) {
  int m = 0;
  for (const auto& x : engine.parabolic(J)) m = std::max(m, engine.length(x));
  return m;
}

ExtSeries ext_ui(KLEngine& engine, const BlockData& regular_block, GeneratorSet J, const AffineElement& y,
                 const AffineElement& w, int i, const ExtOptions& opts) {
  require_same_group(engine, regular_block);
  if (!regular_block.regular())
    throw InputError("U_i series are defined over a regular block; block of " + format_weight(regular_block.lambda) +
                     " is singular");
  require_kl_good(regular_block.group, opts);
  if (!regular_block.group.is_finite_parabolic(J))
    throw InputError("generator set " + format_generator_set(J) + " does not generate a finite parabolic subgroup");
  require_member(regular_block, y, "y");
  require_member(regular_block, w, "w");
  if (!engine.right_descents(y).intersect(J).empty())
    throw InputError("y = " + format_word(engine.word(y)) + " is not a minimal coset representative for " +
                     format_generator_set(J));
  const int top = longest_parabolic_length(engine, J);
  if (i < 0 || i > top)
    throw InputError("i = " + std::to_string(i) + " out of range [0, " + std::to_string(top) + "]");
  return ExtSeries::from_polynomial(ui_polynomial(engine, J, y, w, i));
}

std::int64_t CharacterVector::coeff_of(const Word& y) const {
  for (const auto& t : terms)
    if (t.word == y) return t.coeff;
  return 0;
}

CharacterVector irr_character(KLEngine& engine, const BlockData& block, const AffineElement& w, int truncation_bound) {
  require_same_group(engine, block);
  const int iw = require_member(block, w, "w");
  const int lw = block.dominant_reps[static_cast<std::size_t>(iw)].length;
  if (truncation_bound < lw)
    throw InputError("truncation bound " + std::to_string(truncation_bound) + " is below l(w) = " + std::to_string(lw));
  CharacterVector out;
  for (const auto& rep : block.dominant_reps) {
    if (rep.length > lw) break;
    if (!engine.leq(rep.w, w)) continue;
    std::int64_t v = alternating_kl_sum(engine, block.J, rep.w, w).eval(1);
    if ((lw - rep.length) % 2 == 1) v = -v;
    if (v != 0) out.terms.push_back({rep.word, rep.weight, rep.length, v});
  }
  return out;
}

namespace {

std::vector<int> indices_up_to(const BlockData& block, int length_bound) {
  if (length_bound > block.length_bound)
    throw InputError("length bound " + std::to_string(length_bound) + " exceeds the block's enumeration bound " +
                     std::to_string(block.length_bound));
  std::vector<int> idx;
  for (std::size_t i = 0; i < block.dominant_reps.size(); ++i)
    if (block.dominant_reps[i].length <= length_bound) idx.push_back(static_cast<int>(i));
  return idx;
}

}  // namespace

DecompositionMatrix decomp_matrix(KLEngine& engine, const BlockData& block, int length_bound, const ExtOptions& opts) {
  require_same_group(engine, block);
  require_kl_good(block.group, opts);
  std::vector<int> idx = indices_up_to(block, length_bound);
  DecompositionMatrix m;
  for (int i : idx) {
    m.legend.push_back(block.dominant_reps[static_cast<std::size_t>(i)].word);
    m.weights.push_back(block.dominant_reps[static_cast<std::size_t>(i)].weight);
  }
  m.entries.assign(idx.size(), std::vector<std::int64_t>(idx.size(), 0));
  for (std::size_t r = 0; r < idx.size(); ++r)
    for (std::size_t c = 0; c < idx.size(); ++c)
      m.entries[r][c] = engine.kl(block.dominant_reps[static_cast<std::size_t>(idx[r])].w,
                                  block.dominant_reps[static_cast<std::size_t>(idx[c])].w)
                            .eval(1);
  return m;
}

bool verify_inversion(KLEngine& engine, const BlockData& block, const std::vector<int>& index_set) {
  require_same_group(engine, block);
  const auto& reps = block.dominant_reps;
  std::vector<int> idx = index_set;
  std::sort(idx.begin(), idx.end());
  idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
  for (int i : idx)
    if (i < 0 || static_cast<std::size_t>(i) >= reps.size()) throw InputError("index out of range in inversion set");
  for (int i : idx)
    for (std::size_t j = 0; j < reps.size(); ++j)
      if (!std::binary_search(idx.begin(), idx.end(), static_cast<int>(j)) &&
          engine.leq(reps[j].w, reps[static_cast<std::size_t>(i)].w))
        throw InputError("index set is not downward closed: " + format_word(reps[j].word) + " <= " +
                         format_word(reps[static_cast<std::size_t>(i)].word) + " is missing");

  const std::size_t n = idx.size();
  // chr[a][b]: coefficient of ch Delta(b) in ch L(a); dec[a][b] = [Delta(b) : L(a)].
  std::vector<std::vector<std::int64_t>> chr(n, std::vector<std::int64_t>(n, 0));
  std::vector<std::vector<std::int64_t>> dec(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t a = 0; a < n; ++a) {
    const auto& ra = reps[static_cast<std::size_t>(idx[a])];
    for (std::size_t b = 0; b < n; ++b) {
      const auto& rb = reps[static_cast<std::size_t>(idx[b])];
      dec[a][b] = engine.kl(ra.w, rb.w).eval(1);
      if (!engine.leq(rb.w, ra.w)) continue;
      std::int64_t v = alternating_kl_sum(engine, block.J, rb.w, ra.w).eval(1);
      chr[a][b] = (ra.length - rb.length) % 2 == 0 ? v : -v;
    }
  }
  // ch L(a) = sum_b chr[a][b] sum_c dec[c][b] ch L(c)
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t c = 0; c < n; ++c) {
      std::int64_t s = 0;
      for (std::size_t b = 0; b < n; ++b) s += chr[a][b] * dec[c][b];
      if (s != (a == c ? 1 : 0)) return false;
    }
  return true;
}

bool verify_inversion(KLEngine& engine, const BlockData& block, int length_bound) {
  return verify_inversion(engine, block, indices_up_to(block, length_bound));
}

VanishingReport verify_vanishing(KLEngine& engine, const BlockData& block, int length_bound) {
  require_same_group(engine, block);
  if (block.regular())
    throw InputError("the vanishing check needs a singular block; " + format_weight(block.lambda) + " is regular");
  std::vector<int> ys = indices_up_to(block, length_bound);
  VanishingReport report;
  for (const auto& wrep : regular_dominant_elements(block.group, length_bound)) {
    if (block.group.is_minimal_in_coset(wrep.w, block.J)) continue;
    for (int yi : ys) {
      const auto& y = block.dominant_reps[static_cast<std::size_t>(yi)];
      IntPoly sum = alternating_kl_sum(engine, block.J, y.w, wrep.w);
      ++report.checked;
      if (!sum.is_zero()) report.violations.push_back({y.word, wrep.word, sum});
    }
  }
  return report;
}

}  // namespace klext
