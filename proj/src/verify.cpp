#include "klext/verify.hpp"

#include "klext/error.hpp"

namespace klext {

namespace {

std::string pair_label(const Word& y, const Word& w) {
  return "y=" + format_word(y) + " w=" + format_word(w);
}

std::string block_label(const BlockData& b) {
  return "block " + format_weight(b.lambda) + " J=" + format_generator_set(b.J);
}

}  // namespace

std::vector<GeneratorSet> singular_facets(const CoxeterGroup& g) {
  std::vector<GeneratorSet> out;
  const std::uint32_t all = g.all_generators().bits();
  for (std::uint32_t bits = 1; bits < all; ++bits) {
    GeneratorSet J(bits);
    if (!J.is_subset_of(g.all_generators())) continue;
    try {
      facet_weight(g, J);
    } catch (const InputError&) {
      continue;
    }
    out.push_back(J);
  }
  return out;
}

SuiteReport suite_oracle(const CoxeterGroup& g, int length_bound, int threads) {
  SuiteReport r{"oracle", 0, {}};
  KLEngine engine(g);
  engine.prime(length_bound, threads);
  KLOracle oracle(g);
  std::vector<AffineElement> ball = g.enumerate_ball(length_bound);
  for (const auto& w : ball)
    for (const auto& x : ball) {
      if (!g.bruhat_leq(x, w)) continue;
      ++r.checked;
      IntPoly a = engine.kl(x, w);
      IntPoly b = oracle.kl_via_r(x, w);
      if (!(a == b))
        r.failures.push_back("x=" + format_word(g.canonical_word(x)) + " w=" + format_word(g.canonical_word(w)) +
                             ": kl=" + a.to_string("q") + " oracle=" + b.to_string("q"));
    }
  return r;
}

SuiteReport suite_vanishing(KLEngine& engine, const std::vector<Weight>& blocks, int length_bound) {
  SuiteReport r{"vanishing", 0, {}};
  for (const auto& lambda : blocks) {
    BlockData b = dominant_orbit(engine.group(), lambda, length_bound);
    VanishingReport v = verify_vanishing(engine, b, length_bound);
    r.checked += v.checked;
    for (const auto& bad : v.violations)
      r.failures.push_back(block_label(b) + " " + pair_label(bad.y, bad.w) + ": sum=" + bad.sum.to_string("q"));
  }
  return r;
}

SuiteReport suite_inversion(KLEngine& engine, const std::vector<Weight>& blocks, int length_bound,
                            const ExtOptions& opts) {
  SuiteReport r{"inversion", 0, {}};
  for (const auto& lambda : blocks) {
    BlockData b = dominant_orbit(engine.group(), lambda, length_bound);
    require_kl_good(b.group, opts);
    // Every length truncation is downward closed.
    for (int n = 0; n <= length_bound; ++n) {
      ++r.checked;
      if (!verify_inversion(engine, b, n))
        r.failures.push_back(block_label(b) + " truncation length<=" + std::to_string(n));
    }
  }
  return r;
}

SuiteReport suite_parity(KLEngine& engine, const std::vector<Weight>& blocks, int length_bound,
                         const ExtOptions& opts) {
  SuiteReport r{"parity", 0, {}};
  for (const auto& lambda : blocks) {
    BlockData b = dominant_orbit(engine.group(), lambda, length_bound);
    for (const auto& y : b.dominant_reps)
      for (const auto& w : b.dominant_reps) {
        ++r.checked;
        const std::string where = block_label(b) + " " + pair_label(y.word, w.word);
        ExtSeries s = ext_delta_irr(engine, b, y.w, w.w, opts);
        const int d = w.length - y.length;
        for (std::size_t n = 0; n < s.coeffs().size(); ++n)
          if (s.coeffs()[n] != 0 && (static_cast<int>(n) - d) % 2 != 0)
            r.failures.push_back(where + ": degree " + std::to_string(n) + " has the wrong parity");
        if (s.degree_coeff(0) != (y.w == w.w ? 1 : 0))
          r.failures.push_back(where + ": degree-0 coefficient " + std::to_string(s.degree_coeff(0)));
        std::int64_t euler = alternating_kl_sum(engine, b.J, y.w, w.w).eval(1);
        if (d % 2 != 0) euler = -euler;
        if (s.eval(-1) != euler)
          r.failures.push_back(where + ": series at t=-1 is " + std::to_string(s.eval(-1)) + ", expected " +
                               std::to_string(euler));
      }
  }
  return r;
}

SuiteReport suite_nonneg(KLEngine& engine, int length_bound, const ExtOptions& opts) {
  SuiteReport r{"nonneg", 0, {}};
  const CoxeterGroup& g = engine.group();
  BlockData reg = dominant_orbit(g, facet_weight(g, GeneratorSet()), length_bound);
  for (GeneratorSet J : singular_facets(g)) {
    BlockData sing = dominant_orbit(g, facet_weight(g, J), length_bound);
    const int top = longest_parabolic_length(engine, J);
    for (const auto& y : reg.dominant_reps) {
      if (!g.is_minimal_in_coset(y.w, J)) continue;
      for (const auto& w : reg.dominant_reps)
        for (int i = 0; i <= top; ++i) {
          ++r.checked;
          const std::string where = "J=" + format_generator_set(J) + " " + pair_label(y.word, w.word) +
                                    " i=" + std::to_string(i);
          IntPoly p = ui_polynomial(engine, J, y.w, w.w, i);
          ExtSeries s;
          try {
            s = ext_ui(engine, reg, J, y.w, w.w, i, opts);
          } catch (const InternalError&) {
            r.failures.push_back(where + ": negative coefficient in " + p.to_string("t"));
            continue;
          }
          if (i != 0 || !g.is_minimal_in_coset(w.w, J)) continue;
          const int yi = sing.find(y.w), wi = sing.find(w.w);
          if (yi < 0 || wi < 0) {
            r.failures.push_back(where + ": representative missing from the singular block");
            continue;
          }
          ExtSeries d = ext_delta_irr(engine, sing, y.w, w.w, opts);
          if (!(d == s))
            r.failures.push_back(where + ": U_0 series " + s.to_string() + " differs from " + d.to_string());
        }
    }
  }
  return r;
}

}  // namespace klext
