#include <doctest.h>

#include "klext/error.hpp"
#include "klext/ext.hpp"
#include "klext/verify.hpp"

using namespace klext;

namespace {

CoxeterGroup a1() { return CoxeterGroup::affine(RootSystem::build('A', 1), 5); }
CoxeterGroup a2() { return CoxeterGroup::affine(RootSystem::build('A', 2), 5); }

AffineElement by_weight(const BlockData& b, std::int64_t coord) {
  int i = b.find(Weight{{coord}});
  REQUIRE(i >= 0);
  return b.dominant_reps[static_cast<std::size_t>(i)].w;
}

}  // namespace

TEST_CASE("ExtSeries rejects negative dimensions") {
  CHECK_THROWS_AS(ExtSeries::from_polynomial(IntPoly{1, -1}), InternalError);
  CHECK(ExtSeries::from_polynomial(IntPoly{0, 1}).to_string() == "t");
}

TEST_CASE("Delta versus L in A1") {
  CoxeterGroup g = a1();
  KLEngine e(g);
  BlockData reg = dominant_orbit(g, Weight{{-2}}, 8);
  AffineElement w0 = by_weight(reg, 0), w8 = by_weight(reg, 8);
  CHECK(ext_delta_irr(e, reg, w8, w8).to_string() == "1");
  CHECK(ext_delta_irr(e, reg, w0, w8).to_string() == "t");
  CHECK(ext_irr_nabla(e, reg, w8, w8).to_string() == "1");
  CHECK(ext_irr_nabla(e, reg, w8, w0).to_string() == "t");

  BlockData sing = dominant_orbit(g, Weight{{-1}}, 8);
  AffineElement s9 = by_weight(sing, 9), s19 = by_weight(sing, 19);
  CHECK(ext_delta_irr(e, sing, s9, s19).is_zero());
  CHECK(ext_irr_nabla(e, sing, s19, s9).is_zero());
  CHECK_THROWS_AS(ext_delta_irr(e, sing, w0, s19), InputError);
}

TEST_CASE("L versus L in A1") {
  CoxeterGroup g = a1();
  KLEngine e(g);
  BlockData reg = dominant_orbit(g, Weight{{-2}}, 8);
  AffineElement w0 = by_weight(reg, 0), w8 = by_weight(reg, 8);
  CHECK(ext_irr_irr(e, reg, w0, w0).to_string() == "1");
  CHECK(ext_irr_irr(e, reg, w8, w8).to_string() == "1 + t^2");
  CHECK(ext_irr_irr(e, reg, w0, w8).to_string() == "t");
}

TEST_CASE("U_i series in A1") {
  CoxeterGroup g = a1();
  KLEngine e(g);
  BlockData reg = dominant_orbit(g, Weight{{-2}}, 8);
  GeneratorSet J = GeneratorSet::of({1});
  AffineElement y = g.from_word(parse_word("1,0"));
  AffineElement w = g.from_word(parse_word("1,0,1,0"));
  CHECK(ext_ui(e, reg, J, y, w, 0).is_zero());
  CHECK(ext_ui(e, reg, J, y, w, 1).to_string() == "t");
  CHECK_THROWS_AS(ext_ui(e, reg, J, y, w, 2), InputError);
  CHECK_THROWS_AS(ext_ui(e, reg, J, g.from_word(parse_word("1,0,1")), w, 0), InputError);
  BlockData sing = dominant_orbit(g, Weight{{-1}}, 8);
  CHECK_THROWS_AS(ext_ui(e, sing, J, y, w, 0), InputError);
  // Top section with a single surviving term: y = w s1 gives "1" shifted to degree l(w)-l(y)-i = 0.
  AffineElement w5 = g.from_word(parse_word("1,0,1,0,1"));
  CHECK(ext_ui(e, reg, J, w, w5, 1).to_string() == "1");
}

TEST_CASE("characters in A1") {
  CoxeterGroup g = a1();
  KLEngine e(g);
  BlockData reg = dominant_orbit(g, Weight{{-2}}, 8);
  AffineElement w0 = by_weight(reg, 0), w8 = by_weight(reg, 8);
  CharacterVector bottom = irr_character(e, reg, w0, 8);
  REQUIRE(bottom.terms.size() == 1);
  CHECK(bottom.coeff_of(reg.dominant_reps[0].word) == 1);
  CharacterVector c8 = irr_character(e, reg, w8, 8);
  CHECK(c8.terms.size() == 2);
  CHECK(c8.coeff_of(e.word(w8)) == 1);
  CHECK(c8.coeff_of(e.word(w0)) == -1);
  CHECK_THROWS_AS(irr_character(e, reg, w8, 1), InputError);

  BlockData sing = dominant_orbit(g, Weight{{-1}}, 8);
  CharacterVector c19 = irr_character(e, sing, by_weight(sing, 19), 8);
  REQUIRE(c19.terms.size() == 1);
  CHECK(c19.terms[0].weight == Weight{{19}});
  CHECK(c19.terms[0].coeff == 1);
}

TEST_CASE("decomposition matrix") {
  CoxeterGroup g = a1();
  KLEngine e(g);
  BlockData reg = dominant_orbit(g, Weight{{-2}}, 8);
  DecompositionMatrix m = decomp_matrix(e, reg, 2);
  CHECK(m.entries == std::vector<std::vector<std::int64_t>>{{1, 1}, {0, 1}});
  DecompositionMatrix big = decomp_matrix(e, reg, 8);
  for (std::size_t r = 0; r < big.entries.size(); ++r) {
    CHECK(big.entries[r][r] == 1);
    for (std::size_t c = 0; c < r; ++c) CHECK(big.entries[r][c] == 0);
  }
  CHECK_THROWS_AS(decomp_matrix(e, reg, 9), InputError);
}

TEST_CASE("inversion examples") {
  CoxeterGroup g = a1();
  KLEngine e(g);
  BlockData reg = dominant_orbit(g, Weight{{-2}}, 8);
  CHECK(verify_inversion(e, reg, 1));
  CHECK_THROWS_AS(verify_inversion(e, reg, std::vector<int>{1}), InputError);
  CHECK(verify_inversion(e, reg, 4));
  CoxeterGroup g2 = a2();
  KLEngine e2(g2);
  BlockData reg2 = dominant_orbit(g2, Weight{{-2, -2}}, 6);
  CHECK(verify_inversion(e2, reg2, 6));
}

TEST_CASE("vanishing examples") {
  CoxeterGroup g = a1();
  KLEngine e(g);
  BlockData sing = dominant_orbit(g, Weight{{-1}}, 8);
  CHECK(alternating_kl_sum(e, sing.J, g.from_word(parse_word("1,0")), g.from_word(parse_word("1,0,1"))).is_zero());
  VanishingReport r = verify_vanishing(e, sing, 8);
  CHECK(r.passed());
  CHECK(r.checked > 0);
  CHECK(verify_vanishing(e, sing, 0).checked == 0);
  BlockData reg = dominant_orbit(g, Weight{{-2}}, 8);
  CHECK_THROWS_AS(verify_vanishing(e, reg, 8), InputError);
}

TEST_CASE("gating") {
  CoxeterGroup b2 = CoxeterGroup::affine(RootSystem::build('B', 2), 7);
  KLEngine e(b2);
  BlockData reg = dominant_orbit(b2, facet_weight(b2, GeneratorSet()), 4);
  REQUIRE(reg.dominant_reps.size() >= 1);
  const AffineElement& y = reg.dominant_reps[0].w;
  CHECK_THROWS_AS(ext_delta_irr(e, reg, y, y), GatingError);
  CHECK(ext_delta_irr(e, reg, y, y, ExtOptions{true}).to_string() == "1");
  try {
    ext_delta_irr(e, reg, y, y);
  } catch (const GatingError& err) {
    CHECK(std::string(err.what()).find("KL-good") != std::string::npos);
  }
}

TEST_CASE("irreducible Ext is symmetric in A2") {
  CoxeterGroup g = a2();
  KLEngine e(g);
  BlockData reg = dominant_orbit(g, Weight{{-2, -2}}, 6);
  for (const auto& w : reg.dominant_reps)
    for (const auto& z : reg.dominant_reps) CHECK(ext_irr_irr(e, reg, w.w, z.w) == ext_irr_irr(e, reg, z.w, w.w));
}

TEST_CASE("suites pass on small A2 ranges") {
  CoxeterGroup g = a2();
  KLEngine e(g);
  std::vector<Weight> singular;
  for (GeneratorSet J : singular_facets(g)) singular.push_back(facet_weight(g, J));
  CHECK(singular.size() == 6);
  CHECK(suite_vanishing(e, singular, 6).passed());
  CHECK(suite_parity(e, singular, 6).passed());
  CHECK(suite_nonneg(e, 6).passed());
  CHECK(suite_oracle(g, 5).passed());
}
