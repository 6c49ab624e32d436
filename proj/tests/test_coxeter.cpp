#include <doctest.h>

#include <algorithm>
#include <set>
#include <unordered_set>

#include "klext/coxeter.hpp"
#include "klext/error.hpp"

using namespace klext;

namespace {

CoxeterGroup a1() { return CoxeterGroup::affine(RootSystem::build('A', 1), 5); }
CoxeterGroup a2() { return CoxeterGroup::affine(RootSystem::build('A', 2), 5); }

AffineElement w_of(const CoxeterGroup& g, const char* word) { return g.from_word(parse_word(word)); }

// All subword products of one reduced word.
std::unordered_set<AffineElement, AffineElementHash> subword_products(const CoxeterGroup& g, const Word& w) {
  std::unordered_set<AffineElement, AffineElementHash> out;
  const std::size_t n = w.size();
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    AffineElement e = g.identity();
    for (std::size_t k = 0; k < n; ++k)
      if (mask >> k & 1u) e = g.multiply(e, g.generator(w.letters[k]));
    out.insert(e);
  }
  return out;
}

std::multiset<int> coxeter_entries(const CoxeterGroup& g) {
  std::multiset<int> m;
  const auto& gens = g.generators();
  for (std::size_t a = 0; a < gens.size(); ++a)
    for (std::size_t b = a + 1; b < gens.size(); ++b) m.insert(g.coxeter_matrix_entry(gens[a], gens[b]));
  return m;
}

}  // namespace

TEST_CASE("words and generator sets round-trip") {
  CHECK(format_word(parse_word("1,0,1")) == "1,0,1");
  CHECK(parse_word("").size() == 0);
  CHECK(parse_word("e").size() == 0);
  CHECK(format_generator_set(parse_generator_set("0,2")) == "{0,2}");
  CHECK(parse_generator_set("").empty());
  CHECK_THROWS_AS(parse_word("1,x"), InputError);
}

TEST_CASE("multiply, length and descents in A1, ell=5") {
  CoxeterGroup g = a1();
  AffineElement e = g.identity();
  CHECK(g.multiply(e, w_of(g, "1,0")) == w_of(g, "1,0"));
  for (int s : g.generators()) {
    CHECK(g.multiply(g.generator(s), g.generator(s)) == e);
    CHECK(g.length(g.generator(s)) == 1);
    CHECK(g.right_descents(g.generator(s)) == GeneratorSet::of({s}));
  }
  CHECK(g.length(e) == 0);
  CHECK(g.length(w_of(g, "1,0")) == 2);
  CHECK(g.length(w_of(g, "1,0,1")) == 3);
  CHECK(g.right_descents(e).empty());
  CHECK(g.right_descents(w_of(g, "1,0")) == GeneratorSet::of({0}));
  CHECK_THROWS_AS(g.generator(2), InputError);
  CHECK_THROWS_AS(CoxeterGroup::affine(RootSystem::build('A', 1), 0), InputError);
}

TEST_CASE("canonical words") {
  CoxeterGroup g = a1();
  CHECK(g.canonical_word(g.identity()).size() == 0);
  CHECK(format_word(g.canonical_word(w_of(g, "1,0"))) == "1,0");
  // Commuting pair: both orders reduced, the word starts with the smaller index.
  CoxeterGroup c2 = CoxeterGroup::affine(RootSystem::build('C', 2), 5);
  for (int s : c2.generators())
    for (int t : c2.generators())
      if (s < t && c2.coxeter_matrix_entry(s, t) == 2) {
        AffineElement st = c2.multiply(c2.generator(t), c2.generator(s));
        Word w = c2.canonical_word(st);
        REQUIRE(w.size() == 2);
        CHECK(w.letters[0] == s);
      }
}

TEST_CASE("coset decomposition examples") {
  CoxeterGroup g = a1();
  AffineElement w = w_of(g, "1,0,1");
  auto d0 = g.coset_decompose(w, GeneratorSet());
  CHECK(d0.minimal == w);
  CHECK(d0.parabolic == g.identity());
  auto ds = g.coset_decompose(g.generator(1), GeneratorSet::of({1}));
  CHECK(ds.minimal == g.identity());
  CHECK(ds.parabolic == g.generator(1));
  auto d = g.coset_decompose(w, GeneratorSet::of({1}));
  CHECK(d.minimal == w_of(g, "1,0"));
  CHECK(d.parabolic == g.generator(1));
  CHECK_THROWS_AS(g.coset_decompose(w, g.all_generators()), InputError);
}

TEST_CASE("ball enumeration counts") {
  CoxeterGroup g = a1();
  CHECK(g.enumerate_ball(0).size() == 1);
  auto ball = g.enumerate_ball(2);
  std::vector<std::string> words;
  for (const auto& e : ball) words.push_back(format_word(g.canonical_word(e)));
  CHECK(words == std::vector<std::string>{"", "0", "1", "0,1", "1,0"});
  CHECK(a2().enumerate_ball(2).size() == 10);
  CHECK(CoxeterGroup::finite(RootSystem::build('A', 3)).enumerate_ball(100).size() == 24);
  CHECK(CoxeterGroup::finite(RootSystem::build('B', 3)).enumerate_ball(100).size() == 48);
}

TEST_CASE("Coxeter matrices match the affine diagrams") {
  CHECK(coxeter_entries(a1()) == std::multiset<int>{0});
  CHECK(coxeter_entries(a2()) == std::multiset<int>{3, 3, 3});
  CHECK(coxeter_entries(CoxeterGroup::affine(RootSystem::build('C', 2), 5)) == std::multiset<int>{2, 4, 4});
  CHECK(coxeter_entries(CoxeterGroup::affine(RootSystem::build('G', 2), 7)) == std::multiset<int>{2, 3, 6});
  CHECK(coxeter_entries(CoxeterGroup::affine(RootSystem::build('A', 3), 5)) ==
        std::multiset<int>{2, 2, 3, 3, 3, 3});
}

TEST_CASE("exchange, word round trip and coset properties on radius-8 balls") {
  for (const CoxeterGroup& g : {a1(), a2(), CoxeterGroup::affine(RootSystem::build('C', 2), 5)}) {
    CAPTURE(g.describe());
    std::vector<GeneratorSet> finite_J;
    for (std::uint32_t bits = 0; bits < g.all_generators().bits(); ++bits)
      if (GeneratorSet(bits).is_subset_of(g.all_generators())) finite_J.push_back(GeneratorSet(bits));
    for (const auto& w : g.enumerate_ball(8)) {
      const int lw = g.length(w);
      Word word = g.canonical_word(w);
      CHECK(static_cast<int>(word.size()) == lw);
      CHECK(g.from_word(word) == w);
      for (int s : g.generators()) {
        const int ls = g.length(g.multiply(w, g.generator(s)));
        CHECK((ls == lw + 1 || ls == lw - 1));
        CHECK(g.right_descents(w).contains(s) == (ls == lw - 1));
      }
      for (GeneratorSet J : finite_J) {
        auto d = g.coset_decompose(w, J);
        CHECK(g.length(d.minimal) + g.length(d.parabolic) == lw);
        CHECK(g.right_descents(d.minimal).intersect(J).empty());
        CHECK(g.multiply(d.minimal, d.parabolic) == w);
      }
    }
  }
}

TEST_CASE("canonical words are lexicographically least reduced words") {
  CoxeterGroup g = a2();
  auto ball = g.enumerate_ball(5);
  // BFS over words in lex order: the first word reaching an element is its least reduced word.
  std::unordered_map<AffineElement, Word, AffineElementHash> least;
  std::vector<Word> layer{Word{}};
  least[g.identity()] = Word{};
  for (int len = 1; len <= 5; ++len) {
    std::vector<Word> next;
    for (const auto& w : layer)
      for (int s : g.generators()) {
        Word v = w;
        v.letters.push_back(static_cast<std::uint8_t>(s));
        AffineElement e = g.from_word(v);
        if (g.length(e) != len) continue;
        next.push_back(v);
      }
    std::sort(next.begin(), next.end());
    for (const auto& v : next) least.emplace(g.from_word(v), v);
    layer = next;
  }
  for (const auto& e : ball) CHECK(g.canonical_word(e) == least.at(e));
}

TEST_CASE("Bruhat order agrees with the subword oracle") {
  for (const CoxeterGroup& g : {a1(), a2()}) {
    CAPTURE(g.describe());
    auto ball = g.enumerate_ball(6);
    for (const auto& w : ball) {
      auto below = subword_products(g, g.canonical_word(w));
      CHECK(g.bruhat_leq(g.identity(), w));
      CHECK(g.bruhat_leq(w, w));
      for (const auto& u : ball) CHECK(g.bruhat_leq(u, w) == (below.count(u) == 1));
    }
  }
}

TEST_CASE("parabolic subgroups") {
  CoxeterGroup g = a2();
  CHECK(g.parabolic_subgroup(GeneratorSet::of({1, 2})).size() == 6);
  CHECK(g.parabolic_subgroup(GeneratorSet::of({0})).size() == 2);
  CHECK(g.is_finite_parabolic(GeneratorSet::of({0, 1})));
  CHECK_FALSE(g.is_finite_parabolic(g.all_generators()));
}
