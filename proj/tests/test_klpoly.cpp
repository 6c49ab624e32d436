#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "klext/error.hpp"
#include "klext/kl_kernel.hpp"
#include "klext/klpoly.hpp"

using namespace klext;

namespace {

CoxeterGroup a1() { return CoxeterGroup::affine(RootSystem::build('A', 1), 5); }
CoxeterGroup a2() { return CoxeterGroup::affine(RootSystem::build('A', 2), 5); }
CoxeterGroup a3f() { return CoxeterGroup::finite(RootSystem::build('A', 3)); }

AffineElement w_of(const CoxeterGroup& g, const char* word) { return g.from_word(parse_word(word)); }

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string temp_path(const char* name) {
  return (std::filesystem::temp_directory_path() / (std::string("klext_test_") + name)).string();
}

}  // namespace

TEST_CASE("kl examples") {
  CoxeterGroup g = a3f();
  KLEngine e(g);
  AffineElement w = w_of(g, "2,1,3,2");
  CHECK(e.kl(w, w) == IntPoly{1});
  CHECK(e.kl(g.identity(), w) == IntPoly{1, 1});
  CHECK(e.kl(w, g.identity()).is_zero());
  CHECK(e.mu(g.identity(), w) == 0);
  CHECK(e.mu(w, w) == 0);
  AffineElement ws = g.multiply(w, g.generator(1));
  REQUIRE(g.length(ws) == 5);
  CHECK(e.mu(w, ws) == 1);
}

TEST_CASE("affine A1 has trivial KL polynomials") {
  CoxeterGroup g = a1();
  KLEngine e(g);
  auto ball = g.enumerate_ball(8);
  for (const auto& w : ball)
    for (const auto& x : ball)
      if (g.bruhat_leq(x, w)) CHECK(e.kl(x, w) == IntPoly{1});
}

TEST_CASE("R-polynomials and the oracle") {
  CoxeterGroup g = a1();
  KLOracle o(g);
  AffineElement w = w_of(g, "0,1");
  CHECK(o.r_poly(w, w) == IntPoly{1});
  CHECK(o.r_poly(g.generator(0), w) == IntPoly{-1, 1});
  CHECK(o.r_poly(g.identity(), w) == IntPoly{1, -2, 1});
  CHECK(o.kl_via_r(w, w) == IntPoly{1});
  CHECK(o.kl_via_r(g.identity(), w_of(g, "1,0,1")) == IntPoly{1});
  CoxeterGroup f = a3f();
  KLOracle of(f);
  CHECK(of.kl_via_r(f.identity(), w_of(f, "2,1,3,2")) == IntPoly{1, 1});
}

TEST_CASE("engine equals oracle with degree bound and unit constant term") {
  for (const CoxeterGroup& g : {a2(), a3f(), CoxeterGroup::affine(RootSystem::build('C', 2), 5)}) {
    CAPTURE(g.describe());
    KLEngine e(g);
    KLOracle o(g);
    auto ball = g.enumerate_ball(5);
    for (const auto& w : ball)
      for (const auto& x : ball) {
        if (!g.bruhat_leq(x, w)) continue;
        IntPoly p = e.kl(x, w);
        CHECK(p == o.kl_via_r(x, w));
        CHECK(p.coeff(0) == 1);
        const int d = g.length(w) - g.length(x);
        if (d > 0) CHECK(2 * p.degree() <= d - 1);
      }
  }
}

TEST_CASE("ball kernel is thread-count independent and matches the serial engine") {
  CoxeterGroup g = CoxeterGroup::affine(RootSystem::build('G', 2), 7);
  BallKL one(g, 7, 1);
  BallKL four(g, 7, 4);
  KLEngine serial(g);
  REQUIRE(one.size() == four.size());
  for (std::size_t w = 0; w < one.size(); ++w) {
    CHECK(one.lower(w) == four.lower(w));
    for (std::size_t x = 0; x < one.size(); ++x) {
      CHECK(one.leq(x, w) == four.leq(x, w));
      CHECK(one.poly(x, w) == four.poly(x, w));
      CHECK(one.poly(x, w) == serial.kl(one.element(x), one.element(w)));
    }
  }
}

TEST_CASE("parabolic KL") {
  CoxeterGroup g = a1();
  KLEngine e(g);
  AffineElement y = w_of(g, "1,0");
  AffineElement w = w_of(g, "1,0,1,0");
  CHECK(parabolic_kl(e, GeneratorSet(), y, w) == e.kl(y, w));
  CHECK(parabolic_kl(e, GeneratorSet::of({1}), y, y) == IntPoly{1});
  CHECK(parabolic_kl(e, GeneratorSet::of({1}), y, w).is_zero());
  CHECK_THROWS_AS(parabolic_kl(e, GeneratorSet::of({1}), w_of(g, "1,0,1"), w), InputError);
  CHECK_THROWS_AS(parabolic_kl(e, g.all_generators(), g.identity(), w), InputError);

  CoxeterGroup g2 = a2();
  KLEngine e2(g2);
  GeneratorSet J = GeneratorSet::of({1});
  for (const auto& w2 : g2.enumerate_ball(6)) {
    if (!g2.is_minimal_in_coset(w2, J)) continue;
    for (const auto& y2 : g2.enumerate_ball(6)) {
      if (!g2.is_minimal_in_coset(y2, J)) continue;
      std::int64_t term_by_term = 0;
      for (const auto& x : g2.parabolic_subgroup(J)) {
        std::int64_t v = e2.kl(g2.multiply(y2, x), w2).eval(1);
        term_by_term += g2.length(x) % 2 == 0 ? v : -v;
      }
      CHECK(parabolic_kl(e2, J, y2, w2).eval(1) == term_by_term);
    }
  }
}

TEST_CASE("cache round trip is byte-stable and validated") {
  CoxeterGroup g = a2();
  const std::string path = temp_path("cache.jsonl");
  const std::string path2 = temp_path("cache2.jsonl");
  KLEngine e(g);
  e.prime(5);
  const std::size_t n = e.table().size();
  REQUIRE(n > 0);
  e.table().save(path);

  KLTable loaded(TableHeader::for_group(g));
  loaded.load(path);
  CHECK(loaded.size() == n);
  CHECK(loaded.max_length() == e.table().max_length());
  loaded.save(path2);
  CHECK(slurp(path) == slurp(path2));

  // A warm engine answers from the table and agrees with a cold one.
  auto table = std::make_shared<KLTable>(TableHeader::for_group(g));
  table->load(path);
  KLEngine warm(g, table);
  KLEngine cold(g);
  for (const auto& w : g.enumerate_ball(5))
    for (const auto& x : g.enumerate_ball(5)) CHECK(warm.kl(x, w) == cold.kl(x, w));

  KLTable wrong(TableHeader::for_group(CoxeterGroup::affine(RootSystem::build('A', 2), 7)));
  CHECK_THROWS_AS(wrong.load(path), InputError);
  CHECK(wrong.size() == 0);
  CHECK(KLTable::read_header(path) == TableHeader::for_group(g));

  // A corrupt record rejects the whole file.
  {
    std::ofstream out(path2, std::ios::app);
    out << "{\"x\":\"1\"}\n";
  }
  KLTable partial(TableHeader::for_group(g));
  CHECK_THROWS_AS(partial.load(path2), InputError);
  CHECK(partial.size() == 0);
  std::filesystem::remove(path);
  std::filesystem::remove(path2);
}

TEST_CASE("table contents do not depend on insertion order") {
  CoxeterGroup g = a2();
  const std::string p1 = temp_path("order1.jsonl"), p2 = temp_path("order2.jsonl");
  KLEngine forward(g);
  KLEngine backward(g);
  auto ball = g.enumerate_ball(4);
  for (const auto& w : ball)
    for (const auto& x : ball)
      if (g.bruhat_leq(x, w)) forward.kl(x, w);
  for (auto w = ball.rbegin(); w != ball.rend(); ++w)
    for (auto x = ball.rbegin(); x != ball.rend(); ++x)
      if (g.bruhat_leq(*x, *w)) backward.kl(*x, *w);
  forward.table().save(p1);
  backward.table().save(p2);
  CHECK(slurp(p1) == slurp(p2));
  std::filesystem::remove(p1);
  std::filesystem::remove(p2);
}
