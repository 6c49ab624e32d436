#include <doctest.h>

#include "klext/error.hpp"
#include "klext/intpoly.hpp"
#include "klext/rootsys.hpp"

using namespace klext;

TEST_CASE("IntPoly arithmetic and formatting") {
  IntPoly a = IntPoly::monomial(1, 0) + IntPoly::monomial(2, 3);
  CHECK(a.to_string("q") == "1 + 2q^3");
  CHECK(a.degree() == 3);
  CHECK(IntPoly().to_string("q") == "0");
  CHECK(IntPoly().degree() == -1);
  IntPoly b = a - a;
  CHECK(b.is_zero());
  CHECK(b.coeffs().empty());
  IntPoly qm1 = IntPoly::monomial(1, 1) - IntPoly::constant(1);
  CHECK((qm1 * qm1).coeffs() == std::vector<std::int64_t>{1, -2, 1});
  CHECK(a.eval(1) == 3);
  CHECK(a.shifted(2).coeff(5) == 2);
}

TEST_CASE("checked arithmetic throws on overflow") {
  CHECK_THROWS_AS(checked::mul(INT64_MAX, 2), InternalError);
  CHECK(checked::add(2, 3) == 5);
}

TEST_CASE("rank-one and classical constants") {
  RootSystem a1 = RootSystem::build('A', 1);
  CHECK(a1.coxeter_number() == 2);
  CHECK(a1.dual_coxeter_number() == 2);
  CHECK(a1.lacing() == 1);
  CHECK(a1.positive_roots().size() == 1);
  CHECK(RootSystem::build('G', 2).coxeter_number() == 6);
  CHECK(RootSystem::build('E', 8).coxeter_number() == 30);
  CHECK(RootSystem::build('B', 3).lacing() == 2);
  CHECK(RootSystem::build('G', 2).lacing() == 3);
}

TEST_CASE("root counts, Coxeter numbers and rho pairings match the tables") {
  struct Row {
    char t;
    int n;
    std::size_t roots;
    int h;
    int g;
    int lacing;
  };
  const Row rows[] = {{'A', 3, 6, 4, 4, 1},   {'B', 3, 9, 6, 5, 2},    {'C', 3, 9, 6, 4, 2},
                      {'D', 4, 12, 6, 6, 1},  {'E', 6, 36, 12, 12, 1}, {'E', 7, 63, 18, 18, 1},
                      {'E', 8, 120, 30, 30, 1}, {'F', 4, 24, 12, 9, 2},  {'G', 2, 6, 6, 4, 3}};
  for (const auto& r : rows) {
    CAPTURE(r.t);
    CAPTURE(r.n);
    RootSystem rs = RootSystem::build(r.t, r.n);
    CHECK(rs.positive_roots().size() == r.roots);
    CHECK(rs.coxeter_number() == r.h);
    CHECK(rs.dual_coxeter_number() == r.g);
    CHECK(rs.lacing() == r.lacing);
    for (int i = 0; i < r.n; ++i) CHECK(rs.pair(rs.rho(), rs.simple_root_index(i)) == 1);
    for (int i = 0; i < r.n; ++i)
      for (int j = 0; j < r.n; ++j) {
        const auto a = rs.cartan()[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        if (i == j)
          CHECK(a == 2);
        else
          CHECK(a <= 0);
      }
  }
}

TEST_CASE("pairings") {
  RootSystem a1 = RootSystem::build('A', 1);
  CHECK(a1.pair(a1.rho(), 0) == 1);
  RootSystem a2 = RootSystem::build('A', 2);
  CHECK(a2.pair(a2.rho(), a2.highest_short_root()) == 2);
  CHECK_THROWS_AS(a2.pair(a2.rho(), 99), InputError);
}

TEST_CASE("dominance and weight parsing") {
  RootSystem a1 = RootSystem::build('A', 1);
  CHECK(is_dominant(a1.rho()));
  CHECK(is_dominant(Weight{{0}}));
  CHECK_FALSE(is_dominant(Weight{{-1}}));
  CHECK(parse_weight("[ -2, 3 ]") == Weight{{-2, 3}});
  CHECK(format_weight(Weight{{-2, 3}}) == "[-2,3]");
  CHECK_THROWS_AS(parse_weight("[x]"), InputError);
  CHECK_THROWS_AS(parse_weight("8"), InputError);
}

TEST_CASE("invalid types are rejected") {
  CHECK_THROWS_AS(RootSystem::build('B', 1), InputError);
  CHECK_THROWS_AS(RootSystem::build('D', 2), InputError);
  CHECK_THROWS_AS(RootSystem::build('E', 5), InputError);
  CHECK_THROWS_AS(RootSystem::build('H', 3), InputError);
  CHECK_THROWS_AS(RootSystem::build('A', 0), InputError);
}
