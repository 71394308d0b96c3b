#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>

#include "doctest.h"
#include "testutil.hpp"
#include "versor/errors.hpp"
#include "versor/induction.hpp"
#include "versor/rootsystem.hpp"

using namespace versor;

TEST_CASE("diagram parsing: named families") {
  for (Family f :
       {Family::A1x3, Family::A3, Family::B3, Family::H3, Family::E8}) {
    CHECK(family_by_name(family_name(f)) == f);
    CHECK(parse_diagram(family_name(f)) == family_diagram(f));
    CHECK(match_family(family_diagram(f)) == f);
  }
  CHECK(family_name(Family::A1x3) == "A1^3");
}

TEST_CASE("diagram parsing: explicit edge lists") {
  CoxeterDiagram d = parse_diagram("rank=3; edges: 1-2:3, 2-3:5");
  CHECK(d.rank == 3);
  CHECK(d.label(0, 1) == 3);
  CHECK(d.label(1, 2) == 5);
  CHECK(d.label(0, 2) == 2);
  CHECK(match_family(d) == Family::H3);
  // relabeled nodes still match up to permutation
  CHECK(match_family(parse_diagram("rank=3; edges: 1-3:5, 1-2:3")) ==
        Family::H3);
  CHECK(match_family(parse_diagram("rank=3;edges:2-3:3,1-3:3")) ==
        Family::A3);
  // no stored family for these
  CHECK(!match_family(parse_diagram("rank=3; edges: 1-2:4, 2-3:4")));
  CHECK(!match_family(parse_diagram("rank=2; edges: 1-2:3")));
}

TEST_CASE("diagram parsing: rejections carry a position") {
  CHECK_THROWS_AS(parse_diagram("Z9"), ParseError);
  CHECK_THROWS_AS(parse_diagram(""), ParseError);
  CHECK_THROWS_AS(parse_diagram("rank=0; edges:"), ParseError);
  CHECK_THROWS_AS(parse_diagram("rank=9; edges:"), ParseError);
  CHECK_THROWS_AS(parse_diagram("rank=3; edges: 1-1:3"), ParseError);
  CHECK_THROWS_AS(parse_diagram("rank=3; edges: 1-4:3"), ParseError);
  CHECK_THROWS_AS(parse_diagram("rank=3; edges: 1-2:3, 1-2:5"), ParseError);
  try {
    parse_diagram("Z9");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("unknown diagram") != std::string::npos);
  }
}

TEST_CASE("cartan matrices") {
  FMatrix a3 = cartan_matrix(simple_roots(Family::A3));
  const long expect_a3[3][3] = {{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      CHECK(a3.at(i, j) == FieldScalar(expect_a3[i][j]));

  // B3's short root makes the matrix asymmetric
  FMatrix b3 = cartan_matrix(simple_roots(Family::B3));
  CHECK(b3.at(1, 2) == FieldScalar(-2));
  CHECK(b3.at(2, 1) == FieldScalar(-1));

  // H3 needs τ
  FMatrix h3 = cartan_matrix(simple_roots(Family::H3));
  CHECK(h3.at(0, 1) == FieldScalar(-1));
  CHECK(h3.at(1, 2) == -FieldScalar::tau());
  CHECK(h3.at(2, 1) == -FieldScalar::tau());
  for (int i = 0; i < 3; ++i) CHECK(h3.at(i, i) == FieldScalar(2));

  std::vector<Vec> dependent = simple_roots(Family::A3);
  dependent.push_back(dependent[0]);
  CHECK_THROWS_AS(cartan_matrix(dependent), DomainError);
}

TEST_CASE("orbit closure produces the classical root counts") {
  CHECK(generate(simple_roots(Family::A1x3)).roots().size() == 6);
  CHECK(generate(simple_roots(Family::A3)).roots().size() == 12);
  CHECK(generate(simple_roots(Family::B3)).roots().size() == 18);
  CHECK(generate(simple_roots(Family::H3)).roots().size() == 30);
  CHECK(generate(simple_roots(Family::E8)).roots().size() == 240);
  CHECK_THROWS_AS(generate(simple_roots(Family::H3), 10), DomainError);
}

TEST_CASE("root-system verification on all families") {
  for (Family f :
       {Family::A1x3, Family::A3, Family::B3, Family::H3, Family::E8}) {
    RootSystem rs = generate(simple_roots(f), 100000, family_name(f));
    VerifyReport rep = verify(rs);
    CHECK(rep.ok());
    CHECK(rep.violations.empty());
    for (const Vec& r : rs.roots()) CHECK(rs.contains(negated(r)));
  }
}

TEST_CASE("verification catches broken sets") {
  RootSystem h3 = generate(simple_roots(Family::H3));

  // drop a single root: negation or reflection closure must break
  std::vector<Vec> dropped(h3.roots().begin(), h3.roots().end() - 1);
  VerifyReport rep1 = verify(RootSystem(3, dropped));
  CHECK(!rep1.ok());

  // adjoin a doubled root: the multiples axiom breaks
  std::vector<Vec> doubled = h3.roots();
  doubled.push_back(scaled(h3.roots()[0], FieldScalar(2)));
  doubled.push_back(scaled(h3.roots()[0], FieldScalar(-2)));
  VerifyReport rep2 = verify(RootSystem(3, doubled));
  CHECK(!rep2.multiples_ok);
}

TEST_CASE("automorphism group orders, rank 3") {
  CHECK(automorphism_order(generate(simple_roots(Family::A1x3))) == 48);
  CHECK(automorphism_order(generate(simple_roots(Family::A3))) == 48);
  CHECK(automorphism_order(generate(simple_roots(Family::B3))) == 48);
  CHECK(automorphism_order(generate(simple_roots(Family::H3))) == 120);
  CHECK_THROWS_AS(
      automorphism_order(generate(simple_roots(Family::H3)), 1),
      DomainError);
}

TEST_CASE("automorphism group orders, rank 4 catalogs") {
  CHECK(automorphism_order(catalog_a1x4()) == 384);  // 2⁴·4!
  CHECK(automorphism_order(catalog_d4()) == 1152);
  CHECK(automorphism_order(catalog_f4()) == 2304);
  CHECK(automorphism_order(catalog_h4()) == 14400);
}

TEST_CASE("a simple system can be extracted back out") {
  for (Family f :
       {Family::A1x3, Family::A3, Family::B3, Family::H3, Family::E8}) {
    RootSystem rs = generate(simple_roots(f), 100000, family_name(f));
    std::vector<Vec> simple = extract_simple(rs);
    CHECK(simple.size() == simple_roots(f).size());
    RootSystem regenerated = generate(simple);
    CHECK(regenerated.roots() == rs.roots());
  }
}

TEST_CASE("canonical ordering and deduplication") {
  std::vector<Vec> twice = generate(simple_roots(Family::A3)).roots();
  std::vector<Vec> copy = twice;
  twice.insert(twice.end(), copy.begin(), copy.end());
  std::reverse(twice.begin(), twice.end());
  RootSystem rs(3, twice);
  CHECK(rs.roots().size() == 12);
  CHECK(std::is_sorted(rs.roots().begin(), rs.roots().end(), VecKeyLess{}));
}
