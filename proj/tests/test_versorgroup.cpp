#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <map>
#include <set>

#include "doctest.h"
#include "testutil.hpp"
#include "versor/errors.hpp"
#include "versor/rootsystem.hpp"
#include "versor/versor_group.hpp"

using namespace versor;
using testutil::Lcg;

namespace {

VersorGroup pin_of(Family f) {
  return VersorGroup::generate_pin(simple_roots(f));
}

std::multiset<size_t> size_multiset(const VersorGroup& g) {
  auto sizes = g.class_sizes();
  return {sizes.begin(), sizes.end()};
}

}  // namespace

TEST_CASE("pin, spin, and chiral orders across the rank-3 families") {
  struct Row {
    Family f;
    size_t pin, spin, chiral;
  };
  for (const Row& row :
       {Row{Family::A1x3, 16, 8, 4}, Row{Family::A3, 48, 24, 12},
        Row{Family::B3, 96, 48, 24}, Row{Family::H3, 240, 120, 60}}) {
    VersorGroup pin = pin_of(row.f);
    CHECK(pin.size() == row.pin);
    VersorGroup spin = pin.even_subgroup();
    CHECK(spin.size() == row.spin);
    for (const Multivector& e : spin.elements()) CHECK(e.is_even());
    VersorGroup chiral = spin.rotation_quotient();
    CHECK(chiral.size() == row.chiral);
  }
}

TEST_CASE("the A1^3 spin group is the quaternion group") {
  VersorGroup q8 = pin_of(Family::A1x3).even_subgroup();
  REQUIRE(q8.size() == 8);
  std::map<int, int> order_counts;
  for (size_t i = 0; i < 8; ++i) ++order_counts[q8.element_order(i)];
  CHECK(order_counts[1] == 1);
  CHECK(order_counts[2] == 1);  // just −1
  CHECK(order_counts[4] == 6);
  CHECK(size_multiset(q8) == std::multiset<size_t>{1, 1, 2, 2, 2});
}

TEST_CASE("conjugacy class structure of the icosahedral groups") {
  VersorGroup spin = pin_of(Family::H3).even_subgroup();
  REQUIRE(spin.size() == 120);
  CHECK(spin.conjugacy_classes().size() == 9);
  CHECK(size_multiset(spin) ==
        std::multiset<size_t>{1, 1, 12, 12, 12, 12, 20, 20, 30});

  VersorGroup chiral = spin.rotation_quotient();
  CHECK(chiral.conjugacy_classes().size() == 5);
  CHECK(size_multiset(chiral) == std::multiset<size_t>{1, 12, 12, 15, 20});

  size_t total = 0;
  for (const auto& c : spin.conjugacy_classes()) total += c.size();
  CHECK(total == spin.size());
}

TEST_CASE("element orders of the generator spinors") {
  auto simple = simple_roots(Family::H3);
  VersorGroup spin = pin_of(Family::H3).even_subgroup();
  Multivector a1a2 = Multivector::from_vector(unit_normalize(simple[0])) *
                     Multivector::from_vector(unit_normalize(simple[1]));
  Multivector a2a3 = Multivector::from_vector(unit_normalize(simple[1])) *
                     Multivector::from_vector(unit_normalize(simple[2]));
  // both generator spinors lift their rotations to +1: scalar part −1/2 is
  // cos(2π/3) and −τ/2 is cos(4π/5), so the cubes/fifth powers close at +1
  size_t i12 = spin.index_of(a1a2), i23 = spin.index_of(a2a3);
  CHECK(spin.element_order(i12) == 3);  // 3-fold rotation
  CHECK(spin.element_order(i23) == 5);  // 5-fold rotation
  // their negatives wind the other sheet of the double cover
  CHECK(spin.element_order(spin.negation(i12)) == 6);
  CHECK(spin.element_order(spin.negation(i23)) == 10);
  CHECK(spin.element_order(spin.identity_index()) == 1);
}

TEST_CASE("group operations agree with exact multivector arithmetic") {
  VersorGroup g = pin_of(Family::B3).even_subgroup();
  Lcg rng(808);
  const size_t n = g.size();
  for (int i = 0; i < 200; ++i) {
    size_t a = rng.next() % n, b = rng.next() % n, h = rng.next() % n;
    CHECK(g.element(g.product(a, b)) == g.element(a) * g.element(b));
    CHECK(g.product(a, g.inverse(a)) == g.identity_index());
    // conjugation preserves the class
    size_t conj = g.product(g.product(g.inverse(h), a), h);
    CHECK(g.class_of(conj) == g.class_of(a));
    // reversal is the group inverse for unit versors
    CHECK(g.element(g.inverse(a)) == g.element(a).reverse());
  }
}

TEST_CASE("cayley table is a latin square") {
  VersorGroup g = pin_of(Family::A3).even_subgroup();
  const auto& t = g.cayley_table();
  const size_t n = g.size();
  REQUIRE(t.size() == n);
  for (size_t r = 0; r < n; ++r) {
    std::vector<char> seen_row(n, 0), seen_col(n, 0);
    for (size_t c = 0; c < n; ++c) {
      CHECK(!seen_row[t[r][c]]);
      seen_row[t[r][c]] = 1;
      CHECK(!seen_col[t[c][r]]);
      seen_col[t[c][r]] = 1;
    }
  }
}

TEST_CASE("negation map and unit-versor invariant") {
  VersorGroup pin = pin_of(Family::H3);
  for (size_t i = 0; i < pin.size(); ++i) {
    const Multivector& e = pin.element(i);
    Multivector n = e * e.reverse();
    CHECK(n == Multivector::scalar(3, FieldScalar(1)));
    CHECK(pin.element(pin.negation(i)) == -e);
  }
  VersorGroup chiral = pin.even_subgroup().rotation_quotient();
  for (size_t i = 0; i < chiral.size(); ++i)
    CHECK(chiral.negation(i) == i);  // ±R are identified
}

TEST_CASE("quotient and subgroup guards") {
  VersorGroup pin = pin_of(Family::A3);
  CHECK_THROWS_AS(pin.rotation_quotient(), DomainError);  // needs spin
  VersorGroup chiral = pin.even_subgroup().rotation_quotient();
  CHECK_THROWS_AS(chiral.rotation_quotient(), DomainError);
  CHECK_THROWS_AS(
      VersorGroup::generate_pin(simple_roots(Family::H3), 50), DomainError);
}

TEST_CASE("generation is deterministic") {
  VersorGroup a = pin_of(Family::B3), b = pin_of(Family::B3);
  REQUIRE(a.size() == b.size());
  for (size_t i = 0; i < a.size(); ++i)
    CHECK(a.element(i) == b.element(i));
}
