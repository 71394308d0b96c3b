// Acceptance gate: runs the twelve headline checks end to end, printing one
// PASS/FAIL line per criterion. Exit status is the number of failures.

#include <cstdio>
#include <exception>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "versor/e8fold.hpp"
#include "versor/errors.hpp"
#include "versor/field.hpp"
#include "versor/induction.hpp"
#include "versor/multivector.hpp"
#include "versor/rep.hpp"
#include "versor/rootsystem.hpp"
#include "versor/versor_group.hpp"

using namespace versor;

namespace {

int failures = 0;

void criterion(int n, const std::string& label,
               const std::function<bool(std::string&)>& body) {
  std::string detail;
  bool ok = false;
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  std::printf("%s criterion %2d: %s%s%s\n", ok ? "PASS" : "FAIL", n,
              label.c_str(), detail.empty() ? "" : " — ", detail.c_str());
  if (!ok) ++failures;
}

VersorGroup spin_of(Family f) {
  return VersorGroup::generate_pin(simple_roots(f)).even_subgroup();
}

Multivector unit_mv(const Vec& v) {
  return Multivector::from_vector(unit_normalize(v));
}

struct Lcg {
  uint64_t state;
  explicit Lcg(uint64_t seed) : state(seed) {}
  uint64_t next() {
    state = state * 6364136223846793005ull + 1442695040888963407ull;
    return state >> 11;
  }
  long range(long lo, long hi) {
    return lo + static_cast<long>(next() % (hi - lo + 1));
  }
};

FieldScalar rand_scalar(Lcg& g) {
  return FieldScalar(Rational(g.range(-9, 9), g.range(1, 9)),
                     Rational(g.range(-9, 9), g.range(1, 9)),
                     Rational(g.range(-9, 9), g.range(1, 9)),
                     Rational(g.range(-9, 9), g.range(1, 9)));
}

Vec rand_nonzero_vec(Lcg& g, size_t dim) {
  for (;;) {
    Vec v(dim);
    bool nz = false;
    for (auto& c : v) {
      c = FieldScalar(g.range(-4, 4), g.range(-4, 4), g.range(-4, 4), 0);
      nz = nz || !c.is_zero();
    }
    if (nz) return v;
  }
}

}  // namespace

int main() {
  criterion(1, "root counts 6, 12, 18, 30, 240", [](std::string& d) {
    const std::map<Family, size_t> want = {{Family::A1x3, 6},
                                           {Family::A3, 12},
                                           {Family::B3, 18},
                                           {Family::H3, 30},
                                           {Family::E8, 240}};
    for (auto [f, n] : want) {
      RootSystem rs = generate(simple_roots(f), 100000, family_name(f));
      if (rs.roots().size() != n || !verify(rs).ok()) {
        d = family_name(f) + ": got " + std::to_string(rs.roots().size());
        return false;
      }
    }
    return true;
  });

  criterion(2, "versor group orders 240/120/60 and spins 24, 48",
            [](std::string& d) {
    VersorGroup pin = VersorGroup::generate_pin(simple_roots(Family::H3));
    VersorGroup spin = pin.even_subgroup();
    VersorGroup chiral = spin.rotation_quotient();
    if (pin.size() != 240 || spin.size() != 120 || chiral.size() != 60) {
      d = "H3 tower " + std::to_string(pin.size()) + "/" +
          std::to_string(spin.size()) + "/" + std::to_string(chiral.size());
      return false;
    }
    if (spin_of(Family::A3).size() != 24) { d = "Spin(A3)"; return false; }
    if (spin_of(Family::B3).size() != 48) { d = "Spin(B3)"; return false; }
    return true;
  });

  criterion(3, "2I has 9 classes; I class sizes (1, 20, 15, 12, 12)",
            [](std::string& d) {
    VersorGroup spin = spin_of(Family::H3);
    if (spin.conjugacy_classes().size() != 9) {
      d = "2I classes: " + std::to_string(spin.conjugacy_classes().size());
      return false;
    }
    VersorGroup chiral = spin.rotation_quotient();
    std::multiset<size_t> sizes;
    for (const auto& c : chiral.conjugacy_classes()) sizes.insert(c.size());
    if (sizes != std::multiset<size_t>{1, 12, 12, 15, 20}) {
      d = "I class sizes differ";
      return false;
    }
    return true;
  });

  criterion(4, "induced 4D systems: 8=A1^4, 24=D4, 48=F4, 120=H4",
            [](std::string& d) {
    const std::map<Family, std::pair<size_t, std::string>> want = {
        {Family::A1x3, {8, "A1^4"}},
        {Family::A3, {24, "D4"}},
        {Family::B3, {48, "F4"}},
        {Family::H3, {120, "H4"}}};
    for (const auto& [f, expect] : want) {
      RootSystem rs = generate(simple_roots(f), 100000, family_name(f));
      RootSystem ind = induce(rs);
      if (ind.roots().size() != expect.first || !verify(ind).ok() ||
          identify(ind) != expect.second) {
        d = family_name(f) + " -> " + std::to_string(ind.roots().size()) +
            " identified " + identify(ind);
        return false;
      }
    }
    return true;
  });

  criterion(5, "generator spinors have the expected closed forms exactly",
            [](std::string& d) {
    auto simple = simple_roots(Family::H3);
    Multivector r12 = unit_mv(simple[0]) * unit_mv(simple[1]);
    Multivector r23 = unit_mv(simple[1]) * unit_mv(simple[2]);
    const FieldScalar h = FieldScalar::half(), tau = FieldScalar::tau();
    // −1/2 + ((−1+τ)/2)e12 − (τ/2)e23
    Multivector want12 = Multivector::scalar(3, -h) +
                         Multivector::blade(3, 0b011, (tau - 1) * h) +
                         Multivector::blade(3, 0b110, -tau * h);
    // −τ/2 + ((1−τ)/2)e13 − (1/2)e23
    Multivector want23 = Multivector::scalar(3, -tau * h) +
                         Multivector::blade(3, 0b101, (FieldScalar(1) - tau) * h) +
                         Multivector::blade(3, 0b110, -h);
    if (!(r12 == want12)) { d = "first spinor: " + r12.str(); return false; }
    if (!(r23 == want23)) { d = "second spinor: " + r23.str(); return false; }
    return true;
  });

  criterion(6, "characters 0, tau / -2, -2tau; icosahedral table exact",
            [](std::string& d) {
    auto simple = simple_roots(Family::H3);
    Multivector r12 = unit_mv(simple[0]) * unit_mv(simple[1]);
    Multivector r23 = unit_mv(simple[1]) * unit_mv(simple[2]);
    const FieldScalar tau = FieldScalar::tau();
    if (!(so3_character(r12) == FieldScalar(0)) ||
        !(so3_character(r23) == tau)) {
      d = "3x3 characters";
      return false;
    }
    if (!(left_mult_matrix(r12).trace() == FieldScalar(-2)) ||
        !(left_mult_matrix(r23).trace() == FieldScalar(-2) * tau)) {
      d = "4x4 characters";
      return false;
    }
    CharacterTable ct = character_table(spin_of(Family::H3).rotation_quotient());
    if (ct.degrees != std::vector<int>{1, 3, 3, 4, 5}) {
      d = "icosahedral degrees";
      return false;
    }
    // every entry exact, and each row matches the known table as a
    // multiset of (class size, value) cells
    auto fp = [&](size_t row) {
      std::multiset<std::string> out;
      for (size_t j = 0; j < 5; ++j) {
        if (!ct.chi[row][j].exact) return std::multiset<std::string>{};
        out.insert(std::to_string(ct.class_sizes[j]) + "|" +
                   ct.chi[row][j].value.str());
      }
      return out;
    };
    auto want = [](std::vector<std::pair<int, FieldScalar>> cells) {
      std::multiset<std::string> out;
      for (auto& [n, v] : cells)
        out.insert(std::to_string(n) + "|" + v.str());
      return out;
    };
    const FieldScalar one(1), zero(0), sigma = FieldScalar(1) - tau;
    std::map<std::multiset<std::string>, int> got;
    for (size_t i = 0; i < 5; ++i) ++got[fp(i)];
    bool ok =
        got[want({{1, one}, {20, one}, {15, one}, {12, one}, {12, one}})] ==
            1 &&
        got[want({{1, FieldScalar(3)}, {20, zero}, {15, -one}, {12, tau},
                  {12, sigma}})] == 2 &&
        got[want({{1, FieldScalar(4)}, {20, one}, {15, zero}, {12, -one},
                  {12, -one}})] == 1 &&
        got[want({{1, FieldScalar(5)}, {20, -one}, {15, one}, {12, zero},
                  {12, zero}})] == 1;
    if (!ok) d = "25-entry table content";
    return ok;
  });

  criterion(7, "norm of the 4x4 rep over the binary group is 4; trivial is 1",
            [](std::string& d) {
    VersorGroup spin = spin_of(Family::H3);
    FieldScalar four = rep_norm_squared(build_rep(spin, RepKind::leftmult), spin);
    FieldScalar one = rep_norm_squared(build_rep(spin, RepKind::trivial), spin);
    if (!(four == FieldScalar(4))) { d = "got " + four.str(); return false; }
    if (!(one == FieldScalar(1))) { d = "trivial norm " + one.str(); return false; }
    return true;
  });

  criterion(8, "binary tables: degree sums 12/18/30, squares 24/48/120",
            [](std::string& d) {
    struct Want {
      Family f;
      int sum, sumsq;
    };
    for (auto [f, sum, sumsq] : {Want{Family::A3, 12, 24},
                                 Want{Family::B3, 18, 48},
                                 Want{Family::H3, 30, 120}}) {
      CharacterTable ct = character_table(spin_of(f));
      int s = 0, s2 = 0;
      for (int deg : ct.degrees) { s += deg; s2 += deg * deg; }
      if (s != sum || s2 != sumsq || ct.orthogonality_residual >= 1e-9) {
        d = family_name(f) + ": sum " + std::to_string(s) + ", squares " +
            std::to_string(s2);
        return false;
      }
      if (f == Family::H3 &&
          ct.degrees != std::vector<int>{1, 2, 2, 3, 3, 4, 4, 5, 6}) {
        d = "2I degree multiset";
        return false;
      }
    }
    return true;
  });

  criterion(9, "McKay graphs: 2T->E6, 2O->E7, 2I->E8 by graph isomorphism",
            [](std::string& d) {
    const std::map<Family, std::string> want = {
        {Family::A3, "E6"}, {Family::B3, "E7"}, {Family::H3, "E8"}};
    for (const auto& [f, name] : want) {
      VersorGroup spin = spin_of(f);
      McKayGraph g = mckay_graph(spin, character_table(spin));
      if (mckay_identify(g) != name ||
          !mckay_isomorphic(g, affine_diagram(name))) {
        d = family_name(f) + " -> " + mckay_identify(g);
        return false;
      }
    }
    return true;
  });

  criterion(10, "Aut orders 1152, 2304, 14400; spinor pairs all preserve",
            [](std::string& d) {
    const std::map<Family, long> want = {
        {Family::A3, 1152}, {Family::B3, 2304}, {Family::H3, 14400}};
    for (auto [f, n] : want) {
      RootSystem rs = generate(simple_roots(f), 100000, family_name(f));
      RootSystem ind = induce(rs);
      long got = automorphism_order(ind);
      if (got != n) {
        d = "Aut(induced " + family_name(f) + ") = " + std::to_string(got);
        return false;
      }
      SpinAutReport rep = check_spinorial_automorphisms(ind, spin_of(f));
      if (!rep.all_preserve || !rep.inner_products_preserved ||
          rep.pairs_preserving != rep.pairs_total) {
        d = family_name(f) + " sweep: " + std::to_string(rep.pairs_preserving) +
            "/" + std::to_string(rep.pairs_total);
        return false;
      }
    }
    return true;
  });

  criterion(11, "rank-8 folding: relations, Coxeter order 30, versor equality",
            [](std::string& d) {
    FoldingConfiguration cfg = build_folding();
    FoldingReport rel = verify_h4_relations(cfg);
    if (!rel.pairs_orthogonal || !rel.generators_square_to_minus_one ||
        !rel.matches_h4) {
      d = "relation report";
      return false;
    }
    CoxeterReport cox = coxeter_versor(cfg);
    if (cox.projective_order != 30 || !cox.equals_generator_product ||
        !cox.permutes_roots) {
      d = "Coxeter order " + std::to_string(cox.projective_order);
      return false;
    }
    return true;
  });

  criterion(12, "property suites: 200 random instances per family",
            [](std::string& d) {
    Lcg g(20260814);
    // field axioms and inverse round-trips
    for (int i = 0; i < 200; ++i) {
      FieldScalar a = rand_scalar(g), b = rand_scalar(g), c = rand_scalar(g);
      if (!((a + b) * c == a * c + b * c)) { d = "distributivity"; return false; }
      if (!(a * b == b * a)) { d = "commutativity"; return false; }
      if (!a.is_zero() && !(a * a.inverse() == FieldScalar(1))) {
        d = "inverse";
        return false;
      }
    }
    // geometric-product associativity in Cl(3)
    Lcg g2(777);
    auto rand_mv = [&](size_t dim) {
      Multivector m(dim);
      for (unsigned k = 0; k < m.size(); ++k)
        if (g2.next() % 2)
          m = m + Multivector::blade(dim, k, FieldScalar(g2.range(-3, 3),
                                                         g2.range(-3, 3),
                                                         g2.range(-3, 3), 0));
      return m;
    };
    for (int i = 0; i < 200; ++i) {
      Multivector x = rand_mv(3), y = rand_mv(3), z = rand_mv(3);
      if (!((x * y) * z == x * (y * z))) { d = "associativity"; return false; }
    }
    // reflection isometry
    for (int i = 0; i < 200; ++i) {
      Vec m = rand_nonzero_vec(g, 3), v = rand_nonzero_vec(g, 3);
      Vec r = reflect_vec(m, v);
      if (!(dot(r, r) == dot(v, v))) { d = "reflection isometry"; return false; }
    }
    // homomorphism checks of both matrix representations
    VersorGroup spin = spin_of(Family::H3);
    VersorGroup chiral = spin.rotation_quotient();
    MatrixRep so3 = build_rep(chiral, RepKind::so3);
    MatrixRep leftm = build_rep(spin, RepKind::leftmult);
    for (int i = 0; i < 200; ++i) {
      size_t a = g.next() % chiral.size(), b = g.next() % chiral.size();
      if (!(so3.images[chiral.product(a, b)] ==
            so3.images[a] * so3.images[b])) {
        d = "3x3 homomorphism";
        return false;
      }
      size_t c = g.next() % spin.size(), e = g.next() % spin.size();
      if (!(leftm.images[spin.product(c, e)] ==
            leftm.images[c] * leftm.images[e])) {
        d = "4x4 homomorphism";
        return false;
      }
    }
    // norm correspondence: R·reverse(R) scalar equals the 4D dot square
    for (int i = 0; i < 200; ++i) {
      size_t a = g.next() % spin.size();
      const Multivector& R = spin.elements()[a];
      Vec q = spinor_to_vector(R);
      Multivector n = R * R.reverse();
      if (!(n == Multivector::scalar(3, dot(q, q)))) {
        d = "norm correspondence";
        return false;
      }
    }
    return true;
  });

  std::printf("%s: %d of 12 criteria passed\n",
              failures == 0 ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL",
              12 - failures);
  return failures;
}
