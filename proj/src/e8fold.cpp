#include "versor/e8fold.hpp"

#include "versor/errors.hpp"

namespace versor {

namespace {

bool is_pm_one_scalar(const Multivector& m) {
  if (!m.is_homogeneous(0)) return false;
  const FieldScalar& s = m.scalar_part();
  return s == FieldScalar(1) || s == FieldScalar(-1);
}

// Smallest k ≥ 1 with w^k = ±1 (0 if not reached within cap); when found,
// *negative_at says whether that power was −1.
int projective_order_of(const Multivector& w, int cap, bool* negative_at) {
  Multivector p = w;
  for (int k = 1; k <= cap; ++k) {
    if (is_pm_one_scalar(p)) {
      if (negative_at)
        *negative_at = (p.scalar_part() == FieldScalar(-1));
      return k;
    }
    p = p * w;
  }
  return 0;
}

}  // namespace

FoldingConfiguration build_folding() {
  std::vector<Vec> simple = simple_roots(Family::E8);
  FoldingConfiguration f{generate(simple, 100000, family_name(Family::E8)),
                         {},
                         {{{0, 6}, {1, 5}, {2, 4}, {3, 7}}},
                         {}};
  for (const Vec& a : simple) f.unit_simple.push_back(unit_normalize(a));
  for (auto [p, q] : f.pairs) {
    if (!dot(f.unit_simple[p], f.unit_simple[q]).is_zero())
      throw DomainError("folding pair is not orthogonal");
    Multivector a = Multivector::from_vector(f.unit_simple[p]) *
                    Multivector::from_vector(f.unit_simple[q]);
    Multivector sq = a * a;
    if (!sq.is_homogeneous(0) || sq.scalar_part() != FieldScalar(-1))
      throw DomainError("pair product does not square to -1");
    f.gens.push_back(std::move(a));
  }
  return f;
}

FoldingReport verify_h4_relations(const FoldingConfiguration& f) {
  FoldingReport rep;

  rep.pairs_orthogonal = true;
  for (auto [p, q] : f.pairs)
    if (!dot(f.unit_simple[p], f.unit_simple[q]).is_zero())
      rep.pairs_orthogonal = false;

  rep.generators_square_to_minus_one = true;
  for (const Multivector& a : f.gens) {
    Multivector sq = a * a;
    if (!sq.is_homogeneous(0) || sq.scalar_part() != FieldScalar(-1))
      rep.generators_square_to_minus_one = false;
  }

  rep.order_matrix.assign(4, std::vector<int>(4, 0));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      rep.order_matrix[i][j] =
          projective_order_of(f.gens[i] * f.gens[j], 40, nullptr);

  const std::vector<std::vector<int>> expected = {
      {1, 3, 2, 2}, {3, 1, 3, 2}, {2, 3, 1, 5}, {2, 2, 5, 1}};
  rep.matches_h4 = (rep.order_matrix == expected);
  return rep;
}

CoxeterReport coxeter_versor(const FoldingConfiguration& f) {
  CoxeterReport rep;
  auto mv = [&](int i) { return Multivector::from_vector(f.unit_simple[i]); };

  Multivector w =
      mv(0) * mv(6) * mv(1) * mv(5) * mv(2) * mv(4) * mv(3) * mv(7);
  Multivector gen_prod = f.gens[0] * f.gens[1] * f.gens[2] * f.gens[3];
  rep.equals_generator_product = (w == gen_prod);

  bool negative = false;
  rep.projective_order = projective_order_of(w, 80, &negative);
  rep.versor_order =
      negative ? 2 * rep.projective_order : rep.projective_order;

  Multivector ascending = mv(0);
  for (int i = 1; i < 8; ++i) ascending = ascending * mv(i);
  rep.ascending_projective_order = projective_order_of(ascending, 80, nullptr);
  rep.ascending_equals_folded = (ascending == w) || (ascending == -w);

  Versor vw = Versor::from_multivector(w);
  rep.permutes_roots = true;
  for (const Vec& r : f.roots.roots()) {
    if (!f.roots.contains(vw.sandwich(r))) {
      rep.permutes_roots = false;
      break;
    }
  }
  return rep;
}

}  // namespace versor
