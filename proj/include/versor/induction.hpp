#pragma once

#include <string>

#include "versor/rootsystem.hpp"
#include "versor/versor_group.hpp"

namespace versor {

// Coordinates of an even Cl(3) element R = a0 + a1·Ie1 + a2·Ie2 + a3·Ie3 on
// the fixed basis Ie1 = e2e3, Ie2 = e3e1, Ie3 = e1e2. Rejects odd content.
Vec spinor_to_vector(const Multivector& R);
Multivector vector_to_spinor(const Vec& a);

// The 4D inner product carried by spinors: ½(R1·R̃2 + R2·R̃1), a scalar
// equal to the Euclidean dot product of the coordinate quadruples.
FieldScalar spinor_inner(const Multivector& R1, const Multivector& R2);

// 4D root system induced by a 3D one: the even subgroup of the pin group of
// its simple roots, re-read as 4D vectors. The input must carry its simple
// system and satisfy the root-system axioms; the output is verified before
// being returned.
RootSystem induce(const RootSystem& phi3, size_t pin_ceiling = 10000);

// Catalog identification of a 4D root system by exact scale-invariant Gram
// statistics: returns "A1^4", "D4", "F4", "H4", or "unknown".
std::string identify(const RootSystem& phi4);

// Reference unit-root catalogs (16-cell, 24-cell, unit F4, 600-cell).
const RootSystem& catalog_a1x4();
const RootSystem& catalog_d4();
const RootSystem& catalog_f4();
const RootSystem& catalog_h4();

struct SpinAutReport {
  size_t group_order = 0;
  size_t pairs_total = 0;       // |G|²
  size_t pairs_preserving = 0;  // pairs whose map permutes the root set
  size_t distinct_maps = 0;     // distinct permutations among all pairs
  size_t inner_product_checks = 0;
  bool all_preserve = false;
  bool inner_products_preserved = false;
};

// Sweep of every pair (R1, R2) ∈ G×G acting by x ↦ R1·x·R2 on the induced
// root set. Requires phi4 to be exactly the induced image of `spin`.
SpinAutReport check_spinorial_automorphisms(const RootSystem& phi4,
                                            const VersorGroup& spin);

}  // namespace versor
