#pragma once

#include <array>
#include <utility>
#include <vector>

#include "versor/multivector.hpp"
#include "versor/rootsystem.hpp"

namespace versor {

// Rank-8 system folded onto four generators: a_i is the product of one
// orthogonal pair of unit simple roots, so each a_i squares to −1 and acts
// as a double rotation. The pairing is (1,7)(2,6)(3,5)(4,8) in 1-based node
// numbering, stored 0-based.
struct FoldingConfiguration {
  RootSystem roots;                            // all 240 roots
  std::vector<Vec> unit_simple;                // unit-normalized simples
  std::array<std::pair<int, int>, 4> pairs;    // 0-based index pairs
  std::vector<Multivector> gens;               // a_1..a_4 in Cl(8)
};

// Builds the configuration and asserts pair orthogonality and a_i² = −1.
FoldingConfiguration build_folding();

struct FoldingReport {
  bool pairs_orthogonal = false;
  bool generators_square_to_minus_one = false;
  // Projective order (smallest k with P^k = ±1) of each product a_i·a_j.
  std::vector<std::vector<int>> order_matrix;
  // order_matrix == [[1,3,2,2],[3,1,3,2],[2,3,1,5],[2,2,5,1]], the Coxeter
  // relations of the icosahedral rank-4 group.
  bool matches_h4 = false;
};

FoldingReport verify_h4_relations(const FoldingConfiguration& f);

struct CoxeterReport {
  int projective_order = 0;     // smallest k with W^k = ±1 (expect 30)
  int versor_order = 0;         // smallest k with W^k = +1
  bool equals_generator_product = false;  // W == a_1·a_2·a_3·a_4 exactly
  int ascending_projective_order = 0;     // for the node-ascending word
  bool ascending_equals_folded = false;   // ascending word == ±W?
  bool permutes_roots = false;  // sandwich action maps the root set to itself
};

// W is the product of all eight unit simple roots in the pair-interleaved
// order 1,7,2,6,3,5,4,8, which by associativity is exactly a_1·a_2·a_3·a_4.
// The node-ascending word 1..8 gives a conjugate versor, reported alongside.
CoxeterReport coxeter_versor(const FoldingConfiguration& f);

}  // namespace versor
