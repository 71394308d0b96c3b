#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "versor/fmatrix.hpp"
#include "versor/versor_group.hpp"

namespace versor {

// 3×3 rotation matrix of the sandwich action x ↦ reverse(R)·x·R of a unit
// spinor R ∈ Cl(3); columns are the images of e1, e2, e3.
FMatrix spinor_to_so3(const Multivector& R);

// The swapped action x ↦ R·x·reverse(R): the inverse rotation, i.e. the
// transpose matrix, with the same trace.
FMatrix contragredient_action(const Multivector& R);

// Trace of the sandwich action read directly off the components:
// 3a0² − a1² − a2² − a3².
FieldScalar so3_character(const Multivector& R);

// 4×4 matrix of left multiplication by R on the spinor basis
// (1, Ie1, Ie2, Ie3); orthogonal with trace 4·a0.
FMatrix left_mult_matrix(const Multivector& R);

enum class RepKind { trivial, parity, so3, leftmult };

struct MatrixRep {
  RepKind kind;
  size_t degree;
  std::vector<FMatrix> images;         // indexed like the group elements
  std::vector<FieldScalar> character;  // indexed by conjugacy class
};

// Materialize one of the structural representations over a versor group.
// Kinds expect: trivial → any; parity → pin; so3 → spin or rotation
// quotient; leftmult → spin. The character is validated to be constant on
// every conjugacy class.
MatrixRep build_rep(const VersorGroup& g, RepKind kind);

// ‖χ‖² = (1/|G|) Σ_g χ(g)² — the characters above are real, so no
// conjugation is needed. Quaternionic type shows up as the value 4.
FieldScalar rep_norm_squared(const MatrixRep& rep, const VersorGroup& g);

// Complex value at 256-bit working precision, with exact recognition over
// the half-integer lattices spanned by τ and √2 when it applies.
struct CharEntry {
  mpf_class re{0, 256}, im{0, 256};  // carried at the working precision
  bool exact = false;
  FieldScalar value;  // meaningful only when exact (a real number)

  double re_d() const { return re.get_d(); }
  double im_d() const { return im.get_d(); }
  std::string str(unsigned digits = 10) const;
};

struct CharacterTable {
  size_t group_order = 0;
  std::vector<size_t> class_sizes;
  std::vector<size_t> class_reps;  // element index of each class rep
  std::vector<int> class_orders;   // element order of each class rep
  std::vector<int> degrees;        // ascending
  std::vector<std::vector<CharEntry>> chi;  // [irrep][class]
  double orthogonality_residual = 0.0;      // max deviation seen in checks
};

// Exact class-algebra structure constants, numeric simultaneous
// eigenvectors at 256 bits, degrees recovered from orthogonality.
CharacterTable character_table(const VersorGroup& g);

struct McKayGraph {
  std::vector<int> degrees;             // node labels (irrep dimensions)
  size_t spinor_node = 0;               // index of the tensoring irrep 2s
  std::vector<std::vector<int>> adj;    // edge multiplicities
  std::string name;                     // for stored reference diagrams
};

// Tensor-with-2s adjacency over the character table of a binary (spin)
// group; 2s is the degree-2 irrep matching the natural character 2·a0.
McKayGraph mckay_graph(const VersorGroup& spin, const CharacterTable& ct);

// Stored affine diagrams keyed "D4", "E6", "E7", "E8" (marks as labels).
const McKayGraph& affine_diagram(const std::string& name);

// Label-preserving graph isomorphism (≤ 9 nodes, backtracking).
bool mckay_isomorphic(const McKayGraph& a, const McKayGraph& b);

// Which stored affine diagram a graph matches, or "unknown".
std::string mckay_identify(const McKayGraph& g);

}  // namespace versor
