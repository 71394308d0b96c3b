#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "versor/fmatrix.hpp"
#include "versor/multivector.hpp"

namespace versor {

// Coxeter diagram: symmetric matrix of relation orders m_ij, with m_ii = 1
// and off-diagonal entries >= 2 (2 = no edge).
struct CoxeterDiagram {
  int rank = 0;
  std::vector<std::vector<int>> m;

  static CoxeterDiagram unconnected(int rank);
  int label(int i, int j) const { return m[i][j]; }
  bool operator==(const CoxeterDiagram& o) const {
    return rank == o.rank && m == o.m;
  }
  std::string str() const;  // "rank=3; edges: 1-2:3, 2-3:5"
};

// The built-in families with stored coordinates.
enum class Family { A1x3, A3, B3, H3, E8 };

std::string family_name(Family f);
std::optional<Family> family_by_name(const std::string& name);
CoxeterDiagram family_diagram(Family f);
// Simple roots in diagram node order. Includes non-unit lengths (A3/B3/E8
// use integer or half-integer coordinates).
std::vector<Vec> simple_roots(Family f);
// Does the diagram match a built-in family up to node relabeling?
std::optional<Family> match_family(const CoxeterDiagram& d);

// Named family ("H3", "A1^3", ...) or explicit edge list
// ("rank=4; edges: 1-2:3, 2-3:3, 3-4:5"). Throws ParseError with position.
CoxeterDiagram parse_diagram(const std::string& text);

// A_ij = 2(α_i|α_j)/(α_j|α_j). Rejects linearly dependent input.
FMatrix cartan_matrix(const std::vector<Vec>& simple);

// Finite set of root vectors, deduplicated and canonically ordered.
// The root-system axioms are checked by verify(), not by the constructor.
class RootSystem {
 public:
  RootSystem(int dim, std::vector<Vec> roots, std::string name = {},
             std::vector<Vec> simple = {});

  int dim() const { return dim_; }
  size_t size() const { return roots_.size(); }
  const std::vector<Vec>& roots() const { return roots_; }
  bool contains(const Vec& v) const;
  const std::string& name() const { return name_; }
  void set_name(std::string n) { name_ = std::move(n); }
  // The simple system this root system was generated from (may be empty).
  const std::vector<Vec>& simple() const { return simple_; }

 private:
  int dim_;
  std::vector<Vec> roots_;
  std::string name_;
  std::vector<Vec> simple_;
};

// Orbit of the simple roots under the group generated by the simple
// reflections (breadth-first closure). Throws DomainError past the ceiling.
RootSystem generate(const std::vector<Vec>& simple, size_t ceiling = 100000,
                    std::string name = {});

struct VerifyReport {
  bool negation_ok = true;       // r ∈ Φ ⇒ −r ∈ Φ
  bool multiples_ok = true;      // no scalar multiples besides ±1
  bool reflections_ok = true;    // s_α(Φ) = Φ for every α ∈ Φ
  std::vector<std::string> violations;
  bool ok() const { return negation_ok && multiples_ok && reflections_ok; }
};

VerifyReport verify(const RootSystem& rs);

// Exact order of the group of orthogonal maps permuting the root set.
// Backtracking over Gram-compatible images of a root basis; `node_ceiling`
// bounds the search-tree size (exceeded only for systems far beyond the
// built-in 3D/4D ones, e.g. E8).
uint64_t automorphism_order(const RootSystem& rs,
                            uint64_t node_ceiling = 5000000);

// A simple system for a generated root set: roots positive on a generic
// linear functional and not a sum of two other positive roots.
std::vector<Vec> extract_simple(const RootSystem& rs);

}  // namespace versor
