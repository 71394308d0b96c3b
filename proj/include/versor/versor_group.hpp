#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "versor/multivector.hpp"

namespace versor {

// Finite multiplicative group of unit versors, generated from simple roots.
// Elements are kept in a canonical structural order, so element indices,
// class order, and every derived table are deterministic.
//
// The Cayley table and class partition are built lazily on first use; a
// fully-warmed group is safe to share read-only.
class VersorGroup {
 public:
  enum class Kind { pin, spin, chiral };

  // Multiplicative closure of {±α̂_i} for the unit-normalized simple roots.
  // Throws DomainError past the element ceiling.
  static VersorGroup generate_pin(const std::vector<Vec>& simple,
                                  size_t ceiling = 10000);

  // The even-grade elements (index 2 in the pin group).
  VersorGroup even_subgroup() const;

  // The spin group with R and −R identified; representatives are chosen
  // with first nonzero coefficient positive. Requires kind spin.
  VersorGroup rotation_quotient() const;

  Kind kind() const { return kind_; }
  int dim() const { return dim_; }
  size_t size() const { return elems_.size(); }
  const std::vector<Multivector>& elements() const { return elems_; }
  const Multivector& element(size_t i) const { return elems_[i]; }
  std::optional<size_t> find(const Multivector& m) const;
  size_t index_of(const Multivector& m) const;  // DomainError when absent

  size_t identity_index() const { return identity_; }
  size_t product(size_t a, size_t b) const;
  size_t inverse(size_t a) const;
  // Index of −g; for the rotation quotient this is g itself.
  size_t negation(size_t a) const;
  // Least k >= 1 with g^k = identity.
  int element_order(size_t a) const;

  // Partition into conjugacy classes, each sorted, ordered by smallest
  // member; computed under g ↦ h⁻¹gh with h⁻¹ = reverse(h) for versors.
  const std::vector<std::vector<size_t>>& conjugacy_classes() const;
  size_t class_of(size_t a) const;
  std::vector<size_t> class_sizes() const;

  const std::vector<std::vector<size_t>>& cayley_table() const;

 private:
  VersorGroup(Kind kind, int dim, std::vector<Multivector> elems);
  Multivector canonical(Multivector m) const;

  Kind kind_;
  int dim_;
  std::vector<Multivector> elems_;
  std::map<Multivector, size_t, MvKeyLess> index_;
  size_t identity_ = 0;
  mutable std::vector<std::vector<size_t>> cayley_;
  mutable std::vector<std::vector<size_t>> classes_;
  mutable std::vector<size_t> class_of_;
};

}  // namespace versor
