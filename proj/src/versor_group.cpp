#include "versor/versor_group.hpp"

#include <algorithm>
#include <deque>

#include "versor/errors.hpp"

namespace versor {

namespace {

// Representative of {m, −m} with first nonzero coefficient positive.
Multivector sign_normalized(Multivector m) {
  for (unsigned i = 0; i < m.size(); ++i) {
    int s = m[i].sign();
    if (s > 0) return m;
    if (s < 0) return -m;
  }
  return m;
}

}  // namespace

VersorGroup::VersorGroup(Kind kind, int dim, std::vector<Multivector> elems)
    : kind_(kind), dim_(dim), elems_(std::move(elems)) {
  std::sort(elems_.begin(), elems_.end(), MvKeyLess{});
  elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
  for (size_t i = 0; i < elems_.size(); ++i) index_.emplace(elems_[i], i);
  auto it = index_.find(Multivector::scalar(dim_, FieldScalar(1)));
  if (it == index_.end()) throw DomainError("versor group lacks the identity");
  identity_ = it->second;
}

Multivector VersorGroup::canonical(Multivector m) const {
  return kind_ == Kind::chiral ? sign_normalized(std::move(m)) : m;
}

VersorGroup VersorGroup::generate_pin(const std::vector<Vec>& simple,
                                      size_t ceiling) {
  if (simple.empty()) throw DomainError("no simple roots given");
  int dim = static_cast<int>(simple[0].size());

  std::vector<Multivector> gens;
  for (const Vec& s : simple) {
    if (static_cast<int>(s.size()) != dim)
      throw DomainError("simple roots of mixed dimension");
    Multivector g = Multivector::from_vector(unit_normalize(s));
    gens.push_back(g);
    gens.push_back(-g);
  }

  std::map<Multivector, size_t, MvKeyLess> seen;
  std::deque<Multivector> queue;
  for (const Multivector& g : gens)
    if (seen.emplace(g, 0).second) queue.push_back(g);

  while (!queue.empty()) {
    Multivector x = std::move(queue.front());
    queue.pop_front();
    for (const Multivector& g : gens) {
      for (Multivector y : {x * g, g * x}) {
        if (seen.emplace(y, 0).second) {
          if (seen.size() > ceiling)
            throw DomainError("versor group exceeded ceiling of " +
                              std::to_string(ceiling) +
                              " elements (non-finite input?)");
          queue.push_back(std::move(y));
        }
      }
    }
  }

  std::vector<Multivector> elems;
  elems.reserve(seen.size());
  for (auto& kv : seen) elems.push_back(kv.first);
  VersorGroup g(Kind::pin, dim, std::move(elems));
  // Versor invariant: E·reverse(E) = 1 exactly, for every element.
  Multivector one = Multivector::scalar(dim, FieldScalar(1));
  for (const Multivector& e : g.elems_)
    if (e * e.reverse() != one)
      throw DomainError("generated element is not a unit versor");
  return g;
}

VersorGroup VersorGroup::even_subgroup() const {
  if (kind_ != Kind::pin)
    throw DomainError("even subgroup is defined on a pin group");
  std::vector<Multivector> evens;
  for (const Multivector& e : elems_)
    if (e.is_even()) evens.push_back(e);
  if (evens.size() * 2 != elems_.size())
    throw DomainError("even part is not index 2; inconsistent pin group");
  return VersorGroup(Kind::spin, dim_, std::move(evens));
}

VersorGroup VersorGroup::rotation_quotient() const {
  if (kind_ != Kind::spin)
    throw DomainError("rotation quotient is defined on a spin group");
  if (!find(Multivector::scalar(dim_, FieldScalar(-1))))
    throw DomainError("spin group does not contain -1");
  std::vector<Multivector> reps;
  for (const Multivector& e : elems_) reps.push_back(sign_normalized(e));
  return VersorGroup(Kind::chiral, dim_, std::move(reps));
}

std::optional<size_t> VersorGroup::find(const Multivector& m) const {
  auto it = index_.find(kind_ == Kind::chiral ? canonical(m) : m);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

size_t VersorGroup::index_of(const Multivector& m) const {
  auto i = find(m);
  if (!i) throw DomainError("multivector is not a group element: " + m.str());
  return *i;
}

const std::vector<std::vector<size_t>>& VersorGroup::cayley_table() const {
  if (cayley_.empty()) {
    size_t n = elems_.size();
    cayley_.assign(n, std::vector<size_t>(n));
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j)
        // index_of doubles as an exact closure check.
        cayley_[i][j] = index_of(elems_[i] * elems_[j]);
  }
  return cayley_;
}

size_t VersorGroup::product(size_t a, size_t b) const {
  return cayley_table()[a][b];
}

size_t VersorGroup::inverse(size_t a) const {
  return index_of(elems_[a].reverse());
}

size_t VersorGroup::negation(size_t a) const { return index_of(-elems_[a]); }

int VersorGroup::element_order(size_t a) const {
  const auto& t = cayley_table();
  size_t g = a;
  int k = 1;
  while (g != identity_) {
    g = t[g][a];
    ++k;
    if (static_cast<size_t>(k) > elems_.size())
      throw DomainError("element order exceeds group order; corrupt table");
  }
  return k;
}

const std::vector<std::vector<size_t>>& VersorGroup::conjugacy_classes()
    const {
  if (classes_.empty()) {
    const auto& t = cayley_table();
    size_t n = elems_.size();
    std::vector<size_t> inv(n);
    for (size_t i = 0; i < n; ++i) inv[i] = inverse(i);
    class_of_.assign(n, n);
    for (size_t g = 0; g < n; ++g) {
      if (class_of_[g] != n) continue;
      std::vector<size_t> members;
      for (size_t h = 0; h < n; ++h) {
        size_t c = t[t[inv[h]][g]][h];
        if (class_of_[c] == n) {
          class_of_[c] = classes_.size();
          members.push_back(c);
        }
      }
      std::sort(members.begin(), members.end());
      classes_.push_back(std::move(members));
    }
  }
  return classes_;
}

size_t VersorGroup::class_of(size_t a) const {
  conjugacy_classes();
  return class_of_[a];
}

std::vector<size_t> VersorGroup::class_sizes() const {
  std::vector<size_t> sizes;
  for (const auto& c : conjugacy_classes()) sizes.push_back(c.size());
  return sizes;
}

}  // namespace versor
