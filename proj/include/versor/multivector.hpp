#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "versor/field.hpp"

namespace versor {

// Coordinate vector over the scalar field. Used for root coordinates and
// matrix columns alike.
using Vec = std::vector<FieldScalar>;

FieldScalar dot(const Vec& a, const Vec& b);
Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec scaled(const Vec& v, const FieldScalar& s);
Vec negated(const Vec& v);
// v reflected in the hyperplane orthogonal to root r (coordinate form).
Vec reflect_vec(const Vec& r, const Vec& v);
// v scaled to unit length; requires |v|² to be a rational with a square
// root inside the field (covers the integer/half-integer root coordinates).
Vec unit_normalize(const Vec& v);
int vec_compare(const Vec& a, const Vec& b);
std::string vec_str(const Vec& v);

struct VecKeyLess {
  bool operator()(const Vec& a, const Vec& b) const {
    return vec_compare(a, b) < 0;
  }
};

// Sign (+1/-1) picked up when reordering the juxtaposition e_A·e_B into the
// canonical ascending blade e_{A xor B}, with Euclidean metric e_i² = +1.
int blade_product_sign(unsigned a, unsigned b);
// "1", "e1", "e13", "e12345678", ... (generators are 1-based).
std::string blade_name(unsigned mask);

// Dense element of the Euclidean Clifford algebra Cl(n), 1 <= n <= 8.
// Coefficient index is the blade bitmask: bit i-1 set <=> e_i present.
class Multivector {
 public:
  explicit Multivector(int dim);
  static Multivector scalar(int dim, FieldScalar s);
  static Multivector blade(int dim, unsigned mask, FieldScalar coef);
  static Multivector basis_vector(int dim, int i);  // e_i, 1-based
  static Multivector from_vector(const Vec& v);

  int dim() const { return dim_; }
  unsigned size() const { return 1u << dim_; }
  const FieldScalar& operator[](unsigned mask) const { return c_[mask]; }
  FieldScalar& operator[](unsigned mask) { return c_[mask]; }

  bool is_zero() const;
  // True when all support lies in even / odd grades (zero counts as both).
  bool is_even() const;
  bool is_odd() const;
  bool is_homogeneous(int k) const;
  const FieldScalar& scalar_part() const { return c_[0]; }
  Vec vector_part() const;  // the grade-1 coefficients

  Multivector grade_project(int k) const;
  // Reversal: e_{i1}…e_{ik} ↦ e_{ik}…e_{i1}, i.e. (-1)^{k(k-1)/2} per grade.
  Multivector reverse() const;

  friend Multivector operator*(const Multivector& a, const Multivector& b);
  friend Multivector operator+(const Multivector& a, const Multivector& b);
  friend Multivector operator-(const Multivector& a, const Multivector& b);
  Multivector operator-() const;
  Multivector scaled(const FieldScalar& s) const;

  friend bool operator==(const Multivector& a, const Multivector& b);
  friend bool operator!=(const Multivector& a, const Multivector& b) {
    return !(a == b);
  }
  // Structural total order: dim, then coefficients lexicographically.
  static int compare(const Multivector& a, const Multivector& b);

  std::string str() const;

 private:
  int dim_;
  std::vector<FieldScalar> c_;
};

struct MvKeyLess {
  bool operator()(const Multivector& a, const Multivector& b) const {
    return Multivector::compare(a, b) < 0;
  }
};

// v ↦ -a v a / (a|a): reflection of vector v in the hyperplane orthogonal
// to the (not necessarily unit) vector a. Both arguments must be grade 1.
Multivector reflect(const Multivector& a, const Multivector& v);

// A product of invertible vectors, acting on vectors by the sandwich
// v ↦ (-1)^parity à v A. Construction validates unit magnitude (A·Ã = ±1)
// and parity purity.
class Versor {
 public:
  static Versor from_multivector(const Multivector& a);
  const Multivector& value() const { return a_; }
  int parity() const { return parity_; }  // 0 even (spinor), 1 odd
  Multivector sandwich(const Multivector& v) const;
  Vec sandwich(const Vec& v) const;

 private:
  Versor(Multivector a, int parity) : a_(std::move(a)), parity_(parity) {}
  Multivector a_;
  int parity_;
};

// One-shot form: validates A, applies the sandwich to grade-1 v.
Multivector versor_sandwich(const Multivector& A, const Multivector& v);

}  // namespace versor
