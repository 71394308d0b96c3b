#pragma once

#include <array>
#include <optional>
#include <string>

#include "versor/rational.hpp"

namespace versor {

// Element of the real number field Q(√2, τ), where τ = (1+√5)/2 is the golden
// ratio (τ² = τ+1). Degree 4 over Q, stored exactly on the basis
//
//     x = c0·1 + c1·√2 + c2·τ + c3·√2τ.
//
// This field contains every coordinate, inner product, and versor coefficient
// that arises from the root systems handled here (A/B/D families need √2 at
// most, H families need τ, and their interplay needs both), so all arithmetic
// downstream of it is exact.
class FieldScalar {
 public:
  FieldScalar() : c_{} {}
  FieldScalar(long n) : c_{Rational(n), {}, {}, {}} {}  // NOLINT: implicit
  FieldScalar(Rational r) : c_{std::move(r), {}, {}, {}} {}  // NOLINT
  FieldScalar(Rational c0, Rational c1, Rational c2, Rational c3)
      : c_{std::move(c0), std::move(c1), std::move(c2), std::move(c3)} {}

  static FieldScalar sqrt2() { return FieldScalar{0, 1, 0, 0}; }
  static FieldScalar tau() { return FieldScalar{0, 0, 1, 0}; }
  // Galois mate of τ: σ = 1−τ = (1−√5)/2, with τ·σ = −1.
  static FieldScalar tau_conj() { return FieldScalar{1, 0, -1, 0}; }
  static FieldScalar half() { return FieldScalar{Rational(1, 2), 0, 0, 0}; }

  const Rational& coeff(int i) const { return c_[i]; }
  bool is_zero() const {
    return c_[0].is_zero() && c_[1].is_zero() && c_[2].is_zero() &&
           c_[3].is_zero();
  }
  bool is_rational() const {
    return c_[1].is_zero() && c_[2].is_zero() && c_[3].is_zero();
  }
  // Throws DomainError when the value has irrational parts.
  const Rational& as_rational() const;

  friend FieldScalar operator+(const FieldScalar& a, const FieldScalar& b) {
    return {a.c_[0] + b.c_[0], a.c_[1] + b.c_[1], a.c_[2] + b.c_[2],
            a.c_[3] + b.c_[3]};
  }
  friend FieldScalar operator-(const FieldScalar& a, const FieldScalar& b) {
    return {a.c_[0] - b.c_[0], a.c_[1] - b.c_[1], a.c_[2] - b.c_[2],
            a.c_[3] - b.c_[3]};
  }
  FieldScalar operator-() const { return {-c_[0], -c_[1], -c_[2], -c_[3]}; }
  friend FieldScalar operator*(const FieldScalar& a, const FieldScalar& b);
  FieldScalar& operator+=(const FieldScalar& o) {
    for (int i = 0; i < 4; ++i) c_[i] += o.c_[i];
    return *this;
  }
  FieldScalar& operator-=(const FieldScalar& o) {
    for (int i = 0; i < 4; ++i) c_[i] -= o.c_[i];
    return *this;
  }
  FieldScalar& operator*=(const FieldScalar& o) { return *this = *this * o; }

  // Multiplicative inverse; DomainError on zero.
  FieldScalar inverse() const;
  friend FieldScalar operator/(const FieldScalar& a, const FieldScalar& b) {
    return a * b.inverse();
  }

  // Field automorphism τ ↦ σ = 1−τ (i.e. √5 ↦ −√5), fixing √2.
  FieldScalar galois_sigma() const {
    return {c_[0] + c_[2], c_[1] + c_[3], -c_[2], -c_[3]};
  }
  // Field automorphism √2 ↦ −√2, fixing τ.
  FieldScalar galois_sqrt2() const { return {c_[0], -c_[1], c_[2], -c_[3]}; }
  // Field norm: product of the value with its three Galois conjugates.
  Rational field_norm() const;

  // Exact sign of the value under the real embedding √2, √5 > 0.
  // Returns -1, 0, or +1.
  int sign() const;

  // Decimal rendering of the real value, correct to the last printed digit.
  // `bits` is the binary precision target (>= 16); the printed fraction is
  // floor(bits·log10 2) digits long.
  std::string decimal(unsigned bits = 64) const;
  double to_double() const;

  // Exact rendering: "1/2 + 3τ - √2τ" style, "0" for zero.
  std::string str() const;

  friend bool operator==(const FieldScalar& a, const FieldScalar& b) {
    return a.c_[0] == b.c_[0] && a.c_[1] == b.c_[1] && a.c_[2] == b.c_[2] &&
           a.c_[3] == b.c_[3];
  }
  friend bool operator!=(const FieldScalar& a, const FieldScalar& b) {
    return !(a == b);
  }
  // Structural total order (lexicographic on coefficients). This is a
  // container/ordering key, *not* the order of the real embedding; use
  // sign() for real comparisons.
  static int compare(const FieldScalar& a, const FieldScalar& b) {
    for (int i = 0; i < 4; ++i) {
      int c = Rational::compare(a.c_[i], b.c_[i]);
      if (c != 0) return c;
    }
    return 0;
  }

 private:
  std::array<Rational, 4> c_;
};

struct FieldScalarKeyLess {
  bool operator()(const FieldScalar& a, const FieldScalar& b) const {
    return FieldScalar::compare(a, b) < 0;
  }
};

// √n for non-negative rational n, when it exists inside the field (i.e. n or
// n/2 is a rational square). Returns the non-negative square root.
std::optional<FieldScalar> field_sqrt(const Rational& n);

}  // namespace versor
