#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>

#include "versor/errors.hpp"

namespace versor {

// Arbitrary-precision rational, always in lowest terms with positive
// denominator. Thin wrapper over mpq_class whose only job is to guarantee
// canonical form (mpq_class constructors do not canonicalize on their own).
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}  // NOLINT: implicit by design
  Rational(long n, long d) {
    if (d == 0) throw DomainError("rational with zero denominator");
    v_ = mpq_class(n, d);
    v_.canonicalize();
  }
  Rational(mpz_class n, mpz_class d) {
    if (d == 0) throw DomainError("rational with zero denominator");
    v_ = mpq_class(std::move(n), std::move(d));
    v_.canonicalize();
  }
  explicit Rational(mpq_class q) : v_(std::move(q)) { v_.canonicalize(); }

  mpz_class num() const { return v_.get_num(); }
  mpz_class den() const { return v_.get_den(); }
  const mpq_class& raw() const { return v_; }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }
  Rational abs() const { return wrap(::abs(v_)); }

  // "p" when integral, "p/q" otherwise.
  std::string str() const { return v_.get_str(); }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return wrap(a.v_ + b.v_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return wrap(a.v_ - b.v_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return wrap(a.v_ * b.v_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw DomainError("rational division by zero");
    return wrap(a.v_ / b.v_);
  }
  Rational operator-() const { return wrap(-v_); }
  Rational& operator+=(const Rational& o) {
    v_ += o.v_;
    return *this;
  }
  Rational& operator-=(const Rational& o) {
    v_ -= o.v_;
    return *this;
  }
  Rational& operator*=(const Rational& o) {
    v_ *= o.v_;
    return *this;
  }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.v_ == b.v_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) {
    return a.v_ != b.v_;
  }
  friend bool operator<(const Rational& a, const Rational& b) {
    return a.v_ < b.v_;
  }
  friend bool operator<=(const Rational& a, const Rational& b) {
    return a.v_ <= b.v_;
  }
  friend bool operator>(const Rational& a, const Rational& b) {
    return a.v_ > b.v_;
  }
  friend bool operator>=(const Rational& a, const Rational& b) {
    return a.v_ >= b.v_;
  }
  static int compare(const Rational& a, const Rational& b) {
    return cmp(a.v_, b.v_);
  }

 private:
  // GMP arithmetic on canonical operands yields canonical results, so
  // internal results skip the canonicalize pass.
  static Rational wrap(mpq_class q) {
    Rational r;
    r.v_ = std::move(q);
    return r;
  }
  mpq_class v_;
};

}  // namespace versor
