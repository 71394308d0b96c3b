#include "versor/field.hpp"

#include <string>

#include "versor/errors.hpp"

namespace versor {

namespace {

// --- rational interval arithmetic, used only for sign/decimal ---

struct Interval {
  Rational lo, hi;  // lo <= value <= hi
  Rational width() const { return hi - lo; }
};

Interval operator+(const Interval& a, const Interval& b) {
  return {a.lo + b.lo, a.hi + b.hi};
}

Interval scale(const Rational& r, const Interval& x) {
  if (r.sign() >= 0) return {r * x.lo, r * x.hi};
  return {r * x.hi, r * x.lo};
}

// Product of intervals with positive lower bounds.
Interval mul_pos(const Interval& a, const Interval& b) {
  return {a.lo * b.lo, a.hi * b.hi};
}

// Shrinking enclosure of √n via Newton iteration from above:
// hi' = (hi + n/hi)/2 remains an upper bound, n/hi' a lower bound, and the
// width converges quadratically. Refinements are cached per thread.
class SqrtEnclosure {
 public:
  explicit SqrtEnclosure(long n) : n_(n), hi_(n) {}

  Interval at_most(const Rational& eps) {
    Rational lo = n_ / hi_;
    while (hi_ - lo > eps) {
      hi_ = (hi_ + lo) * Rational(1, 2);
      lo = n_ / hi_;
    }
    return {lo, hi_};
  }

 private:
  Rational n_;
  Rational hi_;
};

// Enclosure of x = r0 + r1·√2 + r5·√5 + r10·√10 of width <= eps, where the
// r_i are read off the (1,√2,τ,√2τ) coordinates via τ = (1+√5)/2.
Interval enclose(const FieldScalar& x, const Rational& eps) {
  thread_local SqrtEnclosure sqrt2(2), sqrt5(5);
  const Rational half(1, 2);
  Rational r0 = x.coeff(0) + half * x.coeff(2);
  Rational r1 = x.coeff(1) + half * x.coeff(3);
  Rational r5 = half * x.coeff(2);
  Rational r10 = half * x.coeff(3);

  // width(r·I) = |r|·width(I); width(I2·I5) <= hi2·w5 + lo5·w2 <= 5·max(w).
  Rational spread = r1.abs() + r5.abs() + Rational(5) * r10.abs();
  if (spread.is_zero()) return {r0, r0};
  Rational req = eps / spread;
  Interval i2 = sqrt2.at_most(req);
  Interval i5 = sqrt5.at_most(req);
  Interval i10 = mul_pos(i2, i5);
  return Interval{r0, r0} + scale(r1, i2) + scale(r5, i5) + scale(r10, i10);
}

}  // namespace

const Rational& FieldScalar::as_rational() const {
  if (!is_rational())
    throw DomainError("field element is not rational: " + str());
  return c_[0];
}

FieldScalar operator*(const FieldScalar& a, const FieldScalar& b) {
  // Fast paths: rational scaling covers the bulk of downstream arithmetic.
  if (b.is_rational()) {
    const Rational& s = b.c_[0];
    if (s.is_zero()) return FieldScalar{};
    return {a.c_[0] * s, a.c_[1] * s, a.c_[2] * s, a.c_[3] * s};
  }
  if (a.is_rational()) return b * a;

  const Rational &a0 = a.c_[0], &a1 = a.c_[1], &a2 = a.c_[2], &a3 = a.c_[3];
  const Rational &b0 = b.c_[0], &b1 = b.c_[1], &b2 = b.c_[2], &b3 = b.c_[3];
  const Rational two(2);
  // Multiplication table of the basis: √2·√2 = 2, τ² = τ+1,
  // √2·τ = √2τ, τ·√2τ = √2 + √2τ, √2τ·√2τ = 2 + 2τ.
  Rational c0 = a0 * b0 + two * (a1 * b1) + a2 * b2 + two * (a3 * b3);
  Rational c1 = a0 * b1 + a1 * b0 + a2 * b3 + a3 * b2;
  Rational c2 = a0 * b2 + a2 * b0 + a2 * b2 + two * (a1 * b3 + a3 * b1) +
                two * (a3 * b3);
  Rational c3 = a0 * b3 + a3 * b0 + a1 * b2 + a2 * b1 + a2 * b3 + a3 * b2;
  return {std::move(c0), std::move(c1), std::move(c2), std::move(c3)};
}

FieldScalar FieldScalar::inverse() const {
  if (is_zero()) throw DomainError("field inverse of zero");
  if (is_rational())
    return FieldScalar{Rational(1) / c_[0], {}, {}, {}};
  // 1/x = (product of the three Galois conjugates) / (field norm).
  FieldScalar conj =
      galois_sqrt2() * galois_sigma() * galois_sqrt2().galois_sigma();
  FieldScalar n = *this * conj;
  if (!n.is_rational())
    throw DomainError("field norm not rational; inconsistent state");
  return conj * FieldScalar{Rational(1) / n.c_[0], {}, {}, {}};
}

Rational FieldScalar::field_norm() const {
  FieldScalar n = *this * galois_sqrt2() * galois_sigma() *
                  galois_sqrt2().galois_sigma();
  return n.as_rational();
}

int FieldScalar::sign() const {
  if (is_zero()) return 0;
  if (is_rational()) return c_[0].sign();
  // A nonzero field element is bounded away from zero, so interval
  // refinement terminates; the precision squares per round.
  Rational eps(1, 1L << 24);
  for (int round = 0; round < 64; ++round) {
    Interval i = enclose(*this, eps);
    if (i.lo.sign() > 0) return 1;
    if (i.hi.sign() < 0) return -1;
    eps = eps * eps;
  }
  throw DomainError("sign(): failed to separate value from zero");
}

std::string FieldScalar::decimal(unsigned bits) const {
  if (bits < 16) throw DomainError("decimal(): precision below 16 bits");
  // digits = floor(bits·log10 2)
  unsigned digits = static_cast<unsigned>(bits * 0.30102999566398119521);
  if (digits == 0) digits = 1;

  mpz_class pow10;
  mpz_ui_pow_ui(pow10.get_mpz_t(), 10, digits);
  Rational ulp(mpz_class(1), pow10);
  Interval i = enclose(*this, ulp * Rational(1, 4));
  // Round the midpoint to the nearest multiple of 10^-digits; combined
  // midpoint+rounding error stays below one printed ulp.
  Rational mid = (i.lo + i.hi) * Rational(1, 2);
  mpq_class scaled = (mid * Rational(mpz_class(pow10), 1) + Rational(1, 2)).raw();
  mpz_class m;
  mpz_fdiv_q(m.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());

  bool neg = m < 0;
  if (neg) m = -m;
  std::string ds = m.get_str();
  if (ds.size() <= digits) ds.insert(0, digits + 1 - ds.size(), '0');
  ds.insert(ds.size() - digits, ".");
  return (neg ? "-" : "") + ds;
}

double FieldScalar::to_double() const { return std::stod(decimal(64)); }

std::optional<FieldScalar> field_sqrt(const Rational& n) {
  if (n.sign() < 0) return std::nullopt;
  if (n.is_zero()) return FieldScalar{};
  // √(p/q) = √(pq)/q; the field holds it when pq or pq/2 is a square.
  mpz_class t = n.num() * n.den();
  if (mpz_perfect_square_p(t.get_mpz_t())) {
    mpz_class s;
    mpz_sqrt(s.get_mpz_t(), t.get_mpz_t());
    return FieldScalar{Rational(s, n.den()), {}, {}, {}};
  }
  mpz_class t2 = t / 2;
  if (t % 2 == 0 && mpz_perfect_square_p(t2.get_mpz_t())) {
    mpz_class s;
    mpz_sqrt(s.get_mpz_t(), t2.get_mpz_t());
    return FieldScalar{{}, Rational(s, n.den()), {}, {}};
  }
  return std::nullopt;
}

std::string FieldScalar::str() const {
  static const char* kLabel[4] = {"", "√2", "τ", "√2τ"};
  std::string out;
  for (int i = 0; i < 4; ++i) {
    if (c_[i].is_zero()) continue;
    Rational mag = c_[i].abs();
    bool negative = c_[i].sign() < 0;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (i == 0) {
      out += mag.str();
    } else if (mag == Rational(1)) {
      out += kLabel[i];
    } else if (mag.is_integer()) {
      out += mag.str() + kLabel[i];
    } else {
      out += mag.str() + "·" + kLabel[i];
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace versor
