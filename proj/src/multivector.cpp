#include "versor/multivector.hpp"

#include <bit>

#include "versor/errors.hpp"

namespace versor {

// --- Vec helpers ---

FieldScalar dot(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw DomainError("dot: dimension mismatch");
  FieldScalar s;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Vec operator+(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw DomainError("vec add: dimension mismatch");
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Vec operator-(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw DomainError("vec sub: dimension mismatch");
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Vec scaled(const Vec& v, const FieldScalar& s) {
  Vec r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = v[i] * s;
  return r;
}

Vec negated(const Vec& v) {
  Vec r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = -v[i];
  return r;
}

Vec reflect_vec(const Vec& r, const Vec& v) {
  // v - 2 (v|r)/(r|r) · r
  FieldScalar factor = FieldScalar(2) * dot(v, r) * dot(r, r).inverse();
  Vec out(v.size());
  for (size_t i = 0; i < v.size(); ++i) out[i] = v[i] - r[i] * factor;
  return out;
}

Vec unit_normalize(const Vec& v) {
  FieldScalar n2 = dot(v, v);
  if (n2.is_zero()) throw DomainError("cannot normalize the zero vector");
  if (!n2.is_rational())
    throw DomainError("cannot normalize: squared length " + n2.str() +
                      " is irrational");
  auto root = field_sqrt(n2.as_rational());
  if (!root)
    throw DomainError("cannot normalize: no square root of " + n2.str() +
                      " in the field");
  return scaled(v, root->inverse());
}

int vec_compare(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (size_t i = 0; i < a.size(); ++i) {
    int c = FieldScalar::compare(a[i], b[i]);
    if (c != 0) return c;
  }
  return 0;
}

std::string vec_str(const Vec& v) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += v[i].str();
  }
  return s + ")";
}

// --- blade combinatorics ---

int blade_product_sign(unsigned a, unsigned b) {
  // Count transpositions needed to merge the two ascending generator lists:
  // each generator of `a` hops over the lower-indexed generators of `b`.
  int swaps = 0;
  a >>= 1;
  while (a) {
    swaps += std::popcount(a & b);
    a >>= 1;
  }
  return (swaps & 1) ? -1 : 1;
}

std::string blade_name(unsigned mask) {
  if (mask == 0) return "1";
  std::string s = "e";
  for (int i = 0; i < 8; ++i)
    if (mask & (1u << i)) s += static_cast<char>('1' + i);
  return s;
}

// --- Multivector ---

Multivector::Multivector(int dim) : dim_(dim) {
  if (dim < 1 || dim > 8)
    throw DomainError("Clifford dimension must be between 1 and 8");
  c_.resize(1u << dim);
}

Multivector Multivector::scalar(int dim, FieldScalar s) {
  Multivector m(dim);
  m.c_[0] = std::move(s);
  return m;
}

Multivector Multivector::blade(int dim, unsigned mask, FieldScalar coef) {
  Multivector m(dim);
  if (mask >= m.size()) throw DomainError("blade mask out of range");
  m.c_[mask] = std::move(coef);
  return m;
}

Multivector Multivector::basis_vector(int dim, int i) {
  if (i < 1 || i > dim) throw DomainError("basis vector index out of range");
  return blade(dim, 1u << (i - 1), FieldScalar(1));
}

Multivector Multivector::from_vector(const Vec& v) {
  Multivector m(static_cast<int>(v.size()));
  for (size_t i = 0; i < v.size(); ++i) m.c_[1u << i] = v[i];
  return m;
}

bool Multivector::is_zero() const {
  for (const auto& x : c_)
    if (!x.is_zero()) return false;
  return true;
}

bool Multivector::is_even() const {
  for (unsigned i = 0; i < size(); ++i)
    if (std::popcount(i) % 2 == 1 && !c_[i].is_zero()) return false;
  return true;
}

bool Multivector::is_odd() const {
  for (unsigned i = 0; i < size(); ++i)
    if (std::popcount(i) % 2 == 0 && !c_[i].is_zero()) return false;
  return true;
}

bool Multivector::is_homogeneous(int k) const {
  for (unsigned i = 0; i < size(); ++i)
    if (std::popcount(i) != k && !c_[i].is_zero()) return false;
  return true;
}

Vec Multivector::vector_part() const {
  Vec v(dim_);
  for (int i = 0; i < dim_; ++i) v[i] = c_[1u << i];
  return v;
}

Multivector Multivector::grade_project(int k) const {
  if (k < 0 || k > dim_) throw DomainError("grade out of range");
  Multivector m(dim_);
  for (unsigned i = 0; i < size(); ++i)
    if (std::popcount(i) == k) m.c_[i] = c_[i];
  return m;
}

Multivector Multivector::reverse() const {
  Multivector m(dim_);
  for (unsigned i = 0; i < size(); ++i) {
    int k = std::popcount(i);
    m.c_[i] = (k % 4 == 2 || k % 4 == 3) ? -c_[i] : c_[i];
  }
  return m;
}

Multivector operator*(const Multivector& a, const Multivector& b) {
  if (a.dim_ != b.dim_) throw DomainError("product: dimension mismatch");
  // Sparse passes: group elements rarely touch more than a handful of blades.
  std::vector<unsigned> ia, ib;
  for (unsigned i = 0; i < a.size(); ++i)
    if (!a.c_[i].is_zero()) ia.push_back(i);
  for (unsigned i = 0; i < b.size(); ++i)
    if (!b.c_[i].is_zero()) ib.push_back(i);

  Multivector out(a.dim_);
  for (unsigned i : ia)
    for (unsigned j : ib) {
      FieldScalar term = a.c_[i] * b.c_[j];
      if (blade_product_sign(i, j) < 0)
        out.c_[i ^ j] -= term;
      else
        out.c_[i ^ j] += term;
    }
  return out;
}

Multivector operator+(const Multivector& a, const Multivector& b) {
  if (a.dim_ != b.dim_) throw DomainError("sum: dimension mismatch");
  Multivector out(a.dim_);
  for (unsigned i = 0; i < a.size(); ++i) out.c_[i] = a.c_[i] + b.c_[i];
  return out;
}

Multivector operator-(const Multivector& a, const Multivector& b) {
  if (a.dim_ != b.dim_) throw DomainError("difference: dimension mismatch");
  Multivector out(a.dim_);
  for (unsigned i = 0; i < a.size(); ++i) out.c_[i] = a.c_[i] - b.c_[i];
  return out;
}

Multivector Multivector::operator-() const {
  Multivector out(dim_);
  for (unsigned i = 0; i < size(); ++i) out.c_[i] = -c_[i];
  return out;
}

Multivector Multivector::scaled(const FieldScalar& s) const {
  Multivector out(dim_);
  for (unsigned i = 0; i < size(); ++i) out.c_[i] = c_[i] * s;
  return out;
}

bool operator==(const Multivector& a, const Multivector& b) {
  return a.dim_ == b.dim_ && a.c_ == b.c_;
}

int Multivector::compare(const Multivector& a, const Multivector& b) {
  if (a.dim_ != b.dim_) return a.dim_ < b.dim_ ? -1 : 1;
  for (unsigned i = 0; i < a.size(); ++i) {
    int c = FieldScalar::compare(a.c_[i], b.c_[i]);
    if (c != 0) return c;
  }
  return 0;
}

std::string Multivector::str() const {
  std::string out;
  for (unsigned i = 0; i < size(); ++i) {
    if (c_[i].is_zero()) continue;
    std::string cs = c_[i].str();
    bool multi = cs.find(" + ") != std::string::npos ||
                 cs.find(" - ") != std::string::npos;
    std::string term;
    if (i == 0) {
      term = cs;
    } else if (multi) {
      term = "(" + cs + ")" + blade_name(i);
    } else if (cs == "1") {
      term = blade_name(i);
    } else if (cs == "-1") {
      term = "-" + blade_name(i);
    } else {
      term = cs + blade_name(i);
    }
    if (out.empty()) {
      out = term;
    } else if (term[0] == '-') {
      out += " - " + term.substr(1);
    } else {
      out += " + " + term;
    }
  }
  return out.empty() ? "0" : out;
}

// --- reflections and versors ---

Multivector reflect(const Multivector& a, const Multivector& v) {
  if (!a.is_homogeneous(1) || !v.is_homogeneous(1))
    throw DomainError("reflect: arguments must be grade-1 vectors");
  Multivector prod = a * v * a;
  FieldScalar norm2 = (a * a).scalar_part();
  if (norm2.is_zero()) throw DomainError("reflect: null reflection vector");
  return -prod.scaled(norm2.inverse());
}

Versor Versor::from_multivector(const Multivector& a) {
  int parity;
  if (a.is_even() && !a.is_zero())
    parity = 0;
  else if (a.is_odd())
    parity = 1;
  else
    throw DomainError("versor must have pure even or pure odd grade");
  Multivector prod = a * a.reverse();
  if (!prod.is_homogeneous(0))
    throw DomainError("not a versor: A·reverse(A) is not scalar");
  FieldScalar s = prod.scalar_part();
  if (s != FieldScalar(1) && s != FieldScalar(-1))
    throw DomainError("versor is not normalized: A·reverse(A) = " + s.str());
  return Versor(a, parity);
}

Multivector Versor::sandwich(const Multivector& v) const {
  if (!v.is_homogeneous(1))
    throw DomainError("sandwich expects a grade-1 vector");
  Multivector out = a_.reverse() * v * a_;
  if (parity_ == 1) out = -out;
  if (!out.is_homogeneous(1))
    throw DomainError("sandwich output not grade 1; inconsistent versor");
  return out;
}

Vec Versor::sandwich(const Vec& v) const {
  return sandwich(Multivector::from_vector(v)).vector_part();
}

Multivector versor_sandwich(const Multivector& A, const Multivector& v) {
  return Versor::from_multivector(A).sandwich(v);
}

}  // namespace versor
