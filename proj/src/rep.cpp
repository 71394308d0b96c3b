#include "versor/rep.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <set>

#include "versor/errors.hpp"
#include "versor/induction.hpp"

namespace versor {

// --- structural representations ---

namespace {

void require_unit_spinor(const Multivector& R) {
  if (R.dim() != 3) throw DomainError("spinor matrices are defined in Cl(3)");
  if (!R.is_even()) throw DomainError("not a spinor (odd content): " + R.str());
  Multivector n = R * R.reverse();
  if (!n.is_homogeneous(0) || n.scalar_part() != FieldScalar(1))
    throw DomainError("spinor is not unit-normalized: " + R.str());
}

FieldScalar det3(const FMatrix& m) {
  auto a = [&](size_t i, size_t j) { return m.at(i, j); };
  return a(0, 0) * (a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1)) -
         a(0, 1) * (a(1, 0) * a(2, 2) - a(1, 2) * a(2, 0)) +
         a(0, 2) * (a(1, 0) * a(2, 1) - a(1, 1) * a(2, 0));
}

}  // namespace

FMatrix spinor_to_so3(const Multivector& R) {
  require_unit_spinor(R);
  FMatrix m(3, 3);
  for (int j = 0; j < 3; ++j) {
    Multivector img = R.reverse() * Multivector::basis_vector(3, j + 1) * R;
    if (!img.is_homogeneous(1))
      throw DomainError("sandwich image not a vector; inconsistent spinor");
    m.set_col(j, img.vector_part());
  }
  if (det3(m) != FieldScalar(1))
    throw DomainError("sandwich matrix is not a rotation");
  return m;
}

FMatrix contragredient_action(const Multivector& R) {
  return spinor_to_so3(R.reverse());
}

FieldScalar so3_character(const Multivector& R) {
  require_unit_spinor(R);
  Vec a = spinor_to_vector(R);
  return FieldScalar(3) * a[0] * a[0] - a[1] * a[1] - a[2] * a[2] -
         a[3] * a[3];
}

FMatrix left_mult_matrix(const Multivector& R) {
  require_unit_spinor(R);
  FMatrix m(4, 4);
  for (int j = 0; j < 4; ++j) {
    Vec basis(4);
    basis[j] = FieldScalar(1);
    m.set_col(j, spinor_to_vector(R * vector_to_spinor(basis)));
  }
  return m;
}

MatrixRep build_rep(const VersorGroup& g, RepKind kind) {
  using Kind = VersorGroup::Kind;
  auto need = [&](bool ok, const char* what) {
    if (!ok) throw DomainError(std::string("this representation needs ") +
                               what + " group");
  };
  MatrixRep rep;
  rep.kind = kind;
  switch (kind) {
    case RepKind::trivial:
      rep.degree = 1;
      break;
    case RepKind::parity:
      need(g.kind() == Kind::pin, "a pin");
      rep.degree = 1;
      break;
    case RepKind::so3:
      need(g.kind() == Kind::spin || g.kind() == Kind::chiral,
           "a spin or rotation-quotient");
      rep.degree = 3;
      break;
    case RepKind::leftmult:
      need(g.kind() == Kind::spin, "a spin");
      rep.degree = 4;
      break;
  }

  rep.images.reserve(g.size());
  for (const Multivector& e : g.elements()) {
    switch (kind) {
      case RepKind::trivial:
        rep.images.push_back(FMatrix::identity(1));
        break;
      case RepKind::parity: {
        FMatrix m(1, 1);
        m.at(0, 0) = FieldScalar(e.is_even() ? 1 : -1);
        rep.images.push_back(std::move(m));
        break;
      }
      case RepKind::so3:
        // The direct orientation x ↦ R·x·R̃ makes the images a homomorphism;
        // spinor_to_so3 keeps the sandwich-table orientation x ↦ R̃·x·R
        // (its transpose), with the same trace.
        rep.images.push_back(contragredient_action(e));
        break;
      case RepKind::leftmult:
        rep.images.push_back(left_mult_matrix(e));
        break;
    }
  }

  // Character per class, validated constant across each class.
  const auto& classes = g.conjugacy_classes();
  rep.character.reserve(classes.size());
  for (const auto& cls : classes) {
    FieldScalar chi = rep.images[cls[0]].trace();
    for (size_t e : cls)
      if (rep.images[e].trace() != chi)
        throw DomainError("character not constant on a conjugacy class");
    rep.character.push_back(chi);
  }

  // Homomorphism spot check on deterministic pairs.
  size_t state = 99991, n = g.size();
  for (int c = 0; c < 50; ++c) {
    state = state * 6364136223846793005ull + 1442695040888963407ull;
    size_t a = (state >> 17) % n;
    state = state * 6364136223846793005ull + 1442695040888963407ull;
    size_t b = (state >> 17) % n;
    if (rep.images[g.product(a, b)] != rep.images[a] * rep.images[b])
      throw DomainError("matrix images fail the homomorphism property");
  }
  return rep;
}

FieldScalar rep_norm_squared(const MatrixRep& rep, const VersorGroup& g) {
  const auto& classes = g.conjugacy_classes();
  if (rep.character.size() != classes.size())
    throw DomainError("character does not match the group's class count");
  FieldScalar sum;
  for (size_t k = 0; k < classes.size(); ++k)
    sum += FieldScalar(static_cast<long>(classes[k].size())) *
           rep.character[k] * rep.character[k];
  return sum * FieldScalar(Rational(1, static_cast<long>(g.size())));
}

// --- character tables (class-algebra method) ---

namespace {

constexpr mp_bitcnt_t kPrec = 256;

mpf_class mpf_of(long v) { return mpf_class(v, kPrec); }

mpf_class mpf_of(const Rational& r) {
  mpf_class num(r.num(), kPrec), den(r.den(), kPrec);
  return mpf_class(num / den, kPrec);
}

const mpf_class& sqrt2_f() {
  static const mpf_class v = [] {
    mpf_class x(2, kPrec);
    return mpf_class(sqrt(x), kPrec);
  }();
  return v;
}

const mpf_class& tau_f() {
  static const mpf_class v = [] {
    mpf_class x(5, kPrec);
    return mpf_class((1 + sqrt(x)) / 2, kPrec);
  }();
  return v;
}

mpf_class field_to_mpf(const FieldScalar& x) {
  mpf_class v(0, kPrec);
  v = mpf_of(x.coeff(0)) + mpf_of(x.coeff(1)) * sqrt2_f() +
      mpf_of(x.coeff(2)) * tau_f() +
      mpf_of(x.coeff(3)) * sqrt2_f() * tau_f();
  return v;
}

struct Cx {
  mpf_class re{0, kPrec}, im{0, kPrec};
};

Cx operator+(const Cx& a, const Cx& b) {
  Cx r;
  r.re = a.re + b.re;
  r.im = a.im + b.im;
  return r;
}
Cx operator-(const Cx& a, const Cx& b) {
  Cx r;
  r.re = a.re - b.re;
  r.im = a.im - b.im;
  return r;
}
Cx operator*(const Cx& a, const Cx& b) {
  Cx r;
  r.re = a.re * b.re - a.im * b.im;
  r.im = a.re * b.im + a.im * b.re;
  return r;
}
Cx conj(const Cx& a) {
  Cx r;
  r.re = a.re;
  r.im = -a.im;
  return r;
}
mpf_class norm2(const Cx& a) {
  mpf_class r(0, kPrec);
  r = a.re * a.re + a.im * a.im;
  return r;
}
Cx operator/(const Cx& a, const Cx& b) {
  mpf_class n = norm2(b);
  Cx r;
  r.re = (a.re * b.re + a.im * b.im) / n;
  r.im = (a.im * b.re - a.re * b.im) / n;
  return r;
}
mpf_class abs_approx(const Cx& a) {
  mpf_class r(0, kPrec);
  r = abs(a.re) + abs(a.im);
  return r;
}

mpf_class small(long exp10) {
  mpf_class t(10, kPrec);
  mpf_class r(1, kPrec);
  for (long i = 0; i < exp10; ++i) r /= t;
  return r;
}

// Monic polynomial roots by Durand–Kerner at 256-bit precision.
// coeffs are a0..a_{n-1} with x^n implicit. Empty result means no
// convergence (caller retries with a different mix).
std::vector<Cx> monic_roots(const std::vector<Rational>& coeffs) {
  size_t n = coeffs.size();
  std::vector<mpf_class> c;
  mpf_class bound(1, kPrec);
  for (const Rational& r : coeffs) {
    c.push_back(mpf_of(r));
    mpf_class a = abs(c.back());
    if (a > bound) bound = a;
  }
  bound += 1;

  std::vector<Cx> z(n);
  // seed points spread on a spiral of radius `bound`
  Cx w;
  w.re = mpf_of(Rational(2, 5));
  w.im = mpf_of(Rational(9, 10));
  Cx acc;
  acc.re = mpf_class(1, kPrec);
  for (size_t m = 0; m < n; ++m) {
    acc = acc * w;
    z[m] = acc;
    z[m].re *= bound;
    z[m].im *= bound;
  }

  auto eval = [&](const Cx& x) {
    Cx v;
    v.re = mpf_class(1, kPrec);
    for (size_t i = n; i-- > 0;) {
      v = v * x;
      v.re += c[i];
    }
    return v;
  };

  mpf_class eps = small(65);
  for (int iter = 0; iter < 500; ++iter) {
    mpf_class largest(0, kPrec);
    for (size_t m = 0; m < n; ++m) {
      Cx den;
      den.re = mpf_class(1, kPrec);
      for (size_t l = 0; l < n; ++l)
        if (l != m) den = den * (z[m] - z[l]);
      if (norm2(den) == 0) return {};
      Cx delta = eval(z[m]) / den;
      z[m] = z[m] - delta;
      mpf_class d = abs_approx(delta);
      if (d > largest) largest = d;
    }
    if (largest < eps) return z;
  }
  return {};
}

// Exact characteristic polynomial of a rational matrix
// (Faddeev–LeVerrier); returns a0..a_{n-1}, monic x^n implied.
std::vector<Rational> char_poly(const std::vector<std::vector<Rational>>& M) {
  size_t n = M.size();
  auto mul = [n](const std::vector<std::vector<Rational>>& A,
                 const std::vector<std::vector<Rational>>& B) {
    std::vector<std::vector<Rational>> C(n, std::vector<Rational>(n));
    for (size_t i = 0; i < n; ++i)
      for (size_t k = 0; k < n; ++k) {
        if (A[i][k].is_zero()) continue;
        for (size_t j = 0; j < n; ++j) C[i][j] += A[i][k] * B[k][j];
      }
    return C;
  };
  auto trace = [n](const std::vector<std::vector<Rational>>& A) {
    Rational t;
    for (size_t i = 0; i < n; ++i) t += A[i][i];
    return t;
  };

  std::vector<Rational> coef(n + 1);
  coef[n] = 1;
  std::vector<std::vector<Rational>> N = M;
  for (size_t k = 1; k <= n; ++k) {
    if (k > 1) {
      for (size_t i = 0; i < n; ++i) N[i][i] += coef[n - k + 1];
      N = mul(M, N);
    }
    coef[n - k] = -(trace(N) / Rational(static_cast<long>(k)));
  }
  coef.pop_back();
  return coef;
}

// Null vector of (M − λI) via complex Gaussian elimination; empty when the
// nullity is not exactly one.
std::vector<Cx> null_vector(const std::vector<std::vector<long>>& M,
                            const Cx& lambda) {
  size_t n = M.size();
  std::vector<std::vector<Cx>> A(n, std::vector<Cx>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      A[i][j].re = mpf_of(M[i][j]);
      if (i == j) A[i][j] = A[i][j] - lambda;
    }

  mpf_class zero_thresh = small(35);
  std::vector<long> pivot_row_of_col(n, -1);
  size_t r = 0;
  for (size_t c = 0; c < n && r < n; ++c) {
    size_t best = r;
    mpf_class best_mag = abs_approx(A[r][c]);
    for (size_t i = r + 1; i < n; ++i) {
      mpf_class mag = abs_approx(A[i][c]);
      if (mag > best_mag) {
        best = i;
        best_mag = mag;
      }
    }
    if (best_mag < zero_thresh) continue;  // free column
    std::swap(A[r], A[best]);
    Cx inv_pivot;
    inv_pivot.re = mpf_class(1, kPrec);
    inv_pivot = inv_pivot / A[r][c];
    for (size_t j = 0; j < n; ++j) A[r][j] = A[r][j] * inv_pivot;
    for (size_t i = 0; i < n; ++i) {
      if (i == r || (abs_approx(A[i][c]) < zero_thresh)) continue;
      Cx f = A[i][c];
      for (size_t j = 0; j < n; ++j) A[i][j] = A[i][j] - f * A[r][j];
    }
    pivot_row_of_col[c] = static_cast<long>(r);
    ++r;
  }
  if (r != n - 1) return {};
  size_t free_col = 0;
  while (free_col < n && pivot_row_of_col[free_col] >= 0) ++free_col;
  std::vector<Cx> x(n);
  x[free_col].re = mpf_class(1, kPrec);
  for (size_t c = 0; c < n; ++c)
    if (pivot_row_of_col[c] >= 0)
      x[c] = Cx{} - A[static_cast<size_t>(pivot_row_of_col[c])][free_col];
  return x;
}

// Exact recognition against (a + b·τ)/2 and (a + b·√2)/2.
bool recognize_real(const mpf_class& x, FieldScalar& out) {
  const mpf_class tol = small(40);
  struct Basis {
    const mpf_class& num;
    FieldScalar sym;
  };
  const Basis bases[2] = {{tau_f(), FieldScalar::tau()},
                          {sqrt2_f(), FieldScalar::sqrt2()}};
  for (const Basis& basis : bases) {
    for (long mag = 0; mag <= 24; ++mag) {
      for (long b : (mag == 0 ? std::vector<long>{0}
                              : std::vector<long>{mag, -mag})) {
        mpf_class rest(0, kPrec);
        rest = 2 * x - b * basis.num;
        mpf_class rounded(0, kPrec);
        mpf_floor(rounded.get_mpf_t(), mpf_class(rest + 0.5).get_mpf_t());
        if (abs(rounded) > 64) continue;
        if (abs(rest - rounded) < tol) {
          long a = static_cast<long>(rounded.get_d());
          out = FieldScalar(Rational(a, 2)) +
                basis.sym * FieldScalar(Rational(b, 2));
          return true;
        }
      }
    }
  }
  return false;
}

struct BurnsideFailure {};  // internal retry signal

CharacterTable burnside_attempt(const VersorGroup& g, size_t seed) {
  const auto& classes = g.conjugacy_classes();
  const size_t k = classes.size();
  const size_t n = g.size();
  const auto& t = g.cayley_table();

  CharacterTable table;
  table.group_order = n;
  for (const auto& cls : classes) {
    table.class_sizes.push_back(cls.size());
    table.class_reps.push_back(cls[0]);
    table.class_orders.push_back(g.element_order(cls[0]));
  }
  const size_t id_class = g.class_of(g.identity_index());

  // Class-algebra structure constants a_{ijk}: with z a fixed representative
  // of class k, count x ∈ C_i with x⁻¹z ∈ C_j.
  std::vector<std::vector<std::vector<long>>> A(
      k, std::vector<std::vector<long>>(k, std::vector<long>(k, 0)));
  for (size_t i = 0; i < k; ++i)
    for (size_t kk = 0; kk < k; ++kk) {
      size_t z = classes[kk][0];
      for (size_t x : classes[i]) {
        size_t j = g.class_of(t[g.inverse(x)][z]);
        ++A[i][j][kk];
      }
    }

  // Random integer mix of the class matrices; its eigenvectors are the
  // simultaneous eigenvectors when the eigenvalues separate.
  size_t state = seed * 2654435761u + 11;
  auto rnd = [&state] {
    state = state * 6364136223846793005ull + 1442695040888963407ull;
    return static_cast<long>((state >> 33) % 37) + 1;
  };
  std::vector<std::vector<long>> M(k, std::vector<long>(k, 0));
  for (size_t i = 0; i < k; ++i) {
    long c = rnd();
    for (size_t j = 0; j < k; ++j)
      for (size_t kk = 0; kk < k; ++kk) M[j][kk] += c * A[i][j][kk];
  }

  std::vector<std::vector<Rational>> Mq(k, std::vector<Rational>(k));
  for (size_t i = 0; i < k; ++i)
    for (size_t j = 0; j < k; ++j) Mq[i][j] = Rational(M[i][j]);

  std::vector<Cx> lambda = monic_roots(char_poly(Mq));
  if (lambda.empty()) throw BurnsideFailure{};
  // Eigenvalues must be simple for the eigenvectors to separate irreps.
  mpf_class gap = small(25);
  for (size_t a = 0; a < k; ++a)
    for (size_t b = a + 1; b < k; ++b)
      if (abs_approx(lambda[a] - lambda[b]) < gap) throw BurnsideFailure{};

  // One irrep per eigenvalue: u_j = (|C_j|/d)·χ_j, normalized by u = 1 at
  // the identity class; the degree follows from row orthogonality.
  mpf_class sqrt_n(n, kPrec);
  std::vector<std::pair<int, std::vector<Cx>>> rows;  // (degree, χ entries)
  for (size_t m = 0; m < k; ++m) {
    std::vector<Cx> u = null_vector(M, lambda[m]);
    if (u.empty()) throw BurnsideFailure{};
    if (abs_approx(u[id_class]) < small(30)) throw BurnsideFailure{};
    for (size_t j = 0; j < k; ++j)
      if (j != id_class) u[j] = u[j] / u[id_class];
    u[id_class].re = mpf_class(1, kPrec);
    u[id_class].im = mpf_class(0, kPrec);

    mpf_class s(0, kPrec);
    for (size_t j = 0; j < k; ++j)
      s += norm2(u[j]) / mpf_of(static_cast<long>(classes[j].size()));
    // d = sqrt(|G| / Σ |u_j|²/|C_j|)
    mpf_class d(0, kPrec);
    d = sqrt(mpf_class(mpf_of(static_cast<long>(n)) / s, kPrec));
    mpf_class d_round(0, kPrec);
    mpf_floor(d_round.get_mpf_t(), mpf_class(d + 0.5).get_mpf_t());
    if (abs(d - d_round) > small(20)) throw BurnsideFailure{};
    int degree = static_cast<int>(d_round.get_d());
    if (degree < 1) throw BurnsideFailure{};

    std::vector<Cx> chi(k);
    for (size_t j = 0; j < k; ++j) {
      mpf_class scale(0, kPrec);
      scale = mpf_of(degree) / mpf_of(static_cast<long>(classes[j].size()));
      chi[j].re = u[j].re * scale;
      chi[j].im = u[j].im * scale;
    }
    rows.emplace_back(degree, std::move(chi));
  }

  // Σ d² = |G| is a hard consistency requirement.
  long dd = 0;
  for (const auto& row : rows) dd += static_cast<long>(row.first) * row.first;
  if (dd != static_cast<long>(n)) throw BurnsideFailure{};

  // Orthogonality residuals (rows and columns) at working precision.
  mpf_class worst(0, kPrec);
  for (size_t a = 0; a < k; ++a)
    for (size_t b = 0; b < k; ++b) {
      Cx s;
      for (size_t j = 0; j < k; ++j) {
        Cx term = rows[a].second[j] * conj(rows[b].second[j]);
        term.re *= mpf_of(static_cast<long>(classes[j].size()));
        term.im *= mpf_of(static_cast<long>(classes[j].size()));
        s = s + term;
      }
      if (a == b) s.re -= mpf_of(static_cast<long>(n));
      mpf_class r = abs_approx(s);
      if (r > worst) worst = r;
    }
  if (worst > small(25)) throw BurnsideFailure{};

  // Deterministic presentation: sort by degree, then by the numeric
  // fingerprint of the entries.
  auto fingerprint = [&](const std::vector<Cx>& chi) {
    std::string s;
    for (const Cx& c : chi) {
      mp_exp_t e;
      std::string digits_re = c.re.get_str(e, 10, 36);
      s += (std::to_string(static_cast<long>(e)) + ":" + digits_re + "|");
      std::string digits_im = c.im.get_str(e, 10, 36);
      s += (std::to_string(static_cast<long>(e)) + ":" + digits_im + ";");
    }
    return s;
  };
  std::sort(rows.begin(), rows.end(), [&](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first < b.first;
    return fingerprint(a.second) < fingerprint(b.second);
  });

  for (auto& [degree, chi] : rows) {
    table.degrees.push_back(degree);
    std::vector<CharEntry> out(k);
    for (size_t j = 0; j < k; ++j) {
      out[j].re = chi[j].re;
      out[j].im = chi[j].im;
      if (abs(chi[j].im) < small(40)) {
        FieldScalar v;
        if (recognize_real(chi[j].re, v)) {
          out[j].exact = true;
          out[j].value = v;
        }
      }
    }
    table.chi.push_back(std::move(out));
  }
  table.orthogonality_residual = worst.get_d();
  return table;
}

}  // namespace

CharacterTable character_table(const VersorGroup& g) {
  for (size_t seed = 1; seed <= 12; ++seed) {
    try {
      return burnside_attempt(g, seed);
    } catch (const BurnsideFailure&) {
      continue;
    }
  }
  throw DomainError(
      "character table eigenvector separation failed after 12 remixes");
}

std::string CharEntry::str(unsigned digits) const {
  if (exact) return value.str();
  char buf[80];
  double i = im.get_d();
  int d = static_cast<int>(digits);
  if (std::abs(i) < 1e-12) {
    std::snprintf(buf, sizeof buf, "%.*f", d, re.get_d());
  } else {
    std::snprintf(buf, sizeof buf, "%.*f%+.*fi", d, re.get_d(), d, i);
  }
  return buf;
}

// --- McKay graphs ---

McKayGraph mckay_graph(const VersorGroup& spin, const CharacterTable& ct) {
  if (spin.kind() != VersorGroup::Kind::spin)
    throw DomainError("McKay graph is built over a spin (binary) group");
  const size_t k = ct.class_sizes.size();

  // Natural spinor character: twice the scalar part on class reps, exact.
  std::vector<mpf_class> natural;
  for (size_t j = 0; j < k; ++j) {
    FieldScalar a0 = spin.element(ct.class_reps[j]).scalar_part();
    natural.push_back(field_to_mpf(FieldScalar(2) * a0));
  }

  mpf_class tol = small(30);
  size_t spinor = k;
  for (size_t i = 0; i < k; ++i) {
    if (ct.degrees[i] != 2) continue;
    bool all = true;
    for (size_t j = 0; j < k && all; ++j)
      all = abs(ct.chi[i][j].re - natural[j]) < tol &&
            abs(ct.chi[i][j].im) < tol;
    if (all) {
      spinor = i;
      break;
    }
  }
  if (spinor == k)
    throw DomainError("no degree-2 irrep matches the natural spinor "
                      "character; cannot anchor the McKay graph");

  McKayGraph graph;
  graph.degrees = ct.degrees;
  graph.spinor_node = spinor;
  graph.adj.assign(k, std::vector<int>(k, 0));
  mpf_class order_f = mpf_of(static_cast<long>(ct.group_order));
  auto as_cx = [](const CharEntry& e) {
    Cx c;
    c.re = e.re;
    c.im = e.im;
    return c;
  };
  for (size_t a = 0; a < k; ++a)
    for (size_t b = 0; b < k; ++b) {
      Cx s;
      for (size_t j = 0; j < k; ++j) {
        Cx term = as_cx(ct.chi[spinor][j]) * as_cx(ct.chi[a][j]) *
                  conj(as_cx(ct.chi[b][j]));
        term.re *= mpf_of(static_cast<long>(ct.class_sizes[j]));
        term.im *= mpf_of(static_cast<long>(ct.class_sizes[j]));
        s = s + term;
      }
      s.re /= order_f;
      s.im /= order_f;
      mpf_class rounded(0, kPrec);
      mpf_floor(rounded.get_mpf_t(), mpf_class(s.re + 0.5).get_mpf_t());
      if (abs(s.re - rounded) > small(25) || abs(s.im) > small(25))
        throw DomainError("tensor multiplicity did not land on an integer");
      graph.adj[a][b] = static_cast<int>(rounded.get_d());
    }

  for (size_t a = 0; a < k; ++a)
    for (size_t b = 0; b < k; ++b)
      if (graph.adj[a][b] != graph.adj[b][a])
        throw DomainError("McKay adjacency is not symmetric");
  return graph;
}

const McKayGraph& affine_diagram(const std::string& name) {
  static const std::map<std::string, McKayGraph> diagrams = [] {
    std::map<std::string, McKayGraph> d;
    auto build = [](std::string nm, std::vector<int> labels,
                    std::vector<std::pair<int, int>> edges) {
      McKayGraph g;
      g.name = std::move(nm);
      g.degrees = std::move(labels);
      g.adj.assign(g.degrees.size(), std::vector<int>(g.degrees.size(), 0));
      for (auto [a, b] : edges) g.adj[a][b] = g.adj[b][a] = 1;
      return g;
    };
    // labels are the affine marks = irrep dimensions under the
    // correspondence; node 0 conventions are arbitrary.
    d["D4"] = build("D4", {2, 1, 1, 1, 1},
                    {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
    d["E6"] = build("E6", {3, 2, 1, 2, 1, 2, 1},
                    {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}, {5, 6}});
    d["E7"] = build("E7", {1, 2, 3, 4, 3, 2, 1, 2},
                    {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {3, 7}});
    d["E8"] = build("E8", {1, 2, 3, 4, 5, 6, 4, 2, 3},
                    {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7},
                     {5, 8}});
    return d;
  }();
  auto it = diagrams.find(name);
  if (it == diagrams.end())
    throw DomainError("no stored affine diagram named " + name);
  return it->second;
}

namespace {

bool iso_backtrack(const McKayGraph& a, const McKayGraph& b,
                   std::vector<int>& map, std::vector<char>& used,
                   size_t next) {
  size_t n = a.degrees.size();
  if (next == n) return true;
  for (size_t cand = 0; cand < n; ++cand) {
    if (used[cand] || b.degrees[cand] != a.degrees[next]) continue;
    bool ok = true;
    for (size_t prev = 0; prev < next && ok; ++prev)
      ok = a.adj[next][prev] == b.adj[cand][map[prev]];
    if (!ok) continue;
    map[next] = static_cast<int>(cand);
    used[cand] = 1;
    if (iso_backtrack(a, b, map, used, next + 1)) return true;
    used[cand] = 0;
  }
  return false;
}

}  // namespace

bool mckay_isomorphic(const McKayGraph& a, const McKayGraph& b) {
  if (a.degrees.size() != b.degrees.size()) return false;
  std::multiset<int> la(a.degrees.begin(), a.degrees.end()),
      lb(b.degrees.begin(), b.degrees.end());
  if (la != lb) return false;
  std::vector<int> map(a.degrees.size(), -1);
  std::vector<char> used(a.degrees.size(), 0);
  return iso_backtrack(a, b, map, used, 0);
}

std::string mckay_identify(const McKayGraph& g) {
  for (const char* name : {"D4", "E6", "E7", "E8"})
    if (mckay_isomorphic(g, affine_diagram(name))) return name;
  return "unknown";
}

}  // namespace versor
