#include "versor/rootsystem.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <map>
#include <set>

#include "versor/errors.hpp"

namespace versor {

// --- diagrams ---

CoxeterDiagram CoxeterDiagram::unconnected(int rank) {
  CoxeterDiagram d;
  d.rank = rank;
  d.m.assign(rank, std::vector<int>(rank, 2));
  for (int i = 0; i < rank; ++i) d.m[i][i] = 1;
  return d;
}

std::string CoxeterDiagram::str() const {
  std::string s = "rank=" + std::to_string(rank);
  std::string edges;
  for (int i = 0; i < rank; ++i)
    for (int j = i + 1; j < rank; ++j)
      if (m[i][j] > 2) {
        if (!edges.empty()) edges += ", ";
        edges += std::to_string(i + 1) + "-" + std::to_string(j + 1) + ":" +
                 std::to_string(m[i][j]);
      }
  if (!edges.empty()) s += "; edges: " + edges;
  return s;
}

std::string family_name(Family f) {
  switch (f) {
    case Family::A1x3: return "A1^3";
    case Family::A3: return "A3";
    case Family::B3: return "B3";
    case Family::H3: return "H3";
    case Family::E8: return "E8";
  }
  throw DomainError("unreachable family");
}

std::optional<Family> family_by_name(const std::string& name) {
  for (Family f : {Family::A1x3, Family::A3, Family::B3, Family::H3,
                   Family::E8})
    if (family_name(f) == name) return f;
  return std::nullopt;
}

CoxeterDiagram family_diagram(Family f) {
  auto chain = [](int rank, std::vector<int> labels) {
    CoxeterDiagram d = CoxeterDiagram::unconnected(rank);
    for (int i = 0; i + 1 < rank; ++i)
      d.m[i][i + 1] = d.m[i + 1][i] = labels[i];
    return d;
  };
  switch (f) {
    case Family::A1x3:
      return CoxeterDiagram::unconnected(3);
    case Family::A3:
      return chain(3, {3, 3});
    case Family::B3:
      return chain(3, {3, 4});
    case Family::H3:
      // With the stored coordinates the 5-label sits on the (2,3) pair:
      // (α1|α2) = −1/2 and (α2|α3) = −τ/2.
      return chain(3, {3, 5});
    case Family::E8: {
      CoxeterDiagram d = chain(7, {3, 3, 3, 3, 3, 3});
      d.rank = 8;
      d.m.assign(8, std::vector<int>(8, 2));
      for (int i = 0; i < 8; ++i) d.m[i][i] = 1;
      for (int i = 0; i + 1 < 7; ++i) d.m[i][i + 1] = d.m[i + 1][i] = 3;
      d.m[4][7] = d.m[7][4] = 3;  // branch node attached to node 5
      return d;
    }
  }
  throw DomainError("unreachable family");
}

std::vector<Vec> simple_roots(Family f) {
  const FieldScalar one(1), zero, half(Rational(1, 2)), tau = FieldScalar::tau();
  switch (f) {
    case Family::A1x3:
      return {{one, zero, zero}, {zero, one, zero}, {zero, zero, one}};
    case Family::A3:
      return {{one, -one, zero}, {zero, one, -one}, {-one, -one, zero}};
    case Family::B3:
      return {{one, -one, zero}, {zero, one, -one}, {zero, zero, one}};
    case Family::H3: {
      // α2 = −(1/2)((τ−1)e1 + e2 + τe3); unit length since τ² = τ+1.
      FieldScalar tm1 = tau - one;
      return {{zero, one, zero},
              {-(half * tm1), -half, -(half * tau)},
              {zero, zero, one}};
    }
    case Family::E8: {
      // Chain α1..α7 with α8 attached at α5; folding pairs (1,7), (2,6),
      // (3,5), (4,8) come out mutually orthogonal.
      auto e = [&](int i, int j, FieldScalar ci, FieldScalar cj) {
        Vec v(8);
        v[i - 1] = std::move(ci);
        v[j - 1] = std::move(cj);
        return v;
      };
      Vec a7(8, -half);
      a7[0] = half;
      a7[7] = half;
      return {e(7, 6, one, -one), e(6, 5, one, -one), e(5, 4, one, -one),
              e(4, 3, one, -one), e(3, 2, one, -one), e(2, 1, one, -one),
              a7,                 e(1, 2, one, one)};
    }
  }
  throw DomainError("unreachable family");
}

std::optional<Family> match_family(const CoxeterDiagram& d) {
  for (Family f : {Family::A1x3, Family::A3, Family::B3, Family::H3,
                   Family::E8}) {
    CoxeterDiagram ref = family_diagram(f);
    if (ref.rank != d.rank) continue;
    // cheap filter: multiset of off-diagonal labels must agree
    std::multiset<int> la, lb;
    for (int i = 0; i < d.rank; ++i)
      for (int j = i + 1; j < d.rank; ++j) {
        la.insert(d.m[i][j]);
        lb.insert(ref.m[i][j]);
      }
    if (la != lb) continue;
    std::vector<int> p(d.rank);
    for (int i = 0; i < d.rank; ++i) p[i] = i;
    do {
      bool ok = true;
      for (int i = 0; i < d.rank && ok; ++i)
        for (int j = i + 1; j < d.rank && ok; ++j)
          ok = d.m[i][j] == ref.m[p[i]][p[j]];
      if (ok) return f;
    } while (std::next_permutation(p.begin(), p.end()));
  }
  return std::nullopt;
}

// --- diagram DSL ---

namespace {

struct Cursor {
  const std::string& s;
  size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
      ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= s.size();
  }
  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!eat(c))
      throw ParseError(std::string("expected '") + c + "'", pos);
  }
  long integer() {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
      ++pos;
    if (pos == start) throw ParseError("expected an integer", start);
    return std::stol(s.substr(start, pos - start));
  }
  std::string word() {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() &&
           (std::isalnum(static_cast<unsigned char>(s[pos])) ||
            s[pos] == '^' || s[pos] == '_'))
      ++pos;
    return s.substr(start, pos - start);
  }
};

}  // namespace

CoxeterDiagram parse_diagram(const std::string& text) {
  Cursor c{text};
  if (c.done()) throw ParseError("empty diagram", 0);
  size_t word_pos = c.pos;
  c.skip_ws();
  word_pos = c.pos;
  std::string head = c.word();
  if (head.empty()) throw ParseError("expected diagram name or 'rank='", c.pos);

  if (head != "rank") {
    if (!c.done())
      throw ParseError("unexpected trailing input after diagram name", c.pos);
    auto fam = family_by_name(head);
    if (!fam)
      throw ParseError("unknown diagram: " + head, word_pos);
    return family_diagram(*fam);
  }

  c.expect('=');
  size_t rank_pos = c.pos;
  long rank = c.integer();
  if (rank < 1 || rank > 8)
    throw ParseError("rank must be between 1 and 8", rank_pos);
  CoxeterDiagram d = CoxeterDiagram::unconnected(static_cast<int>(rank));
  if (c.done()) return d;

  c.expect(';');
  size_t kw_pos = c.pos;
  if (c.word() != "edges") throw ParseError("expected 'edges'", kw_pos);
  c.expect(':');
  while (true) {
    size_t epos = c.pos;
    long i = c.integer();
    c.expect('-');
    long j = c.integer();
    c.expect(':');
    size_t mpos = c.pos;
    long m = c.integer();
    if (i < 1 || i > rank || j < 1 || j > rank)
      throw ParseError("edge node out of range", epos);
    if (i == j) throw ParseError("edge endpoints must differ", epos);
    if (m < 2) throw ParseError("edge label must be at least 2", mpos);
    if (d.m[i - 1][j - 1] != 2) throw ParseError("duplicate edge", epos);
    d.m[i - 1][j - 1] = d.m[j - 1][i - 1] = static_cast<int>(m);
    if (!c.eat(',')) break;
  }
  if (!c.done()) throw ParseError("unexpected trailing input", c.pos);
  return d;
}

// --- linear algebra helpers (exact Gaussian elimination) ---

namespace {

// Reduces rows in place to echelon form; returns the rank.
size_t echelon_rank(std::vector<Vec>& rows) {
  if (rows.empty()) return 0;
  size_t cols = rows[0].size(), r = 0;
  for (size_t c = 0; c < cols && r < rows.size(); ++c) {
    size_t pivot = r;
    while (pivot < rows.size() && rows[pivot][c].is_zero()) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[r], rows[pivot]);
    FieldScalar inv = rows[r][c].inverse();
    for (size_t cc = c; cc < cols; ++cc) rows[r][cc] = rows[r][cc] * inv;
    for (size_t rr = 0; rr < rows.size(); ++rr) {
      if (rr == r || rows[rr][c].is_zero()) continue;
      FieldScalar f = rows[rr][c];
      for (size_t cc = c; cc < cols; ++cc)
        rows[rr][cc] = rows[rr][cc] - f * rows[r][cc];
    }
    ++r;
  }
  return r;
}

// Inverse of a square matrix given as column vectors; DomainError if singular.
std::vector<Vec> invert_columns(const std::vector<Vec>& cols) {
  size_t n = cols.size();
  std::vector<Vec> aug(n, Vec(2 * n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) aug[i][j] = cols[j][i];
  for (size_t i = 0; i < n; ++i) aug[i][n + i] = FieldScalar(1);
  if (echelon_rank(aug) < n) throw DomainError("matrix not invertible");
  std::vector<Vec> inv(n, Vec(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
  return inv;
}

Vec mat_vec(const std::vector<Vec>& rows, const Vec& v) {
  Vec out(rows.size());
  for (size_t i = 0; i < rows.size(); ++i) out[i] = dot(rows[i], v);
  return out;
}

}  // namespace

FMatrix cartan_matrix(const std::vector<Vec>& simple) {
  if (simple.empty()) throw DomainError("no simple roots given");
  size_t n = simple.size();
  for (const Vec& v : simple)
    if (v.size() != simple[0].size())
      throw DomainError("simple roots of mixed dimension");
  std::vector<Vec> rows = simple;
  if (echelon_rank(rows) < n)
    throw DomainError("simple roots are linearly dependent");
  FMatrix A(n, n);
  for (size_t j = 0; j < n; ++j) {
    FieldScalar nj_inv = dot(simple[j], simple[j]).inverse();
    for (size_t i = 0; i < n; ++i)
      A.at(i, j) = FieldScalar(2) * dot(simple[i], simple[j]) * nj_inv;
  }
  return A;
}

// --- RootSystem ---

RootSystem::RootSystem(int dim, std::vector<Vec> roots, std::string name,
                       std::vector<Vec> simple)
    : dim_(dim), roots_(std::move(roots)), name_(std::move(name)),
      simple_(std::move(simple)) {
  for (const Vec& r : roots_)
    if (static_cast<int>(r.size()) != dim_)
      throw DomainError("root of wrong dimension");
  std::sort(roots_.begin(), roots_.end(), VecKeyLess{});
  roots_.erase(std::unique(roots_.begin(), roots_.end()), roots_.end());
}

bool RootSystem::contains(const Vec& v) const {
  return std::binary_search(roots_.begin(), roots_.end(), v, VecKeyLess{});
}

RootSystem generate(const std::vector<Vec>& simple, size_t ceiling,
                    std::string name) {
  if (simple.empty()) throw DomainError("no simple roots given");
  int dim = static_cast<int>(simple[0].size());
  for (const Vec& s : simple) {
    if (static_cast<int>(s.size()) != dim)
      throw DomainError("simple roots of mixed dimension");
    if (dot(s, s).is_zero()) throw DomainError("zero simple root");
  }

  std::set<Vec, VecKeyLess> seen(simple.begin(), simple.end());
  std::deque<Vec> queue(simple.begin(), simple.end());
  while (!queue.empty()) {
    Vec v = std::move(queue.front());
    queue.pop_front();
    for (const Vec& s : simple) {
      Vec w = reflect_vec(s, v);
      if (seen.insert(w).second) {
        if (seen.size() > ceiling)
          throw DomainError(
              "root generation exceeded ceiling of " +
              std::to_string(ceiling) + " elements (non-finite or too large)");
        queue.push_back(std::move(w));
      }
    }
  }
  return RootSystem(dim, {seen.begin(), seen.end()}, std::move(name), simple);
}

VerifyReport verify(const RootSystem& rs) {
  VerifyReport rep;
  const auto& R = rs.roots();
  auto record = [&rep](bool& flag, const std::string& msg) {
    flag = false;
    if (rep.violations.size() < 25) rep.violations.push_back(msg);
  };

  for (const Vec& r : R) {
    if (dot(r, r).is_zero()) {
      record(rep.multiples_ok, "zero vector present: " + vec_str(r));
      continue;
    }
    if (!rs.contains(negated(r)))
      record(rep.negation_ok, "missing negative of " + vec_str(r));
  }

  for (size_t i = 0; i < R.size(); ++i) {
    // first nonzero coordinate of R[i]
    size_t k = 0;
    while (k < R[i].size() && R[i][k].is_zero()) ++k;
    if (k == R[i].size()) continue;  // zero vector, already reported
    for (size_t j = 0; j < R.size(); ++j) {
      if (i == j) continue;
      FieldScalar lambda = R[j][k] * R[i][k].inverse();
      if (lambda.is_zero() || lambda == FieldScalar(1) ||
          lambda == FieldScalar(-1))
        continue;
      if (R[j] == scaled(R[i], lambda))
        record(rep.multiples_ok, "scalar multiple pair " + vec_str(R[i]) +
                                     " and " + vec_str(R[j]));
    }
  }

  for (const Vec& a : R) {
    if (dot(a, a).is_zero()) continue;
    for (const Vec& r : R) {
      Vec w = reflect_vec(a, r);
      if (!rs.contains(w))
        record(rep.reflections_ok, "reflection of " + vec_str(r) + " in " +
                                       vec_str(a) + " escapes the set");
    }
  }
  return rep;
}

// --- automorphism counting ---

namespace {

struct AutSearch {
  const std::vector<Vec>& R;
  size_t n;
  size_t d;
  std::vector<size_t> base;              // indices of d independent roots
  std::vector<std::vector<FieldScalar>> gram;
  std::vector<Vec> coords;               // R[i] in base coordinates
  uint64_t nodes = 0;
  uint64_t ceiling;

  explicit AutSearch(const RootSystem& rs, uint64_t node_ceiling)
      : R(rs.roots()), n(rs.roots().size()),
        d(static_cast<size_t>(rs.dim())), ceiling(node_ceiling) {
    if (n == 0) throw DomainError("empty root system");
    // Greedy independent base in canonical order.
    std::vector<Vec> ech;
    for (size_t i = 0; i < n && base.size() < d; ++i) {
      std::vector<Vec> test = ech;
      test.push_back(R[i]);
      if (echelon_rank(test) > ech.size()) {
        ech = std::move(test);
        base.push_back(i);
      }
    }
    if (base.size() < d)
      throw DomainError(
          "roots do not span the ambient space; automorphism group is not "
          "finite");

    gram.assign(n, std::vector<FieldScalar>(n));
    for (size_t i = 0; i < n; ++i)
      for (size_t j = i; j < n; ++j) gram[i][j] = gram[j][i] = dot(R[i], R[j]);

    std::vector<Vec> cols;
    for (size_t k : base) cols.push_back(R[k]);
    std::vector<Vec> inv = invert_columns(cols);
    coords.resize(n);
    for (size_t i = 0; i < n; ++i) coords[i] = mat_vec(inv, R[i]);
  }

  bool compatible(const std::vector<size_t>& img, size_t c) const {
    size_t k = img.size();
    if (gram[c][c] != gram[base[k]][base[k]]) return false;
    for (size_t j = 0; j < k; ++j)
      if (gram[img[j]][c] != gram[base[j]][base[k]]) return false;
    return true;
  }

  // A Gram-compatible full assignment defines an orthogonal map; accept it
  // iff it keeps every root inside the set.
  bool valid_leaf(const std::vector<size_t>& img) const {
    for (size_t i = 0; i < n; ++i) {
      Vec image(d);
      for (size_t k = 0; k < d; ++k) {
        if (coords[i][k].is_zero()) continue;
        for (size_t t = 0; t < d; ++t)
          image[t] += R[img[k]][t] * coords[i][k];
      }
      if (!std::binary_search(R.begin(), R.end(), image, VecKeyLess{}))
        return false;
    }
    return true;
  }

  bool extends(std::vector<size_t>& img) {
    if (++nodes > ceiling)
      throw DomainError(
          "automorphism search exceeded the node ceiling of " +
          std::to_string(ceiling) + "; raise the ceiling to force it");
    if (img.size() == d) return valid_leaf(img);
    for (size_t c = 0; c < n; ++c) {
      if (!compatible(img, c)) continue;
      img.push_back(c);
      if (extends(img)) {
        img.pop_back();
        return true;
      }
      img.pop_back();
    }
    return false;
  }

  // |Aut| = Π_k |orbit of base[k] under the stabilizer of base[0..k-1]|.
  // The candidates extendable at level k form exactly that orbit.
  uint64_t count() {
    uint64_t total = 1;
    std::vector<size_t> prefix;
    for (size_t k = 0; k < d; ++k) {
      uint64_t orbit = 0;
      size_t witness = n;
      for (size_t c = 0; c < n; ++c) {
        if (!compatible(prefix, c)) continue;
        prefix.push_back(c);
        bool ok = extends(prefix);
        prefix.pop_back();
        if (ok) {
          ++orbit;
          if (witness == n) witness = c;
        }
      }
      if (witness == n)
        throw DomainError("automorphism search found no extension; "
                          "inconsistent root system");
      total *= orbit;
      prefix.push_back(witness);
    }
    return total;
  }
};

}  // namespace

uint64_t automorphism_order(const RootSystem& rs, uint64_t node_ceiling) {
  return AutSearch(rs, node_ceiling).count();
}

std::vector<Vec> extract_simple(const RootSystem& rs) {
  const auto& R = rs.roots();
  if (R.empty()) throw DomainError("empty root system");
  size_t d = rs.dim();

  // Generic functional: weights (1, t, t², …) for successive integers t
  // until no root is orthogonal to it.
  for (long t = 3;; t += 2) {
    Vec w(d);
    FieldScalar p(1);
    for (size_t k = 0; k < d; ++k) {
      w[k] = p;
      p = p * FieldScalar(t);
    }
    std::vector<Vec> positive;
    bool degenerate = false;
    for (const Vec& r : R) {
      int s = dot(r, w).sign();
      if (s == 0) {
        degenerate = true;
        break;
      }
      if (s > 0) positive.push_back(r);
    }
    if (degenerate) continue;

    // A positive root is simple for this chamber exactly when its
    // reflection permutes the remaining positive roots. (The naive
    // "not a sum of two positive roots" test is too weak once
    // coordinates leave the rational lattice: decompositions can carry
    // irrational weights.)
    std::set<Vec, VecKeyLess> pos(positive.begin(), positive.end());
    std::vector<Vec> simple;
    for (const Vec& p2 : positive) {
      bool is_simple = true;
      for (const Vec& q : positive) {
        if (q == p2) continue;
        if (!pos.count(reflect_vec(p2, q))) {
          is_simple = false;
          break;
        }
      }
      if (is_simple) simple.push_back(p2);
    }
    std::sort(simple.begin(), simple.end(), VecKeyLess{});
    return simple;
  }
}

}  // namespace versor
