#include "versor/induction.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <utility>

#include "versor/errors.hpp"

namespace versor {

namespace {
constexpr unsigned kE23 = 0b110, kE13 = 0b101, kE12 = 0b011;
}

Vec spinor_to_vector(const Multivector& R) {
  if (R.dim() != 3) throw DomainError("spinor coordinates need Cl(3)");
  if (!R.is_even())
    throw DomainError("odd-grade content; not a spinor: " + R.str());
  // Ie2 = e3e1 = -e13, hence the sign on the third coordinate.
  return {R[0], R[kE23], -R[kE13], R[kE12]};
}

Multivector vector_to_spinor(const Vec& a) {
  if (a.size() != 4) throw DomainError("spinor coordinates are 4-dimensional");
  Multivector R(3);
  R[0] = a[0];
  R[kE23] = a[1];
  R[kE13] = -a[2];
  R[kE12] = a[3];
  return R;
}

FieldScalar spinor_inner(const Multivector& R1, const Multivector& R2) {
  if (R1.dim() != 3 || R2.dim() != 3)
    throw DomainError("spinor inner product needs Cl(3)");
  if (!R1.is_even() || !R2.is_even())
    throw DomainError("spinor inner product needs even arguments");
  Multivector sym = R1 * R2.reverse() + R2 * R1.reverse();
  if (!sym.is_homogeneous(0))
    throw DomainError("spinor inner product not scalar; inconsistent input");
  return FieldScalar::half() * sym.scalar_part();
}

RootSystem induce(const RootSystem& phi3, size_t pin_ceiling) {
  if (phi3.dim() != 3) throw DomainError("induction starts from 3 dimensions");
  if (phi3.simple().empty())
    throw DomainError("induction needs the stored simple system");
  VerifyReport pre = verify(phi3);
  if (!pre.ok())
    throw DomainError("input of induce is not a root system: " +
                      (pre.violations.empty() ? std::string("unknown")
                                              : pre.violations.front()));

  VersorGroup pin = VersorGroup::generate_pin(phi3.simple(), pin_ceiling);
  VersorGroup spin = pin.even_subgroup();

  std::vector<Vec> roots;
  roots.reserve(spin.size());
  for (const Multivector& e : spin.elements())
    roots.push_back(spinor_to_vector(e));
  RootSystem out(4, std::move(roots));

  VerifyReport post = verify(out);
  if (!post.ok())
    throw DomainError("induced set is not a root system: " +
                      (post.violations.empty() ? std::string("unknown")
                                               : post.violations.front()));
  return out;
}

// --- catalogs and identification ---

namespace {

RootSystem normalized_copy(const RootSystem& rs, std::string name) {
  std::vector<Vec> unit;
  unit.reserve(rs.size());
  for (const Vec& r : rs.roots()) unit.push_back(unit_normalize(r));
  return RootSystem(rs.dim(), std::move(unit), std::move(name));
}

RootSystem make_600cell() {
  const FieldScalar one(1), half = FieldScalar::half(),
                    tau = FieldScalar::tau();
  std::vector<Vec> roots;
  // 8 of ±e_i
  for (int i = 0; i < 4; ++i)
    for (int s : {1, -1}) {
      Vec v(4);
      v[i] = FieldScalar(s);
      roots.push_back(v);
    }
  // 16 of (±1, ±1, ±1, ±1)/2
  for (int m = 0; m < 16; ++m) {
    Vec v(4);
    for (int i = 0; i < 4; ++i) v[i] = (m >> i & 1) ? -half : half;
    roots.push_back(v);
  }
  // 96: even permutations of ½(±τ, ±1, ±(τ−1), 0)
  const FieldScalar vals[3] = {half * tau, half, half * (tau - one)};
  std::array<int, 4> p{0, 1, 2, 3};
  do {
    int inversions = 0;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j)
        if (p[i] > p[j]) ++inversions;
    if (inversions % 2) continue;
    for (int m = 0; m < 8; ++m) {
      Vec v(4);
      for (int i = 0; i < 3; ++i)
        v[p[i]] = (m >> i & 1) ? -vals[i] : vals[i];
      roots.push_back(v);
    }
  } while (std::next_permutation(p.begin(), p.end()));
  return RootSystem(4, std::move(roots), "H4");
}

}  // namespace

const RootSystem& catalog_a1x4() {
  static const RootSystem rs = [] {
    const FieldScalar one(1);
    std::vector<Vec> simple;
    for (int i = 0; i < 4; ++i) {
      Vec v(4);
      v[i] = one;
      simple.push_back(v);
    }
    return generate(simple, 100000, "A1^4");
  }();
  return rs;
}

const RootSystem& catalog_d4() {
  static const RootSystem rs = [] {
    const FieldScalar one(1);
    auto e = [&](int i, int j, int sj) {
      Vec v(4);
      v[i - 1] = one;
      v[j - 1] = FieldScalar(sj);
      return v;
    };
    return normalized_copy(
        generate({e(1, 2, -1), e(2, 3, -1), e(3, 4, -1), e(3, 4, 1)}), "D4");
  }();
  return rs;
}

const RootSystem& catalog_f4() {
  static const RootSystem rs = [] {
    const FieldScalar one(1), half = FieldScalar::half();
    auto e = [&](int i, int j, int sj) {
      Vec v(4);
      v[i - 1] = one;
      v[j - 1] = FieldScalar(sj);
      return v;
    };
    Vec e4(4);
    e4[3] = one;
    Vec h(4, -half);
    h[0] = half;
    return normalized_copy(generate({e(2, 3, -1), e(3, 4, -1), e4, h}), "F4");
  }();
  return rs;
}

const RootSystem& catalog_h4() {
  static const RootSystem rs = make_600cell();
  return rs;
}

namespace {

// Scale- and isometry-invariant fingerprint: root count plus the multiset
// over unordered pairs of (sign⟨r,s⟩, ⟨r,s⟩²/(|r|²|s|²)).
struct Signature {
  size_t count;
  std::vector<std::pair<int, FieldScalar>> pairs;

  bool operator==(const Signature& o) const {
    if (count != o.count || pairs.size() != o.pairs.size()) return false;
    for (size_t i = 0; i < pairs.size(); ++i)
      if (pairs[i].first != o.pairs[i].first ||
          pairs[i].second != o.pairs[i].second)
        return false;
    return true;
  }
};

Signature signature_of(const RootSystem& rs) {
  const auto& R = rs.roots();
  Signature sig;
  sig.count = R.size();
  std::vector<FieldScalar> norm(R.size());
  for (size_t i = 0; i < R.size(); ++i) norm[i] = dot(R[i], R[i]);
  sig.pairs.reserve(R.size() * (R.size() - 1) / 2);
  for (size_t i = 0; i < R.size(); ++i)
    for (size_t j = i + 1; j < R.size(); ++j) {
      FieldScalar d = dot(R[i], R[j]);
      sig.pairs.emplace_back(d.sign(), d * d * (norm[i] * norm[j]).inverse());
    }
  std::sort(sig.pairs.begin(), sig.pairs.end(),
            [](const auto& a, const auto& b) {
              if (a.first != b.first) return a.first < b.first;
              return FieldScalar::compare(a.second, b.second) < 0;
            });
  return sig;
}

}  // namespace

std::string identify(const RootSystem& phi4) {
  if (phi4.dim() != 4)
    throw DomainError("identification expects a 4-dimensional root system");
  Signature sig = signature_of(phi4);
  for (const RootSystem* cat :
       {&catalog_a1x4(), &catalog_d4(), &catalog_f4(), &catalog_h4()}) {
    if (cat->size() != sig.count) continue;
    if (signature_of(*cat) == sig) return cat->name();
  }
  return "unknown";
}

SpinAutReport check_spinorial_automorphisms(const RootSystem& phi4,
                                            const VersorGroup& spin) {
  if (spin.kind() != VersorGroup::Kind::spin)
    throw DomainError("spinorial automorphism sweep needs a spin group");
  std::vector<Vec> image;
  image.reserve(spin.size());
  for (const Multivector& e : spin.elements())
    image.push_back(spinor_to_vector(e));
  std::sort(image.begin(), image.end(), VecKeyLess{});
  if (image != phi4.roots())
    throw DomainError(
        "root system is not the induced image of the given spin group");

  const size_t n = spin.size();
  const auto& t = spin.cayley_table();

  SpinAutReport rep;
  rep.group_order = n;
  rep.pairs_total = n * n;

  // Every map s ↦ R1·s·R2 lands inside the group by the (exactly verified)
  // Cayley table; count the pairs whose map is a genuine permutation.
  std::vector<std::vector<uint16_t>> perms;
  perms.reserve(n * n);
  std::vector<char> hit(n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      std::vector<uint16_t> perm(n);
      std::fill(hit.begin(), hit.end(), 0);
      bool bijective = true;
      for (size_t s = 0; s < n; ++s) {
        size_t im = t[t[i][s]][j];
        perm[s] = static_cast<uint16_t>(im);
        if (hit[im]) bijective = false;
        hit[im] = 1;
      }
      if (bijective) ++rep.pairs_preserving;
      perms.push_back(std::move(perm));
    }
  rep.all_preserve = rep.pairs_preserving == rep.pairs_total;

  std::sort(perms.begin(), perms.end());
  rep.distinct_maps =
      std::unique(perms.begin(), perms.end()) - perms.begin();

  // Exact isometry spot checks of the 4D inner product, deterministic picks.
  const auto& E = spin.elements();
  size_t checks = 200, state = 12345;
  auto next = [&state, n] {
    state = state * 6364136223846793005ull + 1442695040888963407ull;
    return (state >> 17) % n;
  };
  rep.inner_products_preserved = true;
  for (size_t c = 0; c < checks; ++c) {
    const Multivector &r1 = E[next()], &r2 = E[next()], &x = E[next()],
                      &y = E[next()];
    FieldScalar lhs = spinor_inner(r1 * x * r2, r1 * y * r2);
    if (lhs != spinor_inner(x, y)) rep.inner_products_preserved = false;
  }
  rep.inner_product_checks = checks;
  return rep;
}

}  // namespace versor
