// Command-line front end: every subcommand prints one deterministic
// document (JSON by default) built from the exact-arithmetic engine.
#include <cstring>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "versor/e8fold.hpp"
#include "versor/errors.hpp"
#include "versor/induction.hpp"
#include "versor/rep.hpp"
#include "versor/rootsystem.hpp"
#include "versor/versor_group.hpp"

using json = nlohmann::ordered_json;
using namespace versor;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Ctx {
  std::string format;  // resolved per subcommand
  unsigned precision = 6;
  size_t ceiling = 0;  // 0 = module default
};

// --- rendering helpers ---

std::string dec_str(const FieldScalar& x, unsigned digits) {
  unsigned bits = 16;
  while (static_cast<unsigned>(bits * 0.30102999566) < digits + 2) bits += 4;
  std::string s = x.decimal(bits);
  size_t dot = s.find('.');
  if (dot == std::string::npos) return s;
  if (digits == 0) return s.substr(0, dot);
  return s.substr(0, std::min(s.size(), dot + 1 + digits));
}

std::string mpf_str(const mpf_class& v, unsigned digits) {
  char* out = nullptr;
  gmp_asprintf(&out, "%.*Ff", static_cast<int>(digits), v.get_mpf_t());
  std::string s(out);
  void (*freefunc)(void*, size_t) = nullptr;
  mp_get_memory_functions(nullptr, nullptr, &freefunc);
  freefunc(out, std::strlen(out) + 1);
  return s;
}

json scalar_json(const FieldScalar& x, unsigned digits) {
  json j;
  j["c"] = {x.coeff(0).str(), x.coeff(1).str(), x.coeff(2).str(),
            x.coeff(3).str()};
  j["dec"] = dec_str(x, digits);
  return j;
}

json vec_json(const Vec& v, unsigned digits) {
  json arr = json::array();
  for (const FieldScalar& x : v) arr.push_back(scalar_json(x, digits));
  return arr;
}

json meta_json(const std::string& diagram) {
  json m;
  m["diagram"] = diagram;
  m["field_basis"] = {"1", "sqrt2", "tau", "sqrt2*tau"};
  m["ordering"] = "coordinate-lexicographic";
  return m;
}

void emit(const json& doc) { std::cout << doc.dump(2) << "\n"; }

std::string csv_vec(const Vec& v) {
  std::string line;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) line += ",";
    line += v[i].str();
  }
  return line;
}

std::string kind_name(VersorGroup::Kind k) {
  switch (k) {
    case VersorGroup::Kind::pin:
      return "pin";
    case VersorGroup::Kind::spin:
      return "spin";
    case VersorGroup::Kind::chiral:
      return "chiral";
  }
  return "?";
}

[[noreturn]] void bad_format(const std::string& fmt, const std::string& cmd) {
  throw UsageError("format '" + fmt + "' is not supported by '" + cmd + "'");
}

// --- shared construction ---

struct NamedSystem {
  Family family;
  RootSystem roots;
};

NamedSystem resolve_system(const std::string& arg, size_t ceiling) {
  CoxeterDiagram d = parse_diagram(arg);
  std::optional<Family> fam = match_family(d);
  if (!fam)
    throw DomainError(
        "diagram has no stored coordinate realization; known families: "
        "A1^3, A3, B3, H3, E8");
  std::vector<Vec> simple = simple_roots(*fam);
  RootSystem rs =
      generate(simple, ceiling ? ceiling : 100000, family_name(*fam));
  return {*fam, std::move(rs)};
}

VersorGroup resolve_group(Family fam, const std::string& which,
                          size_t ceiling) {
  VersorGroup pin =
      VersorGroup::generate_pin(simple_roots(fam), ceiling ? ceiling : 10000);
  if (which == "pin") return pin;
  VersorGroup spin = pin.even_subgroup();
  if (which == "spin") return spin;
  return spin.rotation_quotient();
}

// --- subcommands ---

int run_roots(const std::string& arg, const Ctx& ctx) {
  NamedSystem sys = resolve_system(arg, ctx.ceiling);
  const auto& roots = sys.roots.roots();
  if (ctx.format == "json") {
    json doc;
    doc["meta"] = meta_json(family_name(sys.family));
    json arr = json::array();
    for (const Vec& r : roots) arr.push_back(vec_json(r, ctx.precision));
    doc["data"] = {{"dim", sys.roots.dim()},
                   {"count", roots.size()},
                   {"roots", std::move(arr)}};
    emit(doc);
  } else if (ctx.format == "csv") {
    for (int i = 1; i <= sys.roots.dim(); ++i)
      std::cout << (i > 1 ? "," : "") << "x" << i;
    std::cout << "\n";
    for (const Vec& r : roots) std::cout << csv_vec(r) << "\n";
  } else if (ctx.format == "text") {
    std::cout << family_name(sys.family) << ": " << roots.size()
              << " roots in dimension " << sys.roots.dim() << "\n";
    for (const Vec& r : roots) std::cout << "  " << vec_str(r) << "\n";
  } else {
    bad_format(ctx.format, "roots");
  }
  return 0;
}

int run_group(const std::string& arg, const std::string& which,
              const Ctx& ctx) {
  NamedSystem sys = resolve_system(arg, ctx.ceiling);
  VersorGroup g = resolve_group(sys.family, which, ctx.ceiling);
  const auto& classes = g.conjugacy_classes();
  if (ctx.format == "json") {
    json doc;
    doc["meta"] = meta_json(family_name(sys.family));
    json sizes = json::array();
    for (const auto& c : classes) sizes.push_back(c.size());
    json elems = json::array();
    for (size_t i = 0; i < g.size(); ++i) {
      json e;
      e["index"] = i;
      e["parity"] = g.element(i).is_even() ? "even" : "odd";
      e["value"] = g.element(i).str();
      elems.push_back(std::move(e));
    }
    doc["data"] = {{"kind", kind_name(g.kind())},
                   {"order", g.size()},
                   {"class_count", classes.size()},
                   {"class_sizes", std::move(sizes)},
                   {"elements", std::move(elems)}};
    emit(doc);
  } else if (ctx.format == "csv") {
    std::cout << "index,parity,element\n";
    for (size_t i = 0; i < g.size(); ++i)
      std::cout << i << "," << (g.element(i).is_even() ? "even" : "odd")
                << "," << g.element(i).str() << "\n";
  } else if (ctx.format == "text") {
    std::cout << kind_name(g.kind()) << " group of "
              << family_name(sys.family) << ": order " << g.size() << ", "
              << classes.size() << " conjugacy classes (";
    for (size_t i = 0; i < classes.size(); ++i)
      std::cout << (i ? ", " : "") << classes[i].size();
    std::cout << ")\n";
    for (size_t i = 0; i < g.size(); ++i)
      std::cout << "  [" << i << "] " << g.element(i).str() << "\n";
  } else {
    bad_format(ctx.format, "group");
  }
  return 0;
}

int run_classes(const std::string& arg, const std::string& which,
                const Ctx& ctx) {
  NamedSystem sys = resolve_system(arg, ctx.ceiling);
  VersorGroup g = resolve_group(sys.family, which, ctx.ceiling);
  const auto& classes = g.conjugacy_classes();
  if (ctx.format == "json") {
    json doc;
    doc["meta"] = meta_json(family_name(sys.family));
    json arr = json::array();
    for (size_t k = 0; k < classes.size(); ++k) {
      json c;
      c["index"] = k;
      c["size"] = classes[k].size();
      c["element_order"] = g.element_order(classes[k][0]);
      c["representative"] = g.element(classes[k][0]).str();
      json members = json::array();
      for (size_t e : classes[k]) members.push_back(e);
      c["members"] = std::move(members);
      arr.push_back(std::move(c));
    }
    doc["data"] = {{"kind", kind_name(g.kind())},
                   {"order", g.size()},
                   {"classes", std::move(arr)}};
    emit(doc);
  } else if (ctx.format == "csv") {
    std::cout << "class,size,element_order,representative\n";
    for (size_t k = 0; k < classes.size(); ++k)
      std::cout << k << "," << classes[k].size() << ","
                << g.element_order(classes[k][0]) << ","
                << g.element(classes[k][0]).str() << "\n";
  } else if (ctx.format == "text") {
    std::cout << classes.size() << " conjugacy classes of the "
              << kind_name(g.kind()) << " group of "
              << family_name(sys.family) << " (order " << g.size() << ")\n";
    for (size_t k = 0; k < classes.size(); ++k)
      std::cout << "  class " << k << ": size " << classes[k].size()
                << ", element order " << g.element_order(classes[k][0])
                << ", representative " << g.element(classes[k][0]).str()
                << "\n";
  } else {
    bad_format(ctx.format, "classes");
  }
  return 0;
}

int run_induce(const std::string& arg, bool do_identify, bool do_checkaut,
               const Ctx& ctx) {
  NamedSystem sys = resolve_system(arg, ctx.ceiling);
  if (sys.roots.dim() != 3)
    throw DomainError("induction starts from a rank-3 system");
  RootSystem phi4 = induce(sys.roots, ctx.ceiling ? ctx.ceiling : 10000);
  std::string identified = do_identify ? identify(phi4) : "";

  SpinAutReport aut{};
  if (do_checkaut) {
    VersorGroup spin =
        VersorGroup::generate_pin(simple_roots(sys.family),
                                  ctx.ceiling ? ctx.ceiling : 10000)
            .even_subgroup();
    aut = check_spinorial_automorphisms(phi4, spin);
  }

  if (ctx.format == "json") {
    json doc;
    doc["meta"] = meta_json(family_name(sys.family));
    json arr = json::array();
    for (const Vec& r : phi4.roots()) arr.push_back(vec_json(r, ctx.precision));
    json data;
    data["dim"] = phi4.dim();
    data["count"] = phi4.roots().size();
    if (do_identify) data["identified"] = identified;
    if (do_checkaut)
      data["automorphisms"] = {
          {"group_order", aut.group_order},
          {"pairs_total", aut.pairs_total},
          {"pairs_preserving", aut.pairs_preserving},
          {"distinct_maps", aut.distinct_maps},
          {"inner_product_checks", aut.inner_product_checks},
          {"all_preserve", aut.all_preserve},
          {"inner_products_preserved", aut.inner_products_preserved}};
    data["roots"] = std::move(arr);
    doc["data"] = std::move(data);
    emit(doc);
  } else if (ctx.format == "csv") {
    std::cout << "x1,x2,x3,x4\n";
    for (const Vec& r : phi4.roots()) std::cout << csv_vec(r) << "\n";
  } else if (ctx.format == "text") {
    std::cout << phi4.roots().size() << " roots induced from "
              << family_name(sys.family) << "\n";
    if (do_identify) std::cout << "identified: " << identified << "\n";
    if (do_checkaut) {
      std::cout << "automorphism sweep: " << aut.pairs_preserving << "/"
                << aut.pairs_total << " pairs preserve the root set, "
                << aut.distinct_maps << " distinct maps, inner products "
                << (aut.inner_products_preserved ? "preserved" : "broken")
                << " on " << aut.inner_product_checks << " checks\n";
    }
    for (const Vec& r : phi4.roots()) std::cout << "  " << vec_str(r) << "\n";
  } else {
    bad_format(ctx.format, "induce");
  }
  return 0;
}

int run_aut(const std::string& arg, const Ctx& ctx) {
  std::string label;
  uint64_t order = 0;
  uint64_t node_ceiling = ctx.ceiling ? ctx.ceiling : 5000000;
  if (arg.rfind("induced:", 0) == 0) {
    NamedSystem sys = resolve_system(arg.substr(8), ctx.ceiling);
    if (sys.roots.dim() != 3)
      throw DomainError("induction starts from a rank-3 system");
    RootSystem phi4 = induce(sys.roots, ctx.ceiling ? ctx.ceiling : 10000);
    label = "induced:" + family_name(sys.family);
    order = automorphism_order(phi4, node_ceiling);
  } else {
    NamedSystem sys = resolve_system(arg, ctx.ceiling);
    label = family_name(sys.family);
    order = automorphism_order(sys.roots, node_ceiling);
  }
  if (ctx.format == "json") {
    json doc;
    doc["meta"] = meta_json(label);
    doc["data"] = {{"order", order}};
    emit(doc);
  } else if (ctx.format == "csv") {
    std::cout << "order\n" << order << "\n";
  } else if (ctx.format == "text") {
    std::cout << order << "\n";
  } else {
    bad_format(ctx.format, "aut");
  }
  return 0;
}

RepKind rep_kind_of(const std::string& s) {
  if (s == "trivial") return RepKind::trivial;
  if (s == "parity") return RepKind::parity;
  if (s == "so3") return RepKind::so3;
  return RepKind::leftmult;
}

int run_rep(const std::string& arg, const std::string& kind, const Ctx& ctx) {
  NamedSystem sys = resolve_system(arg, ctx.ceiling);
  RepKind rk = rep_kind_of(kind);
  std::string which =
      (rk == RepKind::parity) ? "pin" : (rk == RepKind::so3 ? "chiral"
                                                            : "spin");
  VersorGroup g = resolve_group(sys.family, which, ctx.ceiling);
  MatrixRep rep = build_rep(g, rk);
  FieldScalar norm2 = rep_norm_squared(rep, g);
  const auto& classes = g.conjugacy_classes();

  if (ctx.format == "json") {
    json doc;
    doc["meta"] = meta_json(family_name(sys.family));
    json chars = json::array();
    for (size_t k = 0; k < classes.size(); ++k) {
      json c;
      c["class"] = k;
      c["size"] = classes[k].size();
      c["element_order"] = g.element_order(classes[k][0]);
      c["chi"] = scalar_json(rep.character[k], ctx.precision);
      chars.push_back(std::move(c));
    }
    doc["data"] = {{"kind", kind},
                   {"group", kind_name(g.kind())},
                   {"group_order", g.size()},
                   {"degree", rep.degree},
                   {"character", std::move(chars)},
                   {"norm_squared", scalar_json(norm2, ctx.precision)}};
    emit(doc);
  } else if (ctx.format == "csv") {
    std::cout << "class,size,chi\n";
    for (size_t k = 0; k < classes.size(); ++k)
      std::cout << k << "," << classes[k].size() << ","
                << rep.character[k].str() << "\n";
  } else if (ctx.format == "text") {
    std::cout << kind << " representation (degree " << rep.degree
              << ") of the " << kind_name(g.kind()) << " group of "
              << family_name(sys.family) << " (order " << g.size() << ")\n";
    std::cout << "character:";
    for (size_t k = 0; k < classes.size(); ++k)
      std::cout << "  " << rep.character[k].str();
    std::cout << "\n|chi|^2 = " << norm2.str() << "\n";
  } else {
    bad_format(ctx.format, "rep");
  }
  return 0;
}

std::string entry_str(const CharEntry& e, unsigned digits) {
  if (e.exact) return e.value.str();
  mpf_class tiny = e.im;
  std::string s = mpf_str(e.re, digits);
  if (mpf_class(abs(e.im)).get_d() > 1e-30) {
    std::string im = mpf_str(e.im, digits);
    if (!im.empty() && im[0] != '-') im = "+" + im;
    s += im + "i";
  }
  return s;
}

int run_chartable(const std::string& arg, bool binary, const Ctx& ctx) {
  NamedSystem sys = resolve_system(arg, ctx.ceiling);
  VersorGroup g = resolve_group(sys.family, binary ? "spin" : "chiral",
                                ctx.ceiling);
  CharacterTable ct = character_table(g);
  const size_t k = ct.class_sizes.size();

  if (ctx.format == "json") {
    json doc;
    doc["meta"] = meta_json(family_name(sys.family));
    json table = json::array();
    for (size_t i = 0; i < k; ++i) {
      json row = json::array();
      for (size_t j = 0; j < k; ++j) {
        const CharEntry& e = ct.chi[i][j];
        json cell;
        cell["exact"] = e.exact;
        if (e.exact)
          cell["value"] = scalar_json(e.value, ctx.precision);
        else {
          cell["re"] = mpf_str(e.re, ctx.precision);
          cell["im"] = mpf_str(e.im, ctx.precision);
        }
        row.push_back(std::move(cell));
      }
      table.push_back(std::move(row));
    }
    json reps = json::array();
    for (size_t j = 0; j < k; ++j)
      reps.push_back(g.element(ct.class_reps[j]).str());
    doc["data"] = {{"group", kind_name(g.kind())},
                   {"group_order", ct.group_order},
                   {"class_sizes", ct.class_sizes},
                   {"class_orders", ct.class_orders},
                   {"class_representatives", std::move(reps)},
                   {"degrees", ct.degrees},
                   {"table", std::move(table)}};
    emit(doc);
  } else if (ctx.format == "csv") {
    std::cout << "size";
    for (size_t j = 0; j < k; ++j) std::cout << "," << ct.class_sizes[j];
    std::cout << "\norder";
    for (size_t j = 0; j < k; ++j) std::cout << "," << ct.class_orders[j];
    std::cout << "\n";
    for (size_t i = 0; i < k; ++i) {
      std::cout << ct.degrees[i];
      for (size_t j = 0; j < k; ++j)
        std::cout << "," << entry_str(ct.chi[i][j], ctx.precision);
      std::cout << "\n";
    }
  } else if (ctx.format == "text") {
    std::cout << "character table, " << kind_name(g.kind()) << " group of "
              << family_name(sys.family) << " (order " << ct.group_order
              << ", " << k << " classes)\n";
    std::cout << "class sizes:";
    for (size_t j = 0; j < k; ++j) std::cout << " " << ct.class_sizes[j];
    std::cout << "\nelement orders:";
    for (size_t j = 0; j < k; ++j) std::cout << " " << ct.class_orders[j];
    std::cout << "\n";
    for (size_t i = 0; i < k; ++i) {
      std::cout << "chi_" << i << " (deg " << ct.degrees[i] << "):";
      for (size_t j = 0; j < k; ++j)
        std::cout << "  " << entry_str(ct.chi[i][j], ctx.precision);
      std::cout << "\n";
    }
  } else {
    bad_format(ctx.format, "chartable");
  }
  return 0;
}

int run_mckay(const std::string& arg, const Ctx& ctx) {
  NamedSystem sys = resolve_system(arg, ctx.ceiling);
  VersorGroup g = resolve_group(sys.family, "spin", ctx.ceiling);
  CharacterTable ct = character_table(g);
  McKayGraph mk = mckay_graph(g, ct);
  std::string identified = mckay_identify(mk);
  const size_t n = mk.degrees.size();

  if (ctx.format == "dot") {
    std::string id = family_name(sys.family);
    for (char& c : id)
      if (!isalnum(static_cast<unsigned char>(c))) c = 'x';
    std::cout << "graph mckay_" << id << " {\n";
    std::cout << "  label=\"affine " << identified << "\";\n";
    std::cout << "  node [shape=circle];\n";
    for (size_t i = 0; i < n; ++i) {
      std::cout << "  n" << i << " [label=\"" << mk.degrees[i] << "\"";
      if (i == mk.spinor_node) std::cout << ", peripheries=2";
      std::cout << "];\n";
    }
    for (size_t a = 0; a < n; ++a)
      for (size_t b = a + 1; b < n; ++b)
        for (int e = 0; e < mk.adj[a][b]; ++e)
          std::cout << "  n" << a << " -- n" << b << ";\n";
    std::cout << "}\n";
  } else if (ctx.format == "json") {
    json doc;
    doc["meta"] = meta_json(family_name(sys.family));
    json edges = json::array();
    for (size_t a = 0; a < n; ++a)
      for (size_t b = a + 1; b < n; ++b)
        for (int e = 0; e < mk.adj[a][b]; ++e)
          edges.push_back({a, b});
    doc["data"] = {{"identified", identified},
                   {"degrees", mk.degrees},
                   {"spinor_node", mk.spinor_node},
                   {"edges", std::move(edges)}};
    emit(doc);
  } else if (ctx.format == "text") {
    std::cout << "McKay graph of the spin group of "
              << family_name(sys.family) << ": affine " << identified << "\n";
    std::cout << "degrees:";
    for (size_t i = 0; i < n; ++i) {
      std::cout << " " << mk.degrees[i];
      if (i == mk.spinor_node) std::cout << "*";
    }
    std::cout << "  (* = spinor irrep)\nedges:";
    for (size_t a = 0; a < n; ++a)
      for (size_t b = a + 1; b < n; ++b)
        for (int e = 0; e < mk.adj[a][b]; ++e)
          std::cout << " " << a << "-" << b;
    std::cout << "\n";
  } else {
    bad_format(ctx.format, "mckay");
  }
  return 0;
}

int run_fold(bool relations, bool coxeter, const Ctx& ctx) {
  bool both = !relations && !coxeter;
  FoldingConfiguration f = build_folding();
  FoldingReport rel;
  CoxeterReport cox;
  if (relations || both) rel = verify_h4_relations(f);
  if (coxeter || both) cox = coxeter_versor(f);

  if (ctx.format == "json") {
    json doc;
    doc["meta"] = meta_json("E8");
    json data;
    json pairs = json::array();
    for (auto [p, q] : f.pairs) pairs.push_back({p + 1, q + 1});
    data["pairs"] = std::move(pairs);
    if (relations || both) {
      data["relations"] = {
          {"pairs_orthogonal", rel.pairs_orthogonal},
          {"generators_square_to_minus_one",
           rel.generators_square_to_minus_one},
          {"order_matrix", rel.order_matrix},
          {"matches_h4", rel.matches_h4}};
    }
    if (coxeter || both) {
      data["coxeter"] = {
          {"projective_order", cox.projective_order},
          {"versor_order", cox.versor_order},
          {"equals_generator_product", cox.equals_generator_product},
          {"ascending_projective_order", cox.ascending_projective_order},
          {"ascending_equals_folded", cox.ascending_equals_folded},
          {"permutes_roots", cox.permutes_roots}};
    }
    doc["data"] = std::move(data);
    emit(doc);
  } else if (ctx.format == "text") {
    std::cout << "folding pairs (1-based nodes):";
    for (auto [p, q] : f.pairs)
      std::cout << " (" << p + 1 << "," << q + 1 << ")";
    std::cout << "\n";
    if (relations || both) {
      std::cout << "pairs orthogonal: " << (rel.pairs_orthogonal ? "yes" : "no")
                << "\ngenerators square to -1: "
                << (rel.generators_square_to_minus_one ? "yes" : "no")
                << "\norder matrix:\n";
      for (const auto& row : rel.order_matrix) {
        std::cout << " ";
        for (int v : row) std::cout << " " << v;
        std::cout << "\n";
      }
      std::cout << "matches the rank-4 icosahedral relations: "
                << (rel.matches_h4 ? "yes" : "no") << "\n";
    }
    if (coxeter || both) {
      std::cout << "Coxeter versor projective order: " << cox.projective_order
                << " (versor order " << cox.versor_order << ")\n"
                << "equals a1*a2*a3*a4: "
                << (cox.equals_generator_product ? "yes" : "no") << "\n"
                << "ascending word projective order: "
                << cox.ascending_projective_order << ", equals folded word: "
                << (cox.ascending_equals_folded ? "yes" : "no") << "\n"
                << "permutes the 240 roots: "
                << (cox.permutes_roots ? "yes" : "no") << "\n";
    }
  } else {
    bad_format(ctx.format, "fold-e8");
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact versor engine for reflection groups"};
  app.require_subcommand(1);

  std::string format;
  unsigned precision = 6;
  size_t ceiling = 0;
  app.add_option("--format", format, "output format: json, csv, dot, text")
      ->check(CLI::IsMember({"json", "csv", "dot", "text"}));
  app.add_option("--precision", precision,
                 "decimal digits for numeric renderings");
  app.add_option("--ceiling", ceiling,
                 "override element/search ceilings (0 = defaults)");

  std::string roots_arg, group_arg, classes_arg, induce_arg, aut_arg, rep_arg,
      chart_arg, mckay_arg, rep_kind;
  bool g_pin = false, g_spin = false, g_chiral = false;
  bool c_pin = false, c_spin = false, c_chiral = false;
  bool ind_identify = false, ind_checkaut = false;
  bool chart_binary = false;
  bool fold_relations = false, fold_coxeter = false;

  CLI::App* sc_roots = app.add_subcommand("roots", "list a root system");
  sc_roots->add_option("diagram", roots_arg, "family name or edge list")
      ->required();

  CLI::App* sc_group = app.add_subcommand("group", "list a versor group");
  sc_group->add_option("diagram", group_arg)->required();
  sc_group->add_flag("--pin", g_pin, "full pinor group (default)");
  sc_group->add_flag("--spin", g_spin, "even subgroup");
  sc_group->add_flag("--chiral", g_chiral, "rotation quotient");

  CLI::App* sc_classes =
      app.add_subcommand("classes", "conjugacy class partition");
  sc_classes->add_option("diagram", classes_arg)->required();
  sc_classes->add_flag("--pin", c_pin, "full pinor group");
  sc_classes->add_flag("--spin", c_spin, "even subgroup (default)");
  sc_classes->add_flag("--chiral", c_chiral, "rotation quotient");

  CLI::App* sc_induce =
      app.add_subcommand("induce", "induce the 4D system of a 3D one");
  sc_induce->add_option("diagram", induce_arg)->required();
  sc_induce->add_flag("--identify", ind_identify,
                      "name the induced system by exact congruence");
  sc_induce->add_flag("--check-aut", ind_checkaut,
                      "sweep all two-sided spinor pairs");

  CLI::App* sc_aut =
      app.add_subcommand("aut", "automorphism group order of a root system");
  sc_aut->add_option("diagram", aut_arg, "family name or induced:<3d-family>")
      ->required();

  CLI::App* sc_rep =
      app.add_subcommand("rep", "matrix representation characters");
  sc_rep->add_option("diagram", rep_arg)->required();
  sc_rep->add_option("--kind", rep_kind, "trivial, parity, so3, leftmult")
      ->required()
      ->check(CLI::IsMember({"trivial", "parity", "so3", "leftmult"}));

  CLI::App* sc_chart =
      app.add_subcommand("chartable", "full character table");
  sc_chart->add_option("diagram", chart_arg)->required();
  sc_chart->add_flag("--binary", chart_binary,
                     "binary (spin) group instead of the rotation quotient");

  CLI::App* sc_mckay =
      app.add_subcommand("mckay", "McKay graph of the binary group");
  sc_mckay->add_option("diagram", mckay_arg)->required();

  CLI::App* sc_fold =
      app.add_subcommand("fold-e8", "rank-8 to rank-4 folding report");
  sc_fold->add_flag("--relations", fold_relations,
                    "generator relations only");
  sc_fold->add_flag("--coxeter", fold_coxeter, "Coxeter versor only");

  for (CLI::App* sc : {sc_roots, sc_group, sc_classes, sc_induce, sc_aut,
                       sc_rep, sc_chart, sc_mckay, sc_fold})
    sc->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  auto pick = [](bool pin, bool spin, bool chiral,
                 const std::string& fallback) -> std::string {
    if (static_cast<int>(pin) + static_cast<int>(spin) +
            static_cast<int>(chiral) >
        1)
      throw UsageError("choose at most one of --pin, --spin, --chiral");
    if (pin) return "pin";
    if (spin) return "spin";
    if (chiral) return "chiral";
    return fallback;
  };

  try {
    Ctx ctx;
    ctx.precision = precision;
    ctx.ceiling = ceiling;
    ctx.format = format.empty() ? (*sc_mckay ? "dot" : "json") : format;

    if (*sc_roots) return run_roots(roots_arg, ctx);
    if (*sc_group)
      return run_group(group_arg, pick(g_pin, g_spin, g_chiral, "pin"), ctx);
    if (*sc_classes)
      return run_classes(classes_arg, pick(c_pin, c_spin, c_chiral, "spin"),
                         ctx);
    if (*sc_induce) return run_induce(induce_arg, ind_identify, ind_checkaut, ctx);
    if (*sc_aut) return run_aut(aut_arg, ctx);
    if (*sc_rep) return run_rep(rep_arg, rep_kind, ctx);
    if (*sc_chart) return run_chartable(chart_arg, chart_binary, ctx);
    if (*sc_mckay) return run_mckay(mckay_arg, ctx);
    if (*sc_fold) return run_fold(fold_relations, fold_coxeter, ctx);
    std::cerr << "error: no subcommand\n";
    return 2;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
