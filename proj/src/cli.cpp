#include "surfgeo/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <ostream>
#include <sstream>

#include "surfgeo/catalog.hpp"
#include "surfgeo/csv.hpp"
#include "surfgeo/dsl.hpp"
#include "surfgeo/errors.hpp"
#include "surfgeo/homeo.hpp"
#include "surfgeo/obstructions.hpp"
#include "surfgeo/sharpness.hpp"

namespace surfgeo::cli {

namespace {

struct Range {
  long first = 1;
  long last = 0;
};

// "A..B" or a single "A".
Range parse_range(const std::string& text) {
  auto dots = text.find("..");
  auto num = [&](const std::string& s) {
    if (s.empty() || s.size() > 9 || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; }))
      throw CLI::ValidationError("range", "'" + text + "' is not of the form A..B");
    return std::stol(s);
  };
  if (dots == std::string::npos) {
    long v = num(text);
    return {v, v};
  }
  return {num(text.substr(0, dots)), num(text.substr(dots + 2))};
}

std::vector<long> parse_degree_list(const std::string& text) {
  std::vector<long> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty() || item.size() > 6 ||
        !std::all_of(item.begin(), item.end(), [](char c) { return c >= '0' && c <= '9'; }))
      throw CLI::ValidationError("--ci", "'" + text + "' is not a comma-separated list of degrees");
    out.push_back(std::stol(item));
  }
  if (out.empty()) throw CLI::ValidationError("--ci", "empty degree list");
  return out;
}

class Table {
 public:
  explicit Table(std::ostream& out) : out_(out) {}
  void row(const std::string& key, const std::string& value) {
    out_ << key;
    for (std::size_t i = key.size(); i < 18; ++i) out_ << ' ';
    out_ << value << '\n';
  }

 private:
  std::ostream& out_;
};

std::string opt_str(const std::optional<BigInt>& v) { return v ? v->str() : "unknown"; }
std::string yes_no(bool b) { return b ? "yes" : "no"; }

// "c₁²/3", "25c₁²/57", "2c₁²/3".
std::string threshold_expr(Threshold t) {
  Rational v = threshold_value(t);
  std::string num = v.numerator() == 1 ? "" : v.numerator().str();
  return num + "c₁²/" + v.denominator().str();
}

std::string verdict_line(const ObstructionVerdict& v) {
  std::string k = "k=" + std::to_string(v.k);
  std::string rhs = v.bound.str() + " = " + threshold_expr(v.threshold);
  if (v.at_equality) return "obstructed (" + k + " ≥ " + rhs + ", equality case)";
  if (v.obstructed) return "obstructed (" + k + " ≥ " + rhs + ")";
  return "not obstructed (" + k + " < " + rhs + ")";
}

std::string paren_if_compound(const RhoPoly& p) {
  std::string s = to_string(p);
  long terms = std::count_if(p.coefficients().begin(), p.coefficients().end(),
                             [](const Rational& c) { return !c.is_zero(); });
  return terms > 1 ? "(" + s + ")" : s;
}

std::string render_prefactor(const Rational& c, int pi_power) {
  std::string s = c.str();
  if (pi_power == 2) s += " π²";
  else if (pi_power != 0) s += " π^" + std::to_string(pi_power);
  return s + " χ/ε";
}

void note_discrepancy(std::ostream& out, const HomeoClass& c) {
  if (auto note = class_discrepancy_note(c)) out << "note: " << *note << '\n';
}

int cmd_invariants(const std::string& source, std::ostream& out) {
  auto ast = dsl::parse(source);
  FourManifold m = dsl::evaluate(*ast);
  Table t(out);
  t.row("expression", dsl::print(*ast));
  t.row("chi", m.top.euler.str());
  t.row("tau", m.top.signature.str());
  t.row("b1", opt_str(m.top.b1));
  t.row("b_plus", opt_str(m.top.b_plus()));
  t.row("b_minus", opt_str(m.top.b_minus()));
  t.row("c1^2", opt_str(m.c1_squared));
  t.row("p_g", m.surface ? m.surface->geometric_genus.str() : "unknown");
  t.row("simply_connected", yes_no(m.top.simply_connected));
  t.row("spin", yes_no(m.top.spin));
  t.row("hitchin_thorpe", to_string(hitchin_thorpe(m.top)));
  if (m.top.simply_connected && m.top.b2() && *m.top.b2() >= 1) {
    HomeoClass c = homeo_class(m.top);
    t.row("homeo_class", render(c));
    note_discrepancy(out, c);
  }
  return kExitOk;
}

int cmd_obstruct(const std::string& source, long k, const std::string& threshold_text, std::ostream& out) {
  Threshold threshold = threshold_from_string(threshold_text);
  auto ast = dsl::parse(source);
  FourManifold x = dsl::evaluate(*ast);
  if (!x.surface) throw NotApplicable("'" + dsl::print(*ast) + "' is not a complex surface");
  ObstructionVerdict v = einstein_obstruction(*x.surface, k, threshold);
  ObstructionReport report = obstruction_report(*x.surface, k, threshold);
  FourManifold m = blow_up(x, k);

  out << verdict_line(v) << '\n';
  Table t(out);
  t.row("surface", dsl::print(*ast));
  t.row("c1^2(X)", x.surface->c1_squared.str());
  t.row("blowups", std::to_string(k));
  t.row("threshold", to_string(threshold));
  t.row("sw_floor", sw_einstein_floor(*x.surface).str());
  t.row("einstein_budget", einstein_budget_identity(m.top).str());
  t.row("hitchin_thorpe", to_string(report.hitchin_thorpe));
  for (const auto& verdict : report.verdicts)
    out << "[" << (verdict.holds ? "yes" : "no") << "] " << verdict.criterion << ": " << verdict.provenance << '\n';
  return kExitOk;
}

int cmd_homeo(const std::string& left, const std::string& right, std::ostream& out) {
  auto a = dsl::parse(left);
  auto b = dsl::parse(right);
  FourManifold ma = dsl::evaluate(*a);
  FourManifold mb = dsl::evaluate(*b);
  HomeoClass ca = homeo_class(ma.top);
  HomeoClass cb = homeo_class(mb.top);
  out << dsl::print(*a) << ": " << render(ca) << '\n';
  out << dsl::print(*b) << ": " << render(cb) << '\n';
  if (ca == cb) {
    out << "homeomorphic: " << render(ca) << '\n';
  } else {
    out << "not homeomorphic\n";
  }
  note_discrepancy(out, ca);
  if (!(ca == cb)) note_discrepancy(out, cb);
  return kExitOk;
}

int cmd_pairs(const PairSearchSpace& space, unsigned threads, const std::string& out_path, std::ostream& out) {
  std::vector<HomeoPair> pairs = find_pairs(space, threads);
  std::vector<GeographyRow> rows;
  rows.reserve(pairs.size());
  for (const auto& p : pairs) rows.push_back(to_row(p));
  if (out_path.empty()) {
    emit_csv(rows, out);
  } else {
    emit_csv(rows, out_path);
    out << "wrote " << rows.size() << " pair" << (rows.size() == 1 ? "" : "s") << " to " << out_path << '\n';
  }
  return kExitOk;
}

int cmd_sharpness(long p, long n, std::size_t order, std::ostream& out) {
  if (order < 1) throw DomainError("--order must be at least 1");
  KodairaFibration k = kodaira_fibration(KodairaData{p, n});
  FibrationGeometry g = fibration_geometry(KodairaData{p, n});
  Rational rho_value = g.signature / g.euler;

  Table t(out);
  t.row("fibration", "kodaira(" + std::to_string(p) + "," + std::to_string(n) + ")");
  t.row("chi", k.top.euler.str());
  t.row("tau", k.top.signature.str());
  t.row("c1^2", k.c1_squared.str());
  t.row("fiber genera", k.fiber_genus_over_base.str() + " (over B), " + k.fiber_genus_over_cover.str() + " (over C)");
  t.row("F.c1", g.fiber_dot_c1.str());
  t.row("rho = tau/chi", rho_value.str());
  t.row("hitchin_thorpe", to_string(hitchin_thorpe(k.top)));

  NormExpansions norms = norm_expansions(g, order);
  out << "expansions (value = prefactor · [series]):\n";
  for (const NormExpansion* e : {&norms.scalar, &norms.self_dual_weyl, &norms.anti_self_dual_weyl,
                                 &norms.reversed_c1_plus, &norms.reversed_c1_minus}) {
    out << "  " << e->name << " = " << render_prefactor(e->prefactor, e->pi_power) << " [" << to_string(e->series)
        << "]\n";
  }
  out << "chern identity |c̄1-|² - |c̄1+|² = 2χ - 3τ: "
      << (verify_chern_class_identity(g) && verify_chern_class_identity_symbolic(g) ? "verified" : "FAILED") << '\n';

  ProbeSeries probe = normalized_probe(norms);
  out << "probe (1-δ)√A + δ√B ≥ √C after dividing by " << render_prefactor(probe.common_prefactor, probe.pi_power)
      << " under the root:\n";
  out << "  A = " << to_string(probe.scalar) << '\n';
  out << "  B = " << to_string(probe.weyl) << '\n';
  out << "  C = " << to_string(probe.chern) << '\n';
  DeltaBound bound = delta_bound(probe, RhoSign::positive);
  out << "first order: √A = 1 + " << paren_if_compound(bound.sqrt_scalar_1) << "ε, √B = 1 + "
      << paren_if_compound(bound.sqrt_weyl_1) << "ε, √C = 1 + " << paren_if_compound(bound.sqrt_chern_1) << "ε\n";
  out << "collected: " << paren_if_compound(bound.lhs) << "ε ≥ " << paren_if_compound(bound.delta_coeff) << "εδ\n";
  out << "for ϱ > 0: " << describe(bound) << '\n';
  out << "at ϱ = " << rho_value.str() << ": " << describe(delta_bound(probe, rho_value)) << '\n';
  return kExitOk;
}

int cmd_catalog_add(const std::string& path, const std::string& name, const std::string& expr, std::ostream& out) {
  Catalog cat = Catalog::load(path);
  const CatalogEntry& e = cat.add(name, expr);
  cat.save();
  out << e.name << " = " << e.expr << '\n';
  return kExitOk;
}

int cmd_catalog_list(const std::string& path, std::ostream& out) {
  Catalog cat = Catalog::load(path);
  for (const auto& e : cat.entries()) out << e.name << " = " << e.expr << '\n';
  return kExitOk;
}

int cmd_catalog_show(const std::string& path, const std::string& name, std::ostream& out) {
  Catalog cat = Catalog::load(path);
  const CatalogEntry* e = cat.find(name);
  if (!e) throw DomainError("no catalog entry named '" + name + "' in " + path);
  if (!cat.cache_current()) cat.save();
  Table t(out);
  t.row("name", e->name);
  t.row("expression", e->expr);
  t.row("chi", e->cached.top.euler.str());
  t.row("tau", e->cached.top.signature.str());
  t.row("b1", opt_str(e->cached.top.b1));
  t.row("b_plus", opt_str(e->cached.top.b_plus()));
  t.row("b_minus", opt_str(e->cached.top.b_minus()));
  t.row("c1^2", opt_str(e->cached.c1_squared));
  t.row("p_g", e->cached.surface ? e->cached.surface->geometric_genus.str() : "unknown");
  return kExitOk;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Invariants, Einstein obstructions and homeomorphism pairs of complex surfaces", "surfgeo"};
  app.require_subcommand(1);

  std::string expr1, expr2;

  auto* inv = app.add_subcommand("invariants", "Print the invariants of a construction");
  inv->add_option("expr", expr1, "Construction expression")->required();

  long blowups = 0;
  std::string threshold = "1/3";
  auto* obs = app.add_subcommand("obstruct", "Decide the Einstein obstruction for X # k CP2bar");
  obs->add_option("expr", expr1, "Construction of the minimal surface X")->required();
  obs->add_option("--blowups,-k", blowups, "Number of blown-up points")->required();
  obs->add_option("--threshold", threshold, "1/3, 25/57 or 2/3")->check(CLI::IsMember({"1/3", "25/57", "2/3"}));

  auto* hom = app.add_subcommand("homeo", "Compare homeomorphism classes");
  hom->add_option("left", expr1)->required();
  hom->add_option("right", expr2)->required();

  std::string d_range, k_range, bidegree_range, out_path;
  std::vector<std::string> ci_lists;
  bool plane10 = false;
  unsigned threads = 0;
  auto* prs = app.add_subcommand("pairs", "Search for homeomorphic Einstein / non-Einstein pairs");
  prs->add_option("--d-range", d_range, "Hypersurface degrees A..B");
  prs->add_option("--ci", ci_lists, "Complete intersection degrees, e.g. 3,3 (repeatable)");
  prs->add_option("--k-range", k_range, "Blow-up counts A..B")->required();
  prs->add_option("--bidegree-range", bidegree_range, "Branch bidegrees a <= b in A..B");
  prs->add_flag("--plane10", plane10, "Include horikawa_plane10 as a partner");
  prs->add_option("--threads", threads, "Worker threads (0 = hardware concurrency)");
  prs->add_option("--out", out_path, "CSV output file (default: standard output)");

  long p = 0, n = 0;
  std::size_t order = 2;
  auto* shp = app.add_subcommand("sharpness", "Expand the Kähler-class probe on a Kodaira fibration");
  shp->add_option("--p", p, "Base genus")->required();
  shp->add_option("--n", n, "Degree of the unbranched cover")->required();
  shp->add_option("--order", order, "Expansion order in ε");

  std::string catalog_path = Catalog::default_path();
  std::string name;
  auto* cat = app.add_subcommand("catalog", "Named constructions (file from $SURFGEO_CATALOG)");
  cat->add_option("--catalog", catalog_path, "Catalog file");
  cat->require_subcommand(1);
  auto* cat_add = cat->add_subcommand("add", "Add a named construction");
  cat_add->add_option("name", name)->required();
  cat_add->add_option("expr", expr1)->required();
  auto* cat_list = cat->add_subcommand("list", "List entries");
  auto* cat_show = cat->add_subcommand("show", "Show an entry with its invariants");
  cat_show->add_option("name", name)->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*inv) return cmd_invariants(expr1, out);
    if (*obs) return cmd_obstruct(expr1, blowups, threshold, out);
    if (*hom) return cmd_homeo(expr1, expr2, out);
    if (*prs) {
      PairSearchSpace space;
      if (!d_range.empty()) {
        Range r = parse_range(d_range);
        space.d_first = r.first;
        space.d_last = r.last;
      }
      Range kr = parse_range(k_range);
      space.k_first = kr.first;
      space.k_last = kr.last;
      if (!bidegree_range.empty()) {
        Range r = parse_range(bidegree_range);
        space.bidegree_first = r.first;
        space.bidegree_last = r.last;
      }
      for (const auto& ci : ci_lists) space.complete_intersections.push_back(parse_degree_list(ci));
      space.include_plane10 = plane10;
      return cmd_pairs(space, threads, out_path, out);
    }
    if (*shp) return cmd_sharpness(p, n, order, out);
    if (*cat_add) return cmd_catalog_add(catalog_path, name, expr1, out);
    if (*cat_list) return cmd_catalog_list(catalog_path, out);
    if (*cat_show) return cmd_catalog_show(catalog_path, name, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const CLI::ValidationError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  }
  err << app.help();
  return kExitUsage;
}

}  // namespace surfgeo::cli
