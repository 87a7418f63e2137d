#include "surfgeo/catalog.hpp"

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "surfgeo/dsl.hpp"
#include "surfgeo/errors.hpp"

namespace surfgeo {

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::string cache_line(const CatalogEntry& e) {
  auto opt = [](const std::optional<BigInt>& v) { return v ? v->str() : std::string("-"); };
  const FourManifold& m = e.cached;
  std::optional<BigInt> pg;
  if (m.surface) pg = m.surface->geometric_genus;
  return e.name + "\t" + m.top.euler.str() + "\t" + m.top.signature.str() + "\t" + opt(m.top.b1) + "\t" +
         opt(m.c1_squared) + "\t" + opt(pg);
}

}  // namespace

std::string Catalog::default_path() {
  if (const char* env = std::getenv("SURFGEO_CATALOG"); env && *env) return env;
  return "surfgeo.catalog";
}

bool Catalog::valid_name(const std::string& name) {
  if (name.empty() || !(std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_')) return false;
  for (char c : name)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == '.')) return false;
  return true;
}

Catalog Catalog::load(const std::string& path) {
  Catalog cat;
  cat.path_ = path;
  std::ifstream in(path);
  if (!in) return cat;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    auto eq = t.find('=');
    if (eq == std::string::npos) throw Error(path + ":" + std::to_string(lineno) + ": expected 'name = expression'");
    std::string name = trim(t.substr(0, eq));
    std::string expr = trim(t.substr(eq + 1));
    try {
      cat.add(name, expr);
    } catch (const Error& e) {
      throw Error(path + ":" + std::to_string(lineno) + ": " + e.what());
    }
  }
  return cat;
}

const CatalogEntry* Catalog::find(const std::string& name) const {
  for (const auto& e : entries_)
    if (e.name == name) return &e;
  return nullptr;
}

const CatalogEntry& Catalog::add(const std::string& name, const std::string& expr) {
  if (!valid_name(name)) throw DomainError("invalid catalog name '" + name + "'");
  if (find(name)) throw DomainError("catalog already has an entry named '" + name + "'");
  dsl::ExprPtr ast = dsl::parse(expr);
  entries_.push_back(CatalogEntry{name, dsl::print(*ast), dsl::evaluate(*ast)});
  return entries_.back();
}

void Catalog::save() const {
  std::ostringstream body;
  body << "# surfgeo catalog: name = expression\n";
  for (const auto& e : entries_) body << e.name << " = " << e.expr << '\n';
  for (const auto& [file, text] : {std::pair{path_, body.str()}, std::pair{cache_path(), cache_text()}}) {
    std::ofstream out(file, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot open '" + file + "' for writing");
    out << text;
    out.flush();
    if (!out) throw Error("failed writing '" + file + "'");
  }
}

std::string Catalog::cache_text() const {
  std::ostringstream cache;
  cache << "# name\tchi\ttau\tb1\tc1^2\tp_g\n";
  for (const auto& e : entries_) cache << cache_line(e) << '\n';
  return cache.str();
}

bool Catalog::cache_current() const {
  std::ifstream in(cache_path(), std::ios::binary);
  if (!in) return false;
  std::ostringstream existing;
  existing << in.rdbuf();
  return existing.str() == cache_text();
}

}  // namespace surfgeo
