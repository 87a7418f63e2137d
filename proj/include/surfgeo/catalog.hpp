#pragma once

#include <optional>
#include <string>
#include <vector>

#include "surfgeo/invariants.hpp"

namespace surfgeo {

struct CatalogEntry {
  std::string name;
  std::string expr;  // normalized DSL text
  FourManifold cached;
};

// Named constructions, one `name = expression` per line; blank lines and lines
// whose first non-blank character is '#' are ignored. Cached invariants live
// in `<path>.cache` and are recomputed from the expression whenever they are
// read.
class Catalog {
 public:
  // Default location: $SURFGEO_CATALOG, else "surfgeo.catalog".
  static std::string default_path();

  // Missing file = empty catalog.
  static Catalog load(const std::string& path);

  const std::string& path() const noexcept { return path_; }
  const std::vector<CatalogEntry>& entries() const noexcept { return entries_; }
  const CatalogEntry* find(const std::string& name) const;

  // Parses and normalizes `expr`; throws DomainError on a duplicate name,
  // ParseError on bad syntax.
  const CatalogEntry& add(const std::string& name, const std::string& expr);

  // Rewrites the catalog file and its cache sidecar.
  void save() const;

  // True when the sidecar matches the freshly computed invariants.
  bool cache_current() const;

  static bool valid_name(const std::string& name);
  std::string cache_path() const { return path_ + ".cache"; }

 private:
  std::string cache_text() const;

  std::string path_;
  std::vector<CatalogEntry> entries_;
};

}  // namespace surfgeo
