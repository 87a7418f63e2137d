#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "surfgeo/homeo.hpp"
#include "surfgeo/rational.hpp"

namespace surfgeo {

struct GeographyRow {
  std::string d;  // hypersurface degree, or "ci(a;b;...)"
  long k = 0;
  std::optional<long> a, b;
  BigInt chi, tau, b_plus, b_minus;
  bool obstructed = false;
  std::string einstein_partner;
};

inline constexpr const char* kGeographyHeader = "d,k,a,b,chi,tau,b_plus,b_minus,obstructed,einstein_partner";

GeographyRow to_row(const HomeoPair& pair);

// RFC 4180: quote fields containing separators, quotes or line breaks.
std::string csv_field(const std::string& raw);

// Header plus one LF-terminated line per row.
void emit_csv(const std::vector<GeographyRow>& rows, std::ostream& out);
// Throws Error naming the path on I/O failure.
void emit_csv(const std::vector<GeographyRow>& rows, const std::string& path);

}  // namespace surfgeo
