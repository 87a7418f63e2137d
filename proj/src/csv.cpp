#include "surfgeo/csv.hpp"

#include <fstream>
#include <ostream>

#include "surfgeo/errors.hpp"

namespace surfgeo {

GeographyRow to_row(const HomeoPair& pair) {
  GeographyRow row;
  row.d = pair.obstructed_label;
  row.k = pair.k;
  row.a = pair.a;
  row.b = pair.b;
  row.chi = pair.topology.euler;
  row.tau = pair.topology.signature;
  row.b_plus = pair.cls.b_plus;
  row.b_minus = pair.cls.b_minus;
  row.obstructed = true;
  row.einstein_partner = pair.partner;
  return row;
}

std::string csv_field(const std::string& raw) {
  if (raw.find_first_of(",\"\r\n") == std::string::npos) return raw;
  std::string out = "\"";
  for (char c : raw) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

void emit_csv(const std::vector<GeographyRow>& rows, std::ostream& out) {
  out << kGeographyHeader << '\n';
  auto opt = [](const std::optional<long>& v) { return v ? std::to_string(*v) : std::string(); };
  for (const auto& r : rows) {
    out << csv_field(r.d) << ',' << r.k << ',' << opt(r.a) << ',' << opt(r.b) << ',' << r.chi << ',' << r.tau << ','
        << r.b_plus << ',' << r.b_minus << ',' << (r.obstructed ? "true" : "false") << ','
        << csv_field(r.einstein_partner) << '\n';
  }
}

void emit_csv(const std::vector<GeographyRow>& rows, const std::string& path) {
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw Error("cannot open '" + path + "' for writing");
  emit_csv(rows, file);
  file.flush();
  if (!file) throw Error("failed writing '" + path + "'");
}

}  // namespace surfgeo
