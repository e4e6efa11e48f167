#include "qhjb/io.hpp"

#include <cstdio>
#include <fstream>

#include "qhjb/types.hpp"

namespace qhjb {

std::string format_g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void write_csv(std::ostream& out, const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows) {
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (i) out << ',';
    out << header[i];
  }
  out << '\n';
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out << ',';
      out << row[i];
    }
    out << '\n';
  }
}

nlohmann::ordered_json make_report(const std::string& kind) {
  nlohmann::ordered_json j;
  j["schema_version"] = 1;
  j["kind"] = kind;
  return j;
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot open output file: " + path);
  out << content;
  out.flush();
  if (!out) throw ConfigError("failed writing output file: " + path);
}

}  // namespace qhjb
