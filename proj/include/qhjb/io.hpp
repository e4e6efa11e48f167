#pragma once

#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

namespace qhjb {

// Fixed %.17g formatting: enough digits to round-trip any double, and byte
// stable across runs (the shortest-representation printers are not pinned by
// any standard).
std::string format_g17(double v);

// Header line then rows, comma separated, '\n' line endings.
void write_csv(std::ostream& out, const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows);

// Skeleton for every JSON report: {"schema_version": 1, "kind": <kind>}.
nlohmann::ordered_json make_report(const std::string& kind);

// Write and fail loudly; streams keep errors quiet by default.
void write_text_file(const std::string& path, const std::string& content);

}  // namespace qhjb
