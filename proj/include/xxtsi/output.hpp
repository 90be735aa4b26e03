#pragma once

#include <ostream>
#include <string>
#include <variant>
#include <vector>

namespace xxtsi {

// One table with self-describing metadata; renders to CSV ('#'-prefixed
// metadata lines, header row, data rows) or JSON (metadata object + array of
// row objects). Numbers print with 12 significant digits.
using Cell = std::variant<double, std::string>;

struct OutputTable {
  std::vector<std::pair<std::string, std::string>> metadata;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  std::vector<std::string> summary;  // trailing comment lines / json strings saying what was found
};

std::string format_sig(double v);  // 12 significant digits

void write_csv(std::ostream& os, const OutputTable& t);
void write_json(std::ostream& os, const OutputTable& t);

}  // namespace xxtsi
