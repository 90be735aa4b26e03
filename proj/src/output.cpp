#include "xxtsi/output.hpp"

#include <cstdio>

#include <json.hpp>

namespace xxtsi {

std::string format_sig(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

void write_csv(std::ostream& os, const OutputTable& t) {
  for (const auto& [key, value] : t.metadata)
    os << "# " << key << " = " << value << "\n";
  for (std::size_t i = 0; i < t.columns.size(); ++i) {
    if (i) os << ",";
    os << t.columns[i];
  }
  os << "\n";
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) os << ",";
      if (const double* d = std::get_if<double>(&row[i]))
        os << format_sig(*d);
      else
        os << std::get<std::string>(row[i]);
    }
    os << "\n";
  }
  for (const auto& line : t.summary) os << "# " << line << "\n";
}

void write_json(std::ostream& os, const OutputTable& t) {
  nlohmann::json j;
  j["metadata"] = nlohmann::json::object();
  for (const auto& [key, value] : t.metadata) j["metadata"][key] = value;
  j["columns"] = t.columns;
  j["rows"] = nlohmann::json::array();
  for (const auto& row : t.rows) {
    nlohmann::json obj = nlohmann::json::object();
    for (std::size_t i = 0; i < row.size() && i < t.columns.size(); ++i) {
      if (const double* d = std::get_if<double>(&row[i]))
        obj[t.columns[i]] = *d;
      else
        obj[t.columns[i]] = std::get<std::string>(row[i]);
    }
    j["rows"].push_back(std::move(obj));
  }
  j["summary"] = t.summary;
  os << j.dump(2) << "\n";
}

}  // namespace xxtsi
