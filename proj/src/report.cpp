#include "torsion_genus/report.hpp"

#include <cstdio>

#include <json.hpp>

namespace torsion_genus {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12e", v);
  return buf;
}

std::string to_tsv(const Report& report) {
  std::string out;
  out += "# command\t" + report.command + "\n";
  for (const auto& [k, v] : report.config) out += "# " + k + "\t" + v + "\n";
  for (std::size_t i = 0; i < report.columns.size(); ++i) {
    if (i) out += "\t";
    out += report.columns[i];
  }
  out += "\n";
  for (const auto& row : report.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += "\t";
      out += row[i];
    }
    out += "\n";
  }
  out += "verdict\t" + report.verdict + "\n";
  return out;
}

std::string to_json(const Report& report) {
  nlohmann::ordered_json j;
  j["command"] = report.command;
  nlohmann::ordered_json config = nlohmann::ordered_json::object();
  for (const auto& [k, v] : report.config) config[k] = v;
  j["config"] = config;
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& row : report.rows) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < row.size() && i < report.columns.size(); ++i)
      obj[report.columns[i]] = row[i];
    rows.push_back(obj);
  }
  j["rows"] = rows;
  j["verdict"] = report.verdict;
  return j.dump(2) + "\n";
}

}  // namespace torsion_genus
