#pragma once

#include <string>
#include <utility>
#include <vector>

namespace torsion_genus {

/// Data-first command report: a column set, string-valued rows, and a
/// one-word verdict. Rendered as TSV (default) or JSON; both renderings are
/// byte-stable for identical inputs.
struct Report {
  std::string command;
  std::vector<std::pair<std::string, std::string>> config;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  std::string verdict;

  void add_config(const std::string& key, const std::string& value) {
    config.emplace_back(key, value);
  }
  void add_row(std::vector<std::string> row) { rows.push_back(std::move(row)); }
};

std::string to_tsv(const Report& report);
std::string to_json(const Report& report);

std::string format_double(double v);

}  // namespace torsion_genus
