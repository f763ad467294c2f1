#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace catpark {

enum class OutputFormat { text, csv, json };

/// A titled grid of strings, rendered as aligned text, CSV or JSON.
struct TextTable {
  std::string title;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> notes;

  std::string render(OutputFormat format) const;
  nlohmann::json to_json() const;
};

/// RFC 4180 quoting when the cell holds a comma, quote or newline.
std::string csv_cell(const std::string& cell);

/// Ids 1..10: caterpillar distributions, theta, the two decomposition
/// tables, R_n, gamma for m = 2, 3, 4, eta, and the B_2(4, .) tensor.
TextTable reference_table(int id);
constexpr int kFirstTableId = 1;
constexpr int kLastTableId = 10;

}  // namespace catpark
