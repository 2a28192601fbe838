#pragma once

// Tabular output: CSV with '#'-prefixed metadata lines and one header row,
// a JSON mirror with the same field names, and plain SVG heatmaps.
//
// Numbers are printed with 12 significant digits so identical inputs give
// byte-identical files.

#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "esdlab/sweep.hpp"

namespace esdlab::io {

using Cell = std::variant<double, std::string>;

struct Table {
  std::vector<std::pair<std::string, std::string>> metadata;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  void add_meta(std::string key, std::string value);
  void add_meta(std::string key, double value);
  /// Index of a column; throws StructureError if absent.
  std::size_t column(std::string_view name) const;
  /// Numeric column values; throws ContractError on a string cell.
  std::vector<double> numeric_column(std::string_view name) const;
};

std::string format_number(double x);

std::string to_csv(const Table& table);
std::string to_json(const Table& table);
/// Inverse of to_csv. Cells that parse completely as numbers become doubles.
Table parse_csv(std::string_view text);

/// rect-grid heatmap, rows = theta (bottom to top), columns = time, with a
/// linear colour scale on [0, 1].
std::string heatmap_svg(const sweep::SweepGrid& grid, std::string_view title,
                        std::string_view time_label = "gt", double time_scale = 1.0);

}  // namespace esdlab::io
