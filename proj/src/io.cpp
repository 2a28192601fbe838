#include "esdlab/io.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <json.hpp>
#include <sstream>

#include "esdlab/errors.hpp"

namespace esdlab::io {

namespace {

std::string cell_text(const Cell& c) {
  if (const double* d = std::get_if<double>(&c)) return format_number(*d);
  return std::get<std::string>(c);
}

std::vector<std::string> split_csv_line(std::string_view line) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    out.emplace_back(line.substr(start, comma == std::string_view::npos ? std::string_view::npos
                                                                         : comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

Cell parse_cell(const std::string& text) {
  if (text.empty()) return text;
  const char* begin = text.c_str();
  char* end = nullptr;
  const double v = std::strtod(begin, &end);
  if (end == begin + text.size()) return v;
  return text;
}

// Linear blend through a short perceptual ramp (dark blue -> teal -> yellow).
std::string colour(double v) {
  constexpr std::array<std::array<double, 3>, 3> stops{{{68, 1, 84}, {33, 145, 140}, {253, 231, 37}}};
  const double x = std::clamp(std::isfinite(v) ? v : 0.0, 0.0, 1.0) * 2.0;
  const std::size_t i = std::min<std::size_t>(static_cast<std::size_t>(x), 1);
  const double f = x - static_cast<double>(i);
  char buf[8];
  std::snprintf(buf, sizeof buf, "#%02x%02x%02x",
                static_cast<int>(std::lround(stops[i][0] + f * (stops[i + 1][0] - stops[i][0]))),
                static_cast<int>(std::lround(stops[i][1] + f * (stops[i + 1][1] - stops[i][1]))),
                static_cast<int>(std::lround(stops[i][2] + f * (stops[i + 1][2] - stops[i][2]))));
  return buf;
}

}  // namespace

void Table::add_meta(std::string key, std::string value) {
  metadata.emplace_back(std::move(key), std::move(value));
}

void Table::add_meta(std::string key, double value) {
  metadata.emplace_back(std::move(key), format_number(value));
}

std::size_t Table::column(std::string_view name) const {
  const auto it = std::find(columns.begin(), columns.end(), name);
  if (it == columns.end()) throw StructureError("no column named " + std::string(name));
  return static_cast<std::size_t>(it - columns.begin());
}

std::vector<double> Table::numeric_column(std::string_view name) const {
  const std::size_t k = column(name);
  std::vector<double> out;
  out.reserve(rows.size());
  for (const auto& row : rows) {
    const double* d = std::get_if<double>(&row.at(k));
    if (!d) throw ContractError("column " + std::string(name) + " is not numeric");
    out.push_back(*d);
  }
  return out;
}

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  if (x == 0.0) return "0";  // folds -0
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

std::string to_csv(const Table& table) {
  std::ostringstream os;
  for (const auto& [k, v] : table.metadata) os << "# " << k << ": " << v << '\n';
  for (std::size_t i = 0; i < table.columns.size(); ++i)
    os << (i ? "," : "") << table.columns[i];
  os << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << cell_text(row[i]);
    os << '\n';
  }
  return os.str();
}

std::string to_json(const Table& table) {
  nlohmann::ordered_json doc;
  nlohmann::ordered_json meta = nlohmann::ordered_json::object();
  for (const auto& [k, v] : table.metadata) meta[k] = v;
  doc["metadata"] = meta;
  nlohmann::ordered_json data = nlohmann::ordered_json::object();
  for (std::size_t k = 0; k < table.columns.size(); ++k) {
    nlohmann::ordered_json col = nlohmann::ordered_json::array();
    for (const auto& row : table.rows) {
      if (const double* d = std::get_if<double>(&row[k])) {
        if (std::isfinite(*d))
          col.push_back(std::strtod(format_number(*d).c_str(), nullptr));
        else
          col.push_back(nullptr);
      } else {
        col.push_back(std::get<std::string>(row[k]));
      }
    }
    data[table.columns[k]] = std::move(col);
  }
  doc["columns"] = std::move(data);
  return doc.dump(2) + "\n";
}

Table parse_csv(std::string_view text) {
  Table table;
  bool header_seen = false;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;
    if (line.front() == '#') {
      line.remove_prefix(1);
      if (!line.empty() && line.front() == ' ') line.remove_prefix(1);
      const std::size_t colon = line.find(": ");
      if (colon == std::string_view::npos)
        table.add_meta(std::string(line), "");
      else
        table.add_meta(std::string(line.substr(0, colon)), std::string(line.substr(colon + 2)));
      continue;
    }
    if (!header_seen) {
      table.columns = split_csv_line(line);
      header_seen = true;
      continue;
    }
    std::vector<Cell> row;
    for (const std::string& field : split_csv_line(line)) row.push_back(parse_cell(field));
    if (row.size() != table.columns.size())
      throw StructureError("CSV row width does not match the header");
    table.rows.push_back(std::move(row));
  }
  return table;
}

std::string heatmap_svg(const sweep::SweepGrid& grid, std::string_view title,
                        std::string_view time_label, double time_scale) {
  constexpr double cell_w = 4.0, cell_h = 4.0, margin = 50.0;
  const double w = cell_w * static_cast<double>(grid.cols());
  const double h = cell_h * static_cast<double>(grid.rows());
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << format_number(w + 2 * margin)
     << "\" height=\"" << format_number(h + 2 * margin) << "\">\n";
  os << "<title>" << title << "</title>\n";
  os << "<text x=\"" << format_number(margin) << "\" y=\"20\" font-size=\"14\">" << title
     << "</text>\n";
  os << "<g shape-rendering=\"crispEdges\">\n";
  for (std::size_t r = 0; r < grid.rows(); ++r)
    for (std::size_t c = 0; c < grid.cols(); ++c) {
      const double x = margin + cell_w * static_cast<double>(c);
      const double y = margin + h - cell_h * static_cast<double>(r + 1);
      os << "<rect x=\"" << format_number(x) << "\" y=\"" << format_number(y) << "\" width=\""
         << format_number(cell_w) << "\" height=\"" << format_number(cell_h) << "\" fill=\""
         << colour(grid.at(r, c)) << "\"/>\n";
    }
  os << "</g>\n";
  const double t_lo = grid.time_axis.empty() ? 0.0 : grid.time_axis.front() * time_scale;
  const double t_hi = grid.time_axis.empty() ? 0.0 : grid.time_axis.back() * time_scale;
  const double th_lo = grid.theta_axis.empty() ? 0.0 : grid.theta_axis.front();
  const double th_hi = grid.theta_axis.empty() ? 0.0 : grid.theta_axis.back();
  os << "<text x=\"" << format_number(margin) << "\" y=\"" << format_number(h + margin + 20)
     << "\" font-size=\"12\">" << time_label << ": " << format_number(t_lo) << " .. "
     << format_number(t_hi) << "</text>\n";
  os << "<text x=\"4\" y=\"" << format_number(margin - 6) << "\" font-size=\"12\">theta: "
     << format_number(th_lo) << " .. " << format_number(th_hi) << "</text>\n";
  os << "</svg>\n";
  return os.str();
}

}  // namespace esdlab::io
