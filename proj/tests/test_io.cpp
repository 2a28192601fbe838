#include <doctest.h>

#include <cstdlib>
#include <json.hpp>
#include <numbers>

#include "esdlab/errors.hpp"
#include "esdlab/io.hpp"
#include "esdlab/sweep.hpp"

using namespace esdlab;
using std::numbers::pi;

namespace {

io::Table small_table() {
  io::Table t;
  t.add_meta("model", "1");
  t.add_meta("g", 1.0);
  t.columns = {"t", "N_AB", "label"};
  t.rows.push_back({0.0, 1.0, std::string("start")});
  t.rows.push_back({1.0 / 3.0, std::exp(-8.0), std::string("x")});
  return t;
}

std::size_t count(const std::string& s, const std::string& needle) {
  std::size_t n = 0;
  for (std::size_t at = s.find(needle); at != std::string::npos; at = s.find(needle, at + 1)) ++n;
  return n;
}

}  // namespace

TEST_SUITE("io") {

TEST_CASE("number formatting") {
  CHECK(io::format_number(0.0) == "0");
  CHECK(io::format_number(-0.0) == "0");
  CHECK(io::format_number(1.0) == "1");
  CHECK(io::format_number(1.0 / 3.0) == "0.333333333333");
  CHECK(io::format_number(std::exp(-8.0)) == "0.000335462627903");
  CHECK(io::format_number(1e-20) == "1e-20");
  CHECK(io::format_number(std::nan("")) == "nan");
}

TEST_CASE("CSV layout") {
  const std::string csv = io::to_csv(small_table());
  CHECK(csv ==
        "# model: 1\n# g: 1\nt,N_AB,label\n0,1,start\n0.333333333333,0.000335462627903,x\n");
}

TEST_CASE("CSV round trip reproduces the grid at printed precision") {
  const auto grid = sweep::sweep_theta_time(DriveParams{1.0, 0.5}, Family::Psi, {0.0, pi, 19},
                                            {0.0, 8 * pi, 41});
  io::Table t;
  t.add_meta("model", "1");
  t.columns = {"theta", "t", "N_AB"};
  for (std::size_t r = 0; r < grid.rows(); ++r)
    for (std::size_t c = 0; c < grid.cols(); ++c)
      t.rows.push_back({grid.theta_axis[r], grid.time_axis[c], grid.at(r, c)});
  const io::Table back = io::parse_csv(io::to_csv(t));
  CHECK(back.metadata == t.metadata);
  CHECK(back.columns == t.columns);
  const auto n = back.numeric_column("N_AB");
  REQUIRE(n.size() == grid.values.size());
  for (std::size_t i = 0; i < n.size(); ++i) {
    CHECK(n[i] == std::strtod(io::format_number(grid.values[i]).c_str(), nullptr));
    CHECK(std::abs(n[i] - grid.values[i]) <= 1e-12 * std::max(1.0, std::abs(grid.values[i])));
  }
  CHECK(io::to_csv(back) == io::to_csv(t));
}

TEST_CASE("CSV parser keeps string cells and rejects ragged rows") {
  const io::Table back = io::parse_csv(io::to_csv(small_table()));
  CHECK(std::get<std::string>(back.rows[0][2]) == "start");
  CHECK_THROWS_AS(back.numeric_column("label"), ContractError);
  CHECK_THROWS_AS(back.column("nope"), StructureError);
  CHECK_THROWS_AS(io::parse_csv("a,b\n1\n"), StructureError);
}

TEST_CASE("JSON mirror") {
  const auto doc = nlohmann::json::parse(io::to_json(small_table()));
  CHECK(doc["metadata"]["model"] == "1");
  CHECK(doc["columns"]["t"].size() == 2);
  CHECK(doc["columns"]["N_AB"][1].get<double>() == std::strtod("0.000335462627903", nullptr));
  CHECK(doc["columns"]["label"][0] == "start");
  io::Table nan_table;
  nan_table.columns = {"x"};
  nan_table.rows.push_back({std::nan("")});
  CHECK(nlohmann::json::parse(io::to_json(nan_table))["columns"]["x"][0].is_null());
}

TEST_CASE("output is deterministic") {
  CHECK(io::to_csv(small_table()) == io::to_csv(small_table()));
  CHECK(io::to_json(small_table()) == io::to_json(small_table()));
}

TEST_CASE("SVG heatmap") {
  sweep::SweepGrid g;
  g.theta_axis = {0.0, 1.0};
  g.time_axis = {0.0, 1.0, 2.0};
  g.values = {0.0, 0.5, 1.0, 1.0, 2.0, -1.0};
  const std::string svg = io::heatmap_svg(g, "demo");
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(count(svg, "<rect") == 6);
  CHECK(count(svg, "fill=\"#440154\"") == 2);  // 0 and the clamped -1
  CHECK(count(svg, "fill=\"#fde725\"") == 3);  // 1 and the clamped 2
  CHECK(svg.find("</svg>") != std::string::npos);
}

}  // TEST_SUITE
