#include "ghyp/fourier.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

namespace ghyp {

namespace {

std::vector<std::string> coordinate_columns(const GroupId& group) {
  if (group.is_su2()) return {"phi", "theta", "psi"};
  std::vector<std::string> cols;
  for (int k = 1; k <= group.torus_dim; ++k) cols.push_back("x" + std::to_string(k));
  return cols;
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  std::stringstream ss(line);
  while (std::getline(ss, field, ',')) out.push_back(field);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

constexpr double kCoordinateTolerance = 1e-12;

}  // namespace

void write_grid_function_csv(std::ostream& out, const GridFunction& f) {
  const auto& grid = *f.grid;
  const auto coords = coordinate_columns(grid.group);
  for (const auto& c : coords) out << c << ',';
  out << "weight";
  for (int i = 0; i < f.fiber_dim(); ++i) {
    if (f.fiber_dim() == 1) out << ",re,im";
    else out << ",re_" << i + 1 << ",im_" << i + 1;
  }
  out << '\n';
  for (std::size_t j = 0; j < grid.size(); ++j) {
    for (double c : grid.nodes[j].coords) out << format_double(c) << ',';
    out << format_double(grid.weights[j]);
    for (int i = 0; i < f.fiber_dim(); ++i) {
      const Complex v = f.values(static_cast<Eigen::Index>(j), i);
      out << ',' << format_double(v.real()) << ',' << format_double(v.imag());
    }
    out << '\n';
  }
}

GridFunction read_grid_function_csv(std::istream& in, std::shared_ptr<const QuadratureGrid> grid) {
  const auto coords = coordinate_columns(grid->group);
  std::string line;
  std::size_t line_no = 0;
  auto fail = [&](const std::string& what) -> ParseError {
    return ParseError("CSV line " + std::to_string(line_no) + ": " + what);
  };

  if (!std::getline(in, line)) throw ParseError("CSV: missing header row");
  ++line_no;
  if (!line.empty() && line.back() == '\r') line.pop_back();
  const auto header = split_csv(line);
  const std::size_t ncoord = coords.size();
  if (header.size() < ncoord + 3 || (header.size() - ncoord - 1) % 2 != 0)
    throw fail("header must be coordinates, weight, then re/im column pairs");
  for (std::size_t k = 0; k < ncoord; ++k)
    if (header[k] != coords[k]) throw fail("column " + std::to_string(k + 1) + " must be '" + coords[k] + "', got '" + header[k] + "'");
  if (header[ncoord] != "weight") throw fail("column " + std::to_string(ncoord + 1) + " must be 'weight'");
  const int fibers = static_cast<int>((header.size() - ncoord - 1) / 2);

  GridFunction f;
  f.values.resize(static_cast<Eigen::Index>(grid->size()), fibers);
  std::size_t row = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (row >= grid->size()) throw fail("more rows than grid nodes (" + std::to_string(grid->size()) + ")");
    const auto fields = split_csv(line);
    if (fields.size() != header.size())
      throw fail("expected " + std::to_string(header.size()) + " fields, got " + std::to_string(fields.size()));
    std::vector<double> nums(fields.size());
    for (std::size_t k = 0; k < fields.size(); ++k) {
      std::size_t used = 0;
      try {
        nums[k] = std::stod(fields[k], &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used == 0 || used != fields[k].size()) throw fail("field '" + header[k] + "' is not a number: '" + fields[k] + "'");
    }
    const auto& node = grid->nodes[row];
    for (std::size_t k = 0; k < ncoord; ++k)
      if (std::abs(nums[k] - node.coords[k]) > kCoordinateTolerance)
        throw fail("field '" + header[k] + "' = " + fields[k] + " does not match grid node " + std::to_string(row) +
                   " (" + format_double(node.coords[k]) + ")");
    for (int i = 0; i < fibers; ++i)
      f.values(static_cast<Eigen::Index>(row), i) = Complex(nums[ncoord + 1 + 2 * static_cast<std::size_t>(i)],
                                                            nums[ncoord + 2 + 2 * static_cast<std::size_t>(i)]);
    ++row;
  }
  if (row != grid->size())
    throw ParseError("CSV: " + std::to_string(row) + " data rows, grid has " + std::to_string(grid->size()) + " nodes");
  f.grid = std::move(grid);
  return f;
}

}  // namespace ghyp
