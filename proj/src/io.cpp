#include "innerdist/io.hpp"

#include <charconv>

#include "innerdist/errors.hpp"

namespace innerdist {

namespace {

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = text.find('\n', pos);
    std::string_view line = text.substr(pos, end == std::string_view::npos ? std::string_view::npos : end - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    if (end == std::string_view::npos) break;
    pos = end + 1;
  }
  return lines;
}

bool is_blank(std::string_view line) {
  return line.find_first_not_of(" \t") == std::string_view::npos;
}

bool is_comment(std::string_view line) {
  const auto first = line.find_first_not_of(" \t");
  return first != std::string_view::npos && line[first] == '#';
}

std::vector<int> parse_row(std::string_view line, std::size_t line_no) {
  std::vector<int> row;
  std::size_t pos = 0;
  while (true) {
    pos = line.find_first_not_of(" \t", pos);
    if (pos == std::string_view::npos) break;
    std::size_t end = line.find_first_of(" \t", pos);
    if (end == std::string_view::npos) end = line.size();
    const std::string_view token = line.substr(pos, end - pos);
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
      throw ParseError("line " + std::to_string(line_no) + ": '" +
                       std::string(token) + "' is not an integer");
    }
    row.push_back(value);
    pos = end;
  }
  return row;
}

SquareGrid rows_to_grid(const std::vector<std::vector<int>>& rows) {
  if (rows.empty()) throw ParseError("no grid rows found");
  return SquareGrid::from_rows(rows);
}

}  // namespace

SquareGrid parse_grid_text(std::string_view text) {
  auto grids = parse_grid_list_text(text);
  if (grids.size() != 1) {
    throw ParseError(grids.empty() ? "no grid rows found"
                                   : "blank line inside grid");
  }
  return std::move(grids.front());
}

std::vector<SquareGrid> parse_grid_list_text(std::string_view text) {
  std::vector<SquareGrid> grids;
  std::vector<std::vector<int>> rows;
  std::size_t line_no = 0;
  for (std::string_view line : split_lines(text)) {
    ++line_no;
    if (is_comment(line)) continue;
    if (is_blank(line)) {
      if (!rows.empty()) {
        grids.push_back(rows_to_grid(rows));
        rows.clear();
      }
      continue;
    }
    rows.push_back(parse_row(line, line_no));
  }
  if (!rows.empty()) grids.push_back(rows_to_grid(rows));
  return grids;
}

ParsedGrid parse_grid_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("cells")) {
    throw ParseError("grid JSON must be an object with a 'cells' array");
  }
  std::vector<std::vector<int>> rows;
  try {
    rows = j.at("cells").get<std::vector<std::vector<int>>>();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad 'cells': ") + e.what());
  }
  SquareGrid g = rows_to_grid(rows);
  if (j.contains("order") && j.at("order") != g.order()) {
    throw ParseError("'order' does not match the number of rows");
  }
  std::optional<SudokuShape> shape;
  if (j.contains("shape")) {
    try {
      shape = SudokuShape{j.at("shape").at("a").get<int>(), j.at("shape").at("b").get<int>()};
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(std::string("bad 'shape': ") + e.what());
    }
  }
  return ParsedGrid{std::move(g), shape};
}

ParsedGrid parse_grid_auto(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    return parse_grid_json(j);
  }
  return ParsedGrid{parse_grid_text(text), std::nullopt};
}

std::string format_grid_text(const SquareGrid& g) {
  std::string out;
  for (int i = 1; i <= g.order(); ++i) {
    const auto row = g.row(i);
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j > 0) out += ' ';
      out += std::to_string(row[j]);
    }
    out += '\n';
  }
  return out;
}

std::string format_grid_list_text(const std::vector<SquareGrid>& grids) {
  std::string out;
  for (std::size_t k = 0; k < grids.size(); ++k) {
    if (k > 0) out += '\n';
    out += format_grid_text(grids[k]);
  }
  return out;
}

nlohmann::json grid_to_json(const SquareGrid& g, std::optional<SudokuShape> shape) {
  nlohmann::json j;
  j["order"] = g.order();
  j["cells"] = g.rows();
  if (shape) j["shape"] = {{"a", shape->a}, {"b", shape->b}};
  return j;
}

nlohmann::json to_json(const ValidationReport& report) {
  nlohmann::json violations = nlohmann::json::array();
  for (const auto& v : report.violations) {
    nlohmann::json item{{"kind", std::string(to_string(v.kind))},
                        {"index", v.index},
                        {"symbol", v.symbol}};
    if (v.kind == LineKind::block) {
      item["band"] = v.block.band;
      item["stack"] = v.block.stack;
    }
    violations.push_back(std::move(item));
  }
  return {{"verdict", report.verdict}, {"violations", std::move(violations)}};
}

nlohmann::json to_json(const DistanceReport& report) {
  nlohmann::json classes = nlohmann::json::array();
  for (const auto& [distance, count] : report.realized_classes) {
    classes.push_back({{"distance", distance}, {"count", count}});
  }
  nlohmann::json pairs = nlohmann::json::array();
  for (const auto& p : report.argmin_pairs) {
    pairs.push_back({{p.first.i, p.first.j}, {p.second.i, p.second.j}});
  }
  return {{"inner_distance", report.inner_distance},
          {"classes", std::move(classes)},
          {"argmin_pairs", std::move(pairs)}};
}

nlohmann::json to_json(const SquareClass& cls, const BoundsEntry& entry) {
  nlohmann::json j{{"kind", to_string(cls.kind)}, {"n", cls.n}};
  if (cls.kind == SquareKind::sudoku) {
    j["a"] = cls.shape.a;
    j["b"] = cls.shape.b;
  } else {
    j["a"] = nullptr;
    j["b"] = nullptr;
  }
  j["lower"] = entry.lower;
  j["upper"] = entry.upper;
  j["exact"] = entry.exact;
  j["existence"] = entry.existence;
  j["provenance"] = entry.provenance;
  return j;
}

nlohmann::json to_json(const GridPermutation& p) {
  return {{"rows", p.rows}, {"columns", p.columns}, {"symbols", p.symbols}};
}

GridPermutation permutation_from_json(const nlohmann::json& j) {
  GridPermutation p;
  try {
    p = GridPermutation{j.at("rows").get<std::vector<int>>(),
                        j.at("columns").get<std::vector<int>>(),
                        j.at("symbols").get<std::vector<int>>()};
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad permutation JSON: ") + e.what());
  }
  try {
    p.check(static_cast<int>(p.rows.size()));
  } catch (const DomainError& e) {
    throw ParseError(std::string("bad permutation JSON: ") + e.what());
  }
  return p;
}

nlohmann::json to_json(const SearchQuery& q) {
  nlohmann::json j{{"kind", to_string(q.target.kind)},
                   {"n", q.target.n},
                   {"min_distance", q.min_distance},
                   {"mode", to_string(q.mode)},
                   {"symmetry", q.symmetry == Symmetry::fix_first_cell ? "fix_first_cell" : "none"},
                   {"node_budget", q.node_budget},
                   {"workers", q.workers}};
  if (q.target.kind == SquareKind::sudoku) {
    j["a"] = q.target.shape.a;
    j["b"] = q.target.shape.b;
  }
  return j;
}

}  // namespace innerdist
