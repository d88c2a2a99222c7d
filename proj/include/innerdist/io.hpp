#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "innerdist/bounds.hpp"
#include "innerdist/grid.hpp"
#include "innerdist/metrics.hpp"
#include "innerdist/search.hpp"
#include "innerdist/transform.hpp"
#include "innerdist/validate.hpp"

namespace innerdist {

/// Grid plus the optional block shape carried by the JSON form.
struct ParsedGrid {
  SquareGrid grid;
  std::optional<SudokuShape> shape;
};

/// Text form: n lines of n space-separated integers. Lines starting with
/// '#' (e.g. "# order n") and surrounding blank lines are ignored.
SquareGrid parse_grid_text(std::string_view text);
/// Grids separated by blank lines.
std::vector<SquareGrid> parse_grid_list_text(std::string_view text);
ParsedGrid parse_grid_json(const nlohmann::json& j);
/// JSON if the first non-blank character is '{', text otherwise.
ParsedGrid parse_grid_auto(std::string_view text);

std::string format_grid_text(const SquareGrid& g);
std::string format_grid_list_text(const std::vector<SquareGrid>& grids);
nlohmann::json grid_to_json(const SquareGrid& g,
                            std::optional<SudokuShape> shape = std::nullopt);

nlohmann::json to_json(const ValidationReport& report);
nlohmann::json to_json(const DistanceReport& report);
/// Row {kind, a, b, n, lower, upper, exact, existence, provenance}.
nlohmann::json to_json(const SquareClass& cls, const BoundsEntry& entry);
nlohmann::json to_json(const GridPermutation& p);
GridPermutation permutation_from_json(const nlohmann::json& j);
nlohmann::json to_json(const SearchQuery& q);

}  // namespace innerdist
