#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "innerdist/bounds.hpp"
#include "innerdist/grid.hpp"

namespace innerdist {

enum class SearchMode { count, enumerate, exists };
enum class Symmetry { none, fix_first_cell };

std::string to_string(SearchMode mode);
SearchMode parse_search_mode(const std::string& text);

struct SearchQuery {
  SquareClass target = SquareClass::plain(1);
  /// Every edge-sharing pair must be at adjacent distance >= min_distance.
  /// 0 disables the distance filter.
  int min_distance = 1;
  SearchMode mode = SearchMode::count;
  /// fix_first_cell restricts to squares with m(1,1) = 1; counts are then
  /// reported for that restricted set, never scaled back up.
  Symmetry symmetry = Symmetry::none;
  std::uint64_t node_budget = 1'000'000'000ULL;
  unsigned workers = 1;
  /// Cap on stored witnesses in enumerate mode; the count stays exact.
  std::optional<std::size_t> witness_limit;
};

struct SearchResult {
  /// Exact when complete. In exists mode it is 0 or 1.
  std::uint64_t count = 0;
  /// Enumerate mode: all (or the first witness_limit) squares in
  /// lexicographic row-major order. Exists mode: the first one found.
  std::vector<SquareGrid> witnesses;
  std::uint64_t nodes_expanded = 0;
  bool complete = true;
};

/// Exhaustive row-major backtracking over the squares of q.target whose
/// adjacent cells are all at distance >= q.min_distance. Results other than
/// nodes_expanded do not depend on q.workers. Orders above 64 are rejected
/// with DomainError, as are malformed shapes.
SearchResult run_search(const SearchQuery& q);

struct MaxDistanceResult {
  /// Largest d with a witness; empty when the class is empty or the search
  /// ran out of budget (then [lower, upper] brackets the answer).
  std::optional<int> max_distance;
  int lower = 0;
  int upper = 0;
  bool complete = true;
  std::uint64_t nodes_expanded = 0;
};

/// Descends d from floor(n/2) with exists-mode searches.
MaxDistanceResult max_distance_via_search(const SquareClass& target,
                                          std::uint64_t node_budget = 1'000'000'000ULL,
                                          unsigned workers = 1);

}  // namespace innerdist
