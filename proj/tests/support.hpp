#pragma once

// Fixture loading and brute-force oracles shared by the test suites. The
// oracles deliberately avoid the library's own code paths.

#include <string>
#include <vector>

#include "innerdist/grid.hpp"

namespace innerdist::testing {

using Rows = std::vector<std::vector<int>>;

/// Fixture body with '#' lines stripped, exactly as `gen` should print it.
std::string fixture_body(const std::string& name);
SquareGrid fixture_grid(const std::string& name);

bool oracle_is_latin(const Rows& g);
bool oracle_is_pandiagonal(const Rows& g);
bool oracle_is_sudoku(const Rows& g, int a, int b);
/// Minimum over edge-sharing pairs of the circular difference; n >= 2.
int oracle_inner_distance(const Rows& g);

/// Every Latin square of order n, built row by row from all permutations.
std::vector<Rows> oracle_all_latin_squares(int n);

}  // namespace innerdist::testing
