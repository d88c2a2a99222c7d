#pragma once

#include <map>
#include <vector>

#include "innerdist/grid.hpp"

namespace innerdist {

/// min{(u - v) mod n, (v - u) mod n} with residues in [0, n). Total on
/// [1, n] x [1, n]; equal symbols give 0. Throws DomainError out of range.
int adjacent_distance(int u, int v, int n);

struct Cell {
  int i = 0;
  int j = 0;
  friend bool operator==(const Cell&, const Cell&) = default;
};

struct CellPair {
  Cell first;
  Cell second;
  friend bool operator==(const CellPair&, const CellPair&) = default;
};

struct DistanceReport {
  int inner_distance = 0;
  /// distance value -> number of edge-sharing pairs realizing it.
  std::map<int, long long> realized_classes;
  /// Pairs achieving the minimum, row-major by first cell, horizontal first.
  std::vector<CellPair> argmin_pairs;
};

/// Minimum adjacent distance over horizontally and vertically adjacent cells
/// (no wraparound). Throws DomainError for order 1, where it is undefined.
DistanceReport inner_distance(const SquareGrid& g);

}  // namespace innerdist
