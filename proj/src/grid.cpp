#include "innerdist/grid.hpp"

#include <algorithm>
#include <string>

#include "innerdist/errors.hpp"

namespace innerdist {

SquareGrid SquareGrid::from_rows(const std::vector<std::vector<int>>& rows) {
  const int n = static_cast<int>(rows.size());
  std::vector<int> cells;
  cells.reserve(rows.size() * rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (static_cast<int>(rows[i].size()) != n) {
      throw ParseError("row " + std::to_string(i + 1) + " has " +
                       std::to_string(rows[i].size()) + " entries, expected " +
                       std::to_string(n));
    }
    cells.insert(cells.end(), rows[i].begin(), rows[i].end());
  }
  return from_cells(n, std::move(cells));
}

SquareGrid SquareGrid::from_cells(int order, std::vector<int> cells) {
  if (order < 1) throw ParseError("grid order must be at least 1");
  if (cells.size() != static_cast<std::size_t>(order) * order) {
    throw ParseError("expected " + std::to_string(order * order) +
                     " cells, got " + std::to_string(cells.size()));
  }
  for (std::size_t k = 0; k < cells.size(); ++k) {
    if (cells[k] < 1 || cells[k] > order) {
      throw ParseError("symbol " + std::to_string(cells[k]) + " at cell (" +
                       std::to_string(k / order + 1) + "," +
                       std::to_string(k % order + 1) + ") outside [1," +
                       std::to_string(order) + "]");
    }
  }
  return SquareGrid(order, std::move(cells));
}

int SquareGrid::at(int i, int j) const {
  return cells_[static_cast<std::size_t>(i - 1) * order_ + (j - 1)];
}

std::span<const int> SquareGrid::row(int i) const {
  return std::span<const int>(cells_).subspan(
      static_cast<std::size_t>(i - 1) * order_, order_);
}

std::vector<std::vector<int>> SquareGrid::rows() const {
  std::vector<std::vector<int>> out;
  out.reserve(order_);
  for (int i = 1; i <= order_; ++i) {
    auto r = row(i);
    out.emplace_back(r.begin(), r.end());
  }
  return out;
}

std::strong_ordering operator<=>(const SquareGrid& lhs, const SquareGrid& rhs) {
  if (auto c = lhs.order_ <=> rhs.order_; c != 0) return c;
  return std::lexicographical_compare_three_way(
      lhs.cells_.begin(), lhs.cells_.end(), rhs.cells_.begin(),
      rhs.cells_.end());
}

BlockAddress block_of(int i, int j, SudokuShape shape) {
  const int n = shape.order();
  if (shape.a < 1 || shape.b < 1) throw DomainError("block sides must be positive");
  if (i < 1 || i > n || j < 1 || j > n) {
    throw DomainError("cell (" + std::to_string(i) + "," + std::to_string(j) +
                      ") outside a grid of order " + std::to_string(n));
  }
  return BlockAddress{(i - 1) / shape.a, (j - 1) / shape.b};
}

}  // namespace innerdist
