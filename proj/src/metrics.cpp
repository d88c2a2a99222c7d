#include "innerdist/metrics.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "innerdist/errors.hpp"

namespace innerdist {

int adjacent_distance(int u, int v, int n) {
  if (n < 1 || u < 1 || u > n || v < 1 || v > n) {
    throw DomainError("symbols " + std::to_string(u) + "," + std::to_string(v) +
                      " outside [1," + std::to_string(n) + "]");
  }
  const int forward = ((u - v) % n + n) % n;
  return std::min(forward, (n - forward) % n);
}

DistanceReport inner_distance(const SquareGrid& g) {
  const int n = g.order();
  if (n < 2) throw DomainError("inner distance undefined for a square of order 1");

  DistanceReport report;
  report.inner_distance = std::numeric_limits<int>::max();
  auto visit = [&](Cell a, Cell b) {
    const int d = adjacent_distance(g.at(a.i, a.j), g.at(b.i, b.j), n);
    ++report.realized_classes[d];
    if (d < report.inner_distance) {
      report.inner_distance = d;
      report.argmin_pairs.clear();
    }
    if (d == report.inner_distance) report.argmin_pairs.push_back({a, b});
  };
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (j < n) visit({i, j}, {i, j + 1});
      if (i < n) visit({i, j}, {i + 1, j});
    }
  }
  return report;
}

}  // namespace innerdist
