#include "innerdist/transform.hpp"

#include <numeric>
#include <string>

#include "innerdist/errors.hpp"
#include "innerdist/modmath.hpp"

namespace innerdist {

namespace {

void check_bijection(const std::vector<int>& image, int n, const char* name) {
  if (static_cast<int>(image.size()) != n) {
    throw DomainError(std::string(name) + " permutation has size " +
                      std::to_string(image.size()) + ", expected " +
                      std::to_string(n));
  }
  std::vector<bool> hit(static_cast<std::size_t>(n) + 1, false);
  for (int v : image) {
    if (v < 1 || v > n || hit[v]) {
      throw DomainError(std::string(name) + " permutation is not a bijection on 1.." +
                        std::to_string(n));
    }
    hit[v] = true;
  }
}

}  // namespace

GridPermutation GridPermutation::identity(int n) {
  std::vector<int> id(static_cast<std::size_t>(n));
  std::iota(id.begin(), id.end(), 1);
  return GridPermutation{id, id, id};
}

void GridPermutation::check(int n) const {
  check_bijection(rows, n, "row");
  check_bijection(columns, n, "column");
  check_bijection(symbols, n, "symbol");
}

SquareGrid apply(const SquareGrid& g, const GridPermutation& p) {
  const int n = g.order();
  p.check(n);
  std::vector<int> cells(static_cast<std::size_t>(n) * n);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      const int ti = p.rows[i - 1];
      const int tj = p.columns[j - 1];
      cells[static_cast<std::size_t>(ti - 1) * n + (tj - 1)] = p.symbols[g.at(i, j) - 1];
    }
  }
  return SquareGrid::from_cells(n, std::move(cells));
}

SquareGrid transpose(const SquareGrid& g) {
  const int n = g.order();
  std::vector<int> cells(static_cast<std::size_t>(n) * n);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      cells[static_cast<std::size_t>(j - 1) * n + (i - 1)] = g.at(i, j);
    }
  }
  return SquareGrid::from_cells(n, std::move(cells));
}

bool is_circulant(const SquareGrid& g) {
  const int n = g.order();
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (g.at(i, j) != g.at(static_cast<int>(wrap1(i - 1, n)),
                             static_cast<int>(wrap1(j - 1, n)))) {
        return false;
      }
    }
  }
  return true;
}

bool is_back_circulant(const SquareGrid& g) {
  const int n = g.order();
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (g.at(i, j) != g.at(static_cast<int>(wrap1(i - 1, n)),
                             static_cast<int>(wrap1(j + 1, n)))) {
        return false;
      }
    }
  }
  return true;
}

CanonicalResult to_circulant_canonical(const SquareGrid& g) {
  const int n = g.order();
  GridPermutation perm = GridPermutation::identity(n);

  const int lead = g.at(1, 1);
  for (int v = 1; v <= n; ++v) {
    perm.symbols[v - 1] = static_cast<int>(wrap1(v - lead + 1, n));
  }
  // Column j moves to the position named by its (shifted) first-row symbol.
  for (int j = 1; j <= n; ++j) {
    perm.columns[j - 1] = perm.symbols[g.at(1, j) - 1];
  }
  try {
    check_bijection(perm.columns, n, "column");
  } catch (const DomainError&) {
    throw DomainError("not reducible by the cyclic-row method: first row repeats a symbol");
  }

  // After the two steps row i must read (s, s+1, ..., s-1) for some s, and
  // the row starting with s belongs at position 2 - s (mod n).
  std::vector<bool> taken(static_cast<std::size_t>(n) + 1, false);
  for (int i = 1; i <= n; ++i) {
    std::vector<int> moved(static_cast<std::size_t>(n));
    for (int j = 1; j <= n; ++j) {
      moved[perm.columns[j - 1] - 1] = perm.symbols[g.at(i, j) - 1];
    }
    const int start = moved[0];
    for (int t = 1; t <= n; ++t) {
      if (moved[t - 1] != wrap1(start + t - 1, n)) {
        throw DomainError(
            "not reducible by the cyclic-row method: row " + std::to_string(i) +
            " is not a cyclic shift of the first row (this does not show the "
            "square is non-isotopic to a circulant)");
      }
    }
    const int target = static_cast<int>(wrap1(2 - start, n));
    if (taken[target]) {
      throw DomainError("not reducible by the cyclic-row method: rows " +
                        std::string("repeat a leading symbol"));
    }
    taken[target] = true;
    perm.rows[i - 1] = target;
  }

  return CanonicalResult{apply(g, perm), perm};
}

}  // namespace innerdist
