#include "support.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "innerdist/io.hpp"

#ifndef INNERDIST_FIXTURE_DIR
#error "INNERDIST_FIXTURE_DIR must be defined"
#endif

namespace innerdist::testing {

namespace {

bool is_full_set(const std::vector<int>& values, int n) {
  std::set<int> s(values.begin(), values.end());
  return static_cast<int>(s.size()) == n && *s.begin() == 1 && *s.rbegin() == n;
}

}  // namespace

std::string fixture_body(const std::string& name) {
  std::ifstream file(std::string(INNERDIST_FIXTURE_DIR) + "/" + name + ".txt");
  if (!file) throw std::runtime_error("missing fixture " + name);
  std::string line;
  std::string body;
  while (std::getline(file, line)) {
    if (!line.empty() && line[0] == '#') continue;
    body += line + "\n";
  }
  return body;
}

SquareGrid fixture_grid(const std::string& name) {
  return parse_grid_text(fixture_body(name));
}

bool oracle_is_latin(const Rows& g) {
  const int n = static_cast<int>(g.size());
  for (int i = 0; i < n; ++i) {
    std::vector<int> column;
    for (int j = 0; j < n; ++j) column.push_back(g[j][i]);
    if (!is_full_set(g[i], n) || !is_full_set(column, n)) return false;
  }
  return true;
}

bool oracle_is_pandiagonal(const Rows& g) {
  if (!oracle_is_latin(g)) return false;
  const int n = static_cast<int>(g.size());
  for (int d = 0; d < n; ++d) {
    std::vector<int> fwd, bwd;
    for (int i = 0; i < n; ++i) {
      fwd.push_back(g[i][(i + d) % n]);
      bwd.push_back(g[i][((d - i) % n + n) % n]);
    }
    if (!is_full_set(fwd, n) || !is_full_set(bwd, n)) return false;
  }
  return true;
}

bool oracle_is_sudoku(const Rows& g, int a, int b) {
  if (!oracle_is_latin(g)) return false;
  const int n = static_cast<int>(g.size());
  for (int top = 0; top < n; top += a) {
    for (int left = 0; left < n; left += b) {
      std::vector<int> block;
      for (int i = top; i < top + a; ++i) {
        for (int j = left; j < left + b; ++j) block.push_back(g[i][j]);
      }
      if (!is_full_set(block, n)) return false;
    }
  }
  return true;
}

int oracle_inner_distance(const Rows& g) {
  const int n = static_cast<int>(g.size());
  auto circ = [n](int u, int v) {
    int best = n;
    for (int s = 0; s < n; ++s) {
      // smallest s with u + s == v or v + s == u (mod n)
      if ((u + s - v) % n == 0 || (v + s - u) % n == 0) {
        best = s;
        break;
      }
    }
    return best;
  };
  int best = n;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (j + 1 < n) best = std::min(best, circ(g[i][j], g[i][j + 1]));
      if (i + 1 < n) best = std::min(best, circ(g[i][j], g[i + 1][j]));
    }
  }
  return best;
}

std::vector<Rows> oracle_all_latin_squares(int n) {
  std::vector<std::vector<int>> perms;
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 1);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));

  std::vector<Rows> squares;
  Rows current;
  auto extend = [&](auto&& self) -> void {
    if (static_cast<int>(current.size()) == n) {
      squares.push_back(current);
      return;
    }
    for (const auto& candidate : perms) {
      bool clash = false;
      for (const auto& row : current) {
        for (int j = 0; j < n && !clash; ++j) clash = row[j] == candidate[j];
        if (clash) break;
      }
      if (clash) continue;
      current.push_back(candidate);
      self(self);
      current.pop_back();
    }
  };
  extend(extend);
  return squares;
}

}  // namespace innerdist::testing
