#include "innerdist/search.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <limits>
#include <mutex>
#include <string>
#include <thread>

#include "innerdist/errors.hpp"
#include "innerdist/metrics.hpp"

namespace innerdist {

namespace {

using Mask = std::uint64_t;
constexpr int kMaxOrder = 64;
constexpr std::size_t kNoHit = std::numeric_limits<std::size_t>::max();

struct CellMeta {
  int row = 0;
  int col = 0;
  int block = 0;
  int forward = 0;  // (i - j) mod n
  int back = 0;     // (i + j) mod n
};

// Everything about a query that stays fixed during the search.
struct Plan {
  int n = 0;
  bool sudoku = false;
  bool pandiagonal = false;
  bool fix_first = false;
  Mask full = 0;
  std::vector<CellMeta> cells;
  std::vector<Mask> admissible;  // admissible[u]: symbols far enough from u

  explicit Plan(const SearchQuery& q) {
    n = q.target.n;
    if (n < 1 || n > kMaxOrder) {
      throw DomainError("search supports orders 1.." + std::to_string(kMaxOrder) +
                        ", got " + std::to_string(n));
    }
    if (q.min_distance < 0) throw DomainError("min distance must be non-negative");
    sudoku = q.target.kind == SquareKind::sudoku;
    pandiagonal = q.target.kind == SquareKind::pandiagonal;
    fix_first = q.symmetry == Symmetry::fix_first_cell;
    const SudokuShape shape = q.target.shape;
    if (sudoku && (shape.a < 1 || shape.b < 1 || shape.order() != n)) {
      throw DomainError("sudoku shape (" + std::to_string(shape.a) + "," +
                        std::to_string(shape.b) + ") does not match order " +
                        std::to_string(n));
    }
    full = n == 64 ? ~Mask{0} : (Mask{1} << n) - 1;

    cells.resize(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        CellMeta& m = cells[static_cast<std::size_t>(i) * n + j];
        m.row = i;
        m.col = j;
        m.block = sudoku ? (i / shape.a) * shape.a + j / shape.b : 0;
        m.forward = ((i - j) % n + n) % n;
        m.back = (i + j) % n;
      }
    }

    admissible.assign(static_cast<std::size_t>(n), 0);
    for (int u = 0; u < n; ++u) {
      for (int v = 0; v < n; ++v) {
        if (adjacent_distance(u + 1, v + 1, n) >= q.min_distance) {
          admissible[u] |= Mask{1} << v;
        }
      }
    }
  }
};

// Shared between workers: node accounting, budget and early-exit signals.
struct Control {
  std::uint64_t budget = 0;
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> exhausted{false};
  std::atomic<std::size_t> first_hit{kNoHit};  // exists mode

  void record_hit(std::size_t task) {
    std::size_t current = first_hit.load();
    while (task < current && !first_hit.compare_exchange_weak(current, task)) {
    }
  }
};

// Depth-first filler with bitmask bookkeeping; one per worker.
class Engine {
 public:
  explicit Engine(const Plan& plan)
      : plan_(plan),
        size_(plan.n * plan.n),
        values_(static_cast<std::size_t>(size_), -1),
        pending_(static_cast<std::size_t>(size_), 0),
        rows_(plan.n),
        cols_(plan.n),
        blocks_(plan.n),
        forward_(plan.n),
        back_(plan.n) {}

  int size() const { return size_; }
  std::span<const int> values() const { return values_; }

  // Extends `prefix` over cells [prefix.size(), leaf_depth) and calls
  // on_leaf() at every full assignment of those cells; on_leaf returns false
  // to stop. `cancelled()` is polled periodically. Returns false if stopped
  // early for any reason.
  template <class OnLeaf, class Cancelled>
  bool explore(std::span<const int> prefix, int leaf_depth, Control& control,
               OnLeaf&& on_leaf, Cancelled&& cancelled) {
    reset();
    const int start = static_cast<int>(prefix.size());
    for (int k = 0; k < start; ++k) assign(k, prefix[k]);
    if (start == leaf_depth) return on_leaf();

    bool finished = true;
    int k = start;
    pending_[k] = candidates(k);
    while (true) {
      if (pending_[k] == 0) {
        if (k == start) break;
        --k;
        unassign(k);
        continue;
      }
      const Mask bit = pending_[k] & (~pending_[k] + 1);
      pending_[k] ^= bit;
      assign(k, std::countr_zero(bit));
      if (!tick(control) || ((local_nodes_ & 0x3FF) == 0 && cancelled())) {
        finished = false;
        break;
      }
      if (k == leaf_depth - 1) {
        if (!on_leaf()) {
          finished = false;
          break;
        }
        unassign(k);
        continue;
      }
      ++k;
      pending_[k] = candidates(k);
    }
    flush(control);
    return finished;
  }

  void flush(Control& control) {
    if (unflushed_ > 0) {
      seen_total_ = control.nodes.fetch_add(unflushed_) + unflushed_;
      unflushed_ = 0;
    }
  }

 private:
  void reset() {
    std::fill(values_.begin(), values_.end(), -1);
    std::fill(rows_.begin(), rows_.end(), 0);
    std::fill(cols_.begin(), cols_.end(), 0);
    std::fill(blocks_.begin(), blocks_.end(), 0);
    std::fill(forward_.begin(), forward_.end(), 0);
    std::fill(back_.begin(), back_.end(), 0);
  }

  Mask candidates(int k) const {
    const CellMeta& m = plan_.cells[k];
    Mask c = plan_.full & ~(rows_[m.row] | cols_[m.col]);
    if (plan_.sudoku) c &= ~blocks_[m.block];
    if (plan_.pandiagonal) c &= ~(forward_[m.forward] | back_[m.back]);
    if (m.col > 0) c &= plan_.admissible[values_[k - 1]];
    if (m.row > 0) c &= plan_.admissible[values_[k - plan_.n]];
    if (k == 0 && plan_.fix_first) c &= Mask{1};
    return c;
  }

  void toggle(int k, int v) {
    const CellMeta& m = plan_.cells[k];
    const Mask bit = Mask{1} << v;
    rows_[m.row] ^= bit;
    cols_[m.col] ^= bit;
    if (plan_.sudoku) blocks_[m.block] ^= bit;
    if (plan_.pandiagonal) {
      forward_[m.forward] ^= bit;
      back_[m.back] ^= bit;
    }
  }

  void assign(int k, int v) {
    values_[k] = v;
    toggle(k, v);
  }

  void unassign(int k) {
    toggle(k, values_[k]);
    values_[k] = -1;
  }

  // Counts one node; false once the shared budget is spent.
  bool tick(Control& control) {
    ++local_nodes_;
    ++unflushed_;
    if (seen_total_ + unflushed_ > control.budget) {
      flush(control);
      if (seen_total_ > control.budget) {
        control.exhausted = true;
        return false;
      }
    }
    if ((local_nodes_ & 0x3FF) == 0) {
      flush(control);
      if (control.exhausted.load(std::memory_order_relaxed)) return false;
    }
    return true;
  }

  const Plan& plan_;
  int size_;
  std::vector<int> values_;
  std::vector<Mask> pending_;
  std::vector<Mask> rows_, cols_, blocks_, forward_, back_;
  std::uint64_t local_nodes_ = 0;
  std::uint64_t unflushed_ = 0;
  std::uint64_t seen_total_ = 0;
};

SquareGrid to_grid(int n, std::span<const int> values) {
  std::vector<int> cells(values.begin(), values.end());
  for (int& v : cells) ++v;
  return SquareGrid::from_cells(n, std::move(cells));
}

// First-row prefixes handed out to workers, in lexicographic order.
std::vector<std::vector<int>> split_work(const Plan& plan, Control& control,
                                         unsigned workers, bool& complete) {
  std::vector<std::vector<int>> tasks{{}};
  if (workers <= 1) return tasks;
  Engine engine(plan);
  const std::size_t wanted = static_cast<std::size_t>(workers) * 8;
  for (int depth = 1; depth <= plan.n && tasks.size() < wanted; ++depth) {
    std::vector<std::vector<int>> deeper;
    bool ok = engine.explore(
        {}, depth, control,
        [&] {
          auto v = engine.values();
          deeper.emplace_back(v.begin(), v.begin() + depth);
          return true;
        },
        [] { return false; });
    if (!ok) {
      complete = false;
      return tasks;
    }
    tasks = std::move(deeper);
  }
  return tasks;
}

struct TaskOutcome {
  std::uint64_t count = 0;
  std::vector<SquareGrid> witnesses;
};

}  // namespace

std::string to_string(SearchMode mode) {
  switch (mode) {
    case SearchMode::count: return "count";
    case SearchMode::enumerate: return "enumerate";
    case SearchMode::exists: return "exists";
  }
  return "unknown";
}

SearchMode parse_search_mode(const std::string& text) {
  if (text == "count") return SearchMode::count;
  if (text == "enumerate") return SearchMode::enumerate;
  if (text == "exists") return SearchMode::exists;
  throw DomainError("unknown search mode '" + text + "'");
}

SearchResult run_search(const SearchQuery& q) {
  const Plan plan(q);
  Control control;
  control.budget = q.node_budget;

  unsigned workers = q.workers == 0 ? std::max(1u, std::thread::hardware_concurrency())
                                    : q.workers;
  bool split_complete = true;
  const auto tasks = split_work(plan, control, workers, split_complete);
  if (!split_complete) {
    return SearchResult{0, {}, control.nodes.load(), false};
  }
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, tasks.size()));

  const std::size_t limit = q.witness_limit.value_or(std::numeric_limits<std::size_t>::max());
  std::vector<TaskOutcome> outcomes(tasks.size());
  std::atomic<std::size_t> next{0};

  auto work = [&] {
    Engine engine(plan);
    while (true) {
      const std::size_t t = next.fetch_add(1);
      if (t >= tasks.size() || control.exhausted) break;
      if (q.mode == SearchMode::exists && control.first_hit.load() < t) continue;
      TaskOutcome& out = outcomes[t];
      engine.explore(
          tasks[t], engine.size(), control,
          [&] {
            ++out.count;
            if (q.mode == SearchMode::exists) {
              out.witnesses.push_back(to_grid(plan.n, engine.values()));
              control.record_hit(t);
              return false;
            }
            if (q.mode == SearchMode::enumerate && out.witnesses.size() < limit) {
              out.witnesses.push_back(to_grid(plan.n, engine.values()));
            }
            return true;
          },
          [&] {
            return q.mode == SearchMode::exists && control.first_hit.load() < t;
          });
    }
  };

  if (workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  }

  SearchResult result;
  result.nodes_expanded = control.nodes.load();
  if (q.mode == SearchMode::exists) {
    const std::size_t hit = control.first_hit.load();
    if (hit != kNoHit) {
      result.count = 1;
      result.witnesses = std::move(outcomes[hit].witnesses);
      result.complete = true;
    } else {
      result.complete = !control.exhausted;
    }
    return result;
  }
  for (auto& out : outcomes) {
    result.count += out.count;
    for (auto& w : out.witnesses) {
      if (result.witnesses.size() >= limit) break;
      result.witnesses.push_back(std::move(w));
    }
  }
  result.complete = !control.exhausted;
  return result;
}

MaxDistanceResult max_distance_via_search(const SquareClass& target,
                                          std::uint64_t node_budget,
                                          unsigned workers) {
  if (target.n < 2) throw DomainError("inner distance undefined for order 1");
  MaxDistanceResult result;
  result.upper = target.n / 2;
  for (int d = target.n / 2; d >= 1; --d) {
    SearchQuery q;
    q.target = target;
    q.min_distance = d;
    q.mode = SearchMode::exists;
    q.node_budget = node_budget;
    q.workers = workers;
    const SearchResult r = run_search(q);
    result.nodes_expanded += r.nodes_expanded;
    if (!r.complete) {
      result.complete = false;
      result.upper = d;
      result.lower = 0;
      return result;
    }
    if (r.count > 0) {
      result.max_distance = d;
      result.lower = result.upper = d;
      return result;
    }
    result.upper = d - 1;
  }
  // No square at distance >= 1: the class is empty.
  result.lower = result.upper = 0;
  return result;
}

}  // namespace innerdist
