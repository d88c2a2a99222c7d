#include "innerdist/cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "innerdist/bounds.hpp"
#include "innerdist/construct.hpp"
#include "innerdist/errors.hpp"
#include "innerdist/io.hpp"
#include "innerdist/metrics.hpp"
#include "innerdist/search.hpp"
#include "innerdist/transform.hpp"
#include "innerdist/validate.hpp"

namespace innerdist::cli {

namespace {

struct Options {
  std::string input;
  std::string output;
  std::string format = "text";

  std::string algo;
  std::string kind;
  std::optional<int> n, r, c, alpha, beta, k, a, b, x, y;

  int min_dist = 1;
  std::string mode = "count";
  unsigned workers = 1;
  std::uint64_t budget = 1'000'000'000ULL;
  bool fix_first_cell = false;
  std::string witnesses_path;
  std::optional<std::size_t> witness_limit;
};

int require(const std::optional<int>& v, const char* name) {
  if (!v) throw ParameterError(std::string("missing --") + name);
  return *v;
}

std::string read_input(const std::string& path, std::istream& in) {
  if (path.empty() || path == "-") {
    return std::string(std::istreambuf_iterator<char>(in), {});
  }
  std::ifstream file(path);
  if (!file) throw ParseError("cannot open " + path);
  return std::string(std::istreambuf_iterator<char>(file), {});
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path);
  if (!file) throw ParseError("cannot write " + path);
  file << text;
}

SudokuShape shape_from(const Options& o, const std::optional<SudokuShape>& embedded) {
  if (o.a || o.b) return SudokuShape{require(o.a, "a"), require(o.b, "b")};
  if (embedded) return *embedded;
  throw ParameterError("sudoku kind needs --a and --b");
}

SquareClass class_from(const Options& o) {
  const SquareKind kind = parse_square_kind(o.kind);
  if (kind == SquareKind::sudoku) return SquareClass::sudoku(shape_from(o, std::nullopt));
  return kind == SquareKind::plain ? SquareClass::plain(require(o.n, "n"))
                                   : SquareClass::pandiagonal(require(o.n, "n"));
}

int cmd_gen(const Options& o, std::ostream& out) {
  std::optional<SudokuShape> shape;
  SquareGrid g = [&] {
    if (o.algo == "shift") {
      return algorithm1(make_shift_params(require(o.n, "n"), require(o.r, "r"),
                                          require(o.c, "c"), require(o.alpha, "alpha"),
                                          require(o.beta, "beta")));
    }
    if (o.algo == "maxdist") return max_distance_square(require(o.n, "n"));
    if (o.algo == "pandiagonal") return pandiagonal_max(require(o.n, "n"));
    if (o.algo == "shiftk") return shift_by_k(require(o.n, "n"), require(o.k, "k"));
    if (o.algo == "sudoku") {
      shape = SudokuShape{require(o.a, "a"), require(o.b, "b")};
      return sudoku_square(*shape);
    }
    if (o.algo == "eveneven") {
      const int x = require(o.x, "x");
      const int y = require(o.y, "y");
      shape = SudokuShape{2 * x, 2 * y};
      return algorithm2(x, y);
    }
    throw ParameterError("unknown --algo '" + o.algo + "'");
  }();
  const std::string text = o.format == "json" ? grid_to_json(g, shape).dump() + "\n"
                                              : format_grid_text(g);
  write_output(o.output, text, out);
  return kSuccess;
}

int cmd_check(const Options& o, std::istream& in, std::ostream& out) {
  const ParsedGrid parsed = parse_grid_auto(read_input(o.input, in));
  const std::string kind = o.kind.empty() ? "latin" : o.kind;
  ValidationReport report;
  nlohmann::json j;
  switch (parse_square_kind(kind)) {
    case SquareKind::plain:
      report = validate_latin(parsed.grid);
      break;
    case SquareKind::pandiagonal:
      report = validate_pandiagonal(parsed.grid);
      break;
    case SquareKind::sudoku: {
      const SudokuShape shape = shape_from(o, parsed.shape);
      report = validate_sudoku(parsed.grid, shape);
      j["shape"] = {{"a", shape.a}, {"b", shape.b}};
      break;
    }
  }
  j["kind"] = kind;
  j["order"] = parsed.grid.order();
  j.update(to_json(report));
  write_output(o.output, j.dump() + "\n", out);
  return report.verdict ? kSuccess : kVerifiedFalse;
}

int cmd_dist(const Options& o, std::istream& in, std::ostream& out) {
  const ParsedGrid parsed = parse_grid_auto(read_input(o.input, in));
  const DistanceReport report = inner_distance(parsed.grid);
  if (o.format == "json") {
    write_output(o.output, to_json(report).dump() + "\n", out);
    return kSuccess;
  }
  std::ostringstream text;
  text << "inner_distance " << report.inner_distance << "\n";
  text << "classes";
  for (const auto& [d, count] : report.realized_classes) text << ' ' << d << ':' << count;
  text << "\nargmin";
  for (const auto& p : report.argmin_pairs) {
    text << " (" << p.first.i << ',' << p.first.j << ")-(" << p.second.i << ','
         << p.second.j << ')';
  }
  text << "\n";
  write_output(o.output, text.str(), out);
  return kSuccess;
}

int cmd_bounds(const Options& o, std::ostream& out) {
  const SquareClass cls = class_from(o);
  write_output(o.output, to_json(cls, known_bounds(cls)).dump() + "\n", out);
  return kSuccess;
}

int cmd_search(const Options& o, std::ostream& out) {
  SearchQuery q;
  q.target = class_from(o);
  q.min_distance = o.min_dist;
  q.mode = parse_search_mode(o.mode);
  q.symmetry = o.fix_first_cell ? Symmetry::fix_first_cell : Symmetry::none;
  q.node_budget = o.budget;
  q.workers = o.workers;
  q.witness_limit = o.witness_limit;

  const auto started = std::chrono::steady_clock::now();
  const SearchResult result = run_search(q);
  const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - started);

  nlohmann::json j{{"query", to_json(q)},
                   {"count", result.count},
                   {"complete", result.complete},
                   {"nodes", result.nodes_expanded},
                   {"elapsed_ms", elapsed.count()}};
  if (q.mode != SearchMode::count) {
    nlohmann::json witnesses = nlohmann::json::array();
    for (const auto& w : result.witnesses) witnesses.push_back(w.rows());
    j["witnesses"] = std::move(witnesses);
  }
  if (!o.witnesses_path.empty()) {
    write_output(o.witnesses_path, format_grid_list_text(result.witnesses), out);
  }
  write_output(o.output, j.dump() + "\n", out);
  return kSuccess;
}

int cmd_canon(const Options& o, std::istream& in, std::ostream& out, std::ostream& err) {
  const ParsedGrid parsed = parse_grid_auto(read_input(o.input, in));
  CanonicalResult canon = [&]() -> CanonicalResult {
    try {
      return to_circulant_canonical(parsed.grid);
    } catch (const DomainError& e) {
      err << "canon: " << e.what() << "\n";
      throw;
    }
  }();
  if (o.format == "json") {
    nlohmann::json j{{"canonical", grid_to_json(canon.square)},
                     {"permutation", to_json(canon.permutation)}};
    write_output(o.output, j.dump() + "\n", out);
  } else {
    write_output(o.output,
                 format_grid_text(canon.square) + "# permutation " +
                     to_json(canon.permutation).dump() + "\n",
                 out);
  }
  return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Latin squares under the inner-distance metric", "innerdist"};
  app.require_subcommand(1, 1);
  Options o;

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    sub->add_option("-o,--output", o.output, "output path (default stdout)");
  };
  auto add_input = [&](CLI::App* sub) {
    sub->add_option("input", o.input, "grid file (default stdin)");
  };
  auto add_size = [&](CLI::App* sub) {
    sub->add_option("--n", o.n, "order");
    sub->add_option("--a", o.a, "block height");
    sub->add_option("--b", o.b, "block width");
  };

  auto* gen = app.add_subcommand("gen", "construct a square");
  gen->add_option("--algo", o.algo, "shift|maxdist|pandiagonal|sudoku|eveneven|shiftk")->required();
  add_size(gen);
  gen->add_option("--r", o.r);
  gen->add_option("--c", o.c);
  gen->add_option("--alpha", o.alpha);
  gen->add_option("--beta", o.beta);
  gen->add_option("--k", o.k);
  gen->add_option("--x", o.x);
  gen->add_option("--y", o.y);
  add_format(gen);

  auto* check = app.add_subcommand("check", "validate a square");
  add_input(check);
  check->add_option("--kind", o.kind, "latin|pandiagonal|sudoku");
  check->add_option("--a", o.a);
  check->add_option("--b", o.b);
  check->add_option("-o,--output", o.output);

  auto* dist = app.add_subcommand("dist", "inner distance report");
  add_input(dist);
  add_format(dist);

  auto* bounds = app.add_subcommand("bounds", "known bounds on the maximum inner distance");
  bounds->add_option("--kind", o.kind, "plain|pandiagonal|sudoku")->required();
  add_size(bounds);
  bounds->add_option("-o,--output", o.output);

  auto* search = app.add_subcommand("search", "exhaustive search");
  search->add_option("--kind", o.kind, "plain|pandiagonal|sudoku")->required();
  add_size(search);
  search->add_option("--min-dist", o.min_dist)->check(CLI::NonNegativeNumber);
  search->add_option("--mode", o.mode)->check(CLI::IsMember({"count", "enumerate", "exists"}));
  search->add_option("--workers", o.workers, "0 = hardware concurrency");
  search->add_option("--budget", o.budget, "node budget");
  search->add_flag("--fix-first-cell", o.fix_first_cell, "only squares with m(1,1) = 1");
  search->add_option("--witnesses", o.witnesses_path, "write witnesses as text grids");
  search->add_option("--witness-limit", o.witness_limit);
  search->add_option("-o,--output", o.output);

  auto* canon = app.add_subcommand("canon", "reduce to the canonical circulant");
  add_input(canon);
  add_format(canon);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  try {
    if (*gen) return cmd_gen(o, out);
    if (*check) return cmd_check(o, in, out);
    if (*dist) return cmd_dist(o, in, out);
    if (*bounds) return cmd_bounds(o, out);
    if (*search) return cmd_search(o, out);
    if (*canon) {
      try {
        return cmd_canon(o, in, out, err);
      } catch (const DomainError&) {
        return kVerifiedFalse;
      }
    }
  } catch (const NonexistenceError& e) {
    err << "error: " << e.what() << "\n";
    return kNonexistent;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace innerdist::cli
