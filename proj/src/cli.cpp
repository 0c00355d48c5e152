#include "semicat/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <sstream>

#include "semicat/graph.hpp"
#include "semicat/matrix.hpp"
#include "semicat/suite.hpp"

namespace semicat {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::InvalidValue, "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ScalarMatrix read_mat(const std::string& path) {
  try {
    return parse_mat(read_file(path));
  } catch (const Error& e) {
    if (e.code() == ErrorCode::ParseError) throw Error(e.code(), path + ": " + e.what());
    throw;
  }
}

struct LawsArgs {
  std::string suite, semiring, monoid;
  std::uint64_t seed = 0;
  std::size_t cases = 100;
};

struct MatmulArgs {
  std::string op, a, b;
};

struct PathArgs {
  std::string graph;
  std::size_t max_hops = 0;
};

struct RoundtripArgs {
  std::string adjunction, semiring = "nat";
  bool involutive = false;
  std::uint64_t seed = 0;
  std::size_t cases = 50;
};

int cmd_laws(const LawsArgs& a, std::ostream& out) {
  const auto report = run_suite(SuiteConfig{a.suite, a.semiring, a.monoid, a.seed, a.cases});
  out << render(report);
  return report.passed() ? 0 : 1;
}

int cmd_matmul(const MatmulArgs& a, std::ostream& out, std::ostream& err) {
  const auto A = read_mat(a.a);
  if (a.op == "dagger") {
    out << write_mat(mat_dagger(A));
    return 0;
  }
  if (a.b.empty()) {
    err << "error: --op " << a.op << " needs -B\n";
    return 2;
  }
  const auto B = read_mat(a.b);
  out << write_mat(a.op == "compose" ? mat_compose(A, B) : mat_tensor(A, B));
  return 0;
}

int cmd_shortest_path(const PathArgs& a, std::ostream& out) {
  const auto g = parse_graph(read_file(a.graph));
  out << write_mat(bounded_paths(adjacency_matrix(g), a.max_hops));
  return 0;
}

int cmd_roundtrip(const RoundtripArgs& a, std::ostream& out) {
  SuiteReport report;
  report.suite = "roundtrip " + a.adjunction;
  report.laws = run_roundtrip(a.adjunction, a.semiring, a.involutive, a.seed, a.cases).results;
  std::stable_sort(report.laws.begin(), report.laws.end(),
                   [](const LawResult& x, const LawResult& y) { return x.law < y.law; });
  out << render(report);
  return report.passed() ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact matrix and monad computations over built-in semirings", "semicat"};
  app.require_subcommand(1);

  LawsArgs laws;
  auto* laws_cmd = app.add_subcommand("laws", "Run a seeded law suite");
  laws_cmd->add_option("--suite", laws.suite, "Suite name")->required();
  laws_cmd->add_option("--semiring", laws.semiring, "nat, bool, tropical, rat or gaussian");
  laws_cmd->add_option("--monoid", laws.monoid, "nat-mul, nat-add or free-words (selects the action monad)");
  laws_cmd->add_option("--seed", laws.seed, "Random seed");
  laws_cmd->add_option("--cases", laws.cases, "Cases per law");

  MatmulArgs mm;
  auto* mm_cmd = app.add_subcommand("matmul", "Compose, tensor or dagger .mat files");
  mm_cmd->add_option("--op", mm.op, "compose, tensor or dagger")
      ->required()
      ->check(CLI::IsMember({"compose", "tensor", "dagger"}));
  mm_cmd->add_option("-A", mm.a, "First matrix")->required();
  mm_cmd->add_option("-B", mm.b, "Second matrix");

  PathArgs path;
  auto* path_cmd = app.add_subcommand("shortest-path", "Least path weights using at most k edges");
  path_cmd->add_option("--graph", path.graph, "Graph file")->required();
  path_cmd->add_option("--max-hops", path.max_hops, "Maximum number of edges")->required();

  RoundtripArgs rt;
  auto* rt_cmd = app.add_subcommand("roundtrip", "Check an adjunction's transposes on samples");
  rt_cmd->add_option("--adjunction", rt.adjunction, "mon-e, srng-e or mat-h")->required();
  rt_cmd->add_option("--semiring", rt.semiring, "Semiring name");
  rt_cmd->add_flag("--involutive", rt.involutive, "Also check star, involution and dagger");
  rt_cmd->add_option("--seed", rt.seed, "Random seed");
  rt_cmd->add_option("--cases", rt.cases, "Cases per check");

  std::ostringstream buffer;
  int code = 0;
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    if (*laws_cmd)
      code = cmd_laws(laws, buffer);
    else if (*mm_cmd)
      code = cmd_matmul(mm, buffer, err);
    else if (*path_cmd)
      code = cmd_shortest_path(path, buffer);
    else
      code = cmd_roundtrip(rt, buffer);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  out << buffer.str();
  out.flush();
  return code;
}

}  // namespace semicat
