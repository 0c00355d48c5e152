#include "semicat/graph.hpp"

#include <charconv>
#include <sstream>

#include "semicat/biproduct.hpp"

namespace semicat {

namespace {

[[noreturn]] void fail(std::size_t line, const std::string& msg) {
  throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": " + msg);
}

std::vector<std::string> words(std::string_view line) {
  std::istringstream in{std::string(line)};
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

std::size_t parse_index(const std::string& w, std::size_t line) {
  std::size_t v = 0;
  auto [p, ec] = std::from_chars(w.data(), w.data() + w.size(), v);
  if (ec != std::errc() || p != w.data() + w.size()) fail(line, "expected a node index, got '" + w + "'");
  return v;
}

}  // namespace

GraphSpec parse_graph(std::string_view text, SemiringKind kind) {
  GraphSpec g;
  bool have_header = false;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto end = text.find('\n', start);
    std::string_view line = text.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start);
    ++line_no;
    start = end == std::string_view::npos ? text.size() + 1 : end + 1;
    const auto w = words(line);
    if (w.empty() || w[0][0] == '#') continue;
    if (!have_header) {
      if (w.size() != 1) fail(line_no, "expected the node count");
      g.nodes = parse_index(w[0], line_no);
      have_header = true;
      continue;
    }
    if (w.size() != 3) fail(line_no, "expected 'src dst weight'");
    Edge e{parse_index(w[0], line_no), parse_index(w[1], line_no), Scalar()};
    if (e.src >= g.nodes || e.dst >= g.nodes) fail(line_no, "node index out of range");
    try {
      e.weight = parse_scalar(kind, w[2]);
    } catch (const Error& err) {
      fail(line_no, err.what());
    }
    g.edges.push_back(std::move(e));
  }
  if (!have_header) fail(line_no, "missing node count");
  return g;
}

ScalarMatrix adjacency_matrix(const GraphSpec& g, SemiringKind kind) {
  const auto S = builtin_semiring(kind);
  std::vector<Scalar> entries(g.nodes * g.nodes, S->zero);
  for (const auto& e : g.edges) {
    auto& slot = entries[e.src * g.nodes + e.dst];
    slot = S->add(slot, e.weight);
  }
  return ScalarMatrix(S, g.nodes, g.nodes, std::move(entries));
}

ScalarMatrix bounded_paths(const ScalarMatrix& adjacency, std::size_t max_hops) {
  const MatTheory<Scalar> M(adjacency.ring());
  const std::size_t n = adjacency.rows();
  auto power = M.identity(n);
  auto total = power;
  for (std::size_t k = 0; k < max_hops; ++k) {
    power = M.compose(power, adjacency);
    total = hom_add(M, total, power);
  }
  return total;
}

}  // namespace semicat
