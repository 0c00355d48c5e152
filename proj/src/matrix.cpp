#include "semicat/matrix.hpp"

#include <sstream>

namespace semicat {

std::pair<std::size_t, std::size_t> coord_split(std::size_t n, std::size_t m, std::size_t c) {
  if (c >= n * m)
    throw Error(ErrorCode::IndexOutOfRange, "coordinate " + std::to_string(c) + " outside " + std::to_string(n) +
                                                "x" + std::to_string(m));
  return {c / m, c % m};
}

std::size_t coord_join(std::size_t n, std::size_t m, std::size_t a, std::size_t b) {
  if (a >= n || b >= m)
    throw Error(ErrorCode::IndexOutOfRange, "pair (" + std::to_string(a) + "," + std::to_string(b) + ") outside " +
                                                std::to_string(n) + "x" + std::to_string(m));
  return a * m + b;
}

Aleph0Map::Aleph0Map(std::size_t dom, std::size_t cod, std::vector<std::size_t> table)
    : dom_(dom), cod_(cod), table_(std::move(table)) {
  if (table_.size() != dom_) throw Error(ErrorCode::DimensionMismatch, "function table has the wrong length");
  for (auto v : table_)
    if (v >= cod_) throw Error(ErrorCode::IndexOutOfRange, "function value " + std::to_string(v) + " >= codomain");
}

Aleph0Map Aleph0Map::identity(std::size_t n) {
  std::vector<std::size_t> t(n);
  for (std::size_t i = 0; i < n; ++i) t[i] = i;
  return Aleph0Map(n, n, std::move(t));
}

Aleph0Map Aleph0Map::symmetry(std::size_t n, std::size_t m) {
  std::vector<std::size_t> t(n * m);
  for (std::size_t c = 0; c < n * m; ++c) {
    auto [a, b] = coord_split(n, m, c);
    t[c] = coord_join(m, n, b, a);
  }
  return Aleph0Map(n * m, n * m, std::move(t));
}

Aleph0Map Aleph0Map::then(const Aleph0Map& g) const {
  if (cod_ != g.dom_) throw Error(ErrorCode::DimensionMismatch, "cannot compose functions");
  std::vector<std::size_t> t(dom_);
  for (std::size_t i = 0; i < dom_; ++i) t[i] = g(table_[i]);
  return Aleph0Map(dom_, g.cod_, std::move(t));
}

std::string write_mat(const ScalarMatrix& m) {
  std::ostringstream os;
  os << "semiring " << m.tag() << " " << m.rows() << " " << m.cols() << "\n";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) os << ' ';
      os << to_string(m(i, j));
    }
    os << "\n";
  }
  return os.str();
}

namespace {

struct Token {
  std::string text;
  std::size_t col;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t k = 0;
  while (k < line.size()) {
    while (k < line.size() && (line[k] == ' ' || line[k] == '\t' || line[k] == '\r')) ++k;
    if (k >= line.size()) break;
    std::size_t start = k;
    while (k < line.size() && line[k] != ' ' && line[k] != '\t' && line[k] != '\r') ++k;
    out.push_back({std::string(line.substr(start, k - start)), start + 1});
  }
  return out;
}

[[noreturn]] void fail_at(std::size_t line, std::size_t col, const std::string& why) {
  throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + why);
}

std::size_t parse_dim(const Token& t, std::size_t line) {
  if (t.text.empty() || t.text.size() > 6 || t.text.find_first_not_of("0123456789") != std::string::npos)
    fail_at(line, t.col, "expected a dimension, got '" + t.text + "'");
  return std::stoul(t.text);
}

}  // namespace

ScalarMatrix parse_mat(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) {
      if (pos < text.size()) lines.push_back(text.substr(pos));
      break;
    }
    lines.push_back(text.substr(pos, nl - pos));
    pos = nl + 1;
  }
  if (lines.empty()) fail_at(1, 1, "empty input");
  auto header = tokenize(lines[0]);
  if (header.size() != 4 || header[0].text != "semiring")
    fail_at(1, header.empty() ? 1 : header[0].col, "expected 'semiring <name> <rows> <cols>'");
  auto kind = kind_from_name(header[1].text);
  if (!kind || *kind == SemiringKind::Int) fail_at(1, header[1].col, "unknown semiring '" + header[1].text + "'");
  const std::size_t rows = parse_dim(header[2], 1);
  const std::size_t cols = parse_dim(header[3], 1);
  auto ring = builtin_semiring(*kind);

  std::vector<Scalar> entries;
  entries.reserve(rows * cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const std::size_t line_no = i + 2;
    if (i + 1 >= lines.size()) fail_at(line_no, 1, "missing row " + std::to_string(i));
    auto toks = tokenize(lines[i + 1]);
    if (toks.size() != cols)
      fail_at(line_no, toks.size() > cols ? toks[cols].col : lines[i + 1].size() + 1,
              "expected " + std::to_string(cols) + " entries, got " + std::to_string(toks.size()));
    for (const auto& t : toks) {
      try {
        entries.push_back(parse_scalar(*kind, t.text));
      } catch (const Error& e) {
        fail_at(line_no, t.col, e.what());
      }
    }
  }
  for (std::size_t k = rows + 1; k < lines.size(); ++k)
    if (!tokenize(lines[k]).empty()) fail_at(k + 1, tokenize(lines[k])[0].col, "unexpected trailing content");
  return ScalarMatrix(ring, rows, cols, std::move(entries));
}

ScalarMatrix make_matrix(SemiringKind kind, std::size_t rows, std::size_t cols,
                         std::initializer_list<const char*> entries) {
  std::vector<Scalar> v;
  for (const char* e : entries) v.push_back(parse_scalar(kind, e));
  return ScalarMatrix(builtin_semiring(kind), rows, cols, std::move(v));
}

}  // namespace semicat
