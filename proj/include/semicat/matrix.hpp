#pragma once

#include <cstddef>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "semicat/semiring.hpp"

namespace semicat {

/// A morphism n -> m of Mat(S): an n x m grid stored row-major. Composition
/// follows (h . g)(i,k) = sum_j g(i,j) * h(j,k), i.e. rows index the domain.
template <class V>
class Matrix {
 public:
  Matrix(SemiringPtr<V> ring, std::size_t rows, std::size_t cols, std::vector<V> entries)
      : ring_(std::move(ring)), rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_)
      throw Error(ErrorCode::DimensionMismatch, "matrix needs " + std::to_string(rows_ * cols_) + " entries, got " +
                                                    std::to_string(entries_.size()));
    if constexpr (std::is_same_v<V, Scalar>) {
      for (const auto& s : entries_)
        if (s.kind() != ring_->zero.kind())
          throw Error(ErrorCode::TagMismatch, "entry " + to_string(s) + " does not belong to " + ring_->name);
    }
  }

  static Matrix filled(SemiringPtr<V> ring, std::size_t rows, std::size_t cols, const V& v) {
    return Matrix(ring, rows, cols, std::vector<V>(rows * cols, v));
  }

  /// Builds entry (i,j) from f(i,j).
  template <class F>
  static Matrix generate(SemiringPtr<V> ring, std::size_t rows, std::size_t cols, F f) {
    std::vector<V> e;
    e.reserve(rows * cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) e.push_back(f(i, j));
    return Matrix(std::move(ring), rows, cols, std::move(e));
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const SemiringPtr<V>& ring() const { return ring_; }
  const std::string& tag() const { return ring_->name; }
  const std::vector<V>& entries() const { return entries_; }

  const V& operator()(std::size_t i, std::size_t j) const {
    if (i >= rows_ || j >= cols_) throw Error(ErrorCode::IndexOutOfRange, "matrix index out of range");
    return entries_[i * cols_ + j];
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.tag() == b.tag() && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

 private:
  SemiringPtr<V> ring_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<V> entries_;
};

template <class V>
std::string to_string(const Matrix<V>& m) {
  std::string out = "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out += i ? ",[" : "[";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out += ",";
      out += to_string(m(i, j));
    }
    out += "]";
  }
  return out + "]:" + std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

namespace detail {

template <class V>
void same_ring(const Matrix<V>& a, const Matrix<V>& b) {
  if (a.tag() != b.tag()) throw Error(ErrorCode::TagMismatch, "matrices over " + a.tag() + " and " + b.tag());
}

}  // namespace detail

template <class V>
Matrix<V> mat_identity(const SemiringPtr<V>& S, std::size_t n) {
  return Matrix<V>::generate(S, n, n, [&](std::size_t i, std::size_t j) { return i == j ? S->one : S->zero; });
}

template <class V>
Matrix<V> mat_zero(const SemiringPtr<V>& S, std::size_t n, std::size_t m) {
  return Matrix<V>::filled(S, n, m, S->zero);
}

/// g : n -> m then h : m -> p.
template <class V>
Matrix<V> mat_compose(const Matrix<V>& g, const Matrix<V>& h) {
  detail::same_ring(g, h);
  if (g.cols() != h.rows())
    throw Error(ErrorCode::DimensionMismatch, "cannot compose " + std::to_string(g.rows()) + "->" +
                                                  std::to_string(g.cols()) + " with " + std::to_string(h.rows()) +
                                                  "->" + std::to_string(h.cols()));
  const auto& S = *g.ring();
  return Matrix<V>::generate(g.ring(), g.rows(), h.cols(), [&](std::size_t i, std::size_t k) {
    V acc = S.zero;
    for (std::size_t j = 0; j < g.cols(); ++j) acc = S.add(acc, S.mul(g(i, j), h(j, k)));
    return acc;
  });
}

/// kappa_1 : n -> n+m
template <class V>
Matrix<V> mat_coproj1(const SemiringPtr<V>& S, std::size_t n, std::size_t m) {
  return Matrix<V>::generate(S, n, n + m, [&](std::size_t i, std::size_t j) { return i == j ? S->one : S->zero; });
}

/// kappa_2 : m -> n+m
template <class V>
Matrix<V> mat_coproj2(const SemiringPtr<V>& S, std::size_t n, std::size_t m) {
  return Matrix<V>::generate(S, m, n + m,
                             [&](std::size_t i, std::size_t j) { return (j >= n && j - n == i) ? S->one : S->zero; });
}

/// pi_1 : n+m -> n
template <class V>
Matrix<V> mat_proj1(const SemiringPtr<V>& S, std::size_t n, std::size_t m) {
  return Matrix<V>::generate(S, n + m, n, [&](std::size_t i, std::size_t j) { return i == j ? S->one : S->zero; });
}

/// pi_2 : n+m -> m
template <class V>
Matrix<V> mat_proj2(const SemiringPtr<V>& S, std::size_t n, std::size_t m) {
  return Matrix<V>::generate(S, n + m, m,
                             [&](std::size_t i, std::size_t j) { return (i >= n && i - n == j) ? S->one : S->zero; });
}

/// [f, g] : a+b -> p, stacking rows.
template <class V>
Matrix<V> mat_cotuple(const Matrix<V>& f, const Matrix<V>& g) {
  detail::same_ring(f, g);
  if (f.cols() != g.cols()) throw Error(ErrorCode::DimensionMismatch, "cotuple needs a common codomain");
  return Matrix<V>::generate(f.ring(), f.rows() + g.rows(), f.cols(), [&](std::size_t i, std::size_t j) {
    return i < f.rows() ? f(i, j) : g(i - f.rows(), j);
  });
}

/// <f, g> : n -> a+b, concatenating columns.
template <class V>
Matrix<V> mat_tuple(const Matrix<V>& f, const Matrix<V>& g) {
  detail::same_ring(f, g);
  if (f.rows() != g.rows()) throw Error(ErrorCode::DimensionMismatch, "tuple needs a common domain");
  return Matrix<V>::generate(f.ring(), f.rows(), f.cols() + g.cols(), [&](std::size_t i, std::size_t j) {
    return j < f.cols() ? f(i, j) : g(i, j - f.cols());
  });
}

/// Coordinatisation of n x m as {0, ..., n*m-1}: c = a*m + b.
std::pair<std::size_t, std::size_t> coord_split(std::size_t n, std::size_t m, std::size_t c);
std::size_t coord_join(std::size_t n, std::size_t m, std::size_t a, std::size_t b);

/// (g (x) h)((i0,i1),(j0,j1)) = g(i0,j0) * h(i1,j1) with both index pairs
/// flattened by coord_join.
template <class V>
Matrix<V> mat_tensor(const Matrix<V>& g, const Matrix<V>& h) {
  detail::same_ring(g, h);
  const auto& S = *g.ring();
  const std::size_t rows = g.rows() * h.rows();
  const std::size_t cols = g.cols() * h.cols();
  return Matrix<V>::generate(g.ring(), rows, cols, [&](std::size_t r, std::size_t c) {
    auto [i0, i1] = coord_split(g.rows(), h.rows(), r);
    auto [j0, j1] = coord_split(g.cols(), h.cols(), c);
    return S.mul(g(i0, j0), h(i1, j1));
  });
}

/// f^dagger(i,j) = f(j,i)^*
template <class V>
Matrix<V> mat_dagger(const Matrix<V>& f) {
  const auto& S = *f.ring();
  if (!S.has_star()) throw Error(ErrorCode::NoInvolution, S.name + " has no involution");
  return Matrix<V>::generate(f.ring(), f.cols(), f.rows(),
                             [&](std::size_t i, std::size_t j) { return S.apply_star(f(j, i)); });
}

/// Entrywise image under a map of semirings (the functor Mat(g)).
template <class W, class V, class F>
Matrix<W> mat_map(const Matrix<V>& m, const SemiringPtr<W>& target, F f) {
  return Matrix<W>::generate(target, m.rows(), m.cols(), [&](std::size_t i, std::size_t j) { return f(m(i, j)); });
}

/// A function {0..dom-1} -> {0..cod-1}: a morphism of aleph_0.
class Aleph0Map {
 public:
  Aleph0Map(std::size_t dom, std::size_t cod, std::vector<std::size_t> table);

  static Aleph0Map identity(std::size_t n);
  /// a*m + b |-> b*n + a : n(x)m -> m(x)n
  static Aleph0Map symmetry(std::size_t n, std::size_t m);

  std::size_t dom() const { return dom_; }
  std::size_t cod() const { return cod_; }
  const std::vector<std::size_t>& table() const { return table_; }
  std::size_t operator()(std::size_t i) const { return table_.at(i); }

  Aleph0Map then(const Aleph0Map& g) const;

  friend bool operator==(const Aleph0Map&, const Aleph0Map&) = default;

 private:
  std::size_t dom_;
  std::size_t cod_;
  std::vector<std::size_t> table_;
};

/// entry(i,j) = one iff f(i) = j
template <class V>
Matrix<V> aleph0_embed(const Aleph0Map& f, const SemiringPtr<V>& S) {
  return Matrix<V>::generate(S, f.dom(), f.cod(),
                             [&](std::size_t i, std::size_t j) { return f(i) == j ? S->one : S->zero; });
}

/// Mat(S) packaged as a biproduct category (see biproduct.hpp).
template <class V>
class MatTheory {
 public:
  using Morphism = Matrix<V>;

  explicit MatTheory(SemiringPtr<V> ring) : ring_(std::move(ring)) {}

  const SemiringPtr<V>& ring() const { return ring_; }
  std::string name() const { return "Mat(" + ring_->name + ")"; }

  std::size_t dom(const Morphism& f) const { return f.rows(); }
  std::size_t cod(const Morphism& f) const { return f.cols(); }
  Morphism identity(std::size_t n) const { return mat_identity(ring_, n); }
  Morphism compose(const Morphism& f, const Morphism& g) const { return mat_compose(f, g); }
  Morphism coproj1(std::size_t n, std::size_t m) const { return mat_coproj1(ring_, n, m); }
  Morphism coproj2(std::size_t n, std::size_t m) const { return mat_coproj2(ring_, n, m); }
  Morphism proj1(std::size_t n, std::size_t m) const { return mat_proj1(ring_, n, m); }
  Morphism proj2(std::size_t n, std::size_t m) const { return mat_proj2(ring_, n, m); }
  Morphism tuple(const Morphism& f, const Morphism& g) const { return mat_tuple(f, g); }
  Morphism cotuple(const Morphism& f, const Morphism& g) const { return mat_cotuple(f, g); }
  Morphism zero(std::size_t n, std::size_t m) const { return mat_zero(ring_, n, m); }
  Morphism tensor(const Morphism& f, const Morphism& g) const { return mat_tensor(f, g); }
  Morphism embed(const Aleph0Map& f) const { return aleph0_embed(f, ring_); }
  bool has_dagger() const { return ring_->has_star(); }
  Morphism dagger(const Morphism& f) const { return mat_dagger(f); }

 private:
  SemiringPtr<V> ring_;
};

using ScalarMatrix = Matrix<Scalar>;

/// `.mat` text: header `semiring <name> <rows> <cols>` then one line per
/// row of whitespace-separated scalars.
std::string write_mat(const ScalarMatrix& m);
ScalarMatrix parse_mat(std::string_view text);

/// Convenience for tests and fixtures: rows of scalar texts.
ScalarMatrix make_matrix(SemiringKind kind, std::size_t rows, std::size_t cols,
                         std::initializer_list<const char*> entries);

}  // namespace semicat
