#pragma once

// Reference arithmetic written straight from the textbook definitions of each
// built-in semiring, without going through the library's descriptors.

#include <algorithm>
#include <functional>

#include "semicat/graph.hpp"
#include "semicat/matrix.hpp"

namespace oracle {

using semicat::BigInt;
using semicat::Rational;
using semicat::Scalar;
using semicat::ScalarMatrix;
using semicat::SemiringKind;

inline Scalar zero(SemiringKind k) {
  switch (k) {
    case SemiringKind::Bool: return Scalar::boolean(false);
    case SemiringKind::Tropical: return Scalar::tropical_inf();
    case SemiringKind::Rat: return Scalar::rat(0, 1);
    case SemiringKind::Gaussian: return Scalar::gaussian(0, 0);
    default: return Scalar::nat(0);
  }
}

inline Scalar one(SemiringKind k) {
  switch (k) {
    case SemiringKind::Bool: return Scalar::boolean(true);
    case SemiringKind::Tropical: return Scalar::tropical(0);
    case SemiringKind::Rat: return Scalar::rat(1, 1);
    case SemiringKind::Gaussian: return Scalar::gaussian(1, 0);
    default: return Scalar::nat(1);
  }
}

inline Scalar add(const Scalar& a, const Scalar& b) {
  switch (a.kind()) {
    case SemiringKind::Bool: return Scalar::boolean(a.as_bool() || b.as_bool());
    case SemiringKind::Tropical: {
      const auto &x = a.as_tropical(), &y = b.as_tropical();
      if (x.is_inf()) return b;
      if (y.is_inf()) return a;
      return Scalar::tropical(*x.value < *y.value ? *x.value : *y.value);
    }
    case SemiringKind::Rat: return Scalar::rat(a.as_rat() + b.as_rat());
    case SemiringKind::Gaussian:
      return Scalar::gaussian(a.as_gaussian().re + b.as_gaussian().re, a.as_gaussian().im + b.as_gaussian().im);
    default: return Scalar::nat(a.as_int() + b.as_int());
  }
}

inline Scalar mul(const Scalar& a, const Scalar& b) {
  switch (a.kind()) {
    case SemiringKind::Bool: return Scalar::boolean(a.as_bool() && b.as_bool());
    case SemiringKind::Tropical: {
      const auto &x = a.as_tropical(), &y = b.as_tropical();
      if (x.is_inf() || y.is_inf()) return Scalar::tropical_inf();
      return Scalar::tropical(*x.value + *y.value);
    }
    case SemiringKind::Rat: return Scalar::rat(a.as_rat() * b.as_rat());
    case SemiringKind::Gaussian: {
      const auto &x = a.as_gaussian(), &y = b.as_gaussian();
      return Scalar::gaussian(x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re);
    }
    default: return Scalar::nat(a.as_int() * b.as_int());
  }
}

inline Scalar conj(const Scalar& a) {
  if (a.kind() != SemiringKind::Gaussian) return a;
  return Scalar::gaussian(a.as_gaussian().re, -a.as_gaussian().im);
}

/// Textbook row-by-column product.
inline ScalarMatrix compose(const ScalarMatrix& g, const ScalarMatrix& h) {
  const SemiringKind k = g.ring()->zero.kind();
  std::vector<Scalar> out;
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t c = 0; c < h.cols(); ++c) {
      Scalar acc = zero(k);
      for (std::size_t j = 0; j < g.cols(); ++j) acc = add(acc, mul(g(i, j), h(j, c)));
      out.push_back(acc);
    }
  return ScalarMatrix(g.ring(), g.rows(), h.cols(), std::move(out));
}

/// Kronecker product: block (i0, j0) of the result is g(i0, j0) * h.
inline ScalarMatrix kronecker(const ScalarMatrix& g, const ScalarMatrix& h) {
  const std::size_t rows = g.rows() * h.rows(), cols = g.cols() * h.cols();
  std::vector<Scalar> out(rows * cols, zero(g.ring()->zero.kind()));
  for (std::size_t i0 = 0; i0 < g.rows(); ++i0)
    for (std::size_t j0 = 0; j0 < g.cols(); ++j0)
      for (std::size_t i1 = 0; i1 < h.rows(); ++i1)
        for (std::size_t j1 = 0; j1 < h.cols(); ++j1)
          out[(i0 * h.rows() + i1) * cols + (j0 * h.cols() + j1)] = mul(g(i0, j0), h(i1, j1));
  return ScalarMatrix(g.ring(), rows, cols, std::move(out));
}

inline ScalarMatrix conjugate_transpose(const ScalarMatrix& f) {
  std::vector<Scalar> out;
  for (std::size_t i = 0; i < f.cols(); ++i)
    for (std::size_t j = 0; j < f.rows(); ++j) out.push_back(conj(f(j, i)));
  return ScalarMatrix(f.ring(), f.cols(), f.rows(), std::move(out));
}

/// Least total weight over all walks with at most k edges, by enumerating
/// every walk explicitly. Unreachable pairs stay infinite.
inline ScalarMatrix shortest_walks(const semicat::GraphSpec& g, std::size_t k) {
  const std::size_t n = g.nodes;
  std::vector<std::optional<BigInt>> best(n * n);
  std::function<void(std::size_t, std::size_t, BigInt, std::size_t)> walk = [&](std::size_t start, std::size_t at,
                                                                                 BigInt w, std::size_t left) {
    auto& slot = best[start * n + at];
    if (!slot || w < *slot) slot = w;
    if (left == 0) return;
    for (const auto& e : g.edges)
      if (e.src == at && !e.weight.as_tropical().is_inf()) walk(start, e.dst, w + *e.weight.as_tropical().value, left - 1);
  };
  for (std::size_t s = 0; s < n; ++s) walk(s, s, BigInt(0), k);
  std::vector<Scalar> out;
  for (const auto& b : best) out.push_back(b ? Scalar::tropical(*b) : Scalar::tropical_inf());
  return ScalarMatrix(semicat::builtin_semiring(SemiringKind::Tropical), n, n, std::move(out));
}

}  // namespace oracle
