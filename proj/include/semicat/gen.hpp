#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "semicat/kleisli.hpp"
#include "semicat/matrix.hpp"
#include "semicat/monad.hpp"

namespace semicat {

/// Seeded source of test data. Draws use plain modulo on the engine output
/// so a seed yields the same data on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  std::size_t below(std::size_t n) { return n == 0 ? 0 : static_cast<std::size_t>(engine_() % n); }
  std::int64_t between(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::size_t>(hi - lo + 1)));
  }
  bool chance(std::size_t one_in) { return below(one_in) == 0; }

  template <class T>
  const T& pick(const std::vector<T>& xs) {
    return xs[below(xs.size())];
  }

 private:
  std::mt19937_64 engine_;
};

/// Mixes a base seed with a label so independent laws get independent streams.
std::uint64_t derive_seed(std::uint64_t seed, std::string_view label);

Scalar gen_scalar(Rng& rng, SemiringKind kind);
MonoidElem gen_monoid_elem(Rng& rng, const Monoid<MonoidElem>& M);

/// {0..n-1} as index atoms.
std::vector<Elem> index_carrier(std::size_t n);

Multiset gen_multiset(Rng& rng, SemiringKind kind, const std::vector<Elem>& carrier, std::size_t max_support = 4);

/// A T-value whose support is drawn from `carrier`.
Elem gen_t_value(Rng& rng, const Monad& T, const std::vector<Elem>& carrier);

/// A T(T(X))-value built from a handful of sampled inner values.
Elem gen_nested_t_value(Rng& rng, const Monad& T, const std::vector<Elem>& carrier);

/// A function between carriers given by a random table.
FiniteMap gen_finite_map(Rng& rng, const FiniteCarrier& dom, const FiniteCarrier& cod);

Aleph0Map gen_aleph0_map(Rng& rng, std::size_t dom, std::size_t cod);

ScalarMatrix gen_matrix(Rng& rng, SemiringKind kind, std::size_t rows, std::size_t cols);

KleisliMap gen_kleisli(Rng& rng, const MonadPtr& T, std::size_t dom, std::size_t cod);

}  // namespace semicat
