#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "semicat/scalar.hpp"

namespace semicat {

/// Operation table of a commutative (optionally involutive) semiring over
/// values of type V. Built-in scalar semirings use V = Scalar; derived
/// semirings (T(1) of a monad, L(1,1) of a theory) use other value types.
template <class V>
struct Semiring {
  std::string name;
  std::function<V(const V&, const V&)> add;
  V zero;
  std::function<V(const V&, const V&)> mul;
  V one;
  std::optional<std::function<V(const V&)>> star;

  bool has_star() const { return star.has_value(); }

  V apply_star(const V& v) const {
    if (!star) throw Error(ErrorCode::NoInvolution, name + " has no involution");
    return (*star)(v);
  }
};

template <class V>
using SemiringPtr = std::shared_ptr<const Semiring<V>>;

using ScalarSemiring = Semiring<Scalar>;

/// Built-in descriptors: nat, bool, tropical (min,+), rat (non-negative
/// rationals), gaussian (Q[i] with conjugation). Every commutative built-in
/// carries the identity involution; gaussian carries conjugation.
SemiringPtr<Scalar> builtin_semiring(SemiringKind kind);
SemiringPtr<Scalar> builtin_semiring(std::string_view name);
/// Kind of a built-in semiring by name; UnknownSemiring otherwise.
SemiringKind semiring_kind(std::string_view name);
std::vector<SemiringKind> builtin_semiring_kinds();

/// Small curated sample pools including the boundary values (0, 1, inf, i).
std::vector<Scalar> scalar_pool(SemiringKind kind);

enum class ScalarOp { Add, Mul, Star };

Scalar scalar_eval(const ScalarSemiring& desc, ScalarOp op, std::span<const Scalar> args);

/// n-fold sum of one; the unique semiring map from N.
template <class V>
V canonical_from_nat(const Semiring<V>& desc, unsigned long n) {
  V acc = desc.zero;
  for (unsigned long k = 0; k < n; ++k) acc = desc.add(acc, desc.one);
  return acc;
}

Scalar canonical_from_nat(const ScalarSemiring& desc, const BigInt& n);

/// Monoid operation table. `commutative` is a claim that the law checker
/// verifies; it is never trusted silently.
template <class V>
struct Monoid {
  std::string name;
  std::function<V(const V&, const V&)> op;
  V unit;
  bool commutative = false;
};

template <class V>
using MonoidPtr = std::shared_ptr<const Monoid<V>>;

/// Built-in monoids usable by action monads: "nat-mul" (N, *, 1),
/// "nat-add" (N, +, 0) and "free-words" (words over {a,b,c,d}).
MonoidPtr<MonoidElem> builtin_monoid(std::string_view name);
std::vector<std::string> builtin_monoid_names();

/// Multiplicative monoid of a scalar semiring, as monoid elements.
MonoidPtr<MonoidElem> multiplicative_monoid(SemiringKind kind);

std::vector<MonoidElem> monoid_pool(const Monoid<MonoidElem>& m);

}  // namespace semicat
