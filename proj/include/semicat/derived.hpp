#pragma once

#include <utility>

#include "semicat/monad.hpp"

namespace semicat {

/// st(u, y) = T(x |-> (x,y))(u)
Elem strength(const Monad& T, const Elem& u, const Elem& y);
/// st'(x, v) = T(swap)(st(v, x))
Elem strength_swapped(const Monad& T, const Elem& x, const Elem& v);

/// mu . T(st') . st, the first of the two commutativity composites.
Elem composite_left(const Monad& T, const Elem& u, const Elem& v);
/// mu . T(st) . st', the second one.
Elem composite_right(const Monad& T, const Elem& u, const Elem& v);

/// dst for commutative monads.
Elem double_strength(const Monad& T, const Elem& u, const Elem& v);

struct CommutativityWitness {
  bool equal = true;
  Elem left;
  Elem right;
};

CommutativityWitness commutativity_witness(const Monad& T, const Elem& u, const Elem& v);

/// T(!)(unique value of T(0)); the neutral element of T(X) for every X.
Elem tx_zero(const Monad& T);

/// Kleisli projections p1 = [eta, 0] and p2 = [0, eta] on X+Y.
Elem kleisli_p1(const Monad& T, const Elem& sum_elem);
Elem kleisli_p2(const Monad& T, const Elem& sum_elem);

/// bc = <mu . T(p1), mu . T(p2)> : T(X+Y) -> T(X) x T(Y)
std::pair<Elem, Elem> bc(const Monad& T, const Elem& u);
Elem bc_inv(const Monad& T, const Elem& u, const Elem& v);

/// u + v = T(codiagonal)(bc^-1(u, v))
Elem tx_add(const Monad& T, const Elem& u, const Elem& v);

/// s * u = T(lambda)(dst(s, u)) for s in T(1).
Elem scalar_action(const Monad& T, const Elem& s, const Elem& u);

/// Multiplication on T(1): mu . T(lambda) . st
Elem t1_mul(const Monad& T, const Elem& a, const Elem& b);
/// Addition on T(1): T(codiagonal) . bc^-1
Elem t1_add(const Monad& T, const Elem& a, const Elem& b);

/// E(T) = T(1) as a monoid (any monad).
MonoidPtr<Elem> eval_at_one_monoid(const MonadPtr& T);
/// E(T) = T(1) as a semiring; needs T commutative and additive. Carries
/// zeta_1 as star when T is involutive.
SemiringPtr<Elem> eval_at_one(const MonadPtr& T);

/// Convenience conversions between S and E(M_S) via phi |-> phi(star).
Elem scalar_to_t1(SemiringKind kind, const Scalar& s);
Scalar t1_to_scalar(const Elem& t1, SemiringKind kind);

}  // namespace semicat
