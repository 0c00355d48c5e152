#include "semicat/derived.hpp"

namespace semicat {

namespace {

Elem swap_pair(const Elem& p) { return Elem::pair(p.second(), p.first()); }

// lambda = pi_2 : 1 x X -> X
Elem lambda(const Elem& p) {
  if (!p.first().is(Elem::Kind::Star))
    throw Error(ErrorCode::ElementOutsideCarrier, to_string(p) + " is not in 1 x X");
  return p.second();
}

Elem codiagonal(const Elem& e) { return e.inner(); }

void require_additive(const Monad& T) {
  if (!T.flags().additive) throw Error(ErrorCode::NotAdditive, T.name() + " is not additive");
}

void require_commutative(const Monad& T) {
  if (!T.flags().commutative) throw Error(ErrorCode::NotCommutative, T.name() + " is not commutative");
}

}  // namespace

Elem strength(const Monad& T, const Elem& u, const Elem& y) {
  return T.fmap([&](const Elem& x) { return Elem::pair(x, y); }, u);
}

Elem strength_swapped(const Monad& T, const Elem& x, const Elem& v) {
  return T.fmap(swap_pair, strength(T, v, x));
}

Elem composite_left(const Monad& T, const Elem& u, const Elem& v) {
  // st : T(X) x T(Y) -> T(X x T(Y)), then T(st'), then mu
  Elem outer = strength(T, u, v);
  return T.mult(T.fmap([&](const Elem& p) { return strength_swapped(T, p.first(), p.second()); }, outer));
}

Elem composite_right(const Monad& T, const Elem& u, const Elem& v) {
  // st' : T(X) x T(Y) -> T(T(X) x Y), then T(st), then mu
  Elem outer = strength_swapped(T, u, v);
  return T.mult(T.fmap([&](const Elem& p) { return strength(T, p.first(), p.second()); }, outer));
}

Elem double_strength(const Monad& T, const Elem& u, const Elem& v) {
  require_commutative(T);
  return composite_left(T, u, v);
}

CommutativityWitness commutativity_witness(const Monad& T, const Elem& u, const Elem& v) {
  CommutativityWitness w;
  w.left = composite_left(T, u, v);
  w.right = composite_right(T, u, v);
  w.equal = w.left == w.right;
  return w;
}

Elem tx_zero(const Monad& T) {
  require_additive(T);
  return T.fmap(
      [](const Elem& e) -> Elem {
        throw Error(ErrorCode::ElementOutsideCarrier, "the empty set has no element " + to_string(e));
      },
      T.empty_value());
}

Elem kleisli_p1(const Monad& T, const Elem& e) {
  if (e.is(Elem::Kind::Inl)) return T.unit(e.inner());
  if (e.is(Elem::Kind::Inr)) return tx_zero(T);
  throw Error(ErrorCode::ElementOutsideCarrier, to_string(e) + " is not in a sum carrier");
}

Elem kleisli_p2(const Monad& T, const Elem& e) {
  if (e.is(Elem::Kind::Inr)) return T.unit(e.inner());
  if (e.is(Elem::Kind::Inl)) return tx_zero(T);
  throw Error(ErrorCode::ElementOutsideCarrier, to_string(e) + " is not in a sum carrier");
}

std::pair<Elem, Elem> bc(const Monad& T, const Elem& u) {
  require_additive(T);
  Elem left = T.mult(T.fmap([&](const Elem& e) { return kleisli_p1(T, e); }, u));
  Elem right = T.mult(T.fmap([&](const Elem& e) { return kleisli_p2(T, e); }, u));
  return {left, right};
}

Elem bc_inv(const Monad& T, const Elem& u, const Elem& v) {
  require_additive(T);
  return T.bc_inverse(u, v);
}

Elem tx_add(const Monad& T, const Elem& u, const Elem& v) { return T.fmap(codiagonal, bc_inv(T, u, v)); }

Elem scalar_action(const Monad& T, const Elem& s, const Elem& u) {
  return T.fmap(lambda, double_strength(T, s, u));
}

Elem t1_mul(const Monad& T, const Elem& a, const Elem& b) { return T.mult(T.fmap(lambda, strength(T, a, b))); }

Elem t1_add(const Monad& T, const Elem& a, const Elem& b) { return tx_add(T, a, b); }

MonoidPtr<Elem> eval_at_one_monoid(const MonadPtr& T) {
  auto m = std::make_shared<Monoid<Elem>>();
  m->name = "E(" + T->name() + ")";
  m->unit = T->unit(Elem::star());
  m->commutative = T->flags().commutative;
  m->op = [T](const Elem& a, const Elem& b) { return t1_mul(*T, a, b); };
  return m;
}

SemiringPtr<Elem> eval_at_one(const MonadPtr& T) {
  require_additive(*T);
  require_commutative(*T);
  auto S = std::make_shared<Semiring<Elem>>();
  S->name = "E(" + T->name() + ")";
  S->add = [T](const Elem& a, const Elem& b) { return t1_add(*T, a, b); };
  S->zero = tx_zero(*T);
  S->mul = [T](const Elem& a, const Elem& b) { return t1_mul(*T, a, b); };
  S->one = T->unit(Elem::star());
  if (T->flags().involutive) S->star = [T](const Elem& a) { return T->involution(a); };
  return S;
}

Elem scalar_to_t1(SemiringKind kind, const Scalar& s) {
  return Elem::ms(Multiset::from_entries(kind, {{Elem::star(), s}}));
}

Scalar t1_to_scalar(const Elem& t1, SemiringKind kind) {
  if (!t1.is(Elem::Kind::Ms) || t1.as_ms().tag() != kind)
    throw Error(ErrorCode::TagMismatch, to_string(t1) + " is not in M_" + std::string(kind_name(kind)) + "(1)");
  for (const auto& x : t1.as_ms().support())
    if (!x.is(Elem::Kind::Star)) throw Error(ErrorCode::ElementOutsideCarrier, to_string(t1) + " is not over 1");
  return t1.as_ms().at(Elem::star());
}

}  // namespace semicat
