#include "semicat/monad.hpp"

namespace semicat {

Elem Monad::empty_value() const { throw Error(ErrorCode::NotAdditive, name() + " is not additive"); }

Elem Monad::bc_inverse(const Elem&, const Elem&) const {
  throw Error(ErrorCode::NotAdditive, name() + " is not additive");
}

Elem Monad::involution(const Elem&) const { throw Error(ErrorCode::NoInvolution, name() + " has no involution"); }

MultisetMonad::MultisetMonad(SemiringKind kind) : kind_(kind), name_("M_" + std::string(kind_name(kind))) {
  builtin_semiring(kind);  // rejects kinds without a built-in semiring
}

const Multiset& MultisetMonad::value(const Elem& u) const {
  if (!u.is(Elem::Kind::Ms)) throw Error(ErrorCode::KeyNotMultiset, to_string(u) + " is not a multiset");
  if (u.as_ms().tag() != kind_)
    throw Error(ErrorCode::TagMismatch, "multiset over " + std::string(kind_name(u.as_ms().tag())) + " given to " +
                                            name_);
  return u.as_ms();
}

bool MultisetMonad::is_value(const Elem& u) const { return u.is(Elem::Kind::Ms) && u.as_ms().tag() == kind_; }

std::vector<Elem> MultisetMonad::support(const Elem& u) const { return value(u).support(); }

Elem MultisetMonad::fmap(const ElemFn& f, const Elem& u) const { return Elem::ms(ms_fmap(f, value(u))); }

Elem MultisetMonad::unit(const Elem& x) const { return Elem::ms(ms_unit(x, kind_)); }

Elem MultisetMonad::mult(const Elem& uu) const { return Elem::ms(ms_mult(value(uu))); }

Elem MultisetMonad::empty_value() const { return Elem::ms(Multiset(kind_)); }

Elem MultisetMonad::bc_inverse(const Elem& u, const Elem& v) const {
  MultisetBuilder b(kind_);
  for (const auto& [x, s] : value(u).entries()) b.add(Elem::inl(x), s);
  for (const auto& [y, t] : value(v).entries()) b.add(Elem::inr(y), t);
  return Elem::ms(std::move(b).build());
}

Elem MultisetMonad::involution(const Elem& u) const { return Elem::ms(ms_involution(value(u))); }

ActionMonad::ActionMonad(MonoidPtr<MonoidElem> monoid)
    : monoid_(std::move(monoid)), name_("A(" + monoid_->name + ")") {}

bool ActionMonad::is_value(const Elem& u) const {
  if (!u.is(Elem::Kind::Act)) return false;
  return u.act_monoid().index() == monoid_->unit.index();
}

std::vector<Elem> ActionMonad::support(const Elem& u) const {
  if (!is_value(u)) throw Error(ErrorCode::MonoidMismatch, to_string(u) + " is not a value of " + name_);
  return {u.act_elem()};
}

Elem ActionMonad::fmap(const ElemFn& f, const Elem& u) const {
  if (!is_value(u)) throw Error(ErrorCode::MonoidMismatch, to_string(u) + " is not a value of " + name_);
  return Elem::act(u.act_monoid(), f(u.act_elem()));
}

Elem ActionMonad::unit(const Elem& x) const { return action_unit(*monoid_, x); }

Elem ActionMonad::mult(const Elem& uu) const { return action_mult(*monoid_, uu); }

Elem action_unit(const Monoid<MonoidElem>& M, const Elem& x) { return Elem::act(M.unit, x); }

Elem action_mult(const Monoid<MonoidElem>& M, const Elem& nested) {
  if (!nested.is(Elem::Kind::Act) || !nested.act_elem().is(Elem::Kind::Act))
    throw Error(ErrorCode::MonoidMismatch, to_string(nested) + " is not of the form (s,(t,x))");
  const Elem& inner = nested.act_elem();
  return Elem::act(M.op(nested.act_monoid(), inner.act_monoid()), inner.act_elem());
}

MonadPtr multiset_monad(SemiringKind kind) { return std::make_shared<const MultisetMonad>(kind); }

MonadPtr action_monad(MonoidPtr<MonoidElem> monoid) { return std::make_shared<const ActionMonad>(std::move(monoid)); }

}  // namespace semicat
