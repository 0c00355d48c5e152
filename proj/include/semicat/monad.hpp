#pragma once

#include <memory>
#include <string>
#include <vector>

#include "semicat/elem.hpp"
#include "semicat/multiset.hpp"
#include "semicat/semiring.hpp"

namespace semicat {

struct MonadFlags {
  bool commutative = false;
  bool additive = false;
  bool involutive = false;
};

/// A monad on finite sets. Values of T(X) are encoded as Elems, so T(T(X))
/// needs no separate representation. Only eta, mu and fmap are primitive;
/// strength, bc, the T(1) operations and the module action are derived from
/// them generically (see derived.hpp).
class Monad {
 public:
  virtual ~Monad() = default;

  virtual const std::string& name() const = 0;
  virtual MonadFlags flags() const = 0;

  /// Whether `u` is a well-formed value of T(X) for some X.
  virtual bool is_value(const Elem& u) const = 0;
  /// Elements of X occurring in `u`.
  virtual std::vector<Elem> support(const Elem& u) const = 0;

  virtual Elem fmap(const ElemFn& f, const Elem& u) const = 0;
  virtual Elem unit(const Elem& x) const = 0;
  virtual Elem mult(const Elem& uu) const = 0;

  /// The unique inhabitant of T(0); only additive monads have one.
  virtual Elem empty_value() const;
  /// Inverse of the bicartesian map T(X+Y) -> T(X) x T(Y).
  virtual Elem bc_inverse(const Elem& u, const Elem& v) const;
  /// Involution zeta : T => T.
  virtual Elem involution(const Elem& u) const;
};

using MonadPtr = std::shared_ptr<const Monad>;

/// M_S over a built-in semiring.
class MultisetMonad final : public Monad {
 public:
  explicit MultisetMonad(SemiringKind kind);

  const std::string& name() const override { return name_; }
  MonadFlags flags() const override { return {true, true, builtin_semiring(kind_)->has_star()}; }
  SemiringKind semiring_kind() const { return kind_; }

  bool is_value(const Elem& u) const override;
  std::vector<Elem> support(const Elem& u) const override;
  Elem fmap(const ElemFn& f, const Elem& u) const override;
  Elem unit(const Elem& x) const override;
  Elem mult(const Elem& uu) const override;
  Elem empty_value() const override;
  Elem bc_inverse(const Elem& u, const Elem& v) const override;
  Elem involution(const Elem& u) const override;

  const Multiset& value(const Elem& u) const;

 private:
  SemiringKind kind_;
  std::string name_;
};

/// The action monad A(M) = M x (-).
class ActionMonad final : public Monad {
 public:
  explicit ActionMonad(MonoidPtr<MonoidElem> monoid);

  const std::string& name() const override { return name_; }
  MonadFlags flags() const override { return {monoid_->commutative, false, false}; }
  const Monoid<MonoidElem>& monoid() const { return *monoid_; }
  const MonoidPtr<MonoidElem>& monoid_ptr() const { return monoid_; }

  bool is_value(const Elem& u) const override;
  std::vector<Elem> support(const Elem& u) const override;
  Elem fmap(const ElemFn& f, const Elem& u) const override;
  Elem unit(const Elem& x) const override;
  Elem mult(const Elem& uu) const override;

 private:
  MonoidPtr<MonoidElem> monoid_;
  std::string name_;
};

MonadPtr multiset_monad(SemiringKind kind);
MonadPtr action_monad(MonoidPtr<MonoidElem> monoid);

/// (unit_M, x) or (s*t, x) from (s, (t, x)).
Elem action_unit(const Monoid<MonoidElem>& M, const Elem& x);
Elem action_mult(const Monoid<MonoidElem>& M, const Elem& nested);

}  // namespace semicat
