#include "semicat/suite.hpp"

#include <algorithm>
#include <functional>
#include <future>

#include "semicat/adjunctions.hpp"
#include "semicat/biproduct.hpp"
#include "semicat/freetheory.hpp"
#include "semicat/gen.hpp"
#include "semicat/kleisli.hpp"
#include "semicat/multiset.hpp"

namespace semicat {

namespace {

using GroupFn = std::function<void(Rng&, std::size_t, SampledLaws&)>;

struct Group {
  std::string name;
  GroupFn run;
};

FiniteCarrier gen_carrier(Rng& rng, std::size_t min = 1) {
  return FiniteCarrier::range(static_cast<std::int64_t>(min + rng.below(6 - min)));
}

std::string show(std::initializer_list<std::pair<const char*, std::string>> parts) {
  std::string out;
  for (const auto& [k, v] : parts) out += (out.empty() ? "" : ", ") + std::string(k) + " = " + v;
  return out;
}

MonadPtr subject_monad(const SuiteConfig& c) {
  if (!c.monoid.empty()) return action_monad(builtin_monoid(c.monoid));
  return multiset_monad(semiring_kind(c.semiring.empty() ? "nat" : c.semiring));
}

SemiringKind subject_kind(const SuiteConfig& c) {
  return semiring_kind(c.semiring.empty() ? "nat" : c.semiring);
}

void require_additive(const Monad& T) {
  if (!T.flags().additive) throw Error(ErrorCode::NotAdditive, T.name() + " is not additive");
}

void require_commutative_additive(const Monad& T) {
  require_additive(T);
  if (!T.flags().commutative) throw Error(ErrorCode::NotCommutative, T.name() + " is not commutative");
}

// ---------------------------------------------------------------- monad laws

std::vector<Group> monad_law_groups(const MonadPtr& Tp) {
  const Monad& T = *Tp;
  const ElemFn eta = [&T](const Elem& e) { return T.unit(e); };
  const ElemFn mu = [&T](const Elem& e) { return T.mult(e); };
  std::vector<Group> g;
  g.push_back({"unit", [&T, eta](Rng& rng, std::size_t cases, SampledLaws& L) {
                 for (std::size_t c = 0; c < cases; ++c) {
                   const auto X = gen_carrier(rng);
                   const Elem u = gen_t_value(rng, T, X.elems());
                   L.check("left-unit", T.mult(T.unit(u)) == u, [&] { return "u = " + to_string(u); });
                   L.check("right-unit", T.mult(T.fmap(eta, u)) == u, [&] { return "u = " + to_string(u); });
                 }
               }});
  g.push_back({"associativity", [&T, mu](Rng& rng, std::size_t cases, SampledLaws& L) {
                 for (std::size_t c = 0; c < cases; ++c) {
                   const auto X = gen_carrier(rng);
                   std::vector<Elem> middle;
                   const std::size_t k = 1 + rng.below(3);
                   for (std::size_t n = 0; n < k; ++n) middle.push_back(gen_nested_t_value(rng, T, X.elems()));
                   const Elem uuu = gen_t_value(rng, T, middle);
                   L.check("associativity", T.mult(T.mult(uuu)) == T.mult(T.fmap(mu, uuu)),
                           [&] { return "uuu = " + to_string(uuu); });
                 }
               }});
  g.push_back({"functor", [&T](Rng& rng, std::size_t cases, SampledLaws& L) {
                 for (std::size_t c = 0; c < cases; ++c) {
                   const auto X = gen_carrier(rng), Y = gen_carrier(rng), Z = gen_carrier(rng);
                   const Elem u = gen_t_value(rng, T, X.elems());
                   const auto f = gen_finite_map(rng, X, Y);
                   const auto h = gen_finite_map(rng, Y, Z);
                   L.check("functor-identity", T.fmap([](const Elem& e) { return e; }, u) == u,
                           [&] { return "u = " + to_string(u); });
                   L.check("functor-composition", T.fmap(f.then(h).fn(), u) == T.fmap(h.fn(), T.fmap(f.fn(), u)),
                           [&] { return "u = " + to_string(u); });
                 }
               }});
  g.push_back({"naturality", [&T](Rng& rng, std::size_t cases, SampledLaws& L) {
                 for (std::size_t c = 0; c < cases; ++c) {
                   const auto X = gen_carrier(rng), Y = gen_carrier(rng);
                   const auto f = gen_finite_map(rng, X, Y);
                   const Elem x = rng.pick(X.elems());
                   const Elem uu = gen_nested_t_value(rng, T, X.elems());
                   const ElemFn tf = [&](const Elem& e) { return T.fmap(f.fn(), e); };
                   L.check("unit-natural", T.fmap(f.fn(), T.unit(x)) == T.unit(f(x)), [&] { return "x = " + to_string(x); });
                   L.check("mult-natural", T.fmap(f.fn(), T.mult(uu)) == T.mult(T.fmap(tf, uu)),
                           [&] { return "uu = " + to_string(uu); });
                 }
               }});
  g.push_back({"strength", [&T](Rng& rng, std::size_t cases, SampledLaws& L) {
                 for (std::size_t c = 0; c < cases; ++c) {
                   const auto X = gen_carrier(rng), Y = gen_carrier(rng), Z = gen_carrier(rng);
                   const Elem u = gen_t_value(rng, T, X.elems());
                   const Elem uu = gen_nested_t_value(rng, T, X.elems());
                   const Elem x = rng.pick(X.elems()), y = rng.pick(Y.elems()), z = rng.pick(Z.elems());
                   const auto f = gen_finite_map(rng, X, Z);
                   const auto h = gen_finite_map(rng, Y, X);
                   const auto cex = [&] { return show({{"u", to_string(u)}, {"y", to_string(y)}}); };
                   L.check("strength-unit", T.fmap([](const Elem& p) { return p.first(); }, strength(T, u, Elem::star())) == u,
                           cex);
                   const ElemFn fxh = [&](const Elem& p) { return Elem::pair(f(p.first()), h(p.second())); };
                   L.check("strength-natural", strength(T, T.fmap(f.fn(), u), h(y)) == T.fmap(fxh, strength(T, u, y)), cex);
                   L.check("strength-eta", strength(T, T.unit(x), y) == T.unit(Elem::pair(x, y)),
                           [&] { return show({{"x", to_string(x)}, {"y", to_string(y)}}); });
                   const ElemFn st = [&](const Elem& p) { return strength(T, p.first(), p.second()); };
                   L.check("strength-mult", strength(T, T.mult(uu), y) == T.mult(T.fmap(st, strength(T, uu, y))),
                           [&] { return show({{"uu", to_string(uu)}, {"y", to_string(y)}}); });
                   const ElemFn assoc = [](const Elem& p) {
                     return Elem::pair(p.first().first(), Elem::pair(p.first().second(), p.second()));
                   };
                   L.check("strength-assoc",
                           T.fmap(assoc, strength(T, strength(T, u, y), z)) == strength(T, u, Elem::pair(y, z)),
                           [&] { return show({{"u", to_string(u)}, {"y", to_string(y)}, {"z", to_string(z)}}); });
                 }
               }});
  if (T.flags().involutive) {
    g.push_back({"involution", [Tp, &T](Rng& rng, std::size_t cases, SampledLaws& L) {
                   const MonadMorphism zeta{"involution", Tp, Tp, [&T](const Elem& u) { return T.involution(u); }};
                   for (auto& r : check_monad_morphism(zeta, rng, cases).results)
                     L.check("involution-" + r.law, r.pass, [&] { return r.counterexample; });
                   for (std::size_t c = 0; c < cases; ++c) {
                     const auto X = gen_carrier(rng);
                     const Elem u = gen_t_value(rng, T, X.elems());
                     L.check("involution-involutive", T.involution(T.involution(u)) == u,
                             [&] { return "u = " + to_string(u); });
                   }
                 }});
  }
  return g;
}

// ---------------------------------------------------------------- additivity

Elem gen_over_sum(Rng& rng, const Monad& T, const FiniteCarrier& X, const FiniteCarrier& Y) {
  return gen_t_value(rng, T, FiniteCarrier::sum(X, Y).elems());
}

std::vector<Group> additivity_groups(const MonadPtr& Tp) {
  const Monad& T = *Tp;
  require_additive(T);
  std::vector<Group> g;
  g.push_back({"zero-object", [&T](Rng& rng, std::size_t cases, SampledLaws& L) {
                 const Elem z = T.empty_value();
                 L.check("zero-object", T.is_value(z) && T.support(z).empty(), [&] { return "T(0) value " + to_string(z); });
                 for (std::size_t c = 0; c < cases; ++c) {
                   const Elem other = gen_t_value(rng, T, {});
                   L.check("zero-object", other == z, [&] { return "two values of T(0): " + to_string(z) + ", " + to_string(other); });
                 }
               }});
  g.push_back({"bc-inverse", [&T](Rng& rng, std::size_t cases, SampledLaws& L) {
                 for (std::size_t c = 0; c < cases; ++c) {
                   const auto X = gen_carrier(rng, 0), Y = gen_carrier(rng, 0);
                   const Elem w = gen_over_sum(rng, T, X, Y);
                   const Elem a = gen_t_value(rng, T, X.elems()), b = gen_t_value(rng, T, Y.elems());
                   auto [p, q] = bc(T, w);
                   L.check("bc-inv-after-bc", bc_inv(T, p, q) == w, [&] { return "w = " + to_string(w); });
                   L.check("bc-after-bc-inv", bc(T, bc_inv(T, a, b)) == std::pair(a, b),
                           [&] { return show({{"u", to_string(a)}, {"v", to_string(b)}}); });
                 }
               }});
  g.push_back({"bc-natural", [Tp, &T](Rng& rng, std::size_t cases, SampledLaws& L) {
                 const auto* ms = dynamic_cast<const MultisetMonad*>(&T);
                 const auto homs = ms ? scalar_homs_from(ms->semiring_kind()) : std::vector<ScalarHom>{};
                 for (std::size_t c = 0; c < cases; ++c) {
                   const auto X = gen_carrier(rng, 0), Y = gen_carrier(rng, 0);
                   const auto U = gen_carrier(rng), V = gen_carrier(rng);
                   const Elem w = gen_over_sum(rng, T, X, Y);
                   const auto f = gen_finite_map(rng, X, U);
                   const auto h = gen_finite_map(rng, Y, V);
                   const ElemFn fh = [&](const Elem& e) {
                     return e.is(Elem::Kind::Inl) ? Elem::inl(f(e.inner())) : Elem::inr(h(e.inner()));
                   };
                   auto [a, b] = bc(T, w);
                   L.check("bc-natural", bc(T, T.fmap(fh, w)) == std::pair(T.fmap(f.fn(), a), T.fmap(h.fn(), b)),
                           [&] { return "w = " + to_string(w); });
                   if (ms) {
                     const auto& hom = rng.pick(homs);
                     const auto sigma = [&](const Elem& e) {
                       return Elem::ms(ms_change_semiring(e.as_ms(), hom.target, hom.fn));
                     };
                     const auto R = multiset_monad(hom.target);
                     L.check("bc-monad-map", bc(*R, sigma(w)) == std::pair(sigma(a), sigma(b)),
                             [&] { return show({{"w", to_string(w)}, {"map", hom.name}}); });
                   }
                 }
               }});
  g.push_back({"bc-monoidal", [&T](Rng& rng, std::size_t cases, SampledLaws& L) {
                 const ElemFn swap = [](const Elem& e) {
                   return e.is(Elem::Kind::Inl) ? Elem::inr(e.inner()) : Elem::inl(e.inner());
                 };
                 const ElemFn assoc = [](const Elem& e) {
                   if (e.is(Elem::Kind::Inr)) return Elem::inr(Elem::inr(e.inner()));
                   const Elem& i = e.inner();
                   return i.is(Elem::Kind::Inl) ? Elem::inl(i.inner()) : Elem::inr(Elem::inl(i.inner()));
                 };
                 for (std::size_t c = 0; c < cases; ++c) {
                   const auto X = gen_carrier(rng, 0), Y = gen_carrier(rng, 0), Z = gen_carrier(rng, 0);
                   const Elem w0 = gen_over_sum(rng, T, X, FiniteCarrier{});
                   auto [a0, z0] = bc(T, w0);
                   L.check("bc-right-unit",
                           a0 == T.fmap([](const Elem& e) { return e.inner(); }, w0) && z0 == T.empty_value(),
                           [&] { return "w = " + to_string(w0); });
                   const Elem w = gen_over_sum(rng, T, X, Y);
                   auto [a, b] = bc(T, w);
                   L.check("bc-swap", bc(T, T.fmap(swap, w)) == std::pair(b, a), [&] { return "w = " + to_string(w); });
                   const Elem w3 = gen_t_value(rng, T, FiniteCarrier::sum(FiniteCarrier::sum(X, Y), Z).elems());
                   auto [xy, z] = bc(T, w3);
                   auto [x, y] = bc(T, xy);
                   auto [x2, yz] = bc(T, T.fmap(assoc, w3));
                   auto [y2, z2] = bc(T, yz);
                   L.check("bc-assoc", x == x2 && y == y2 && z == z2, [&] { return "w = " + to_string(w3); });
                 }
               }});
  g.push_back({"bc-eta-mu", [&T](Rng& rng, std::size_t cases, SampledLaws& L) {
                 for (std::size_t c = 0; c < cases; ++c) {
                   const auto X = gen_carrier(rng), Y = gen_carrier(rng);
                   const Elem x = rng.pick(X.elems()), y = rng.pick(Y.elems());
                   L.check("bc-eta",
                           bc(T, T.unit(Elem::inl(x))) == std::pair(T.unit(x), tx_zero(T)) &&
                               bc(T, T.unit(Elem::inr(y))) == std::pair(tx_zero(T), T.unit(y)),
                           [&] { return show({{"x", to_string(x)}, {"y", to_string(y)}}); });

                   const Elem ww = gen_nested_t_value(rng, T, FiniteCarrier::sum(X, Y).elems());
                   auto [a, b] = bc(T, T.mult(ww));
                   const Elem pairs = T.fmap([&T](const Elem& u) { auto p = bc(T, u); return Elem::pair(p.first, p.second); }, ww);
                   const Elem a2 = T.mult(T.fmap([](const Elem& p) { return p.first(); }, pairs));
                   const Elem b2 = T.mult(T.fmap([](const Elem& p) { return p.second(); }, pairs));
                   L.check("bc-mult", a == a2 && b == b2, [&] { return "ww = " + to_string(ww); });

                   std::vector<Elem> inner;
                   for (std::size_t k = 0; k < 1 + rng.below(2); ++k) inner.push_back(Elem::inl(gen_t_value(rng, T, X.elems())));
                   for (std::size_t k = 0; k < 1 + rng.below(2); ++k) inner.push_back(Elem::inr(gen_t_value(rng, T, Y.elems())));
                   const Elem vv = gen_t_value(rng, T, inner);
                   auto [uu, ww2] = bc(T, vv);
                   const ElemFn cot = [&T](const Elem& e) {
                     const ElemFn tag = e.is(Elem::Kind::Inl) ? ElemFn([](const Elem& x) { return Elem::inl(x); })
                                                              : ElemFn([](const Elem& x) { return Elem::inr(x); });
                     return T.fmap(tag, e.inner());
                   };
                   L.check("bc-mult-cotuple", bc(T, T.mult(T.fmap(cot, vv))) == std::pair(T.mult(uu), T.mult(ww2)),
                           [&] { return "vv = " + to_string(vv); });
                 }
               }});
  g.push_back({"bc-strength", [&T](Rng& rng, std::size_t cases, SampledLaws& L) {
                 const ElemFn dist = [](const Elem& p) {
                   const Elem& s = p.first();
                   const Elem q = Elem::pair(s.inner(), p.second());
                   return s.is(Elem::Kind::Inl) ? Elem::inl(q) : Elem::inr(q);
                 };
                 for (std::size_t c = 0; c < cases; ++c) {
                   const auto X = gen_carrier(rng, 0), Y = gen_carrier(rng, 0), Z = gen_carrier(rng);
                   const Elem w = gen_over_sum(rng, T, X, Y);
                   const Elem z = rng.pick(Z.elems());
                   auto [a, b] = bc(T, w);
                   L.check("bc-strength", bc(T, T.fmap(dist, strength(T, w, z))) == std::pair(strength(T, a, z), strength(T, b, z)),
                           [&] { return show({{"w", to_string(w)}, {"z", to_string(z)}}); });
                 }
               }});
  return g;
}

// ------------------------------------------------------------- commutativity

std::vector<Group> commutativity_groups(const MonadPtr& Tp) {
  const Monad& T = *Tp;
  std::vector<Group> g;
  if (!T.flags().commutative) {
    g.push_back({"composites", [&T](Rng& rng, std::size_t cases, SampledLaws& L) {
                   std::string found;
                   for (std::size_t c = 0; c < cases && found.empty(); ++c) {
                     const auto X = gen_carrier(rng), Y = gen_carrier(rng);
                     const Elem u = gen_t_value(rng, T, X.elems()), v = gen_t_value(rng, T, Y.elems());
                     auto w = commutativity_witness(T, u, v);
                     if (!w.equal)
                       found = "counterexample: " + show({{"u", to_string(u)}, {"v", to_string(v)}}) +
                               "\nfirst composite:  " + to_string(w.left) + "\nsecond composite: " + to_string(w.right);
                   }
                   L.check("composites-agree (expected-fail)", !found.empty(),
                           [] { return std::string("no counterexample found"); });
                   if (!found.empty()) L.note("composites-agree (expected-fail)", found);
                 }});
    return g;
  }
  g.push_back({"composites", [&T](Rng& rng, std::size_t cases, SampledLaws& L) {
                 for (std::size_t c = 0; c < cases; ++c) {
                   const auto X = gen_carrier(rng), Y = gen_carrier(rng);
                   const Elem u = gen_t_value(rng, T, X.elems()), v = gen_t_value(rng, T, Y.elems());
                   const Elem x = rng.pick(X.elems()), y = rng.pick(Y.elems());
                   const auto cex = [&] { return show({{"u", to_string(u)}, {"v", to_string(v)}}); };
                   L.check("composites-agree", composite_left(T, u, v) == composite_right(T, u, v), cex);
                   L.check("dst-unit", double_strength(T, T.unit(x), T.unit(y)) == T.unit(Elem::pair(x, y)),
                           [&] { return show({{"x", to_string(x)}, {"y", to_string(y)}}); });
                   const ElemFn swap = [](const Elem& p) { return Elem::pair(p.second(), p.first()); };
                   L.check("dst-symmetric", T.fmap(swap, double_strength(T, u, v)) == double_strength(T, v, u), cex);
                 }
               }});
  return g;
}

// ------------------------------------------------------- T(1) and modules

std::vector<Group> eval_at_one_groups(const MonadPtr& Tp) {
  const auto* ms = dynamic_cast<const MultisetMonad*>(Tp.get());
  require_commutative_additive(*Tp);
  if (!ms) throw Error(ErrorCode::InvalidValue, "eval-at-one compares against a built-in semiring");
  const SemiringKind kind = ms->semiring_kind();
  std::vector<Group> g;
  g.push_back({"iso", [Tp, kind](Rng&, std::size_t, SampledLaws& L) {
                 const auto S = builtin_semiring(kind);
                 const auto E = eval_at_one(Tp);
                 const auto pool = scalar_pool(kind);
                 const auto phi = [kind](const Scalar& s) { return scalar_to_t1(kind, s); };
                 L.check("iso-zero", E->zero == phi(S->zero), [&] { return to_string(E->zero); });
                 L.check("iso-one", E->one == phi(S->one), [&] { return to_string(E->one); });
                 for (const auto& s : pool) {
                   L.check("iso-bijective", t1_to_scalar(phi(s), kind) == s, [&] { return "s = " + to_string(s); });
                   if (S->has_star())
                     L.check("iso-star", E->apply_star(phi(s)) == phi(S->apply_star(s)), [&] { return "s = " + to_string(s); });
                   for (const auto& t : pool) {
                     const auto cex = [&] { return show({{"s", to_string(s)}, {"t", to_string(t)}}); };
                     L.check("iso-add", E->add(phi(s), phi(t)) == phi(S->add(s, t)), cex);
                     L.check("iso-mul", E->mul(phi(s), phi(t)) == phi(S->mul(s, t)), cex);
                   }
                 }
                 std::vector<Elem> images;
                 for (const auto& s : pool) images.push_back(phi(s));
                 for (auto& r : check_semiring_laws(*E, std::span<const Elem>(images)).results)
                   L.check("E(T) " + r.law, r.pass, [&] { return r.counterexample; });
               }});
  return g;
}

std::vector<Group> module_groups(const MonadPtr& Tp) {
  const Monad& T = *Tp;
  require_commutative_additive(T);
  std::vector<Group> g;
  g.push_back({"action", [&T](Rng& rng, std::size_t cases, SampledLaws& L) {
                 const std::vector<Elem> one{Elem::star()};
                 for (std::size_t c = 0; c < cases; ++c) {
                   const auto X = gen_carrier(rng);
                   const Elem s = gen_t_value(rng, T, one), t = gen_t_value(rng, T, one);
                   const Elem u = gen_t_value(rng, T, X.elems()), v = gen_t_value(rng, T, X.elems());
                   const Elem w = gen_t_value(rng, T, X.elems());
                   const auto cex = [&] {
                     return show({{"s", to_string(s)}, {"t", to_string(t)}, {"u", to_string(u)}, {"v", to_string(v)}});
                   };
                   const Elem zero = tx_zero(T);
                   L.check("action-assoc", scalar_action(T, t1_mul(T, s, t), u) == scalar_action(T, s, scalar_action(T, t, u)), cex);
                   L.check("action-unit", scalar_action(T, T.unit(Elem::star()), u) == u, cex);
                   L.check("action-add-vector",
                           scalar_action(T, s, tx_add(T, u, v)) == tx_add(T, scalar_action(T, s, u), scalar_action(T, s, v)), cex);
                   L.check("action-add-scalar",
                           scalar_action(T, t1_add(T, s, t), u) == tx_add(T, scalar_action(T, s, u), scalar_action(T, t, u)), cex);
                   L.check("action-zero-scalar", scalar_action(T, zero, u) == zero, cex);
                   L.check("action-zero-vector", scalar_action(T, s, zero) == zero, cex);
                   L.check("add-commutative", tx_add(T, u, v) == tx_add(T, v, u), cex);
                   L.check("add-associative", tx_add(T, tx_add(T, u, v), w) == tx_add(T, u, tx_add(T, v, w)), cex);
                   L.check("add-unit", tx_add(T, u, zero) == u, cex);
                   const auto Y = gen_carrier(rng);
                   const auto f = gen_finite_map(rng, X, Y);
                   L.check("fmap-additive",
                           T.fmap(f.fn(), tx_add(T, u, v)) == tx_add(T, T.fmap(f.fn(), u), T.fmap(f.fn(), v)) &&
                               T.fmap(f.fn(), zero) == zero,
                           cex);
                   const Elem uu = gen_nested_t_value(rng, T, X.elems()), vv = gen_nested_t_value(rng, T, X.elems());
                   L.check("mult-additive", T.mult(tx_add(T, uu, vv)) == tx_add(T, T.mult(uu), T.mult(vv)) && T.mult(zero) == zero,
                           [&] { return show({{"U", to_string(uu)}, {"V", to_string(vv)}}); });
                 }
               }});
  return g;
}

// ------------------------------------------------------------------ Mat(S)

std::vector<Group> matcat_groups(SemiringKind kind) {
  std::vector<Group> g;
  const auto S = builtin_semiring(kind);
  const MatTheory<Scalar> L0(S);
  g.push_back({"category", [kind, L0](Rng& rng, std::size_t cases, SampledLaws& L) {
                 for (std::size_t c = 0; c < cases; ++c) {
                   const std::size_t n = rng.below(5), m = rng.below(5), p = rng.below(5), q = rng.below(5);
                   const auto f = gen_matrix(rng, kind, n, m), h = gen_matrix(rng, kind, m, p), k = gen_matrix(rng, kind, p, q);
                   const auto cex = [&] { return show({{"f", to_string(f)}, {"g", to_string(h)}, {"h", to_string(k)}}); };
                   L.check("compose-assoc", mat_compose(mat_compose(f, h), k) == mat_compose(f, mat_compose(h, k)), cex);
                   L.check("compose-identity", mat_compose(L0.identity(n), f) == f && mat_compose(f, L0.identity(m)) == f, cex);
                 }
               }});
  g.push_back({"biproduct", [kind, L0](Rng& rng, std::size_t cases, SampledLaws& L) {
                 for (std::size_t c = 0; c < cases; ++c) {
                   const std::size_t n = rng.below(4), m = rng.below(4), p = rng.below(4);
                   const auto f = gen_matrix(rng, kind, p, n), h = gen_matrix(rng, kind, p, m);
                   const auto a = gen_matrix(rng, kind, n, p), b = gen_matrix(rng, kind, m, p);
                   const auto dims = [&] { return show({{"n", std::to_string(n)}, {"m", std::to_string(m)}}); };
                   const auto k1 = L0.coproj1(n, m), k2 = L0.coproj2(n, m), p1 = L0.proj1(n, m), p2 = L0.proj2(n, m);
                   L.check("proj-coproj-delta",
                           L0.compose(k1, p1) == L0.identity(n) && L0.compose(k2, p2) == L0.identity(m) &&
                               L0.compose(k1, p2) == L0.zero(n, m) && L0.compose(k2, p1) == L0.zero(m, n),
                           dims);
                   L.check("biproduct-sum", hom_add(L0, L0.compose(p1, k1), L0.compose(p2, k2)) == L0.identity(n + m), dims);
                   const auto cex = [&] { return show({{"f", to_string(f)}, {"g", to_string(h)}}); };
                   const auto t = L0.tuple(f, h);
                   L.check("tuple-universal", L0.compose(t, p1) == f && L0.compose(t, p2) == h, cex);
                   const auto ct = L0.cotuple(a, b);
                   L.check("cotuple-universal", L0.compose(k1, ct) == a && L0.compose(k2, ct) == b,
                           [&] { return show({{"f", to_string(a)}, {"g", to_string(b)}}); });
                   L.check("zero-absorbing", L0.compose(f, L0.zero(n, m)) == L0.zero(p, m) && hom_add(L0, f, L0.zero(p, n)) == f, cex);
                   const auto into_sum = gen_matrix(rng, kind, p, n + m);
                   L.check("tuple-of-projections",
                           L0.tuple(L0.compose(into_sum, p1), L0.compose(into_sum, p2)) == into_sum,
                           [&] { return "f = " + to_string(into_sum); });
                   const auto out_of_sum = gen_matrix(rng, kind, n + m, p);
                   L.check("cotuple-of-coprojections",
                           L0.cotuple(L0.compose(k1, out_of_sum), L0.compose(k2, out_of_sum)) == out_of_sum,
                           [&] { return "f = " + to_string(out_of_sum); });
                   const auto a0 = gen_aleph0_map(rng, n, m + 1), a1 = gen_aleph0_map(rng, m + 1, p + 1);
                   L.check("embed-functorial", L0.embed(a0.then(a1)) == L0.compose(L0.embed(a0), L0.embed(a1)), dims);
                 }
               }});
  g.push_back({"tensor", [kind, L0](Rng& rng, std::size_t cases, SampledLaws& L) {
                 for (std::size_t c = 0; c < cases; ++c) {
                   const std::size_t n = 1 + rng.below(3), m = 1 + rng.below(3), p = rng.below(3);
                   const std::size_t n2 = 1 + rng.below(2), m2 = 1 + rng.below(2), p2 = rng.below(3);
                   const auto f = gen_matrix(rng, kind, n, m), h = gen_matrix(rng, kind, m, p);
                   const auto f2 = gen_matrix(rng, kind, n2, m2), h2 = gen_matrix(rng, kind, m2, p2);
                   const auto cex = [&] {
                     return show({{"f", to_string(f)}, {"g", to_string(h)}, {"f'", to_string(f2)}, {"g'", to_string(h2)}});
                   };
                   L.check("tensor-functorial",
                           mat_tensor(mat_compose(f, h), mat_compose(f2, h2)) == mat_compose(mat_tensor(f, f2), mat_tensor(h, h2)),
                           cex);
                   L.check("tensor-identity", mat_tensor(L0.identity(n), L0.identity(m)) == L0.identity(n * m), cex);
                   L.check("tensor-assoc", mat_tensor(mat_tensor(f, f2), h) == mat_tensor(f, mat_tensor(f2, h)), cex);
                   const auto sym_dom = L0.embed(Aleph0Map::symmetry(n, n2));
                   const auto sym_cod = L0.embed(Aleph0Map::symmetry(m, m2));
                   L.check("symmetry-natural",
                           mat_compose(mat_tensor(f, f2), sym_cod) == mat_compose(sym_dom, mat_tensor(f2, f)), cex);
                   L.check("symmetry-involutive",
                           mat_compose(sym_dom, L0.embed(Aleph0Map::symmetry(n2, n))) == L0.identity(n * n2), cex);
                   // distributivity f (x) (g + g') = f (x) g + f (x) g'
                   const auto g1 = gen_matrix(rng, kind, m2, p2), g2 = gen_matrix(rng, kind, m2, p2);
                   L.check("tensor-distributes-over-add",
                           mat_tensor(f, hom_add(L0, g1, g2)) == hom_add(L0, mat_tensor(f, g1), mat_tensor(f, g2)), cex);
                   L.check("tensor-zero", mat_tensor(f, L0.zero(m2, p2)) == L0.zero(n * m2, m * p2), cex);
                   L.check("tensor-unit",
                           mat_tensor(f, L0.identity(1)) == f && mat_tensor(L0.identity(1), f) == f, cex);
                   // [id (x) k1, id (x) k2] : n(x)a + n(x)b -> n(x)(a+b) has inverse <id (x) p1, id (x) p2>
                   {
                     const std::size_t a = m2, b = p2;
                     const auto id = L0.identity(n);
                     const auto fwd = L0.cotuple(mat_tensor(id, L0.coproj1(a, b)), mat_tensor(id, L0.coproj2(a, b)));
                     const auto bwd = L0.tuple(mat_tensor(id, L0.proj1(a, b)), mat_tensor(id, L0.proj2(a, b)));
                     L.check("distributivity-invertible",
                             L0.compose(fwd, bwd) == L0.identity(n * a + n * b) && L0.compose(bwd, fwd) == L0.identity(n * (a + b)),
                             [&] { return show({{"n", std::to_string(n)}, {"a", std::to_string(a)}, {"b", std::to_string(b)}}); });
                   }
                   // n (x) (a + b) is n(x)a + n(x)b up to a reindexing permutation
                   const auto redist = [](std::size_t k, std::size_t a, std::size_t b) {
                     std::vector<std::size_t> t;
                     for (std::size_t r = 0; r < k * (a + b); ++r) {
                       auto [i, j] = coord_split(k, a + b, r);
                       t.push_back(j < a ? coord_join(k, a, i, j) : k * a + coord_join(k, b, i, j - a));
                     }
                     return Aleph0Map(k * (a + b), k * a + k * b, std::move(t));
                   };
                   const auto fa = gen_matrix(rng, kind, n2, m2);
                   const auto lhs = mat_compose(mat_tensor(f, direct_sum(L0, fa, h2)), L0.embed(redist(m, m2, p2)));
                   const auto rhs = mat_compose(L0.embed(redist(n, n2, m2)), direct_sum(L0, mat_tensor(f, fa), mat_tensor(f, h2)));
                   L.check("tensor-distributes-over-sum", lhs == rhs, cex);
                 }
               }});
  return g;
}

// ------------------------------------------------------------------ dagger

std::vector<Group> dagger_groups(SemiringKind kind) {
  const auto S = builtin_semiring(kind);
  if (!S->has_star()) throw Error(ErrorCode::NoInvolution, S->name + " has no involution");
  const MatTheory<Scalar> L0(S);
  std::vector<Group> g;
  g.push_back({"dagger", [kind, L0](Rng& rng, std::size_t cases, SampledLaws& L) {
                 for (std::size_t c = 0; c < cases; ++c) {
                   const bool square = c % 2 == 0;
                   const std::size_t n = square ? 3 : 1 + rng.below(4), m = square ? 3 : 1 + rng.below(4),
                                     p = square ? 3 : 1 + rng.below(4);
                   const auto f = gen_matrix(rng, kind, n, m), h = gen_matrix(rng, kind, m, p);
                   const auto f2 = gen_matrix(rng, kind, n, m);
                   const auto cex = [&] { return show({{"f", to_string(f)}, {"g", to_string(h)}}); };
                   L.check("dagger-involutive", mat_dagger(mat_dagger(f)) == f, cex);
                   L.check("dagger-contravariant", mat_dagger(mat_compose(f, h)) == mat_compose(mat_dagger(h), mat_dagger(f)), cex);
                   L.check("dagger-identity", mat_dagger(L0.identity(n)) == L0.identity(n), cex);
                   L.check("dagger-tensor", mat_dagger(mat_tensor(f, h)) == mat_tensor(mat_dagger(f), mat_dagger(h)), cex);
                   L.check("dagger-coprojections",
                           L0.coproj1(n, m) == mat_dagger(L0.proj1(n, m)) && L0.coproj2(n, m) == mat_dagger(L0.proj2(n, m)), cex);
                   L.check("dagger-additive",
                           mat_dagger(hom_add(L0, f, f2)) == hom_add(L0, mat_dagger(f), mat_dagger(f2)), cex);
                 }
               }});
  return g;
}

// ------------------------------------------------------------- free theory

FreeTerm gen_term(Rng& rng, SemiringKind kind, const std::vector<Elem>& carrier, std::size_t max_arity = 4) {
  const std::size_t i = rng.below(max_arity + 1);
  std::vector<Elem> v;
  for (std::size_t a = 0; a < i; ++a) v.push_back(rng.pick(carrier));
  return FreeTerm{gen_matrix(rng, kind, 1, i), std::move(v)};
}

std::vector<Group> freetheory_groups(SemiringKind kind) {
  std::vector<Group> g;
  g.push_back({"relation", [kind](Rng& rng, std::size_t cases, SampledLaws& L) {
                 for (std::size_t c = 0; c < cases; ++c) {
                   const std::size_t i = rng.below(5), m = 1 + rng.below(4);
                   const auto X = gen_carrier(rng);
                   const auto f = gen_aleph0_map(rng, i, m);
                   const auto row = gen_matrix(rng, kind, 1, i);
                   std::vector<Elem> v;
                   for (std::size_t a = 0; a < m; ++a) v.push_back(rng.pick(X.elems()));
                   L.check("relation-sound", tl_relation_check(f, row, v), [&] {
                     std::string t;
                     for (auto k : f.table()) t += std::to_string(k) + " ";
                     return show({{"f", t}, {"g", to_string(row)}});
                   });
                 }
               }});
  g.push_back({"monad-agreement", [kind](Rng& rng, std::size_t cases, SampledLaws& L) {
                 const auto S = builtin_semiring(kind);
                 for (std::size_t c = 0; c < cases; ++c) {
                   const auto X = gen_carrier(rng), Y = gen_carrier(rng);
                   const Elem x = rng.pick(X.elems());
                   L.check("unit-agreement", term_normalize(tl_unit(kind, x)) == ms_unit(x, kind),
                           [&] { return "x = " + to_string(x); });
                   const std::size_t i = rng.below(4);
                   std::vector<FreeTerm> inner;
                   for (std::size_t a = 0; a < i; ++a) inner.push_back(gen_term(rng, kind, X.elems(), 3));
                   const NestedFreeTerm outer{gen_matrix(rng, kind, 1, i), inner};
                   MultisetBuilder nested(kind);
                   for (std::size_t a = 0; a < i; ++a) nested.add(Elem::ms(term_normalize(inner[a])), outer.g(0, a));
                   L.check("mult-agreement", term_normalize(tl_mult(outer)) == ms_mult(std::move(nested).build()),
                           [&] { return "outer = " + to_string(outer); });
                   const auto t = gen_term(rng, kind, X.elems());
                   const auto h = gen_finite_map(rng, X, Y);
                   L.check("fmap-agreement", term_normalize(tl_fmap(h.fn(), t)) == ms_fmap(h, term_normalize(t)),
                           [&] { return "t = " + to_string(t); });
                   if (S->has_star()) {
                     L.check("involution-agreement", term_normalize(tl_involution(t)) == ms_involution(term_normalize(t)),
                             [&] { return "t = " + to_string(t); });
                     L.check("involution-involutive", term_normalize(tl_involution(tl_involution(t))) == term_normalize(t),
                             [&] { return "t = " + to_string(t); });
                   }
                 }
               }});
  g.push_back({"law-unit-functor", [kind](Rng& rng, std::size_t cases, SampledLaws& L) {
                 const auto S = builtin_semiring(kind);
                 const KleisliCategory K(multiset_monad(kind));
                 for (std::size_t c = 0; c < cases; ++c) {
                   const std::size_t n = rng.below(4), m = rng.below(4), p = rng.below(4);
                   const auto f = gen_matrix(rng, kind, n, m), h = gen_matrix(rng, kind, m, p);
                   const auto cex = [&] { return show({{"f", to_string(f)}, {"g", to_string(h)}}); };
                   L.check("functor-composition",
                           law_unit_functor(mat_compose(f, h)) == K.compose(law_unit_functor(f), law_unit_functor(h)), cex);
                   L.check("functor-identity", law_unit_functor(mat_identity(S, n)) == K.identity(n), cex);
                   L.check("functor-coprojections",
                           law_unit_functor(mat_coproj1(S, n, m)) == K.coproj1(n, m) &&
                               law_unit_functor(mat_coproj2(S, n, m)) == K.coproj2(n, m),
                           cex);
                 }
               }});
  return g;
}

// ----------------------------------------------------------------- Kleisli

Matrix<Elem> gen_e_matrix(Rng& rng, SemiringKind kind, const SemiringPtr<Elem>& E, std::size_t n, std::size_t m) {
  return from_scalar_matrix(gen_matrix(rng, kind, n, m), E);
}

std::vector<Group> kleisli_groups(const MonadPtr& T) {
  require_commutative_additive(*T);
  const auto* ms = dynamic_cast<const MultisetMonad*>(T.get());
  if (!ms) throw Error(ErrorCode::InvalidValue, "kleisli-iso samples matrices over a built-in semiring");
  const SemiringKind kind = ms->semiring_kind();
  static_assert(BiproductCategory<KleisliCategory>);
  const KleisliCategory K(T);
  std::vector<Group> g;
  g.push_back({"category", [T, K](Rng& rng, std::size_t cases, SampledLaws& L) {
                 for (std::size_t c = 0; c < cases; ++c) {
                   const std::size_t n = rng.below(4), m = rng.below(4), p = rng.below(4), q = rng.below(4);
                   const auto f = gen_kleisli(rng, T, n, m), h = gen_kleisli(rng, T, m, p), k = gen_kleisli(rng, T, p, q);
                   const auto cex = [&] { return show({{"f", to_string(f)}, {"g", to_string(h)}, {"h", to_string(k)}}); };
                   L.check("kleisli-assoc", K.compose(K.compose(f, h), k) == K.compose(f, K.compose(h, k)), cex);
                   L.check("kleisli-identity", K.compose(K.identity(n), f) == f && K.compose(f, K.identity(m)) == f, cex);
                 }
               }});
  g.push_back({"biproduct", [T, K](Rng& rng, std::size_t cases, SampledLaws& L) {
                 for (std::size_t c = 0; c < cases; ++c) {
                   const std::size_t n = rng.below(4), m = rng.below(4), p = rng.below(4);
                   const auto f = gen_kleisli(rng, T, p, n), h = gen_kleisli(rng, T, p, m);
                   const auto a = gen_kleisli(rng, T, n, p), b = gen_kleisli(rng, T, m, p);
                   const auto dims = [&] { return show({{"n", std::to_string(n)}, {"m", std::to_string(m)}}); };
                   const auto k1 = K.coproj1(n, m), k2 = K.coproj2(n, m), p1 = K.proj1(n, m), p2 = K.proj2(n, m);
                   L.check("proj-coproj-delta",
                           K.compose(k1, p1) == K.identity(n) && K.compose(k2, p2) == K.identity(m) &&
                               K.compose(k1, p2) == K.zero(n, m) && K.compose(k2, p1) == K.zero(m, n),
                           dims);
                   L.check("biproduct-sum", hom_add(K, K.compose(p1, k1), K.compose(p2, k2)) == K.identity(n + m), dims);
                   const auto t = K.tuple(f, h);
                   L.check("tuple-universal", K.compose(t, p1) == f && K.compose(t, p2) == h,
                           [&] { return show({{"f", to_string(f)}, {"g", to_string(h)}}); });
                   const auto ct = K.cotuple(a, b);
                   L.check("cotuple-universal", K.compose(k1, ct) == a && K.compose(k2, ct) == b,
                           [&] { return show({{"f", to_string(a)}, {"g", to_string(b)}}); });
                 }
               }});
  g.push_back({"iso", [T, K, kind](Rng& rng, std::size_t cases, SampledLaws& L) {
                 const auto E = eval_at_one(T);
                 const MatTheory<Elem> ME(E);
                 for (std::size_t c = 0; c < cases; ++c) {
                   const std::size_t n = rng.below(4), m = rng.below(4), p = rng.below(4);
                   const auto hm = gen_e_matrix(rng, kind, E, n, m);
                   const auto f = gen_kleisli(rng, T, n, m), h = gen_kleisli(rng, T, m, p);
                   const auto f2 = gen_kleisli(rng, T, 1 + rng.below(2), 1 + rng.below(2));
                   const auto cex = [&] { return show({{"f", to_string(f)}, {"g", to_string(h)}}); };
                   L.check("theta-after-xi", theta(xi(T, hm)) == hm, [&] { return "h = " + to_string(hm); });
                   L.check("xi-after-theta", xi(T, theta(f)) == f, cex);
                   L.check("theta-composition", theta(K.compose(f, h)) == mat_compose(theta(f), theta(h)), cex);
                   L.check("theta-identity", theta(K.identity(n)) == ME.identity(n), cex);
                   L.check("theta-biproduct",
                           theta(K.coproj1(n, m)) == ME.coproj1(n, m) && theta(K.coproj2(n, m)) == ME.coproj2(n, m) &&
                               theta(K.proj1(n, m)) == ME.proj1(n, m) && theta(K.proj2(n, m)) == ME.proj2(n, m) &&
                               theta(K.zero(n, m)) == ME.zero(n, m),
                           cex);
                   const auto f3 = gen_kleisli(rng, T, n, p);
                   L.check("theta-tuple", theta(K.tuple(f3, gen_kleisli(rng, T, n, 0))) == mat_tuple(theta(f3), ME.zero(n, 0)) &&
                                              theta(K.tuple(f, f3)) == mat_tuple(theta(f), theta(f3)),
                           cex);
                   L.check("theta-tensor", theta(K.tensor(f, f2)) == mat_tensor(theta(f), theta(f2)), cex);
                   if (K.has_dagger()) L.check("theta-dagger", theta(K.dagger(f)) == mat_dagger(theta(f)), cex);
                   const auto s = gen_matrix(rng, kind, n, m);
                   L.check("theta-matches-mat", to_scalar_matrix(theta(law_unit_functor(s)), kind) == s,
                           [&] { return "h = " + to_string(s); });
                 }
               }});
  g.push_back({"homset", [T, K, kind](Rng&, std::size_t, SampledLaws& L) {
                 const auto E = eval_at_one(T);
                 const auto H = homset_semiring(K);
                 const auto as_map = [&](const Scalar& s) { return xi(T, Matrix<Elem>(E, 1, 1, {scalar_to_t1(kind, s)})); };
                 const auto pool = scalar_pool(kind);
                 L.check("homset-zero", H->zero == as_map(builtin_semiring(kind)->zero), [] { return std::string(); });
                 L.check("homset-one", H->one == as_map(builtin_semiring(kind)->one), [] { return std::string(); });
                 for (const auto& s : pool)
                   for (const auto& t : pool) {
                     const auto cex = [&] { return show({{"s", to_string(s)}, {"t", to_string(t)}}); };
                     const auto S = builtin_semiring(kind);
                     L.check("homset-add", H->add(as_map(s), as_map(t)) == as_map(S->add(s, t)), cex);
                     L.check("homset-mul", H->mul(as_map(s), as_map(t)) == as_map(S->mul(s, t)), cex);
                   }
               }});
  return g;
}

// ----------------------------------------------------------- round trips

std::vector<Group> roundtrip_groups(const SuiteConfig& c) {
  const std::string sem = c.semiring.empty() ? "nat" : c.semiring;
  const std::string monoid = c.monoid;
  std::vector<Group> g;
  for (const char* adj : {"mon-e", "srng-e", "mat-h"}) {
    g.push_back({adj, [adj, sem, monoid](Rng& rng, std::size_t cases, SampledLaws& L) {
                   const auto r = run_roundtrip(adj, sem, true, rng.next(), cases, monoid);
                   for (const auto& l : r.results)
                     L.check(std::string(adj) + " " + l.law, l.pass, [&] { return l.counterexample; });
                 }});
  }
  return g;
}

// ------------------------------------------------------- exhaustive checks

std::vector<Group> semiring_law_groups(SemiringKind kind) {
  std::vector<Group> g;
  g.push_back({"semiring", [kind](Rng&, std::size_t, SampledLaws& L) {
                 const auto S = builtin_semiring(kind);
                 const auto pool = scalar_pool(kind);
                 for (auto& r : check_semiring_laws(*S, std::span<const Scalar>(pool)).results)
                   L.check(r.law, r.pass, [&] { return r.counterexample; });
               }});
  g.push_back({"monoids", [](Rng&, std::size_t, SampledLaws& L) {
                 for (const auto& name : builtin_monoid_names()) {
                   const auto M = builtin_monoid(name);
                   const auto pool = monoid_pool(*M);
                   for (auto& r : check_monoid_laws(*M, std::span<const MonoidElem>(pool)).results)
                     L.check(name + " " + r.law, r.pass, [&] { return r.counterexample; });
                 }
               }});
  return g;
}

std::vector<Group> homset_groups(SemiringKind kind) {
  std::vector<Group> g;
  g.push_back({"homset", [kind](Rng&, std::size_t, SampledLaws& L) {
                 const auto S = builtin_semiring(kind);
                 const MatTheory<Scalar> M(S);
                 const auto H = homset_semiring(M);
                 const auto box = [&](const Scalar& s) { return ScalarMatrix(S, 1, 1, {s}); };
                 const auto pool = scalar_pool(kind);
                 L.check("iso-zero", H->zero == box(S->zero), [&] { return to_string(H->zero); });
                 L.check("iso-one", H->one == box(S->one), [&] { return to_string(H->one); });
                 std::vector<ScalarMatrix> images;
                 for (const auto& s : pool) {
                   images.push_back(box(s));
                   L.check("iso-bijective", box(s)(0, 0) == s, [&] { return "s = " + to_string(s); });
                   if (S->has_star())
                     L.check("iso-star", H->apply_star(box(s)) == box(S->apply_star(s)), [&] { return "s = " + to_string(s); });
                   for (const auto& t : pool) {
                     const auto cex = [&] { return show({{"s", to_string(s)}, {"t", to_string(t)}}); };
                     L.check("iso-add", H->add(box(s), box(t)) == box(S->add(s, t)), cex);
                     L.check("iso-mul", H->mul(box(s), box(t)) == box(S->mul(s, t)), cex);
                   }
                 }
                 for (auto& r : check_semiring_laws(*H, std::span<const ScalarMatrix>(images)).results)
                   L.check("H " + r.law, r.pass, [&] { return r.counterexample; });
               }});
  return g;
}

std::vector<Group> groups_for(const SuiteConfig& c, std::string& subject) {
  const std::string& s = c.suite;
  const bool scalar_suite = s == "matcat-laws" || s == "dagger" || s == "freetheory" || s == "semiring-laws" ||
                            s == "homset" || s == "adjunction-roundtrips";
  const bool monad_suite = s == "monad-laws" || s == "additivity" || s == "commutativity" || s == "module-laws" ||
                           s == "eval-at-one" || s == "kleisli-iso";
  if (!scalar_suite && !monad_suite) throw Error(ErrorCode::UnknownSuite, "unknown suite '" + s + "'");
  if (scalar_suite) {
    const SemiringKind kind = subject_kind(c);
    subject = "Mat(" + std::string(kind_name(kind)) + ")";
    if (!c.monoid.empty()) {
      builtin_monoid(c.monoid);
      if (s != "adjunction-roundtrips" && s != "semiring-laws")
        throw Error(ErrorCode::InvalidValue, "suite '" + s + "' is about Mat(S) and takes no --monoid");
    }
    if (s == "matcat-laws") return matcat_groups(kind);
    if (s == "dagger") return dagger_groups(kind);
    if (s == "freetheory") return freetheory_groups(kind);
    if (s == "semiring-laws") return semiring_law_groups(kind);
    if (s == "homset") return homset_groups(kind);
    subject = kind_name(kind);
    return roundtrip_groups(c);
  }
  if (c.monoid.empty()) subject_kind(c);
  const MonadPtr T = subject_monad(c);
  subject = T->name();
  std::vector<Group> g;
  if (s == "monad-laws") g = monad_law_groups(T);
  if (s == "additivity") g = additivity_groups(T);
  if (s == "commutativity") g = commutativity_groups(T);
  if (s == "module-laws") g = module_groups(T);
  if (s == "eval-at-one") g = eval_at_one_groups(T);
  if (s == "kleisli-iso") g = kleisli_groups(T);
  // keep the monad alive for groups that capture it by reference
  for (auto& grp : g) grp.run = [T, inner = std::move(grp.run)](Rng& r, std::size_t n, SampledLaws& L) { inner(r, n, L); };
  return g;
}

}  // namespace

std::vector<std::string> suite_names() {
  return {"monad-laws",  "additivity",  "commutativity", "matcat-laws", "dagger",      "freetheory",
          "kleisli-iso", "adjunction-roundtrips", "semiring-laws", "module-laws", "eval-at-one", "homset"};
}

SuiteReport run_suite(const SuiteConfig& config) {
  SuiteReport report;
  report.suite = config.suite;
  auto groups = groups_for(config, report.subject);

  std::vector<std::future<LawReport>> futures;
  for (const auto& grp : groups) {
    futures.push_back(std::async(std::launch::async, [&config, &grp] {
      Rng rng(derive_seed(config.seed, config.suite + "/" + grp.name));
      SampledLaws laws;
      grp.run(rng, config.cases, laws);
      return laws.report();
    }));
  }
  for (auto& f : futures)
    for (auto& r : f.get().results) report.laws.push_back(std::move(r));
  std::stable_sort(report.laws.begin(), report.laws.end(),
                   [](const LawResult& a, const LawResult& b) { return a.law < b.law; });
  return report;
}

std::string render(const SuiteReport& report) {
  std::string out;
  for (const auto& l : report.laws) {
    out += (l.pass ? "PASS " : "FAIL ") + l.law + "\n";
    if (l.counterexample.empty()) continue;
    std::size_t start = 0;
    while (start <= l.counterexample.size()) {
      const auto end = l.counterexample.find('\n', start);
      out += "    " + l.counterexample.substr(start, end - start) + "\n";
      if (end == std::string::npos) break;
      start = end + 1;
    }
  }
  return out;
}

}  // namespace semicat
