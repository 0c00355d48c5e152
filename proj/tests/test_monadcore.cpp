#include <doctest.h>

#include "helpers.hpp"
#include "oracle.hpp"
#include "semicat/derived.hpp"
#include "semicat/gen.hpp"
#include "semicat/multiset.hpp"

using namespace testing;
using K = SemiringKind;

namespace {

const Elem a = at("a"), b = at("b"), c = at("c"), u_ = at("u"), v_ = at("v"), x = at("x"), y = at("y");

// Multiplicity sums over preimages, computed entry by entry.
Multiset preimage_sums(const std::map<Elem, Elem>& f, const Multiset& phi) {
  std::map<Elem, Scalar> acc;
  for (const auto& [k, s] : phi.entries()) {
    const Elem img = f.at(k);
    auto it = acc.find(img);
    acc[img] = it == acc.end() ? s : oracle::add(it->second, s);
  }
  std::vector<Multiset::Entry> out(acc.begin(), acc.end());
  return Multiset::from_entries(phi.tag(), out);
}

}  // namespace

TEST_CASE("ms_fmap sums over preimages") {
  const std::map<Elem, Elem> table{{a, u_}, {b, u_}, {c, v_}};
  const FiniteMap f(FiniteCarrier({a, b, c}), FiniteCarrier({u_, v_}), table);
  const auto phi = ms(K::Nat, {{a, "2"}, {b, "3"}, {c, "1"}});
  const auto got = ms_fmap(f, phi);
  CHECK(got == ms(K::Nat, {{u_, "5"}, {v_, "1"}}));
  CHECK(got == preimage_sums(table, phi));
  CHECK(ms_fmap(FiniteMap::identity(FiniteCarrier({a, b, c})), phi) == phi);
  CHECK(ms_fmap(f, Multiset(K::Nat)).empty());
}

TEST_CASE("zero multiplicities never appear") {
  const auto phi = ms(K::Tropical, {{a, "inf"}, {b, "2"}});
  CHECK(phi.size() == 1);
  CHECK(ms_fmap([&](const Elem&) { return u_; }, phi) == ms(K::Tropical, {{u_, "2"}}));
}

TEST_CASE("ms_fmap needs the map defined on the support") {
  const FiniteMap f(FiniteCarrier({a}), FiniteCarrier({u_}), {{a, u_}});
  try {
    ms_fmap(f, ms(K::Nat, {{b, "1"}}));
    FAIL("expected ElementOutsideCarrier");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ElementOutsideCarrier);
  }
}

TEST_CASE("ms_fmap agrees with the preimage oracle on random maps") {
  Rng rng(3);
  for (int c = 0; c < 200; ++c) {
    const auto X = index_carrier(1 + rng.below(5)), Y = index_carrier(1 + rng.below(5));
    const auto f = gen_finite_map(rng, FiniteCarrier(X), FiniteCarrier(Y));
    std::map<Elem, Elem> table;
    for (const auto& e : X) table.emplace(e, f(e));
    for (K k : builtin_semiring_kinds()) {
      const auto phi = gen_multiset(rng, k, X);
      CHECK(ms_fmap(f, phi) == preimage_sums(table, phi));
    }
  }
}

TEST_CASE("ms_unit") {
  CHECK(ms_unit(x, K::Nat) == ms(K::Nat, {{x, "1"}}));
  CHECK(ms_unit(x, K::Bool) == ms(K::Bool, {{x, "1"}}));
  CHECK(ms_unit(x, K::Tropical) == ms(K::Tropical, {{x, "0"}}));
  CHECK(ms_unit(x, K::Tropical).at(x) == Scalar::tropical(0));
}

TEST_CASE("ms_mult expands the double sum") {
  const auto phi1 = ms(K::Nat, {{a, "1"}, {b, "3"}});
  const auto phi2 = ms(K::Nat, {{b, "2"}});
  const auto outer = Multiset::from_entries(K::Nat, {{Elem::ms(phi1), nat(2)}, {Elem::ms(phi2), nat(1)}});
  // 2*{a:1,b:3} + 1*{b:2}
  CHECK(ms_mult(outer) == ms(K::Nat, {{a, "2"}, {b, "8"}}));
  CHECK(ms_mult(Multiset::from_entries(K::Nat, {{Elem::ms(ms_unit(x, K::Nat)), nat(1)}})) == ms_unit(x, K::Nat));
  CHECK(ms_mult(Multiset(K::Nat)).empty());
}

TEST_CASE("ms_mult rejects keys that are not multisets") {
  try {
    ms_mult(ms(K::Nat, {{a, "1"}}));
    FAIL("expected KeyNotMultiset");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::KeyNotMultiset);
  }
  try {
    ms_mult(Multiset::from_entries(K::Nat, {{Elem::ms(ms(K::Bool, {{a, "1"}})), nat(1)}}));
    FAIL("expected TagMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::TagMismatch);
  }
}

TEST_CASE("strength pairs under fmap") {
  const auto T = multiset_monad(K::Nat);
  CHECK(strength(*T, msv(K::Nat, {{a, "2"}}), y) == msv(K::Nat, {{Elem::pair(a, y), "2"}}));
  CHECK(strength(*T, Elem::ms(Multiset(K::Nat)), y) == Elem::ms(Multiset(K::Nat)));

  const auto A = action_monad(builtin_monoid("free-words"));
  CHECK(strength(*A, word_act("ab", x), y) == word_act("ab", Elem::pair(x, y)));
}

TEST_CASE("ms_dst multiplies pointwise") {
  CHECK(ms_dst(ms(K::Nat, {{a, "2"}, {b, "1"}}), ms(K::Nat, {{x, "3"}})) ==
        ms(K::Nat, {{Elem::pair(a, x), "6"}, {Elem::pair(b, x), "3"}}));
  CHECK(ms_dst(ms(K::Bool, {{a, "1"}}), ms(K::Bool, {{x, "1"}})) == ms(K::Bool, {{Elem::pair(a, x), "1"}}));
  CHECK(ms_dst(Multiset(K::Nat), ms(K::Nat, {{x, "3"}})).empty());
  CHECK_THROWS_AS(ms_dst(ms(K::Nat, {{a, "1"}}), ms(K::Bool, {{x, "1"}})), Error);
}

TEST_CASE("generic dst matches the pointwise product on random multisets") {
  Rng rng(8);
  const auto X = index_carrier(3);
  const std::vector<Elem> Y{a, b, c};
  for (K k : builtin_semiring_kinds()) {
    const auto T = multiset_monad(k);
    for (int i = 0; i < 60; ++i) {
      const auto phi = gen_multiset(rng, k, X), psi = gen_multiset(rng, k, Y);
      std::vector<Multiset::Entry> e;
      for (const auto& [p, s] : phi.entries())
        for (const auto& [q, t] : psi.entries()) e.emplace_back(Elem::pair(p, q), oracle::mul(s, t));
      CHECK(double_strength(*T, Elem::ms(phi), Elem::ms(psi)) == Elem::ms(Multiset::from_entries(k, e)));
    }
  }
}

TEST_CASE("bc restricts along the coprojections") {
  const auto T = multiset_monad(K::Nat);
  const auto joined = msv(K::Nat, {{Elem::inl(a), "2"}, {Elem::inr(b), "3"}});
  const auto [l, r] = bc(*T, joined);
  CHECK(l == msv(K::Nat, {{a, "2"}}));
  CHECK(r == msv(K::Nat, {{b, "3"}}));
  CHECK(bc_inv(*T, l, r) == joined);
  const auto empty = Elem::ms(Multiset(K::Nat));
  CHECK(bc(*T, empty) == std::pair{empty, empty});
}

TEST_CASE("bc is unavailable for action monads") {
  const auto A = action_monad(builtin_monoid("free-words"));
  try {
    bc(*A, word_act("a", Elem::inl(x)));
    FAIL("expected NotAdditive");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotAdditive);
  }
  CHECK_THROWS_AS(tx_zero(*A), Error);
}

TEST_CASE("tx_add is pointwise addition") {
  const auto N = multiset_monad(K::Nat);
  CHECK(tx_add(*N, msv(K::Nat, {{a, "2"}}), msv(K::Nat, {{a, "3"}, {b, "1"}})) == msv(K::Nat, {{a, "5"}, {b, "1"}}));
  const auto T = multiset_monad(K::Tropical);
  CHECK(tx_add(*T, msv(K::Tropical, {{a, "2"}}), msv(K::Tropical, {{a, "5"}})) == msv(K::Tropical, {{a, "2"}}));
  const auto u = msv(K::Nat, {{a, "4"}, {c, "7"}});
  CHECK(tx_add(*N, u, tx_zero(*N)) == u);
  CHECK(tx_zero(*N) == Elem::ms(Multiset(K::Nat)));
}

TEST_CASE("tx_add agrees with the pointwise-sum oracle") {
  Rng rng(12);
  const auto X = index_carrier(4);
  for (K k : builtin_semiring_kinds()) {
    const auto T = multiset_monad(k);
    for (int i = 0; i < 100; ++i) {
      const auto phi = gen_multiset(rng, k, X), psi = gen_multiset(rng, k, X);
      std::vector<Multiset::Entry> e(phi.entries());
      e.insert(e.end(), psi.entries().begin(), psi.entries().end());
      std::map<Elem, Scalar> acc;
      for (const auto& [key, s] : e) acc[key] = acc.count(key) ? oracle::add(acc[key], s) : s;
      const auto expected = Multiset::from_entries(k, {acc.begin(), acc.end()});
      CHECK(tx_add(*T, Elem::ms(phi), Elem::ms(psi)) == Elem::ms(expected));
    }
  }
}

TEST_CASE("scalar_action scales every multiplicity") {
  const auto T = multiset_monad(K::Nat);
  const auto u = msv(K::Nat, {{a, "2"}, {b, "1"}});
  CHECK(scalar_action(*T, scalar_to_t1(K::Nat, nat(3)), u) == msv(K::Nat, {{a, "6"}, {b, "3"}}));
  CHECK(scalar_action(*T, scalar_to_t1(K::Nat, nat(1)), u) == u);
  CHECK(scalar_action(*T, scalar_to_t1(K::Nat, nat(0)), u) == tx_zero(*T));

  const auto G = multiset_monad(K::Gaussian);
  const auto w = msv(K::Gaussian, {{a, "1+i"}, {b, "2"}});
  CHECK(scalar_action(*G, scalar_to_t1(K::Gaussian, sc(K::Gaussian, "i")), w) ==
        msv(K::Gaussian, {{a, "-1+i"}, {b, "2i"}}));
}

TEST_CASE("scalar_action needs a commutative monad") {
  const auto A = action_monad(builtin_monoid("free-words"));
  try {
    scalar_action(*A, word_act("a", Elem::star()), word_act("b", x));
    FAIL("expected NotCommutative");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotCommutative);
  }
}

TEST_CASE("eval_at_one recovers the scalar operations") {
  const auto E = eval_at_one(multiset_monad(K::Nat));
  const auto two = scalar_to_t1(K::Nat, nat(2)), three = scalar_to_t1(K::Nat, nat(3));
  CHECK(E->mul(two, three) == scalar_to_t1(K::Nat, nat(6)));
  CHECK(E->add(two, three) == scalar_to_t1(K::Nat, nat(5)));
  CHECK(E->zero == scalar_to_t1(K::Nat, nat(0)));
  CHECK(E->one == scalar_to_t1(K::Nat, nat(1)));

  const auto W = eval_at_one_monoid(action_monad(builtin_monoid("free-words")));
  CHECK(W->op(word_act("ab", Elem::star()), word_act("c", Elem::star())) == word_act("abc", Elem::star()));
  CHECK(W->unit == word_act("", Elem::star()));
}

TEST_CASE("eval_at_one matches the scalar semiring on random values") {
  Rng rng(21);
  for (K k : builtin_semiring_kinds()) {
    const auto E = eval_at_one(multiset_monad(k));
    CHECK(E->has_star() == builtin_semiring(k)->has_star());
    for (int i = 0; i < 150; ++i) {
      const auto s = gen_scalar(rng, k), t = gen_scalar(rng, k);
      const auto es = scalar_to_t1(k, s), et = scalar_to_t1(k, t);
      CHECK(t1_to_scalar(E->mul(es, et), k) == oracle::mul(s, t));
      CHECK(t1_to_scalar(E->add(es, et), k) == oracle::add(s, t));
      CHECK(t1_to_scalar(E->apply_star(es), k) == oracle::conj(s));
    }
  }
}

TEST_CASE("action unit and multiplication") {
  const auto& W = *builtin_monoid("free-words");
  CHECK(action_unit(W, x) == word_act("", x));
  CHECK(action_mult(W, word_act("a", word_act("b", x))) == word_act("ab", x));
  CHECK(action_mult(W, word_act("", word_act("cd", x))) == word_act("cd", x));
  try {
    action_mult(W, Elem::act(nat(2), word_act("b", x)));
    FAIL("expected MonoidMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::MonoidMismatch);
  }
}

TEST_CASE("ms_involution") {
  CHECK(ms_involution(ms(K::Gaussian, {{a, "1+2i"}})) == ms(K::Gaussian, {{a, "1-2i"}}));
  const auto phi = ms(K::Gaussian, {{a, "1/2-3i"}, {b, "i"}, {c, "4"}});
  CHECK(ms_involution(ms_involution(phi)) == phi);
  const auto n = ms(K::Nat, {{a, "3"}});
  CHECK(ms_involution(n) == n);
}

TEST_CASE("commutativity witness") {
  const auto T = multiset_monad(K::Nat);
  const auto w = commutativity_witness(*T, msv(K::Nat, {{a, "2"}}), msv(K::Nat, {{x, "3"}}));
  CHECK(w.equal);
  CHECK(w.left == msv(K::Nat, {{Elem::pair(a, x), "6"}}));
  CHECK(w.right == w.left);

  const auto C = action_monad(builtin_monoid("nat-mul"));
  const auto wc = commutativity_witness(*C, Elem::act(nat(2), x), Elem::act(nat(5), y));
  CHECK(wc.equal);
  CHECK(wc.left == Elem::act(nat(10), Elem::pair(x, y)));

  const auto A = action_monad(builtin_monoid("free-words"));
  const auto wa = commutativity_witness(*A, word_act("ab", x), word_act("cd", y));
  CHECK_FALSE(wa.equal);
  CHECK(wa.left == word_act("abcd", Elem::pair(x, y)));
  CHECK(wa.right == word_act("cdab", Elem::pair(x, y)));
}

TEST_CASE("multiset monad laws on random nested values") {
  Rng rng(31);
  for (K k : builtin_semiring_kinds()) {
    const auto T = multiset_monad(k);
    const auto X = index_carrier(3);
    for (int i = 0; i < 40; ++i) {
      const auto u = gen_t_value(rng, *T, X);
      CHECK(T->mult(T->unit(u)) == u);
      CHECK(T->mult(T->fmap([&](const Elem& e) { return T->unit(e); }, u)) == u);
      std::vector<Elem> inner;
      for (int j = 0; j < 3; ++j) inner.push_back(gen_nested_t_value(rng, *T, X));
      const auto uuu = gen_t_value(rng, *T, inner);
      CHECK(T->mult(T->mult(uuu)) == T->mult(T->fmap([&](const Elem& e) { return T->mult(e); }, uuu)));
    }
  }
}
