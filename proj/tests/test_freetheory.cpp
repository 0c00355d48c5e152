#include <doctest.h>

#include "helpers.hpp"
#include "semicat/freetheory.hpp"
#include "semicat/gen.hpp"

using namespace testing;
using K = SemiringKind;

namespace {

const Elem a = at("a"), x = at("x"), y = at("y");

FreeTerm term(K k, std::initializer_list<const char*> coeffs, std::vector<Elem> v) {
  return make_term(make_matrix(k, 1, coeffs.size(), coeffs), std::move(v));
}

FreeTerm random_term(Rng& rng, K k, const std::vector<Elem>& carrier) {
  const std::size_t i = rng.below(5);
  std::vector<Elem> v;
  for (std::size_t c = 0; c < i; ++c) v.push_back(rng.pick(carrier));
  return make_term(gen_matrix(rng, k, 1, i), v);
}

}  // namespace

TEST_CASE("normal forms") {
  CHECK(term_normalize(term(K::Nat, {"2", "3"}, {x, x})) == ms(K::Nat, {{x, "5"}}));
  CHECK(term_normalize(term(K::Nat, {"1"}, {x})) == ms(K::Nat, {{x, "1"}}));
  CHECK(term_normalize(make_term(make_matrix(K::Nat, 1, 0, {}), {})).empty());
  CHECK(term_normalize(term(K::Tropical, {"2", "7", "inf"}, {x, x, y})) == ms(K::Tropical, {{x, "2"}}));
  CHECK(to_string(term(K::Nat, {"2", "3"}, {x, y})) == "k_2([2, 3]; x, y)");
}

TEST_CASE("malformed terms") {
  try {
    make_term(make_matrix(K::Nat, 1, 2, {"1", "2"}), {x});
    FAIL("expected MalformedTerm");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::MalformedTerm);
  }
  CHECK_THROWS_AS(make_term(make_matrix(K::Nat, 2, 1, {"1", "2"}), {x}), Error);
  CHECK_THROWS_AS(make_nested_term(make_matrix(K::Nat, 1, 1, {"1"}), {}), Error);
}

TEST_CASE("unit and multiplication") {
  CHECK(term_normalize(tl_unit(K::Nat, x)) == ms_unit(x, K::Nat));
  CHECK(term_normalize(tl_unit(K::Tropical, x)) == ms_unit(x, K::Tropical));

  const auto t1 = term(K::Nat, {"1"}, {a}), t2 = term(K::Nat, {"2"}, {a});
  const auto outer = make_nested_term(make_matrix(K::Nat, 1, 2, {"2", "1"}), {t1, t2});
  const auto flat = tl_mult(outer);
  CHECK(term_normalize(flat) == ms(K::Nat, {{a, "4"}}));
  CHECK(flat.arity() == 2);
  const auto via_ms = ms_mult(Multiset::from_entries(
      K::Nat, {{Elem::ms(term_normalize(t1)), nat(2)}, {Elem::ms(term_normalize(t2)), nat(1)}}));
  CHECK(term_normalize(flat) == via_ms);

  const auto empty = make_term(make_matrix(K::Nat, 1, 0, {}), {});
  CHECK(term_normalize(tl_mult(make_nested_term(make_matrix(K::Nat, 1, 2, {"3", "4"}), {empty, empty}))).empty());
}

TEST_CASE("multiplication agrees with the multiset monad on random terms") {
  Rng rng(301);
  const std::vector<Elem> carrier{x, y, a};
  for (K k : builtin_semiring_kinds())
    for (int c = 0; c < 60; ++c) {
      const std::size_t i = rng.below(4);
      std::vector<FreeTerm> inner;
      std::vector<Multiset::Entry> outer_ms;
      const auto g = gen_matrix(rng, k, 1, i);
      for (std::size_t j = 0; j < i; ++j) {
        inner.push_back(random_term(rng, k, carrier));
        outer_ms.emplace_back(Elem::ms(term_normalize(inner.back())), g(0, j));
      }
      const auto got = term_normalize(tl_mult(make_nested_term(g, inner)));
      CHECK(got == ms_mult(Multiset::from_entries(k, outer_ms)));
    }
}

TEST_CASE("relation examples") {
  CHECK(tl_relation_check(Aleph0Map(1, 2, {0}), make_matrix(K::Nat, 1, 1, {"4"}), {x, y}));
  CHECK(tl_relation_check(Aleph0Map::identity(2), make_matrix(K::Nat, 1, 2, {"2", "3"}), {x, y}));
  CHECK(tl_relation_check(Aleph0Map(2, 1, {0, 0}), make_matrix(K::Nat, 1, 2, {"2", "3"}), {x}));
  // the two sides named in the relation really are different representatives
  const auto lhs = make_term(mat_compose(make_matrix(K::Nat, 1, 2, {"2", "3"}),
                                         aleph0_embed(Aleph0Map(2, 1, {0, 0}), builtin_semiring(K::Nat))),
                             {x});
  CHECK(lhs.arity() == 1);
  CHECK(term_normalize(lhs) == ms(K::Nat, {{x, "5"}}));
  CHECK_THROWS_AS(tl_relation_check(Aleph0Map(2, 1, {0, 0}), make_matrix(K::Nat, 1, 1, {"2"}), {x}), Error);
}

TEST_CASE("normalization is constant on related terms") {
  Rng rng(302);
  const std::vector<Elem> carrier{x, y, a};
  for (K k : builtin_semiring_kinds())
    for (int c = 0; c < 80; ++c) {
      const std::size_t i = rng.below(5), m = 1 + rng.below(4);
      const auto f = gen_aleph0_map(rng, i, m);
      std::vector<Elem> v;
      for (std::size_t j = 0; j < m; ++j) v.push_back(rng.pick(carrier));
      CHECK(tl_relation_check(f, gen_matrix(rng, k, 1, i), v));
    }
}

TEST_CASE("distinct classes stay distinct") {
  CHECK(term_normalize(term(K::Nat, {"2"}, {x})) != term_normalize(term(K::Nat, {"2"}, {y})));
  CHECK(term_normalize(term(K::Nat, {"1", "1"}, {x, y})) != term_normalize(term(K::Nat, {"2"}, {x})));
}

TEST_CASE("involution") {
  CHECK(tl_involution(term(K::Gaussian, {"i"}, {x})) == term(K::Gaussian, {"-i"}, {x}));
  CHECK(term_normalize(tl_involution(term(K::Gaussian, {"1+i", "2"}, {x, y}))) ==
        ms(K::Gaussian, {{x, "1-i"}, {y, "2"}}));
  Rng rng(303);
  const std::vector<Elem> carrier{x, y, a};
  for (int c = 0; c < 60; ++c) {
    const auto t = random_term(rng, K::Gaussian, carrier);
    CHECK(term_normalize(tl_involution(tl_involution(t))) == term_normalize(t));
    CHECK(term_normalize(tl_involution(t)) == ms_involution(term_normalize(t)));
  }
}

TEST_CASE("fmap agrees with the multiset functor") {
  Rng rng(304);
  const std::vector<Elem> carrier{x, y, a};
  const ElemFn f = [&](const Elem& e) { return e == y ? x : e; };
  for (K k : builtin_semiring_kinds())
    for (int c = 0; c < 40; ++c) {
      const auto t = random_term(rng, k, carrier);
      CHECK(term_normalize(tl_fmap(f, t)) == ms_fmap(f, term_normalize(t)));
    }
}

TEST_CASE("law unit functor") {
  const auto T = multiset_monad(K::Nat);
  const auto N = builtin_semiring(K::Nat);
  CHECK(law_unit_functor(mat_identity(N, 3)) == kl_id(T, 3));
  const auto row = law_unit_functor(make_matrix(K::Nat, 1, 2, {"2", "3"}));
  CHECK(row.components.at(0) == msv(K::Nat, {{ix(0), "2"}, {ix(1), "3"}}));
  const KleisliCategory C(T);
  CHECK(law_unit_functor(mat_coproj1(N, 2, 1)) == C.coproj1(2, 1));
  CHECK(law_unit_functor(mat_coproj2(N, 2, 1)) == C.coproj2(2, 1));

  Rng rng(305);
  for (K k : builtin_semiring_kinds())
    for (int c = 0; c < 40; ++c) {
      const auto f = gen_matrix(rng, k, rng.below(4), 2), g = gen_matrix(rng, k, 2, rng.below(4));
      CHECK(law_unit_functor(mat_compose(f, g)) == kl_compose(law_unit_functor(f), law_unit_functor(g)));
    }
}
