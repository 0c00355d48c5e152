#include <doctest.h>

#include "helpers.hpp"
#include "oracle.hpp"
#include "semicat/biproduct.hpp"
#include "semicat/derived.hpp"
#include "semicat/gen.hpp"
#include "semicat/kleisli.hpp"

using namespace testing;
using K = SemiringKind;

namespace {

// Reads a multiset-monad Kleisli map directly as the matrix of its multiplicities.
ScalarMatrix rows_of(const KleisliMap& f, K k) {
  return Matrix<Scalar>::generate(builtin_semiring(k), f.dom, f.cod, [&](std::size_t i, std::size_t j) {
    return f.components[i].as_ms().at(ix(static_cast<std::int64_t>(j)));
  });
}

KleisliMap from_rows(const MonadPtr& T, const ScalarMatrix& m) {
  const K k = m.ring()->zero.kind();
  std::vector<Elem> comps;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    std::vector<Multiset::Entry> e;
    for (std::size_t j = 0; j < m.cols(); ++j) e.emplace_back(ix(static_cast<std::int64_t>(j)), m(i, j));
    comps.push_back(Elem::ms(Multiset::from_entries(k, e)));
  }
  return make_kleisli(T, m.rows(), m.cols(), comps);
}

template <class F>
void expect_code(ErrorCode code, F f) {
  try {
    f();
    FAIL("expected " << error_code_name(code));
  } catch (const Error& e) {
    CHECK(e.code() == code);
  }
}

}  // namespace

TEST_CASE("Kleisli composition expands mu after T(g)") {
  const auto T = multiset_monad(K::Nat);
  const auto f = make_kleisli(T, 1, 2, {msv(K::Nat, {{ix(0), "2"}, {ix(1), "1"}})});
  const auto g = make_kleisli(T, 2, 1, {msv(K::Nat, {{ix(0), "3"}}), msv(K::Nat, {{ix(0), "1"}})});
  const auto gf = kl_compose(f, g);
  CHECK(gf.components.at(0) == msv(K::Nat, {{ix(0), "7"}}));
  CHECK(kl_compose(kl_id(T, 1), f) == f);
  CHECK(kl_compose(g, kl_id(T, 1)) == g);
  CHECK(rows_of(gf, K::Nat) == oracle::compose(rows_of(f, K::Nat), rows_of(g, K::Nat)));
}

TEST_CASE("Kleisli composition errors") {
  const auto T = multiset_monad(K::Nat), B = multiset_monad(K::Bool);
  const auto f = kl_id(T, 2);
  expect_code(ErrorCode::DimensionMismatch, [&] { kl_compose(f, kl_id(T, 3)); });
  expect_code(ErrorCode::MonadMismatch, [&] { kl_compose(f, kl_id(B, 2)); });
  expect_code(ErrorCode::DimensionMismatch, [&] { make_kleisli(T, 2, 1, {msv(K::Nat, {{ix(0), "1"}})}); });
  expect_code(ErrorCode::ElementOutsideCarrier, [&] { make_kleisli(T, 1, 1, {msv(K::Nat, {{ix(3), "1"}})}); });
}

TEST_CASE("multiset Kleisli composition is matrix multiplication") {
  Rng rng(201);
  for (K k : builtin_semiring_kinds()) {
    const auto T = multiset_monad(k);
    for (int c = 0; c < 60; ++c) {
      const std::size_t n = rng.below(4), m = rng.below(4), p = rng.below(4);
      const auto f = gen_kleisli(rng, T, n, m), g = gen_kleisli(rng, T, m, p);
      CHECK(rows_of(kl_compose(f, g), k) == oracle::compose(rows_of(f, k), rows_of(g, k)));
      CHECK(from_rows(T, rows_of(f, k)) == f);
    }
  }
}

TEST_CASE("Kleisli biproducts") {
  const auto T = multiset_monad(K::Nat);
  const KleisliCategory C(T);
  CHECK(C.compose(C.coproj1(2, 1), C.proj1(2, 1)) == C.identity(2));
  CHECK(C.compose(C.coproj1(2, 1), C.proj2(2, 1)) == C.zero(2, 1));
  CHECK(C.compose(C.coproj2(2, 1), C.proj2(2, 1)) == C.identity(1));
  CHECK(C.zero(2, 3).components == std::vector<Elem>(2, tx_zero(*T)));

  Rng rng(202);
  for (int c = 0; c < 60; ++c) {
    const std::size_t d = rng.below(4), n = rng.below(4), m = rng.below(4);
    const auto f = gen_kleisli(rng, T, d, n), g = gen_kleisli(rng, T, d, m);
    const auto t = C.tuple(f, g);
    CHECK(C.compose(t, C.proj1(n, m)) == f);
    CHECK(C.compose(t, C.proj2(n, m)) == g);
    const auto h = gen_kleisli(rng, T, n, d), k = gen_kleisli(rng, T, m, d);
    const auto ct = C.cotuple(h, k);
    CHECK(C.compose(C.coproj1(n, m), ct) == h);
    CHECK(C.compose(C.coproj2(n, m), ct) == k);
  }
}

TEST_CASE("projections need an additive monad") {
  const KleisliCategory C(action_monad(builtin_monoid("free-words")));
  expect_code(ErrorCode::NotAdditive, [&] { C.proj1(1, 1); });
  expect_code(ErrorCode::NotAdditive, [&] { C.zero(1, 1); });
  const auto co = C.coproj1(1, 1);
  CHECK(co.components.at(0) == word_act("", ix(0)));
}

TEST_CASE("Kleisli tensor") {
  const auto T = multiset_monad(K::Nat);
  CHECK(kl_tensor(kl_id(T, 1), kl_id(T, 1)) == kl_id(T, 1));
  const auto f = make_kleisli(T, 1, 1, {msv(K::Nat, {{ix(0), "2"}})});
  const auto g = make_kleisli(T, 1, 1, {msv(K::Nat, {{ix(0), "3"}})});
  CHECK(kl_tensor(f, g).components.at(0) == msv(K::Nat, {{ix(0), "6"}}));

  const auto A = action_monad(builtin_monoid("free-words"));
  expect_code(ErrorCode::NotCommutative, [&] { kl_tensor(kl_id(A, 1), kl_id(A, 1)); });
}

TEST_CASE("multiset Kleisli tensor is the Kronecker product") {
  Rng rng(203);
  for (K k : builtin_semiring_kinds()) {
    const auto T = multiset_monad(k);
    for (int c = 0; c < 40; ++c) {
      const auto f = gen_kleisli(rng, T, rng.below(3), rng.below(3));
      const auto g = gen_kleisli(rng, T, rng.below(3), rng.below(3));
      CHECK(rows_of(kl_tensor(f, g), k) == oracle::kronecker(rows_of(f, k), rows_of(g, k)));
    }
  }
}

TEST_CASE("Kleisli dagger is the conjugate transpose") {
  const auto T = multiset_monad(K::Gaussian);
  const KleisliCategory C(T);
  REQUIRE(C.has_dagger());
  CHECK_FALSE(KleisliCategory(action_monad(builtin_monoid("nat-mul"))).has_dagger());
  Rng rng(204);
  for (int c = 0; c < 40; ++c) {
    const auto f = gen_kleisli(rng, T, rng.below(4), rng.below(4));
    CHECK(rows_of(C.dagger(f), K::Gaussian) == oracle::conjugate_transpose(rows_of(f, K::Gaussian)));
  }
}

TEST_CASE("bc_m splits into coordinates") {
  const auto T = multiset_monad(K::Nat);
  const auto u = msv(K::Nat, {{ix(0), "2"}, {ix(2), "5"}});
  const auto parts = bc_m(*T, u, 3);
  REQUIRE(parts.size() == 3);
  CHECK(parts[0] == scalar_to_t1(K::Nat, nat(2)));
  CHECK(parts[1] == scalar_to_t1(K::Nat, nat(0)));
  CHECK(parts[2] == scalar_to_t1(K::Nat, nat(5)));
  CHECK(bc_m_inv(*T, parts) == u);
  CHECK(bc_m(*T, tx_zero(*T), 0).empty());
}

TEST_CASE("xi and theta") {
  const auto T = multiset_monad(K::Nat);
  const auto E = eval_at_one(T);
  const auto h = from_scalar_matrix(make_matrix(K::Nat, 1, 2, {"2", "3"}), E);
  const auto k = xi(T, h);
  CHECK(k.components.at(0) == msv(K::Nat, {{ix(0), "2"}, {ix(1), "3"}}));
  CHECK(theta(k) == h);
  expect_code(ErrorCode::TagMismatch, [&] { xi(multiset_monad(K::Bool), h); });
}

TEST_CASE("theta is an inverse functor pair with xi") {
  Rng rng(205);
  for (K k : builtin_semiring_kinds()) {
    const auto T = multiset_monad(k);
    const auto E = eval_at_one(T);
    const MatTheory<Elem> ME(E);
    for (int c = 0; c < 40; ++c) {
      const auto f = gen_kleisli(rng, T, 2, 2), g = gen_kleisli(rng, T, 2, 2);
      CHECK(xi(T, theta(f)) == f);
      CHECK(theta(kl_compose(f, g)) == mat_compose(theta(f), theta(g)));
      CHECK(to_scalar_matrix(theta(f), k) == rows_of(f, k));
      const auto h = gen_matrix(rng, k, rng.below(4), rng.below(4));
      CHECK(to_scalar_matrix(theta(xi(T, from_scalar_matrix(h, E))), k) == h);
      CHECK(theta(kl_tensor(f, g)) == mat_tensor(theta(f), theta(g)));
    }
  }
}

TEST_CASE("the unit homset of the Kleisli category is T(1)") {
  Rng rng(206);
  for (K k : builtin_semiring_kinds()) {
    const auto T = multiset_monad(k);
    const KleisliCategory C(T);
    const auto H = homset_semiring(C);
    auto lift = [&](const Scalar& s) { return from_rows(T, ScalarMatrix(builtin_semiring(k), 1, 1, {s})); };
    auto lower = [&](const KleisliMap& f) { return rows_of(f, k)(0, 0); };
    CHECK(lower(H->zero) == oracle::zero(k));
    CHECK(lower(H->one) == oracle::one(k));
    for (int c = 0; c < 40; ++c) {
      const auto s = gen_scalar(rng, k), t = gen_scalar(rng, k);
      CHECK(lower(H->add(lift(s), lift(t))) == oracle::add(s, t));
      CHECK(lower(H->mul(lift(s), lift(t))) == oracle::mul(s, t));
    }
  }
}

TEST_CASE("action monad Kleisli category is still a category") {
  const auto A = action_monad(builtin_monoid("free-words"));
  const KleisliCategory C(A);
  Rng rng(207);
  for (int c = 0; c < 60; ++c) {
    const auto f = gen_kleisli(rng, A, 2, 3), g = gen_kleisli(rng, A, 3, 2), h = gen_kleisli(rng, A, 2, 1);
    CHECK(C.compose(C.compose(f, g), h) == C.compose(f, C.compose(g, h)));
    CHECK(C.compose(C.identity(2), f) == f);
    CHECK(C.compose(f, C.identity(3)) == f);
  }
  // words concatenate in composition order
  const auto f = make_kleisli(A, 1, 1, {word_act("ab", ix(0))});
  const auto g = make_kleisli(A, 1, 1, {word_act("c", ix(0))});
  CHECK(C.compose(f, g).components.at(0) == word_act("abc", ix(0)));
}
