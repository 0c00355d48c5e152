#include "semicat/adjunctions.hpp"
#include "semicat/multiset.hpp"
#include "semicat/suite.hpp"

namespace semicat {

namespace {

void absorb(SampledLaws& L, const std::string& prefix, const std::string& who, const LawReport& r) {
  for (const auto& l : r.results)
    L.check(prefix + l.law, l.pass, [&] { return "[" + who + "] " + l.counterexample; });
}

std::vector<Elem> scalar_free_carrier(Rng& rng) { return index_carrier(1 + rng.below(5)); }

void monoid_roundtrips(SampledLaws& L, Rng& rng, std::size_t cases, SemiringKind kind, std::string_view monoid) {
  const auto target_ms = multiset_monad(kind);
  for (const auto& f : builtin_monoid_homs()) {
    if (!monoid.empty() && f.source->name != monoid) continue;
    if (monoid.empty() && dynamic_cast<const MultisetMonad*>(f.target.get()) && f.target->name() != target_ms->name())
      continue;
    const Monad& T = *f.target;
    absorb(L, "witness ", f.name, check_witness(f));
    const auto sigma = transpose_mon_up(f);
    absorb(L, "cotranspose ", f.name, check_monad_morphism(sigma, rng, cases));
    const auto back = transpose_mon_down(sigma);
    const auto again = transpose_mon_up(back);
    auto pool = monoid_pool(*f.source);
    for (std::size_t c = 0; c < cases; ++c) pool.push_back(gen_monoid_elem(rng, *f.source));
    for (const auto& m : pool) {
      const auto cex = [&] { return "[" + f.name + "] m = " + to_string(m); };
      L.check("down-after-up", back.fn(m) == f.fn(m), cex);
      const auto X = scalar_free_carrier(rng);
      const Elem x = rng.pick(X);
      const Elem u = Elem::act(m, x);
      L.check("up-after-down", again(u) == sigma(u), cex);
      // T(lambda) . st (f(m), x) computed the long way round: move f(m) over to x
      L.check("cotranspose-formula", sigma(u) == T.fmap([&x](const Elem&) { return x; }, f.fn(m)), cex);
    }
    const Elem x = Elem::index(0);
    L.check("cotranspose-unit", sigma(Elem::act(f.source->unit, x)) == T.unit(x), [&] { return "[" + f.name + "]"; });
  }
}

void semiring_roundtrips(SampledLaws& L, Rng& rng, std::size_t cases, SemiringKind kind, bool involutive) {
  const auto S = builtin_semiring(kind);
  std::vector<ScalarHom> into;
  for (auto& k : builtin_scalar_homs())
    if (k.target == kind) into.push_back(k);
  for (const auto& g : scalar_homs_from(kind)) {
    const auto f = into_eval_at_one(g);
    const MonadPtr src_ptr = multiset_monad(kind);
    const Monad& src = *src_ptr;
    const Monad& T = *f.target;
    absorb(L, "witness ", f.name, check_witness(f));
    const auto sigma = transpose_srng_up(f);
    absorb(L, "cotranspose ", f.name, check_monad_morphism(sigma, rng, cases));
    const auto back = transpose_srng_down(sigma, kind);
    const auto again = transpose_srng_up(back);
    // naturality: precomposing with M(k) matches transposing f . k
    std::vector<MonadMorphism> precomposed;
    for (const auto& k : into)
      precomposed.push_back(transpose_srng_up(SemiringHomToE{f.name + " after " + k.name, k.source, f.target,
                                                             [f, k](const Scalar& s) { return f.fn(k.fn(s)); }}));
    for (const auto& s : scalar_pool(kind))
      L.check("down-after-up", back.fn(s) == f.fn(s), [&] { return "[" + f.name + "] s = " + to_string(s); });
    for (std::size_t c = 0; c < cases; ++c) {
      const auto X = scalar_free_carrier(rng);
      const Elem u = gen_t_value(rng, src, X);
      const auto cex = [&] { return "[" + f.name + "] u = " + to_string(u); };
      L.check("up-after-down", again(u) == sigma(u), cex);
      L.check("cotranspose-entrywise", sigma(u) == Elem::ms(ms_change_semiring(u.as_ms(), g.target, g.fn)), cex);
      if (involutive && S->has_star() && T.flags().involutive)
        L.check("involution", sigma(src.involution(u)) == T.involution(sigma(u)), cex);
      const std::size_t which = rng.below(into.size());
      const auto& k = into[which];
      const Elem v = gen_t_value(rng, *multiset_monad(k.source), X);
      L.check("natural-in-source", precomposed[which](v) == sigma(Elem::ms(ms_change_semiring(v.as_ms(), kind, k.fn))),
              [&] { return "[" + precomposed[which].name + "] u = " + to_string(v); });
    }
  }
}

void matrix_roundtrips(SampledLaws& L, Rng& rng, std::size_t cases, SemiringKind kind, bool involutive) {
  const auto S = builtin_semiring(kind);
  std::vector<ScalarHom> into;
  for (auto& k : builtin_scalar_homs())
    if (k.target == kind) into.push_back(k);
  for (const auto& g : scalar_homs_from(kind)) {
    const auto R = builtin_semiring(g.target);
    const bool with_star = involutive && S->has_star() && R->has_star();
    const auto f = into_homset(g);
    absorb(L, "witness ", f.name, check_witness(f, with_star));
    const auto F = transpose_math_up(f, with_star);
    absorb(L, "cotranspose ", f.name, check_theory_functor(F, rng, cases, with_star));
    const auto back = transpose_math_down(F);
    const auto again = transpose_math_up(back, with_star);
    // naturality: precomposing with Mat(k) matches transposing f . k
    std::vector<TheoryFunctor> precomposed;
    for (const auto& k : into)
      precomposed.push_back(transpose_math_up(SemiringHomToH{f.name + " after " + k.name, k.source, f.target,
                                                             [f, k](const Scalar& s) { return f.fn(k.fn(s)); }}));
    for (const auto& s : scalar_pool(kind))
      L.check("down-after-up", back.fn(s) == f.fn(s), [&] { return "[" + f.name + "] s = " + to_string(s); });
    for (std::size_t c = 0; c < cases; ++c) {
      const std::size_t n = rng.below(5), m = rng.below(5);
      const auto h = gen_matrix(rng, kind, n, m);
      const auto cex = [&] { return "[" + f.name + "] h = " + to_string(h); };
      L.check("up-after-down", again(h) == F(h), cex);
      L.check("cotranspose-entrywise", F(h) == mat_map(h, R, g.fn), cex);
      const std::size_t which = rng.below(into.size());
      const auto& k = into[which];
      const auto hk = gen_matrix(rng, k.source, n, m);
      L.check("natural-in-source", precomposed[which](hk) == F(mat_map(hk, S, k.fn)),
              [&] { return "[" + precomposed[which].name + "] h = " + to_string(hk); });
    }
  }
}

}  // namespace

LawReport run_roundtrip(std::string_view adjunction, std::string_view semiring, bool involutive, std::uint64_t seed,
                        std::size_t cases, std::string_view monoid) {
  const SemiringKind kind = semiring_kind(semiring.empty() ? "nat" : semiring);
  if (!monoid.empty()) builtin_monoid(monoid);
  Rng rng(derive_seed(seed, adjunction));
  SampledLaws L;
  if (adjunction == "mon-e")
    monoid_roundtrips(L, rng, cases, kind, monoid);
  else if (adjunction == "srng-e")
    semiring_roundtrips(L, rng, cases, kind, involutive);
  else if (adjunction == "mat-h")
    matrix_roundtrips(L, rng, cases, kind, involutive);
  else
    throw Error(ErrorCode::UnknownSuite, "unknown adjunction '" + std::string(adjunction) + "'");
  return L.report();
}

}  // namespace semicat
