#include "semicat/adjunctions.hpp"

#include "semicat/multiset.hpp"

namespace semicat {

namespace {

ScalarHom make_hom(std::string name, SemiringKind s, SemiringKind t, std::function<Scalar(const Scalar&)> fn) {
  return ScalarHom{std::move(name), s, t, std::move(fn), true};
}

ScalarHom canonical_hom(SemiringKind target) {
  const auto T = builtin_semiring(target);
  return make_hom("canonical nat->" + std::string(kind_name(target)), SemiringKind::Nat, target,
                  [T](const Scalar& n) { return canonical_from_nat(*T, n.as_int()); });
}

Elem t1_of(SemiringKind kind, const Scalar& s) {
  MultisetBuilder b(kind);
  b.add(Elem::star(), s);
  return Elem::ms(std::move(b).build());
}

Elem drop_unit_factor(const Elem& p) { return p.second(); }

std::string failures(const LawReport& r) {
  std::string out;
  for (const auto& l : r.results)
    if (!l.pass) out += (out.empty() ? "" : "; ") + l.law + (l.counterexample.empty() ? "" : " at " + l.counterexample);
  return out;
}

}  // namespace

ScalarHom identity_hom(SemiringKind kind) {
  return make_hom("id " + std::string(kind_name(kind)), kind, kind, [](const Scalar& s) { return s; });
}

std::vector<ScalarHom> builtin_scalar_homs() {
  using K = SemiringKind;
  std::vector<ScalarHom> out;
  for (K k : {K::Nat, K::Bool, K::Tropical, K::Rat, K::Gaussian}) out.push_back(identity_hom(k));
  for (K k : {K::Bool, K::Tropical, K::Rat, K::Gaussian}) out.push_back(canonical_hom(k));
  out.push_back(make_hom("inclusion rat->gaussian", K::Rat, K::Gaussian,
                         [](const Scalar& q) { return Scalar::gaussian(q.as_rat(), Rational(0)); }));
  out.push_back(make_hom("support rat->bool", K::Rat, K::Bool, [](const Scalar& q) { return Scalar::boolean(q.as_rat() != 0); }));
  out.push_back(make_hom("bool->tropical", K::Bool, K::Tropical, [](const Scalar& b) {
    return b.as_bool() ? Scalar::tropical(0) : Scalar::tropical_inf();
  }));
  out.push_back(make_hom("finite tropical->bool", K::Tropical, K::Bool,
                         [](const Scalar& t) { return Scalar::boolean(!t.as_tropical().is_inf()); }));
  out.push_back(make_hom("conjugation gaussian", K::Gaussian, K::Gaussian, [](const Scalar& z) {
    return Scalar::gaussian(z.as_gaussian().re, -z.as_gaussian().im);
  }));
  return out;
}

std::vector<ScalarHom> scalar_homs_from(SemiringKind source) {
  std::vector<ScalarHom> out;
  for (auto& h : builtin_scalar_homs())
    if (h.source == source) out.push_back(std::move(h));
  return out;
}

std::vector<MonoidHom> builtin_monoid_homs() {
  using K = SemiringKind;
  std::vector<MonoidHom> out;
  const auto nat_mul = builtin_monoid("nat-mul");
  const auto nat_add = builtin_monoid("nat-add");
  const auto words = builtin_monoid("free-words");
  for (K k : {K::Nat, K::Bool, K::Tropical, K::Rat, K::Gaussian}) {
    const auto S = builtin_semiring(k);
    out.push_back(MonoidHom{"canonical nat-mul->E(M_" + std::string(kind_name(k)) + ")", nat_mul, multiset_monad(k),
                            [S, k](const MonoidElem& m) {
                              return t1_of(k, canonical_from_nat(*S, std::get<Scalar>(m).as_int()));
                            }});
  }
  for (const auto& M : {nat_mul, nat_add, words})
    out.push_back(MonoidHom{"id " + M->name, M, action_monad(M),
                            [](const MonoidElem& m) { return Elem::act(m, Elem::star()); }});
  out.push_back(MonoidHom{"power of a: nat-add->free-words", nat_add, action_monad(words), [](const MonoidElem& m) {
                            const auto n = static_cast<std::size_t>(std::get<Scalar>(m).as_int());
                            return Elem::act(Word{std::string(n, 'a')}, Elem::star());
                          }});
  out.push_back(MonoidHom{"length: free-words->nat-add", words, action_monad(nat_add), [](const MonoidElem& m) {
                            const auto n = std::get<Word>(m).letters.size();
                            return Elem::act(Scalar::nat(static_cast<long>(n)), Elem::star());
                          }});
  return out;
}

SemiringHomToE into_eval_at_one(const ScalarHom& g) {
  return SemiringHomToE{g.name + " into E(M_" + std::string(kind_name(g.target)) + ")", g.source, multiset_monad(g.target),
                        [g](const Scalar& s) { return t1_of(g.target, g.fn(s)); }};
}

SemiringHomToH into_homset(const ScalarHom& g) {
  const auto R = builtin_semiring(g.target);
  return SemiringHomToH{g.name + " into H(Mat(" + std::string(kind_name(g.target)) + "))", g.source, g.target,
                        [g, R](const Scalar& s) { return ScalarMatrix(R, 1, 1, {g.fn(s)}); }};
}

LawReport check_witness(const MonoidHom& f) {
  const auto pool = monoid_pool(*f.source);
  return check_monoid_hom<MonoidElem, Elem>(*f.source, *eval_at_one_monoid(f.target), f.fn,
                                            std::span<const MonoidElem>(pool));
}

LawReport check_witness(const SemiringHomToE& f) {
  const auto S = builtin_semiring(f.source);
  const auto E = eval_at_one(f.target);
  const auto pool = scalar_pool(f.source);
  return check_semiring_hom<Scalar, Elem>(*S, *E, f.fn, std::span<const Scalar>(pool), S->has_star() && E->has_star());
}

LawReport check_witness(const SemiringHomToH& f, bool with_star) {
  const auto S = builtin_semiring(f.source);
  const auto H = homset_semiring(MatTheory<Scalar>(builtin_semiring(f.target)));
  const auto pool = scalar_pool(f.source);
  return check_semiring_hom<Scalar, ScalarMatrix>(*S, *H, f.fn, std::span<const Scalar>(pool), with_star);
}

MonadMorphism transpose_mon_up(const MonoidHom& f) {
  auto report = check_witness(f);
  if (!report.all_pass()) throw Error(ErrorCode::NotAMonoidMap, f.name + ": " + failures(report));
  const MonadPtr T = f.target;
  auto fn = f.fn;
  return MonadMorphism{"cotranspose of " + f.name, action_monad(f.source), T, [T, fn](const Elem& u) {
                         return T->fmap(drop_unit_factor, strength(*T, fn(u.act_monoid()), u.act_elem()));
                       }};
}

MonoidHom transpose_mon_down(const MonadMorphism& sigma) {
  const auto* A = dynamic_cast<const ActionMonad*>(sigma.source.get());
  if (!A) throw Error(ErrorCode::MonadMismatch, "transpose needs a morphism out of an action monad");
  auto fn = sigma.fn;
  return MonoidHom{"transpose of " + sigma.name, A->monoid_ptr(), sigma.target,
                   [fn](const MonoidElem& m) { return fn(Elem::act(m, Elem::star())); }};
}

MonadMorphism transpose_srng_up(const SemiringHomToE& f) {
  auto report = check_witness(f);
  if (!report.all_pass()) throw Error(ErrorCode::NotASemiringMap, f.name + ": " + failures(report));
  const MonadPtr T = f.target;
  auto fn = f.fn;
  return MonadMorphism{"cotranspose of " + f.name, multiset_monad(f.source), T, [T, fn](const Elem& u) {
                         Elem acc = tx_zero(*T);
                         for (const auto& [x, s] : u.as_ms().entries())
                           acc = tx_add(*T, acc, scalar_action(*T, fn(s), T->unit(x)));
                         return acc;
                       }};
}

SemiringHomToE transpose_srng_down(const MonadMorphism& sigma, SemiringKind source) {
  const auto* M = dynamic_cast<const MultisetMonad*>(sigma.source.get());
  if (!M || M->semiring_kind() != source)
    throw Error(ErrorCode::MonadMismatch, "transpose needs a morphism out of M_" + std::string(kind_name(source)));
  auto fn = sigma.fn;
  return SemiringHomToE{"transpose of " + sigma.name, source, sigma.target,
                        [fn, source](const Scalar& s) { return fn(t1_of(source, s)); }};
}

TheoryFunctor transpose_math_up(const SemiringHomToH& f, bool with_star) {
  auto report = check_witness(f, with_star);
  if (!report.all_pass()) throw Error(ErrorCode::NotASemiringMap, f.name + ": " + failures(report));
  const MatTheory<Scalar> L(builtin_semiring(f.target));
  auto fn = f.fn;
  return TheoryFunctor{"cotranspose of " + f.name, f.source, f.target, [L, fn](const ScalarMatrix& h) {
                         std::vector<ScalarMatrix> rows;
                         for (std::size_t i = 0; i < h.rows(); ++i) {
                           std::vector<ScalarMatrix> entries;
                           for (std::size_t j = 0; j < h.cols(); ++j) entries.push_back(fn(h(i, j)));
                           rows.push_back(tuple_n(L, 1, entries));
                         }
                         return cotuple_n(L, h.cols(), rows);
                       }};
}

SemiringHomToH transpose_math_down(const TheoryFunctor& F) {
  const auto S = builtin_semiring(F.source);
  auto fn = F.fn;
  return SemiringHomToH{"transpose of " + F.name, F.source, F.target,
                        [S, fn](const Scalar& s) { return fn(ScalarMatrix(S, 1, 1, {s})); }};
}

namespace {

template <class W>
const W& expect(const HomWitness& w, const char* what) {
  if (const auto* p = std::get_if<W>(&w)) return *p;
  throw Error(ErrorCode::InvalidValue, std::string("expected ") + what);
}

}  // namespace

HomWitness transpose_mon(Direction dir, const HomWitness& w) {
  if (dir == Direction::Up) return transpose_mon_up(expect<MonoidHom>(w, "a monoid map"));
  return transpose_mon_down(expect<MonadMorphism>(w, "a monad map"));
}

HomWitness transpose_srng(Direction dir, const HomWitness& w, SemiringKind source_for_down) {
  if (dir == Direction::Up) return transpose_srng_up(expect<SemiringHomToE>(w, "a semiring map into E(T)"));
  return transpose_srng_down(expect<MonadMorphism>(w, "a monad map"), source_for_down);
}

HomWitness transpose_math(Direction dir, const HomWitness& w) {
  if (dir == Direction::Up) return transpose_math_up(expect<SemiringHomToH>(w, "a semiring map into H(L)"));
  return transpose_math_down(expect<TheoryFunctor>(w, "a theory functor"));
}

LawReport check_monad_morphism(const MonadMorphism& sigma, Rng& rng, std::size_t cases) {
  const Monad& S = *sigma.source;
  const Monad& T = *sigma.target;
  SampledLaws laws;
  for (std::size_t c = 0; c < cases; ++c) {
    const auto X = FiniteCarrier::range(static_cast<std::int64_t>(1 + rng.below(5)));
    const auto Y = FiniteCarrier::range(static_cast<std::int64_t>(1 + rng.below(5)));
    const Elem u = gen_t_value(rng, S, X.elems());
    const FiniteMap h = gen_finite_map(rng, X, Y);
    const Elem x = rng.pick(X.elems());
    const Elem y = rng.pick(Y.elems());
    const Elem uu = gen_nested_t_value(rng, S, X.elems());

    laws.check("natural", sigma(S.fmap(h.fn(), u)) == T.fmap(h.fn(), sigma(u)),
               [&] { return "u = " + to_string(u); });
    laws.check("preserves-unit", sigma(S.unit(x)) == T.unit(x), [&] { return "x = " + to_string(x); });
    laws.check("preserves-mult", sigma(S.mult(uu)) == T.mult(sigma(S.fmap(sigma.fn, uu))),
               [&] { return "uu = " + to_string(uu); });
    laws.check("preserves-strength", sigma(strength(S, u, y)) == strength(T, sigma(u), y),
               [&] { return "u = " + to_string(u) + ", y = " + to_string(y); });
  }
  return laws.report();
}

LawReport check_theory_functor(const TheoryFunctor& F, Rng& rng, std::size_t cases, bool with_dagger) {
  const auto S = builtin_semiring(F.source);
  const auto R = builtin_semiring(F.target);
  SampledLaws laws;
  for (std::size_t c = 0; c < cases; ++c) {
    const std::size_t n = rng.below(4), m = 1 + rng.below(3), p = rng.below(4);
    const auto g = gen_matrix(rng, F.source, n, m);
    const auto h = gen_matrix(rng, F.source, m, p);
    const auto show = [&] { return "g = " + to_string(g) + ", h = " + to_string(h); };
    laws.check("identity", F(mat_identity(S, n)) == mat_identity(R, n), [&] { return "n = " + std::to_string(n); });
    laws.check("composition", F(mat_compose(g, h)) == mat_compose(F(g), F(h)), show);
    laws.check("coprojections",
               F(mat_coproj1(S, n, m)) == mat_coproj1(R, n, m) && F(mat_coproj2(S, n, m)) == mat_coproj2(R, n, m),
               [&] { return "n, m = " + std::to_string(n) + ", " + std::to_string(m); });
    laws.check("projections",
               F(mat_proj1(S, n, m)) == mat_proj1(R, n, m) && F(mat_proj2(S, n, m)) == mat_proj2(R, n, m),
               [&] { return "n, m = " + std::to_string(n) + ", " + std::to_string(m); });
    laws.check("zero", F(mat_zero(S, n, p)) == mat_zero(R, n, p), [&] { return "n, p = " + std::to_string(n) + ", " + std::to_string(p); });
    laws.check("tensor", F(mat_tensor(g, h)) == mat_tensor(F(g), F(h)), show);
    laws.check("symmetry", F(aleph0_embed(Aleph0Map::symmetry(n, m), S)) == aleph0_embed(Aleph0Map::symmetry(n, m), R),
               [&] { return "n, m = " + std::to_string(n) + ", " + std::to_string(m); });
    if (with_dagger) laws.check("dagger", F(mat_dagger(g)) == mat_dagger(F(g)), show);
  }
  return laws.report();
}

}  // namespace semicat
