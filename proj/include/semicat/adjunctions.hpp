#pragma once

#include <functional>
#include <variant>

#include "semicat/biproduct.hpp"
#include "semicat/derived.hpp"
#include "semicat/gen.hpp"
#include "semicat/laws.hpp"
#include "semicat/matrix.hpp"

namespace semicat {

/// A monoid map M -> E(T) = T(1).
struct MonoidHom {
  std::string name;
  MonoidPtr<MonoidElem> source;
  MonadPtr target;
  std::function<Elem(const MonoidElem&)> fn;
};

/// A natural transformation between monads, given by one formula that works
/// at every carrier (values carry their own elements).
struct MonadMorphism {
  std::string name;
  MonadPtr source;
  MonadPtr target;
  std::function<Elem(const Elem&)> fn;

  Elem operator()(const Elem& u) const { return fn(u); }
};

/// A map between built-in semirings.
struct ScalarHom {
  std::string name;
  SemiringKind source;
  SemiringKind target;
  std::function<Scalar(const Scalar&)> fn;
  bool preserves_star = false;
};

/// A semiring map S -> E(T).
struct SemiringHomToE {
  std::string name;
  SemiringKind source;
  MonadPtr target;
  std::function<Elem(const Scalar&)> fn;
};

/// A semiring map S -> H(Mat(R)) = Mat(R)(1,1).
struct SemiringHomToH {
  std::string name;
  SemiringKind source;
  SemiringKind target;
  std::function<ScalarMatrix(const Scalar&)> fn;
};

/// A functor Mat(S) -> Mat(R), identity on objects.
struct TheoryFunctor {
  std::string name;
  SemiringKind source;
  SemiringKind target;
  std::function<ScalarMatrix(const ScalarMatrix&)> fn;

  ScalarMatrix operator()(const ScalarMatrix& m) const { return fn(m); }
};

using HomWitness = std::variant<MonoidHom, MonadMorphism, SemiringHomToE, SemiringHomToH, TheoryFunctor>;

/// Up: algebraic map to its cotranspose; Down: back to the algebraic map.
enum class Direction { Up, Down };

/// The semiring maps between built-ins used as samples.
std::vector<ScalarHom> builtin_scalar_homs();
std::vector<ScalarHom> scalar_homs_from(SemiringKind source);
ScalarHom identity_hom(SemiringKind kind);

/// Sample monoid maps into E(T) for various T.
std::vector<MonoidHom> builtin_monoid_homs();

/// s |-> {star: g(s)} : S -> E(M_R)
SemiringHomToE into_eval_at_one(const ScalarHom& g);
/// s |-> [[g(s)]] : S -> H(Mat(R))
SemiringHomToH into_homset(const ScalarHom& g);

LawReport check_witness(const MonoidHom& f);
LawReport check_witness(const SemiringHomToE& f);
LawReport check_witness(const SemiringHomToH& f, bool with_star = false);

/// A |-> E(T): f-bar(m, x) = T(lambda)(st(f(m), x)). Throws NotAMonoidMap
/// when f fails its preservation checks.
MonadMorphism transpose_mon_up(const MonoidHom& f);
/// sigma-bar(m) = sigma_1(m, star)
MonoidHom transpose_mon_down(const MonadMorphism& sigma);

/// f-bar(sum s_i x_i) = sum f(s_i) * eta(x_i). Throws NotASemiringMap.
MonadMorphism transpose_srng_up(const SemiringHomToE& f);
/// sigma-bar(s) = sigma_1({star: s})
SemiringHomToE transpose_srng_down(const MonadMorphism& sigma, SemiringKind source);

/// f-bar(h) = the n-cotuple of m-tuples of f(h(i,j)). Throws NotASemiringMap.
TheoryFunctor transpose_math_up(const SemiringHomToH& f, bool with_star = false);
/// F-bar(s) = F([s])
SemiringHomToH transpose_math_down(const TheoryFunctor& F);

HomWitness transpose_mon(Direction dir, const HomWitness& w);
HomWitness transpose_srng(Direction dir, const HomWitness& w, SemiringKind source_for_down = SemiringKind::Nat);
HomWitness transpose_math(Direction dir, const HomWitness& w);

/// Naturality, eta, mu and strength preservation on sampled values.
LawReport check_monad_morphism(const MonadMorphism& sigma, Rng& rng, std::size_t cases);

/// Identity, composition, structure maps, tensor and (optionally) dagger.
LawReport check_theory_functor(const TheoryFunctor& F, Rng& rng, std::size_t cases, bool with_dagger = false);

}  // namespace semicat
