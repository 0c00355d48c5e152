#include "semicat/gen.hpp"

#include "semicat/multiset.hpp"

namespace semicat {

std::uint64_t derive_seed(std::uint64_t seed, std::string_view label) {
  // FNV-1a over the label, folded into the seed with a splitmix step.
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : label) h = (h ^ c) * 1099511628211ULL;
  std::uint64_t z = seed + h + 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

Scalar gen_scalar(Rng& rng, SemiringKind kind) {
  if (rng.chance(2)) return rng.pick(scalar_pool(kind));
  switch (kind) {
    case SemiringKind::Nat:
      return Scalar::nat(rng.between(0, 12));
    case SemiringKind::Int:
      return Scalar::integer(rng.between(-6, 6));
    case SemiringKind::Bool:
      return Scalar::boolean(rng.chance(2));
    case SemiringKind::Tropical:
      return rng.chance(5) ? Scalar::tropical_inf() : Scalar::tropical(rng.between(-4, 12));
    case SemiringKind::Rat:
      return Scalar::rat(rng.between(0, 9), rng.between(1, 5));
    case SemiringKind::Gaussian:
      return Scalar::gaussian(Rational(rng.between(-4, 4), rng.between(1, 3)),
                              Rational(rng.between(-4, 4), rng.between(1, 3)));
  }
  throw Error(ErrorCode::UnknownSemiring, "unhandled semiring kind");
}

MonoidElem gen_monoid_elem(Rng& rng, const Monoid<MonoidElem>& M) {
  if (std::holds_alternative<Word>(M.unit)) {
    static const std::string alphabet = "abc";
    std::string w;
    const std::size_t len = rng.below(4);
    for (std::size_t k = 0; k < len; ++k) w += alphabet[rng.below(alphabet.size())];
    return Word{w};
  }
  return Scalar::nat(rng.between(0, 9));
}

std::vector<Elem> index_carrier(std::size_t n) {
  std::vector<Elem> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(Elem::index(static_cast<std::int64_t>(i)));
  return out;
}

Multiset gen_multiset(Rng& rng, SemiringKind kind, const std::vector<Elem>& carrier, std::size_t max_support) {
  MultisetBuilder b(kind);
  if (carrier.empty()) return std::move(b).build();
  const std::size_t k = rng.below(max_support + 1);
  for (std::size_t n = 0; n < k; ++n) b.add(rng.pick(carrier), gen_scalar(rng, kind));
  return std::move(b).build();
}

Elem gen_t_value(Rng& rng, const Monad& T, const std::vector<Elem>& carrier) {
  if (const auto* ms = dynamic_cast<const MultisetMonad*>(&T))
    return Elem::ms(gen_multiset(rng, ms->semiring_kind(), carrier));
  if (const auto* act = dynamic_cast<const ActionMonad*>(&T)) {
    if (carrier.empty()) throw Error(ErrorCode::InvalidValue, "A(M) has no values over the empty set");
    return Elem::act(gen_monoid_elem(rng, act->monoid()), rng.pick(carrier));
  }
  throw Error(ErrorCode::InvalidValue, "no generator for monad " + T.name());
}

Elem gen_nested_t_value(Rng& rng, const Monad& T, const std::vector<Elem>& carrier) {
  std::vector<Elem> inner;
  const std::size_t k = 1 + rng.below(3);
  for (std::size_t n = 0; n < k; ++n) inner.push_back(gen_t_value(rng, T, carrier));
  return gen_t_value(rng, T, inner);
}

FiniteMap gen_finite_map(Rng& rng, const FiniteCarrier& dom, const FiniteCarrier& cod) {
  std::map<Elem, Elem> table;
  for (const auto& x : dom.elems()) table.emplace(x, rng.pick(cod.elems()));
  return FiniteMap(dom, cod, std::move(table));
}

Aleph0Map gen_aleph0_map(Rng& rng, std::size_t dom, std::size_t cod) {
  std::vector<std::size_t> t;
  for (std::size_t i = 0; i < dom; ++i) t.push_back(rng.below(cod));
  return Aleph0Map(dom, cod, std::move(t));
}

ScalarMatrix gen_matrix(Rng& rng, SemiringKind kind, std::size_t rows, std::size_t cols) {
  return ScalarMatrix::generate(builtin_semiring(kind), rows, cols,
                                [&](std::size_t, std::size_t) { return gen_scalar(rng, kind); });
}

KleisliMap gen_kleisli(Rng& rng, const MonadPtr& T, std::size_t dom, std::size_t cod) {
  const auto carrier = index_carrier(cod);
  std::vector<Elem> c;
  for (std::size_t i = 0; i < dom; ++i) c.push_back(gen_t_value(rng, *T, carrier));
  return make_kleisli(T, dom, cod, std::move(c));
}

}  // namespace semicat
