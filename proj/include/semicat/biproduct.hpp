#pragma once

#include <concepts>
#include <memory>
#include <vector>

#include "semicat/semiring.hpp"

namespace semicat {

/// A category whose objects are naturals and where (+, 0) is a biproduct.
/// `compose(f, g)` means f first, then g.
template <class C>
concept BiproductCategory = requires(const C& c, const typename C::Morphism& f, std::size_t n) {
  { c.name() } -> std::convertible_to<std::string>;
  { c.dom(f) } -> std::convertible_to<std::size_t>;
  { c.cod(f) } -> std::convertible_to<std::size_t>;
  { c.identity(n) } -> std::same_as<typename C::Morphism>;
  { c.compose(f, f) } -> std::same_as<typename C::Morphism>;
  { c.coproj1(n, n) } -> std::same_as<typename C::Morphism>;
  { c.coproj2(n, n) } -> std::same_as<typename C::Morphism>;
  { c.proj1(n, n) } -> std::same_as<typename C::Morphism>;
  { c.proj2(n, n) } -> std::same_as<typename C::Morphism>;
  { c.tuple(f, f) } -> std::same_as<typename C::Morphism>;
  { c.cotuple(f, f) } -> std::same_as<typename C::Morphism>;
  { c.zero(n, n) } -> std::same_as<typename C::Morphism>;
  { c.has_dagger() } -> std::convertible_to<bool>;
};

/// f (+) g = [kappa_1 . f, kappa_2 . g]
template <BiproductCategory C>
typename C::Morphism direct_sum(const C& c, const typename C::Morphism& f, const typename C::Morphism& g) {
  const std::size_t p = c.cod(f), q = c.cod(g);
  return c.cotuple(c.compose(f, c.coproj1(p, q)), c.compose(g, c.coproj2(p, q)));
}

/// f + g = codiagonal . (f (+) g) . diagonal
template <BiproductCategory C>
typename C::Morphism hom_add(const C& c, const typename C::Morphism& f, const typename C::Morphism& g) {
  const std::size_t n = c.dom(f), m = c.cod(f);
  if (c.dom(g) != n || c.cod(g) != m)
    throw Error(ErrorCode::DimensionMismatch, "hom addition needs parallel morphisms");
  auto diagonal = c.tuple(c.identity(n), c.identity(n));
  auto codiagonal = c.cotuple(c.identity(m), c.identity(m));
  return c.compose(c.compose(diagonal, direct_sum(c, f, g)), codiagonal);
}

/// The unique map n -> 0 -> m.
template <BiproductCategory C>
typename C::Morphism hom_zero(const C& c, std::size_t n, std::size_t m) {
  return c.compose(c.zero(n, 0), c.zero(0, m));
}

/// <f_0, ..., f_{k-1}> : n -> m_0 + ... + m_{k-1}, nested to the left.
template <BiproductCategory C>
typename C::Morphism tuple_n(const C& c, std::size_t dom, const std::vector<typename C::Morphism>& fs) {
  if (fs.empty()) return c.zero(dom, 0);
  auto acc = fs.front();
  for (std::size_t k = 1; k < fs.size(); ++k) acc = c.tuple(acc, fs[k]);
  return acc;
}

/// [f_0, ..., f_{k-1}] : n_0 + ... + n_{k-1} -> cod
template <BiproductCategory C>
typename C::Morphism cotuple_n(const C& c, std::size_t cod, const std::vector<typename C::Morphism>& fs) {
  if (fs.empty()) return c.zero(0, cod);
  auto acc = fs.front();
  for (std::size_t k = 1; k < fs.size(); ++k) acc = c.cotuple(acc, fs[k]);
  return acc;
}

/// H(L) = L(1,1): addition through the biproduct composite, multiplication
/// by composition, star by the dagger when L has one.
template <BiproductCategory C>
SemiringPtr<typename C::Morphism> homset_semiring(const C& c) {
  using M = typename C::Morphism;
  auto S = std::make_shared<Semiring<M>>(Semiring<M>{
      "H(" + c.name() + ")",
      [c](const M& a, const M& b) { return hom_add(c, a, b); },
      hom_zero(c, 1, 1),
      [c](const M& a, const M& b) { return c.compose(a, b); },
      c.identity(1),
      std::nullopt,
  });
  if (c.has_dagger()) S->star = [c](const M& a) { return c.dagger(a); };
  return S;
}

}  // namespace semicat
