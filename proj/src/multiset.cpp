#include "semicat/multiset.hpp"

namespace semicat {

Multiset ms_fmap(const FiniteMap& f, const Multiset& phi) {
  for (const auto& [x, s] : phi.entries())
    if (!f.dom().contains(x))
      throw Error(ErrorCode::ElementOutsideCarrier, to_string(x) + " is not in the domain of the map");
  return ms_fmap(f.fn(), phi);
}

Multiset ms_fmap(const ElemFn& f, const Multiset& phi) {
  MultisetBuilder b(phi.tag());
  for (const auto& [x, s] : phi.entries()) b.add(f(x), s);
  return std::move(b).build();
}

Multiset ms_unit(const Elem& x, SemiringKind tag) {
  return Multiset::from_entries(tag, {{x, builtin_semiring(tag)->one}});
}

Multiset ms_mult(const Multiset& outer) {
  const auto S = builtin_semiring(outer.tag());
  MultisetBuilder b(outer.tag());
  for (const auto& [key, s] : outer.entries()) {
    if (!key.is(Elem::Kind::Ms))
      throw Error(ErrorCode::KeyNotMultiset, "key " + to_string(key) + " is not a multiset");
    const Multiset& inner = key.as_ms();
    if (inner.tag() != outer.tag())
      throw Error(ErrorCode::TagMismatch, "inner multiset over " + std::string(kind_name(inner.tag())));
    for (const auto& [x, t] : inner.entries()) b.add(x, S->mul(s, t));
  }
  return std::move(b).build();
}

Multiset ms_dst(const Multiset& phi, const Multiset& psi) {
  if (phi.tag() != psi.tag()) throw Error(ErrorCode::TagMismatch, "dst of multisets over different semirings");
  const auto S = builtin_semiring(phi.tag());
  MultisetBuilder b(phi.tag());
  for (const auto& [x, s] : phi.entries())
    for (const auto& [y, t] : psi.entries()) b.add(Elem::pair(x, y), S->mul(s, t));
  return std::move(b).build();
}

Multiset ms_involution(const Multiset& phi) {
  const auto S = builtin_semiring(phi.tag());
  MultisetBuilder b(phi.tag());
  for (const auto& [x, s] : phi.entries()) b.add(x, S->apply_star(s));
  return std::move(b).build();
}

Multiset ms_change_semiring(const Multiset& phi, SemiringKind target,
                            const std::function<Scalar(const Scalar&)>& g) {
  MultisetBuilder b(target);
  for (const auto& [x, s] : phi.entries()) b.add(x, g(s));
  return std::move(b).build();
}

}  // namespace semicat
