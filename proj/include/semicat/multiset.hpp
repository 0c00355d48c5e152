#pragma once

#include "semicat/elem.hpp"
#include "semicat/semiring.hpp"

namespace semicat {

/// M_S(f)(phi)(y) = sum of phi(x) over the preimage of y. The map must be
/// defined on the whole support of phi.
Multiset ms_fmap(const FiniteMap& f, const Multiset& phi);
Multiset ms_fmap(const ElemFn& f, const Multiset& phi);

Multiset ms_unit(const Elem& x, SemiringKind tag);

/// Flattens a multiset whose keys are multisets: x -> sum_i s_i * phi_i(x).
Multiset ms_mult(const Multiset& outer);

/// (phi, psi) -> (x,y) |-> phi(x) * psi(y)
Multiset ms_dst(const Multiset& phi, const Multiset& psi);

/// Applies the semiring involution to every multiplicity.
Multiset ms_involution(const Multiset& phi);

/// Image of a multiset under a semiring homomorphism (the monad map M(g)).
Multiset ms_change_semiring(const Multiset& phi, SemiringKind target, const std::function<Scalar(const Scalar&)>& g);

}  // namespace semicat
