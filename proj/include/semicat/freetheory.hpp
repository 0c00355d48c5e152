#pragma once

#include <vector>

#include "semicat/kleisli.hpp"
#include "semicat/matrix.hpp"
#include "semicat/multiset.hpp"

namespace semicat {

/// A representative k_i(g; v) of T_L(X) for L = Mat(S): g is a 1 x i row
/// and v an i-tuple of elements.
struct FreeTerm {
  ScalarMatrix g;
  std::vector<Elem> v;

  std::size_t arity() const { return v.size(); }
  friend bool operator==(const FreeTerm&, const FreeTerm&) = default;
};

/// A term whose tuple entries are themselves terms (an element of T_L T_L X).
struct NestedFreeTerm {
  ScalarMatrix g;
  std::vector<FreeTerm> v;
};

FreeTerm make_term(ScalarMatrix g, std::vector<Elem> v);
NestedFreeTerm make_nested_term(ScalarMatrix g, std::vector<FreeTerm> v);

std::string to_string(const FreeTerm& t);
std::string to_string(const NestedFreeTerm& t);

/// The canonical representative of the class of t: x |-> sum of g(0,a) over
/// the a with v(a) = x.
Multiset term_normalize(const FreeTerm& t);

/// k_1(id_1; x)
FreeTerm tl_unit(SemiringKind kind, const Elem& x);
/// k_j((g_0 + ... + g_{i-1}) . g; v_0 ++ ... ++ v_{i-1})
FreeTerm tl_mult(const NestedFreeTerm& outer);
FreeTerm tl_fmap(const ElemFn& f, const FreeTerm& t);
/// Replaces every coefficient by its star.
FreeTerm tl_involution(const FreeTerm& t);

/// Compares the normal forms of k_m(f . g; v) and k_i(g; v . f).
bool tl_relation_check(const Aleph0Map& f, const ScalarMatrix& g, const std::vector<Elem>& v);

/// Mat(S) -> Kl_N(M_S): component i is the normal form of k_m(f . kappa_i; id).
KleisliMap law_unit_functor(const ScalarMatrix& f);

}  // namespace semicat
