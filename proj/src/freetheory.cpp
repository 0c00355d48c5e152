#include "semicat/freetheory.hpp"

namespace semicat {

namespace {

SemiringKind kind_of(const ScalarMatrix& m) { return m.ring()->zero.kind(); }

void check_shape(const ScalarMatrix& g, std::size_t arity) {
  if (g.rows() != 1 || g.cols() != arity)
    throw Error(ErrorCode::MalformedTerm, "term coefficient must be 1x" + std::to_string(arity) + ", got " +
                                              std::to_string(g.rows()) + "x" + std::to_string(g.cols()));
}

std::string render_row(const ScalarMatrix& g) {
  std::string out = "[";
  for (std::size_t a = 0; a < g.cols(); ++a) out += (a ? ", " : "") + to_string(g(0, a));
  return out + "]";
}

}  // namespace

FreeTerm make_term(ScalarMatrix g, std::vector<Elem> v) {
  check_shape(g, v.size());
  return FreeTerm{std::move(g), std::move(v)};
}

NestedFreeTerm make_nested_term(ScalarMatrix g, std::vector<FreeTerm> v) {
  check_shape(g, v.size());
  for (const auto& t : v) {
    check_shape(t.g, t.v.size());
    if (t.g.tag() != g.tag()) throw Error(ErrorCode::TagMismatch, "inner term over " + t.g.tag());
  }
  return NestedFreeTerm{std::move(g), std::move(v)};
}

std::string to_string(const FreeTerm& t) {
  std::string out = "k_" + std::to_string(t.arity()) + "(" + render_row(t.g) + "; ";
  for (std::size_t a = 0; a < t.v.size(); ++a) out += (a ? ", " : "") + to_string(t.v[a]);
  return out + ")";
}

std::string to_string(const NestedFreeTerm& t) {
  std::string out = "k_" + std::to_string(t.v.size()) + "(" + render_row(t.g) + "; ";
  for (std::size_t a = 0; a < t.v.size(); ++a) out += (a ? ", " : "") + to_string(t.v[a]);
  return out + ")";
}

Multiset term_normalize(const FreeTerm& t) {
  check_shape(t.g, t.v.size());
  MultisetBuilder b(kind_of(t.g));
  for (std::size_t a = 0; a < t.v.size(); ++a) b.add(t.v[a], t.g(0, a));
  return std::move(b).build();
}

FreeTerm tl_unit(SemiringKind kind, const Elem& x) {
  return FreeTerm{mat_identity(builtin_semiring(kind), 1), {x}};
}

FreeTerm tl_mult(const NestedFreeTerm& outer) {
  check_shape(outer.g, outer.v.size());
  const auto& S = outer.g.ring();
  std::size_t total = 0;
  for (const auto& t : outer.v) {
    check_shape(t.g, t.v.size());
    if (t.g.tag() != outer.g.tag()) throw Error(ErrorCode::TagMismatch, "inner term over " + t.g.tag());
    total += t.v.size();
  }
  // block-diagonal g_0 + ... + g_{i-1} : i -> total
  std::vector<Scalar> block(outer.v.size() * total, S->zero);
  std::vector<Elem> v;
  std::size_t offset = 0;
  for (std::size_t a = 0; a < outer.v.size(); ++a) {
    const auto& t = outer.v[a];
    for (std::size_t b = 0; b < t.v.size(); ++b) block[a * total + offset + b] = t.g(0, b);
    v.insert(v.end(), t.v.begin(), t.v.end());
    offset += t.v.size();
  }
  ScalarMatrix sum(S, outer.v.size(), total, std::move(block));
  return FreeTerm{mat_compose(outer.g, sum), std::move(v)};
}

FreeTerm tl_fmap(const ElemFn& f, const FreeTerm& t) {
  check_shape(t.g, t.v.size());
  std::vector<Elem> v;
  v.reserve(t.v.size());
  for (const auto& x : t.v) v.push_back(f(x));
  return FreeTerm{t.g, std::move(v)};
}

FreeTerm tl_involution(const FreeTerm& t) {
  check_shape(t.g, t.v.size());
  const auto& S = *t.g.ring();
  if (!S.has_star()) throw Error(ErrorCode::NoInvolution, S.name + " has no involution");
  return FreeTerm{mat_map(t.g, t.g.ring(), [&S](const Scalar& s) { return S.apply_star(s); }), t.v};
}

bool tl_relation_check(const Aleph0Map& f, const ScalarMatrix& g, const std::vector<Elem>& v) {
  if (g.rows() != 1 || g.cols() != f.dom())
    throw Error(ErrorCode::DimensionMismatch, "coefficient row must be 1x" + std::to_string(f.dom()));
  if (v.size() != f.cod()) throw Error(ErrorCode::DimensionMismatch, "tuple must have " + std::to_string(f.cod()) + " entries");
  FreeTerm lhs{mat_compose(g, aleph0_embed(f, g.ring())), v};
  std::vector<Elem> pulled;
  for (std::size_t a = 0; a < f.dom(); ++a) pulled.push_back(v[f(a)]);
  FreeTerm rhs{g, std::move(pulled)};
  return term_normalize(lhs) == term_normalize(rhs);
}

KleisliMap law_unit_functor(const ScalarMatrix& f) {
  const SemiringKind kind = kind_of(f);
  const auto& S = f.ring();
  std::vector<Elem> ids;
  for (std::size_t j = 0; j < f.cols(); ++j) ids.push_back(Elem::index(static_cast<std::int64_t>(j)));
  std::vector<Elem> c;
  for (std::size_t i = 0; i < f.rows(); ++i) {
    auto ki = aleph0_embed(Aleph0Map(1, f.rows(), {i}), S);
    c.push_back(Elem::ms(term_normalize(FreeTerm{mat_compose(ki, f), ids})));
  }
  return KleisliMap{multiset_monad(kind), f.rows(), f.cols(), std::move(c)};
}

}  // namespace semicat
