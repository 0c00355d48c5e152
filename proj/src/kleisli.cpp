#include "semicat/kleisli.hpp"

namespace semicat {

std::string to_string(const KleisliMap& f) {
  std::string out = "<" + std::to_string(f.dom) + "->" + std::to_string(f.cod) + ": ";
  for (std::size_t i = 0; i < f.components.size(); ++i) {
    if (i) out += "; ";
    out += std::to_string(i) + " |-> " + to_string(f.components[i]);
  }
  return out + ">";
}

namespace {

void check_component(const Monad& T, const Elem& u, std::size_t cod) {
  if (!T.is_value(u)) throw Error(ErrorCode::MonadMismatch, to_string(u) + " is not a value of " + T.name());
  for (const auto& x : T.support(u))
    if (!x.is(Elem::Kind::Index) || x.as_index() < 0 || static_cast<std::size_t>(x.as_index()) >= cod)
      throw Error(ErrorCode::ElementOutsideCarrier, to_string(x) + " is not in {0.." + std::to_string(cod) + "}");
}

std::size_t idx(const Elem& e) { return static_cast<std::size_t>(e.as_index()); }

Elem shift(const Elem& e, std::size_t by) { return Elem::index(e.as_index() + static_cast<std::int64_t>(by)); }

}  // namespace

KleisliMap make_kleisli(MonadPtr T, std::size_t dom, std::size_t cod, std::vector<Elem> components) {
  if (components.size() != dom)
    throw Error(ErrorCode::DimensionMismatch, "Kleisli map needs " + std::to_string(dom) + " components");
  for (const auto& u : components) check_component(*T, u, cod);
  return KleisliMap{std::move(T), dom, cod, std::move(components)};
}

void KleisliCategory::check(const Morphism& f) const {
  if (f.monad->name() != monad_->name())
    throw Error(ErrorCode::MonadMismatch, "map over " + f.monad->name() + " used in " + name());
}

KleisliMap KleisliCategory::identity(std::size_t n) const {
  std::vector<Elem> c;
  for (std::size_t j = 0; j < n; ++j) c.push_back(monad_->unit(Elem::index(static_cast<std::int64_t>(j))));
  return KleisliMap{monad_, n, n, std::move(c)};
}

KleisliMap KleisliCategory::compose(const Morphism& f, const Morphism& g) const {
  check(f);
  check(g);
  if (f.cod != g.dom)
    throw Error(ErrorCode::DimensionMismatch, "cannot compose " + std::to_string(f.dom) + "->" +
                                                  std::to_string(f.cod) + " with " + std::to_string(g.dom) + "->" +
                                                  std::to_string(g.cod));
  const ElemFn gfn = [&g](const Elem& j) { return g.components.at(idx(j)); };
  std::vector<Elem> c;
  c.reserve(f.dom);
  for (const auto& u : f.components) c.push_back(monad_->mult(monad_->fmap(gfn, u)));
  return KleisliMap{monad_, f.dom, g.cod, std::move(c)};
}

KleisliMap KleisliCategory::coproj1(std::size_t n, std::size_t m) const {
  auto id = identity(n);
  id.cod = n + m;
  return id;
}

KleisliMap KleisliCategory::coproj2(std::size_t n, std::size_t m) const {
  std::vector<Elem> c;
  for (std::size_t i = 0; i < m; ++i) c.push_back(monad_->unit(Elem::index(static_cast<std::int64_t>(n + i))));
  return KleisliMap{monad_, m, n + m, std::move(c)};
}

KleisliMap KleisliCategory::proj1(std::size_t n, std::size_t m) const {
  std::vector<Elem> c;
  for (std::size_t i = 0; i < n + m; ++i)
    c.push_back(i < n ? monad_->unit(Elem::index(static_cast<std::int64_t>(i))) : tx_zero(*monad_));
  return KleisliMap{monad_, n + m, n, std::move(c)};
}

KleisliMap KleisliCategory::proj2(std::size_t n, std::size_t m) const {
  std::vector<Elem> c;
  for (std::size_t i = 0; i < n + m; ++i)
    c.push_back(i >= n ? monad_->unit(Elem::index(static_cast<std::int64_t>(i - n))) : tx_zero(*monad_));
  return KleisliMap{monad_, n + m, m, std::move(c)};
}

KleisliMap KleisliCategory::cotuple(const Morphism& f, const Morphism& g) const {
  check(f);
  check(g);
  if (f.cod != g.cod) throw Error(ErrorCode::DimensionMismatch, "cotuple needs a common codomain");
  std::vector<Elem> c = f.components;
  c.insert(c.end(), g.components.begin(), g.components.end());
  return KleisliMap{monad_, f.dom + g.dom, f.cod, std::move(c)};
}

KleisliMap KleisliCategory::tuple(const Morphism& f, const Morphism& g) const {
  check(f);
  check(g);
  if (f.dom != g.dom) throw Error(ErrorCode::DimensionMismatch, "tuple needs a common domain");
  const std::size_t p = f.cod;
  const ElemFn join = [p](const Elem& e) { return e.is(Elem::Kind::Inl) ? e.inner() : shift(e.inner(), p); };
  std::vector<Elem> c;
  for (std::size_t i = 0; i < f.dom; ++i)
    c.push_back(monad_->fmap(join, bc_inv(*monad_, f.components[i], g.components[i])));
  return KleisliMap{monad_, f.dom, f.cod + g.cod, std::move(c)};
}

KleisliMap KleisliCategory::zero(std::size_t n, std::size_t m) const {
  return KleisliMap{monad_, n, m, std::vector<Elem>(n, tx_zero(*monad_))};
}

KleisliMap KleisliCategory::tensor(const Morphism& f, const Morphism& g) const {
  check(f);
  check(g);
  if (!monad_->flags().commutative) throw Error(ErrorCode::NotCommutative, monad_->name() + " is not commutative");
  const std::size_t p = f.cod, q = g.cod;
  const ElemFn join = [p, q](const Elem& pr) {
    return Elem::index(static_cast<std::int64_t>(coord_join(p, q, idx(pr.first()), idx(pr.second()))));
  };
  std::vector<Elem> c;
  for (std::size_t r = 0; r < f.dom * g.dom; ++r) {
    auto [i, i2] = coord_split(f.dom, g.dom, r);
    c.push_back(monad_->fmap(join, double_strength(*monad_, f.components[i], g.components[i2])));
  }
  return KleisliMap{monad_, f.dom * g.dom, p * q, std::move(c)};
}

KleisliMap KleisliCategory::embed(const Aleph0Map& f) const {
  std::vector<Elem> c;
  for (std::size_t i = 0; i < f.dom(); ++i) c.push_back(monad_->unit(Elem::index(static_cast<std::int64_t>(f(i)))));
  return KleisliMap{monad_, f.dom(), f.cod(), std::move(c)};
}

bool KleisliCategory::has_dagger() const {
  auto fl = monad_->flags();
  return fl.involutive && fl.additive && fl.commutative;
}

KleisliMap KleisliCategory::dagger(const Morphism& f) const {
  check(f);
  if (!has_dagger()) throw Error(ErrorCode::NoInvolution, name() + " has no dagger");
  const Monad& T = *monad_;
  std::vector<Elem> c;
  for (std::size_t j = 0; j < f.cod; ++j) {
    // selector m -> T(1): j |-> eta(star), everything else |-> 0
    const ElemFn select = [&](const Elem& k) { return idx(k) == j ? T.unit(Elem::star()) : tx_zero(T); };
    Elem acc = tx_zero(T);
    for (std::size_t i = 0; i < f.dom; ++i) {
      Elem coeff = T.mult(T.fmap(select, f.components[i]));
      acc = tx_add(T, acc, scalar_action(T, T.involution(coeff), T.unit(Elem::index(static_cast<std::int64_t>(i)))));
    }
    c.push_back(std::move(acc));
  }
  return KleisliMap{monad_, f.cod, f.dom, std::move(c)};
}

KleisliMap kl_id(const MonadPtr& T, std::size_t n) { return KleisliCategory(T).identity(n); }

KleisliMap kl_compose(const KleisliMap& f, const KleisliMap& g) { return KleisliCategory(f.monad).compose(f, g); }

KleisliMap kl_tensor(const KleisliMap& f, const KleisliMap& g) { return KleisliCategory(f.monad).tensor(f, g); }

std::vector<Elem> bc_m(const Monad& T, const Elem& u, std::size_t m) {
  if (m == 0) return {};
  if (m == 1) return {T.fmap([](const Elem&) { return Elem::star(); }, u)};
  const auto last = static_cast<std::int64_t>(m - 1);
  Elem split = T.fmap([last](const Elem& e) { return e.as_index() < last ? Elem::inl(e) : Elem::inr(Elem::star()); }, u);
  auto [front, back] = bc(T, split);
  auto parts = bc_m(T, front, m - 1);
  parts.push_back(std::move(back));
  return parts;
}

Elem bc_m_inv(const Monad& T, const std::vector<Elem>& parts) {
  const std::size_t m = parts.size();
  if (m == 0) return tx_zero(T);
  if (m == 1) return T.fmap([](const Elem&) { return Elem::index(0); }, parts[0]);
  std::vector<Elem> front(parts.begin(), parts.end() - 1);
  Elem merged = bc_inv(T, bc_m_inv(T, front), parts.back());
  const auto last = static_cast<std::int64_t>(m - 1);
  return T.fmap([last](const Elem& e) { return e.is(Elem::Kind::Inl) ? e.inner() : Elem::index(last); }, merged);
}

Matrix<Elem> theta(const KleisliMap& g) {
  const MonadPtr& T = g.monad;
  auto ering = eval_at_one(T);
  std::vector<Elem> entries;
  entries.reserve(g.dom * g.cod);
  for (const auto& u : g.components) {
    auto parts = bc_m(*T, u, g.cod);
    for (auto& p : parts) entries.push_back(std::move(p));
  }
  return Matrix<Elem>(ering, g.dom, g.cod, std::move(entries));
}

KleisliMap xi(const MonadPtr& T, const Matrix<Elem>& h) {
  auto ering = eval_at_one(T);
  if (h.tag() != ering->name) throw Error(ErrorCode::TagMismatch, "matrix over " + h.tag() + ", expected " + ering->name);
  std::vector<Elem> c;
  for (std::size_t i = 0; i < h.rows(); ++i) {
    std::vector<Elem> row;
    for (std::size_t j = 0; j < h.cols(); ++j) row.push_back(h(i, j));
    c.push_back(bc_m_inv(*T, row));
  }
  return KleisliMap{T, h.rows(), h.cols(), std::move(c)};
}

ScalarMatrix to_scalar_matrix(const Matrix<Elem>& m, SemiringKind kind) {
  return mat_map(m, builtin_semiring(kind), [kind](const Elem& e) { return t1_to_scalar(e, kind); });
}

Matrix<Elem> from_scalar_matrix(const ScalarMatrix& m, const SemiringPtr<Elem>& ering) {
  const SemiringKind kind = m.ring()->zero.kind();
  return mat_map(m, ering, [kind](const Scalar& s) { return scalar_to_t1(kind, s); });
}

}  // namespace semicat
