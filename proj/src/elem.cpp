#include "semicat/elem.hpp"

#include <algorithm>

#include "semicat/semiring.hpp"

namespace semicat {

struct Elem::Node {
  Kind kind = Kind::Star;
  std::int64_t index = 0;
  std::string name;
  std::vector<Elem> children;
  std::shared_ptr<const Multiset> ms;
  std::shared_ptr<const MonoidElem> monoid;
};

Elem::Elem() : node_(std::make_shared<const Node>()) {}

Elem Elem::index(std::int64_t i) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Index;
  n->index = i;
  return Elem(std::move(n));
}

Elem Elem::name(std::string s) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Name;
  n->name = std::move(s);
  return Elem(std::move(n));
}

Elem Elem::pair(Elem a, Elem b) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Pair;
  n->children = {std::move(a), std::move(b)};
  return Elem(std::move(n));
}

Elem Elem::inl(Elem a) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Inl;
  n->children = {std::move(a)};
  return Elem(std::move(n));
}

Elem Elem::inr(Elem a) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Inr;
  n->children = {std::move(a)};
  return Elem(std::move(n));
}

Elem Elem::ms(Multiset m) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Ms;
  n->ms = std::make_shared<const Multiset>(std::move(m));
  return Elem(std::move(n));
}

Elem Elem::act(MonoidElem m, Elem x) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Act;
  n->monoid = std::make_shared<const MonoidElem>(std::move(m));
  n->children = {std::move(x)};
  return Elem(std::move(n));
}

Elem::Kind Elem::kind() const { return node().kind; }

namespace {

[[noreturn]] void wrong_kind(const Elem& e, const char* want) {
  throw Error(ErrorCode::InvalidValue, "element " + to_string(e) + " is not " + want);
}

}  // namespace

std::int64_t Elem::as_index() const {
  if (!is(Kind::Index)) wrong_kind(*this, "an index");
  return node().index;
}
const std::string& Elem::as_name() const {
  if (!is(Kind::Name)) wrong_kind(*this, "a name");
  return node().name;
}
const Elem& Elem::first() const {
  if (!is(Kind::Pair)) wrong_kind(*this, "a pair");
  return node().children[0];
}
const Elem& Elem::second() const {
  if (!is(Kind::Pair)) wrong_kind(*this, "a pair");
  return node().children[1];
}
const Elem& Elem::inner() const {
  if (!is(Kind::Inl) && !is(Kind::Inr)) wrong_kind(*this, "a coproduct injection");
  return node().children[0];
}
const Multiset& Elem::as_ms() const {
  if (!is(Kind::Ms)) wrong_kind(*this, "a multiset");
  return *node().ms;
}
const MonoidElem& Elem::act_monoid() const {
  if (!is(Kind::Act)) wrong_kind(*this, "an action pair");
  return *node().monoid;
}
const Elem& Elem::act_elem() const {
  if (!is(Kind::Act)) wrong_kind(*this, "an action pair");
  return node().children[0];
}

std::strong_ordering operator<=>(const Elem& a, const Elem& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  const auto& x = a.node();
  const auto& y = b.node();
  if (x.kind != y.kind) return x.kind <=> y.kind;
  switch (x.kind) {
    case Elem::Kind::Star:
      return std::strong_ordering::equal;
    case Elem::Kind::Index:
      return x.index <=> y.index;
    case Elem::Kind::Name:
      return x.name <=> y.name;
    case Elem::Kind::Pair:
    case Elem::Kind::Inl:
    case Elem::Kind::Inr:
      for (std::size_t k = 0; k < x.children.size(); ++k) {
        auto c = x.children[k] <=> y.children[k];
        if (c != 0) return c;
      }
      return std::strong_ordering::equal;
    case Elem::Kind::Ms:
      return *x.ms <=> *y.ms;
    case Elem::Kind::Act: {
      auto c = compare(*x.monoid, *y.monoid);
      if (c != 0) return c;
      return x.children[0] <=> y.children[0];
    }
  }
  return std::strong_ordering::equal;
}

std::string to_string(const Elem& e) {
  switch (e.kind()) {
    case Elem::Kind::Star: return "star";
    case Elem::Kind::Index: return std::to_string(e.as_index());
    case Elem::Kind::Name: return e.as_name();
    case Elem::Kind::Pair: return "(" + to_string(e.first()) + "," + to_string(e.second()) + ")";
    case Elem::Kind::Inl: return "inl " + to_string(e.inner());
    case Elem::Kind::Inr: return "inr " + to_string(e.inner());
    case Elem::Kind::Ms: return to_string(e.as_ms());
    case Elem::Kind::Act: return "act(" + to_string(e.act_monoid()) + ", " + to_string(e.act_elem()) + ")";
  }
  return "?";
}

Multiset Multiset::from_entries(SemiringKind tag, std::vector<Entry> entries) {
  MultisetBuilder b(tag);
  for (auto& [x, s] : entries) b.add(x, s);
  return std::move(b).build();
}

Scalar Multiset::at(const Elem& x) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), x,
                             [](const Entry& e, const Elem& k) { return e.first < k; });
  if (it != entries_.end() && it->first == x) return it->second;
  return builtin_semiring(tag_)->zero;
}

std::vector<Elem> Multiset::support() const {
  std::vector<Elem> out;
  out.reserve(entries_.size());
  for (const auto& e : entries_) out.push_back(e.first);
  return out;
}

std::strong_ordering operator<=>(const Multiset& a, const Multiset& b) {
  if (a.tag_ != b.tag_) return a.tag_ <=> b.tag_;
  const std::size_t n = std::min(a.entries_.size(), b.entries_.size());
  for (std::size_t k = 0; k < n; ++k) {
    auto c = a.entries_[k].first <=> b.entries_[k].first;
    if (c != 0) return c;
    c = a.entries_[k].second <=> b.entries_[k].second;
    if (c != 0) return c;
  }
  return a.entries_.size() <=> b.entries_.size();
}

std::string to_string(const Multiset& m) {
  std::string out = "{";
  bool first = true;
  for (const auto& [x, s] : m.entries()) {
    if (!first) out += ", ";
    out += to_string(x) + ": " + to_string(s);
    first = false;
  }
  return out + "}";
}

MultisetBuilder::MultisetBuilder(SemiringKind tag) : tag_(tag) {}

void MultisetBuilder::add(const Elem& x, const Scalar& s) {
  if (s.kind() != tag_)
    throw Error(ErrorCode::TagMismatch, "multiplicity " + to_string(s) + " is not a " + std::string(kind_name(tag_)) +
                                            " scalar");
  auto it = acc_.find(x);
  if (it == acc_.end()) acc_.emplace(x, s);
  else it->second = builtin_semiring(tag_)->add(it->second, s);
}

Multiset MultisetBuilder::build() && {
  const Scalar zero = builtin_semiring(tag_)->zero;
  std::vector<Multiset::Entry> entries;
  entries.reserve(acc_.size());
  for (auto& [x, s] : acc_)
    if (s != zero) entries.emplace_back(x, s);
  // std::map iteration is already sorted and duplicate-free.
  Multiset out(tag_);
  out.entries_ = std::move(entries);
  return out;
}

FiniteCarrier::FiniteCarrier(std::vector<Elem> elems) : elems_(std::move(elems)) {
  std::sort(elems_.begin(), elems_.end());
  elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
}

FiniteCarrier FiniteCarrier::range(std::int64_t n) {
  std::vector<Elem> v;
  for (std::int64_t i = 0; i < n; ++i) v.push_back(Elem::index(i));
  return FiniteCarrier(std::move(v));
}

FiniteCarrier FiniteCarrier::names(std::initializer_list<const char*> names) {
  std::vector<Elem> v;
  for (const char* n : names) v.push_back(Elem::name(n));
  return FiniteCarrier(std::move(v));
}

FiniteCarrier FiniteCarrier::sum(const FiniteCarrier& x, const FiniteCarrier& y) {
  std::vector<Elem> v;
  for (const auto& e : x.elems_) v.push_back(Elem::inl(e));
  for (const auto& e : y.elems_) v.push_back(Elem::inr(e));
  return FiniteCarrier(std::move(v));
}

FiniteCarrier FiniteCarrier::product(const FiniteCarrier& x, const FiniteCarrier& y) {
  std::vector<Elem> v;
  for (const auto& a : x.elems_)
    for (const auto& b : y.elems_) v.push_back(Elem::pair(a, b));
  return FiniteCarrier(std::move(v));
}

bool FiniteCarrier::contains(const Elem& e) const { return std::binary_search(elems_.begin(), elems_.end(), e); }

FiniteMap::FiniteMap(FiniteCarrier dom, FiniteCarrier cod, std::map<Elem, Elem> table)
    : dom_(std::move(dom)), cod_(std::move(cod)), table_(std::move(table)) {
  for (const auto& x : dom_.elems()) {
    auto it = table_.find(x);
    if (it == table_.end())
      throw Error(ErrorCode::ElementOutsideCarrier, "map undefined on " + to_string(x));
    if (!cod_.contains(it->second))
      throw Error(ErrorCode::ElementOutsideCarrier, "image " + to_string(it->second) + " outside codomain");
  }
  if (table_.size() != dom_.size())
    throw Error(ErrorCode::ElementOutsideCarrier, "map table has entries outside its domain");
}

FiniteMap FiniteMap::from_fn(const FiniteCarrier& dom, const FiniteCarrier& cod, const ElemFn& f) {
  std::map<Elem, Elem> t;
  for (const auto& x : dom.elems()) t.emplace(x, f(x));
  return FiniteMap(dom, cod, std::move(t));
}

FiniteMap FiniteMap::identity(const FiniteCarrier& x) {
  return from_fn(x, x, [](const Elem& e) { return e; });
}

Elem FiniteMap::operator()(const Elem& x) const {
  auto it = table_.find(x);
  if (it == table_.end()) throw Error(ErrorCode::ElementOutsideCarrier, to_string(x) + " is outside the domain");
  return it->second;
}

ElemFn FiniteMap::fn() const {
  return [self = *this](const Elem& x) { return self(x); };
}

FiniteMap FiniteMap::then(const FiniteMap& g) const {
  if (!(cod_ == g.dom_)) throw Error(ErrorCode::CarrierMismatch, "codomain does not match domain");
  return from_fn(dom_, g.cod_, [&](const Elem& x) { return g((*this)(x)); });
}

}  // namespace semicat
