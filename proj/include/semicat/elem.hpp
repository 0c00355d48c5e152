#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "semicat/scalar.hpp"

namespace semicat {

class Multiset;

/// Universal, totally ordered encoding of set elements. Nested monad values
/// (multisets, action pairs) are themselves elements, so T(T(X)) is just
/// another set of Elems with decidable equality.
class Elem {
 public:
  enum class Kind : std::uint8_t { Star, Index, Name, Pair, Inl, Inr, Ms, Act };

  Elem();  // the unique element of the one-point set
  static Elem star() { return Elem(); }
  static Elem index(std::int64_t i);
  static Elem name(std::string n);
  static Elem pair(Elem a, Elem b);
  static Elem inl(Elem a);
  static Elem inr(Elem a);
  static Elem ms(Multiset m);
  static Elem act(MonoidElem m, Elem x);

  Kind kind() const;
  bool is(Kind k) const { return kind() == k; }

  std::int64_t as_index() const;
  const std::string& as_name() const;
  const Elem& first() const;   // Pair
  const Elem& second() const;  // Pair
  const Elem& inner() const;   // Inl / Inr
  const Multiset& as_ms() const;
  const MonoidElem& act_monoid() const;
  const Elem& act_elem() const;

  friend std::strong_ordering operator<=>(const Elem& a, const Elem& b);
  friend bool operator==(const Elem& a, const Elem& b) { return (a <=> b) == 0; }

 private:
  struct Node;
  explicit Elem(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  const Node& node() const { return *node_; }
  std::shared_ptr<const Node> node_;
};

/// Renders `a`, `0`, `(a,b)`, `inl a`, `star`, `{a: 2, b: 1}`, `act("ab", x)`.
std::string to_string(const Elem& e);

using ElemFn = std::function<Elem(const Elem&)>;

/// Finitely supported map Elem -> Scalar with no zero entries; keys sorted.
class Multiset {
 public:
  using Entry = std::pair<Elem, Scalar>;

  explicit Multiset(SemiringKind tag) : tag_(tag) {}

  /// Sums duplicate keys and prunes zero multiplicities.
  static Multiset from_entries(SemiringKind tag, std::vector<Entry> entries);

  SemiringKind tag() const { return tag_; }
  const std::vector<Entry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  Scalar at(const Elem& x) const;
  std::vector<Elem> support() const;

  friend std::strong_ordering operator<=>(const Multiset& a, const Multiset& b);
  friend bool operator==(const Multiset& a, const Multiset& b) { return (a <=> b) == 0; }

 private:
  friend class MultisetBuilder;
  SemiringKind tag_;
  std::vector<Entry> entries_;
};

std::string to_string(const Multiset& m);

/// Accumulates multiplicities with the tag's semiring addition.
class MultisetBuilder {
 public:
  explicit MultisetBuilder(SemiringKind tag);
  void add(const Elem& x, const Scalar& s);
  Multiset build() &&;

 private:
  SemiringKind tag_;
  std::map<Elem, Scalar> acc_;
};

/// Strictly sorted list of distinct elements.
class FiniteCarrier {
 public:
  FiniteCarrier() = default;
  explicit FiniteCarrier(std::vector<Elem> elems);

  static FiniteCarrier range(std::int64_t n);  // {0, ..., n-1}
  static FiniteCarrier names(std::initializer_list<const char*> names);
  static FiniteCarrier one() { return FiniteCarrier({Elem::star()}); }
  static FiniteCarrier sum(const FiniteCarrier& x, const FiniteCarrier& y);
  static FiniteCarrier product(const FiniteCarrier& x, const FiniteCarrier& y);

  const std::vector<Elem>& elems() const { return elems_; }
  std::size_t size() const { return elems_.size(); }
  bool contains(const Elem& e) const;

  friend bool operator==(const FiniteCarrier&, const FiniteCarrier&) = default;

 private:
  std::vector<Elem> elems_;
};

/// Explicit table for a function between finite carriers.
class FiniteMap {
 public:
  FiniteMap(FiniteCarrier dom, FiniteCarrier cod, std::map<Elem, Elem> table);
  static FiniteMap from_fn(const FiniteCarrier& dom, const FiniteCarrier& cod, const ElemFn& f);
  static FiniteMap identity(const FiniteCarrier& x);

  const FiniteCarrier& dom() const { return dom_; }
  const FiniteCarrier& cod() const { return cod_; }
  Elem operator()(const Elem& x) const;
  ElemFn fn() const;

  /// this then g
  FiniteMap then(const FiniteMap& g) const;

 private:
  FiniteCarrier dom_;
  FiniteCarrier cod_;
  std::map<Elem, Elem> table_;
};

}  // namespace semicat
