#pragma once

#include <string>
#include <utility>
#include <vector>

#include "semicat/elem.hpp"
#include "semicat/matrix.hpp"
#include "semicat/monad.hpp"

namespace testing {

using namespace semicat;

inline Elem at(const char* name) { return Elem::name(name); }
inline Elem ix(std::int64_t i) { return Elem::index(i); }

inline Scalar sc(SemiringKind k, const char* text) { return parse_scalar(k, text); }
inline Scalar nat(long n) { return Scalar::nat(n); }

/// Multiset from (element, scalar text) pairs.
inline Multiset ms(SemiringKind k, std::vector<std::pair<Elem, const char*>> entries) {
  std::vector<Multiset::Entry> e;
  for (auto& [x, s] : entries) e.emplace_back(x, parse_scalar(k, s));
  return Multiset::from_entries(k, std::move(e));
}

inline Elem msv(SemiringKind k, std::vector<std::pair<Elem, const char*>> entries) {
  return Elem::ms(ms(k, std::move(entries)));
}

inline Elem word_act(const char* w, Elem x) { return Elem::act(Word{w}, std::move(x)); }

}  // namespace testing
