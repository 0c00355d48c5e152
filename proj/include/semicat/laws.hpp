#pragma once

#include <map>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "semicat/semiring.hpp"

namespace semicat {

struct LawResult {
  std::string law;
  bool pass = true;
  std::string counterexample;
};

struct LawReport {
  std::vector<LawResult> results;

  bool all_pass() const {
    for (const auto& r : results)
      if (!r.pass) return false;
    return true;
  }
  const LawResult* find(std::string_view law) const {
    for (const auto& r : results)
      if (r.law == law) return &r;
    return nullptr;
  }
  void add(std::string law, bool pass, std::string cex = {}) {
    results.push_back({std::move(law), pass, std::move(cex)});
  }
};

/// Collects randomized checks law by law, keeping the first failure of each.
class SampledLaws {
 public:
  template <class Cex>
  void check(const std::string& law, bool ok, Cex&& counterexample) {
    auto it = index_.find(law);
    if (it == index_.end()) {
      it = index_.emplace(law, report_.results.size()).first;
      report_.add(law, true);
    }
    auto& r = report_.results[it->second];
    if (!ok && r.pass) {
      r.pass = false;
      r.counterexample = counterexample();
    }
  }
  /// Attaches detail to a law without changing its verdict.
  void note(const std::string& law, std::string detail) {
    check(law, true, [] { return std::string(); });
    report_.results[index_.at(law)].counterexample = std::move(detail);
  }
  const LawReport& report() const { return report_; }

 private:
  LawReport report_;
  std::map<std::string, std::size_t> index_;
};

namespace detail {

template <class V>
std::string show_args(std::initializer_list<const V*> args) {
  std::string out = "(";
  bool first = true;
  for (const V* v : args) {
    if (!first) out += ", ";
    out += to_string(*v);
    first = false;
  }
  return out + ")";
}

// Runs pred over all triples and records the first failure.
template <class V, class Pred>
void check_triples(LawReport& report, std::string law, std::span<const V> samples, Pred pred) {
  for (const auto& a : samples)
    for (const auto& b : samples)
      for (const auto& c : samples)
        if (!pred(a, b, c)) {
          report.add(std::move(law), false, "s,t,r = " + show_args<V>({&a, &b, &c}));
          return;
        }
  report.add(std::move(law), true);
}

}  // namespace detail

/// Exhaustive check of the commutative-semiring axioms (and involution
/// axioms when a star is present) over all triples drawn from `samples`.
template <class V>
LawReport check_semiring_laws(const Semiring<V>& S, std::span<const V> samples) {
  if (samples.empty()) throw Error(ErrorCode::InvalidValue, "empty sample set");
  LawReport r;
  const auto& add = S.add;
  const auto& mul = S.mul;
  detail::check_triples<V>(r, "add-commutative", samples,
                           [&](auto& s, auto& t, auto&) { return add(s, t) == add(t, s); });
  detail::check_triples<V>(r, "add-associative", samples, [&](auto& s, auto& t, auto& u) {
    return add(add(s, t), u) == add(s, add(t, u));
  });
  detail::check_triples<V>(r, "add-unit", samples, [&](auto& s, auto&, auto&) { return add(s, S.zero) == s; });
  detail::check_triples<V>(r, "mul-commutative", samples,
                           [&](auto& s, auto& t, auto&) { return mul(s, t) == mul(t, s); });
  detail::check_triples<V>(r, "mul-associative", samples, [&](auto& s, auto& t, auto& u) {
    return mul(mul(s, t), u) == mul(s, mul(t, u));
  });
  detail::check_triples<V>(r, "mul-unit", samples, [&](auto& s, auto&, auto&) { return mul(s, S.one) == s; });
  detail::check_triples<V>(r, "mul-zero", samples, [&](auto& s, auto&, auto&) { return mul(s, S.zero) == S.zero; });
  detail::check_triples<V>(r, "distributive", samples, [&](auto& s, auto& t, auto& u) {
    return mul(s, add(t, u)) == add(mul(s, t), mul(s, u));
  });
  if (S.star) {
    const auto& st = *S.star;
    detail::check_triples<V>(r, "star-add", samples,
                             [&](auto& s, auto& t, auto&) { return st(add(s, t)) == add(st(s), st(t)); });
    detail::check_triples<V>(r, "star-mul", samples,
                             [&](auto& s, auto& t, auto&) { return st(mul(s, t)) == mul(st(s), st(t)); });
    detail::check_triples<V>(r, "star-involutive", samples, [&](auto& s, auto&, auto&) { return st(st(s)) == s; });
    r.add("star-zero", st(S.zero) == S.zero, st(S.zero) == S.zero ? "" : "0* = " + to_string(st(S.zero)));
    r.add("star-one", st(S.one) == S.one, st(S.one) == S.one ? "" : "1* = " + to_string(st(S.one)));
  }
  return r;
}

template <class V>
LawReport check_monoid_laws(const Monoid<V>& M, std::span<const V> samples) {
  if (samples.empty()) throw Error(ErrorCode::InvalidValue, "empty sample set");
  LawReport r;
  const auto& op = M.op;
  detail::check_triples<V>(r, "associative", samples,
                           [&](auto& s, auto& t, auto& u) { return op(op(s, t), u) == op(s, op(t, u)); });
  detail::check_triples<V>(r, "left-unit", samples, [&](auto& s, auto&, auto&) { return op(M.unit, s) == s; });
  detail::check_triples<V>(r, "right-unit", samples, [&](auto& s, auto&, auto&) { return op(s, M.unit) == s; });
  if (M.commutative)
    detail::check_triples<V>(r, "commutative", samples, [&](auto& s, auto& t, auto&) { return op(s, t) == op(t, s); });
  return r;
}

/// Semiring homomorphism check on samples: preserves 0, 1, +, * (and star
/// when both sides carry one and `check_star` is set).
template <class A, class B, class F>
LawReport check_semiring_hom(const Semiring<A>& S, const Semiring<B>& R, F f, std::span<const A> samples,
                             bool check_star = false) {
  LawReport r;
  r.add("hom-zero", f(S.zero) == R.zero);
  r.add("hom-one", f(S.one) == R.one);
  detail::check_triples<A>(r, "hom-add", samples,
                           [&](auto& s, auto& t, auto&) { return f(S.add(s, t)) == R.add(f(s), f(t)); });
  detail::check_triples<A>(r, "hom-mul", samples,
                           [&](auto& s, auto& t, auto&) { return f(S.mul(s, t)) == R.mul(f(s), f(t)); });
  if (check_star)
    detail::check_triples<A>(r, "hom-star", samples,
                             [&](auto& s, auto&, auto&) { return f(S.apply_star(s)) == R.apply_star(f(s)); });
  return r;
}

template <class A, class B, class F>
LawReport check_monoid_hom(const Monoid<A>& M, const Monoid<B>& N, F f, std::span<const A> samples) {
  LawReport r;
  r.add("hom-unit", f(M.unit) == N.unit);
  detail::check_triples<A>(r, "hom-op", samples,
                           [&](auto& s, auto& t, auto&) { return f(M.op(s, t)) == N.op(f(s), f(t)); });
  return r;
}

std::string render(const LawReport& report);

}  // namespace semicat
