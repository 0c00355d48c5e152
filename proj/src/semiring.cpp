#include "semicat/semiring.hpp"

#include <map>
#include <mutex>

#include "semicat/laws.hpp"

namespace semicat {

namespace {

void expect_kind(const Scalar& s, SemiringKind kind) {
  if (s.kind() != kind)
    throw Error(ErrorCode::TagMismatch, "expected " + std::string(kind_name(kind)) + " scalar, got " +
                                            std::string(kind_name(s.kind())) + " " + to_string(s));
}

Scalar identity_star(const Scalar& s) { return s; }

Semiring<Scalar> make_nat() {
  constexpr auto K = SemiringKind::Nat;
  return {"nat",
          [](const Scalar& a, const Scalar& b) {
            expect_kind(a, K), expect_kind(b, K);
            return Scalar::nat(a.as_int() + b.as_int());
          },
          Scalar::nat(0),
          [](const Scalar& a, const Scalar& b) {
            expect_kind(a, K), expect_kind(b, K);
            return Scalar::nat(a.as_int() * b.as_int());
          },
          Scalar::nat(1),
          [](const Scalar& a) {
            expect_kind(a, K);
            return identity_star(a);
          }};
}

Semiring<Scalar> make_bool() {
  constexpr auto K = SemiringKind::Bool;
  return {"bool",
          [](const Scalar& a, const Scalar& b) {
            expect_kind(a, K), expect_kind(b, K);
            return Scalar::boolean(a.as_bool() || b.as_bool());
          },
          Scalar::boolean(false),
          [](const Scalar& a, const Scalar& b) {
            expect_kind(a, K), expect_kind(b, K);
            return Scalar::boolean(a.as_bool() && b.as_bool());
          },
          Scalar::boolean(true),
          [](const Scalar& a) {
            expect_kind(a, K);
            return identity_star(a);
          }};
}

Semiring<Scalar> make_tropical() {
  constexpr auto K = SemiringKind::Tropical;
  return {"tropical",
          [](const Scalar& a, const Scalar& b) {
            expect_kind(a, K), expect_kind(b, K);
            return (b < a) ? b : a;  // inf is the greatest scalar
          },
          Scalar::tropical_inf(),
          [](const Scalar& a, const Scalar& b) {
            expect_kind(a, K), expect_kind(b, K);
            const auto& x = a.as_tropical();
            const auto& y = b.as_tropical();
            if (x.is_inf() || y.is_inf()) return Scalar::tropical_inf();
            return Scalar::tropical(*x.value + *y.value);
          },
          Scalar::tropical(0),
          [](const Scalar& a) {
            expect_kind(a, K);
            return identity_star(a);
          }};
}

Semiring<Scalar> make_rat() {
  constexpr auto K = SemiringKind::Rat;
  return {"rat",
          [](const Scalar& a, const Scalar& b) {
            expect_kind(a, K), expect_kind(b, K);
            return Scalar::rat(a.as_rat() + b.as_rat());
          },
          Scalar::rat(0),
          [](const Scalar& a, const Scalar& b) {
            expect_kind(a, K), expect_kind(b, K);
            return Scalar::rat(a.as_rat() * b.as_rat());
          },
          Scalar::rat(1),
          [](const Scalar& a) {
            expect_kind(a, K);
            return identity_star(a);
          }};
}

Semiring<Scalar> make_gaussian() {
  constexpr auto K = SemiringKind::Gaussian;
  return {"gaussian",
          [](const Scalar& a, const Scalar& b) {
            expect_kind(a, K), expect_kind(b, K);
            const auto& x = a.as_gaussian();
            const auto& y = b.as_gaussian();
            return Scalar::gaussian(x.re + y.re, x.im + y.im);
          },
          Scalar::gaussian(0, 0),
          [](const Scalar& a, const Scalar& b) {
            expect_kind(a, K), expect_kind(b, K);
            const auto& x = a.as_gaussian();
            const auto& y = b.as_gaussian();
            return Scalar::gaussian(x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re);
          },
          Scalar::gaussian(1, 0),
          [](const Scalar& a) {
            expect_kind(a, K);
            return Scalar::gaussian(a.as_gaussian().re, -a.as_gaussian().im);
          }};
}

}  // namespace

SemiringPtr<Scalar> builtin_semiring(SemiringKind kind) {
  static const auto nat = std::make_shared<const Semiring<Scalar>>(make_nat());
  static const auto boolean = std::make_shared<const Semiring<Scalar>>(make_bool());
  static const auto tropical = std::make_shared<const Semiring<Scalar>>(make_tropical());
  static const auto rat = std::make_shared<const Semiring<Scalar>>(make_rat());
  static const auto gaussian = std::make_shared<const Semiring<Scalar>>(make_gaussian());
  switch (kind) {
    case SemiringKind::Nat: return nat;
    case SemiringKind::Bool: return boolean;
    case SemiringKind::Tropical: return tropical;
    case SemiringKind::Rat: return rat;
    case SemiringKind::Gaussian: return gaussian;
    case SemiringKind::Int: break;
  }
  throw Error(ErrorCode::UnknownSemiring, "no built-in semiring over " + std::string(kind_name(kind)));
}

SemiringKind semiring_kind(std::string_view name) {
  auto kind = kind_from_name(name);
  if (!kind || *kind == SemiringKind::Int)
    throw Error(ErrorCode::UnknownSemiring, "unknown semiring '" + std::string(name) + "'");
  return *kind;
}

SemiringPtr<Scalar> builtin_semiring(std::string_view name) { return builtin_semiring(semiring_kind(name)); }

std::vector<SemiringKind> builtin_semiring_kinds() {
  return {SemiringKind::Nat, SemiringKind::Bool, SemiringKind::Tropical, SemiringKind::Rat, SemiringKind::Gaussian};
}

std::vector<Scalar> scalar_pool(SemiringKind kind) {
  switch (kind) {
    case SemiringKind::Nat:
      return {Scalar::nat(0), Scalar::nat(1), Scalar::nat(2), Scalar::nat(3), Scalar::nat(7)};
    case SemiringKind::Int:
      return {Scalar::integer(-2), Scalar::integer(0), Scalar::integer(1), Scalar::integer(2)};
    case SemiringKind::Bool:
      return {Scalar::boolean(false), Scalar::boolean(true)};
    case SemiringKind::Tropical:
      return {Scalar::tropical_inf(), Scalar::tropical(0), Scalar::tropical(1), Scalar::tropical(4),
              Scalar::tropical(-2)};
    case SemiringKind::Rat:
      return {Scalar::rat(0, 1), Scalar::rat(1, 1), Scalar::rat(1, 2), Scalar::rat(2, 3), Scalar::rat(3, 1)};
    case SemiringKind::Gaussian:
      return {Scalar::gaussian(0, 0), Scalar::gaussian(1, 0), Scalar::gaussian(0, 1),
              Scalar::gaussian(0, -1), Scalar::gaussian(1, 1), Scalar::gaussian(Rational(1, 2), -2),
              Scalar::gaussian(-1, 0)};
  }
  return {};
}

Scalar scalar_eval(const ScalarSemiring& desc, ScalarOp op, std::span<const Scalar> args) {
  auto need = [&](std::size_t n) {
    if (args.size() != n)
      throw Error(ErrorCode::InvalidValue, "operation expects " + std::to_string(n) + " arguments");
  };
  switch (op) {
    case ScalarOp::Add: need(2); return desc.add(args[0], args[1]);
    case ScalarOp::Mul: need(2); return desc.mul(args[0], args[1]);
    case ScalarOp::Star: need(1); return desc.apply_star(args[0]);
  }
  throw Error(ErrorCode::InvalidValue, "unknown operation");
}

Scalar canonical_from_nat(const ScalarSemiring& desc, const BigInt& n) {
  // Repeated doubling keeps this cheap for large n; ordering of the sum is
  // irrelevant since + is associative and commutative.
  Scalar acc = desc.zero;
  Scalar power = desc.one;
  BigInt k = n;
  while (k > 0) {
    if ((k & 1) != 0) acc = desc.add(acc, power);
    power = desc.add(power, power);
    k >>= 1;
  }
  return acc;
}

namespace {

MonoidElem word_op(const MonoidElem& a, const MonoidElem& b) {
  const auto* x = std::get_if<Word>(&a);
  const auto* y = std::get_if<Word>(&b);
  if (!x || !y) throw Error(ErrorCode::MonoidMismatch, "free-words expects words");
  return Word{x->letters + y->letters};
}

const Scalar& expect_nat(const MonoidElem& m) {
  const auto* s = std::get_if<Scalar>(&m);
  if (!s || s->kind() != SemiringKind::Nat)
    throw Error(ErrorCode::MonoidMismatch, "expected a natural number, got " + to_string(m));
  return *s;
}

}  // namespace

MonoidPtr<MonoidElem> multiplicative_monoid(SemiringKind kind) {
  auto S = builtin_semiring(kind);
  auto m = std::make_shared<Monoid<MonoidElem>>();
  m->name = std::string(kind_name(kind)) + "-mul";
  m->unit = S->one;
  m->commutative = true;
  m->op = [S](const MonoidElem& a, const MonoidElem& b) -> MonoidElem {
    const auto* x = std::get_if<Scalar>(&a);
    const auto* y = std::get_if<Scalar>(&b);
    if (!x || !y) throw Error(ErrorCode::MonoidMismatch, S->name + "-mul expects scalars");
    try {
      return S->mul(*x, *y);
    } catch (const Error& e) {
      throw Error(ErrorCode::MonoidMismatch, e.what());
    }
  };
  return m;
}

MonoidPtr<MonoidElem> builtin_monoid(std::string_view name) {
  if (name == "nat-mul") return multiplicative_monoid(SemiringKind::Nat);
  if (name == "nat-add") {
    auto m = std::make_shared<Monoid<MonoidElem>>();
    m->name = "nat-add";
    m->unit = Scalar::nat(0);
    m->commutative = true;
    m->op = [](const MonoidElem& a, const MonoidElem& b) -> MonoidElem {
      return Scalar::nat(expect_nat(a).as_int() + expect_nat(b).as_int());
    };
    return m;
  }
  if (name == "free-words") {
    auto m = std::make_shared<Monoid<MonoidElem>>();
    m->name = "free-words";
    m->unit = Word{};
    m->commutative = false;
    m->op = word_op;
    return m;
  }
  throw Error(ErrorCode::UnknownSemiring, "unknown monoid '" + std::string(name) + "'");
}

std::vector<std::string> builtin_monoid_names() { return {"nat-mul", "nat-add", "free-words"}; }

std::vector<MonoidElem> monoid_pool(const Monoid<MonoidElem>& m) {
  if (std::holds_alternative<Word>(m.unit))
    return {Word{""}, Word{"a"}, Word{"b"}, Word{"ab"}, Word{"ba"}, Word{"cd"}};
  const auto& unit = std::get<Scalar>(m.unit);
  std::vector<MonoidElem> out;
  for (const auto& s : scalar_pool(unit.kind())) out.emplace_back(s);
  return out;
}

std::string render(const LawReport& report) {
  std::ostringstream os;
  for (const auto& r : report.results) {
    os << (r.pass ? "PASS " : "FAIL ") << r.law << "\n";
    if (!r.pass && !r.counterexample.empty()) os << "  counterexample: " << r.counterexample << "\n";
  }
  return os.str();
}

}  // namespace semicat
