#include "semicat/scalar.hpp"

#include <cctype>

namespace semicat {

std::string_view kind_name(SemiringKind kind) {
  switch (kind) {
    case SemiringKind::Nat: return "nat";
    case SemiringKind::Int: return "int";
    case SemiringKind::Bool: return "bool";
    case SemiringKind::Tropical: return "tropical";
    case SemiringKind::Rat: return "rat";
    case SemiringKind::Gaussian: return "gaussian";
  }
  return "?";
}

std::optional<SemiringKind> kind_from_name(std::string_view name) {
  for (auto k : {SemiringKind::Nat, SemiringKind::Int, SemiringKind::Bool, SemiringKind::Tropical,
                 SemiringKind::Rat, SemiringKind::Gaussian}) {
    if (kind_name(k) == name) return k;
  }
  return std::nullopt;
}

std::strong_ordering compare_big(const BigInt& a, const BigInt& b) {
  if (a < b) return std::strong_ordering::less;
  if (b < a) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::strong_ordering compare_rat(const Rational& a, const Rational& b) {
  if (a < b) return std::strong_ordering::less;
  if (b < a) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Scalar Scalar::nat(BigInt n) {
  if (n < 0) throw Error(ErrorCode::InvalidValue, "natural number must be non-negative");
  return Scalar(SemiringKind::Nat, std::move(n));
}

Scalar Scalar::integer(BigInt n) { return Scalar(SemiringKind::Int, std::move(n)); }

Scalar Scalar::boolean(bool b) { return Scalar(SemiringKind::Bool, b); }

Scalar Scalar::tropical(BigInt n) { return Scalar(SemiringKind::Tropical, Tropical{std::move(n)}); }

Scalar Scalar::tropical_inf() { return Scalar(SemiringKind::Tropical, Tropical{}); }

Scalar Scalar::rat(Rational q) {
  if (q < 0) throw Error(ErrorCode::InvalidValue, "non-negative rational expected");
  return Scalar(SemiringKind::Rat, std::move(q));
}

Scalar Scalar::gaussian(Rational re, Rational im) {
  return Scalar(SemiringKind::Gaussian, Gaussian{std::move(re), std::move(im)});
}

const BigInt& Scalar::as_int() const { return std::get<BigInt>(payload_); }
bool Scalar::as_bool() const { return std::get<bool>(payload_); }
const Tropical& Scalar::as_tropical() const { return std::get<Tropical>(payload_); }
const Rational& Scalar::as_rat() const { return std::get<Rational>(payload_); }
const Gaussian& Scalar::as_gaussian() const { return std::get<Gaussian>(payload_); }

bool operator==(const Scalar& a, const Scalar& b) { return (a <=> b) == 0; }

std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
  if (a.kind_ != b.kind_) return a.kind_ <=> b.kind_;
  switch (a.kind_) {
    case SemiringKind::Nat:
    case SemiringKind::Int:
      return compare_big(a.as_int(), b.as_int());
    case SemiringKind::Bool:
      return a.as_bool() <=> b.as_bool();
    case SemiringKind::Tropical: {
      const auto& x = a.as_tropical();
      const auto& y = b.as_tropical();
      if (x.is_inf() || y.is_inf()) return (x.is_inf() ? 1 : 0) <=> (y.is_inf() ? 1 : 0);
      return compare_big(*x.value, *y.value);
    }
    case SemiringKind::Rat:
      return compare_rat(a.as_rat(), b.as_rat());
    case SemiringKind::Gaussian: {
      auto c = compare_rat(a.as_gaussian().re, b.as_gaussian().re);
      if (c != 0) return c;
      return compare_rat(a.as_gaussian().im, b.as_gaussian().im);
    }
  }
  return std::strong_ordering::equal;
}

namespace {

std::string rat_text(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

[[noreturn]] void bad(std::string_view text, std::string_view why) {
  throw Error(ErrorCode::ParseError, "cannot parse scalar '" + std::string(text) + "': " + std::string(why));
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

BigInt parse_signed(std::string_view s, std::string_view whole) {
  bool neg = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    neg = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) bad(whole, "expected an integer");
  BigInt v{std::string(s)};
  return neg ? BigInt(-v) : v;
}

Rational parse_rational(std::string_view s, std::string_view whole) {
  auto slash = s.find('/');
  if (slash == std::string_view::npos) return Rational(parse_signed(s, whole));
  BigInt num = parse_signed(s.substr(0, slash), whole);
  std::string_view den_text = s.substr(slash + 1);
  if (!all_digits(den_text)) bad(whole, "expected a positive denominator");
  BigInt den(std::string{den_text});
  if (den == 0) bad(whole, "zero denominator");
  return Rational(num, den);
}

// Imaginary coefficient text: "", "+", "-" stand for 1, 1, -1.
Rational parse_imag_coeff(std::string_view s, std::string_view whole) {
  if (s.empty() || s == "+") return Rational(1);
  if (s == "-") return Rational(-1);
  return parse_rational(s, whole);
}

Scalar parse_gaussian(std::string_view text) {
  if (text.empty()) bad(text, "empty");
  if (text.back() != 'i') return Scalar::gaussian(parse_rational(text, text), 0);
  std::string_view body = text.substr(0, text.size() - 1);
  // Split at the last sign that is not the leading character.
  std::size_t split = std::string_view::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if (body[k] == '+' || body[k] == '-') {
      split = k;
      break;
    }
  }
  if (split == std::string_view::npos) return Scalar::gaussian(0, parse_imag_coeff(body, text));
  return Scalar::gaussian(parse_rational(body.substr(0, split), text),
                          parse_imag_coeff(body.substr(split), text));
}

}  // namespace

std::string to_string(const Scalar& s) {
  switch (s.kind()) {
    case SemiringKind::Nat:
    case SemiringKind::Int:
      return s.as_int().str();
    case SemiringKind::Bool:
      return s.as_bool() ? "1" : "0";
    case SemiringKind::Tropical:
      return s.as_tropical().is_inf() ? "inf" : s.as_tropical().value->str();
    case SemiringKind::Rat:
      return rat_text(s.as_rat());
    case SemiringKind::Gaussian: {
      const auto& g = s.as_gaussian();
      if (g.im == 0) return rat_text(g.re);
      std::string im;
      if (g.im == 1) im = "i";
      else if (g.im == -1) im = "-i";
      else im = rat_text(g.im) + "i";
      if (g.re == 0) return im;
      if (g.im > 0) im = "+" + im;
      return rat_text(g.re) + im;
    }
  }
  return "?";
}

Scalar parse_scalar(SemiringKind kind, std::string_view text) {
  switch (kind) {
    case SemiringKind::Nat:
      if (!all_digits(text)) bad(text, "expected a natural number");
      return Scalar::nat(BigInt(std::string(text)));
    case SemiringKind::Int:
      return Scalar::integer(parse_signed(text, text));
    case SemiringKind::Bool:
      if (text == "0") return Scalar::boolean(false);
      if (text == "1") return Scalar::boolean(true);
      bad(text, "expected 0 or 1");
    case SemiringKind::Tropical:
      if (text == "inf") return Scalar::tropical_inf();
      return Scalar::tropical(parse_signed(text, text));
    case SemiringKind::Rat: {
      Rational q = parse_rational(text, text);
      if (q < 0) bad(text, "negative rational");
      return Scalar::rat(q);
    }
    case SemiringKind::Gaussian:
      return parse_gaussian(text);
  }
  bad(text, "unknown semiring");
}

std::string to_string(const Word& w) { return "\"" + w.letters + "\""; }

std::string to_string(const MonoidElem& m) {
  return std::visit([](const auto& v) { return to_string(v); }, m);
}

std::strong_ordering compare(const MonoidElem& a, const MonoidElem& b) {
  if (a.index() != b.index()) return a.index() <=> b.index();
  if (a.index() == 0) return std::get<Scalar>(a) <=> std::get<Scalar>(b);
  return std::get<Word>(a) <=> std::get<Word>(b);
}

}  // namespace semicat
