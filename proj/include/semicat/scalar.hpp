#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "semicat/error.hpp"

namespace semicat {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Identifies which semiring a scalar belongs to. `Int` exists only so that
/// deliberately broken descriptors (subtraction over Z) can be expressed.
enum class SemiringKind : std::uint8_t { Nat, Int, Bool, Tropical, Rat, Gaussian };

std::string_view kind_name(SemiringKind kind);
std::optional<SemiringKind> kind_from_name(std::string_view name);

struct Gaussian {
  Rational re;
  Rational im;
};

/// Tropical value: an integer or the distinct infinity token.
struct Tropical {
  std::optional<BigInt> value;  // nullopt is +infinity
  bool is_inf() const { return !value.has_value(); }
};

/// An exact value of one of the built-in semirings. Construction normalizes
/// eagerly, so structural equality is value equality.
class Scalar {
 public:
  static Scalar nat(BigInt n);
  static Scalar integer(BigInt n);
  static Scalar boolean(bool b);
  static Scalar tropical(BigInt n);
  static Scalar tropical_inf();
  static Scalar rat(Rational q);
  static Scalar rat(long num, long den) { return rat(Rational(num, den)); }
  static Scalar gaussian(Rational re, Rational im);

  Scalar() : Scalar(nat(0)) {}

  SemiringKind kind() const { return kind_; }

  const BigInt& as_int() const;  // Nat or Int
  bool as_bool() const;
  const Tropical& as_tropical() const;
  const Rational& as_rat() const;
  const Gaussian& as_gaussian() const;

  friend bool operator==(const Scalar& a, const Scalar& b);
  friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b);

 private:
  using Payload = std::variant<BigInt, bool, Tropical, Rational, Gaussian>;
  Scalar(SemiringKind kind, Payload payload) : kind_(kind), payload_(std::move(payload)) {}

  SemiringKind kind_;
  Payload payload_;
};

std::string to_string(const Scalar& s);

/// Parses the scalar text grammar for the given semiring: naturals `12`,
/// integers `-3`, rationals `3/4`, gaussian `1/2+3/4i` (`i` alone is the
/// imaginary unit), tropical `inf` or a signed integer, bool `0`/`1`.
Scalar parse_scalar(SemiringKind kind, std::string_view text);

/// Element of the free monoid over a character alphabet.
struct Word {
  std::string letters;
  friend auto operator<=>(const Word&, const Word&) = default;
  friend bool operator==(const Word&, const Word&) = default;
};

/// Monoid elements used by action monads: either a scalar (e.g. the
/// multiplicative monoid of N) or a word.
using MonoidElem = std::variant<Scalar, Word>;

std::string to_string(const Word& w);
std::string to_string(const MonoidElem& m);
std::strong_ordering compare(const MonoidElem& a, const MonoidElem& b);

std::strong_ordering compare_big(const BigInt& a, const BigInt& b);
std::strong_ordering compare_rat(const Rational& a, const Rational& b);

}  // namespace semicat
