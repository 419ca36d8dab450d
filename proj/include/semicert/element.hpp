#pragma once

/**
 * @file element.hpp
 * @brief Scalars of the four built-in semifields and their arithmetic.
 *
 * Carriers:
 *   - boolean          ({0,1}, or, and)
 *   - tropical         (Q ∪ {inf}, min, +); zero is inf, one is the rational 0
 *   - nonneg_rational  (Q≥0, +, ·)
 *   - rational         (Q, +, ·)
 *
 * All payloads are exact. Elements are immutable values; equality is
 * structural equality of the reduced fraction (inf equals only inf).
 */

#include <cctype>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "semicert/error.hpp"

namespace semicert {

using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

enum class Tag : std::uint8_t { boolean, tropical, nonneg_rational, rational };

constexpr std::string_view to_string(Tag tag) noexcept {
  switch (tag) {
    case Tag::boolean: return "boolean";
    case Tag::tropical: return "tropical";
    case Tag::nonneg_rational: return "nonneg-rational";
    case Tag::rational: return "rational";
  }
  return "?";
}

inline Tag parse_tag(std::string_view text) {
  if (text == "boolean") return Tag::boolean;
  if (text == "tropical") return Tag::tropical;
  if (text == "nonneg-rational") return Tag::nonneg_rational;
  if (text == "rational") return Tag::rational;
  throw error(errc::invalid_argument, "unknown semiring '" + std::string(text) + "'");
}

constexpr bool is_idempotent(Tag tag) noexcept { return tag == Tag::boolean || tag == Tag::tropical; }
constexpr bool is_zero_sum_free(Tag tag) noexcept { return tag != Tag::rational; }

class Element {
 public:
  static Element zero(Tag tag) {
    return tag == Tag::tropical ? Element(tag, Rational(0), true) : Element(tag, Rational(0), false);
  }
  static Element one(Tag tag) {
    return tag == Tag::tropical ? Element(tag, Rational(0), false) : Element(tag, Rational(1), false);
  }

  static Element boolean(bool bit) { return Element(Tag::boolean, Rational(bit ? 1 : 0), false); }
  static Element tropical(Rational value) { return Element(Tag::tropical, std::move(value), false); }
  static Element tropical_infinity() { return Element(Tag::tropical, Rational(0), true); }
  static Element nonneg(Rational value) {
    if (value < 0) throw error(errc::invalid_argument, "nonneg-rational payload must be >= 0");
    return Element(Tag::nonneg_rational, std::move(value), false);
  }
  static Element rational(Rational value) { return Element(Tag::rational, std::move(value), false); }

  /// The carrier's embedding of a plain number: for tropical this is the
  /// rational payload itself (so numeral 1 is not the identity 1_S).
  static Element numeral(Tag tag, const Rational& value) {
    switch (tag) {
      case Tag::boolean:
        if (value != 0 && value != 1) throw error(errc::invalid_argument, "boolean numeral must be 0 or 1");
        return boolean(value == 1);
      case Tag::tropical: return tropical(value);
      case Tag::nonneg_rational: return nonneg(value);
      case Tag::rational: return rational(value);
    }
    throw error(errc::invalid_argument, "unknown tag");
  }

  Tag tag() const noexcept { return tag_; }
  bool is_infinite() const noexcept { return infinite_; }
  /// Payload; meaningless for tropical infinity.
  const Rational& value() const noexcept { return value_; }

  bool is_zero() const { return tag_ == Tag::tropical ? infinite_ : value_ == 0; }
  bool is_one() const { return !infinite_ && value_ == (tag_ == Tag::tropical ? 0 : 1); }

  /// Same payload reinterpreted in another exact fraction carrier
  /// (rational <-> nonneg_rational).
  Element retagged(Tag target) const {
    if (tag_ == target) return *this;
    const bool fractions = (tag_ == Tag::rational || tag_ == Tag::nonneg_rational) &&
                           (target == Tag::rational || target == Tag::nonneg_rational);
    if (!fractions) throw error(errc::tag_mismatch, "cannot retag between these carriers");
    return numeral(target, value_);
  }

  friend bool operator==(const Element& a, const Element& b) {
    if (a.tag_ != b.tag_ || a.infinite_ != b.infinite_) return false;
    return a.infinite_ || a.value_ == b.value_;
  }

 private:
  Element(Tag tag, Rational value, bool infinite) : tag_(tag), value_(std::move(value)), infinite_(infinite) {}

  Tag tag_;
  Rational value_;
  bool infinite_;
};

namespace detail {

inline void require_same_tag(const Element& a, const Element& b) {
  if (a.tag() != b.tag()) {
    throw error(errc::tag_mismatch,
                std::string(to_string(a.tag())) + " vs " + std::string(to_string(b.tag())));
  }
}

}  // namespace detail

inline Element add(const Element& a, const Element& b) {
  detail::require_same_tag(a, b);
  switch (a.tag()) {
    case Tag::boolean: return Element::boolean(!a.is_zero() || !b.is_zero());
    case Tag::tropical:
      if (a.is_infinite()) return b;
      if (b.is_infinite()) return a;
      return a.value() <= b.value() ? a : b;
    case Tag::nonneg_rational: return Element::nonneg(a.value() + b.value());
    case Tag::rational: return Element::rational(a.value() + b.value());
  }
  throw error(errc::invalid_argument, "unknown tag");
}

inline Element mul(const Element& a, const Element& b) {
  detail::require_same_tag(a, b);
  switch (a.tag()) {
    case Tag::boolean: return Element::boolean(!a.is_zero() && !b.is_zero());
    case Tag::tropical:
      if (a.is_infinite() || b.is_infinite()) return Element::tropical_infinity();
      return Element::tropical(a.value() + b.value());
    case Tag::nonneg_rational: return Element::nonneg(a.value() * b.value());
    case Tag::rational: return Element::rational(a.value() * b.value());
  }
  throw error(errc::invalid_argument, "unknown tag");
}

inline Element inv(const Element& a) {
  if (a.is_zero()) throw error(errc::invert_zero, "the additive identity has no inverse");
  switch (a.tag()) {
    case Tag::boolean: return a;
    case Tag::tropical: return Element::tropical(-a.value());
    case Tag::nonneg_rational: return Element::nonneg(1 / a.value());
    case Tag::rational: return Element::rational(1 / a.value());
  }
  throw error(errc::invalid_argument, "unknown tag");
}

inline Element operator+(const Element& a, const Element& b) { return add(a, b); }
inline Element operator*(const Element& a, const Element& b) { return mul(a, b); }

/// Natural order p >= q, i.e. p + q = p. Only an order on idempotent
/// carriers, but evaluated as the raw predicate everywhere.
inline bool nat_geq(const Element& p, const Element& q) { return add(p, q) == p; }

/// An element lambda with 1 + lambda != 1: take a canonical a outside {0,1};
/// if 1 + a = 1 then a^{-1} qualifies instead.
inline Element element_not_below_one(Tag tag) {
  if (tag == Tag::boolean) throw error(errc::too_few_elements, "the boolean carrier has only two elements");
  const Element a = tag == Tag::tropical ? Element::numeral(tag, 1) : Element::numeral(tag, 2);
  const Element one = Element::one(tag);
  return add(one, a) != one ? a : inv(a);
}

// ---- token grammar ---------------------------------------------------------

inline std::string to_string(const Rational& q) {
  const Integer num = boost::multiprecision::numerator(q);
  const Integer den = boost::multiprecision::denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

/// Canonical token: `0|1`, reduced `p/q` or integer, `inf` for tropical zero.
inline std::string to_string(const Element& e) {
  if (e.is_infinite()) return "inf";
  return to_string(e.value());
}

inline std::ostream& operator<<(std::ostream& os, const Element& e) { return os << to_string(e); }

namespace detail {

inline bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace detail

/// Optional sign, then an integer or `p/q` (any p/q on input, q != 0).
/// Returns false on malformed input.
inline bool parse_rational(std::string_view token, Rational& out) {
  bool negative = false;
  if (!token.empty() && (token.front() == '+' || token.front() == '-')) {
    negative = token.front() == '-';
    token.remove_prefix(1);
  }
  const auto slash = token.find('/');
  const std::string_view num_text = token.substr(0, slash);
  const std::string_view den_text = slash == std::string_view::npos ? std::string_view("1") : token.substr(slash + 1);
  if (!detail::all_digits(num_text) || !detail::all_digits(den_text)) return false;
  const Integer num{std::string(num_text)};
  const Integer den{std::string(den_text)};
  if (den == 0) return false;
  out = Rational(num, den);
  if (negative) out = -out;
  return true;
}

inline Element parse_element(Tag tag, std::string_view token) {
  const auto fail = [&](const char* why) -> Element {
    throw error(errc::parse_error,
                "bad " + std::string(to_string(tag)) + " token '" + std::string(token) + "': " + why);
  };
  if (tag == Tag::boolean) {
    if (token == "0") return Element::boolean(false);
    if (token == "1") return Element::boolean(true);
    return fail("expected 0 or 1");
  }
  if (tag == Tag::tropical && token == "inf") return Element::tropical_infinity();
  Rational q;
  if (!parse_rational(token, q)) return fail("expected an integer or p/q");
  if (tag == Tag::nonneg_rational && q < 0) return fail("negative value");
  return Element::numeral(tag, q);
}

}  // namespace semicert
