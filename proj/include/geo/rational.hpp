#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace geo {

/// Exact rational scalar in canonical form: arbitrary-precision integer
/// numerator over a positive arbitrary-precision denominator with
/// gcd(|num|, den) = 1.  All arithmetic is exact and closed; division by
/// zero throws instead of producing a sentinel.
///
/// The textual form accepted and produced everywhere is either a decimal
/// integer ("3", "-7") or "p/q" with q > 0 ("2/5", "-1/3").
class Rational {
public:
  using Int = boost::multiprecision::cpp_int;

  Rational() = default;
  Rational(long long n) : value_(n) {}  // NOLINT: implicit by design, mirrors int literals
  Rational(const Int& n) : value_(n) {}

  Rational(const Int& num, const Int& den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    // cpp_rational's two-argument constructor rejects negative denominators,
    // so normalize through exact division, which canonicalizes.
    value_ = Backend(num) / Backend(den);
  }

  /// Parse "p" or "p/q" (q > 0).  No whitespace, no '+' sign, no decimals.
  static Rational parse(const std::string& text) {
    const auto bad = [&]() -> std::domain_error {
      return std::domain_error("not a rational literal (expected \"p\" or \"p/q\" with q > 0): \"" +
                               text + "\"");
    };
    const auto is_integer = [](const std::string& s) {
      std::size_t start = (!s.empty() && s[0] == '-') ? 1 : 0;
      if (start >= s.size()) return false;
      for (std::size_t i = start; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9') return false;
      return true;
    };
    const auto slash = text.find('/');
    if (slash == std::string::npos) {
      if (!is_integer(text)) throw bad();
      return Rational(Int(text));
    }
    const std::string num = text.substr(0, slash);
    const std::string den = text.substr(slash + 1);
    if (!is_integer(num) || !is_integer(den)) throw bad();
    if (!den.empty() && den[0] == '-') throw bad();  // q > 0 by grammar
    Int q(den);
    if (q == 0) throw bad();
    return Rational(Int(num), q);
  }

  /// Canonical textual form: "p" when the denominator is 1, else "p/q".
  std::string str() const {
    if (denominator() == 1) return numerator().str();
    return numerator().str() + "/" + denominator().str();
  }

  Int numerator() const { return boost::multiprecision::numerator(value_); }
  Int denominator() const { return boost::multiprecision::denominator(value_); }

  bool is_zero() const { return value_ == 0; }
  int sign() const { return value_ == 0 ? 0 : (value_ < 0 ? -1 : 1); }

  /// Nearest binary64 value; used only by the float scan mode.
  double to_double() const { return value_.convert_to<double>(); }

  friend Rational operator+(const Rational& a, const Rational& b) { return Rational(a.value_ + b.value_); }
  friend Rational operator-(const Rational& a, const Rational& b) { return Rational(a.value_ - b.value_); }
  friend Rational operator*(const Rational& a, const Rational& b) { return Rational(a.value_ * b.value_); }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw std::domain_error("Rational: division by zero");
    return Rational(a.value_ / b.value_);
  }
  Rational operator-() const { return Rational(-value_); }

  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    if (a.value_ < b.value_) return std::strong_ordering::less;
    if (a.value_ > b.value_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

private:
  using Backend = boost::multiprecision::cpp_rational;
  explicit Rational(Backend v) : value_(std::move(v)) {}
  Backend value_;  // boost keeps this in canonical form (positive denominator, reduced)
};

inline Rational operator""_q(const char* s) { return Rational::parse(s); }
inline Rational operator""_q(const char* s, std::size_t) { return Rational::parse(s); }

}  // namespace geo
