#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace geomkit {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational number, always stored in lowest terms with a positive
/// denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(const BigInt& num, const BigInt& den);

  /// Parses "p/q", an integer, or a finite decimal such as "-9.500000".
  /// Throws std::invalid_argument on malformed input or a zero denominator.
  static Rational parse(std::string_view text);

  BigInt num() const;
  BigInt den() const;

  int sign() const;
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const;
  Rational abs() const;
  double to_double() const;

  /// Canonical "p/q" form (q is printed even when it is 1).
  std::string str() const;
  /// "p" for integers, "p/q" otherwise.
  std::string short_str() const;

  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  /// Throws std::domain_error on division by zero.
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = a.value_.compare(b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  explicit Rational(boost::multiprecision::cpp_rational v) : value_(std::move(v)) {}
  boost::multiprecision::cpp_rational value_;
};

enum class ArithOp { Add, Sub, Mul, Div };

/// Exact a (op) b. Returns nullopt for division by zero instead of throwing.
std::optional<Rational> rational_arith(const Rational& a, const Rational& b, ArithOp op);

/// Converts a BigInt that is known to fit into int64; throws std::overflow_error otherwise.
std::int64_t to_int64(const BigInt& v);

}  // namespace geomkit
