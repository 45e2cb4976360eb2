#include "geomkit/rational.hpp"

#include <cctype>
#include <limits>
#include <stdexcept>

namespace geomkit {

namespace mp = boost::multiprecision;

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  value_ = den < 0 ? mp::cpp_rational(BigInt(-num), BigInt(-den)) : mp::cpp_rational(num, den);
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

BigInt parse_int(std::string_view s) {
  bool neg = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    neg = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) throw std::invalid_argument("malformed integer '" + std::string(s) + "'");
  BigInt v{std::string(s)};
  return neg ? BigInt(-v) : v;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw std::invalid_argument("empty rational");

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    BigInt p = parse_int(text.substr(0, slash));
    BigInt q = parse_int(text.substr(slash + 1));
    if (q == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    return Rational(p, q);
  }

  bool neg = false;
  std::string_view body = text;
  if (body.front() == '-' || body.front() == '+') {
    neg = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto dot = body.find('.');
  std::string_view ip = body.substr(0, dot);
  std::string_view fp = dot == std::string_view::npos ? std::string_view{} : body.substr(dot + 1);
  if (ip.empty() && fp.empty()) throw std::invalid_argument("malformed number '" + std::string(text) + "'");
  if ((!ip.empty() && !all_digits(ip)) || (!fp.empty() && !all_digits(fp)))
    throw std::invalid_argument("malformed number '" + std::string(text) + "'");

  BigInt num = ip.empty() ? BigInt(0) : BigInt{std::string(ip)};
  BigInt den = 1;
  for (char c : fp) {
    num = num * 10 + (c - '0');
    den *= 10;
  }
  if (neg) num = -num;
  return Rational(num, den);
}

BigInt Rational::num() const { return mp::numerator(value_); }
BigInt Rational::den() const { return mp::denominator(value_); }
int Rational::sign() const { return value_.sign(); }
bool Rational::is_integer() const { return mp::denominator(value_) == 1; }
Rational Rational::abs() const { return Rational(mp::abs(value_)); }
double Rational::to_double() const { return value_.convert_to<double>(); }

std::string Rational::str() const { return num().str() + "/" + den().str(); }

std::string Rational::short_str() const { return is_integer() ? num().str() : str(); }

Rational& Rational::operator+=(const Rational& o) {
  value_ += o.value_;
  return *this;
}
Rational& Rational::operator-=(const Rational& o) {
  value_ -= o.value_;
  return *this;
}
Rational& Rational::operator*=(const Rational& o) {
  value_ *= o.value_;
  return *this;
}
Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("rational division by zero");
  value_ /= o.value_;
  return *this;
}
Rational Rational::operator-() const { return Rational(-value_); }

std::optional<Rational> rational_arith(const Rational& a, const Rational& b, ArithOp op) {
  switch (op) {
    case ArithOp::Add: return a + b;
    case ArithOp::Sub: return a - b;
    case ArithOp::Mul: return a * b;
    case ArithOp::Div:
      if (b.is_zero()) return std::nullopt;
      return a / b;
  }
  return std::nullopt;
}

std::int64_t to_int64(const BigInt& v) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
    throw std::overflow_error("integer does not fit in 64 bits: " + v.str());
  return v.convert_to<std::int64_t>();
}

}  // namespace geomkit
