#ifndef FOURFOLD_RATIONAL_HPP
#define FOURFOLD_RATIONAL_HPP

#include <gmpxx.h>

#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <string>

namespace fourfold {

/// Arbitrary-precision rational number, always kept in lowest terms with a
/// positive denominator. All inequality decisions in this library go through
/// exact comparisons on this type; floating point never enters a decision
/// path.
class Rational {
 public:
  Rational() : v_(0) {}
  template <std::integral I>
  Rational(I n) : v_(static_cast<long>(n)) {}
  Rational(const mpz_class& n) : v_(n) {}
  Rational(long long num, long long den);
  Rational(const mpz_class& num, const mpz_class& den);
  explicit Rational(const mpq_class& v);

  /// Accepts "p/q" or "p" with optional sign; q must be nonzero.
  static Rational parse(const std::string& text);

  const mpz_class& num() const { return v_.get_num(); }
  const mpz_class& den() const { return v_.get_den(); }
  const mpq_class& raw() const { return v_; }

  int sign() const { return sgn(v_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return v_.get_den() == 1; }

  Rational abs() const;
  Rational reciprocal() const;
  /// Integer power, negative exponents allowed for nonzero values.
  Rational pow(long exponent) const;
  /// Largest integer <= value.
  mpz_class floor() const;

  /// Rendered as "p/q", lowest terms, e.g. "-32/1" or "96/1295".
  std::string str() const;

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  mpq_class v_;
};

/// 10^exponent as an exact integer.
mpz_class pow10(unsigned exponent);

}  // namespace fourfold

#endif
