#ifndef FOURFOLD_PI_ARITH_HPP
#define FOURFOLD_PI_ARITH_HPP

#include <optional>
#include <string>

#include "fourfold/rational.hpp"

namespace fourfold {

/// Result of a sign decision. Undecidable is a value, not an error: it says
/// the certified bracket for pi^2 was too wide to separate the quantity from
/// zero, and a caller may retry with a refined bracket.
enum class Sign { Negative = -1, Zero = 0, Positive = 1, Undecidable = 2 };

std::string sign_str(Sign s);

/// Exact number of the form c0 + c2*pi^2 + cm2*pi^-2 with rational
/// coefficients. pi^2 is transcendental, so the representation is canonical
/// and equality is coefficient-wise. This is the only numeric field the
/// library admits beyond the rationals: every mixed constant that occurs in
/// the inequality systems lives here.
class PiQuantity {
 public:
  PiQuantity() = default;
  PiQuantity(Rational c0, Rational c2, Rational cm2)
      : c0_(std::move(c0)), c2_(std::move(c2)), cm2_(std::move(cm2)) {}

  static PiQuantity rational(Rational r) { return {std::move(r), 0, 0}; }
  /// r * pi^2
  static PiQuantity pi_squared(Rational r) { return {0, std::move(r), 0}; }
  /// r / pi^2
  static PiQuantity inv_pi_squared(Rational r) { return {0, 0, std::move(r)}; }

  const Rational& c0() const { return c0_; }
  const Rational& c2() const { return c2_; }
  const Rational& cm2() const { return cm2_; }

  bool is_zero() const { return c0_.is_zero() && c2_.is_zero() && cm2_.is_zero(); }
  bool is_rational() const { return c2_.is_zero() && cm2_.is_zero(); }

  /// Quotient by pi^2 stays in the ring only when there is no pi^-2 term.
  std::optional<PiQuantity> divided_by_pi_squared() const;

  PiQuantity operator-() const { return {-c0_, -c2_, -cm2_}; }
  PiQuantity& operator+=(const PiQuantity& o);
  PiQuantity& operator-=(const PiQuantity& o);
  PiQuantity& operator*=(const Rational& r);

  friend PiQuantity operator+(PiQuantity a, const PiQuantity& b) { return a += b; }
  friend PiQuantity operator-(PiQuantity a, const PiQuantity& b) { return a -= b; }
  friend PiQuantity operator*(PiQuantity a, const Rational& r) { return a *= r; }
  friend PiQuantity operator*(const Rational& r, PiQuantity a) { return a *= r; }

  friend bool operator==(const PiQuantity& a, const PiQuantity& b) {
    return a.c0_ == b.c0_ && a.c2_ == b.c2_ && a.cm2_ == b.cm2_;
  }
  friend bool operator!=(const PiQuantity& a, const PiQuantity& b) { return !(a == b); }

  std::string str() const;

 private:
  Rational c0_, c2_, cm2_;
};

/// Certified rational bracket lo < pi^2 < hi.
struct PiSquareInterval {
  Rational lo;
  Rational hi;
};

/// The default bracket: pi^2 * 10^15 lies strictly between the two integers
/// 9869604401089358 and 9869604401089359 (pi^2 = 9.86960440108935861883...),
/// giving a certified width of 10^-15.
PiSquareInterval default_pi2_interval();

/// Bracket of width <= 10^-digits, computed from a Machin arctangent series
/// for pi with integer arithmetic and explicit truncation-error accounting.
PiSquareInterval refine_pi2_interval(unsigned digits);

/// Exact rational bracket for the value of q given a bracket for pi^2.
std::pair<Rational, Rational> pq_bracket(const PiQuantity& q, const PiSquareInterval& pi2);

/// Sign of q, decided exactly. Coefficient signs settle it whenever they all
/// agree (or all vanish); otherwise interval arithmetic over the certified
/// bracket decides, and Undecidable is returned only if the evaluated
/// bracket straddles zero.
Sign pq_sign(const PiQuantity& q, const PiSquareInterval& pi2);
Sign pq_sign(const PiQuantity& q);

/// Decimal rendering, presentation-layer only. Truncated toward zero, so
/// |value - printed| < error_bound = 10^-digits.
struct Decimal {
  std::string text;
  Rational error_bound;
};

Decimal pq_to_decimal(const PiQuantity& q, unsigned digits);

/// Number of the form coefficient * pi^pi_power * sqrt(radicand). Only sign
/// queries and decimal display are supported; no radical arithmetic beyond
/// closure under division by sqrt of a positive rational.
struct RadicalBound {
  Rational coefficient;
  int pi_power = 0;
  mpz_class radicand = 0;  // >= 0

  int sign() const;
  bool is_zero() const { return sign() == 0; }
  Decimal to_decimal(unsigned digits) const;
  std::string str() const;
};

}  // namespace fourfold

#endif
