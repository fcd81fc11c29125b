#include "fourfold/pi_arith.hpp"

#include <functional>
#include <utility>

#include "fourfold/errors.hpp"

namespace fourfold {

namespace {

// Integer-arithmetic arctan(1/x) * scale, truncated toward zero term by term.
// The alternating series plus per-step floor divisions keep the accumulated
// error well under 2*steps + x^2 ulps of the scale; the caller budgets for
// that with guard digits.
mpz_class atan_inv_scaled(unsigned long x, const mpz_class& scale) {
  const unsigned long x2 = x * x;
  mpz_class power = scale / x;
  mpz_class sum = power;
  unsigned long k = 1;
  while (power != 0) {
    power /= x2;
    if (power == 0) break;
    mpz_class term = power / (2 * k + 1);
    if (k % 2 == 1) {
      sum -= term;
    } else {
      sum += term;
    }
    ++k;
  }
  return sum;
}

// Bracket [ (P-2)/10^p, (P+2)/10^p ] for pi. Machin: pi = 16 atan(1/5) - 4 atan(1/239).
// Twelve guard digits absorb the series truncation error (< 10^9 ulps for any
// precision this library will ever see), so the converted value is within 2
// ulps of pi * 10^p.
std::pair<Rational, Rational> pi_bracket(unsigned p) {
  if (p > 1000000) throw InvalidParameters("pi precision out of range");
  const unsigned guard = 12;
  const mpz_class scale = pow10(p + guard);
  const mpz_class m = 16 * atan_inv_scaled(5, scale) - 4 * atan_inv_scaled(239, scale);
  const mpz_class denom = pow10(p);
  const mpz_class center = m / pow10(guard);
  return {Rational(center - 2, denom), Rational(center + 2, denom)};
}

void check_interval(const PiSquareInterval& pi2) {
  if (!(pi2.lo < pi2.hi) || !(pi2.lo > Rational(9)) || !(pi2.hi < Rational(10))) {
    throw PreconditionFailed("interval does not certifiably bracket pi^2");
  }
}

// Decimal digits of a value known only through nested rational brackets.
// bracket(prec) must return [lo, hi] with hi - lo -> 0 as prec grows.
Decimal decimal_from_brackets(
    const std::function<std::pair<Rational, Rational>(unsigned)>& bracket, unsigned digits) {
  if (digits < 1) throw InvalidParameters("digits must be >= 1");
  const mpz_class scale = pow10(digits);
  const Rational err(mpz_class(1), scale);
  for (unsigned prec = digits + 8; prec <= digits + 200; prec += 24) {
    auto [lo, hi] = bracket(prec);
    if (lo.is_zero() && hi.is_zero()) {
      return {"0." + std::string(digits, '0'), err};
    }
    if (lo.sign() != hi.sign()) continue;
    const bool negative = lo.sign() < 0;
    if (negative) std::swap(lo, hi), lo = -lo, hi = -hi;
    const mpz_class a = (lo * Rational(scale)).floor();
    const mpz_class b = (hi * Rational(scale)).floor();
    if (a != b) continue;
    std::string frac = mpz_class(a % scale).get_str();
    frac.insert(0, digits - frac.size(), '0');
    std::string text = mpz_class(a / scale).get_str() + "." + frac;
    if (negative && a != 0) text.insert(0, "-");
    return {text, err};
  }
  throw Error("decimal rendering did not converge");
}

std::pair<Rational, Rational> exact_bracket(const Rational& r) { return {r, r}; }

}  // namespace

std::string sign_str(Sign s) {
  switch (s) {
    case Sign::Negative: return "-1";
    case Sign::Zero: return "0";
    case Sign::Positive: return "+1";
    case Sign::Undecidable: return "undecidable";
  }
  return "?";
}

std::optional<PiQuantity> PiQuantity::divided_by_pi_squared() const {
  if (!cm2_.is_zero()) return std::nullopt;
  return PiQuantity(c2_, Rational(0), c0_);
}

PiQuantity& PiQuantity::operator+=(const PiQuantity& o) {
  c0_ += o.c0_;
  c2_ += o.c2_;
  cm2_ += o.cm2_;
  return *this;
}

PiQuantity& PiQuantity::operator-=(const PiQuantity& o) {
  c0_ -= o.c0_;
  c2_ -= o.c2_;
  cm2_ -= o.cm2_;
  return *this;
}

PiQuantity& PiQuantity::operator*=(const Rational& r) {
  c0_ *= r;
  c2_ *= r;
  cm2_ *= r;
  return *this;
}

std::string PiQuantity::str() const {
  return c0_.str() + " + (" + c2_.str() + ")*pi^2 + (" + cm2_.str() + ")/pi^2";
}

PiSquareInterval default_pi2_interval() {
  static const mpz_class denom = pow10(15);
  return {Rational(mpz_class("9869604401089358"), denom),
          Rational(mpz_class("9869604401089359"), denom)};
}

PiSquareInterval refine_pi2_interval(unsigned digits) {
  auto [lo, hi] = pi_bracket(digits + 4);
  return {lo * lo, hi * hi};
}

std::pair<Rational, Rational> pq_bracket(const PiQuantity& q, const PiSquareInterval& pi2) {
  check_interval(pi2);
  const Rational& lo = pi2.lo;
  const Rational& hi = pi2.hi;
  Rational a = q.c0();
  Rational b = q.c0();
  if (q.c2().sign() >= 0) {
    a += q.c2() * lo;
    b += q.c2() * hi;
  } else {
    a += q.c2() * hi;
    b += q.c2() * lo;
  }
  if (q.cm2().sign() >= 0) {
    a += q.cm2() / hi;
    b += q.cm2() / lo;
  } else {
    a += q.cm2() / lo;
    b += q.cm2() / hi;
  }
  return {a, b};
}

Sign pq_sign(const PiQuantity& q, const PiSquareInterval& pi2) {
  const int s0 = q.c0().sign();
  const int s2 = q.c2().sign();
  const int sm = q.cm2().sign();
  if (s0 == 0 && s2 == 0 && sm == 0) return Sign::Zero;
  if (s0 >= 0 && s2 >= 0 && sm >= 0) return Sign::Positive;
  if (s0 <= 0 && s2 <= 0 && sm <= 0) return Sign::Negative;
  const auto [a, b] = pq_bracket(q, pi2);
  if (a.sign() > 0) return Sign::Positive;
  if (b.sign() < 0) return Sign::Negative;
  return Sign::Undecidable;
}

Sign pq_sign(const PiQuantity& q) { return pq_sign(q, default_pi2_interval()); }

Decimal pq_to_decimal(const PiQuantity& q, unsigned digits) {
  if (q.is_rational()) {
    const Rational r = q.c0();
    return decimal_from_brackets([&](unsigned) { return exact_bracket(r); }, digits);
  }
  return decimal_from_brackets(
      [&](unsigned prec) { return pq_bracket(q, refine_pi2_interval(prec)); }, digits);
}

int RadicalBound::sign() const {
  if (radicand == 0) return 0;
  return coefficient.sign();
}

Decimal RadicalBound::to_decimal(unsigned digits) const {
  if (sign() == 0) {
    return decimal_from_brackets([](unsigned) { return exact_bracket(Rational(0)); }, digits);
  }
  const RadicalBound self = *this;
  auto bracket = [self](unsigned prec) {
    // sqrt bracket via integer square root of radicand * 10^(2 prec)
    const mpz_class m = pow10(prec);
    mpz_class s;
    mpz_class scaled = self.radicand * m * m;
    mpz_sqrt(s.get_mpz_t(), scaled.get_mpz_t());
    Rational root_lo(s, m), root_hi(s + 1, m);

    Rational pil(1), pih(1);
    if (self.pi_power != 0) {
      auto [pl, ph] = pi_bracket(prec);
      const long e = self.pi_power;
      if (e > 0) {
        pil = pl.pow(e);
        pih = ph.pow(e);
      } else {
        pil = ph.pow(e);
        pih = pl.pow(e);
      }
    }
    const Rational mag = self.coefficient.abs();
    Rational a = mag * pil * root_lo;
    Rational b = mag * pih * root_hi;
    if (self.coefficient.sign() < 0) return std::make_pair(-b, -a);
    return std::make_pair(a, b);
  };
  return decimal_from_brackets(bracket, digits);
}

std::string RadicalBound::str() const {
  std::string s = "(" + coefficient.str() + ")";
  if (pi_power == 1) {
    s += "*pi";
  } else if (pi_power != 0) {
    s += "*pi^" + std::to_string(pi_power);
  }
  s += "*sqrt(" + radicand.get_str() + ")";
  return s;
}

}  // namespace fourfold
