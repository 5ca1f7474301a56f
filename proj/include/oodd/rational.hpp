#pragma once

/*
 * Exact rationals over GMP integers.
 *
 * A Rational is always reduced with a positive denominator, so two
 * rationals are equal iff their numerators and denominators are equal.
 * Parity classes follow the orbits of 1 and infinity under the theta
 * group: odd/odd fractions are "1-rationals", everything else (one part
 * even) is an "infinity-rational".
 */

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>

namespace oodd {

using Int = mpz_class;

enum class Parity { one_rational, inf_rational };

class Rational {
 public:
  Rational() = default;
  Rational(long n) : value_(n) {}  // NOLINT: implicit by intent, integers are rationals
  Rational(const Int& n) : value_(n) {}  // NOLINT
  // Throws InputError on a zero denominator.
  Rational(const Int& num, const Int& den);

  static Rational reduce(const Int& num, const Int& den) { return Rational(num, den); }

  const Int& num() const { return value_.get_num(); }
  const Int& den() const { return value_.get_den(); }
  const mpq_class& mpq() const { return value_; }

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return den() == 1; }

  Int floor() const;
  double to_double() const { return value_.get_d(); }
  std::string str() const;  // "p/q"

  Rational operator-() const { return Rational(mpq_class(-value_)); }
  Rational& operator+=(const Rational& r) { value_ += r.value_; return *this; }
  Rational& operator-=(const Rational& r) { value_ -= r.value_; return *this; }
  Rational& operator*=(const Rational& r) { value_ *= r.value_; return *this; }
  Rational& operator/=(const Rational& r);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  explicit Rational(mpq_class v) : value_(std::move(v)) {}
  mpq_class value_;
};

Parity classify(const Rational& r);

inline const char* to_string(Parity p) {
  return p == Parity::one_rational ? "one_rational" : "inf_rational";
}

// Floor division for GMP integers with positive divisor.
Int floor_div(const Int& a, const Int& b);

// Integer square root (floor) of a non-negative integer.
Int isqrt(const Int& n);

bool is_perfect_square(const Int& n);

}  // namespace oodd
