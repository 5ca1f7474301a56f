#pragma once

/*
 * Real: the exact value type every expansion routine works on.
 *
 * A tagged union of Rational and QuadIrr. Arithmetic is closed: results
 * collapse to Rational whenever the surd part cancels. Operands carrying
 * different radicands D raise InputError. No decision ever goes through
 * floating point; to_double() is for display and sanity checks only.
 */

#include <compare>
#include <optional>
#include <string>
#include <variant>

#include "oodd/quad.hpp"
#include "oodd/rational.hpp"

namespace oodd {

class Real {
 public:
  Real() : v_(Rational{}) {}
  Real(const Rational& r) : v_(r) {}  // NOLINT
  Real(const QuadIrr& q) : v_(q) {}  // NOLINT
  Real(long n) : v_(Rational(n)) {}  // NOLINT

  // Builds (p + s*sqrt(d))/q, collapsing to a Rational when s = 0.
  static Real from_parts(const Int& p, const Int& s, const Int& d, const Int& q);

  bool is_rational() const { return std::holds_alternative<Rational>(v_); }
  bool is_quadratic() const { return !is_rational(); }
  const Rational& rational() const;
  const QuadIrr& quad() const;
  std::optional<Int> radicand() const;

  int sign() const;
  Int floor() const;
  Real abs() const { return sign() < 0 ? -*this : *this; }
  Real reciprocal() const;
  double to_double() const;
  std::string str() const;

  Real operator-() const;
  friend Real operator+(const Real& a, const Real& b);
  friend Real operator-(const Real& a, const Real& b);
  friend Real operator*(const Real& a, const Real& b);
  friend Real operator/(const Real& a, const Real& b);
  Real& operator+=(const Real& b) { return *this = *this + b; }
  Real& operator-=(const Real& b) { return *this = *this - b; }
  Real& operator*=(const Real& b) { return *this = *this * b; }
  Real& operator/=(const Real& b) { return *this = *this / b; }

  friend bool operator==(const Real& a, const Real& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Real& a, const Real& b);

 private:
  std::variant<Rational, QuadIrr> v_;
};

int compare(const Real& a, const Real& b);

inline bool in_unit_interval(const Real& x) { return x.sign() >= 0 && x <= Real(1); }

// Throws InputError naming `what` unless 0 <= x <= 1.
void require_unit_interval(const Real& x, const char* what);

}  // namespace oodd
