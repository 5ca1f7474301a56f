#include "oodd/real.hpp"

#include <cmath>

#include "oodd/errors.hpp"

namespace oodd {

namespace {

// Common representation (p + s*sqrt(d))/q with q > 0; d = 0 for rationals.
struct Parts {
  Int p, s, d, q;
};

Parts parts_of(const Real& x) {
  if (x.is_rational()) {
    const Rational& r = x.rational();
    return {r.num(), 0, 0, r.den()};
  }
  const QuadIrr& z = x.quad();
  return {z.p(), z.s(), z.d(), z.q()};
}

Int shared_radicand(const Parts& a, const Parts& b) {
  if (a.d == 0) return b.d;
  if (b.d == 0) return a.d;
  if (a.d != b.d)
    throw InputError("mixed radicands sqrt(" + a.d.get_str() + ") and sqrt(" + b.d.get_str() + ")");
  return a.d;
}

}  // namespace

Real Real::from_parts(const Int& p, const Int& s, const Int& d, const Int& q) {
  if (q == 0) throw InputError("division by zero");
  if (s == 0 || d == 0) return Real(Rational(p, q));
  return Real(QuadIrr(p, s, d, q));
}

const Rational& Real::rational() const {
  if (!is_rational()) throw InputError("expected a rational, got " + str());
  return std::get<Rational>(v_);
}

const QuadIrr& Real::quad() const {
  if (is_rational()) throw InputError("expected a quadratic irrational, got " + str());
  return std::get<QuadIrr>(v_);
}

std::optional<Int> Real::radicand() const {
  if (is_rational()) return std::nullopt;
  return quad().d();
}

int Real::sign() const {
  if (is_rational()) return rational().sign();
  const QuadIrr& z = quad();
  return sign_surd(z.p(), z.s(), z.d());
}

Int Real::floor() const {
  if (is_rational()) return rational().floor();
  const QuadIrr& z = quad();
  // s*sqrt(d) lies strictly between consecutive integers f and f+1, so
  // no multiple of q separates p+f from p+s*sqrt(d).
  Int m = isqrt(z.s() * z.s() * z.d());
  Int f = z.s() > 0 ? m : Int(-m - 1);
  return floor_div(z.p() + f, z.q());
}

Real Real::reciprocal() const { return Real(1) / *this; }

double Real::to_double() const {
  if (is_rational()) return rational().to_double();
  // floor(x * 2^64) is exact, so the only rounding is the final division.
  const QuadIrr& z = quad();
  Int scale = Int(1) << 64;
  Real scaled = from_parts(z.p() * scale, z.s() * scale, z.d(), z.q());
  return std::ldexp(scaled.floor().get_d(), -64);
}

std::string Real::str() const { return is_rational() ? rational().str() : quad().str(); }

Real Real::operator-() const {
  if (is_rational()) return Real(-rational());
  const QuadIrr& z = quad();
  return Real(QuadIrr(-z.p(), -z.s(), z.d(), z.q()));
}

Real operator+(const Real& a, const Real& b) {
  if (a.is_rational() && b.is_rational()) return Real(a.rational() + b.rational());
  Parts x = parts_of(a), y = parts_of(b);
  Int d = shared_radicand(x, y);
  return Real::from_parts(x.p * y.q + y.p * x.q, x.s * y.q + y.s * x.q, d, x.q * y.q);
}

Real operator-(const Real& a, const Real& b) { return a + (-b); }

Real operator*(const Real& a, const Real& b) {
  if (a.is_rational() && b.is_rational()) return Real(a.rational() * b.rational());
  Parts x = parts_of(a), y = parts_of(b);
  Int d = shared_radicand(x, y);
  return Real::from_parts(x.p * y.p + x.s * y.s * d, x.p * y.s + x.s * y.p, d, x.q * y.q);
}

Real operator/(const Real& a, const Real& b) {
  if (b.sign() == 0) throw InputError("division by zero");
  if (a.is_rational() && b.is_rational()) return Real(a.rational() / b.rational());
  Parts x = parts_of(a), y = parts_of(b);
  Int d = shared_radicand(x, y);
  // Multiply through by the conjugate (y.p - y.s*sqrt(d)).
  Int norm = y.p * y.p - y.s * y.s * d;
  Int p = (x.p * y.p - x.s * y.s * d) * y.q;
  Int s = (x.s * y.p - x.p * y.s) * y.q;
  return Real::from_parts(p, s, d, x.q * norm);
}

int compare(const Real& a, const Real& b) {
  if (a.is_rational() && b.is_rational()) return cmp(a.rational().mpq(), b.rational().mpq());
  return (a - b).sign();
}

std::strong_ordering operator<=>(const Real& a, const Real& b) {
  int c = compare(a, b);
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

void require_unit_interval(const Real& x, const char* what) {
  if (!in_unit_interval(x)) throw InputError(std::string(what) + " must lie in [0,1], got " + x.str());
}

}  // namespace oodd
