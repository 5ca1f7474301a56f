#include "oodd/mat2.hpp"

#include "oodd/errors.hpp"

namespace oodd {

namespace {

bool odd(const Int& v) { return mpz_odd_p(v.get_mpz_t()) != 0; }

// Mod-2 reduction is I or [[0,1],[1,0]] (= [[0,-1],[1,0]] mod 2).
bool theta_shape(const Mat2& m) {
  bool identity = odd(m.a) && !odd(m.b) && !odd(m.c) && odd(m.d);
  bool swap = !odd(m.a) && odd(m.b) && odd(m.c) && !odd(m.d);
  return identity || swap;
}

}  // namespace

Mat2 Mat2::inverse() const {
  Int dt = det();
  if (dt == 1) return {d, -b, -c, a};
  if (dt == -1) return {-d, b, c, -a};
  throw InputError("matrix " + str() + " is not unimodular");
}

bool Mat2::theta_member() const { return det() == 1 && theta_shape(*this); }

bool Mat2::theta_or_swapped() const {
  Int dt = det();
  return (dt == 1 || dt == -1) && theta_shape(*this);
}

std::string Mat2::str() const {
  return "[[" + a.get_str() + "," + b.get_str() + "],[" + c.get_str() + "," + d.get_str() + "]]";
}

Mat2 operator*(const Mat2& x, const Mat2& y) {
  return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c,
          x.c * y.b + x.d * y.d};
}

Mat2 mat_mul(const Mat2& x, const Mat2& y) { return x * y; }

Real mat_apply(const Mat2& m, const Real& x) {
  Real den = Real(Rational(m.c)) * x + Real(Rational(m.d));
  if (den.sign() == 0) throw InputError("pole of " + m.str() + " at " + x.str());
  return (Real(Rational(m.a)) * x + Real(Rational(m.b))) / den;
}

}  // namespace oodd
