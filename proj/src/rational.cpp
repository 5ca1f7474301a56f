#include "oodd/rational.hpp"

#include "oodd/errors.hpp"

namespace oodd {

Rational::Rational(const Int& num, const Int& den) {
  if (den == 0) throw InputError("rational with zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational& Rational::operator/=(const Rational& r) {
  if (r.is_zero()) throw InputError("division by zero");
  value_ /= r.value_;
  return *this;
}

Int Rational::floor() const { return floor_div(num(), den()); }

std::string Rational::str() const { return num().get_str() + "/" + den().get_str(); }

Parity classify(const Rational& r) {
  return (mpz_odd_p(r.num().get_mpz_t()) && mpz_odd_p(r.den().get_mpz_t())) ? Parity::one_rational
                                                                             : Parity::inf_rational;
}

Int floor_div(const Int& a, const Int& b) {
  Int r;
  mpz_fdiv_q(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

Int isqrt(const Int& n) {
  Int r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

bool is_perfect_square(const Int& n) { return mpz_perfect_square_p(n.get_mpz_t()) != 0; }

}  // namespace oodd
