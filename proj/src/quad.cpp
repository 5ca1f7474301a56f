#include "oodd/quad.hpp"

#include "oodd/errors.hpp"

namespace oodd {

namespace {

std::strong_ordering cmp_int(const Int& a, const Int& b) {
  int c = cmp(a, b);
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

}  // namespace

QuadIrr::QuadIrr(Int p, Int s, Int d, Int q)
    : p_(std::move(p)), s_(std::move(s)), d_(std::move(d)), q_(std::move(q)) {
  if (d_ <= 0) throw InputError("radicand must be positive");
  if (is_perfect_square(d_)) throw InputError("radicand " + d_.get_str() + " is a perfect square");
  if (s_ == 0) throw InputError("surd coefficient must be nonzero");
  if (q_ == 0) throw InputError("zero denominator");
  if (q_ < 0) {
    p_ = -p_;
    s_ = -s_;
    q_ = -q_;
  }
  Int g = gcd(gcd(p_, s_), q_);
  if (g != 1) {
    p_ /= g;
    s_ /= g;
    q_ /= g;
  }
}

std::string QuadIrr::str() const {
  std::string out = "(" + p_.get_str();
  out += s_ < 0 ? "-" : "+";
  Int as = abs(s_);
  out += as.get_str() + "*sqrt(" + d_.get_str() + "))/" + q_.get_str();
  return out;
}

std::strong_ordering operator<=>(const QuadIrr& a, const QuadIrr& b) {
  if (auto c = cmp_int(a.d_, b.d_); c != 0) return c;
  if (auto c = cmp_int(a.p_, b.p_); c != 0) return c;
  if (auto c = cmp_int(a.s_, b.s_); c != 0) return c;
  return cmp_int(a.q_, b.q_);
}

int sign_surd(const Int& a, const Int& b, const Int& d) {
  int sa = sgn(a);
  int sb = sgn(b);
  if (sb == 0 || d == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // Opposite signs: the larger square wins. Equality needs d square.
  Int a2 = a * a;
  Int b2d = b * b * d;
  return cmp(a2, b2d) > 0 ? sa : sb;
}

}  // namespace oodd
