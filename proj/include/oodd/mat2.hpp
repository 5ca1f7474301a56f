#pragma once

#include <string>

#include "oodd/rational.hpp"
#include "oodd/real.hpp"

namespace oodd {

// 2x2 integer matrix acting on the extended line by z -> (a z + b)/(c z + d).
struct Mat2 {
  Int a{1}, b{0}, c{0}, d{1};

  static Mat2 identity() { return {}; }

  Int det() const { return a * d - b * c; }
  Int trace() const { return a + d; }
  // Inverse of a unimodular matrix; throws InputError if det is not +-1.
  Mat2 inverse() const;

  // Theta: det 1 and congruent mod 2 to I or [[0,-1],[1,0]].
  bool theta_member() const;
  // Theta together with its coset [[0,1],[1,0]] Theta (det -1, same mod-2 shapes).
  bool theta_or_swapped() const;

  std::string str() const;

  friend Mat2 operator*(const Mat2& x, const Mat2& y);
  friend bool operator==(const Mat2&, const Mat2&) = default;
};

Mat2 mat_mul(const Mat2& x, const Mat2& y);

// Exact Moebius image. Throws InputError at the pole c x + d = 0.
Real mat_apply(const Mat2& m, const Real& x);

}  // namespace oodd
