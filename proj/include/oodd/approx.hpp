#pragma once

/*
 * Best 1-rational approximation and Ford-circle geometry.
 *
 * a/b is a best 1-rational approximation of an irrational x when a, b are
 * odd and |bx - a| < |dx - c| for every other odd/odd c/d with 0 < d <= b.
 * All comparisons go through err_sq = |bx - a|^2 in Q(sqrt D), never floats.
 */

#include <cstdint>
#include <string>
#include <vector>

#include "oodd/real.hpp"

namespace oodd {

struct FordCircle {
  Rational base;
  Rational radius;  // 1/(2 den^2)

  explicit FordCircle(const Rational& r);
};

Rational ford_radius(const Rational& r);
// |ad - bc| = 1 for r1 = a/b, r2 = c/d.
bool ford_tangent(const Rational& r1, const Rational& r2);
// |b x - a|^2 for r = a/b.
Real err_sq(const Rational& r, const Real& x);
// Radius of the horocycle based at r through x: err_sq / 2.
Real horo_radius(const Rational& r, const Real& x);

struct ApproxRecord {
  Rational candidate;
  Real err_sq;
};

// Successive strict minima of |bx - a| over odd/odd a/b with b <= qmax,
// ordered by denominator. Throws InputError unless x is irrational in (0,1).
std::vector<Rational> best_one_rationals(const QuadIrr& x, std::int64_t qmax);
std::vector<Rational> best_one_rationals_serial(const QuadIrr& x, std::int64_t qmax);
// Same list with the error of each entry.
std::vector<ApproxRecord> best_one_records(const QuadIrr& x, std::int64_t qmax);

struct Thm1Report {
  std::string input;
  std::int64_t qmax = 0;
  std::vector<Rational> oocf_list;
  std::vector<Rational> brute_list;
  bool pass = false;
};

// OOCF principal convergents with q <= qmax against best_one_rationals.
Thm1Report verify_thm1(const QuadIrr& x, std::int64_t qmax);

struct KeitaReport {
  std::size_t n = 0;
  std::vector<Int> q;      // q_{n,0} .. q_{n,d_n}
  std::vector<Real> err;   // |q_{n,j} x - p_{n,j}|, same order
  Int q_prev;              // q_{n-1}
  Real err_prev;           // |q_{n-1} x - p_{n-1}|
  // q_{n,0} < q_{n-1} <= q_{n,1} < ... < q_{n,d_n}, except that q_0 = q_1 = 1
  // is allowed when n = 2 and d_1 = 1.
  bool q_chain = false;
  bool q_edge_equal = false;  // that exception occurred
  bool err_chain = false;  // e_{n,d_n} < e_{n-1} <= e_{n,d_n - 1} < ... < e_{n,0}
  bool pass() const { return q_chain && err_chain; }
};

// Throws InputError if x has fewer than n RCF digits or n < 1.
KeitaReport keita_monotonicity(const Real& x, std::size_t n);

}  // namespace oodd
