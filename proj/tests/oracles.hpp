#pragma once

// Independent reference computations for the tests. Nothing here calls the
// library's algorithms; only its number types are reused.

#include <cstdlib>
#include <map>
#include <numeric>
#include <stdexcept>
#include <queue>
#include <random>
#include <utility>
#include <vector>

#include "oodd/digits.hpp"
#include "oodd/quad.hpp"
#include "oodd/real.hpp"

namespace oracle {

using oodd::Int;
using oodd::OocfDigit;
using oodd::QuadIrr;
using oodd::Rational;
using oodd::Real;

inline Real R(long p, long q = 1) { return Real(Rational(Int(p), Int(q))); }

inline std::vector<QuadIrr> fixtures() {
  return {QuadIrr(-1, 1, 2, 1), QuadIrr(-1, 1, 5, 2), QuadIrr(-1, 1, 3, 1), QuadIrr(-3, 1, 13, 2),
          QuadIrr(-2, 1, 7, 1)};
}

inline std::vector<Rational> rationals_open(long qmax) {
  std::vector<Rational> out;
  for (long q = 2; q <= qmax; ++q)
    for (long p = 1; p < q; ++p)
      if (std::gcd(p, q) == 1) out.emplace_back(Int(p), Int(q));
  return out;
}

// Orbits of 1 and 1/0 under z -> z + 2, z - 2, -1/z, searched over pairs
// (p, q) with |p|, q <= bound. Theta-reduction never raises the height, so
// every fraction of height <= bound is reached inside the box.
// Returns map (p, q) -> true for the orbit of 1.
inline std::map<std::pair<long, long>, bool> theta_orbits(long bound) {
  std::map<std::pair<long, long>, bool> seen;
  std::queue<std::pair<long, long>> todo;
  auto norm = [](long p, long q) {
    if (q < 0 || (q == 0 && p < 0)) return std::make_pair(-p, -q);
    return std::make_pair(p, q);
  };
  auto visit = [&](std::pair<long, long> z, bool one) {
    if (std::labs(z.first) > bound || z.second > bound) return;
    if (seen.emplace(z, one).second) todo.push(z);
  };
  visit({1, 1}, true);
  visit({1, 0}, false);
  while (!todo.empty()) {
    auto [p, q] = todo.front();
    todo.pop();
    bool one = seen[{p, q}];
    visit(norm(p + 2 * q, q), one);
    visit(norm(p - 2 * q, q), one);
    visit(norm(-q, p), one);
  }
  return seen;
}

// Romik map written out from its three branches.
inline Real romik(const Real& x) {
  if (x <= R(1, 3)) return x / (R(1) - R(2) * x);
  if (x <= R(1, 2)) return R(1) / x - R(2);
  return R(2) - R(1) / x;
}

// Iterates the Romik map until the hitting set, then once more.
template <class InSet>
Real romik_jump(const Real& x, InSet in_set) {
  Real y = x;
  for (int i = 0; i < 1'000'000; ++i) {
    if (in_set(y)) return oracle::romik(y);
    y = oracle::romik(y);
  }
  throw std::runtime_error("romik_jump: no hit");
}

// Nested evaluation x = 1 - 1/(a1 + e1/(1 + x1)), innermost tail value given.
inline Real oocf_nested(const std::vector<OocfDigit>& ds, const Real& tail) {
  Real t = tail;
  for (auto it = ds.rbegin(); it != ds.rend(); ++it)
    t = R(1) - R(1) / (R(it->a) + R(it->eps) / (R(1) + t));
  return t;
}

// The OOCF digit of x found by scanning closed-open branch intervals
// [(k-1)/k, (2k-1)/(2k+1)) and [(2k-1)/(2k+1), k/(k+1)).
inline OocfDigit digit_by_scan(const Real& x) {
  for (long k = 1;; ++k) {
    if (R(k - 1, k) <= x && x < R(2 * k - 1, 2 * k + 1)) return {k + 1, -1};
    if (R(2 * k - 1, 2 * k + 1) <= x && x < R(k, k + 1)) return {k, 1};
  }
}

// Canonical expansion by scanning, for rationals: stops at 0 or 1.
struct Scan {
  std::vector<OocfDigit> digits;
  bool ends_at_one = false;
};
inline Scan expand_by_scan(Real x, std::size_t cap = 10000) {
  Scan s;
  while (s.digits.size() < cap) {
    if (x == R(1)) {
      s.ends_at_one = true;
      return s;
    }
    if (x.sign() == 0) return s;
    OocfDigit d = digit_by_scan(x);
    s.digits.push_back(d);
    // invert x = 1 - 1/(a + e/(1+t)) for t
    Real u = R(1) / (R(1) - x) - R(d.a);
    x = R(d.eps) / u - R(1);
  }
  return s;
}

// Regular continued fraction of a rational by the Euclidean algorithm.
inline std::vector<std::int64_t> rcf_euclid(const Rational& x) {
  std::vector<std::int64_t> out;
  Int p = x.num(), q = x.den();
  // x = p/q in [0,1]: first partial quotient is 0 unless x = 1
  if (p == q) return {1};
  std::swap(p, q);  // now the reciprocal
  while (q != 0) {
    Int d = p / q;
    out.push_back(d.get_si());
    Int r = p - d * q;
    p = q;
    q = r;
  }
  return out;
}

inline Rational rcf_nested(const std::vector<std::int64_t>& ds) {
  if (ds.empty()) return Rational(0);
  Rational t(0);
  for (auto it = ds.rbegin(); it != ds.rend(); ++it) t = Rational(1) / (Rational(Int(static_cast<long>(*it))) + t);
  return t;
}

// Best 1-rational approximations by trying every odd/odd a/b with b <= qmax
// and -b-1 <= a <= 2b+1, comparing |bx - a|^2 as exact field elements.
inline std::vector<Rational> best_brute(const Real& x, long qmax) {
  std::vector<Rational> out;
  bool have = false;
  Real best;
  for (long b = 1; b <= qmax; b += 2) {
    bool found = false;
    Real cand_err;
    long cand_a = 0;
    for (long a = -b - 1; a <= 2 * b + 1; ++a) {
      if (a % 2 == 0 || std::gcd(a, b) != 1) continue;
      Real e = R(b) * x - R(a);
      Real e2 = e * e;
      if (!found || e2 < cand_err) {
        found = true;
        cand_err = e2;
        cand_a = a;
      }
    }
    if (found && (!have || cand_err < best)) {
      have = true;
      best = cand_err;
      out.emplace_back(Int(cand_a), Int(b));
    }
  }
  return out;
}

inline OocfDigit random_digit(std::mt19937_64& rng, long amax = 12) {
  std::uniform_int_distribution<long> a(1, amax);
  std::bernoulli_distribution e(0.5);
  OocfDigit d{a(rng), e(rng) ? 1 : -1};
  if (d.a == 1) d.eps = 1;
  return d;
}

inline Rational random_unit_rational(std::mt19937_64& rng, long qmax = 1000) {
  std::uniform_int_distribution<long> qd(1, qmax);
  long q = qd(rng);
  std::uniform_int_distribution<long> pd(0, q);
  return Rational(Int(pd(rng)), Int(q));
}

}  // namespace oracle
