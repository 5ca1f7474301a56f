#pragma once

#include <compare>
#include <string>

#include "oodd/rational.hpp"

namespace oodd {

// (P + S*sqrt(D)) / Q with D > 0 not a perfect square and S != 0.
// Canonical form: Q > 0 and gcd(P, S, Q) = 1, so equal values over the same
// D have identical fields. D itself is kept literally (no squarefree
// reduction); mixing different D in one computation is an error.
class QuadIrr {
 public:
  // Throws InputError if D is a square or non-positive, S = 0 or Q = 0.
  QuadIrr(Int p, Int s, Int d, Int q);

  const Int& p() const { return p_; }
  const Int& s() const { return s_; }
  const Int& d() const { return d_; }
  const Int& q() const { return q_; }

  QuadIrr conjugate() const { return QuadIrr(p_, -s_, d_, q_); }

  std::string str() const;  // "(P+S*sqrt(D))/Q"

  friend bool operator==(const QuadIrr&, const QuadIrr&) = default;
  // Lexicographic on (D, P, S, Q); a storage order, not the numeric order.
  friend std::strong_ordering operator<=>(const QuadIrr& a, const QuadIrr& b);

 private:
  Int p_, s_, d_, q_;
};

// Sign of a + b*sqrt(d) for integers a, b and d >= 0 not a square (or b = 0).
int sign_surd(const Int& a, const Int& b, const Int& d);

}  // namespace oodd
