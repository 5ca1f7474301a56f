#pragma once

/*
 * Principal, sub- and pseudo-convergents of an OOCF prefix.
 *
 * For M = A_(a1,e1) ... A_(an,en) the three convergents are the images of
 * 1, infinity and 0 under M. They are kept as raw integer pairs (not
 * reduced Rationals) so identities such as p_n = p'_n + p''_n can be
 * checked on the integers themselves; every pair is coprime anyway since
 * M is unimodular.
 */

#include <cstddef>
#include <span>
#include <vector>

#include "oodd/digits.hpp"
#include "oodd/real.hpp"

namespace oodd {

struct Convergent {
  Int num;
  Int den;

  // Throws InputError for the point at infinity (den = 0).
  Rational value() const { return Rational(num, den); }
  bool is_infinite() const { return den == 0; }

  friend bool operator==(const Convergent&, const Convergent&) = default;
};

struct ConvergentTriple {
  std::size_t n = 0;
  Convergent principal{1, 1};  // p_n / q_n
  Convergent sub{1, 0};        // p'_n / q'_n
  Convergent pseudo{0, 1};     // p''_n / q''_n
  int eps_prod = 1;            // eps_1 ... eps_n
  int det_sign = 0;            // sgn(p_{n-1} q_n - p_n q_{n-1}); 0 at n = 0

  friend bool operator==(const ConvergentTriple&, const ConvergentTriple&) = default;
};

// Incremental scalar recursion:
//   p'_n = a_n p_{n-1} - p'_{n-1},  p''_n = p'_n + e_n p_{n-1},  p_n = 2 p'_n + e_n p_{n-1}
// seeded with p'_0/q'_0 = 1/0, p_0/q_0 = 1/1.
class ConvergentBuilder {
 public:
  ConvergentBuilder() = default;
  const ConvergentTriple& push(const OocfDigit& d);
  const ConvergentTriple& current() const { return cur_; }

 private:
  ConvergentTriple cur_;
};

// Rows n = 0..len; row 0 is the seed (1/1, 1/0, 0/1).
std::vector<ConvergentTriple> convergent_table(std::span<const OocfDigit> digits);
// Same rows from explicit digit-matrix products.
std::vector<ConvergentTriple> convergent_table_matrix(std::span<const OocfDigit> digits);

// p_n by the two-term recursion p_n = (2a_n + e_n - 1) p_{n-1} + e_{n-1} p_{n-2},
// p_{-1}/q_{-1} = -1/1, e_0 = 1. Entries n = 0..len.
std::vector<Convergent> principal_two_term(std::span<const OocfDigit> digits);

// Principal convergents p_n/q_n (n >= 0, so 1/1 first) of x with q_n <= qmax.
std::vector<Rational> principal_convergents_up_to(const Real& x, const Int& qmax);

struct BetweennessFlags {
  std::size_t n = 0;
  bool x_between_principal_pseudo = false;
  bool principal_between_sub_pseudo = false;
  bool nested_in_previous = false;         // triple n inside half-closed I_{n-1}
  bool previous_outside_sub_pseudo = false; // p_{n-1}/q_{n-1} not in [sub_n, pseudo_n]

  bool all() const {
    return x_between_principal_pseudo && principal_between_sub_pseudo && nested_in_previous &&
           previous_outside_sub_pseudo;
  }
};

// Ordering of x and the three convergents at n = prefix.size() >= 1. Throws InputError if
// x is not in the cylinder of the prefix.
BetweennessFlags betweenness_report(const Real& x, std::span<const OocfDigit> prefix);

struct GapCertificate {
  Real gap;       // |x - p_n/q_n|
  Rational bound; // 2/q_n
  bool certified = false;
};

GapCertificate convergence_gap(const Real& x, const ConvergentTriple& t);

// True if v lies between a and b, endpoints included.
bool between(const Real& v, const Real& a, const Real& b);

}  // namespace oodd
