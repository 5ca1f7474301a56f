#pragma once

/*
 * Regular and even-integer continued fractions, and their links to OOCF.
 *
 * RCF digits are those of x = [0; d1, d2, ...] in [0,1]. Finite expansions
 * are canonical: the last digit is >= 2 unless the expansion is [1] (x = 1).
 * EICF digits (b, eta) mean x = 1/(b1 + eta1/(b2 + eta2/(...))).
 */

#include <cstdint>
#include <deque>
#include <optional>
#include <span>
#include <vector>

#include "oodd/digits.hpp"
#include "oodd/oocf.hpp"
#include "oodd/real.hpp"

namespace oodd {

enum class RcfEnd { finite, truncated };

struct RcfExpansion {
  std::vector<std::int64_t> digits;
  RcfEnd terminator = RcfEnd::finite;

  friend bool operator==(const RcfExpansion&, const RcfExpansion&) = default;
};

RcfExpansion rcf_expand(const Real& x, std::size_t max_digits = kDefaultMaxDigits);
// Merges a trailing 1 of a finite expansion into its predecessor. Throws
// InputError on a digit < 1.
RcfExpansion normalize_rcf(RcfExpansion e);
// Exact value of a finite expansion; the last convergent of a truncated one.
Rational rcf_evaluate(const RcfExpansion& e);

// Classical convergents p_n/q_n, n = 1..len.
std::vector<Rational> rcf_convergents(const RcfExpansion& e);
// (p_{n-2} + j p_{n-1}) / (q_{n-2} + j q_{n-1}) for j = 1..d_n, 1 <= n <= len.
std::vector<Rational> intermediate_convergents(const RcfExpansion& e, std::size_t n);

// RCF of f_(a,eps)(x) from the RCF of x.
RcfExpansion change_rcf(const OocfDigit& d, const RcfExpansion& e);

// Streaming RCF -> OOCF transducer producing canonical OOCF digits.
// Digits are pushed one at a time; close() declares the stream finite.
// A rule fires only once the lookahead it needs is present, so output is
// never retracted.
class RcfToOocf {
 public:
  explicit RcfToOocf(std::size_t max_output = kUnbounded) : max_output_(max_output) {}

  void push(std::int64_t d);
  void close();

  const std::vector<OocfDigit>& digits() const { return out_; }
  std::optional<Terminator> terminator() const { return term_; }
  // True when more RCF digits are needed before the next OOCF digit.
  bool needs_more() const { return !term_ && !closed_ && out_.size() < max_output_; }

 private:
  void run();
  void emit(OocfDigit d) { out_.push_back(d); }

  std::deque<std::int64_t> buf_;
  std::vector<OocfDigit> out_;
  std::optional<Terminator> term_;
  bool closed_ = false;
  std::size_t max_output_;
};

struct RcfConversion {
  OocfExpansion expansion;
  bool need_more_digits = false;  // truncated input ran out before a decision
};

RcfConversion convert_rcf_to_oocf(const RcfExpansion& e, std::size_t max_digits = kUnbounded);
OocfExpansion rcf_to_oocf(const RcfExpansion& e, std::size_t max_digits = kUnbounded);

// ---- EICF -----------------------------------------------------------------

enum class EicfEnd { finite, tail_one, truncated };  // tail_one: reached 1, (2,-1) forever

struct EicfExpansion {
  std::vector<EicfDigit> digits;
  EicfEnd terminator = EicfEnd::truncated;
};

EicfExpansion eicf_expand(const Real& x, std::size_t max_digits = kDefaultMaxDigits);
// Convergents n = 1..len by r_n = b_n r_{n-1} + eta_{n-1} r_{n-2}, r_{-1}/s_{-1} = 1/0, r_0/s_0 = 0/1.
std::vector<Rational> eicf_convergents(std::span<const EicfDigit> digits);
// Same values from products of [[b, eta],[1, 0]].
std::vector<Rational> eicf_convergents_matrix(std::span<const EicfDigit> digits);

// f(x) = (1-x)/(1+x), the conjugacy between T_OOCF and T_EICF. An involution.
Real conjugacy(const Real& x);

// ---- verification reports -------------------------------------------------

struct IntermediateReport {
  std::vector<Rational> principals;
  std::vector<bool> located;
  bool pass = false;
};

// Every OOCF principal convergent p_n/q_n, 1 <= n <= n_max, is an intermediate
// convergent of the RCF of x. For rational x both RCF forms are searched,
// each with the level after its last digit taken as d = infinity.
IntermediateReport verify_intermediate(const Real& x, std::size_t n_max);

struct EicfBestReport {
  std::vector<Rational> candidates;       // 1 - p^E_n(1-x)/q^E_n(1-x)
  std::vector<Rational> one_rationals;    // odd/odd members
  std::vector<Rational> oocf_principals;
  bool pass = false;
};

EicfBestReport eicf_best_to_oocf(const QuadIrr& x, std::size_t n_max);

struct ConjugacyReport {
  std::size_t steps = 0;
  bool map_conjugacy = true;     // f(T_OOCF(z)) = T_EICF(f(z)) along the orbit
  bool digit_correspondence = true;  // phi(oocf digit) = eicf digit of f(x)
  bool terminator_match = true;
  bool convergents_match = true;     // p^E_n(f x)/q^E_n(f x) = f(p_n/q_n)
  bool eicf_inf_rational = true;     // all EICF convergents are inf-rationals
  bool pass() const {
    return map_conjugacy && digit_correspondence && terminator_match && convergents_match &&
           eicf_inf_rational;
  }
};

ConjugacyReport verify_conjugacy(const Real& x, std::size_t max_digits);

}  // namespace oodd
