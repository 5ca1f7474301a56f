#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "oodd/digits.hpp"
#include "oodd/real.hpp"

namespace oodd {

enum class Terminator {
  finite,     // orbit reached 1; value is a 1-rational
  tail_2m1,   // orbit reached 0; digits continue as (2,-1) forever
  periodic,   // digits[period_start..] repeat forever
  truncated,  // cut at max_digits
};

const char* to_string(Terminator t);

struct OocfExpansion {
  std::vector<OocfDigit> digits;
  Terminator terminator = Terminator::truncated;
  std::size_t period_start = 0;
  // Field of the expanded value, if known. evaluate() writes periodic
  // values over this radicand so round trips compare equal.
  std::optional<Int> radicand;

  std::span<const OocfDigit> preperiod() const;
  std::span<const OocfDigit> period() const;

  friend bool operator==(const OocfExpansion&, const OocfExpansion&) = default;
};

// Lazily yields canonical digits of x, one T_OOCF step at a time.
class OocfDigitStream {
 public:
  explicit OocfDigitStream(const Real& x);

  // Next digit, or nullopt once the orbit has reached 0 or 1.
  std::optional<OocfDigit> next();
  const Real& state() const { return zeta_; }
  bool exhausted() const;

 private:
  Real zeta_;
};

constexpr std::size_t kDefaultMaxDigits = 1000;
constexpr std::size_t kUnbounded = std::numeric_limits<std::size_t>::max();

// Canonical expansion: stops at 1 (finite), 0 (tail_2m1), a repeated tail
// (periodic, quadratic inputs only) or after max_digits digits (truncated).
OocfExpansion expand(const Real& x, std::size_t max_digits = kDefaultMaxDigits);

// Both expansions of a rational in (0,1): two finite ones for a 1-rational,
// two (2,-1)-tailed ones otherwise. The variant with eps = -1 at the
// differing position comes first. Throws InputError for irrational x.
std::vector<OocfExpansion> all_expansions(const Real& x);

// Exact value. truncated -> principal convergent of the prefix;
// periodic -> the fixed point of the period, pulled back through the preperiod.
// Throws MalformedExpansion if a periodic expansion has no valid fixed point.
Real evaluate(const OocfExpansion& e);

// Moebius matrix A_(a1,e1) ... A_(an,en).
Mat2 digit_product(std::span<const OocfDigit> digits);

struct PeriodInfo {
  std::size_t preperiod_len = 0;
  std::size_t period_len = 0;
};

constexpr std::size_t kDefaultPeriodCap = 100'000;

// Smallest (i, l) with zeta_{i+1} = zeta_{i+1+l}. Throws InputError unless
// x lies in (0,1) and CapExceeded if no repeat shows up within cap digits.
PeriodInfo detect_period(const QuadIrr& x, std::size_t cap = kDefaultPeriodCap);

}  // namespace oodd
