#pragma once

/*
 * Interval maps on [0,1] and their jump transformations.
 *
 *   gauss   G(x) = {1/x},                     G(0) = 0
 *   farey   F(x) = x/(1-x) on [0,1/2], (1-x)/x on [1/2,1]
 *   romik   R(x) = x/(1-2x) on [0,1/3], 1/x - 2 on [1/3,1/2], 2 - 1/x on [1/2,1]
 *   eicf    1/x - 2k on [1/(2k+1), 1/(2k)], 2k - 1/x on [1/(2k), 1/(2k-1)]
 *   oocf    the jump transformation of R over E2 = [0,1/2] u {1}
 *
 * The OOCF branches are B(k+1,-1) = [(k-1)/k, (2k-1)/(2k+1)) and
 * B(k,1) = [(2k-1)/(2k+1), k/(k+1)), half-open so every x in [0,1) has
 * exactly one digit. The map itself is continuous, so the convention only
 * affects digit extraction.
 */

#include <cstdint>
#include <functional>
#include <vector>

#include "oodd/digits.hpp"
#include "oodd/real.hpp"

namespace oodd {

enum class MapKind { gauss, farey, romik, eicf, oocf };

// E1 = {0} u [1/3,1] (EICF from Romik), E2 = [0,1/2] u {1} (OOCF from Romik),
// gauss_farey = {0} u (1/2,1] (Gauss from Farey).
enum class HittingSet { E1, E2, gauss_farey };

Real gauss(const Real& x);
Real farey(const Real& x);
Real romik(const Real& x);
Real eicf_map(const Real& x);
Real oocf_map(const Real& x);

Real apply_map(MapKind kind, const Real& x);
bool in_hitting_set(HittingSet e, const Real& x);

constexpr std::uint64_t kDefaultJumpCap = 1'000'000;

// U^{n_E(x)+1}(x), n_E the first j >= 0 with U^j(x) in E.
// Throws CapExceeded after `cap` applications of U.
Real jump_transform(MapKind base, HittingSet e, const Real& x,
                    std::uint64_t cap = kDefaultJumpCap);

// Canonical digit of x in [0,1). Throws InputError at x = 1 (no digit).
OocfDigit oocf_branch_of(const Real& x);

// f_(a,eps)(t) = 1 - 1/(a + eps/(1+t)).
Real branch_inverse(const OocfDigit& d, const Real& t);
// The OOCF branch of digit d applied to x, ignoring which branch x canonically
// belongs to. Used for non-canonical (twin) expansions.
Real branch_forward(const OocfDigit& d, const Real& x);
// Closed interval B(a,eps) membership.
bool in_branch_closed(const OocfDigit& d, const Real& x);
// Endpoints [lo, hi] of the closed branch interval.
std::pair<Rational, Rational> branch_interval(const OocfDigit& d);

// Canonical EICF digit of x in (0,1]: b = floor(1/x) rounded up to even.
EicfDigit eicf_branch_of(const Real& x);

// ---- invariant measure (1/x) dx -------------------------------------------

struct Interval {
  Rational lo;
  Rational hi;
  bool lo_closed = true;
  bool hi_closed = true;
};

struct MeasureReport {
  double lhs = 0;        // sum over branches of mu(f_branch(I))
  double rhs = 0;        // ln(hi/lo)
  double diff = 0;       // |lhs - rhs|
  double tail_bound = 0; // mass of branches beyond K, at most 1/K
  std::int64_t cutoff = 0;
  double tol = 0;
  bool pass = false;
};

constexpr std::int64_t kDefaultMeasureCutoff = 2000;
constexpr double kDefaultMeasureTol = 5e-3;

// Sums mu(f_(k+1,-1)(I)) + mu(f_(k,1)(I)) for k = 1..K. Terms are computed in
// parallel and summed in ascending k. Throws InputError unless 0 < lo <= hi <= 1.
MeasureReport measure_check(const Interval& iv, std::int64_t cutoff = kDefaultMeasureCutoff,
                            double tol = kDefaultMeasureTol);
// Single-threaded reference; must agree with measure_check bit for bit.
MeasureReport measure_check_serial(const Interval& iv, std::int64_t cutoff = kDefaultMeasureCutoff,
                                   double tol = kDefaultMeasureTol);

// mu([lo, hi]) = ln(hi/lo) for exact rational endpoints, accurate when hi/lo ~ 1.
double log_measure(const Rational& lo, const Rational& hi);

}  // namespace oodd
