#include "oodd/maps.hpp"

#include <omp.h>

#include <cmath>
#include <limits>

#include "oodd/errors.hpp"
#include "oodd/parallel.hpp"

namespace oodd {

namespace {

const Real kZero(0);
const Real kOne(1);
const Real kHalf(Rational(1, 2));
const Real kThird(Rational(1, 3));

std::int64_t to_int64(const Int& v, const char* what) {
  if (!v.fits_slong_p()) throw InputError(std::string(what) + " " + v.get_str() + " exceeds 64 bits");
  return v.get_si();
}

}  // namespace

Real gauss(const Real& x) {
  require_unit_interval(x, "gauss: x");
  if (x.sign() == 0) return kZero;
  Real y = x.reciprocal();
  return y - Real(Rational(y.floor()));
}

Real farey(const Real& x) {
  require_unit_interval(x, "farey: x");
  if (x <= kHalf) return x / (kOne - x);
  return (kOne - x) / x;
}

Real romik(const Real& x) {
  require_unit_interval(x, "romik: x");
  if (x <= kThird) return x / (kOne - Real(2) * x);
  if (x <= kHalf) return x.reciprocal() - Real(2);
  return Real(2) - x.reciprocal();
}

EicfDigit eicf_branch_of(const Real& x) {
  require_unit_interval(x, "eicf: x");
  if (x.sign() == 0) throw InputError("eicf: 0 has no digit");
  Int m = x.reciprocal().floor();
  std::int64_t mm = to_int64(m, "eicf digit");
  if (mm % 2 == 0) return {mm, 1};
  return {mm + 1, -1};
}

Real eicf_map(const Real& x) {
  require_unit_interval(x, "eicf: x");
  if (x.sign() == 0) return kZero;
  EicfDigit d = eicf_branch_of(x);
  Real b(Rational(Int(static_cast<long>(d.b))));
  return d.eta == 1 ? x.reciprocal() - b : b - x.reciprocal();
}

OocfDigit oocf_branch_of(const Real& x) {
  require_unit_interval(x, "oocf: x");
  if (x == kOne) throw InputError("oocf: 1 has no digit");
  Int k = (kOne - x).reciprocal().floor();
  std::int64_t kk = to_int64(k, "oocf digit");
  if (kk >= std::numeric_limits<std::int64_t>::max() / 2)
    throw InputError("oocf digit " + k.get_str() + " exceeds 64 bits");
  Real split(Rational(2 * k - 1, 2 * k + 1));
  if (x < split) return {kk + 1, -1};
  return {kk, 1};
}

Real branch_forward(const OocfDigit& d, const Real& x) {
  require_legal(d);
  Real k(Rational(Int(static_cast<long>(d.eps == -1 ? d.a - 1 : d.a))));
  Real num = k * x - (k - kOne);
  Real den = k - (k + kOne) * x;
  if (d.eps == 1) std::swap(num, den);
  if (den.sign() == 0) throw InputError("oocf branch " + to_string(d) + " has a pole at " + x.str());
  return num / den;
}

Real oocf_map(const Real& x) {
  require_unit_interval(x, "oocf: x");
  if (x == kOne) return kOne;
  return branch_forward(oocf_branch_of(x), x);
}

Real branch_inverse(const OocfDigit& d, const Real& t) {
  require_legal(d);
  require_unit_interval(t, "branch_inverse: t");
  Real a(Rational(Int(static_cast<long>(d.a))));
  Real eps(static_cast<long>(d.eps));
  return kOne - (a + eps / (kOne + t)).reciprocal();
}

std::pair<Rational, Rational> branch_interval(const OocfDigit& d) {
  require_legal(d);
  Int k = Int(static_cast<long>(d.eps == -1 ? d.a - 1 : d.a));
  Rational mid(2 * k - 1, 2 * k + 1);
  if (d.eps == -1) return {Rational(k - 1, k), mid};
  return {mid, Rational(k, k + 1)};
}

bool in_branch_closed(const OocfDigit& d, const Real& x) {
  auto [lo, hi] = branch_interval(d);
  return Real(lo) <= x && x <= Real(hi);
}

Real apply_map(MapKind kind, const Real& x) {
  switch (kind) {
    case MapKind::gauss: return gauss(x);
    case MapKind::farey: return farey(x);
    case MapKind::romik: return romik(x);
    case MapKind::eicf: return eicf_map(x);
    case MapKind::oocf: return oocf_map(x);
  }
  throw InputError("unknown map");
}

bool in_hitting_set(HittingSet e, const Real& x) {
  switch (e) {
    case HittingSet::E1: return x.sign() == 0 || x >= kThird;
    case HittingSet::E2: return x <= kHalf || x == kOne;
    case HittingSet::gauss_farey: return x.sign() == 0 || x > kHalf;
  }
  throw InputError("unknown hitting set");
}

Real jump_transform(MapKind base, HittingSet e, const Real& x, std::uint64_t cap) {
  require_unit_interval(x, "jump_transform: x");
  Real y = x;
  for (std::uint64_t steps = 0; steps < cap; ++steps) {
    if (in_hitting_set(e, y)) return apply_map(base, y);
    y = apply_map(base, y);
  }
  throw CapExceeded("jump_transform: no hit within " + std::to_string(cap) + " steps from " +
                    x.str());
}

// ---- invariant measure ----------------------------------------------------

double log_measure(const Rational& lo, const Rational& hi) {
  if (lo.sign() <= 0 || hi.sign() <= 0) throw InputError("log_measure needs positive endpoints");
  Rational rel = (hi - lo) / lo;
  return std::log1p(rel.to_double());
}

namespace {

void validate(const Interval& iv) {
  if (iv.lo.sign() <= 0) throw InputError("measure_check: lo must be > 0 (infinite measure at 0)");
  if (iv.hi > Rational(1)) throw InputError("measure_check: hi must be <= 1");
  if (iv.lo > iv.hi) throw InputError("measure_check: lo > hi");
}

// mu of the images of I under the two branches with index k.
double branch_pair_term(const Interval& iv, std::int64_t k) {
  double total = 0;
  for (OocfDigit d : {OocfDigit{k + 1, -1}, OocfDigit{k, 1}}) {
    Rational a = mat_apply(digit_matrix(d), Real(iv.lo)).rational();
    Rational b = mat_apply(digit_matrix(d), Real(iv.hi)).rational();
    total += a < b ? log_measure(a, b) : log_measure(b, a);
  }
  return total;
}

MeasureReport finish(const Interval& iv, const std::vector<double>& terms, std::int64_t cutoff,
                     double tol) {
  MeasureReport rep;
  rep.cutoff = cutoff;
  rep.tol = tol;
  for (double t : terms) rep.lhs += t;
  rep.rhs = log_measure(iv.lo, iv.hi);
  rep.diff = std::fabs(rep.lhs - rep.rhs);
  rep.tail_bound = cutoff > 0 ? 1.0 / static_cast<double>(cutoff) : 0.0;
  rep.pass = rep.diff <= tol;
  return rep;
}

void check_cutoff(std::int64_t cutoff) {
  if (cutoff < 1) throw InputError("measure_check: branch cutoff must be >= 1");
}

}  // namespace

MeasureReport measure_check(const Interval& iv, std::int64_t cutoff, double tol) {
  validate(iv);
  check_cutoff(cutoff);
  std::vector<double> terms(static_cast<std::size_t>(cutoff));
#pragma omp parallel for schedule(dynamic, 64) num_threads(worker_count())
  for (std::int64_t k = 1; k <= cutoff; ++k) terms[k - 1] = branch_pair_term(iv, k);
  return finish(iv, terms, cutoff, tol);
}

MeasureReport measure_check_serial(const Interval& iv, std::int64_t cutoff, double tol) {
  validate(iv);
  check_cutoff(cutoff);
  std::vector<double> terms(static_cast<std::size_t>(cutoff));
  for (std::int64_t k = 1; k <= cutoff; ++k) terms[k - 1] = branch_pair_term(iv, k);
  return finish(iv, terms, cutoff, tol);
}

}  // namespace oodd
