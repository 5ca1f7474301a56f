#include "oodd/oocf.hpp"

#include <map>

#include "oodd/errors.hpp"
#include "oodd/maps.hpp"

namespace oodd {

const char* to_string(Terminator t) {
  switch (t) {
    case Terminator::finite: return "finite";
    case Terminator::tail_2m1: return "tail_2m1";
    case Terminator::periodic: return "periodic";
    case Terminator::truncated: return "truncated";
  }
  return "?";
}

std::span<const OocfDigit> OocfExpansion::preperiod() const {
  std::size_t n = terminator == Terminator::periodic ? period_start : digits.size();
  return std::span<const OocfDigit>(digits).first(n);
}

std::span<const OocfDigit> OocfExpansion::period() const {
  if (terminator != Terminator::periodic) return {};
  return std::span<const OocfDigit>(digits).subspan(period_start);
}

OocfDigitStream::OocfDigitStream(const Real& x) : zeta_(x) {
  require_unit_interval(x, "oocf expansion input");
}

bool OocfDigitStream::exhausted() const { return zeta_.sign() == 0 || zeta_ == Real(1); }

std::optional<OocfDigit> OocfDigitStream::next() {
  if (exhausted()) return std::nullopt;
  OocfDigit d = oocf_branch_of(zeta_);
  zeta_ = branch_forward(d, zeta_);
  return d;
}

OocfExpansion expand(const Real& x, std::size_t max_digits) {
  OocfDigitStream stream(x);
  OocfExpansion out;
  out.radicand = x.radicand();
  std::map<QuadIrr, std::size_t> seen;
  for (;;) {
    const Real& zeta = stream.state();
    if (zeta.sign() == 0) {
      out.terminator = Terminator::tail_2m1;
      return out;
    }
    if (zeta == Real(1)) {
      out.terminator = Terminator::finite;
      return out;
    }
    if (zeta.is_quadratic()) {
      // Every state before the first repeat is distinct, so the first hit
      // is the earliest state of the cycle and the period is minimal.
      auto [it, fresh] = seen.emplace(zeta.quad(), out.digits.size());
      if (!fresh) {
        out.terminator = Terminator::periodic;
        out.period_start = it->second;
        return out;
      }
    }
    if (out.digits.size() >= max_digits) {
      out.terminator = Terminator::truncated;
      return out;
    }
    out.digits.push_back(*stream.next());
  }
}

std::vector<OocfExpansion> all_expansions(const Real& x) {
  if (!x.is_rational()) throw InputError("all_expansions: irrational input has a unique expansion");
  if (x.sign() <= 0 || x >= Real(1)) throw InputError("all_expansions: x must lie in (0,1)");
  OocfExpansion canonical = expand(x, kUnbounded);
  OocfExpansion twin = canonical;
  OocfDigit& last = twin.digits.back();
  if (canonical.terminator == Terminator::finite) {
    // Orbit passed through (2k-1)/(2k+1): (k,1) canonically, (k+1,-1) otherwise.
    last = OocfDigit{last.a + 1, -1};
    return {twin, canonical};
  }
  // Orbit passed through m/(m+1): (m+2,-1) canonically, (m,1) otherwise.
  last = OocfDigit{last.a - 2, 1};
  return {canonical, twin};
}

Mat2 digit_product(std::span<const OocfDigit> digits) {
  Mat2 m;
  for (const OocfDigit& d : digits) m = m * digit_matrix(d);
  return m;
}

namespace {

// sqrt(disc) = (num/den) * sqrt(radicand), over the preferred radicand when
// the ratio is a rational square, otherwise with small square factors stripped.
struct Surd {
  Int num, den, radicand;
};

Surd surd_over(const Int& disc, const std::optional<Int>& hint) {
  if (hint) {
    Int prod = disc * *hint;
    if (is_perfect_square(prod)) {
      Rational coeff(isqrt(prod), *hint);
      return {coeff.num(), coeff.den(), *hint};
    }
  }
  Int coeff = 1, rest = disc;
  for (long p = 2; p <= 10'000 && Int(p * p) <= rest; ++p) {
    Int sq = Int(p) * p;
    while (rest % sq == 0) {
      rest /= sq;
      coeff *= p;
    }
  }
  return {coeff, 1, rest};
}

// Runs the period's branch maps from z over closed B-intervals; true if z returns to itself.
bool is_cycle_point(const Real& z, std::span<const OocfDigit> period) {
  if (!in_unit_interval(z)) return false;
  Real zeta = z;
  for (const OocfDigit& d : period) {
    if (!in_branch_closed(d, zeta)) return false;
    zeta = branch_forward(d, zeta);
  }
  return zeta == z;
}

Real periodic_point(const OocfExpansion& e) {
  auto period = e.period();
  if (period.empty()) throw MalformedExpansion("periodic expansion with empty period");
  Mat2 c = digit_product(period);
  // c z^2 + (d - a) z - b = 0
  std::vector<Real> candidates;
  if (c.c == 0) {
    if (c.d != c.a) candidates.emplace_back(Rational(c.b, c.d - c.a));
  } else {
    Int disc = (c.d - c.a) * (c.d - c.a) + 4 * c.b * c.c;
    if (disc >= 0) {
      Int two_c = 2 * c.c;
      if (is_perfect_square(disc)) {
        Int r = isqrt(disc);
        candidates.emplace_back(Rational(c.a - c.d + r, two_c));
        if (r != 0) candidates.emplace_back(Rational(c.a - c.d - r, two_c));
      } else {
        Surd sd = surd_over(disc, e.radicand);
        Int p = (c.a - c.d) * sd.den;
        candidates.push_back(Real::from_parts(p, sd.num, sd.radicand, two_c * sd.den));
        candidates.push_back(Real::from_parts(p, -sd.num, sd.radicand, two_c * sd.den));
      }
    }
  }
  std::optional<Real> found;
  for (const Real& z : candidates) {
    if (!is_cycle_point(z, period)) continue;
    if (found && !(*found == z)) throw MalformedExpansion("period has two fixed points in [0,1]");
    found = z;
  }
  if (!found) throw MalformedExpansion("period has no fixed point in [0,1]");
  return *found;
}

}  // namespace

Real evaluate(const OocfExpansion& e) {
  switch (e.terminator) {
    case Terminator::finite:
    case Terminator::truncated:
      return mat_apply(digit_product(e.digits), Real(1));
    case Terminator::tail_2m1:
      return mat_apply(digit_product(e.digits), Real(0));
    case Terminator::periodic: {
      Real z = periodic_point(e);
      return mat_apply(digit_product(e.preperiod()), z);
    }
  }
  throw MalformedExpansion("unknown terminator");
}

PeriodInfo detect_period(const QuadIrr& x, std::size_t cap) {
  Real v(x);
  if (v.sign() <= 0 || v >= Real(1)) throw InputError("detect_period: x must lie in (0,1)");
  OocfExpansion e = expand(v, cap);
  if (e.terminator != Terminator::periodic)
    throw CapExceeded("detect_period: no repeated tail within " + std::to_string(cap) + " digits");
  return {e.period_start, e.digits.size() - e.period_start};
}

}  // namespace oodd
