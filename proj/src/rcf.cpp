#include "oodd/rcf.hpp"

#include <algorithm>

#include "oodd/convergents.hpp"
#include "oodd/errors.hpp"
#include "oodd/maps.hpp"

namespace oodd {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw InputError("RCF digit exceeds 64 bits");
  return r;
}

Int big(std::int64_t v) { return Int(static_cast<long>(v)); }

// p_{n}, q_{n} for n = -1..len stored at index n+1.
struct RcfTable {
  std::vector<Int> p{1, 0};
  std::vector<Int> q{0, 1};

  explicit RcfTable(std::span<const std::int64_t> digits) {
    for (std::int64_t d : digits) {
      std::size_t n = p.size();
      p.push_back(big(d) * p[n - 1] + p[n - 2]);
      q.push_back(big(d) * q[n - 1] + q[n - 2]);
    }
  }
  const Int& P(std::ptrdiff_t n) const { return p[n + 1]; }
  const Int& Q(std::ptrdiff_t n) const { return q[n + 1]; }
};

}  // namespace

RcfExpansion rcf_expand(const Real& x, std::size_t max_digits) {
  require_unit_interval(x, "rcf_expand: x");
  RcfExpansion e;
  Real zeta = x;
  while (zeta.sign() != 0) {
    if (e.digits.size() >= max_digits) {
      e.terminator = RcfEnd::truncated;
      return e;
    }
    Real inv = zeta.reciprocal();
    Int d = inv.floor();
    if (!d.fits_slong_p()) throw InputError("RCF digit " + d.get_str() + " exceeds 64 bits");
    e.digits.push_back(d.get_si());
    zeta = inv - Real(Rational(d));
  }
  e.terminator = RcfEnd::finite;
  return e;
}

RcfExpansion normalize_rcf(RcfExpansion e) {
  for (std::int64_t d : e.digits)
    if (d < 1) throw InputError("RCF digits must be >= 1");
  if (e.terminator == RcfEnd::finite && e.digits.size() > 1 && e.digits.back() == 1) {
    e.digits.pop_back();
    e.digits.back() = checked_add(e.digits.back(), 1);
  }
  return e;
}

Rational rcf_evaluate(const RcfExpansion& e) {
  RcfTable t(e.digits);
  auto n = static_cast<std::ptrdiff_t>(e.digits.size());
  return Rational(t.P(n), t.Q(n));
}

std::vector<Rational> rcf_convergents(const RcfExpansion& e) {
  RcfTable t(e.digits);
  std::vector<Rational> out;
  for (std::size_t n = 1; n <= e.digits.size(); ++n) {
    auto i = static_cast<std::ptrdiff_t>(n);
    out.emplace_back(t.P(i), t.Q(i));
  }
  return out;
}

std::vector<Rational> intermediate_convergents(const RcfExpansion& e, std::size_t n) {
  if (n < 1 || n > e.digits.size())
    throw InputError("intermediate_convergents: level " + std::to_string(n) + " out of range");
  RcfTable t(e.digits);
  auto i = static_cast<std::ptrdiff_t>(n);
  std::vector<Rational> out;
  for (std::int64_t j = 1; j <= e.digits[n - 1]; ++j)
    out.emplace_back(t.P(i - 2) + big(j) * t.P(i - 1), t.Q(i - 2) + big(j) * t.Q(i - 1));
  return out;
}

RcfExpansion change_rcf(const OocfDigit& d, const RcfExpansion& e) {
  require_legal(d);
  RcfExpansion src = normalize_rcf(e);
  const auto& ds = src.digits;
  const bool finite = src.terminator == RcfEnd::finite;
  RcfExpansion out;
  out.terminator = src.terminator;
  auto append_rest = [&](std::size_t from) {
    out.digits.insert(out.digits.end(), ds.begin() + static_cast<std::ptrdiff_t>(from), ds.end());
  };

  if (d.eps == 1 && d.a == 1) {
    out.digits.push_back(2);
    append_rest(0);
  } else if (d.eps == 1) {
    out.digits = {1, d.a - 1, 1};
    append_rest(0);
  } else {
    if (ds.empty() && !finite) throw InputError("change_rcf: truncated expansion without digits");
    if (d.a == 2) {
      if (!ds.empty()) {
        out.digits.push_back(checked_add(ds[0], 2));
        append_rest(1);
      }
    } else {
      out.digits = {1, d.a - 2};
      if (!ds.empty()) {
        out.digits.push_back(checked_add(ds[0], 1));
        append_rest(1);
      }
    }
  }
  return normalize_rcf(std::move(out));
}

// ---- RCF -> OOCF transducer ------------------------------------------------

void RcfToOocf::push(std::int64_t d) {
  if (closed_) throw InputError("RcfToOocf: push after close");
  if (d < 1) throw InputError("RCF digits must be >= 1");
  buf_.push_back(d);
  run();
}

void RcfToOocf::close() {
  if (closed_) return;
  closed_ = true;
  if (buf_.size() > 1 && buf_.back() == 1) {
    buf_.pop_back();
    buf_.back() = checked_add(buf_.back(), 1);
  }
  run();
}

void RcfToOocf::run() {
  while (!term_ && out_.size() < max_output_) {
    const std::size_t n = buf_.size();
    if (n == 0) {
      if (!closed_) return;
      term_ = Terminator::tail_2m1;  // x = 0
      return;
    }
    const std::int64_t d1 = buf_[0];
    if (d1 >= 3) {
      if (d1 == 3 && n == 1) {
        if (!closed_) return;
        emit({1, 1});  // x = 1/3 takes (1,1) under the half-open partition
        term_ = Terminator::finite;
        return;
      }
      emit({2, -1});
      buf_[0] = d1 - 2;
      continue;
    }
    if (d1 == 2) {
      if (n == 1) {
        if (!closed_) return;
        emit({3, -1});  // x = 1/2
        term_ = Terminator::tail_2m1;
        return;
      }
      emit({1, 1});
      buf_.pop_front();
      continue;
    }
    // d1 == 1: x = [0; 1, d2, tau] = 1 - 1/(d2 + 1 + tau)
    if (n == 1) {
      if (!closed_) return;
      term_ = Terminator::finite;  // x = 1
      return;
    }
    const std::int64_t d2 = buf_[1];
    if (n == 2) {
      if (!closed_) return;
      emit({checked_add(d2, 2), -1});  // tau = 0
      term_ = Terminator::tail_2m1;
      return;
    }
    const std::int64_t d3 = buf_[2];
    if (d3 == 1) {
      // A lone trailing 1 would be merged at close(); wait until it is not last.
      if (n == 3 && !closed_) return;
      emit({checked_add(d2, 1), 1});  // tau in (1/2, 1), F(tau) = G(tau)
      buf_.erase(buf_.begin(), buf_.begin() + 3);
      continue;
    }
    if (d3 == 2 && n == 3) {
      if (!closed_) return;
      emit({checked_add(d2, 1), 1});  // tau = 1/2, F(tau) = 1
      term_ = Terminator::finite;
      return;
    }
    emit({checked_add(d2, 2), -1});  // tau in (0, 1/2), F(tau) = [0; d3-1, ...]
    buf_.erase(buf_.begin(), buf_.begin() + 2);
    buf_[0] = d3 - 1;
  }
}

RcfConversion convert_rcf_to_oocf(const RcfExpansion& e, std::size_t max_digits) {
  RcfExpansion src = normalize_rcf(e);
  RcfToOocf conv(max_digits);
  for (std::int64_t d : src.digits) conv.push(d);
  if (src.terminator == RcfEnd::finite) conv.close();

  RcfConversion out;
  out.expansion.digits = conv.digits();
  out.expansion.digits.resize(std::min(out.expansion.digits.size(), max_digits));
  if (auto t = conv.terminator(); t && conv.digits().size() <= max_digits) {
    out.expansion.terminator = *t;
  } else {
    out.expansion.terminator = Terminator::truncated;
    out.need_more_digits = conv.needs_more();
  }
  return out;
}

OocfExpansion rcf_to_oocf(const RcfExpansion& e, std::size_t max_digits) {
  return convert_rcf_to_oocf(e, max_digits).expansion;
}

// ---- EICF -----------------------------------------------------------------

EicfExpansion eicf_expand(const Real& x, std::size_t max_digits) {
  require_unit_interval(x, "eicf_expand: x");
  EicfExpansion e;
  Real zeta = x;
  for (;;) {
    if (zeta.sign() == 0) {
      e.terminator = EicfEnd::finite;
      return e;
    }
    if (zeta == Real(1)) {
      e.terminator = EicfEnd::tail_one;
      return e;
    }
    if (e.digits.size() >= max_digits) {
      e.terminator = EicfEnd::truncated;
      return e;
    }
    e.digits.push_back(eicf_branch_of(zeta));
    zeta = eicf_map(zeta);
  }
}

std::vector<Rational> eicf_convergents(std::span<const EicfDigit> digits) {
  std::vector<Rational> out;
  Int r2 = 1, s2 = 0, r1 = 0, s1 = 1;  // r_{n-2}, s_{n-2}, r_{n-1}, s_{n-1}
  int prev_eta = 1;
  for (const EicfDigit& d : digits) {
    Int r = big(d.b) * r1 + prev_eta * r2;
    Int s = big(d.b) * s1 + prev_eta * s2;
    r2 = std::move(r1);
    s2 = std::move(s1);
    r1 = r;
    s1 = s;
    prev_eta = d.eta;
    out.emplace_back(r, s);
  }
  return out;
}

std::vector<Rational> eicf_convergents_matrix(std::span<const EicfDigit> digits) {
  std::vector<Rational> out;
  Mat2 m{0, 1, 1, 0};  // [[b0, eta0], [1, 0]] with b0 = 0, eta0 = 1
  for (const EicfDigit& d : digits) {
    m = m * Mat2{big(d.b), d.eta, 1, 0};
    out.emplace_back(m.a, m.c);
  }
  return out;
}

Real conjugacy(const Real& x) {
  require_unit_interval(x, "conjugacy: x");
  return (Real(1) - x) / (Real(1) + x);
}

// ---- reports ----------------------------------------------------------------

IntermediateReport verify_intermediate(const Real& x, std::size_t n_max) {
  if (x.sign() <= 0 || x >= Real(1)) throw InputError("verify_intermediate: x must lie in (0,1)");
  IntermediateReport rep;
  OocfDigitStream stream(x);
  ConvergentBuilder b;
  for (std::size_t n = 1; n <= n_max; ++n) {
    auto d = stream.next();
    if (!d) {
      if (stream.state().sign() != 0) break;  // reached 1: expansion is finite
      d = OocfDigit{2, -1};
    }
    rep.principals.push_back(b.push(*d).principal.value());
  }

  Int qmax = 1;
  for (const Rational& r : rep.principals) qmax = std::max(qmax, r.den());
  RcfExpansion e;
  for (std::size_t depth = 16;; depth *= 2) {
    e = rcf_expand(x, depth);
    if (e.terminator == RcfEnd::finite) break;
    RcfTable t(e.digits);
    if (t.Q(static_cast<std::ptrdiff_t>(e.digits.size())) > qmax) break;
  }
  // A rational has a second RCF ending in (d - 1, 1); both count, each with an
  // open-ended level after its last digit.
  std::vector<RcfExpansion> forms{e};
  if (e.terminator == RcfEnd::finite && !e.digits.empty() && e.digits.back() > 1) {
    RcfExpansion alt = e;
    alt.digits.back() -= 1;
    alt.digits.push_back(1);
    forms.push_back(std::move(alt));
  }

  auto located_in = [](const RcfExpansion& f, const Rational& r) {
    RcfTable t(f.digits);
    const auto len = static_cast<std::ptrdiff_t>(f.digits.size());
    const bool finite = f.terminator == RcfEnd::finite;
    for (std::ptrdiff_t n = 1; n <= len + (finite ? 1 : 0); ++n) {
      const Int& q1 = t.Q(n - 1);
      Int rem = r.den() - t.Q(n - 2);
      if (q1 == 0 || rem <= 0 || rem % q1 != 0) continue;
      Int j = rem / q1;
      if (n <= len && j > big(f.digits[n - 1])) continue;
      if (t.P(n - 2) + j * t.P(n - 1) == r.num()) return true;
    }
    return false;
  };
  auto located = [&](const Rational& r) {
    return std::any_of(forms.begin(), forms.end(), [&](const RcfExpansion& f) { return located_in(f, r); });
  };
  rep.pass = true;
  for (const Rational& r : rep.principals) {
    bool ok = located(r);
    rep.located.push_back(ok);
    rep.pass = rep.pass && ok;
  }
  return rep;
}

EicfBestReport eicf_best_to_oocf(const QuadIrr& x, std::size_t n_max) {
  Real v(x);
  if (v.sign() <= 0 || v >= Real(1)) throw InputError("eicf_best_to_oocf: x must lie in (0,1)");
  EicfBestReport rep;
  EicfExpansion e = eicf_expand(Real(1) - v, n_max);
  Int qmax = 1;
  for (const Rational& c : eicf_convergents(e.digits)) {
    Rational cand = Rational(1) - c;
    rep.candidates.push_back(cand);
    if (classify(cand) == Parity::one_rational) {
      rep.one_rationals.push_back(cand);
      qmax = std::max(qmax, cand.den());
    }
  }
  rep.oocf_principals = principal_convergents_up_to(v, qmax);
  rep.pass = std::all_of(rep.one_rationals.begin(), rep.one_rationals.end(), [&](const Rational& r) {
    return std::find(rep.oocf_principals.begin(), rep.oocf_principals.end(), r) !=
           rep.oocf_principals.end();
  });
  return rep;
}

ConjugacyReport verify_conjugacy(const Real& x, std::size_t max_digits) {
  require_unit_interval(x, "verify_conjugacy: x");
  ConjugacyReport rep;
  Real fx = conjugacy(x);

  // Map identity along the OOCF orbit, and the OOCF digits themselves.
  std::vector<OocfDigit> oocf_digits;
  OocfDigitStream stream(x);
  for (std::size_t i = 0; i <= max_digits; ++i) {
    const Real& z = stream.state();
    if (!(conjugacy(oocf_map(z)) == eicf_map(conjugacy(z)))) rep.map_conjugacy = false;
    ++rep.steps;
    if (i == max_digits) break;
    auto d = stream.next();
    if (!d) break;
    oocf_digits.push_back(*d);
  }

  EicfExpansion ee = eicf_expand(fx, max_digits);
  if (ee.digits.size() != oocf_digits.size()) rep.digit_correspondence = false;
  for (std::size_t i = 0; i < std::min(ee.digits.size(), oocf_digits.size()); ++i)
    if (!(to_eicf(oocf_digits[i]) == ee.digits[i])) rep.digit_correspondence = false;

  const Real& end = stream.state();
  if (oocf_digits.size() < max_digits || ee.terminator != EicfEnd::truncated) {
    bool ok = (end == Real(1) && ee.terminator == EicfEnd::finite) ||
              (end.sign() == 0 && ee.terminator == EicfEnd::tail_one);
    rep.terminator_match = ok;
  }

  auto rows = convergent_table(oocf_digits);
  auto econv = eicf_convergents(ee.digits);
  for (std::size_t n = 1; n < rows.size() && n <= econv.size(); ++n)
    if (!(Real(econv[n - 1]) == conjugacy(Real(rows[n].principal.value())))) rep.convergents_match = false;
  for (const Rational& c : econv)
    if (classify(c) != Parity::inf_rational) rep.eicf_inf_rational = false;
  return rep;
}

}  // namespace oodd
