#include "oodd/approx.hpp"

#include <omp.h>

#include <algorithm>

#include "oodd/convergents.hpp"
#include "oodd/errors.hpp"
#include "oodd/parallel.hpp"
#include "oodd/rcf.hpp"

namespace oodd {

FordCircle::FordCircle(const Rational& r) : base(r), radius(ford_radius(r)) {}

Rational ford_radius(const Rational& r) { return Rational(Int(1), 2 * r.den() * r.den()); }

bool ford_tangent(const Rational& r1, const Rational& r2) {
  Int det = r1.num() * r2.den() - r1.den() * r2.num();
  return abs(det) == 1;
}

Real err_sq(const Rational& r, const Real& x) {
  Real e = Real(Rational(r.den())) * x - Real(Rational(r.num()));
  return e * e;
}

Real horo_radius(const Rational& r, const Real& x) { return err_sq(r, x) / Real(2); }

namespace {

// b x - a = (u + v sqrt D) / Q for x = (P + S sqrt D)/Q.
struct Err {
  Int u;
  Int v;
};

// Sign of |e1| - |e2|, exactly.
int cmp_abs(const Err& e1, const Err& e2, const Int& d) {
  Int rat = e1.u * e1.u + e1.v * e1.v * d - e2.u * e2.u - e2.v * e2.v * d;
  Int irr = 2 * (e1.u * e1.v - e2.u * e2.v);
  return sign_surd(rat, irr, d);
}

struct Entry {
  std::int64_t a;
  std::int64_t b;
  Err err;
};

class Scanner {
 public:
  explicit Scanner(const QuadIrr& x) : x_(x), s2d_(x.s() * x.s() * x.d()) {}

  // The odd a closest to b x, with its error.
  Entry best_at(std::int64_t b) const {
    Int bb(static_cast<long>(b));
    // floor(b x) = floor((bP + bS sqrt D) / Q)
    Int root = isqrt(s2d_ * bb * bb);  // floor(|bS| sqrt D)
    Int num = bb * x_.p() + (x_.s() > 0 ? root : Int(-root - 1));
    Int f = floor_div(num, x_.q());
    Int lo = (f % 2 != 0) ? f : Int(f - 1);
    Err e_lo = error(bb, lo);
    Err e_hi = error(bb, lo + 2);
    if (cmp_abs(e_hi, e_lo, x_.d()) < 0) return {Int(lo + 2).get_si(), b, e_hi};
    return {lo.get_si(), b, e_lo};
  }

  // Records of the strict successive minima for odd b in [b_lo, b_hi].
  void scan(std::int64_t b_lo, std::int64_t b_hi, std::vector<Entry>& out) const {
    for (std::int64_t b = b_lo; b <= b_hi; b += 2) {
      Entry e = best_at(b);
      if (out.empty() || cmp_abs(e.err, out.back().err, x_.d()) < 0) out.push_back(std::move(e));
    }
  }

  const Int& d() const { return x_.d(); }

 private:
  Err error(const Int& b, const Int& a) const {
    return {b * x_.p() - a * x_.q(), b * x_.s()};
  }

  QuadIrr x_;
  Int s2d_;
};

void require_open_unit(const QuadIrr& x) {
  Real v(x);
  if (v.sign() <= 0 || v >= Real(1))
    throw InputError("best approximation needs x in (0,1), got " + x.str());
}

std::vector<Rational> to_rationals(const std::vector<Entry>& es) {
  std::vector<Rational> out;
  out.reserve(es.size());
  for (const Entry& e : es) out.emplace_back(Int(static_cast<long>(e.a)), Int(static_cast<long>(e.b)));
  return out;
}

std::vector<Entry> records_parallel(const QuadIrr& x, std::int64_t qmax) {
  if (qmax < 1) return {};
  Scanner sc(x);
  constexpr std::int64_t kChunk = 1 << 14;  // odd b values per chunk
  const std::int64_t n_odd = (qmax + 1) / 2;
  const std::int64_t n_chunks = (n_odd + kChunk - 1) / kChunk;
  std::vector<std::vector<Entry>> local(static_cast<std::size_t>(n_chunks));

#pragma omp parallel for schedule(dynamic, 1) num_threads(worker_count())
  for (std::int64_t c = 0; c < n_chunks; ++c) {
    std::int64_t first = 2 * (c * kChunk) + 1;
    std::int64_t last = std::min(qmax, 2 * ((c + 1) * kChunk - 1) + 1);
    sc.scan(first, last, local[static_cast<std::size_t>(c)]);
  }

  std::vector<Entry> merged;
  for (auto& chunk : local)
    for (Entry& e : chunk)
      if (merged.empty() || cmp_abs(e.err, merged.back().err, sc.d()) < 0) merged.push_back(std::move(e));
  return merged;
}

}  // namespace

std::vector<Rational> best_one_rationals(const QuadIrr& x, std::int64_t qmax) {
  require_open_unit(x);
  return to_rationals(records_parallel(x, qmax));
}

std::vector<Rational> best_one_rationals_serial(const QuadIrr& x, std::int64_t qmax) {
  require_open_unit(x);
  std::vector<Entry> out;
  if (qmax >= 1) Scanner(x).scan(1, qmax, out);
  return to_rationals(out);
}

std::vector<ApproxRecord> best_one_records(const QuadIrr& x, std::int64_t qmax) {
  std::vector<ApproxRecord> out;
  for (const Rational& r : best_one_rationals(x, qmax)) out.push_back({r, err_sq(r, Real(x))});
  return out;
}

Thm1Report verify_thm1(const QuadIrr& x, std::int64_t qmax) {
  Thm1Report rep;
  rep.input = x.str();
  rep.qmax = qmax;
  rep.brute_list = best_one_rationals(x, qmax);
  rep.oocf_list = principal_convergents_up_to(Real(x), Int(static_cast<long>(std::max<std::int64_t>(qmax, 0))));
  rep.pass = rep.oocf_list == rep.brute_list;
  return rep;
}

KeitaReport keita_monotonicity(const Real& x, std::size_t n) {
  if (n < 1) throw InputError("keita: level must be >= 1");
  RcfExpansion e = rcf_expand(x, n);
  if (e.digits.size() < n)
    throw InputError("keita: " + x.str() + " has only " + std::to_string(e.digits.size()) +
                     " RCF digits, level " + std::to_string(n) + " requested");

  // p_{-1}/q_{-1} = 1/0, p_0/q_0 = 0/1
  Int p2 = 1, q2 = 0, p1 = 0, q1 = 1;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    Int d(static_cast<long>(e.digits[i]));
    Int p = d * p1 + p2, q = d * q1 + q2;
    p2 = std::move(p1);
    q2 = std::move(q1);
    p1 = std::move(p);
    q1 = std::move(q);
  }
  auto err = [&](const Int& p, const Int& q) {
    return (Real(Rational(q)) * x - Real(Rational(p))).abs();
  };

  KeitaReport rep;
  rep.n = n;
  rep.q_prev = q1;
  rep.err_prev = err(p1, q1);
  const std::int64_t dn = e.digits[n - 1];
  for (std::int64_t j = 0; j <= dn; ++j) {
    Int jj(static_cast<long>(j));
    rep.q.push_back(q2 + jj * q1);
    rep.err.push_back(err(p2 + jj * p1, q2 + jj * q1));
  }

  rep.q_edge_equal = n == 2 && rep.q[0] == rep.q_prev;
  rep.q_chain = (rep.q[0] < rep.q_prev || rep.q_edge_equal) && rep.q_prev <= rep.q[1];
  for (std::size_t j = 1; j + 1 < rep.q.size(); ++j) rep.q_chain = rep.q_chain && rep.q[j] < rep.q[j + 1];

  const auto last = static_cast<std::size_t>(dn);
  rep.err_chain = rep.err[last] < rep.err_prev && rep.err_prev <= rep.err[last - 1];
  for (std::size_t j = last - 1; j > 0; --j) rep.err_chain = rep.err_chain && rep.err[j] < rep.err[j - 1];
  return rep;
}

}  // namespace oodd
