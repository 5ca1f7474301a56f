#include "oodd/convergents.hpp"

#include "oodd/errors.hpp"
#include "oodd/mat2.hpp"
#include "oodd/oocf.hpp"

namespace oodd {

const ConvergentTriple& ConvergentBuilder::push(const OocfDigit& d) {
  require_legal(d);
  const Convergent prev = cur_.principal;
  const Convergent prev_sub = cur_.sub;
  Int a = Int(static_cast<long>(d.a));
  Int e = d.eps;

  ConvergentTriple next;
  next.n = cur_.n + 1;
  next.sub = {a * prev.num - prev_sub.num, a * prev.den - prev_sub.den};
  next.pseudo = {next.sub.num + e * prev.num, next.sub.den + e * prev.den};
  next.principal = {2 * next.sub.num + e * prev.num, 2 * next.sub.den + e * prev.den};
  next.eps_prod = cur_.eps_prod * d.eps;
  next.det_sign = sgn(Int(prev.num * next.principal.den - next.principal.num * prev.den));
  cur_ = std::move(next);
  return cur_;
}

std::vector<ConvergentTriple> convergent_table(std::span<const OocfDigit> digits) {
  std::vector<ConvergentTriple> rows;
  rows.reserve(digits.size() + 1);
  ConvergentBuilder b;
  rows.push_back(b.current());
  for (const OocfDigit& d : digits) rows.push_back(b.push(d));
  return rows;
}

std::vector<ConvergentTriple> convergent_table_matrix(std::span<const OocfDigit> digits) {
  std::vector<ConvergentTriple> rows;
  rows.reserve(digits.size() + 1);
  Mat2 m;
  ConvergentTriple row;
  rows.push_back(row);
  for (const OocfDigit& d : digits) {
    m = m * digit_matrix(d);
    // M [[1,-1],[1,0]] = [[p, -p'], [q, -q']] and M (0,1)^T = (p'', q'')^T.
    ConvergentTriple next;
    next.n = row.n + 1;
    next.principal = {m.a + m.b, m.c + m.d};
    next.sub = {m.a, m.c};
    next.pseudo = {m.b, m.d};
    next.eps_prod = row.eps_prod * d.eps;
    next.det_sign = sgn(Int(row.principal.num * next.principal.den -
                            next.principal.num * row.principal.den));
    row = next;
    rows.push_back(row);
  }
  return rows;
}

std::vector<Convergent> principal_two_term(std::span<const OocfDigit> digits) {
  std::vector<Convergent> out{{1, 1}};
  Convergent before{-1, 1};
  int prev_eps = 1;
  for (const OocfDigit& d : digits) {
    require_legal(d);
    Int mult = 2 * static_cast<long>(d.a) + d.eps - 1;
    const Convergent& last = out.back();
    Convergent next{mult * last.num + prev_eps * before.num, mult * last.den + prev_eps * before.den};
    before = last;
    out.push_back(std::move(next));
    prev_eps = d.eps;
  }
  return out;
}

std::vector<Rational> principal_convergents_up_to(const Real& x, const Int& qmax) {
  std::vector<Rational> out;
  if (qmax < 1) return out;
  out.push_back(Rational(1));
  OocfDigitStream stream(x);
  ConvergentBuilder b;
  while (auto d = stream.next()) {
    const ConvergentTriple& t = b.push(*d);
    if (t.principal.den > qmax) break;
    out.push_back(t.principal.value());
  }
  // A (2,-1) tail keeps producing principal convergents after the orbit hits 0.
  if (stream.state().sign() == 0) {
    while (true) {
      const ConvergentTriple& t = b.push(OocfDigit{2, -1});
      if (t.principal.den > qmax) break;
      out.push_back(t.principal.value());
    }
  }
  return out;
}

bool between(const Real& v, const Real& a, const Real& b) {
  return a <= b ? (a <= v && v <= b) : (b <= v && v <= a);
}

namespace {

// Half-closed interval with endpoints `closed_end` (included) and `open_end` (excluded).
bool in_half_closed(const Real& v, const Real& closed_end, const Real& open_end) {
  return between(v, closed_end, open_end) && !(v == open_end);
}

}  // namespace

BetweennessFlags betweenness_report(const Real& x, std::span<const OocfDigit> prefix) {
  if (prefix.empty()) throw InputError("betweenness_report: empty prefix");
  require_unit_interval(x, "betweenness_report: x");
  Mat2 m = digit_product(prefix);
  Mat2 inv = m.inverse();
  Real cd = Real(Rational(inv.c)) * x + Real(Rational(inv.d));
  if (cd.sign() == 0 || !in_unit_interval(mat_apply(inv, x)))
    throw InputError("betweenness_report: x = " + x.str() + " does not have this prefix");

  auto rows = convergent_table(prefix);
  const ConvergentTriple& t = rows.back();
  const ConvergentTriple& prev = rows[rows.size() - 2];
  Real pr = t.principal.value(), sb = t.sub.value(), ps = t.pseudo.value();
  Real prev_pr = prev.principal.value(), prev_ps = prev.pseudo.value();

  BetweennessFlags f;
  f.n = t.n;
  f.x_between_principal_pseudo = between(x, pr, ps);
  f.principal_between_sub_pseudo = between(pr, sb, ps);
  f.nested_in_previous = in_half_closed(pr, prev_ps, prev_pr) &&
                         in_half_closed(sb, prev_ps, prev_pr) &&
                         in_half_closed(ps, prev_ps, prev_pr);
  f.previous_outside_sub_pseudo = !between(prev_pr, sb, ps);
  return f;
}

GapCertificate convergence_gap(const Real& x, const ConvergentTriple& t) {
  if (t.principal.den <= 0) throw InputError("convergence_gap: principal denominator must be positive");
  Rational principal = t.principal.value();
  GapCertificate c{(x - Real(principal)).abs(), Rational(2, t.principal.den), false};
  c.certified = c.gap < Real(c.bound);
  return c;
}

}  // namespace oodd
