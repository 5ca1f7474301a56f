#include <doctest.h>

#include <random>

#include "oodd/errors.hpp"
#include "oodd/maps.hpp"
#include "oodd/oocf.hpp"
#include "oracles.hpp"

using namespace oodd;
using oracle::R;

namespace {

using Digits = std::vector<OocfDigit>;

bool legal(const OocfExpansion& e) {
  for (const OocfDigit& d : e.digits)
    if (!is_legal(d)) return false;
  return true;
}

}  // namespace

TEST_CASE("expand examples") {
  OocfExpansion e = expand(R(1, 3));
  CHECK(e.digits == Digits{{1, 1}});
  CHECK(e.terminator == Terminator::finite);

  e = expand(R(2, 7));
  CHECK(e.digits == Digits{{2, -1}, {4, -1}});
  CHECK(e.terminator == Terminator::tail_2m1);

  e = expand(Real(QuadIrr(-1, 1, 2, 1)));
  CHECK(e.terminator == Terminator::periodic);
  CHECK(e.preperiod().empty());
  CHECK(Digits(e.period().begin(), e.period().end()) == Digits{{1, 1}});

  e = expand(R(0));
  CHECK(e.digits.empty());
  CHECK(e.terminator == Terminator::tail_2m1);

  e = expand(R(1));
  CHECK(e.digits.empty());
  CHECK(e.terminator == Terminator::finite);

  CHECK_THROWS_AS(expand(R(5, 4)), InputError);
}

TEST_CASE("all_expansions examples") {
  auto es = all_expansions(R(1, 3));
  REQUIRE(es.size() == 2);
  CHECK(es[0].digits == Digits{{2, -1}});
  CHECK(es[1].digits == Digits{{1, 1}});

  es = all_expansions(R(1, 2));
  REQUIRE(es.size() == 2);
  CHECK(es[0].digits == Digits{{3, -1}});
  CHECK(es[1].digits == Digits{{1, 1}});
  CHECK(es[0].terminator == Terminator::tail_2m1);
  CHECK(es[1].terminator == Terminator::tail_2m1);

  es = all_expansions(R(3, 5));
  REQUIRE(es.size() == 2);
  CHECK(es[0].digits == Digits{{3, -1}});
  CHECK(es[1].digits == Digits{{2, 1}});

  CHECK_THROWS_AS(all_expansions(Real(QuadIrr(-1, 1, 2, 1))), InputError);
}

TEST_CASE("evaluate examples") {
  CHECK(evaluate({Digits{{1, 1}}, Terminator::finite}) == R(1, 3));
  CHECK(evaluate({Digits{{2, -1}, {4, -1}}, Terminator::tail_2m1}) == R(2, 7));
  OocfExpansion p{Digits{{1, 1}}, Terminator::periodic, 0, std::nullopt};
  CHECK(evaluate(p) == Real(QuadIrr(-1, 1, 2, 1)));
  CHECK(evaluate({Digits{{1, 1}, {1, 1}}, Terminator::truncated}) == R(3, 7));
  CHECK(evaluate({Digits{}, Terminator::finite}) == R(1));
  CHECK(evaluate({Digits{}, Terminator::tail_2m1}) == R(0));
}

TEST_CASE("canonical digits match the scanning oracle, q <= 120") {
  for (const Rational& r : oracle::rationals_open(120)) {
    OocfExpansion e = expand(Real(r));
    auto s = oracle::expand_by_scan(Real(r));
    CHECK(e.digits == s.digits);
    CHECK((e.terminator == Terminator::finite) == s.ends_at_one);
    CHECK(legal(e));
  }
}

TEST_CASE("two expansions of every rational, q <= 99") {
  for (const Rational& r : oracle::rationals_open(99)) {
    auto es = all_expansions(Real(r));
    REQUIRE(es.size() == 2);
    const auto& a = es[0].digits;
    const auto& b = es[1].digits;
    CHECK(legal(es[0]));
    CHECK(legal(es[1]));
    CHECK(evaluate(es[0]) == Real(r));
    CHECK(evaluate(es[1]) == Real(r));
    CHECK(oracle::oocf_nested(a, es[0].terminator == Terminator::finite ? R(1) : R(0)) == Real(r));
    if (classify(r) == Parity::one_rational) {
      CHECK(es[0].terminator == Terminator::finite);
      CHECK(es[1].terminator == Terminator::finite);
      REQUIRE(a.size() == b.size());
      CHECK(std::equal(a.begin(), a.end() - 1, b.begin()));
      CHECK_FALSE(a.back() == b.back());
    } else {
      CHECK(es[0].terminator == Terminator::tail_2m1);
      CHECK(es[1].terminator == Terminator::tail_2m1);
      CHECK_FALSE(a == b);
    }
    CHECK((es[0].digits == expand(Real(r)).digits || es[1].digits == expand(Real(r)).digits));
  }
}

TEST_CASE("quadratic fixtures: periodicity and round trip") {
  for (const QuadIrr& q : oracle::fixtures()) {
    Real x(q);
    OocfExpansion e = expand(x);
    REQUIRE(e.terminator == Terminator::periodic);
    CHECK(legal(e));
    CHECK(evaluate(e) == x);
    PeriodInfo p = detect_period(q);
    CHECK(p.preperiod_len == e.period_start);
    CHECK(p.period_len == e.period().size());
    CHECK(expand(x) == e);
  }
  Real half_root2(QuadIrr(0, 1, 2, 2));
  OocfExpansion e = expand(half_root2);
  CHECK(e.terminator == Terminator::periodic);
  CHECK(evaluate(e) == half_root2);
  CHECK(detect_period(QuadIrr(-1, 1, 2, 1)).period_len == 1);
  CHECK(detect_period(QuadIrr(-1, 1, 2, 1)).preperiod_len == 0);
  CHECK_THROWS_AS(detect_period(QuadIrr(1, 1, 2, 1)), InputError);
}

TEST_CASE("frac(sqrt D) is periodic and evaluates back, D <= 50") {
  for (long d = 2; d <= 50; ++d) {
    if (is_perfect_square(Int(d))) continue;
    Int f = isqrt(Int(d));
    QuadIrr q(-f, 1, Int(d), 1);
    OocfExpansion e = expand(Real(q), kUnbounded);
    REQUIRE(e.terminator == Terminator::periodic);
    CHECK(evaluate(e) == Real(q));
    OocfExpansion bare{e.digits, e.terminator, e.period_start, std::nullopt};
    CHECK(evaluate(bare).to_double() == doctest::Approx(Real(q).to_double()).epsilon(1e-14));
  }
}

TEST_CASE("random periodic expansions evaluate to fixed points") {
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<int> len(1, 4);
  int quad = 0;
  for (int i = 0; i < 150; ++i) {
    Digits pre, per;
    for (int j = len(rng) - 1; j > 0; --j) pre.push_back(oracle::random_digit(rng, 6));
    for (int j = len(rng); j > 0; --j) per.push_back(oracle::random_digit(rng, 6));
    Digits all = pre;
    all.insert(all.end(), per.begin(), per.end());
    OocfExpansion e{all, Terminator::periodic, pre.size(), std::nullopt};
    Real x;
    try {
      x = evaluate(e);
    } catch (const MalformedExpansion&) {
      // e.g. an all-(2,-1) period pins x to an endpoint
      continue;
    }
    Real z = x;
    for (const OocfDigit& d : pre) z = branch_forward(d, z);
    Real w = z;
    for (const OocfDigit& d : per) w = branch_forward(d, w);
    CHECK(w == z);
    CHECK(oracle::oocf_nested(pre, z) == x);
    if (x.is_quadratic()) ++quad;
  }
  CHECK(quad > 100);
}

TEST_CASE("prefix consistency and truncation") {
  for (const QuadIrr& q : oracle::fixtures()) {
    OocfDigitStream s{Real(q)};
    Digits streamed;
    for (int i = 0; i < 40; ++i) streamed.push_back(*s.next());
    for (std::size_t n = 0; n < 40; ++n) {
      OocfExpansion t = expand(Real(q), n);
      OocfExpansion u = expand(Real(q), n + 1);
      if (t.terminator == Terminator::truncated) {
        CHECK(t.digits.size() == n);
        CHECK(std::equal(t.digits.begin(), t.digits.end(), streamed.begin()));
      }
      if (u.terminator == Terminator::truncated && t.terminator == Terminator::truncated)
        CHECK(std::equal(t.digits.begin(), t.digits.end(), u.digits.begin()));
    }
  }
}

TEST_CASE("digit stream reports exhaustion") {
  OocfDigitStream s(R(2, 7));
  CHECK(*s.next() == OocfDigit{2, -1});
  CHECK(*s.next() == OocfDigit{4, -1});
  CHECK_FALSE(s.next().has_value());
  CHECK(s.exhausted());
  CHECK(s.state() == R(0));
}
