#include <doctest.h>

#include <random>

#include "oodd/convergents.hpp"
#include "oodd/errors.hpp"
#include "oodd/mat2.hpp"
#include "oodd/oocf.hpp"
#include "oracles.hpp"

using namespace oodd;
using oracle::R;

namespace {

using Digits = std::vector<OocfDigit>;

Digits random_digits(std::mt19937_64& rng, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(1, max_len);
  Digits ds;
  for (std::size_t i = len(rng); i > 0; --i) ds.push_back(oracle::random_digit(rng, 20));
  return ds;
}

Parity parity(const Convergent& c) { return classify(Rational(c.num, c.den == 0 ? Int(1) : c.den)); }

Parity parity_raw(const Convergent& c) {
  bool odd = c.num % 2 != 0 && c.den % 2 != 0;
  return odd ? Parity::one_rational : Parity::inf_rational;
}

int sgn_pow(std::size_t n) { return n % 2 == 0 ? 1 : -1; }

}  // namespace

TEST_CASE("table examples") {
  auto t = convergent_table(Digits{{1, 1}});
  REQUIRE(t.size() == 2);
  CHECK(t[0].principal == Convergent{1, 1});
  CHECK(t[0].sub == Convergent{1, 0});
  CHECK(t[0].pseudo == Convergent{0, 1});
  CHECK(t[1].principal == Convergent{1, 3});
  CHECK(t[1].sub == Convergent{0, 1});
  CHECK(t[1].pseudo == Convergent{1, 2});

  t = convergent_table(Digits{{1, 1}, {1, 1}});
  CHECK(t[2].principal == Convergent{3, 7});

  t = convergent_table(Digits(4, OocfDigit{1, 1}));
  std::vector<Rational> ps;
  for (std::size_t n = 1; n < t.size(); ++n) ps.push_back(t[n].principal.value());
  CHECK(ps == std::vector<Rational>{Rational(1, 3), Rational(3, 7), Rational(7, 17), Rational(17, 41)});

  CHECK(convergent_table(Digits{}).size() == 1);
  CHECK(digit_matrix({1, 1}) == Mat2{Int(0), Int(1), Int(1), Int(2)});
}

TEST_CASE("matrix route: images of 1, infinity, 0") {
  Digits ds{{3, -1}, {1, 1}, {5, 1}, {2, -1}};
  auto rows = convergent_table_matrix(ds);
  for (std::size_t n = 1; n <= ds.size(); ++n) {
    Mat2 m = digit_product(std::span(ds).first(n));
    CHECK(mat_apply(m, R(1)) == Real(rows[n].principal.value()));
    CHECK(mat_apply(m, R(0)) == Real(rows[n].pseudo.value()));
    CHECK(Rational(m.a, m.c) == rows[n].sub.value());
  }
  // [[0,1],[1,2]] [[1,-1],[1,0]] = [[1,0],[3,-1]]
  Mat2 p = digit_matrix({1, 1}) * Mat2{Int(1), Int(-1), Int(1), Int(0)};
  CHECK(p == Mat2{Int(1), Int(0), Int(3), Int(-1)});
}

TEST_CASE("scalar and matrix tables agree; triple identities on random digit strings") {
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 2000; ++i) {
    Digits ds = random_digits(rng, 30);
    auto s = convergent_table(ds);
    auto m = convergent_table_matrix(ds);
    REQUIRE(s == m);
    auto two = principal_two_term(ds);
    REQUIRE(two.size() == s.size());
    int eprod = 1;
    for (std::size_t n = 1; n < s.size(); ++n) {
      const auto& t = s[n];
      const auto& prev = s[n - 1];
      const OocfDigit& d = ds[n - 1];
      CHECK(two[n] == t.principal);
      CHECK(parity_raw(t.principal) == Parity::one_rational);
      CHECK(parity_raw(t.sub) == Parity::inf_rational);
      CHECK(parity_raw(t.pseudo) == Parity::inf_rational);
      CHECK(t.principal.num == t.sub.num + t.pseudo.num);
      CHECK(t.principal.den == t.sub.den + t.pseudo.den);
      CHECK(prev.principal.num == d.eps * (t.pseudo.num - t.sub.num));
      CHECK(prev.principal.den == d.eps * (t.pseudo.den - t.sub.den));
      Int adj = t.sub.num * t.pseudo.den - t.pseudo.num * t.sub.den;
      Int dist = prev.principal.num * t.principal.den - t.principal.num * prev.principal.den;
      CHECK(abs(adj) == 1);
      CHECK(abs(dist) == 2);
      // signed forms
      CHECK(dist == 2 * sgn_pow(n + 1) * eprod);
      eprod *= d.eps;
      CHECK(adj == sgn_pow(n) * eprod);
      CHECK(t.eps_prod == eprod);
      CHECK(t.det_sign == sgn(dist));
      CHECK(t.principal.den > prev.principal.den);
      // principal and pseudo circles are tangent
      CHECK(abs(t.principal.num * t.pseudo.den - t.pseudo.num * t.principal.den) == 1);
    }
  }
}

TEST_CASE("reduced values keep the parity") {
  auto t = convergent_table(Digits{{2, -1}, {4, 1}, {1, 1}});
  for (std::size_t n = 1; n < t.size(); ++n) {
    CHECK(parity(t[n].principal) == Parity::one_rational);
    CHECK(parity(t[n].pseudo) == Parity::inf_rational);
  }
}

TEST_CASE("betweenness flags along expansions") {
  auto check_all = [](const Real& x, std::size_t nmax) {
    OocfDigitStream s(x);
    Digits prefix;
    for (std::size_t n = 1; n <= nmax; ++n) {
      auto d = s.next();
      if (!d) break;
      prefix.push_back(*d);
      BetweennessFlags f = betweenness_report(x, prefix);
      INFO(x.str(), " n=", n);
      CHECK(f.all());
    }
  };
  for (const QuadIrr& q : oracle::fixtures()) check_all(Real(q), 30);
  for (const Rational& r : oracle::rationals_open(40)) check_all(Real(r), 30);
  BetweennessFlags f = betweenness_report(R(1, 3), Digits{{1, 1}});
  CHECK(f.all());
  f = betweenness_report(R(2, 7), Digits{{2, -1}, {4, -1}});
  CHECK(f.all());
  CHECK_THROWS_AS(betweenness_report(R(2, 7), Digits{{1, 1}}), InputError);
}

TEST_CASE("convergence gap is certified") {
  for (const QuadIrr& q : oracle::fixtures()) {
    Real x(q);
    OocfDigitStream s(x);
    ConvergentBuilder b;
    for (int n = 1; n <= 30; ++n) {
      GapCertificate g = convergence_gap(x, b.push(*s.next()));
      CHECK(g.certified);
      CHECK(g.gap < Real(g.bound));
      CHECK(g.gap.sign() > 0);
    }
  }
  ConvergentBuilder b;
  b.push({1, 1});
  b.push({1, 1});
  GapCertificate g = convergence_gap(Real(QuadIrr(-1, 1, 2, 1)), b.push({1, 1}));
  CHECK(g.bound == Rational(2, 17));
  CHECK(g.certified);
  ConvergentBuilder c;
  g = convergence_gap(R(1, 3), c.push({1, 1}));
  CHECK(g.gap == R(0));
  CHECK(g.certified);
}

TEST_CASE("tail identity: pseudo convergent equals an inf-rational once the orbit hits 0") {
  for (const Rational& r : oracle::rationals_open(60)) {
    if (classify(r) != Parity::inf_rational) continue;
    OocfExpansion e = expand(Real(r));
    REQUIRE(e.terminator == Terminator::tail_2m1);
    Digits ds = e.digits;
    for (int extra = 0; extra < 4; ++extra) {
      auto t = convergent_table(ds);
      if (!ds.empty()) CHECK(t.back().pseudo.value() == r);
      ds.push_back({2, -1});
    }
  }
}

TEST_CASE("principal convergents up to a bound") {
  Real s(QuadIrr(-1, 1, 2, 1));
  CHECK(principal_convergents_up_to(s, Int(20)) ==
        std::vector<Rational>{Rational(1), Rational(1, 3), Rational(3, 7), Rational(7, 17)});
  CHECK(principal_convergents_up_to(s, Int(0)).empty());
  // 0 continues with (2,-1): 1/1, 1/3, 1/5, ...
  auto z = principal_convergents_up_to(R(0), Int(9));
  CHECK(z == std::vector<Rational>{Rational(1), Rational(1, 3), Rational(1, 5), Rational(1, 7), Rational(1, 9)});
}
