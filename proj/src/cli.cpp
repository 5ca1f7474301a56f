#include "oodd/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "oodd/approx.hpp"
#include "oodd/convergents.hpp"
#include "oodd/errors.hpp"
#include "oodd/maps.hpp"
#include "oodd/oocf.hpp"
#include "oodd/parse.hpp"
#include "oodd/rcf.hpp"

namespace oodd {

namespace {

using Json = nlohmann::ordered_json;

constexpr int kOk = 0;
constexpr int kInputError = 1;
constexpr int kVerifyFailed = 2;

Json expansion_json(const OocfExpansion& e) {
  Json digits = Json::array();
  for (const OocfDigit& d : e.digits) digits.push_back({d.a, d.eps});
  Json j;
  j["digits"] = digits;
  j["terminator"] = to_string(e.terminator);
  if (e.terminator == Terminator::periodic) j["period_start"] = e.period_start;
  if (e.radicand) j["radicand"] = e.radicand->get_str();
  return j;
}

Json rationals_json(const std::vector<Rational>& rs) {
  Json a = Json::array();
  for (const Rational& r : rs) a.push_back(r.str());
  return a;
}

std::string pair_str(const Convergent& c) { return c.num.get_str() + "/" + c.den.get_str(); }

Json base(const char* command) {
  Json j;
  j["schema"] = 1;
  j["command"] = command;
  return j;
}

const QuadIrr& require_quad(const Real& x, const char* what) {
  if (!x.is_quadratic()) throw InputError(std::string(what) + " needs an irrational input, got " + x.str());
  return x.quad();
}

Rational require_rational(const Real& x, const char* what) {
  if (!x.is_rational()) throw InputError(std::string(what) + " must be rational, got " + x.str());
  return x.rational();
}

// n rows of (digit, triple); an orbit that reaches 0 continues with (2,-1).
std::vector<std::pair<OocfDigit, ConvergentTriple>> convergent_rows(const Real& x, std::size_t n) {
  require_unit_interval(x, "convergents: x");
  std::vector<std::pair<OocfDigit, ConvergentTriple>> rows;
  OocfDigitStream stream(x);
  ConvergentBuilder b;
  while (rows.size() < n) {
    auto d = stream.next();
    if (!d) {
      if (stream.state().sign() != 0) break;
      d = OocfDigit{2, -1};
    }
    rows.emplace_back(*d, b.push(*d));
  }
  return rows;
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

std::string ford_svg(const Real& x, std::size_t n, std::int64_t den_max) {
  const double w = 1000, h = 520;
  auto circle = [&](const Rational& r, const char* fill, const char* stroke, double sw) {
    double cx = r.to_double() * w;
    double rad = ford_radius(r).to_double() * w;
    return "<circle cx=\"" + fmt(cx) + "\" cy=\"" + fmt(h - rad) + "\" r=\"" + fmt(rad) + "\" fill=\"" + fill +
           "\" stroke=\"" + stroke + "\" stroke-width=\"" + fmt(sw) + "\"/>\n";
  };
  std::ostringstream s;
  s << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
    << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h << "\" viewBox=\"0 0 "
    << w << " " << h << "\">\n"
    << "<rect width=\"100%\" height=\"100%\" fill=\"#f4f4f4\"/>\n";
  for (std::int64_t q = 1; q <= den_max; ++q)
    for (std::int64_t p = 0; p <= q; ++p) {
      Rational r(Int(static_cast<long>(p)), Int(static_cast<long>(q)));
      if (r.den() != q) continue;
      bool one = classify(r) == Parity::one_rational;
      s << circle(r, one ? "#b0b0b0" : "#ffffff", "#000000", 0.8);
    }
  for (const auto& row : convergent_rows(x, n))
    s << circle(row.second.principal.value(), "none", "#d62728", 2.0);
  s << "<line x1=\"" << fmt(x.to_double() * w) << "\" y1=\"0\" x2=\"" << fmt(x.to_double() * w) << "\" y2=\""
    << h << "\" stroke=\"#1f77b4\" stroke-width=\"1\"/>\n"
    << "<line x1=\"0\" y1=\"" << h << "\" x2=\"" << w << "\" y2=\"" << h
    << "\" stroke=\"#000000\" stroke-width=\"1\"/>\n"
    << "</svg>\n";
  return s.str();
}

std::vector<std::int64_t> parse_digit_list(const std::string& text) {
  std::vector<std::int64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(item, &used);
    } catch (const std::exception&) {
      throw InputError("bad digit '" + item + "'");
    }
    while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used]))) ++used;
    if (used != item.size()) throw InputError("bad digit '" + item + "'");
    out.push_back(v);
  }
  return out;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Odd-odd continued fractions: expansions, convergents and best 1-rational approximation"};
  app.require_subcommand(1);

  std::string input;
  std::size_t max_digits = kDefaultMaxDigits;
  bool all = false;
  std::size_t n = 10;
  std::string format = "json";
  std::int64_t qmax = 10000;
  std::string from = "rcf", to = "oocf", digits;
  bool truncated = false;
  std::string lo = "1/2", hi = "1";
  std::int64_t cutoff = kDefaultMeasureCutoff;
  double tol = kDefaultMeasureTol;
  std::int64_t den_max = 9;
  std::string svg_out;

  auto* expand_cmd = app.add_subcommand("expand", "canonical OOCF expansion");
  expand_cmd->add_option("--input", input)->required();
  expand_cmd->add_option("--max-digits", max_digits);
  expand_cmd->add_flag("--all", all, "both expansions of a rational");

  auto* conv_cmd = app.add_subcommand("convergents", "principal, sub- and pseudo-convergents");
  conv_cmd->add_option("--input", input)->required();
  conv_cmd->add_option("-n", n);
  conv_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "tsv", "text"}));

  auto* best_cmd = app.add_subcommand("best", "best 1-rational approximations by exhaustive search");
  best_cmd->add_option("--input", input)->required();
  best_cmd->add_option("--qmax", qmax);

  auto* convert_cmd = app.add_subcommand("convert", "RCF digits to OOCF digits");
  convert_cmd->add_option("--from", from)->check(CLI::IsMember({"rcf"}));
  convert_cmd->add_option("--to", to)->check(CLI::IsMember({"oocf"}));
  convert_cmd->add_option("--digits", digits, "comma separated d1,d2,...")->required();
  convert_cmd->add_flag("--truncated", truncated, "digits are a prefix of a longer expansion");

  auto* verify_cmd = app.add_subcommand("verify", "verification suites");
  verify_cmd->require_subcommand(1);
  auto* v_thm1 = verify_cmd->add_subcommand("thm1", "principal convergents = best 1-rational approximations");
  v_thm1->add_option("--input", input)->required();
  v_thm1->add_option("--qmax", qmax);
  auto* v_thm2 = verify_cmd->add_subcommand("thm2", "quadratic irrationals have periodic expansions");
  v_thm2->add_option("--input", input)->required();
  auto* v_inter = verify_cmd->add_subcommand("intermediate", "principal convergents are RCF intermediates");
  v_inter->add_option("--input", input)->required();
  v_inter->add_option("-n", n);
  auto* v_conj = verify_cmd->add_subcommand("conjugacy", "OOCF/EICF conjugacy and digit map");
  v_conj->add_option("--input", input)->required();
  v_conj->add_option("-n", n);
  auto* v_keita = verify_cmd->add_subcommand("keita", "monotone chains of RCF intermediates");
  v_keita->add_option("--input", input)->required();
  v_keita->add_option("-n", n);
  auto* v_eicf = verify_cmd->add_subcommand("eicf-best", "odd/odd EICF candidates are OOCF convergents");
  v_eicf->add_option("--input", input)->required();
  v_eicf->add_option("-n", n);

  auto* measure_cmd = app.add_subcommand("measure", "invariance of the measure dx/x");
  measure_cmd->add_option("--lo", lo);
  measure_cmd->add_option("--hi", hi);
  measure_cmd->add_option("--K", cutoff);
  measure_cmd->add_option("--tol", tol);

  auto* svg_cmd = app.add_subcommand("ford-svg", "Ford circles with the input's convergents");
  svg_cmd->add_option("--input", input)->required();
  svg_cmd->add_option("-n", n);
  svg_cmd->add_option("--den-max", den_max);
  svg_cmd->add_option("-o", svg_out, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    auto emit = [&](const Json& j) { out << j.dump(2) << std::endl; };
    auto verdict = [](bool pass) { return pass ? kOk : kVerifyFailed; };

    if (*expand_cmd) {
      Real x = parse_real(input);
      Json j = base("expand");
      j["input"] = x.str();
      if (all) {
        Json list = Json::array();
        if (x.is_rational()) {
          for (const auto& e : all_expansions(x)) list.push_back(expansion_json(e));
        } else {
          list.push_back(expansion_json(expand(x, max_digits)));
        }
        j["expansions"] = list;
      } else {
        j.update(expansion_json(expand(x, max_digits)));
      }
      emit(j);
      return kOk;
    }

    if (*conv_cmd) {
      Real x = parse_real(input);
      auto rows = convergent_rows(x, n);
      if (format == "json") {
        Json j = base("convergents");
        j["input"] = x.str();
        Json list = Json::array();
        for (const auto& [d, t] : rows)
          list.push_back({{"n", t.n}, {"digit", {d.a, d.eps}}, {"principal", pair_str(t.principal)},
                          {"sub", pair_str(t.sub)}, {"pseudo", pair_str(t.pseudo)}});
        j["rows"] = list;
        emit(j);
      } else if (format == "tsv") {
        out << "n\ta\teps\tprincipal\tsub\tpseudo\n";
        for (const auto& [d, t] : rows)
          out << t.n << '\t' << d.a << '\t' << d.eps << '\t' << pair_str(t.principal) << '\t'
              << pair_str(t.sub) << '\t' << pair_str(t.pseudo) << '\n';
        out.flush();
      } else {
        for (const auto& [d, t] : rows)
          out << "n=" << t.n << "  " << to_string(d) << "  p/q=" << pair_str(t.principal)
              << "  p'/q'=" << pair_str(t.sub) << "  p''/q''=" << pair_str(t.pseudo) << '\n';
        out.flush();
      }
      return kOk;
    }

    if (*best_cmd) {
      Real x = parse_real(input);
      Json j = base("best");
      j["input"] = x.str();
      j["qmax"] = qmax;
      j["best"] = rationals_json(best_one_rationals(require_quad(x, "best"), qmax));
      emit(j);
      return kOk;
    }

    if (*convert_cmd) {
      RcfExpansion e{parse_digit_list(digits), truncated ? RcfEnd::truncated : RcfEnd::finite};
      RcfConversion c = convert_rcf_to_oocf(e);
      Json j = base("convert");
      j["from"] = from;
      j["to"] = to;
      j["expansion"] = expansion_json(c.expansion);
      j["need_more_digits"] = c.need_more_digits;
      emit(j);
      return kOk;
    }

    if (*verify_cmd) {
      Real x = parse_real(input);
      Json j = base("verify");
      j["input"] = x.str();
      if (*v_thm1) {
        Thm1Report r = verify_thm1(require_quad(x, "verify thm1"), qmax);
        j["suite"] = "thm1";
        j["qmax"] = r.qmax;
        j["oocf_list"] = rationals_json(r.oocf_list);
        j["brute_list"] = rationals_json(r.brute_list);
        j["pass"] = r.pass;
        emit(j);
        return verdict(r.pass);
      }
      if (*v_thm2) {
        const QuadIrr& q = require_quad(x, "verify thm2");
        j["suite"] = "thm2";
        bool pass = false;
        try {
          PeriodInfo p = detect_period(q);
          OocfExpansion e = expand(x, kUnbounded);
          Real back = evaluate(e);
          pass = e.terminator == Terminator::periodic && back == x;
          j["preperiod_len"] = p.preperiod_len;
          j["period_len"] = p.period_len;
          j["expansion"] = expansion_json(e);
          j["evaluated"] = back.str();
        } catch (const CapExceeded& e) {
          j["error"] = e.what();
        }
        j["pass"] = pass;
        emit(j);
        return verdict(pass);
      }
      if (*v_inter) {
        IntermediateReport r = verify_intermediate(x, n);
        j["suite"] = "intermediate";
        j["n"] = n;
        j["principals"] = rationals_json(r.principals);
        j["located"] = r.located;
        j["pass"] = r.pass;
        emit(j);
        return verdict(r.pass);
      }
      if (*v_conj) {
        ConjugacyReport r = verify_conjugacy(x, n);
        j["suite"] = "conjugacy";
        j["max_digits"] = n;
        j["steps"] = r.steps;
        j["map_conjugacy"] = r.map_conjugacy;
        j["digit_correspondence"] = r.digit_correspondence;
        j["terminator_match"] = r.terminator_match;
        j["convergents_match"] = r.convergents_match;
        j["eicf_inf_rational"] = r.eicf_inf_rational;
        j["pass"] = r.pass();
        emit(j);
        return verdict(r.pass());
      }
      if (*v_keita) {
        KeitaReport r = keita_monotonicity(x, n);
        j["suite"] = "keita";
        j["n"] = r.n;
        Json qs = Json::array(), es = Json::array();
        for (const Int& q : r.q) qs.push_back(q.get_str());
        for (const Real& e : r.err) es.push_back(e.str());
        j["q"] = qs;
        j["err"] = es;
        j["q_prev"] = r.q_prev.get_str();
        j["err_prev"] = r.err_prev.str();
        j["q_chain"] = r.q_chain;
        j["q_edge_equal"] = r.q_edge_equal;
        j["err_chain"] = r.err_chain;
        j["pass"] = r.pass();
        emit(j);
        return verdict(r.pass());
      }
      if (*v_eicf) {
        EicfBestReport r = eicf_best_to_oocf(require_quad(x, "verify eicf-best"), n);
        j["suite"] = "eicf-best";
        j["n"] = n;
        j["candidates"] = rationals_json(r.candidates);
        j["one_rationals"] = rationals_json(r.one_rationals);
        j["oocf_principals"] = rationals_json(r.oocf_principals);
        j["pass"] = r.pass;
        emit(j);
        return verdict(r.pass);
      }
    }

    if (*measure_cmd) {
      Interval iv{require_rational(parse_real(lo), "--lo"), require_rational(parse_real(hi), "--hi")};
      MeasureReport r = measure_check(iv, cutoff, tol);
      Json j = base("measure");
      j["lo"] = iv.lo.str();
      j["hi"] = iv.hi.str();
      j["K"] = r.cutoff;
      j["tol"] = r.tol;
      j["lhs"] = r.lhs;
      j["rhs"] = r.rhs;
      j["diff"] = r.diff;
      j["tail_bound"] = r.tail_bound;
      j["pass"] = r.pass;
      emit(j);
      return verdict(r.pass);
    }

    if (*svg_cmd) {
      if (den_max < 1) throw InputError("--den-max must be >= 1");
      std::string svg = ford_svg(parse_real(input), n, den_max);
      if (svg_out.empty()) {
        out << svg;
        out.flush();
      } else {
        std::ofstream f(svg_out, std::ios::binary);
        if (!f) throw InputError("cannot write " + svg_out);
        f << svg;
      }
      return kOk;
    }
  } catch (const InputError& e) {
    err << "error: " << e.what() << std::endl;
    return kInputError;
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << std::endl;
    return kInputError;
  } catch (const MalformedExpansion& e) {
    err << "error: " << e.what() << std::endl;
    return kInputError;
  }
  return kInputError;
}

}  // namespace oodd
