#include "oodd/parse.hpp"

#include <cctype>

namespace oodd {

ParseError::ParseError(std::size_t pos, const std::string& msg)
    : InputError("parse error at position " + std::to_string(pos) + ": " + msg), pos_(pos) {}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  Real run() {
    skip();
    if (at_end()) throw ParseError(pos_, "empty input");
    Real v = expr();
    skip();
    if (!at_end()) throw ParseError(pos_, std::string("unexpected '") + s_[pos_] + "'");
    return v;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool at_end() const { return pos_ >= s_.size(); }
  bool accept(char c) {
    skip();
    if (!at_end() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) throw ParseError(pos_, std::string("expected '") + c + "'");
  }

  template <class F>
  Real apply(std::size_t at, F&& f) {
    try {
      return f();
    } catch (const ParseError&) {
      throw;
    } catch (const InputError& e) {
      throw ParseError(at, e.what());
    }
  }

  Real expr() {
    Real v = term();
    for (;;) {
      skip();
      std::size_t at = pos_;
      if (accept('+')) {
        Real r = term();
        v = apply(at, [&] { return v + r; });
      } else if (accept('-')) {
        Real r = term();
        v = apply(at, [&] { return v - r; });
      } else {
        return v;
      }
    }
  }

  Real term() {
    Real v = unary();
    for (;;) {
      skip();
      std::size_t at = pos_;
      if (accept('*')) {
        Real r = unary();
        v = apply(at, [&] { return v * r; });
      } else if (accept('/')) {
        Real r = unary();
        v = apply(at, [&] { return v / r; });
      } else {
        return v;
      }
    }
  }

  Real unary() {
    if (accept('-')) return -primary();
    accept('+');
    return primary();
  }

  Real primary() {
    skip();
    if (at_end()) throw ParseError(pos_, "unexpected end of input");
    if (accept('(')) {
      Real v = expr();
      expect(')');
      return v;
    }
    if (s_.substr(pos_, 4) == "sqrt") {
      pos_ += 4;
      expect('(');
      skip();
      std::size_t at = pos_;
      Int d = integer();
      expect(')');
      if (d < 0) throw ParseError(at, "sqrt of a negative number");
      if (is_perfect_square(d)) return Real(Rational(isqrt(d)));
      return Real(QuadIrr(0, 1, d, 1));
    }
    if (std::isdigit(static_cast<unsigned char>(s_[pos_]))) return Real(Rational(integer()));
    throw ParseError(pos_, std::string("unexpected '") + s_[pos_] + "'");
  }

  Int integer() {
    skip();
    bool neg = accept('-');
    skip();
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError(pos_, "expected an integer");
    Int v(std::string(s_.substr(start, pos_ - start)), 10);
    return neg ? Int(-v) : v;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

Real parse_real(std::string_view text) { return Parser(text).run(); }

}  // namespace oodd
