#pragma once

/*
 * Number grammar for the CLI:
 *
 *   expr    := term { ('+' | '-') term }
 *   term    := unary { ('*' | '/') unary }
 *   unary   := ['+' | '-'] primary
 *   primary := integer | 'sqrt' '(' integer ')' | '(' expr ')'
 *
 * so "3/7", "(-1+1*sqrt(2))/1", "sqrt(5)" and "2*sqrt(3)-3" all parse.
 * Whitespace is ignored. sqrt of a perfect square is an integer; all
 * sqrt terms in one input must share the same radicand.
 */

#include <cstddef>
#include <string>
#include <string_view>

#include "oodd/errors.hpp"
#include "oodd/real.hpp"

namespace oodd {

class ParseError : public InputError {
 public:
  ParseError(std::size_t pos, const std::string& msg);
  std::size_t pos() const { return pos_; }

 private:
  std::size_t pos_;
};

Real parse_real(std::string_view text);

}  // namespace oodd
