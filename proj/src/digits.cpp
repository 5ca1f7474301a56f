#include "oodd/digits.hpp"

#include "oodd/errors.hpp"

namespace oodd {

bool is_legal(const OocfDigit& d) {
  if (d.eps != 1 && d.eps != -1) return false;
  if (d.a < 1) return false;
  return !(d.a == 1 && d.eps == -1);
}

void require_legal(const OocfDigit& d) {
  if (!is_legal(d)) throw InputError("illegal OOCF digit " + to_string(d));
}

Mat2 digit_matrix(const OocfDigit& d) {
  require_legal(d);
  Int a = Int(static_cast<long>(d.a));
  return {a - 1, a + d.eps - 1, a, a + d.eps};
}

EicfDigit to_eicf(const OocfDigit& d) {
  require_legal(d);
  return d.eps == 1 ? EicfDigit{2 * d.a, 1} : EicfDigit{2 * (d.a - 1), -1};
}

std::string to_string(const OocfDigit& d) {
  return "(" + std::to_string(d.a) + "," + std::to_string(d.eps) + ")";
}

}  // namespace oodd
