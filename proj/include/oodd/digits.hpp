#pragma once

#include <cstdint>
#include <string>

#include "oodd/mat2.hpp"

namespace oodd {

// OOCF partial quotient (a, eps). (1, -1) is not a digit.
struct OocfDigit {
  std::int64_t a = 1;
  int eps = 1;

  friend bool operator==(const OocfDigit&, const OocfDigit&) = default;
  friend auto operator<=>(const OocfDigit&, const OocfDigit&) = default;
};

// EICF partial quotient (b, eta), b even and >= 2.
struct EicfDigit {
  std::int64_t b = 2;
  int eta = 1;

  friend bool operator==(const EicfDigit&, const EicfDigit&) = default;
};

bool is_legal(const OocfDigit& d);
// Throws InputError for an illegal digit.
void require_legal(const OocfDigit& d);

// [[a-1, a+eps-1], [a, a+eps]]: the Moebius form of the inverse branch f_(a,eps).
Mat2 digit_matrix(const OocfDigit& d);

// phi: (k+1,-1) -> (2k,-1), (k,1) -> (2k,1).
EicfDigit to_eicf(const OocfDigit& d);

std::string to_string(const OocfDigit& d);

}  // namespace oodd
