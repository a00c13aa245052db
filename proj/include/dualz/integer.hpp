#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace dualz {

/// Arbitrary-precision integer used for every matrix entry.
using Int = mpz_class;
using IntVector = std::vector<Int>;

struct ExtendedGcd {
  Int g;  // gcd(a, b) >= 0
  Int s;  // s*a + t*b == g
  Int t;
};

ExtendedGcd xgcd(const Int& a, const Int& b);
Int gcd(const Int& a, const Int& b);

/// Floor division and the matching nonnegative remainder for b > 0.
Int floor_div(const Int& a, const Int& b);
Int floor_mod(const Int& a, const Int& b);

/// Decimal parsing; throws ParseError on anything that is not an integer.
Int parse_int(std::string_view text);
std::string to_string(const Int& value);

}  // namespace dualz
