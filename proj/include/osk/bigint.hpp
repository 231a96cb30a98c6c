#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>

namespace osk {

// Exact arbitrary-precision integer. Multiset counts and alternating sums
// are computed in this type throughout; no floating point anywhere.
using BigInt = mpz_class;

inline std::optional<std::int64_t> bigint_to_int64(const BigInt& v) {
  if (!v.fits_slong_p()) return std::nullopt;
  long x = v.get_si();
  return static_cast<std::int64_t>(x);
}

inline std::string bigint_to_string(const BigInt& v) { return v.get_str(); }

inline BigInt bigint_from_string(const std::string& s) {
  return BigInt(s, 10);
}

}  // namespace osk
