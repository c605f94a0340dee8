#pragma once

// Dense polynomials and truncated series over Z/mZ with a word-sized
// modulus. This is the evaluation kernel behind the congruence code, where
// truncation orders reach p^n ~ 10^5 and per-coefficient objects are too slow.

#include "hgpadic/modarith.hpp"

#include <cstddef>
#include <vector>

namespace hgpadic {

struct ZnPoly {
  u64 modulus = 1;
  std::vector<u64> c;  // c[i] is the coefficient of t^i, always reduced

  ZnPoly() = default;
  ZnPoly(u64 m, std::vector<u64> coeffs);

  std::size_t size() const noexcept { return c.size(); }
  u64 at(std::size_t i) const noexcept { return i < c.size() ? c[i] : 0; }

  /// Same coefficients reduced to a divisor of the modulus.
  ZnPoly reduced(u64 new_modulus) const;
  /// Degree below k.
  ZnPoly truncated(std::size_t k) const;
  /// Drops trailing zeros.
  void trim();

  u64 evaluate(u64 x) const;
};

/// Product truncated below `limit` (limit = 0 means the full product).
ZnPoly multiply(const ZnPoly& a, const ZnPoly& b, std::size_t limit = 0);

/// Power-series inverse to `order` terms; c[0] must be invertible.
ZnPoly inverse_series(const ZnPoly& f, std::size_t order);

/// a*d - b*c over the common modulus: zero iff a/c == b/d as rational functions
/// with unit constant denominators.
bool cross_equal(const ZnPoly& num_a, const ZnPoly& den_a, const ZnPoly& num_b, const ZnPoly& den_b,
                 u64 modulus);

}  // namespace hgpadic
