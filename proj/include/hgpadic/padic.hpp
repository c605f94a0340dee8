#pragma once

// Elements of Z_p known to a fixed absolute precision, plus the scalar
// special functions the hypergeometric code needs.

#include "hgpadic/modarith.hpp"
#include "hgpadic/prational.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hgpadic {

/// An element of Z_p known modulo p^precision.
///
/// The residue always lies in [0, p^precision). Binary operations take the
/// smaller operand precision, so no digit beyond what both inputs justify is
/// ever reported.
class PadicNumber {
 public:
  PadicNumber(std::uint32_t p, int precision, u64 residue);

  static PadicNumber zero(std::uint32_t p, int precision) { return {p, precision, 0}; }
  static PadicNumber one(std::uint32_t p, int precision) { return {p, precision, 1}; }
  static PadicNumber from_int(i64 v, std::uint32_t p, int precision);

  std::uint32_t prime() const noexcept { return p_; }
  int precision() const noexcept { return precision_; }
  u64 residue() const noexcept { return residue_; }
  u64 modulus() const noexcept { return modulus_; }

  /// min(ord_p(residue), precision); equals precision() for the zero residue.
  int valuation() const;
  bool is_zero() const noexcept { return residue_ == 0; }
  bool is_unit() const noexcept { return residue_ % p_ != 0; }

  /// Signed representative in (-p^N/2, p^N/2].
  i64 centered() const;

  /// Base-p digits, least significant first, exactly precision() of them.
  std::vector<std::uint32_t> digits() const;
  static PadicNumber from_digits(std::uint32_t p, const std::vector<std::uint32_t>& digits);

  /// Drops to a lower precision.
  PadicNumber truncate(int precision) const;

  /// Multiplicative inverse of a unit.
  PadicNumber inverse() const;
  PadicNumber pow(u64 e) const;

  /// Divides by p^k; requires valuation() >= k and lowers precision by k.
  PadicNumber divide_by_p_power(int k) const;
  /// Multiplies by p^k; precision stays the same.
  PadicNumber multiply_by_p_power(int k) const;

  /// True when both agree modulo p^k (k no larger than either precision).
  bool congruent(const PadicNumber& other, int k) const;

  PadicNumber operator-() const;
  friend PadicNumber operator+(const PadicNumber& a, const PadicNumber& b);
  friend PadicNumber operator-(const PadicNumber& a, const PadicNumber& b);
  friend PadicNumber operator*(const PadicNumber& a, const PadicNumber& b);
  /// Division by a unit.
  friend PadicNumber operator/(const PadicNumber& a, const PadicNumber& b);

  friend bool operator==(const PadicNumber& a, const PadicNumber& b) {
    return a.p_ == b.p_ && a.precision_ == b.precision_ && a.residue_ == b.residue_;
  }

  std::string to_string() const;

 private:
  std::uint32_t p_;
  int precision_;
  u64 modulus_;
  u64 residue_;
};

/// p^k as a machine integer; throws PrecisionOverflow if it does not fit.
u64 prime_power(std::uint32_t p, int k);

void require_odd_prime(std::uint32_t p);

/// The image of q in Z/p^N.
PadicNumber reduce(const PRational& q, std::uint32_t p, int precision);

/// (a + k)/p with k in {0..p-1} chosen so that p | a + k.
PRational dwork_prime(const PRational& a, std::uint32_t p);

struct DworkOrbit {
  std::vector<std::vector<PRational>> members;  // a^(0), ..., a^(m-1)
  int cycle_length = 0;
};

DworkOrbit dwork_orbit(const std::vector<PRational>& a, std::uint32_t p);

/// The (p-1)-st root of unity congruent to u mod p.
PadicNumber teichmuller(i64 u, std::uint32_t p, int precision);
PadicNumber teichmuller(const PadicNumber& u);

/// Iwasawa logarithm of a unit (log of the Teichmuller part is zero).
PadicNumber iwasawa_log(const PadicNumber& c);

/// psi~_p(a) = lim_{n -> a} sum_{1<=k<n, p∤k} 1/k, known mod p^precision.
PadicNumber psi_tilde(const PRational& a, std::uint32_t p, int precision);

/// The unit root of u^2 - trace*u + norm modulo p^precision.
PadicNumber hensel_quadratic(i64 trace, i64 norm, std::uint32_t p, int precision);

/// Smallest-height n/d with |n|, d <= bound and n/d = x, if one exists.
std::optional<PRational> rational_reconstruct(const PadicNumber& x, u64 bound);

}  // namespace hgpadic
