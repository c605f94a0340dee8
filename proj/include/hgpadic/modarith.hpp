#pragma once

// Word-sized modular arithmetic shared by the p-adic and finite-field code.
// Moduli are kept below 2^62 so sums of two residues never overflow.

#include <cstdint>
#include <optional>

namespace hgpadic {

using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;
using i128 = __int128;

inline constexpr u64 kMaxModulus = u64{1} << 62;

inline u64 mulmod(u64 a, u64 b, u64 m) {
  if (m <= (u64{1} << 32)) return (a * b) % m;
  return static_cast<u64>((static_cast<u128>(a) * b) % m);
}

inline u64 addmod(u64 a, u64 b, u64 m) {
  u64 s = a + b;
  return s >= m ? s - m : s;
}

inline u64 submod(u64 a, u64 b, u64 m) { return a >= b ? a - b : a + m - b; }

inline u64 negmod(u64 a, u64 m) { return a == 0 ? 0 : m - a; }

u64 powmod(u64 base, u64 exp, u64 m);

/// Inverse of a modulo m, or nullopt when gcd(a, m) != 1.
std::optional<u64> invmod(u64 a, u64 m);

/// Canonical residue of a signed value.
inline u64 reduce_signed(i128 v, u64 m) {
  i128 r = v % static_cast<i128>(m);
  if (r < 0) r += m;
  return static_cast<u64>(r);
}

/// p^e, or nullopt if it does not fit below kMaxModulus.
std::optional<u64> checked_pow(u64 p, int e);

/// Exponent of p in v (v != 0).
int valuation_u64(u64 v, u64 p);

bool is_prime(u64 n);

}  // namespace hgpadic
