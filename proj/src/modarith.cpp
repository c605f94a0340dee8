#include "hgpadic/modarith.hpp"
#include "hgpadic/errors.hpp"

namespace hgpadic {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::NonIntegral: return "NonIntegral";
    case ErrorKind::UnitRequired: return "UnitRequired";
    case ErrorKind::NoStabilization: return "NoStabilization";
    case ErrorKind::NotOrdinary: return "NotOrdinary";
    case ErrorKind::PrecisionOverflow: return "PrecisionOverflow";
    case ErrorKind::PrecisionMismatch: return "PrecisionMismatch";
    case ErrorKind::NotInvertible: return "NotInvertible";
    case ErrorKind::BadFrobeniusConstant: return "BadFrobeniusConstant";
    case ErrorKind::NonzeroConstantTerm: return "NonzeroConstantTerm";
    case ErrorKind::NonUnitDenominator: return "NonUnitDenominator";
    case ErrorKind::TruncationExceeded: return "TruncationExceeded";
    case ErrorKind::PrecisionWindowExceeded: return "PrecisionWindowExceeded";
    case ErrorKind::BadFiber: return "BadFiber";
    case ErrorKind::BadHasse: return "BadHasse";
    case ErrorKind::SmallPrime: return "SmallPrime";
    case ErrorKind::OrbitMismatch: return "OrbitMismatch";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::BadReduction: return "BadReduction";
    case ErrorKind::NonIntegralPrefactor: return "NonIntegralPrefactor";
    case ErrorKind::NotModular: return "NotModular";
    case ErrorKind::IntegralityViolated: return "IntegralityViolated";
  }
  return "Unknown";
}

u64 powmod(u64 base, u64 exp, u64 m) {
  u64 result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return result;
}

std::optional<u64> invmod(u64 a, u64 m) {
  i128 t = 0, new_t = 1;
  i128 r = m, new_r = a % m;
  while (new_r != 0) {
    i128 q = r / new_r;
    i128 tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (r != 1) return std::nullopt;
  if (t < 0) t += m;
  return static_cast<u64>(t);
}

std::optional<u64> checked_pow(u64 p, int e) {
  u64 r = 1;
  for (int i = 0; i < e; ++i) {
    if (r > (kMaxModulus - 1) / p) return std::nullopt;
    r *= p;
  }
  return r;
}

int valuation_u64(u64 v, u64 p) {
  int e = 0;
  while (v % p == 0) {
    v /= p;
    ++e;
  }
  return e;
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace hgpadic
