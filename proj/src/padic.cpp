#include "hgpadic/padic.hpp"

#include "hgpadic/errors.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <tuple>

namespace hgpadic {

u64 prime_power(std::uint32_t p, int k) {
  if (k < 0) throw Error(ErrorKind::InvalidArgument, "negative exponent");
  auto r = checked_pow(p, k);
  if (!r)
    throw Error(ErrorKind::PrecisionOverflow,
                std::to_string(p) + "^" + std::to_string(k) + " exceeds the word-size modulus");
  return *r;
}

void require_odd_prime(std::uint32_t p) {
  if (p == 2) throw Error(ErrorKind::SmallPrime, "p = 2 is not supported");
  if (!is_prime(p)) throw Error(ErrorKind::InvalidArgument, std::to_string(p) + " is not prime");
}

// ---------------------------------------------------------------- PadicNumber

PadicNumber::PadicNumber(std::uint32_t p, int precision, u64 residue)
    : p_(p), precision_(precision), modulus_(0), residue_(0) {
  if (p < 2) throw Error(ErrorKind::InvalidArgument, "prime must be >= 2");
  if (precision < 1) throw Error(ErrorKind::InvalidArgument, "precision must be >= 1");
  modulus_ = prime_power(p, precision);
  residue_ = residue % modulus_;
}

PadicNumber PadicNumber::from_int(i64 v, std::uint32_t p, int precision) {
  PadicNumber r(p, precision, 0);
  r.residue_ = reduce_signed(v, r.modulus_);
  return r;
}

int PadicNumber::valuation() const {
  if (residue_ == 0) return precision_;
  return valuation_u64(residue_, p_);
}

i64 PadicNumber::centered() const {
  if (residue_ > modulus_ / 2) return -static_cast<i64>(modulus_ - residue_);
  return static_cast<i64>(residue_);
}

std::vector<std::uint32_t> PadicNumber::digits() const {
  std::vector<std::uint32_t> out(precision_);
  u64 r = residue_;
  for (int i = 0; i < precision_; ++i) {
    out[i] = static_cast<std::uint32_t>(r % p_);
    r /= p_;
  }
  return out;
}

PadicNumber PadicNumber::from_digits(std::uint32_t p, const std::vector<std::uint32_t>& digits) {
  if (digits.empty()) throw Error(ErrorKind::InvalidArgument, "empty digit list");
  u64 r = 0;
  for (auto it = digits.rbegin(); it != digits.rend(); ++it) {
    if (*it >= p) throw Error(ErrorKind::InvalidArgument, "digit out of range");
    r = r * p + *it;
  }
  return PadicNumber(p, static_cast<int>(digits.size()), r);
}

PadicNumber PadicNumber::truncate(int precision) const {
  if (precision > precision_)
    throw Error(ErrorKind::PrecisionMismatch, "cannot raise precision by truncation");
  return PadicNumber(p_, precision, residue_);
}

PadicNumber PadicNumber::inverse() const {
  if (!is_unit()) throw Error(ErrorKind::UnitRequired, "inverse of a non-unit " + to_string());
  PadicNumber r = *this;
  r.residue_ = *invmod(residue_, modulus_);
  return r;
}

PadicNumber PadicNumber::pow(u64 e) const {
  PadicNumber r = *this;
  r.residue_ = powmod(residue_, e, modulus_);
  return r;
}

PadicNumber PadicNumber::divide_by_p_power(int k) const {
  if (k == 0) return *this;
  if (valuation() < k)
    throw Error(ErrorKind::NonIntegral, to_string() + " is not divisible by p^" + std::to_string(k));
  if (k >= precision_)
    throw Error(ErrorKind::PrecisionOverflow, "division by p^k leaves no known digits");
  return PadicNumber(p_, precision_ - k, residue_ / prime_power(p_, k));
}

PadicNumber PadicNumber::multiply_by_p_power(int k) const {
  if (k >= precision_) return zero(p_, precision_);
  return PadicNumber(p_, precision_, mulmod(residue_, prime_power(p_, k), modulus_));
}

bool PadicNumber::congruent(const PadicNumber& other, int k) const {
  if (p_ != other.p_) throw Error(ErrorKind::InvalidArgument, "prime mismatch");
  if (k > precision_ || k > other.precision_)
    throw Error(ErrorKind::PrecisionMismatch, "congruence requested beyond known precision");
  u64 m = prime_power(p_, k);
  return residue_ % m == other.residue_ % m;
}

namespace {

void check_same_prime(const PadicNumber& a, const PadicNumber& b) {
  if (a.prime() != b.prime()) throw Error(ErrorKind::InvalidArgument, "prime mismatch");
}

}  // namespace

PadicNumber PadicNumber::operator-() const {
  PadicNumber r = *this;
  r.residue_ = negmod(residue_, modulus_);
  return r;
}

PadicNumber operator+(const PadicNumber& a, const PadicNumber& b) {
  check_same_prime(a, b);
  const PadicNumber& lo = a.precision_ <= b.precision_ ? a : b;
  PadicNumber r = lo;
  r.residue_ = addmod(a.residue_ % lo.modulus_, b.residue_ % lo.modulus_, lo.modulus_);
  return r;
}

PadicNumber operator-(const PadicNumber& a, const PadicNumber& b) {
  check_same_prime(a, b);
  const PadicNumber& lo = a.precision_ <= b.precision_ ? a : b;
  PadicNumber r = lo;
  r.residue_ = submod(a.residue_ % lo.modulus_, b.residue_ % lo.modulus_, lo.modulus_);
  return r;
}

PadicNumber operator*(const PadicNumber& a, const PadicNumber& b) {
  check_same_prime(a, b);
  const PadicNumber& lo = a.precision_ <= b.precision_ ? a : b;
  PadicNumber r = lo;
  r.residue_ = mulmod(a.residue_ % lo.modulus_, b.residue_ % lo.modulus_, lo.modulus_);
  return r;
}

PadicNumber operator/(const PadicNumber& a, const PadicNumber& b) { return a * b.inverse(); }

std::string PadicNumber::to_string() const {
  return std::to_string(residue_) + " mod " + std::to_string(p_) + "^" + std::to_string(precision_);
}

// ---------------------------------------------------------------- functions

PadicNumber reduce(const PRational& q, std::uint32_t p, int precision) {
  if (!q.p_integral(p))
    throw Error(ErrorKind::NonIntegral, q.to_string() + " is not " + std::to_string(p) + "-integral");
  u64 m = prime_power(p, precision);
  mpz_class mz(std::to_string(m));
  mpz_class num = q.numerator() % mz;
  if (num < 0) num += mz;
  mpz_class den = q.denominator() % mz;
  mpz_class inv;
  mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), mz.get_mpz_t());
  mpz_class r = (num * inv) % mz;
  return PadicNumber(p, precision, std::stoull(r.get_str()));
}

PRational dwork_prime(const PRational& a, std::uint32_t p) {
  if (!a.p_integral(p))
    throw Error(ErrorKind::NonIntegral, a.to_string() + " is not " + std::to_string(p) + "-integral");
  u64 residue = reduce(a, p, 1).residue();
  long k = static_cast<long>(negmod(residue, p));
  return (a + PRational(k)) / PRational(static_cast<long>(p));
}

DworkOrbit dwork_orbit(const std::vector<PRational>& a, std::uint32_t p) {
  DworkOrbit orbit;
  std::vector<PRational> cur = a;
  for (;;) {
    orbit.members.push_back(cur);
    std::vector<PRational> next;
    next.reserve(cur.size());
    for (const auto& x : cur) next.push_back(dwork_prime(x, p));
    auto hit = std::find(orbit.members.begin(), orbit.members.end(), next);
    if (hit != orbit.members.end()) {
      if (hit != orbit.members.begin())
        throw Error(ErrorKind::OrbitMismatch, "parameter tuple is only eventually Dwork-periodic");
      orbit.cycle_length = static_cast<int>(orbit.members.size());
      return orbit;
    }
    cur = std::move(next);
    if (orbit.members.size() > 100000)
      throw Error(ErrorKind::OrbitMismatch, "Dwork orbit did not close");
  }
}

PadicNumber teichmuller(i64 u, std::uint32_t p, int precision) {
  if (reduce_signed(u, p) == 0)
    throw Error(ErrorKind::UnitRequired, "Teichmuller lift of a multiple of p");
  return teichmuller(PadicNumber::from_int(u, p, precision));
}

PadicNumber teichmuller(const PadicNumber& u) {
  if (!u.is_unit()) throw Error(ErrorKind::UnitRequired, "Teichmuller lift of a non-unit");
  // x -> x^p converges to the lift, gaining at least one digit per step.
  PadicNumber x = u;
  for (int i = 0; i <= u.precision(); ++i) {
    PadicNumber next = x.pow(u.prime());
    if (next == x) return x;
    x = next;
  }
  return x;
}

PadicNumber iwasawa_log(const PadicNumber& c) {
  if (!c.is_unit()) throw Error(ErrorKind::UnitRequired, "Iwasawa log of a non-unit");
  const std::uint32_t p = c.prime();
  const int n = c.precision();
  if (n == 1) return PadicNumber::zero(p, 1);
  const u64 m = c.modulus();
  PadicNumber x = c / teichmuller(c) - PadicNumber::one(p, n);
  // x = p*y with y known mod p^(n-1); each term p^(k-e) y^k / (k/p^e).
  u64 y = x.residue() / p;
  u64 acc = 0;
  u64 y_pow = 1;
  for (u64 k = 1;; ++k) {
    y_pow = mulmod(y_pow, y, m);
    int e = valuation_u64(k, p);
    int shift = static_cast<int>(k) - e;
    if (shift >= n) {
      // later terms have larger shift: k - v_p(k) is non-decreasing past this point
      if (k > static_cast<u64>(n) + 64) break;
      continue;
    }
    u64 unit_k = k / prime_power(p, e);
    u64 term = mulmod(mulmod(y_pow, prime_power(p, shift), m), *invmod(unit_k % m, m), m);
    acc = (k % 2 == 1) ? addmod(acc, term, m) : submod(acc, term, m);
  }
  return PadicNumber(p, n, acc);
}

namespace {

// Sum of 1/k over 1 <= k <= r, p∤k, modulo m = p^N, kept as a fraction.
u64 partial_harmonic(u64 r, std::uint32_t p, u64 m) {
  u64 num = 0, den = 1;
  for (u64 k = 1; k <= r; ++k) {
    if (k % p == 0) continue;
    u64 km = k % m;
    num = addmod(mulmod(num, km, m), den, m);
    den = mulmod(den, km, m);
  }
  return mulmod(num, *invmod(den, m), m);
}

struct HarmonicCache {
  std::mutex mu;
  std::map<std::pair<std::uint32_t, int>, u64> full_block;
  std::map<std::tuple<std::string, std::uint32_t, int>, u64> psi;
};

HarmonicCache& harmonic_cache() {
  static HarmonicCache cache;
  return cache;
}

// 1/k mod p^N depends only on k mod p^N, so a sum over 1..n-1 splits into
// q full blocks of length p^N plus a remainder.
u64 harmonic_sum_below(u64 n, std::uint32_t p, int precision) {
  const u64 m = prime_power(p, precision);
  u64 block;
  {
    auto& cache = harmonic_cache();
    std::lock_guard lock(cache.mu);
    auto key = std::make_pair(p, precision);
    auto it = cache.full_block.find(key);
    if (it == cache.full_block.end()) it = cache.full_block.emplace(key, partial_harmonic(m, p, m)).first;
    block = it->second;
  }
  if (n == 0) return 0;
  u64 q = (n - 1) / m;
  u64 r = (n - 1) % m;
  return addmod(mulmod(q % m, block, m), partial_harmonic(r, p, m), m);
}

}  // namespace

PadicNumber psi_tilde(const PRational& a, std::uint32_t p, int precision) {
  require_odd_prime(p);
  if (!a.p_integral(p))
    throw Error(ErrorKind::NonIntegral, a.to_string() + " is not " + std::to_string(p) + "-integral");
  auto key = std::make_tuple(a.to_string(), p, precision);
  {
    auto& cache = harmonic_cache();
    std::lock_guard lock(cache.mu);
    if (auto it = cache.psi.find(key); it != cache.psi.end()) return PadicNumber(p, precision, it->second);
  }
  auto at_level = [&](int level) {
    u64 rep = reduce(a, p, level).residue();
    if (rep == 0) rep = prime_power(p, level);
    return harmonic_sum_below(rep, p, precision);
  };
  int level = precision + 2;
  u64 prev = at_level(level);
  for (int step = 1; step <= 8; step *= 2) {
    int next_level = level + step;
    if (!checked_pow(p, next_level)) break;
    u64 cur = at_level(next_level);
    if (cur == prev) {
      auto& cache = harmonic_cache();
      std::lock_guard lock(cache.mu);
      cache.psi.emplace(key, cur);
      return PadicNumber(p, precision, cur);
    }
    prev = cur;
    level = next_level;
  }
  throw Error(ErrorKind::NoStabilization, "psi~_p(" + a.to_string() + ") did not stabilize");
}

PadicNumber hensel_quadratic(i64 trace, i64 norm, std::uint32_t p, int precision) {
  if (reduce_signed(trace, p) == 0)
    throw Error(ErrorKind::NotOrdinary, "p divides the trace " + std::to_string(trace));
  if (reduce_signed(norm, p) != 0)
    throw Error(ErrorKind::InvalidArgument, "p must divide the norm");
  const PadicNumber t = PadicNumber::from_int(trace, p, precision);
  const PadicNumber n = PadicNumber::from_int(norm, p, precision);
  PadicNumber u = t;
  // Newton steps; the root is simple since f'(u) = 2u - t is a unit.
  for (int i = 0; i < precision + 1; ++i) {
    PadicNumber f = u * u - t * u + n;
    if (f.is_zero()) break;
    PadicNumber df = u + u - t;
    u = u - f / df;
  }
  return u;
}

std::optional<PRational> rational_reconstruct(const PadicNumber& x, u64 bound) {
  const u64 m = x.modulus();
  if (static_cast<u128>(bound) * bound * 2 > m)
    throw Error(ErrorKind::InvalidArgument, "reconstruction bound too large for the precision");
  i128 r0 = m, r1 = x.residue();
  i128 t0 = 0, t1 = 1;
  while (r1 > static_cast<i128>(bound)) {
    i128 q = r0 / r1;
    i128 tmp = r0 - q * r1;
    r0 = r1;
    r1 = tmp;
    tmp = t0 - q * t1;
    t0 = t1;
    t1 = tmp;
  }
  if (t1 == 0) return std::nullopt;
  i128 num = r1, den = t1;
  if (den < 0) {
    den = -den;
    num = -num;
  }
  if (den > static_cast<i128>(bound)) return std::nullopt;
  if (static_cast<u64>(den) % x.prime() == 0) return std::nullopt;
  if (std::gcd(static_cast<u64>(num < 0 ? -num : num), static_cast<u64>(den)) != 1) return std::nullopt;
  if (reduce_signed(num - den * static_cast<i128>(x.residue()), m) != 0) return std::nullopt;
  return PRational(static_cast<long>(num), static_cast<long>(den));
}

}  // namespace hgpadic
