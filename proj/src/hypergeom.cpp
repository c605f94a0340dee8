#include "hgpadic/hypergeom.hpp"

#include "hgpadic/errors.hpp"

#include <sstream>

namespace hgpadic {

// ---------------------------------------------------------------- parameters

HGParams::HGParams(std::vector<PRational> values) : a(std::move(values)) {
  if (a.empty()) throw Error(ErrorKind::InvalidArgument, "parameter tuple must be non-empty");
}

HGParams HGParams::from_scheme(const std::vector<int>& n, const std::vector<int>& i) {
  if (n.size() != i.size() || n.empty()) throw Error(ErrorKind::InvalidArgument, "scheme data size mismatch");
  std::vector<PRational> out;
  for (std::size_t k = 0; k < n.size(); ++k) {
    if (n[k] < 2 || i[k] <= 0 || i[k] >= n[k])
      throw Error(ErrorKind::InvalidArgument, "need 0 < i_k < n_k and n_k >= 2");
    out.push_back(PRational(1) - PRational(i[k], n[k]));
  }
  return HGParams(std::move(out));
}

HGParams HGParams::parse(const std::string& text) {
  std::vector<PRational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(PRational::parse(item));
  return HGParams(std::move(out));
}

HGParams HGParams::dual() const {
  std::vector<PRational> out;
  for (const auto& x : a) out.push_back(PRational(1) - x);
  return HGParams(std::move(out));
}

HGParams HGParams::dwork_prime(std::uint32_t p) const {
  std::vector<PRational> out;
  for (const auto& x : a) out.push_back(hgpadic::dwork_prime(x, p));
  return HGParams(std::move(out));
}

DworkOrbit HGParams::orbit(std::uint32_t p) const { return dwork_orbit(a, p); }

void HGParams::require_p_integral(std::uint32_t p) const {
  for (const auto& x : a)
    if (!x.p_integral(p))
      throw Error(ErrorKind::NonIntegral, x.to_string() + " is not " + std::to_string(p) + "-integral");
}

std::string HGParams::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) s += ",";
    s += a[i].to_string();
  }
  return s + ")";
}

FrobeniusSpec FrobeniusSpec::identity(std::uint32_t p) {
  require_odd_prime(p);
  return {p, PRational(1), "c = 1"};
}

FrobeniusSpec FrobeniusSpec::fixing(const PRational& alpha, std::uint32_t p) {
  require_odd_prime(p);
  if (!alpha.p_integral(p) || reduce(alpha, p, 1).is_zero())
    throw Error(ErrorKind::BadFiber, "alpha must be a p-adic unit");
  PRational inv = PRational(1) / alpha;
  PRational c(1);
  for (std::uint32_t i = 0; i + 1 < p; ++i) c = c * inv;
  return {p, c, "c = alpha^(1-p)"};
}

FrobeniusSpec FrobeniusSpec::custom(const PRational& c, std::uint32_t p) {
  require_odd_prime(p);
  if (!c.p_integral(p) || reduce(c, p, 1).residue() != 1)
    throw Error(ErrorKind::BadFrobeniusConstant, "c must be 1 mod p, got " + c.to_string());
  return {p, c, "custom"};
}

// ---------------------------------------------------------------- exact series

PRational pochhammer(const PRational& alpha, int n) {
  if (n < 0) throw Error(ErrorKind::InvalidArgument, "negative Pochhammer index");
  PRational r(1);
  for (int i = 0; i < n; ++i) r = r * (alpha + PRational(i));
  return r;
}

RationalSeries hg_series(const HGParams& a, std::size_t order) {
  if (order == 0) throw Error(ErrorKind::InvalidArgument, "order must be >= 1");
  std::vector<PRational> c(order);
  c[0] = PRational(1);
  for (std::size_t n = 1; n < order; ++n) {
    PRational ratio(1);
    const long k = static_cast<long>(n) - 1;
    for (const auto& x : a.a) ratio = ratio * (x + PRational(k)) / PRational(k + 1);
    c[n] = c[n - 1] * ratio;
  }
  return RationalSeries(std::move(c));
}

DifferentialOperator hg_operator(const HGParams& a) {
  // (D + a_0)...(D + a_d) expanded in powers of D
  std::vector<PRational> e{PRational(1)};
  for (const auto& x : a.a) {
    std::vector<PRational> next(e.size() + 1, PRational(0));
    for (std::size_t k = 0; k < e.size(); ++k) {
      next[k] = next[k] + e[k] * x;
      next[k + 1] = next[k + 1] + e[k];
    }
    e = std::move(next);
  }
  std::vector<RationalFunction> coeffs;
  for (std::size_t k = 0; k < e.size(); ++k) coeffs.push_back(-(RationalFunction::t() * RationalFunction(e[k])));
  coeffs.back() = coeffs.back() + RationalFunction(PRational(1));
  return DifferentialOperator(std::move(coeffs));
}

// ---------------------------------------------------------------- mod p^n kernels

ZnPoly hg_truncation(const HGParams& a, std::uint32_t p, int precision, std::size_t order) {
  a.require_p_integral(p);
  const u64 m = prime_power(p, precision);
  struct Param {
    i64 r, s;
  };
  std::vector<Param> params;
  std::vector<u64> inv_s;
  for (const auto& x : a.a) {
    params.push_back({x.num_i64(), x.den_i64()});
    inv_s.push_back(*invmod(static_cast<u64>(x.den_i64()) % m, m));
  }
  const int factors = static_cast<int>(params.size());
  std::vector<u64> out(order, 0);
  if (order == 0) return ZnPoly(m, {});
  // A_k = p^v * u with u a unit known mod p^precision.
  u64 unit = 1 % m;
  long val = 0;
  bool vanished = false;
  out[0] = 1 % m;
  for (std::size_t k = 0; k + 1 < order; ++k) {
    for (int i = 0; i < factors && !vanished; ++i) {
      i128 f = static_cast<i128>(params[i].r) + static_cast<i128>(k) * params[i].s;
      if (f == 0) {
        vanished = true;
        break;
      }
      if (f < 0) {
        f = -f;
        unit = negmod(unit, m);
      }
      while (f % p == 0) {
        f /= p;
        ++val;
      }
      unit = mulmod(mulmod(unit, static_cast<u64>(f % m), m), inv_s[i], m);
    }
    if (vanished) break;
    u64 kk = k + 1;
    int e = 0;
    while (kk % p == 0) {
      kk /= p;
      ++e;
    }
    val -= static_cast<long>(e) * factors;
    unit = mulmod(unit, powmod(*invmod(kk % m, m), static_cast<u64>(factors), m), m);
    if (val < 0) throw Error(ErrorKind::IntegralityViolated, "hypergeometric coefficient is not p-integral");
    out[k + 1] = val >= precision ? 0 : mulmod(unit, prime_power(p, static_cast<int>(val)), m);
  }
  return ZnPoly(m, std::move(out));
}

ZnPoly h_polynomial(const HGParams& a, std::uint32_t p) {
  ZnPoly h(p, {1});
  for (const auto& member : a.orbit(p).members) h = multiply(h, hg_truncation(HGParams(member), p, 1, p));
  h.trim();
  return h;
}

PadicSeries TruncationQuotient::expand(std::size_t order) const {
  ZnPoly inv = inverse_series(denominator, order);
  ZnPoly prod = multiply(numerator, inv, order);
  std::vector<PadicNumber> out;
  out.reserve(order);
  for (std::size_t k = 0; k < order; ++k) out.emplace_back(p, level, prod.at(k));
  return PadicSeries(std::move(out));
}

PadicNumber TruncationQuotient::evaluate(const PadicNumber& x) const {
  if (x.prime() != p) throw Error(ErrorKind::InvalidArgument, "prime mismatch");
  const u64 xr = x.truncate(level).residue();
  const u64 den = denominator.evaluate(xr);
  if (den % p == 0) throw Error(ErrorKind::BadHasse, "truncated denominator vanishes mod p at the point");
  return PadicNumber(p, level, mulmod(numerator.evaluate(xr), *invmod(den, numerator.modulus), numerator.modulus));
}

TruncationQuotient dwork_quotient(const HGParams& a, const FrobeniusSpec& fs, int n) {
  require_odd_prime(fs.p);
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "level must be >= 1");
  const std::uint32_t p = fs.p;
  const u64 m = prime_power(p, n);
  const std::size_t order = m;
  ZnPoly num = hg_truncation(a, p, n, order);
  ZnPoly a_prime = hg_truncation(a.dwork_prime(p), p, n, order / p);
  const u64 c = fs.c_padic(n).residue();
  std::vector<u64> den(order, 0);
  u64 ck = 1 % m;
  for (std::size_t k = 0; k * p < order; ++k) {
    den[k * p] = mulmod(ck, a_prime.at(k), m);
    ck = mulmod(ck, c, m);
  }
  return {p, n, std::move(num), ZnPoly(m, std::move(den))};
}

namespace {

// Largest e with p^e <= x (x >= 1).
int floor_log(u64 x, std::uint32_t p) {
  int e = 0;
  while (x >= p) {
    x /= p;
    ++e;
  }
  return e;
}

// Coefficients of G_a(t) mod p^precision for degrees below `order`.
std::vector<u64> g_coefficients(const HGParams& a, const FrobeniusSpec& fs, int precision, std::size_t order) {
  const std::uint32_t p = fs.p;
  const u64 m = prime_power(p, precision);
  const int work = precision + (order > 1 ? floor_log(order - 1, p) : 0);
  const u64 mw = prime_power(p, work);
  ZnPoly fa = hg_truncation(a, p, work, order);
  ZnPoly fap = hg_truncation(a.dwork_prime(p), p, work, order / p + 1);
  const u64 c = fs.c_padic(work).residue();
  std::vector<u64> g(order, 0);
  g[0] = g_sigma_constant(a, fs, precision).residue();
  u64 ck = 1 % mw;
  for (std::size_t k = 1; k < order; ++k) {
    u64 diff = fa.at(k);
    if (k % p == 0) {
      ck = mulmod(ck, c, mw);
      diff = submod(diff, mulmod(ck, fap.at(k / p), mw), mw);
    }
    u64 kk = k;
    int e = 0;
    while (kk % p == 0) {
      kk /= p;
      ++e;
    }
    const u64 pe = prime_power(p, e);
    if (diff % pe != 0)
      throw Error(ErrorKind::IntegralityViolated,
                  "F_a - F_a'(t^sigma) coefficient at degree " + std::to_string(k) + " not divisible by k");
    g[k] = mulmod((diff / pe) % m, *invmod(kk % m, m), m);
  }
  return g;
}

}  // namespace

PadicNumber g_sigma_constant(const HGParams& a, const FrobeniusSpec& fs, int precision) {
  PadicNumber acc = PadicNumber::zero(fs.p, precision);
  for (const auto& x : a.a) acc = acc + psi_tilde(x, fs.p, precision);
  PadicNumber log_c = iwasawa_log(fs.c_padic(precision + 1));
  return acc - log_c.divide_by_p_power(1);
}

PadicSeries g_sigma(const HGParams& a, const FrobeniusSpec& fs, int precision, std::size_t order) {
  require_odd_prime(fs.p);
  std::vector<u64> g = g_coefficients(a, fs, precision, order);
  std::vector<PadicNumber> out;
  out.reserve(order);
  for (u64 x : g) out.emplace_back(fs.p, precision, x);
  return PadicSeries(std::move(out));
}

TruncationQuotient log_quotient(const HGParams& a, const FrobeniusSpec& fs, int n) {
  require_odd_prime(fs.p);
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "level must be >= 1");
  const u64 m = prime_power(fs.p, n);
  const std::size_t order = m;
  ZnPoly num(m, g_coefficients(a, fs, n, order));
  ZnPoly den = hg_truncation(a, fs.p, n, order);
  return {fs.p, n, std::move(num), std::move(den)};
}

bool levels_agree(const TruncationQuotient& lo, const TruncationQuotient& hi) {
  if (lo.p != hi.p) throw Error(ErrorKind::InvalidArgument, "prime mismatch");
  const int k = std::min(lo.level, hi.level);
  return cross_equal(lo.numerator, lo.denominator, hi.numerator, hi.denominator, prime_power(lo.p, k));
}

PadicSeries dwork_ratio(const HGParams& a, const FrobeniusSpec& fs, int n, std::size_t order) {
  const u64 window = prime_power(fs.p, n);
  if (order > window)
    throw Error(ErrorKind::PrecisionWindowExceeded,
                "order " + std::to_string(order) + " exceeds p^n = " + std::to_string(window));
  return dwork_quotient(a, fs, n).expand(order);
}

PadicSeries log_hg(const HGParams& a, const FrobeniusSpec& fs, int n) {
  TruncationQuotient q = log_quotient(a, fs, n);
  return q.expand(q.numerator.size());
}

void check_fiber(const HGParams& a, const PRational& alpha, std::uint32_t p, bool allow_one) {
  if (!alpha.p_integral(p)) throw Error(ErrorKind::BadFiber, "alpha is not p-integral");
  const u64 r = reduce(alpha, p, 1).residue();
  if (r == 0) throw Error(ErrorKind::BadFiber, "alpha = 0 mod p");
  if (r == 1 && !allow_one) throw Error(ErrorKind::BadFiber, "alpha = 1 mod p");
  if (h_polynomial(a, p).evaluate(r) == 0) throw Error(ErrorKind::BadHasse, "h_a(alpha) = 0 mod p");
}

PadicNumber eval_log_hg(const HGParams& a, const PRational& alpha, std::uint32_t p, int n) {
  require_odd_prime(p);
  if (static_cast<int>(p) <= a.d() + 1)
    throw Error(ErrorKind::SmallPrime, "need p > d + 1");
  check_fiber(a, alpha, p);
  return eval_log_hg(a, alpha, FrobeniusSpec::fixing(alpha, p), n);
}

PadicNumber eval_log_hg(const HGParams& a, const PRational& alpha, const FrobeniusSpec& fs, int n) {
  if (static_cast<int>(fs.p) <= a.d() + 1)
    throw Error(ErrorKind::SmallPrime, "need p > d + 1");
  check_fiber(a, alpha, fs.p, /*allow_one=*/true);
  return log_quotient(a, fs, n).evaluate(reduce(alpha, fs.p, n));
}

}  // namespace hgpadic
