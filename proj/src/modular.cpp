#include "hgpadic/modular.hpp"

#include "hgpadic/errors.hpp"
#include "hgpadic/modarith.hpp"

#include <cstdlib>

namespace hgpadic {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw Error(ErrorKind::PrecisionOverflow, "q-expansion coefficient overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error(ErrorKind::PrecisionOverflow, "q-expansion coefficient overflow");
  return r;
}

// Euler: prod (1 - q^n) = sum_k (-1)^k q^(k(3k-1)/2), k over all integers.
QExpansion pentagonal(std::size_t terms) {
  QExpansion f{std::vector<std::int64_t>(terms, 0)};
  if (terms > 0) f.c[0] = 1;
  for (std::int64_t k = 1;; ++k) {
    const std::size_t g1 = static_cast<std::size_t>(k * (3 * k - 1) / 2);
    const std::size_t g2 = static_cast<std::size_t>(k * (3 * k + 1) / 2);
    if (g1 >= terms) break;
    const std::int64_t s = k % 2 == 0 ? 1 : -1;
    f.c[g1] += s;
    if (g2 < terms) f.c[g2] += s;
  }
  return f;
}

// Jacobi: prod (1 - q^n)^3 = sum_{k>=0} (-1)^k (2k+1) q^(k(k+1)/2).
QExpansion jacobi_cube(std::size_t terms) {
  QExpansion f{std::vector<std::int64_t>(terms, 0)};
  for (std::int64_t k = 0;; ++k) {
    const std::size_t g = static_cast<std::size_t>(k * (k + 1) / 2);
    if (g >= terms) break;
    f.c[g] = (k % 2 == 0 ? 1 : -1) * (2 * k + 1);
  }
  return f;
}

QExpansion naive_eta(std::size_t terms) {
  QExpansion f{std::vector<std::int64_t>(terms, 0)};
  if (terms > 0) f.c[0] = 1;
  for (std::size_t n = 1; n < terms; ++n)
    for (std::size_t k = terms - 1; k >= n; --k) f.c[k] = checked_add(f.c[k], -f.c[k - n]);
  return f;
}

}  // namespace

std::int64_t QExpansion::at(std::size_t n) const {
  if (n >= c.size())
    throw Error(ErrorKind::TruncationExceeded, "coefficient q^" + std::to_string(n) + " beyond the stored prefix");
  return c[n];
}

QExpansion multiply(const QExpansion& f, const QExpansion& g, std::size_t terms) {
  QExpansion out{std::vector<std::int64_t>(terms, 0)};
  // g is usually the sparse factor
  std::vector<std::size_t> support;
  for (std::size_t j = 0; j < g.size() && j < terms; ++j)
    if (g.c[j] != 0) support.push_back(j);
  for (std::size_t i = 0; i < f.size() && i < terms; ++i) {
    if (f.c[i] == 0) continue;
    for (std::size_t j : support) {
      if (i + j >= terms) break;
      out.c[i + j] = checked_add(out.c[i + j], checked_mul(f.c[i], g.c[j]));
    }
  }
  return out;
}

QExpansion eta_power(int e, std::size_t terms, EtaMethod method) {
  if (e < 1) throw Error(ErrorKind::InvalidArgument, "eta exponent must be >= 1");
  if (terms > 100'000) throw Error(ErrorKind::BudgetExceeded, "at most 10^5 terms");
  QExpansion out{std::vector<std::int64_t>(terms, 0)};
  if (terms == 0) return out;
  out.c[0] = 1;
  int rest = e;
  if (method == EtaMethod::JacobiCube) {
    const QExpansion cube = jacobi_cube(terms);
    for (; rest >= 3; rest -= 3) out = multiply(out, cube, terms);
  }
  const QExpansion base = method == EtaMethod::Naive ? naive_eta(terms) : pentagonal(terms);
  for (; rest > 0; --rest) out = multiply(out, base, terms);
  return out;
}

int EtaProduct::prefactor() const {
  long s = 0;
  for (auto [m, e] : factors) {
    if (m < 1 || e < 1) throw Error(ErrorKind::InvalidArgument, "eta factors need m, e >= 1");
    s += static_cast<long>(m) * e;
  }
  if (s % 24 != 0)
    throw Error(ErrorKind::NonIntegralPrefactor, "sum e_j m_j = " + std::to_string(s) + " is not divisible by 24");
  return static_cast<int>(s / 24);
}

QExpansion eta_product_expansion(const EtaProduct& spec, std::size_t terms, EtaMethod method) {
  const std::size_t shift = static_cast<std::size_t>(spec.prefactor());
  QExpansion out{std::vector<std::int64_t>(terms, 0)};
  if (terms <= shift) return out;
  const std::size_t inner = terms - shift;
  QExpansion prod{std::vector<std::int64_t>(inner, 0)};
  prod.c[0] = 1;
  for (auto [m, e] : spec.factors) {
    const QExpansion f = eta_power(e, (inner + static_cast<std::size_t>(m) - 1) / static_cast<std::size_t>(m), method);
    QExpansion spread{std::vector<std::int64_t>(inner, 0)};
    for (std::size_t k = 0; k < f.size() && k * static_cast<std::size_t>(m) < inner; ++k)
      spread.c[k * static_cast<std::size_t>(m)] = f.c[k];
    prod = multiply(prod, spread, inner);
  }
  for (std::size_t k = 0; k < inner; ++k) out.c[k + shift] = prod.c[k];
  return out;
}

int kronecker(std::int64_t D, std::int64_t n) {
  if (n == 0) return (D == 1 || D == -1) ? 1 : 0;
  int result = 1;
  if (n < 0) {
    n = -n;
    if (D < 0) result = -result;
  }
  // factor out 2 from n: (D/2) = 0 if D even, else +1 for D = +-1 mod 8, -1 for D = +-3 mod 8
  int twos = 0;
  while (n % 2 == 0) {
    n /= 2;
    ++twos;
  }
  if (twos > 0) {
    if (D % 2 == 0) return 0;
    const std::int64_t r = ((D % 8) + 8) % 8;
    if ((twos % 2 == 1) && (r == 3 || r == 5)) result = -result;
  }
  // now n odd positive: Jacobi symbol (D/n)
  std::int64_t a = ((D % n) + n) % n;
  std::int64_t m = n;
  while (a != 0) {
    while (a % 2 == 0) {
      a /= 2;
      const std::int64_t r = m % 8;
      if (r == 3 || r == 5) result = -result;
    }
    std::swap(a, m);
    if (a % 4 == 3 && m % 4 == 3) result = -result;
    a %= m;
  }
  return m == 1 ? result : 0;
}

QExpansion twist(const QExpansion& f, std::int64_t D) {
  QExpansion out = f;
  for (std::size_t n = 0; n < out.size(); ++n)
    out.c[n] = n == 0 ? 0 : checked_mul(kronecker(D, static_cast<std::int64_t>(n)), out.c[n]);
  return out;
}

bool HeckeForm::bad_prime(std::uint32_t p) const {
  return level % static_cast<int>(p) == 0 || std::llabs(twist_discriminant) % p == 0;
}

HeckeForm eta_form(const std::string& base, std::size_t terms) {
  EtaProduct spec;
  int level = 0;
  if (base == "A") {
    spec.factors = {{4, 6}};
    level = 16;
  } else if (base == "B") {
    spec.factors = {{1, 2}, {2, 1}, {4, 1}, {8, 2}};
    level = 8;
  } else if (base == "C") {
    spec.factors = {{2, 3}, {6, 3}};
    level = 12;
  } else if (base == "D") {
    spec.factors = {{1, 3}, {7, 3}};
    level = 7;
  } else {
    throw Error(ErrorKind::InvalidArgument, "unknown form " + base);
  }
  return {base, base, level, 1, eta_product_expansion(spec, terms)};
}

std::vector<PRational> modular_parameters() {
  return {PRational(-1), PRational(4), PRational(1, 4), PRational(-8), PRational(-1, 8), PRational(64), PRational(1, 64)};
}

HeckeForm form_for_parameter(const PRational& a, std::size_t terms) {
  struct Row {
    PRational a;
    const char* base;
    std::int64_t D;
  };
  const Row table[] = {{PRational(-1), "B", -4},   {PRational(4), "C", 1},     {PRational(1, 4), "C", -4},
                       {PRational(-8), "A", 1},    {PRational(-1, 8), "A", 8}, {PRational(64), "D", 1},
                       {PRational(1, 64), "D", -4}};
  for (const auto& row : table) {
    if (!(row.a == a)) continue;
    HeckeForm f = eta_form(row.base, terms);
    if (row.D != 1) {
      f.expansion = twist(f.expansion, row.D);
      f.twist_discriminant = row.D;
      f.name = f.base + " (x) chi_" + std::to_string(row.D);
    }
    return f;
  }
  throw Error(ErrorKind::NotModular, "a = " + a.to_string() + " is not in the modular list");
}

PadicNumber modular_unit_root(const HeckeForm& f, std::uint32_t p, int precision) {
  require_odd_prime(p);
  if (f.bad_prime(p)) throw Error(ErrorKind::BadReduction, f.name + " is ramified at " + std::to_string(p));
  const std::int64_t ap = f.ap(p);
  const i64 pp = static_cast<i64>(p) * p;
  return hensel_quadratic(ap, pp, p, precision);
}

}  // namespace hgpadic
