#include "hgpadic/finite_field.hpp"

#include "hgpadic/errors.hpp"
#include "hgpadic/modarith.hpp"

#include <string>

namespace hgpadic {

namespace {

// Multiply the element (as digit vector) by x modulo the monic polynomial
// x^m + c_{m-1} x^{m-1} + ... + c_0.
std::uint32_t times_x(std::uint32_t a, std::uint32_t p, int m, const std::vector<std::uint32_t>& c,
                      std::uint32_t q) {
  std::uint32_t top = a / (q / p);
  std::uint32_t shifted = (a % (q / p)) * p;
  if (top == 0) return shifted;
  // subtract top * (c_0 + c_1 x + ... + c_{m-1} x^{m-1})
  std::uint32_t out = 0, place = 1, rest = shifted;
  for (int i = 0; i < m; ++i) {
    std::uint32_t digit = rest % p;
    rest /= p;
    digit = static_cast<std::uint32_t>((digit + static_cast<std::uint64_t>(p - top) * c[i]) % p);
    out += digit * place;
    place *= p;
  }
  return out;
}

}  // namespace

FiniteField::FiniteField(std::uint32_t p, int m) : p_(p), m_(m) {
  if (!is_prime(p)) throw Error(ErrorKind::InvalidArgument, std::to_string(p) + " is not prime");
  if (m < 1) throw Error(ErrorKind::InvalidArgument, "extension degree must be >= 1");
  std::uint64_t q = 1;
  for (int i = 0; i < m; ++i) {
    q *= p;
    if (q > kMaxOrder) throw Error(ErrorKind::BudgetExceeded, "field order exceeds 10^6");
  }
  q_ = static_cast<std::uint32_t>(q);
  exp_.resize(q_ - 1);
  log_.assign(q_, 0);

  // Search monic polynomials of degree m for one where x has order q - 1.
  std::vector<std::uint32_t> c(static_cast<std::size_t>(m), 0);
  const std::uint32_t x = m == 1 ? 0 : p_;  // the element "x" (only used for m > 1)
  for (std::uint64_t code = 0; code < q; ++code) {
    std::uint64_t rest = code;
    for (int i = 0; i < m; ++i) {
      c[i] = static_cast<std::uint32_t>(rest % p);
      rest /= p;
    }
    if (c[0] == 0) continue;
    std::uint32_t g = 1;
    std::uint32_t k = 0;
    bool primitive = true;
    // For m = 1 the polynomial x + c_0 identifies x with -c_0.
    const std::uint32_t root = m == 1 ? (p - c[0]) % p : x;
    if (m == 1 && root == 0) continue;
    do {
      exp_[k] = g;
      if (m == 1)
        g = static_cast<std::uint32_t>(static_cast<std::uint64_t>(g) * root % p);
      else
        g = times_x(g, p, m, c, q_);
      ++k;
      if (g == 1 && k < q_ - 1) {
        primitive = false;
        break;
      }
    } while (k < q_ - 1);
    if (primitive && g == 1) {
      for (std::uint32_t i = 0; i < q_ - 1; ++i) log_[exp_[i]] = i;
      return;
    }
  }
  throw Error(ErrorKind::InvalidArgument, "no primitive polynomial found");
}

std::uint32_t FiniteField::add(std::uint32_t a, std::uint32_t b) const {
  if (m_ == 1) return (a + b) % p_;
  std::uint32_t out = 0, place = 1;
  for (int i = 0; i < m_; ++i) {
    out += ((a % p_ + b % p_) % p_) * place;
    a /= p_;
    b /= p_;
    place *= p_;
  }
  return out;
}

std::uint32_t FiniteField::sub(std::uint32_t a, std::uint32_t b) const {
  if (m_ == 1) return (a + p_ - b) % p_;
  std::uint32_t out = 0, place = 1;
  for (int i = 0; i < m_; ++i) {
    out += ((a % p_ + p_ - b % p_) % p_) * place;
    a /= p_;
    b /= p_;
    place *= p_;
  }
  return out;
}

std::uint32_t FiniteField::mul(std::uint32_t a, std::uint32_t b) const {
  if (a == 0 || b == 0) return 0;
  return exp_[(static_cast<std::uint64_t>(log_[a]) + log_[b]) % (q_ - 1)];
}

std::uint32_t FiniteField::div(std::uint32_t a, std::uint32_t b) const {
  if (b == 0) throw Error(ErrorKind::NotInvertible, "division by zero in F_q");
  if (a == 0) return 0;
  return exp_[(static_cast<std::uint64_t>(log_[a]) + (q_ - 1) - log_[b]) % (q_ - 1)];
}

std::uint32_t FiniteField::pow(std::uint32_t a, std::uint64_t e) const {
  if (e == 0) return 1;
  if (a == 0) return 0;
  return exp_[static_cast<std::uint64_t>(log_[a]) * (e % (q_ - 1)) % (q_ - 1)];
}

std::uint32_t FiniteField::from_int(std::int64_t v) const { return static_cast<std::uint32_t>(reduce_signed(v, p_)); }

int FiniteField::legendre(std::uint32_t a) const {
  if (a == 0) return 0;
  return log_[a] % 2 == 0 ? 1 : -1;
}

}  // namespace hgpadic
