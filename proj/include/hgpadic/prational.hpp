#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace hgpadic {

/// Exact rational with arbitrary-precision numerator and denominator,
/// always reduced with a positive denominator.
class PRational {
 public:
  PRational() = default;
  PRational(long v) : q_(v) {}  // NOLINT(google-explicit-constructor)
  PRational(long num, long den);
  explicit PRational(mpq_class q);

  /// Parses "n", "-n" or "n/d".
  static PRational parse(std::string_view text);

  const mpq_class& value() const noexcept { return q_; }
  mpz_class numerator() const { return q_.get_num(); }
  mpz_class denominator() const { return q_.get_den(); }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  bool p_integral(std::uint64_t p) const;

  /// Numerator and denominator as machine integers; throws when they do not fit.
  std::int64_t num_i64() const;
  std::int64_t den_i64() const;

  std::string to_string() const;

  friend PRational operator+(const PRational& a, const PRational& b) { return PRational(mpq_class(a.q_ + b.q_)); }
  friend PRational operator-(const PRational& a, const PRational& b) { return PRational(mpq_class(a.q_ - b.q_)); }
  friend PRational operator*(const PRational& a, const PRational& b) { return PRational(mpq_class(a.q_ * b.q_)); }
  friend PRational operator/(const PRational& a, const PRational& b);
  PRational operator-() const { return PRational(mpq_class(-q_)); }

  friend bool operator==(const PRational& a, const PRational& b) { return a.q_ == b.q_; }
  friend bool operator<(const PRational& a, const PRational& b) { return a.q_ < b.q_; }

  friend std::ostream& operator<<(std::ostream& os, const PRational& r) { return os << r.to_string(); }

 private:
  mpq_class q_{0};
};

}  // namespace hgpadic
