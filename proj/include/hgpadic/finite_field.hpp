#pragma once

// F_q for q = p^m <= 10^6. Elements are integers in [0, q) read as base-p
// digit vectors of polynomials modulo a primitive polynomial; multiplication
// goes through discrete log tables.

#include <cstdint>
#include <vector>

namespace hgpadic {

class FiniteField {
 public:
  static constexpr std::uint32_t kMaxOrder = 1'000'000;

  /// Throws BudgetExceeded when p^m > kMaxOrder and SmallPrime/InvalidArgument on bad input.
  FiniteField(std::uint32_t p, int m);

  std::uint32_t prime() const { return p_; }
  int degree() const { return m_; }
  std::uint32_t order() const { return q_; }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t neg(std::uint32_t a) const { return sub(0, a); }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
  /// b must be nonzero.
  std::uint32_t div(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;
  /// Image of an integer under Z -> F_p -> F_q.
  std::uint32_t from_int(std::int64_t v) const;

  /// Discrete log base the fixed generator; a must be nonzero.
  std::uint32_t log(std::uint32_t a) const { return log_[a]; }
  std::uint32_t exp(std::uint64_t k) const { return exp_[k % (q_ - 1)]; }
  /// Quadratic character: 0, 1 or -1.
  int legendre(std::uint32_t a) const;

 private:
  std::uint32_t p_;
  int m_;
  std::uint32_t q_;
  std::vector<std::uint32_t> exp_;
  std::vector<std::uint32_t> log_;
};

}  // namespace hgpadic
