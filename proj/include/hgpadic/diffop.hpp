#pragma once

// Rational functions N(t)/(t^j (1-t)^k) and differential operators
// sum_k r_k * D^k in the Euler operator D = t d/dt, with coefficients on the left.

#include "hgpadic/prational.hpp"
#include "hgpadic/series.hpp"

#include <string>
#include <vector>

namespace hgpadic {

using RationalPoly = std::vector<PRational>;  // coefficient of t^i at index i

class RationalFunction {
 public:
  RationalFunction() = default;
  RationalFunction(PRational c);  // NOLINT(google-explicit-constructor)
  RationalFunction(RationalPoly numerator, int t_exponent = 0, int one_minus_t_exponent = 0);

  static RationalFunction t();
  static RationalFunction one_minus_t();

  const RationalPoly& numerator() const noexcept { return num_; }
  int t_exponent() const noexcept { return j_; }
  int one_minus_t_exponent() const noexcept { return k_; }
  bool is_zero() const noexcept { return num_.empty(); }

  /// D(r) = t r'(t).
  RationalFunction euler_derivative() const;

  /// Power series expansion at t = 0; requires no pole there.
  RationalSeries to_series(std::size_t order) const;

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  RationalFunction operator-() const;

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) = default;

  std::string to_string() const;

 private:
  void canonicalize();

  RationalPoly num_;
  int j_ = 0;
  int k_ = 0;
};

class DifferentialOperator {
 public:
  DifferentialOperator() = default;
  /// coeffs[k] multiplies D^k; trailing zero coefficients are dropped.
  explicit DifferentialOperator(std::vector<RationalFunction> coeffs);
  static DifferentialOperator multiplication(const RationalFunction& r);
  /// D^k.
  static DifferentialOperator euler_power(int k);

  const std::vector<RationalFunction>& coeffs() const noexcept { return c_; }
  int order() const noexcept { return static_cast<int>(c_.size()) - 1; }
  const RationalFunction& coefficient(int k) const { return c_.at(static_cast<std::size_t>(k)); }

  friend DifferentialOperator operator+(const DifferentialOperator& a, const DifferentialOperator& b);
  friend DifferentialOperator operator-(const DifferentialOperator& a, const DifferentialOperator& b);
  friend bool operator==(const DifferentialOperator& a, const DifferentialOperator& b) = default;

  std::string to_string() const;

 private:
  void trim();
  std::vector<RationalFunction> c_;
};

/// Composition P * Q of operators.
DifferentialOperator operator_mul(const DifferentialOperator& lhs, const DifferentialOperator& rhs);

/// P(f) = sum_k r_k D^k(f). Coefficients must have no pole at t = 0.
RationalSeries apply_operator(const DifferentialOperator& op, const RationalSeries& f);
PadicSeries apply_operator(const DifferentialOperator& op, const PadicSeries& f);

}  // namespace hgpadic
