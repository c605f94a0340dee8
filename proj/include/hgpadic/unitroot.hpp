#pragma once

// The unit root vector y_0 w + y_1 Dw + ... + y_d D^d w in the eigen-piece
// spanned by D^k w_{i_0...i_d}, and Frobenius unit eigenvalues at Teichmuller
// points. The form w itself is only a label here.

#include "hgpadic/diffop.hpp"
#include "hgpadic/hypergeom.hpp"

#include <string>
#include <vector>

namespace hgpadic {

struct GaussManinModel {
  HGParams a;
  /// q_0..q_d with (1-t)(D^(d+1) + q_d D^d + ... + q_0) = P_{HG,a}.
  std::vector<RationalFunction> q;
  std::vector<std::string> basis_labels;  // "w", "Dw", ..., "D^dw"

  int d() const { return a.d(); }
  /// D^(d+1) + q_d D^d + ... + q_0.
  DifferentialOperator connection_operator() const;
  /// D^(d+1) - D^d*q_d + ... + (-1)^d D*q_1 + (-1)^(d+1) q_0, whose solutions are the y_d.
  DifferentialOperator adjoint_operator() const;
};

/// q_{d-m} = -s_{m+1} t/(1-t) where (x+a_0)...(x+a_d) = x^(d+1) + s_1 x^d + ... + s_{d+1}.
std::vector<RationalFunction> q_coeffs(const HGParams& a);

GaussManinModel gauss_manin_model(const HGParams& a);

enum class Normalization { Raw, DividedByDualSeries };

struct UnitRootVector {
  std::vector<RationalSeries> y;  // coordinates on w, Dw, ..., D^d w
  Normalization normalization = Normalization::Raw;
};

/// y_d = (1-t) F_{dual a}(t) and y_i = q_{i+1} y_d - D(y_{i+1}).
UnitRootVector unit_root_vector(const HGParams& a, std::size_t order);

/// Divides every coordinate by F_{dual a}; the top coordinate becomes 1 - t.
UnitRootVector normalize(const UnitRootVector& v, const HGParams& a);

struct KernelCheck {
  bool ok = true;
  int coordinate = -1;  // first failing coordinate expression
  long degree = -1;     // lowest nonzero degree in it
};

/// Verifies z_i + D(z_{i+1}) - q_{i+1} z_d = 0 (i < d) and D(z_0) - q_0 z_d = 0.
KernelCheck check_kernel(const GaussManinModel& model, const UnitRootVector& v);

struct IntegralityReport {
  std::uint32_t p = 0;
  std::size_t order = 0;
  /// (coordinate, degree) of every coefficient of y_i / F_{dual a} with negative valuation.
  std::vector<std::pair<int, long>> non_integral;
  /// Whether the same quotient rebuilt from [F_{dual a}]_{<p^n} mod p^n matches.
  bool truncation_route_agrees = false;

  bool ok() const { return non_integral.empty() && truncation_route_agrees; }
};

IntegralityReport integrality_check(const HGParams& a, std::uint32_t p, int n, std::size_t order);

/// Eigenvalue of the p^m-th Frobenius on the unit-root line at t = teichmuller(a_hat):
/// the product over the Dwork orbit of F_{a^(j)}(t)/F_{a^(j+1)}(t^p) at that point.
PadicNumber frobenius_unit_eigenvalue(const HGParams& a, i64 a_hat, std::uint32_t p, int m, int precision);

}  // namespace hgpadic
