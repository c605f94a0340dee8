#pragma once

// Brute-force point counts over F_q: hypergeometric scheme fibers, Gauss-type
// curves, and the elliptic curves E_a, E'_a.

#include "hgpadic/finite_field.hpp"
#include "hgpadic/padic.hpp"
#include "hgpadic/prational.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace hgpadic {

struct FiniteFieldSpec {
  std::uint32_t p = 0;
  int m = 1;

  std::uint64_t q() const;
};

/// Budget on the number of coordinate tuples visited by count_hg_fiber.
inline constexpr std::uint64_t kDefaultCountBudget = 400'000'000;

/// #{x in F_q^(d+1) : (1 - x_0^n_0) ... (1 - x_d^n_d) = alpha}.
std::uint64_t count_hg_fiber(const std::vector<int>& n, const PRational& alpha, const FiniteFieldSpec& field,
                             std::uint64_t budget = kDefaultCountBudget);

/// Affine count of y^n = x^(n-i0) (1-x)^(n-i1) (1-(1-t)x)^i1 over F_q.
std::uint64_t count_gauss_curve(int n, int i0, int i1, const PRational& t, const FiniteFieldSpec& field);

/// k y^2 = c3 x^3 + c2 x^2 + c1 x + c0 over Z_(p).
struct CurveModel {
  std::string id;
  PRational k{1};
  std::array<PRational, 4> c{PRational(0), PRational(0), PRational(0), PRational(0)};  // c0..c3
};

/// E_a : y^2 = x(x^2 + 2x - a/(1-a)).
CurveModel curve_e(const PRational& a);
/// E'_a : (1-a) y^2 = x(x^2 + 2x - a/(1-a)).
CurveModel curve_e_twist(const PRational& a);
/// y^2 = x(1-x)(1-(1-t)x), the n = 2 Gauss curve with i0 = i1 = 1.
CurveModel curve_gauss2(const PRational& t);

struct CurveCountReport {
  std::string curve;
  std::uint32_t p = 0;
  std::uint64_t q = 0;
  std::uint64_t affine = 0;
  std::uint64_t completed = 0;  // affine plus the single point at infinity
  std::int64_t a_q = 0;
  bool ordinary = false;
};

/// Throws BadReduction when the model is singular or non-integral mod p.
CurveCountReport elliptic_trace(const CurveModel& curve, const FiniteFieldSpec& field);
CurveCountReport elliptic_trace(const CurveModel& curve, std::uint32_t p);

enum class MotiveWeight { Curve, Weight3 };

/// Unit root of T^2 - a_p T + p (curves) or T^2 - a_p T + p^2 (weight 3).
PadicNumber unit_root_from_counts(const CurveCountReport& report, int precision,
                                  MotiveWeight weight = MotiveWeight::Curve);

/// Legendre symbol of an integer-valued rational mod an odd prime (0 when p divides it).
int legendre_symbol(const PRational& x, std::uint32_t p);

}  // namespace hgpadic
