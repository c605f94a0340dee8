#pragma once

// Hypergeometric series F_a(t), Dwork's p-adic function F_a(t)/F_a'(t^sigma),
// and the logarithmic-type function G_a(t)/F_a(t), all computed through their
// truncation congruences modulo p^n.

#include "hgpadic/diffop.hpp"
#include "hgpadic/padic.hpp"
#include "hgpadic/series.hpp"
#include "hgpadic/zn_poly.hpp"

#include <string>
#include <vector>

namespace hgpadic {

/// Parameter tuple a = (a_0, ..., a_d).
struct HGParams {
  std::vector<PRational> a;

  HGParams() = default;
  explicit HGParams(std::vector<PRational> values);

  /// a_k = 1 - i_k / n_k for a point (i_0..i_d) of the scheme's character group.
  static HGParams from_scheme(const std::vector<int>& n, const std::vector<int>& i);
  /// Parses "1/2,1/2,1/2".
  static HGParams parse(const std::string& text);

  int d() const { return static_cast<int>(a.size()) - 1; }
  /// (1 - a_0, ..., 1 - a_d).
  HGParams dual() const;
  HGParams dwork_prime(std::uint32_t p) const;
  DworkOrbit orbit(std::uint32_t p) const;
  void require_p_integral(std::uint32_t p) const;

  std::string to_string() const;
  friend bool operator==(const HGParams&, const HGParams&) = default;
};

/// sigma(t) = c t^p with c = 1 mod p.
struct FrobeniusSpec {
  std::uint32_t p = 0;
  PRational c{1};
  std::string tag;

  /// sigma(t) = t^p.
  static FrobeniusSpec identity(std::uint32_t p);
  /// sigma(t) = alpha^(1-p) t^p, which fixes t = alpha.
  static FrobeniusSpec fixing(const PRational& alpha, std::uint32_t p);
  static FrobeniusSpec custom(const PRational& c, std::uint32_t p);

  PadicNumber c_padic(int precision) const { return reduce(c, p, precision); }
};

/// (alpha)_n = alpha (alpha + 1) ... (alpha + n - 1).
PRational pochhammer(const PRational& alpha, int n);

/// F_a(t) over the rationals to `order` terms.
RationalSeries hg_series(const HGParams& a, std::size_t order);

/// P = D^(d+1) - t (D + a_0) ... (D + a_d).
DifferentialOperator hg_operator(const HGParams& a);

/// [F_a(t)]_{<order} with coefficients reduced mod p^precision.
ZnPoly hg_truncation(const HGParams& a, std::uint32_t p, int precision, std::size_t order);

/// h_a(t): the product of [F_b(t)]_{<p} mod p over the Dwork orbit b of a.
ZnPoly h_polynomial(const HGParams& a, std::uint32_t p);

/// A rational function numerator/denominator over Z/p^level whose expansion
/// agrees with the target p-adic function modulo p^level in every degree.
struct TruncationQuotient {
  std::uint32_t p = 0;
  int level = 0;
  ZnPoly numerator;
  ZnPoly denominator;

  PadicSeries expand(std::size_t order) const;
  /// Value at a point where the denominator is a unit (throws BadHasse otherwise).
  PadicNumber evaluate(const PadicNumber& x) const;
};

/// [F_a(t)]_{<p^n} / [F_a'(t^sigma)]_{<p^n} mod p^n.
TruncationQuotient dwork_quotient(const HGParams& a, const FrobeniusSpec& fs, int n);

/// [G_a(t)]_{<p^n} / [F_a(t)]_{<p^n} mod p^n.
TruncationQuotient log_quotient(const HGParams& a, const FrobeniusSpec& fs, int n);

/// True when the level-(k) and higher-level quotients define the same series mod p^k,
/// with k = min(lo.level, hi.level); checked by cross-multiplication in all degrees.
bool levels_agree(const TruncationQuotient& lo, const TruncationQuotient& hi);

/// Dwork's function F_a(t)/F_a'(c t^p) mod p^n to `order` terms (order <= p^n).
PadicSeries dwork_ratio(const HGParams& a, const FrobeniusSpec& fs, int n, std::size_t order);

/// sum psi~_p(a_i) - log(c)/p.
PadicNumber g_sigma_constant(const HGParams& a, const FrobeniusSpec& fs, int precision);

/// G_a(t) = const + integral_0^t (F_a(s) - F_a'(s^sigma)) ds/s to `order` terms.
PadicSeries g_sigma(const HGParams& a, const FrobeniusSpec& fs, int precision, std::size_t order);

/// The logarithmic-type function G_a/F_a mod p^n in degrees < p^n.
PadicSeries log_hg(const HGParams& a, const FrobeniusSpec& fs, int n);

/// Throws BadFiber when alpha = 0, 1 mod p and BadHasse when h vanishes at alpha.
void check_fiber(const HGParams& a, const PRational& alpha, std::uint32_t p, bool allow_one = false);

/// G_a/F_a at t = alpha with sigma(t) = alpha^(1-p) t^p, mod p^n.
PadicNumber eval_log_hg(const HGParams& a, const PRational& alpha, std::uint32_t p, int n);

/// Same value with an explicit Frobenius; only the Hasse condition is checked.
PadicNumber eval_log_hg(const HGParams& a, const PRational& alpha, const FrobeniusSpec& fs, int n);

}  // namespace hgpadic
