#pragma once

// q-expansions of eta products, quadratic twists, and the weight 3 CM forms
// attached to the modular K3 fibers.

#include "hgpadic/padic.hpp"
#include "hgpadic/prational.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace hgpadic {

/// Integer q-series; c[n] is the coefficient of q^n for 0 <= n < size.
struct QExpansion {
  std::vector<std::int64_t> c;

  std::size_t size() const { return c.size(); }
  /// Coefficient of q^n; throws TruncationExceeded past the stored prefix.
  std::int64_t at(std::size_t n) const;
  friend bool operator==(const QExpansion&, const QExpansion&) = default;
};

/// Product of two q-series truncated to `terms` coefficients (overflow-checked).
QExpansion multiply(const QExpansion& f, const QExpansion& g, std::size_t terms);

enum class EtaMethod {
  Pentagonal,   // e copies of Euler's pentagonal series
  JacobiCube,   // Jacobi's cube series for each block of three, pentagonal for the rest
  Naive         // expand prod (1 - q^n) factor by factor
};

/// prod_{n>=1} (1 - q^n)^e to `terms` coefficients.
QExpansion eta_power(int e, std::size_t terms, EtaMethod method = EtaMethod::JacobiCube);

struct EtaProduct {
  std::vector<std::pair<int, int>> factors;  // (m_j, e_j) for eta(m_j z)^e_j

  /// (sum e_j m_j) / 24; throws NonIntegralPrefactor when not an integer.
  int prefactor() const;
};

/// q^prefactor * prod_j eta_power(e_j)(q^m_j) to `terms` coefficients.
QExpansion eta_product_expansion(const EtaProduct& spec, std::size_t terms,
                                 EtaMethod method = EtaMethod::JacobiCube);

/// Kronecker symbol (D / n).
int kronecker(std::int64_t D, std::int64_t n);

/// a_n -> (D/n) a_n.
QExpansion twist(const QExpansion& f, std::int64_t D);

struct HeckeForm {
  std::string name;     // "A", "B (x) chi_-4", ...
  std::string base;     // "A".."D"
  int level = 0;        // level of the untwisted form
  std::int64_t twist_discriminant = 1;  // 1 when untwisted
  QExpansion expansion;

  std::int64_t ap(std::uint32_t p) const { return expansion.at(p); }
  /// p divides the level or the twisting discriminant.
  bool bad_prime(std::uint32_t p) const;
};

/// "A", "B", "C" or "D" to `terms` coefficients.
HeckeForm eta_form(const std::string& base, std::size_t terms);

/// The form attached to a in {-1, 4, 1/4, -8, -1/8, 64, 1/64}; NotModular otherwise.
HeckeForm form_for_parameter(const PRational& a, std::size_t terms = 128);

/// The modular parameter list, in table order.
std::vector<PRational> modular_parameters();

/// Unit root of T^2 - a_p T + p^2 to precision N.
PadicNumber modular_unit_root(const HeckeForm& f, std::uint32_t p, int precision);

}  // namespace hgpadic
