#pragma once

// Truncated power series c_0 + c_1 t + ... + c_{T-1} t^{T-1} + O(t^T) over
// exact rationals or over p-adic coefficients with per-coefficient precision.

#include "hgpadic/errors.hpp"
#include "hgpadic/padic.hpp"
#include "hgpadic/prational.hpp"

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

namespace hgpadic {

template <class C>
struct CoeffOps;

template <>
struct CoeffOps<PRational> {
  static constexpr const char* domain = "rational";
  static PRational zero_like(const PRational&) { return PRational(0); }
  static PRational one_like(const PRational&) { return PRational(1); }
  static PRational from_int(const PRational&, long v) { return PRational(v); }
  static bool is_zero(const PRational& c) { return c.is_zero(); }
  static bool is_unit(const PRational& c) { return !c.is_zero(); }
  static bool skippable(const PRational& c) { return c.is_zero(); }
  static PRational inverse(const PRational& c) { return PRational(1) / c; }
  static PRational div_int(const PRational& c, long k) { return c / PRational(k); }
};

template <>
struct CoeffOps<PadicNumber> {
  static constexpr const char* domain = "padic";
  static PadicNumber zero_like(const PadicNumber& c) { return PadicNumber::zero(c.prime(), c.precision()); }
  static PadicNumber one_like(const PadicNumber& c) { return PadicNumber::one(c.prime(), c.precision()); }
  static PadicNumber from_int(const PadicNumber& c, long v) { return PadicNumber::from_int(v, c.prime(), c.precision()); }
  static bool is_zero(const PadicNumber& c) { return c.is_zero(); }
  static bool is_unit(const PadicNumber& c) { return c.is_unit(); }
  // a zero known to low precision still caps the precision of a product
  static bool skippable(const PadicNumber&) { return false; }
  static PadicNumber inverse(const PadicNumber& c) { return c.inverse(); }
  // Division by k loses ord_p(k) digits of this coefficient only.
  static PadicNumber div_int(const PadicNumber& c, long k) {
    const std::uint32_t p = c.prime();
    int e = 0;
    long unit = k;
    while (unit % static_cast<long>(p) == 0) {
      unit /= static_cast<long>(p);
      ++e;
    }
    PadicNumber shifted = c.divide_by_p_power(e);
    return shifted * PadicNumber::from_int(unit, p, shifted.precision()).inverse();
  }
};

template <class C>
class TruncSeries {
  using Ops = CoeffOps<C>;

 public:
  /// The truncation order is coeffs.size(); coeffs must be non-empty.
  explicit TruncSeries(std::vector<C> coeffs) : c_(std::move(coeffs)) {
    if (c_.empty()) throw Error(ErrorKind::InvalidArgument, "series needs truncation order >= 1");
  }

  static TruncSeries zeros(std::size_t order, const C& like) {
    if (order == 0) throw Error(ErrorKind::InvalidArgument, "series needs truncation order >= 1");
    return TruncSeries(std::vector<C>(order, Ops::zero_like(like)));
  }

  /// A polynomial padded with zeros (or cut) to the given order.
  static TruncSeries from_polynomial(std::vector<C> poly, std::size_t order, const C& like) {
    poly.resize(order, Ops::zero_like(like));
    return TruncSeries(std::move(poly));
  }

  std::size_t order() const noexcept { return c_.size(); }
  const C& operator[](std::size_t k) const { return c_.at(k); }
  const std::vector<C>& coeffs() const noexcept { return c_; }
  const char* domain() const noexcept { return Ops::domain; }

  bool is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const C& x) { return Ops::is_zero(x); });
  }

  TruncSeries truncated(std::size_t order) const {
    if (order > c_.size()) throw Error(ErrorKind::TruncationExceeded, "cannot extend a truncated series");
    return TruncSeries(std::vector<C>(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(order)));
  }

  /// [f]_{<k}: the polynomial sum_{i<k} c_i t^i.
  std::vector<C> truncate_below(std::size_t k) const {
    if (k > c_.size())
      throw Error(ErrorKind::TruncationExceeded,
                  "[f]_{<" + std::to_string(k) + "} needs order >= " + std::to_string(k));
    return std::vector<C>(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(k));
  }

  friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
    std::size_t n = std::min(a.order(), b.order());
    std::vector<C> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back(a.c_[i] + b.c_[i]);
    return TruncSeries(std::move(out));
  }

  friend TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) {
    std::size_t n = std::min(a.order(), b.order());
    std::vector<C> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back(a.c_[i] - b.c_[i]);
    return TruncSeries(std::move(out));
  }

  friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
    std::size_t n = std::min(a.order(), b.order());
    std::vector<C> out(n, Ops::zero_like(a.c_[0]));
    for (std::size_t i = 0; i < n; ++i) {
      if (Ops::skippable(a.c_[i])) continue;
      for (std::size_t j = 0; i + j < n; ++j) {
        if (Ops::skippable(b.c_[j])) continue;
        out[i + j] = out[i + j] + a.c_[i] * b.c_[j];
      }
    }
    return TruncSeries(std::move(out));
  }

  TruncSeries scale(const C& s) const {
    std::vector<C> out;
    out.reserve(c_.size());
    for (const auto& x : c_) out.push_back(x * s);
    return TruncSeries(std::move(out));
  }

  /// Multiplicative inverse; the constant term must be a unit.
  TruncSeries invert() const {
    if (!Ops::is_unit(c_[0])) throw Error(ErrorKind::NotInvertible, "constant term is not a unit");
    const std::size_t n = c_.size();
    const C inv0 = Ops::inverse(c_[0]);
    std::vector<C> g(n, Ops::zero_like(c_[0]));
    g[0] = inv0;
    for (std::size_t k = 1; k < n; ++k) {
      C acc = Ops::zero_like(c_[0]);
      for (std::size_t i = 1; i <= k; ++i) {
        if (Ops::skippable(c_[i])) continue;
        acc = acc + c_[i] * g[k - i];
      }
      g[k] = -(acc * inv0);
    }
    return TruncSeries(std::move(g));
  }

  /// f(c t^p): coefficient of t^{pk} becomes c^k c_k; order is preserved.
  TruncSeries frobenius_substitute(const C& c, std::uint32_t p) const {
    std::vector<C> out(c_.size(), Ops::zero_like(c_[0]));
    C ck = Ops::one_like(c_[0]);
    for (std::size_t k = 0; k * p < c_.size(); ++k) {
      out[k * p] = c_[k] * ck;
      ck = ck * c;
    }
    return TruncSeries(std::move(out));
  }

  /// D = t d/dt: coefficient k becomes k c_k.
  TruncSeries euler_derivative() const {
    std::vector<C> out;
    out.reserve(c_.size());
    for (std::size_t k = 0; k < c_.size(); ++k) out.push_back(c_[k] * Ops::from_int(c_[k], static_cast<long>(k)));
    return TruncSeries(std::move(out));
  }

  /// Ordinary derivative d/dt; the order drops by one.
  TruncSeries derivative() const {
    if (c_.size() < 2) throw Error(ErrorKind::TruncationExceeded, "derivative of an order-1 series");
    std::vector<C> out;
    out.reserve(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k) out.push_back(c_[k] * Ops::from_int(c_[k], static_cast<long>(k)));
    return TruncSeries(std::move(out));
  }

  /// integral_0^t f(s) ds/s: coefficient k becomes c_k / k.
  TruncSeries dlog_integral() const {
    if (!Ops::is_zero(c_[0])) throw Error(ErrorKind::NonzeroConstantTerm, "dlog integral needs c_0 = 0");
    std::vector<C> out;
    out.reserve(c_.size());
    out.push_back(c_[0]);
    for (std::size_t k = 1; k < c_.size(); ++k) out.push_back(Ops::div_int(c_[k], static_cast<long>(k)));
    return TruncSeries(std::move(out));
  }

  /// Multiplication by t^k (the order is kept, top coefficients drop).
  TruncSeries shift_up(std::size_t k) const {
    std::vector<C> out(c_.size(), Ops::zero_like(c_[0]));
    for (std::size_t i = 0; i + k < c_.size(); ++i) out[i + k] = c_[i];
    return TruncSeries(std::move(out));
  }

  friend bool operator==(const TruncSeries& a, const TruncSeries& b) { return a.c_ == b.c_; }

 private:
  std::vector<C> c_;
};

using RationalSeries = TruncSeries<PRational>;
using PadicSeries = TruncSeries<PadicNumber>;

/// Frobenius substitution with the p-adic check that c = 1 mod p.
PadicSeries frobenius_substitute(const PadicSeries& f, const PadicNumber& c);

/// Reduces an exact-rational series to Z/p^precision coefficientwise.
PadicSeries reduce_series(const RationalSeries& f, std::uint32_t p, int precision);

/// True when every coefficient is p-integral.
bool is_p_integral(const RationalSeries& f, std::uint32_t p);

/// Index of the first coefficient with negative p-adic valuation, or -1.
long first_non_integral(const RationalSeries& f, std::uint32_t p);

}  // namespace hgpadic
