#include "hgpadic/unitroot.hpp"

#include "hgpadic/errors.hpp"

namespace hgpadic {

std::vector<RationalFunction> q_coeffs(const HGParams& a) {
  const int d = a.d();
  // s[k] = elementary symmetric polynomial e_k(a)
  std::vector<PRational> s{PRational(1)};
  for (const auto& x : a.a) {
    std::vector<PRational> next(s.size() + 1, PRational(0));
    for (std::size_t k = 0; k < s.size(); ++k) {
      next[k] = next[k] + s[k];
      next[k + 1] = next[k + 1] + s[k] * x;
    }
    s = std::move(next);
  }
  const RationalFunction t_over = RationalFunction({PRational(0), PRational(1)}, 0, 1);  // t/(1-t)
  std::vector<RationalFunction> q(static_cast<std::size_t>(d) + 1);
  for (int m = 0; m <= d; ++m) q[static_cast<std::size_t>(d - m)] = -(RationalFunction(s[m + 1]) * t_over);
  return q;
}

GaussManinModel gauss_manin_model(const HGParams& a) {
  GaussManinModel model{a, q_coeffs(a), {}};
  for (int k = 0; k <= a.d(); ++k)
    model.basis_labels.push_back(k == 0 ? "w" : k == 1 ? "Dw" : "D^" + std::to_string(k) + "w");
  return model;
}

DifferentialOperator GaussManinModel::connection_operator() const {
  std::vector<RationalFunction> c = q;
  c.emplace_back(PRational(1));
  return DifferentialOperator(std::move(c));
}

DifferentialOperator GaussManinModel::adjoint_operator() const {
  const int top = d() + 1;
  DifferentialOperator out = DifferentialOperator::euler_power(top);
  for (int k = 0; k <= d(); ++k) {
    DifferentialOperator term =
        operator_mul(DifferentialOperator::euler_power(k), DifferentialOperator::multiplication(q[k]));
    if ((top - k) % 2 == 0)
      out = out + term;
    else
      out = out - term;
  }
  return out;
}

UnitRootVector unit_root_vector(const HGParams& a, std::size_t order) {
  if (order < 2) throw Error(ErrorKind::InvalidArgument, "order must be >= 2");
  const int d = a.d();
  const auto q = q_coeffs(a);
  std::vector<RationalSeries> q_series;
  for (const auto& r : q) q_series.push_back(r.to_series(order));
  std::vector<RationalSeries> y(static_cast<std::size_t>(d) + 1, RationalSeries::zeros(order, PRational(0)));
  y[d] = RationalFunction::one_minus_t().to_series(order) * hg_series(a.dual(), order);
  for (int i = d - 1; i >= 0; --i) y[i] = q_series[i + 1] * y[d] - y[i + 1].euler_derivative();
  return {std::move(y), Normalization::Raw};
}

UnitRootVector normalize(const UnitRootVector& v, const HGParams& a) {
  if (v.normalization == Normalization::DividedByDualSeries) return v;
  RationalSeries inv = hg_series(a.dual(), v.y.front().order()).invert();
  UnitRootVector out{{}, Normalization::DividedByDualSeries};
  for (const auto& yi : v.y) out.y.push_back(yi * inv);
  return out;
}

KernelCheck check_kernel(const GaussManinModel& model, const UnitRootVector& v) {
  const int d = model.d();
  if (static_cast<int>(v.y.size()) != d + 1) throw Error(ErrorKind::InvalidArgument, "coordinate count mismatch");
  const std::size_t order = v.y.front().order();
  if (order < 3) throw Error(ErrorKind::InvalidArgument, "order must be >= 3");
  const auto& z = v.y;
  auto first_nonzero = [](const RationalSeries& s) -> long {
    for (std::size_t k = 0; k < s.order(); ++k)
      if (!s[k].is_zero()) return static_cast<long>(k);
    return -1;
  };
  for (int i = 0; i <= d; ++i) {
    RationalSeries expr = i < d ? z[i] + z[i + 1].euler_derivative() - model.q[i + 1].to_series(order) * z[d]
                                : z[0].euler_derivative() - model.q[0].to_series(order) * z[d];
    if (long deg = first_nonzero(expr); deg >= 0) return {false, i, deg};
  }
  return {};
}

IntegralityReport integrality_check(const HGParams& a, std::uint32_t p, int n, std::size_t order) {
  require_odd_prime(p);
  const u64 window = prime_power(p, n);
  if (order > window) throw Error(ErrorKind::PrecisionWindowExceeded, "order must be <= p^n");
  a.dual().require_p_integral(p);
  IntegralityReport report{p, order, {}, false};

  UnitRootVector exact = normalize(unit_root_vector(a, order), a);
  for (std::size_t i = 0; i < exact.y.size(); ++i)
    for (std::size_t k = 0; k < order; ++k)
      if (!exact.y[i][k].p_integral(p)) report.non_integral.emplace_back(static_cast<int>(i), static_cast<long>(k));
  if (!report.non_integral.empty()) return report;

  // Same recursion started from the truncation [F_dual]_{<p^n} instead of F_dual,
  // then divided by that truncation mod p^n.
  const int d = a.d();
  const auto q = q_coeffs(a);
  const RationalSeries trunc =
      RationalSeries::from_polynomial(hg_series(a.dual(), window).coeffs(), window, PRational(0));
  std::vector<RationalSeries> y(static_cast<std::size_t>(d) + 1, RationalSeries::zeros(window, PRational(0)));
  y[d] = RationalFunction::one_minus_t().to_series(window) * trunc;
  for (int i = d - 1; i >= 0; --i) y[i] = q[i + 1].to_series(window) * y[d] - y[i + 1].euler_derivative();
  const PadicSeries trunc_inv = reduce_series(trunc, p, n).invert();
  report.truncation_route_agrees = true;
  for (int i = 0; i <= d; ++i) {
    PadicSeries quotient = reduce_series(y[i], p, n) * trunc_inv;
    PadicSeries expected = reduce_series(exact.y[i], p, n);
    for (std::size_t k = 0; k < order; ++k)
      if (!(quotient[k] == expected[k])) report.truncation_route_agrees = false;
  }
  return report;
}

PadicNumber frobenius_unit_eigenvalue(const HGParams& a, i64 a_hat, std::uint32_t p, int m, int precision) {
  require_odd_prime(p);
  const u64 r = reduce_signed(a_hat, p);
  if (r == 0 || r == 1) throw Error(ErrorKind::BadFiber, "a_hat must not be 0 or 1 mod p");
  const DworkOrbit orbit = a.orbit(p);
  if (m < 1 || m % orbit.cycle_length != 0)
    throw Error(ErrorKind::OrbitMismatch, "m = " + std::to_string(m) + " is not a multiple of the orbit length " +
                                              std::to_string(orbit.cycle_length));
  if (h_polynomial(a, p).evaluate(r) == 0) throw Error(ErrorKind::BadHasse, "h_a vanishes at a_hat");
  const PadicNumber omega = teichmuller(a_hat, p, precision);
  const FrobeniusSpec sigma = FrobeniusSpec::identity(p);
  PadicNumber product = PadicNumber::one(p, precision);
  // omega^(p^j) = omega, so every factor F_{a^(j)}(t^{p^j})/F_{a^(j+1)}(t^{p^(j+1)}) is read at omega.
  for (int j = 0; j < m; ++j) {
    const HGParams member(orbit.members[static_cast<std::size_t>(j % orbit.cycle_length)]);
    product = product * dwork_quotient(member, sigma, precision).evaluate(omega);
  }
  return product;
}

}  // namespace hgpadic
