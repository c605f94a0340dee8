#include "hgpadic/diffop.hpp"

#include "hgpadic/errors.hpp"

#include <algorithm>
#include <sstream>

namespace hgpadic {

namespace {

void trim_poly(RationalPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

RationalPoly poly_mul(const RationalPoly& a, const RationalPoly& b) {
  if (a.empty() || b.empty()) return {};
  RationalPoly out(a.size() + b.size() - 1, PRational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = out[i + j] + a[i] * b[j];
  }
  trim_poly(out);
  return out;
}

RationalPoly poly_add(const RationalPoly& a, const RationalPoly& b) {
  RationalPoly out(std::max(a.size(), b.size()), PRational(0));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = out[i] + a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = out[i] + b[i];
  trim_poly(out);
  return out;
}

RationalPoly poly_pow_one_minus_t(int e) {
  RationalPoly r{PRational(1)};
  for (int i = 0; i < e; ++i) r = poly_mul(r, {PRational(1), PRational(-1)});
  return r;
}

RationalPoly shift_t(const RationalPoly& p, int e) {
  if (p.empty()) return {};
  RationalPoly out(static_cast<std::size_t>(e), PRational(0));
  out.insert(out.end(), p.begin(), p.end());
  return out;
}

PRational evaluate_at_one(const RationalPoly& p) {
  PRational s(0);
  for (const auto& x : p) s = s + x;
  return s;
}

// Exact division by (1 - t); caller guarantees p(1) = 0.
RationalPoly divide_one_minus_t(const RationalPoly& p) {
  // p = (1 - t) q  =>  q_i = sum_{j<=i} p_j
  RationalPoly q(p.size() - 1, PRational(0));
  PRational run(0);
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    run = run + p[i];
    q[i] = run;
  }
  trim_poly(q);
  return q;
}

}  // namespace

RationalFunction::RationalFunction(PRational c) {
  if (!c.is_zero()) num_.push_back(std::move(c));
}

RationalFunction::RationalFunction(RationalPoly numerator, int t_exponent, int one_minus_t_exponent)
    : num_(std::move(numerator)), j_(t_exponent), k_(one_minus_t_exponent) {
  if (j_ < 0 || k_ < 0) throw Error(ErrorKind::InvalidArgument, "denominator exponents must be >= 0");
  canonicalize();
}

RationalFunction RationalFunction::t() { return RationalFunction({PRational(0), PRational(1)}); }
RationalFunction RationalFunction::one_minus_t() { return RationalFunction({PRational(1), PRational(-1)}); }

void RationalFunction::canonicalize() {
  trim_poly(num_);
  if (num_.empty()) {
    j_ = k_ = 0;
    return;
  }
  while (j_ > 0 && num_.front().is_zero()) {
    num_.erase(num_.begin());
    --j_;
  }
  while (k_ > 0 && evaluate_at_one(num_).is_zero()) {
    num_ = divide_one_minus_t(num_);
    --k_;
  }
}

RationalFunction RationalFunction::euler_derivative() const {
  if (num_.empty()) return {};
  // D(N t^-j (1-t)^-k) = [(tN' - jN)(1-t) + k t N] / (t^j (1-t)^(k+1))
  RationalPoly tn_prime(num_.size(), PRational(0));
  for (std::size_t i = 0; i < num_.size(); ++i) tn_prime[i] = num_[i] * PRational(static_cast<long>(i));
  RationalPoly jn;
  for (const auto& x : num_) jn.push_back(x * PRational(j_));
  RationalPoly first = poly_add(tn_prime, poly_mul(jn, {PRational(-1)}));
  first = poly_mul(first, {PRational(1), PRational(-1)});
  RationalPoly second = shift_t(poly_mul(num_, {PRational(k_)}), 1);
  return RationalFunction(poly_add(first, second), j_, k_ + 1);
}

RationalSeries RationalFunction::to_series(std::size_t order) const {
  if (j_ > 0) throw Error(ErrorKind::NonUnitDenominator, "pole at t = 0: " + to_string());
  RationalSeries n = RationalSeries::from_polynomial(num_.empty() ? RationalPoly{PRational(0)} : num_, order,
                                                     PRational(0));
  if (k_ == 0) return n;
  // (1-t)^-k = sum binom(i+k-1, k-1) t^i
  std::vector<PRational> geo(order, PRational(0));
  mpz_class b;
  for (std::size_t i = 0; i < order; ++i) {
    mpz_bin_uiui(b.get_mpz_t(), i + static_cast<unsigned long>(k_) - 1, static_cast<unsigned long>(k_) - 1);
    geo[i] = PRational(mpq_class(b));
  }
  return n * RationalSeries(std::move(geo));
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  int j = std::max(a.j_, b.j_), k = std::max(a.k_, b.k_);
  RationalPoly na = shift_t(poly_mul(a.num_, poly_pow_one_minus_t(k - a.k_)), j - a.j_);
  RationalPoly nb = shift_t(poly_mul(b.num_, poly_pow_one_minus_t(k - b.k_)), j - b.j_);
  return RationalFunction(poly_add(na, nb), j, k);
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  for (auto& x : r.num_) x = -x;
  return r;
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(poly_mul(a.num_, b.num_), a.j_ + b.j_, a.k_ + b.k_);
}

std::string RationalFunction::to_string() const {
  if (num_.empty()) return "0";
  std::ostringstream os;
  os << "(";
  bool first = true;
  for (std::size_t i = 0; i < num_.size(); ++i) {
    if (num_[i].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << num_[i];
    if (i > 0) os << "*t^" << i;
  }
  os << ")";
  if (j_ > 0 || k_ > 0) os << "/(t^" << j_ << "*(1-t)^" << k_ << ")";
  return os.str();
}

// ---------------------------------------------------------------- operators

DifferentialOperator::DifferentialOperator(std::vector<RationalFunction> coeffs) : c_(std::move(coeffs)) { trim(); }

void DifferentialOperator::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

DifferentialOperator DifferentialOperator::multiplication(const RationalFunction& r) {
  return DifferentialOperator({r});
}

DifferentialOperator DifferentialOperator::euler_power(int k) {
  std::vector<RationalFunction> c(static_cast<std::size_t>(k) + 1);
  c.back() = RationalFunction(PRational(1));
  return DifferentialOperator(std::move(c));
}

DifferentialOperator operator+(const DifferentialOperator& a, const DifferentialOperator& b) {
  std::vector<RationalFunction> c(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] = c[i] + a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] = c[i] + b.c_[i];
  return DifferentialOperator(std::move(c));
}

DifferentialOperator operator-(const DifferentialOperator& a, const DifferentialOperator& b) {
  std::vector<RationalFunction> c(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] = c[i] + a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] = c[i] - b.c_[i];
  return DifferentialOperator(std::move(c));
}

std::string DifferentialOperator::to_string() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (c_[k].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << c_[k].to_string() << "*D^" << k;
  }
  return os.str();
}

DifferentialOperator operator_mul(const DifferentialOperator& lhs, const DifferentialOperator& rhs) {
  if (lhs.coeffs().empty() || rhs.coeffs().empty()) return {};
  const std::size_t n = lhs.coeffs().size() + rhs.coeffs().size() - 1;
  std::vector<RationalFunction> out(n);
  for (std::size_t j = 0; j < rhs.coeffs().size(); ++j) {
    const RationalFunction& s = rhs.coeffs()[j];
    if (s.is_zero()) continue;
    // D^l(s) for l = 0..max order of lhs
    std::vector<RationalFunction> ds{s};
    for (std::size_t l = 1; l < lhs.coeffs().size(); ++l) ds.push_back(ds.back().euler_derivative());
    for (std::size_t i = 0; i < lhs.coeffs().size(); ++i) {
      const RationalFunction& r = lhs.coeffs()[i];
      if (r.is_zero()) continue;
      // D^i * s = sum_l binom(i, l) D^l(s) D^(i-l)
      mpz_class b;
      for (std::size_t l = 0; l <= i; ++l) {
        mpz_bin_uiui(b.get_mpz_t(), i, l);
        out[i - l + j] = out[i - l + j] + r * ds[l] * RationalFunction(PRational(mpq_class(b)));
      }
    }
  }
  return DifferentialOperator(std::move(out));
}

RationalSeries apply_operator(const DifferentialOperator& op, const RationalSeries& f) {
  const std::size_t order = f.order();
  RationalSeries acc = RationalSeries::zeros(order, PRational(0));
  RationalSeries dk = f;
  for (std::size_t k = 0; k < op.coeffs().size(); ++k) {
    if (k > 0) dk = dk.euler_derivative();
    const auto& r = op.coeffs()[k];
    if (r.is_zero()) continue;
    acc = acc + r.to_series(order) * dk;
  }
  return acc;
}

PadicSeries apply_operator(const DifferentialOperator& op, const PadicSeries& f) {
  const std::size_t order = f.order();
  const std::uint32_t p = f[0].prime();
  int precision = f[0].precision();
  for (const auto& c : f.coeffs()) precision = std::max(precision, c.precision());
  PadicSeries acc = PadicSeries::zeros(order, PadicNumber::zero(p, precision));
  PadicSeries dk = f;
  for (std::size_t k = 0; k < op.coeffs().size(); ++k) {
    if (k > 0) dk = dk.euler_derivative();
    const auto& r = op.coeffs()[k];
    if (r.is_zero()) continue;
    acc = acc + reduce_series(r.to_series(order), p, precision) * dk;
  }
  return acc;
}

}  // namespace hgpadic
