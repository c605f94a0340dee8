#include "hgpadic/arith_geom.hpp"

#include "hgpadic/errors.hpp"
#include "hgpadic/modarith.hpp"

#include <numeric>

namespace hgpadic {

std::uint64_t FiniteFieldSpec::q() const {
  auto r = checked_pow(p, m);
  if (!r || *r > FiniteField::kMaxOrder) throw Error(ErrorKind::BudgetExceeded, "q = p^m exceeds 10^6");
  return *r;
}

namespace {

std::uint32_t element(const FiniteField& f, const PRational& x) {
  const std::uint32_t p = f.prime();
  if (!x.p_integral(p)) throw Error(ErrorKind::NonIntegral, x.to_string() + " is not " + std::to_string(p) + "-integral");
  return static_cast<std::uint32_t>(reduce(x, p, 1).residue());
}

void require_coprime(std::uint32_t p, long n) {
  if (n % static_cast<long>(p) == 0)
    throw Error(ErrorKind::InvalidArgument, "characteristic " + std::to_string(p) + " divides " + std::to_string(n));
}

// value -> number of x in F_q with 1 - x^n = value
std::vector<std::uint64_t> one_minus_power_histogram(const FiniteField& f, int n) {
  std::vector<std::uint64_t> h(f.order(), 0);
  for (std::uint32_t x = 0; x < f.order(); ++x) ++h[f.sub(1, f.pow(x, static_cast<std::uint64_t>(n)))];
  return h;
}

}  // namespace

std::uint64_t count_hg_fiber(const std::vector<int>& n, const PRational& alpha, const FiniteFieldSpec& spec,
                             std::uint64_t budget) {
  if (n.empty()) throw Error(ErrorKind::InvalidArgument, "need at least one exponent");
  for (int k : n) {
    if (k < 1) throw Error(ErrorKind::InvalidArgument, "exponents must be positive");
    require_coprime(spec.p, k);
  }
  const FiniteField f(spec.p, spec.m);
  const std::uint32_t q = f.order();
  const std::uint32_t target = element(f, alpha);
  // value tables and the final lookup each touch every element once
  std::uint64_t work = static_cast<std::uint64_t>(q) * (n.size() + 1);
  if (work > budget) throw Error(ErrorKind::BudgetExceeded, "fiber count exceeds the enumeration budget");

  std::vector<std::vector<std::uint64_t>> hist;
  for (int k : n) hist.push_back(one_minus_power_histogram(f, k));

  // Distribution of products over all coordinates but the last, on the supports.
  std::vector<std::uint64_t> dist = hist[0];
  for (std::size_t k = 1; k + 1 < n.size(); ++k) {
    std::vector<std::uint32_t> su, sv;
    for (std::uint32_t u = 0; u < q; ++u)
      if (dist[u]) su.push_back(u);
    for (std::uint32_t v = 0; v < q; ++v)
      if (hist[k][v]) sv.push_back(v);
    work += static_cast<std::uint64_t>(su.size()) * sv.size();
    if (work > budget) throw Error(ErrorKind::BudgetExceeded, "fiber count exceeds the enumeration budget");
    std::vector<std::uint64_t> next(q, 0);
    for (auto u : su)
      for (auto v : sv) next[f.mul(u, v)] += dist[u] * hist[k][v];
    dist = std::move(next);
  }
  if (n.size() == 1) {
    dist.assign(q, 0);
    dist[1] = 1;  // empty product
  }
  const auto& last = n.size() == 1 ? hist[0] : hist.back();

  // Division lookup on the last coordinate.
  std::uint64_t count = 0;
  if (target == 0) {
    std::uint64_t dist_total = 0, dist_zero = dist[0];
    for (auto c : dist) dist_total += c;
    std::uint64_t last_total = 0;
    for (auto c : last) last_total += c;
    count = dist_zero * last_total + (dist_total - dist_zero) * last[0];
  } else {
    for (std::uint32_t u = 1; u < q; ++u)
      if (dist[u]) count += dist[u] * last[f.div(target, u)];
  }
  return count;
}

std::uint64_t count_gauss_curve(int n, int i0, int i1, const PRational& t, const FiniteFieldSpec& spec) {
  if (n < 2 || i0 <= 0 || i0 >= n || i1 <= 0 || i1 >= n)
    throw Error(ErrorKind::InvalidArgument, "need 0 < i0, i1 < n");
  require_coprime(spec.p, n);
  const FiniteField f(spec.p, spec.m);
  const std::uint32_t tv = element(f, t);
  if (tv == 0 || tv == 1) throw Error(ErrorKind::BadFiber, "t must not be 0 or 1 in F_q");
  const std::uint32_t q = f.order();
  const std::uint32_t g = std::gcd(static_cast<std::uint32_t>(n), q - 1);
  const std::uint32_t s = f.sub(1, tv);
  std::uint64_t count = 0;
  for (std::uint32_t x = 0; x < q; ++x) {
    std::uint32_t r = f.mul(f.pow(x, static_cast<std::uint64_t>(n - i0)),
                            f.mul(f.pow(f.sub(1, x), static_cast<std::uint64_t>(n - i1)),
                                  f.pow(f.sub(1, f.mul(s, x)), static_cast<std::uint64_t>(i1))));
    if (r == 0)
      count += 1;
    else if (f.log(r) % g == 0)
      count += g;
  }
  return count;
}

CurveModel curve_e(const PRational& a) {
  if (a == PRational(1)) throw Error(ErrorKind::BadReduction, "a = 1 is degenerate");
  const PRational b = a / (PRational(1) - a);
  return {"E_" + a.to_string(), PRational(1), {PRational(0), -b, PRational(2), PRational(1)}};
}

CurveModel curve_e_twist(const PRational& a) {
  CurveModel m = curve_e(a);
  m.id = "E'_" + a.to_string();
  m.k = PRational(1) - a;
  return m;
}

CurveModel curve_gauss2(const PRational& t) {
  // x(1-x)(1-sx) = x - (1+s)x^2 + s x^3 with s = 1 - t
  const PRational s = PRational(1) - t;
  return {"gauss2_" + t.to_string(), PRational(1), {PRational(0), PRational(1), -(PRational(1) + s), s}};
}

CurveCountReport elliptic_trace(const CurveModel& curve, const FiniteFieldSpec& spec) {
  const std::uint32_t p = spec.p;
  require_odd_prime(p);
  for (const auto& x : curve.c)
    if (!x.p_integral(p)) throw Error(ErrorKind::BadReduction, curve.id + " has a non-integral coefficient at p");
  if (!curve.k.p_integral(p)) throw Error(ErrorKind::BadReduction, curve.id + " has a non-integral twist at p");
  const auto& [c0, c1, c2, c3] = curve.c;
  const PRational disc = PRational(18) * c3 * c2 * c1 * c0 - PRational(4) * c2 * c2 * c2 * c0 + c2 * c2 * c1 * c1 -
                         PRational(4) * c3 * c1 * c1 * c1 - PRational(27) * c3 * c3 * c0 * c0;
  if (reduce(c3, p, 1).residue() == 0 || reduce(curve.k, p, 1).residue() == 0 || reduce(disc, p, 1).residue() == 0)
    throw Error(ErrorKind::BadReduction, curve.id + " has bad reduction at " + std::to_string(p));

  const FiniteField f(p, spec.m);
  const std::uint32_t q = f.order();
  const std::uint32_t k = element(f, curve.k), e0 = element(f, c0), e1 = element(f, c1), e2 = element(f, c2),
                      e3 = element(f, c3);
  std::uint64_t affine = 0;
  for (std::uint32_t x = 0; x < q; ++x) {
    std::uint32_t rhs = f.add(f.mul(f.add(f.mul(f.add(f.mul(e3, x), e2), x), e1), x), e0);
    // k y^2 = rhs has 1 + chi(k * rhs) solutions
    affine += static_cast<std::uint64_t>(1 + f.legendre(f.mul(k, rhs)));
  }
  CurveCountReport r;
  r.curve = curve.id;
  r.p = p;
  r.q = q;
  r.affine = affine;
  r.completed = affine + 1;
  r.a_q = static_cast<std::int64_t>(q) + 1 - static_cast<std::int64_t>(r.completed);
  r.ordinary = r.a_q % static_cast<std::int64_t>(p) != 0;
  if (static_cast<double>(r.a_q) * static_cast<double>(r.a_q) > 4.0 * static_cast<double>(q))
    throw Error(ErrorKind::InvalidArgument, "Weil bound violated for " + curve.id);
  return r;
}

CurveCountReport elliptic_trace(const CurveModel& curve, std::uint32_t p) { return elliptic_trace(curve, {p, 1}); }

PadicNumber unit_root_from_counts(const CurveCountReport& report, int precision, MotiveWeight weight) {
  if (report.q != report.p) throw Error(ErrorKind::InvalidArgument, "unit root needs the count over F_p");
  if (!report.ordinary) throw Error(ErrorKind::NotOrdinary, report.curve + " is supersingular at " + std::to_string(report.p));
  const i64 p = report.p;
  return hensel_quadratic(report.a_q, weight == MotiveWeight::Curve ? p : p * p, report.p, precision);
}

int legendre_symbol(const PRational& x, std::uint32_t p) {
  require_odd_prime(p);
  const u64 r = reduce(x, p, 1).residue();
  if (r == 0) return 0;
  return powmod(r, (p - 1) / 2, p) == 1 ? 1 : -1;
}

}  // namespace hgpadic
