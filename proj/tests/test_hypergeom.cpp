#include "doctest.h"
#include "oracles.hpp"

#include "hgpadic/diffop.hpp"
#include "hgpadic/errors.hpp"
#include "hgpadic/hypergeom.hpp"

#include <random>

using namespace hgpadic;

namespace {

bool throws_kind(auto&& fn, ErrorKind kind) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind() == kind;
  }
  return false;
}

std::vector<mpq_class> qparams(const HGParams& a) {
  std::vector<mpq_class> out;
  for (const auto& x : a.a) out.emplace_back(mpq_class(x.to_string()));
  return out;
}

std::vector<mpq_class> qdwork_prime(const std::vector<mpq_class>& a, unsigned p) {
  std::vector<mpq_class> out;
  for (const auto& x : a) out.push_back(oracle::dwork_prime(x, p));
  return out;
}

/// F_a(t) / F_a'(c t^p) over Q, reduced mod p^n.
std::vector<std::uint64_t> exact_dwork_ratio(const HGParams& a, const mpq_class& c, unsigned p, int n, std::size_t T) {
  auto qa = qparams(a);
  auto F = oracle::hg(qa, T);
  auto Fp = oracle::frobenius(oracle::hg(qdwork_prime(qa, p), T), c, p);
  auto q = oracle::mul(F, oracle::invert(Fp));
  std::vector<std::uint64_t> out;
  for (const auto& x : q) out.push_back(oracle::reduce(x, p, n));
  return out;
}

/// G_a(t) mod p^n with c = 1: constant sum psi~(a_i), then (f_k - [p|k] f'_{k/p}) / k.
std::vector<std::uint64_t> exact_g(const HGParams& a, unsigned p, int n, std::size_t T) {
  auto qa = qparams(a);
  auto F = oracle::hg(qa, T);
  auto Fp = oracle::frobenius(oracle::hg(qdwork_prime(qa, p), T), 1, p);
  const mpz_class m = oracle::ppow(p, n);
  std::vector<std::uint64_t> out(T, 0);
  mpz_class c0 = 0;
  for (const auto& x : qa) c0 += oracle::psi_at_level(x, p, n, n + 2);
  out[0] = oracle::mod(c0, m).get_ui();
  for (std::size_t k = 1; k < T; ++k) out[k] = oracle::reduce((F[k] - Fp[k]) / mpq_class(static_cast<long>(k)), p, n);
  return out;
}

std::vector<std::uint64_t> series_residues(const PadicSeries& s) {
  std::vector<std::uint64_t> out;
  for (std::size_t k = 0; k < s.order(); ++k) out.push_back(s[k].residue());
  return out;
}

const std::vector<HGParams>& grid_params() {
  static const std::vector<HGParams> g{HGParams::parse("1/2,1/2"), HGParams::parse("1/3,2/3"),
                                       HGParams::parse("1/2,1/2,1/2"), HGParams::parse("1/6,5/6,1/2")};
  return g;
}

}  // namespace

TEST_CASE("pochhammer") {
  CHECK(pochhammer(PRational(1), 5) == PRational(120));
  CHECK(pochhammer(PRational(1, 2), 3) == PRational(15, 8));
  CHECK(pochhammer(PRational(-2), 4) == PRational(0));
  CHECK(pochhammer(PRational(7, 3), 0) == PRational(1));
}

TEST_CASE("params") {
  auto a = HGParams::from_scheme({4, 4, 2}, {3, 1, 1});
  CHECK(a == HGParams::parse("1/4,3/4,1/2"));
  CHECK(a.dual() == HGParams::parse("3/4,1/4,1/2"));
  CHECK(a.d() == 2);
  CHECK(HGParams::parse("1/3,2/3").dwork_prime(5) == HGParams::parse("2/3,1/3"));
  CHECK(throws_kind([] { HGParams::parse("1/5").require_p_integral(5); }, ErrorKind::NonIntegral));
}

TEST_CASE("hg series") {
  auto f = hg_series(HGParams::parse("1"), 10);
  for (std::size_t k = 0; k < 10; ++k) CHECK(f[k] == PRational(1));
  auto g = hg_series(HGParams::parse("1/2,1/2"), 5);
  CHECK(g[1] == PRational(1, 4));
  CHECK(g[2] == PRational(9, 64));
  CHECK(hg_series(HGParams::parse("1/2,1/2,1/2"), 3)[1] == PRational(1, 8));
  for (const auto& a : grid_params()) {
    auto s = hg_series(a, 30);
    auto o = oracle::hg(qparams(a), 30);
    for (std::size_t k = 0; k < 30; ++k) CHECK(s[k].to_string() == PRational::parse(o[k].get_str()).to_string());
  }
}

TEST_CASE("hg operator") {
  CHECK(hg_operator(HGParams::parse("1")) ==
        DifferentialOperator({RationalFunction({PRational(0), PRational(-1)}), RationalFunction({PRational(1), PRational(-1)})}));
  // D^2 - t(D + 1/2)^2
  CHECK(hg_operator(HGParams::parse("1/2,1/2")) ==
        DifferentialOperator({RationalFunction({PRational(0), PRational(-1, 4)}), RationalFunction({PRational(0), PRational(-1)}),
                              RationalFunction({PRational(1), PRational(-1)})}));
}

TEST_CASE("ODE annihilation to order 200") {
  for (const char* s : {"1/3,2/3", "1/2,1/2,1/2", "1/6,5/6,1/2", "1/4,3/4,1/3,2/3"}) {
    auto a = HGParams::parse(s);
    auto r = apply_operator(hg_operator(a), hg_series(a, 201));
    CHECK(r.truncated(200).is_zero());
  }
}

TEST_CASE("h polynomial") {
  auto h = h_polynomial(HGParams::parse("1/2,1/2"), 5);
  CHECK(h.modulus == 5);
  CHECK(h.c == std::vector<u64>{1, 4, 1});
  auto g = h_polynomial(HGParams::parse("1"), 7);
  CHECK(g.c == std::vector<u64>(7, 1));
  // orbit of length two: (1/3,2/3) and (2/3,1/3) give the same truncation, so h is a square
  auto q = h_polynomial(HGParams::parse("1/3,2/3"), 5);
  auto o = oracle::hg({mpq_class(1, 3), mpq_class(2, 3)}, 5);
  auto sq = oracle::mul(o, o);
  std::vector<u64> expect;
  for (std::size_t k = 0; k < 5; ++k) expect.push_back(oracle::reduce(o[k], 5, 1));
  auto t = multiply(ZnPoly(5, expect), ZnPoly(5, expect));
  t.trim();
  CHECK(q.c == t.c);
  CHECK(q.at(0) == 1);
  (void)sq;
}

TEST_CASE("dwork ratio examples") {
  auto r = dwork_ratio(HGParams::parse("1"), FrobeniusSpec::identity(7), 2, 30);
  for (std::size_t k = 0; k < 30; ++k) CHECK(r[k].residue() == (k < 7 ? 1u : 0u));
  auto h = dwork_ratio(HGParams::parse("1/2,1/2"), FrobeniusSpec::identity(5), 1, 5);
  CHECK(series_residues(h) == std::vector<u64>{1, 4, 1, 0, 0});
  CHECK(throws_kind([] { dwork_ratio(HGParams::parse("1/2,1/2"), FrobeniusSpec::identity(5), 1, 6); },
                    ErrorKind::PrecisionWindowExceeded));
  CHECK(throws_kind([] { FrobeniusSpec::custom(PRational(2), 5); }, ErrorKind::BadFrobeniusConstant));
}

TEST_CASE("dwork ratio equals the exact quotient to degree 40") {
  for (const auto& a : grid_params())
    for (unsigned p : {7u, 13u})
      for (long c : {1L, 1L + static_cast<long>(p)}) {
        auto fs = FrobeniusSpec::custom(PRational(c), p);
        auto got = series_residues(dwork_ratio(a, fs, 2, 40));
        CHECK(got == exact_dwork_ratio(a, mpq_class(c), p, 2, 40));
      }
}

TEST_CASE("log quotient equals the exact quotient to degree 40") {
  for (const auto& a : grid_params())
    for (unsigned p : {7u, 13u}) {
      const int n = 2;
      auto got = series_residues(log_hg(a, FrobeniusSpec::identity(p), n)).at(0);
      auto lq = log_quotient(a, FrobeniusSpec::identity(p), n).expand(40);
      // G / F_a with exact-rational G (c = 1, so log c = 0)
      auto G = exact_g(a, p, n, 40);
      auto F = oracle::hg(qparams(a), 40);
      const mpz_class m = oracle::ppow(p, n);
      std::vector<mpz_class> Fr;
      for (const auto& x : F) Fr.emplace_back(oracle::reduce(x, p, n));
      // q = G / F by the power-series recursion mod p^n
      std::vector<mpz_class> q(40);
      for (std::size_t k = 0; k < 40; ++k) {
        mpz_class s = G[k];
        for (std::size_t j = 1; j <= k; ++j) s -= Fr[j] * q[k - j];
        q[k] = oracle::mod(s, m);
      }
      for (std::size_t k = 0; k < 40; ++k) CHECK(lq[k].residue() == q[k].get_ui());
      CHECK(got == q[0].get_ui());
    }
}

TEST_CASE("g sigma") {
  auto g = g_sigma(HGParams::parse("1"), FrobeniusSpec::identity(5), 3, 30);
  CHECK(g[0].residue() == 0);
  for (std::size_t k = 1; k < 30; ++k) {
    const u64 expect = k % 5 == 0 ? 0 : oracle::reduce(mpq_class(1, static_cast<long>(k)), 5, 3);
    CHECK(g[k].residue() == expect);
    CHECK(g[k].precision() == 3);
  }
  auto h = g_sigma(HGParams::parse("1/2,1/2,1/2"), FrobeniusSpec::identity(7), 3, 5);
  CHECK(h[0] == psi_tilde(PRational(1, 2), 7, 3) * PadicNumber::from_int(3, 7, 3));
  // constant with c = 1 + p picks up -log(c)/p
  auto fs = FrobeniusSpec::custom(PRational(8), 7);
  const u64 logc = oracle::iwasawa_log(8, 7, 4);
  const PadicNumber logc_over_p = PadicNumber(7, 4, logc).divide_by_p_power(1);
  CHECK(g_sigma_constant(HGParams::parse("1/2,1/2"), fs, 3) ==
        psi_tilde(PRational(1, 2), 7, 3) * PadicNumber::from_int(2, 7, 3) - logc_over_p);
  auto k = g_sigma(HGParams::parse("1/3,2/3"), FrobeniusSpec::identity(7), 3, 50);
  for (std::size_t i = 0; i < 50; ++i) CHECK(k[i].precision() == 3);
}

TEST_CASE("log hg examples") {
  // (t + t^2/2 + t^3/3 + t^4/4) / (1 + t + t^2 + t^3 + t^4) mod 5
  auto s = log_hg(HGParams::parse("1"), FrobeniusSpec::identity(5), 1);
  CHECK(series_residues(s) == std::vector<u64>{0, 1, 2, 4, 2});
  auto q = log_quotient(HGParams::parse("1"), FrobeniusSpec::identity(5), 1);
  CHECK(q.numerator.c == std::vector<u64>{0, 1, 3, 2, 4});
}

TEST_CASE("level consistency") {
  auto fs7 = FrobeniusSpec::identity(7);
  auto a = HGParams::parse("1/2,1/2,1/2");
  CHECK(levels_agree(dwork_quotient(a, fs7, 2), dwork_quotient(a, fs7, 3)));
  auto fs5 = FrobeniusSpec::identity(5);
  CHECK(levels_agree(log_quotient(a, fs5, 2), log_quotient(a, fs5, 3)));
  // a wrong quotient is caught
  auto lo = dwork_quotient(a, fs7, 2);
  lo.numerator.c[3] = (lo.numerator.c[3] + 7) % lo.numerator.modulus;
  CHECK_FALSE(levels_agree(lo, dwork_quotient(a, fs7, 3)));
}

TEST_CASE("derivative congruence") {
  for (const auto& a : grid_params())
    for (unsigned p : {5u, 7u})
      for (int n = 1; n <= 2; ++n) {
        const std::size_t T = 40;
        const mpz_class m = oracle::ppow(p, n);
        auto F = oracle::hg(qparams(a), T + 2);
        auto Finv = oracle::invert(F);
        const std::size_t pn = oracle::ppow(p, n).get_ui();
        ZnPoly trunc = hg_truncation(a, p, n, pn);
        ZnPoly tinv = inverse_series(trunc, T);
        for (int j = 1; j <= 2; ++j) {
          // exact: F^(j) / F
          oracle::QSeries dF(T, 0);
          for (std::size_t k = 0; k < T; ++k) {
            mpq_class c = F[k + static_cast<std::size_t>(j)];
            for (int i = 1; i <= j; ++i) c *= static_cast<long>(k) + i;
            dF[k] = c;
          }
          auto lhs = oracle::mul(dF, Finv);
          // truncation: [F]^(j) / [F] mod p^n
          std::vector<u64> d;
          for (std::size_t k = 0; k + static_cast<std::size_t>(j) < trunc.size(); ++k) {
            mpz_class c = trunc.at(k + static_cast<std::size_t>(j));
            for (int i = 1; i <= j; ++i) c *= static_cast<long>(k) + i;
            d.push_back(oracle::mod(c, m).get_ui());
          }
          auto rhs = multiply(ZnPoly(m.get_ui(), d), tinv, T);
          for (std::size_t k = 0; k < T; ++k) CHECK(oracle::reduce(lhs[k], p, n) == rhs.at(k));
        }
      }
}

TEST_CASE("eval log hg") {
  CHECK(throws_kind([] { eval_log_hg(HGParams::parse("1/2,1/2,1/2"), PRational(6), 5, 2); }, ErrorKind::BadFiber));
  CHECK(throws_kind([] { eval_log_hg(HGParams::parse("1/2,1/2,1/2"), PRational(5), 5, 2); }, ErrorKind::BadFiber));
  CHECK(throws_kind([] { eval_log_hg(HGParams::parse("1/2,1/2,1/2"), PRational(2), 3, 2); }, ErrorKind::SmallPrime));
  // h(t) = (1 + t)^2 mod 5 vanishes at t = -1 = 4
  CHECK(throws_kind([] { eval_log_hg(HGParams::parse("1/2,1/2,1/2"), PRational(-1), 5, 2); }, ErrorKind::BadHasse));
  CHECK(throws_kind([] { eval_log_hg(HGParams::parse("1/2,1/2,1/2"), PRational(4), 5, 2); }, ErrorKind::BadHasse));
  // two-level stability
  for (auto [s, alpha, p] : std::vector<std::tuple<const char*, long, unsigned>>{
           {"1/2,1/2,1/2", -8, 5}, {"1/2,1/2,1/2", 4, 13}, {"1/3,2/3", 3, 7}, {"1/6,5/6,1/2", 2, 13}, {"1", 3, 5}}) {
    auto a = HGParams::parse(s);
    auto v2 = eval_log_hg(a, PRational(alpha), p, 2);
    auto v3 = eval_log_hg(a, PRational(alpha), p, 3);
    CHECK(v3.truncate(2) == v2);
  }
}

TEST_CASE("eval log hg against a direct construction") {
  // [G]_{<p^n}(alpha) / [F]_{<p^n}(alpha) with G built from exact rationals, sigma(t) = alpha^(1-p) t^p
  for (auto [s, alpha, p] : std::vector<std::tuple<const char*, long, unsigned>>{
           {"1/2,1/2,1/2", -8, 5}, {"1/2,1/2", 3, 7}, {"1/2,1/2", -2, 7}, {"1", 3, 5}}) {
    const int n = 2;
    auto a = HGParams::parse(s);
    auto qa = qparams(a);
    const std::size_t T = oracle::ppow(p, n).get_ui();
    const mpz_class m = oracle::ppow(p, n);
    mpq_class c = 1;
    for (unsigned i = 0; i + 1 < p; ++i) c /= alpha;
    auto F = oracle::hg(qa, T);
    auto Fp = oracle::frobenius(oracle::hg(qdwork_prime(qa, p), T), c, p);
    mpz_class c0 = 0;
    for (const auto& x : qa) c0 += oracle::psi_at_level(x, p, n, n + 2);
    // log c = (1 - p) log alpha, and log c / p is taken at one extra digit
    const mpz_class logc = (1 - static_cast<long>(p)) * mpz_class(oracle::iwasawa_log(alpha, p, n + 1));
    c0 -= oracle::mod(logc, oracle::ppow(p, n + 1)) / p;
    mpz_class g = c0, f = 0, x = 1;
    for (std::size_t k = 0; k < T; ++k) {
      if (k > 0) g += oracle::reduce((F[k] - Fp[k]) / mpq_class(static_cast<long>(k)), p, n) * x;
      f += oracle::reduce(F[k], p, n) * x;
      x = oracle::mod(x * alpha, m);
    }
    const u64 expect = oracle::mod(g * oracle::inv(f, m), m).get_ui();
    CHECK(eval_log_hg(a, PRational(alpha), p, n).residue() == expect);
  }
}
