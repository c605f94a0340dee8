#include "doctest.h"
#include "oracles.hpp"

#include "hgpadic/arith_geom.hpp"
#include "hgpadic/errors.hpp"
#include "hgpadic/modular.hpp"

#include <numeric>

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

bool naive_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// q^s prod eta(m z)^e by repeated single-factor expansion.
std::vector<long> naive_eta_product(const std::vector<std::pair<int, int>>& factors, std::size_t T) {
  long weight = 0;
  for (auto [m, e] : factors) weight += static_cast<long>(m) * e;
  const std::size_t shift = static_cast<std::size_t>(weight / 24);
  std::vector<long> f(T, 0);
  f[shift] = 1;
  for (auto [m, e] : factors) {
    auto g = oracle::eta_power(e, T);
    std::vector<long> h(T, 0);
    for (std::size_t i = 0; i < T; ++i)
      for (std::size_t j = 0; i + j * static_cast<std::size_t>(m) < T; ++j)
        h[i + j * static_cast<std::size_t>(m)] += f[i] * g[j];
    f = h;
  }
  return f;
}

int gmp_kronecker(long D, long n) { return mpz_kronecker_si(mpz_class(D).get_mpz_t(), n); }

}  // namespace

TEST_CASE("eta powers") {
  CHECK(eta_power(1, 8).c == std::vector<std::int64_t>{1, -1, -1, 0, 0, 1, 0, 1});
  CHECK(eta_power(3, 7).c == std::vector<std::int64_t>{1, -3, 0, 5, 0, 0, -7});
  const std::vector<std::int64_t> six{1, -6, 9, 10, -30, 0, 11};
  for (auto m : {EtaMethod::Pentagonal, EtaMethod::JacobiCube, EtaMethod::Naive}) CHECK(eta_power(6, 7, m).c == six);
  for (int e : {1, 2, 3, 4, 5, 6, 7, 9})
    for (auto m : {EtaMethod::Pentagonal, EtaMethod::JacobiCube, EtaMethod::Naive}) {
      auto ref = oracle::eta_power(e, 300);
      auto got = eta_power(e, 300, m);
      for (std::size_t k = 0; k < 300; ++k) CHECK(got.c[k] == ref[k]);
    }
  CHECK(throws_kind([] { eta_power(1, 100001); }, ErrorKind::BudgetExceeded));
  CHECK(throws_kind([] { eta_power(1, 10).at(10); }, ErrorKind::TruncationExceeded));
}

TEST_CASE("eta products") {
  CHECK(EtaProduct{{{4, 6}}}.prefactor() == 1);
  CHECK(EtaProduct{{{1, 2}, {2, 1}, {4, 1}, {8, 2}}}.prefactor() == 1);
  CHECK(EtaProduct{{{1, 3}, {7, 3}}}.prefactor() == 1);
  CHECK(throws_kind([] { EtaProduct{{{1, 1}}}.prefactor(); }, ErrorKind::NonIntegralPrefactor));
  for (const auto& f : std::vector<std::vector<std::pair<int, int>>>{
           {{4, 6}}, {{1, 2}, {2, 1}, {4, 1}, {8, 2}}, {{2, 3}, {6, 3}}, {{1, 3}, {7, 3}}}) {
    auto got = eta_product_expansion(EtaProduct{f}, 200);
    auto ref = naive_eta_product(f, 200);
    for (std::size_t k = 0; k < 200; ++k) CHECK(got.c[k] == ref[k]);
  }
  auto A = eta_form("A", 30);
  CHECK(A.ap(5) == -6);
  CHECK(A.expansion.at(9) == 9);
  CHECK(A.ap(13) == 10);
  CHECK(A.level == 16);
  CHECK(eta_form("B", 10).level == 8);
  CHECK(eta_form("C", 10).level == 12);
  CHECK(eta_form("D", 10).level == 7);
  for (const char* s : {"A", "B", "C", "D"}) CHECK(eta_form(s, 5).expansion.at(1) == 1);
  CHECK(throws_kind([] { eta_form("E", 10); }, ErrorKind::InvalidArgument));
}

TEST_CASE("kronecker and twists") {
  for (long n = -30; n <= 60; ++n) {
    CHECK(kronecker(-4, n) == oracle::chi_m4(n));
    CHECK(kronecker(8, n) == oracle::chi_8(n));
    for (long D : {-4L, 8L, -8L, 12L, -3L, -7L, 5L, 28L})
      if (n != 0) CHECK(kronecker(D, n) == gmp_kronecker(D, n));
  }
  auto A = eta_form("A", 100).expansion;
  auto t = twist(A, -4);
  for (std::size_t n = 0; n < 100; n += 2) CHECK(t.c[n] == 0);
  auto tt = twist(t, -4);
  for (std::size_t n = 1; n < 100; n += 2) CHECK(tt.c[n] == A.c[n]);
  auto a8 = twist(A, 8);
  CHECK(a8.at(5) == oracle::chi_8(5) * -6);
  CHECK(a8.at(5) == 6);
}

TEST_CASE("form table") {
  CHECK(form_for_parameter(PRational(-8)).base == "A");
  CHECK(form_for_parameter(PRational(-8)).twist_discriminant == 1);
  CHECK(form_for_parameter(PRational(4)).base == "C");
  CHECK(form_for_parameter(PRational(-1)).base == "B");
  CHECK(form_for_parameter(PRational(-1)).twist_discriminant == -4);
  CHECK(form_for_parameter(PRational(1, 4)).twist_discriminant == -4);
  CHECK(form_for_parameter(PRational(-1, 8)).twist_discriminant == 8);
  CHECK(form_for_parameter(PRational(64)).base == "D");
  CHECK(form_for_parameter(PRational(1, 64)).twist_discriminant == -4);
  CHECK(modular_parameters().size() == 7);
  CHECK(throws_kind([] { form_for_parameter(PRational(2)); }, ErrorKind::NotModular));
  CHECK(form_for_parameter(PRational(-8)).bad_prime(2));
  CHECK(form_for_parameter(PRational(1, 4)).bad_prime(3));
  CHECK_FALSE(form_for_parameter(PRational(4)).bad_prime(5));
}

TEST_CASE("CM vanishing") {
  auto A = eta_form("A", 100), C = eta_form("C", 100);
  for (long p = 3; p < 100; ++p) {
    if (!naive_prime(p)) continue;
    if (p % 4 == 3) CHECK(A.ap(static_cast<std::uint32_t>(p)) == 0);
    if (p % 3 == 2) CHECK(C.ap(static_cast<std::uint32_t>(p)) == 0);
  }
}

TEST_CASE("multiplicativity") {
  for (const char* s : {"A", "B", "C", "D"}) {
    auto f = eta_form(s, 101).expansion;
    for (long m = 2; m <= 100; ++m)
      for (long n = 2; m * n <= 100; ++n)
        if (std::gcd(m, n) == 1)
          CHECK(f.at(static_cast<std::size_t>(m * n)) == f.at(static_cast<std::size_t>(m)) * f.at(static_cast<std::size_t>(n)));
  }
}

TEST_CASE("modular unit root") {
  auto A = eta_form("A", 30);
  auto u = modular_unit_root(A, 5, 2);
  CHECK(u.residue() == 19);
  CHECK(throws_kind([&] { modular_unit_root(A, 7, 2); }, ErrorKind::NotOrdinary));
  CHECK(throws_kind([&] { modular_unit_root(A, 2, 2); }, ErrorKind::SmallPrime));
  CHECK(throws_kind([] { modular_unit_root(eta_form("D", 30), 7, 2); }, ErrorKind::BadReduction));
  for (std::uint32_t p : {5u, 13u, 17u, 29u}) {
    auto a = modular_unit_root(A, p, 4);
    auto ap = PadicNumber::from_int(A.ap(p), p, 4);
    CHECK(a * (ap - a) == PadicNumber::from_int(static_cast<long>(p) * p, p, 4));
  }
}

TEST_CASE("point counts match the form table") {
  for (const auto& a : modular_parameters()) {
    auto f = form_for_parameter(a, 64);
    for (std::uint32_t p = 5; p < 30; ++p) {
      if (!naive_prime(p) || f.bad_prime(p)) continue;
      CurveCountReport e;
      try {
        e = elliptic_trace(curve_e(a), p);
      } catch (const Error& err) {
        CHECK(err.kind() == ErrorKind::BadReduction);
        continue;
      }
      if (!e.ordinary) continue;
      const long chi = legendre_symbol(PRational(1) - a, p);
      CHECK(f.ap(p) == chi * (e.a_q * e.a_q - 2 * static_cast<std::int64_t>(p)));
    }
  }
}
