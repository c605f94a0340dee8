#include "doctest.h"
#include "oracles.hpp"

#include "hgpadic/diffop.hpp"
#include "hgpadic/errors.hpp"
#include "hgpadic/hypergeom.hpp"
#include "hgpadic/unitroot.hpp"

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

DifferentialOperator mult(const RationalFunction& r) { return DifferentialOperator::multiplication(r); }

HGParams random_params(std::mt19937& rng, int d) {
  std::vector<PRational> v;
  for (int k = 0; k <= d; ++k) {
    const long den = 2 + static_cast<long>(rng() % 11);
    v.emplace_back(1 + static_cast<long>(rng() % static_cast<unsigned>(den - 1)), den);
  }
  return HGParams(v);
}

/// [F_b]_{<order}(x) mod p^N, straight from the Pochhammer products.
mpz_class trunc_eval(const std::vector<mpq_class>& b, std::size_t order, const mpz_class& x, unsigned p, int N) {
  const mpz_class m = oracle::ppow(p, N);
  mpz_class acc = 0, xk = 1;
  mpq_class coeff = 1;
  for (std::size_t k = 0; k < order; ++k) {
    acc += oracle::reduce(coeff, p, N) * xk;
    xk = oracle::mod(xk * x, m);
    for (const auto& a : b) coeff *= (a + static_cast<long>(k)) / mpq_class(static_cast<long>(k) + 1);
  }
  return oracle::mod(acc, m);
}

/// Classical form of the Dwork congruence at a Teichmuller point w (w^p = w):
/// prod_j [F_{a^(j)}]_{<p^N}(w) / [F_{a^(j+1)}]_{<p^(N-1)}(w) mod p^N over the orbit.
std::uint64_t oracle_eigenvalue(std::vector<mpq_class> a, long a_hat, unsigned p, int m, int N) {
  const mpz_class mod = oracle::ppow(p, N);
  const mpz_class w = oracle::teichmuller(a_hat, p, N);
  mpz_class prod = 1;
  for (int j = 0; j < m; ++j) {
    std::vector<mpq_class> next;
    for (const auto& x : a) next.push_back(oracle::dwork_prime(x, p));
    const mpz_class num = trunc_eval(a, oracle::ppow(p, N).get_ui(), w, p, N);
    const mpz_class den = trunc_eval(next, oracle::ppow(p, N - 1).get_ui(), w, p, N);
    prod = oracle::mod(prod * num * oracle::inv(den, mod), mod);
    a = next;
  }
  return prod.get_ui();
}

}  // namespace

TEST_CASE("q coefficients") {
  auto q = q_coeffs(HGParams::parse("1/2,1/2"));
  REQUIRE(q.size() == 2);
  CHECK(q[1] == RationalFunction({PRational(0), PRational(-1)}, 0, 1));
  CHECK(q[0] == RationalFunction({PRational(0), PRational(-1, 4)}, 0, 1));
  auto q1 = q_coeffs(HGParams::parse("1"));
  CHECK(q1 == std::vector<RationalFunction>{RationalFunction({PRational(0), PRational(-1)}, 0, 1)});
  for (const char* s : {"1/2,1/2,1/2", "1/6,5/6,1/2", "1/4,3/4,1/3,2/3"}) {
    auto a = HGParams::parse(s);
    auto model = gauss_manin_model(a);
    CHECK(operator_mul(mult(RationalFunction::one_minus_t()), model.connection_operator()) == hg_operator(a));
    CHECK(model.basis_labels.size() == a.a.size());
  }
}

TEST_CASE("adjoint composed with 1 - t is the dual operator") {
  std::mt19937 rng(99);
  for (int d = 1; d <= 3; ++d)
    for (int trial = 0; trial < 10; ++trial) {
      auto a = random_params(rng, d);
      auto model = gauss_manin_model(a);
      CHECK(operator_mul(model.adjoint_operator(), mult(RationalFunction::one_minus_t())) == hg_operator(a.dual()));
    }
}

TEST_CASE("unit root vector") {
  auto v = unit_root_vector(HGParams::parse("1"), 10);
  REQUIRE(v.y.size() == 1);
  CHECK(v.y[0] == RationalSeries::from_polynomial({PRational(1), PRational(-1)}, 10, PRational(0)));

  // y1 = (1-t)F, y0 = q1 y1 - D(y1) = -tF - D((1-t)F)
  const std::size_t T = 30;
  auto w = unit_root_vector(HGParams::parse("1/2,1/2"), T);
  auto F = oracle::hg({mpq_class(1, 2), mpq_class(1, 2)}, T);
  for (std::size_t k = 0; k < T; ++k) {
    const mpq_class prev = k > 0 ? F[k - 1] : mpq_class(0);
    const mpq_class y1 = F[k] - prev;
    const mpq_class y0 = -prev - static_cast<long>(k) * y1;
    CHECK(w.y[1][k].to_string() == PRational::parse(y1.get_str()).to_string());
    CHECK(w.y[0][k].to_string() == PRational::parse(y0.get_str()).to_string());
  }
  std::mt19937 rng(3);
  for (int d = 0; d <= 3; ++d) CHECK(unit_root_vector(random_params(rng, d), 5).y.back()[0] == PRational(1));
}

TEST_CASE("kernel check") {
  auto a = HGParams::parse("1");
  CHECK(check_kernel(gauss_manin_model(a), unit_root_vector(a, 10)).ok);
  auto b = HGParams::parse("1/2,1/2");
  auto v = unit_root_vector(b, 100);
  CHECK(check_kernel(gauss_manin_model(b), v).ok);
  v.y[0] = v.y[0] + RationalSeries::from_polynomial({PRational(0), PRational(1)}, 100, PRational(0));
  auto bad = check_kernel(gauss_manin_model(b), v);
  CHECK_FALSE(bad.ok);
  CHECK(bad.coordinate == 0);
  CHECK(bad.degree == 1);
  std::mt19937 rng(5);
  for (int d = 1; d <= 3; ++d)
    for (int trial = 0; trial < 10; ++trial) {
      auto c = random_params(rng, d);
      CHECK(check_kernel(gauss_manin_model(c), unit_root_vector(c, 100)).ok);
    }
  CHECK(throws_kind([&] { check_kernel(gauss_manin_model(b), unit_root_vector(b, 2)); }, ErrorKind::InvalidArgument));
}

TEST_CASE("normalized top coordinate") {
  for (const char* s : {"1/2,1/2", "1/3,2/3", "1/2,1/2,1/2", "1/6,5/6,1/2"}) {
    auto a = HGParams::parse(s);
    auto eta = normalize(unit_root_vector(a, 40), a);
    CHECK(eta.normalization == Normalization::DividedByDualSeries);
    CHECK(eta.y.back() == RationalSeries::from_polynomial({PRational(1), PRational(-1)}, 40, PRational(0)));
  }
}

TEST_CASE("integrality") {
  CHECK(integrality_check(HGParams::parse("1"), 5, 2, 25).ok());
  CHECK(integrality_check(HGParams::parse("1/2,1/2"), 5, 2, 25).ok());
  CHECK(integrality_check(HGParams::parse("1/3,2/3"), 7, 2, 49).ok());
  auto r = integrality_check(HGParams::parse("1/2,1/2,1/2"), 13, 2, 50);
  CHECK(r.ok());
  CHECK(r.order == 50);
}

TEST_CASE("frobenius unit eigenvalue") {
  for (long ah = 2; ah < 7; ++ah) CHECK(frobenius_unit_eigenvalue(HGParams::parse("1"), ah, 7, 1, 3).residue() == 1);
  CHECK(throws_kind([] { frobenius_unit_eigenvalue(HGParams::parse("1/2,1/2"), 1, 5, 1, 3); }, ErrorKind::BadFiber));
  CHECK(throws_kind([] { frobenius_unit_eigenvalue(HGParams::parse("1/2,1/2"), 10, 5, 1, 3); }, ErrorKind::BadFiber));
  CHECK(throws_kind([] { frobenius_unit_eigenvalue(HGParams::parse("1/3,2/3"), 2, 5, 1, 3); }, ErrorKind::OrbitMismatch));
  // [F_(1/2,1/2)]_{<7} vanishes at 2, 4 and 6 mod 7
  CHECK(throws_kind([] { frobenius_unit_eigenvalue(HGParams::parse("1/2,1/2"), 2, 7, 1, 3); }, ErrorKind::BadHasse));

  auto u = frobenius_unit_eigenvalue(HGParams::parse("1/2,1/2"), 2, 5, 1, 3);
  CHECK(u.is_unit());
  CHECK(u.residue() == oracle_eigenvalue({mpq_class(1, 2), mpq_class(1, 2)}, 2, 5, 1, 3));

  for (auto [s, p, m] : std::vector<std::tuple<const char*, unsigned, int>>{
           {"1/2,1/2", 7, 1}, {"1/3,2/3", 5, 2}, {"1/3,2/3", 7, 1}, {"1/4,3/4", 13, 1}, {"1/6,5/6,1/2", 7, 1}}) {
    auto a = HGParams::parse(s);
    std::vector<mpq_class> qa;
    for (const auto& x : a.a) qa.emplace_back(x.to_string());
    for (long ah = 2; ah < static_cast<long>(p); ++ah) {
      try {
        auto e = frobenius_unit_eigenvalue(a, ah, p, m, 3);
        CHECK(e.residue() == oracle_eigenvalue(qa, ah, p, m, 3));
      } catch (const Error& err) {
        CHECK(err.kind() == ErrorKind::BadHasse);
      }
    }
  }
}

TEST_CASE("eigenvalue cocycle and rotation") {
  for (long ah = 2; ah < 5; ++ah) {
    auto a = HGParams::parse("1/2,1/2");
    auto e1 = frobenius_unit_eigenvalue(a, ah, 5, 1, 4);
    auto e2 = frobenius_unit_eigenvalue(a, ah, 5, 2, 4);
    CHECK(e2 == e1 * e1);
  }
  // (1/3,2/3) and (2/3,1/3) start the same orbit at different places
  for (long ah = 2; ah < 5; ++ah) {
    try {
      auto x = frobenius_unit_eigenvalue(HGParams::parse("1/3,2/3"), ah, 5, 2, 3);
      auto y = frobenius_unit_eigenvalue(HGParams::parse("2/3,1/3"), ah, 5, 2, 3);
      CHECK(x == y);
      CHECK(frobenius_unit_eigenvalue(HGParams::parse("1/3,2/3"), ah, 5, 4, 3) == x * x);
    } catch (const Error& err) {
      CHECK(err.kind() == ErrorKind::BadHasse);
    }
  }
}
