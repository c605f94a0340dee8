#include "hgpadic/zn_poly.hpp"

#include "hgpadic/errors.hpp"

#include <algorithm>

namespace hgpadic {

ZnPoly::ZnPoly(u64 m, std::vector<u64> coeffs) : modulus(m), c(std::move(coeffs)) {
  if (m == 0 || m >= kMaxModulus) throw Error(ErrorKind::InvalidArgument, "bad modulus");
  for (auto& x : c) x %= m;
}

ZnPoly ZnPoly::reduced(u64 new_modulus) const {
  if (modulus % new_modulus != 0) throw Error(ErrorKind::InvalidArgument, "modulus must divide the old one");
  return ZnPoly(new_modulus, c);
}

ZnPoly ZnPoly::truncated(std::size_t k) const {
  ZnPoly r = *this;
  if (r.c.size() > k) r.c.resize(k);
  return r;
}

void ZnPoly::trim() {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

u64 ZnPoly::evaluate(u64 x) const {
  u64 acc = 0;
  x %= modulus;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = addmod(mulmod(acc, x, modulus), *it, modulus);
  return acc;
}

ZnPoly multiply(const ZnPoly& a, const ZnPoly& b, std::size_t limit) {
  if (a.modulus != b.modulus) throw Error(ErrorKind::InvalidArgument, "modulus mismatch");
  const u64 m = a.modulus;
  if (a.c.empty() || b.c.empty()) return ZnPoly(m, {});
  std::size_t n = a.c.size() + b.c.size() - 1;
  if (limit != 0) n = std::min(n, limit);
  // Nonzero entries of b, so sparse factors such as F(t^p) cost proportionally less.
  std::vector<std::pair<std::size_t, u64>> bnz;
  for (std::size_t j = 0; j < b.c.size() && j < n; ++j)
    if (b.c[j] != 0) bnz.emplace_back(j, b.c[j]);
  std::vector<u128> acc(n, 0);
  const bool small = m <= (u64{1} << 32);
  for (std::size_t i = 0; i < a.c.size() && i < n; ++i) {
    const u64 ai = a.c[i];
    if (ai == 0) continue;
    for (const auto& [j, bj] : bnz) {
      if (i + j >= n) break;
      acc[i + j] += small ? ai * bj : mulmod(ai, bj, m);
    }
  }
  std::vector<u64> out(n);
  for (std::size_t k = 0; k < n; ++k) out[k] = static_cast<u64>(acc[k] % m);
  return ZnPoly(m, std::move(out));
}

ZnPoly inverse_series(const ZnPoly& f, std::size_t order) {
  const u64 m = f.modulus;
  auto inv0 = invmod(f.at(0), m);
  if (!inv0) throw Error(ErrorKind::NotInvertible, "constant term is not a unit");
  std::vector<std::pair<std::size_t, u64>> fnz;
  for (std::size_t i = 1; i < f.c.size() && i < order; ++i)
    if (f.c[i] != 0) fnz.emplace_back(i, f.c[i]);
  std::vector<u64> g(order, 0);
  if (order == 0) return ZnPoly(m, {});
  g[0] = *inv0;
  const bool small = m <= (u64{1} << 32);
  for (std::size_t k = 1; k < order; ++k) {
    u128 acc = 0;
    for (const auto& [i, fi] : fnz) {
      if (i > k) break;
      acc += small ? fi * g[k - i] : mulmod(fi, g[k - i], m);
    }
    g[k] = mulmod(negmod(static_cast<u64>(acc % m), m), *inv0, m);
  }
  return ZnPoly(m, std::move(g));
}

bool cross_equal(const ZnPoly& num_a, const ZnPoly& den_a, const ZnPoly& num_b, const ZnPoly& den_b,
                 u64 modulus) {
  ZnPoly lhs = multiply(num_a.reduced(modulus), den_b.reduced(modulus));
  ZnPoly rhs = multiply(num_b.reduced(modulus), den_a.reduced(modulus));
  lhs.trim();
  rhs.trim();
  return lhs.c == rhs.c;
}

}  // namespace hgpadic
