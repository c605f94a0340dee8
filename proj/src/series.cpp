#include "hgpadic/series.hpp"

namespace hgpadic {

PadicSeries frobenius_substitute(const PadicSeries& f, const PadicNumber& c) {
  if (c.prime() != f[0].prime()) throw Error(ErrorKind::InvalidArgument, "prime mismatch");
  if (c.residue() % c.prime() != 1)
    throw Error(ErrorKind::BadFrobeniusConstant, "Frobenius constant must be 1 mod p, got " + c.to_string());
  return f.frobenius_substitute(c, c.prime());
}

PadicSeries reduce_series(const RationalSeries& f, std::uint32_t p, int precision) {
  std::vector<PadicNumber> out;
  out.reserve(f.order());
  for (const auto& x : f.coeffs()) out.push_back(reduce(x, p, precision));
  return PadicSeries(std::move(out));
}

long first_non_integral(const RationalSeries& f, std::uint32_t p) {
  for (std::size_t k = 0; k < f.order(); ++k)
    if (!f[k].p_integral(p)) return static_cast<long>(k);
  return -1;
}

bool is_p_integral(const RationalSeries& f, std::uint32_t p) { return first_non_integral(f, p) < 0; }

}  // namespace hgpadic
