#include "hgpadic/prational.hpp"

#include "hgpadic/errors.hpp"

#include <cctype>

namespace hgpadic {

PRational::PRational(long num, long den) {
  if (den == 0) throw Error(ErrorKind::InvalidArgument, "zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

PRational::PRational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

PRational PRational::parse(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw Error(ErrorKind::InvalidArgument, "empty rational");
  auto valid_int = [](std::string_view v) {
    std::size_t i = (!v.empty() && (v[0] == '-' || v[0] == '+')) ? 1 : 0;
    if (i >= v.size()) return false;
    for (; i < v.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(v[i]))) return false;
    return true;
  };
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den.front() == '-')
    throw Error(ErrorKind::InvalidArgument, "malformed rational '" + s + "'");
  if (num.front() == '+') num.erase(0, 1);
  if (den.front() == '+') den.erase(0, 1);
  mpz_class n(num), d(den);
  if (d == 0) throw Error(ErrorKind::InvalidArgument, "zero denominator in '" + s + "'");
  mpq_class q(n, d);
  return PRational(q);
}

bool PRational::p_integral(std::uint64_t p) const {
  return mpz_divisible_ui_p(q_.get_den_mpz_t(), p) == 0;
}

std::int64_t PRational::num_i64() const {
  if (!q_.get_num().fits_slong_p())
    throw Error(ErrorKind::InvalidArgument, "numerator too large: " + to_string());
  return q_.get_num().get_si();
}

std::int64_t PRational::den_i64() const {
  if (!q_.get_den().fits_slong_p())
    throw Error(ErrorKind::InvalidArgument, "denominator too large: " + to_string());
  return q_.get_den().get_si();
}

std::string PRational::to_string() const {
  if (q_.get_den() == 1) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

PRational operator/(const PRational& a, const PRational& b) {
  if (b.is_zero()) throw Error(ErrorKind::InvalidArgument, "division by zero");
  return PRational(mpq_class(a.q_ / b.q_));
}

}  // namespace hgpadic
