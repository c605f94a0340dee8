#pragma once

// JSON reports behind the hgpadic command-line tool. Every report carries a
// "consistency" object comparing the computation at two precision levels.

#include "hgpadic/arith_geom.hpp"
#include "hgpadic/hypergeom.hpp"
#include "hgpadic/modular.hpp"

#include <json.hpp>

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace hgpadic::cli {

using nlohmann::json;

/// unit * p^valuation; only used for Euler factors and reconstructed constants.
struct ScaledPadic {
  PadicNumber unit;
  int valuation = 0;

  static ScaledPadic from(const PadicNumber& x);
};

json to_json(const PadicNumber& x);
json to_json(const PRational& x);
json to_json(const ScaledPadic& x);
json to_json(const RationalSeries& s);
json to_json(const PadicSeries& s);
json to_json(const CurveCountReport& r);

/// Smallest n with p^n > 10^4, capped at 4.
int default_precision(std::uint32_t p);

/// True when every "consistency" object in the report agrees.
bool report_ok(const json& report);

/// Flattens a report to CSV: one line per element of "rows" when present.
std::string to_csv(const json& report);

/// Runs fn(0..count-1) on up to `jobs` threads; results come back in index order.
std::vector<json> parallel_map(std::size_t count, unsigned jobs, const std::function<json(std::size_t)>& fn);

struct LogHgOptions {
  HGParams a;
  PRational alpha;
  std::uint32_t p = 0;
  std::optional<int> precision;
  /// Optional scheme data (n_k, i_k) fixing the coefficient prod (1 - nu_k^i_k).
  std::vector<int> scheme_n;
  std::vector<int> scheme_i;
};

json cmd_log_hg(const LogHgOptions& opt);

struct K3Options {
  PRational a;
  std::uint32_t p = 0;
  std::optional<int> precision;
  std::optional<PRational> lvalue;
};

json cmd_k3_regulator(const K3Options& opt);

struct EllK3Options {
  int n = 0;
  PRational a;
  std::uint32_t p = 0;
  std::optional<int> precision;
};

json cmd_ell_k3_regulator(const EllK3Options& opt);

json cmd_unit_root_check(std::uint32_t p, std::optional<int> precision);

struct CongruenceGrid {
  std::vector<HGParams> params;
  std::vector<std::uint32_t> primes;
  bool twisted_c = true;  // also run c = 1 + p
  int max_level = 3;
  unsigned jobs = 1;
};

CongruenceGrid default_congruence_grid();
json cmd_congruence_check(const CongruenceGrid& grid);

/// `form` is "A".."D" or a modular parameter such as "-1/8".
json cmd_eta_ap(const std::string& form, std::uint32_t bound, bool include_zero);

json cmd_count(const std::vector<int>& n, const PRational& alpha, std::uint32_t p, int m);

json cmd_dwork_ratio(const HGParams& a, std::uint32_t p, std::optional<int> precision, const PRational& c,
                     std::size_t terms);

/// 2 for n = 2 (nu = -1); for n = 3, 4, 6 the product (1 - zeta)(1 - zeta^-1) = 3, 2, 1.
long rational_root_factor(int n);

}  // namespace hgpadic::cli
