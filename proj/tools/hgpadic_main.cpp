// hgpadic: command-line front end for the p-adic hypergeometric library.

#include "hgpadic/cli.hpp"
#include "hgpadic/errors.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

namespace {

using namespace hgpadic;
using hgpadic::cli::json;

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(std::stoi(item));
  return out;
}

std::optional<int> opt_prec(int v) { return v > 0 ? std::optional<int>(v) : std::nullopt; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"p-adic hypergeometric functions, unit roots and regulator values"};
  app.require_subcommand(1);
  app.fallthrough();

  bool as_csv = false;
  unsigned jobs = 1;
  auto* fmt = app.add_option_group("format");
  fmt->add_flag("--json", "JSON output (default)");
  fmt->add_flag("--csv", as_csv, "CSV output");
  app.add_option("--jobs", jobs, "worker threads for grid commands")->check(CLI::Range(1u, 256u));

  std::uint32_t prime = 0;
  int prec = 0;
  std::string param, alpha = "0", scheme, indices, lvalue, cstr = "1", form = "A";
  std::size_t terms = 16;
  int n_ell = 0, bound = 30, mdeg = 1;
  bool all = false;

  auto* log_hg = app.add_subcommand("log-hg", "G_a/F_a at t = alpha with sigma(t) = alpha^(1-p) t^p");
  log_hg->add_option("--param", param, "a-tuple such as 1/2,1/2,1/2");
  log_hg->add_option("--alpha", alpha, "fiber parameter")->required();
  log_hg->add_option("--prime", prime, "prime p")->required();
  log_hg->add_option("--prec", prec, "precision n (default: smallest n with p^n > 10^4, at most 4)");
  log_hg->add_option("--scheme", scheme, "exponents n_0,...,n_d of the scheme");
  log_hg->add_option("--indices", indices, "characters i_0,...,i_d");

  auto* k3 = app.add_subcommand("k3-regulator", "8 F_{1/2,1/2,1/2}(a) and the conjectural product");
  k3->add_option("--param", param, "K3 parameter a")->required();
  k3->add_option("--prime", prime, "prime p >= 5")->required();
  k3->add_option("--prec", prec, "precision n");
  k3->add_option("--lvalue", lvalue, "externally computed L_p value (rational)");

  auto* ell = app.add_subcommand("ell-k3-regulator", "4(1-zeta)(1-zeta^-1) F_{1/n,(n-1)/n,1/2}(a)");
  ell->add_option("-n,--n", n_ell, "3, 4 or 6")->required();
  ell->add_option("--param", param, "parameter a")->required();
  ell->add_option("--prime", prime, "prime p")->required();
  ell->add_option("--prec", prec, "precision n");

  auto* urc = app.add_subcommand("unit-root-check", "point-count unit roots against Dwork eigenvalues");
  urc->add_option("--prime", prime, "prime p")->required();
  urc->add_option("--prec", prec, "precision N (default 3)");

  auto* cong = app.add_subcommand("congruence-check", "level n vs n+1 congruence grid");
  std::string grid_params, grid_primes;
  int max_level = 3;
  cong->add_option("--param", grid_params, "semicolon-separated a-tuples (default: the standard grid)");
  cong->add_option("--prime", grid_primes, "comma-separated primes (default 5,7,13)");
  cong->add_option("--prec", max_level, "largest level n (default 3)");

  auto* eta = app.add_subcommand("eta-ap", "a_p of the eta-product forms");
  eta->add_option("--form", form, "A, B, C, D or a modular parameter");
  eta->add_option("--terms", bound, "prime bound");
  eta->add_flag("--all", all, "include zero coefficients");

  auto* count = app.add_subcommand("count", "points on (1-x_0^n_0)...(1-x_d^n_d) = alpha over F_q");
  std::string nlist;
  count->add_option("--scheme", nlist, "exponents n_0,...,n_d")->required();
  count->add_option("--param", alpha, "alpha")->required();
  count->add_option("--prime", prime, "characteristic p")->required();
  count->add_option("--degree", mdeg, "extension degree m (q = p^m)");

  auto* dwr = app.add_subcommand("dwork-ratio", "F_a(t)/F_a'(c t^p) mod p^n");
  dwr->add_option("--param", param, "a-tuple")->required();
  dwr->add_option("--prime", prime, "prime p")->required();
  dwr->add_option("--prec", prec, "precision n");
  dwr->add_option("--frobenius-c", cstr, "Frobenius constant c = 1 mod p");
  dwr->add_option("--terms", terms, "number of coefficients");

  CLI11_PARSE(app, argc, argv);

  json report;
  try {
    if (*log_hg) {
      cli::LogHgOptions opt;
      if (!param.empty()) opt.a = HGParams::parse(param);
      opt.alpha = PRational::parse(alpha);
      opt.p = prime;
      opt.precision = opt_prec(prec);
      if (!scheme.empty()) {
        opt.scheme_n = parse_int_list(scheme);
        opt.scheme_i = indices.empty() ? std::vector<int>(opt.scheme_n.size(), 1) : parse_int_list(indices);
      }
      report = cli::cmd_log_hg(opt);
    } else if (*k3) {
      cli::K3Options opt{PRational::parse(param), prime, opt_prec(prec), std::nullopt};
      if (!lvalue.empty()) opt.lvalue = PRational::parse(lvalue);
      report = cli::cmd_k3_regulator(opt);
    } else if (*ell) {
      report = cli::cmd_ell_k3_regulator({n_ell, PRational::parse(param), prime, opt_prec(prec)});
    } else if (*urc) {
      report = cli::cmd_unit_root_check(prime, opt_prec(prec));
    } else if (*cong) {
      cli::CongruenceGrid grid = cli::default_congruence_grid();
      if (!grid_params.empty()) {
        grid.params.clear();
        std::stringstream ss(grid_params);
        std::string item;
        while (std::getline(ss, item, ';')) grid.params.push_back(HGParams::parse(item));
      }
      if (!grid_primes.empty()) {
        grid.primes.clear();
        for (int p : parse_int_list(grid_primes)) grid.primes.push_back(static_cast<std::uint32_t>(p));
      }
      grid.max_level = max_level;
      grid.jobs = jobs;
      report = cli::cmd_congruence_check(grid);
    } else if (*eta) {
      report = cli::cmd_eta_ap(form, static_cast<std::uint32_t>(bound), all);
    } else if (*count) {
      report = cli::cmd_count(parse_int_list(nlist), PRational::parse(alpha), prime, mdeg);
    } else if (*dwr) {
      report = cli::cmd_dwork_ratio(HGParams::parse(param), prime, opt_prec(prec), PRational::parse(cstr), terms);
    }
  } catch (const hgpadic::Error& e) {
    json err{{"error", std::string(to_string(e.kind()))}, {"message", e.what()}};
    std::cout << (as_csv ? cli::to_csv(err) : err.dump(2) + "\n");
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  std::cout << (as_csv ? cli::to_csv(report) : report.dump(2) + "\n");
  return cli::report_ok(report) ? 0 : 1;
}
