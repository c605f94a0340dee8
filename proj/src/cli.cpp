#include "hgpadic/cli.hpp"

#include "hgpadic/errors.hpp"
#include "hgpadic/unitroot.hpp"

#include <atomic>
#include <cmath>
#include <map>
#include <set>
#include <sstream>
#include <thread>

namespace hgpadic::cli {

ScaledPadic ScaledPadic::from(const PadicNumber& x) {
  const int v = x.valuation();
  if (v >= x.precision()) return {x, x.precision()};
  return {x.divide_by_p_power(v), v};
}

json to_json(const PadicNumber& x) {
  return {{"p", x.prime()}, {"precision", x.precision()}, {"digits", x.digits()}};
}

json to_json(const PRational& x) { return x.to_string(); }

json to_json(const ScaledPadic& x) { return {{"unit", to_json(x.unit)}, {"valuation", x.valuation}}; }

json to_json(const RationalSeries& s) {
  json coeffs = json::array();
  for (const auto& c : s.coeffs()) coeffs.push_back(c.to_string());
  return {{"domain", "rational"}, {"T", s.order()}, {"coeffs", coeffs}};
}

json to_json(const PadicSeries& s) {
  json coeffs = json::array();
  for (const auto& c : s.coeffs()) coeffs.push_back(to_json(c));
  return {{"domain", "padic"}, {"T", s.order()}, {"coeffs", coeffs}};
}

json to_json(const CurveCountReport& r) {
  return {{"curve", r.curve}, {"p", r.p}, {"q", r.q}, {"count", r.completed}, {"affine", r.affine},
          {"a_p", r.a_q}, {"ordinary", r.ordinary}};
}

int default_precision(std::uint32_t p) {
  int n = 1;
  u64 pn = p;
  while (pn <= 10'000 && n < 4) {
    pn *= p;
    ++n;
  }
  return n;
}

bool report_ok(const json& report) {
  if (report.is_object()) {
    if (auto it = report.find("consistency"); it != report.end() && it->is_object()) {
      if (!it->value("agree", false)) return false;
    }
    for (const auto& [key, value] : report.items())
      if (key != "consistency" && !report_ok(value)) return false;
  } else if (report.is_array()) {
    for (const auto& v : report)
      if (!report_ok(v)) return false;
  }
  return true;
}

namespace {

void flatten(const json& j, const std::string& prefix, std::map<std::string, std::string>& out) {
  if (j.is_object()) {
    // p-adic numbers print as their residue
    if (j.contains("digits") && j.contains("p") && j.contains("precision")) {
      const auto p = j["p"].get<u64>();
      u64 r = 0, place = 1;
      for (const auto& d : j["digits"]) {
        r += d.get<u64>() * place;
        place *= p;
      }
      out[prefix] = std::to_string(r);
      return;
    }
    for (const auto& [k, v] : j.items()) flatten(v, prefix.empty() ? k : prefix + "." + k, out);
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "." + std::to_string(i), out);
  } else if (j.is_string()) {
    out[prefix] = j.get<std::string>();
  } else {
    out[prefix] = j.dump();
  }
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string o = "\"";
  for (char ch : s) o += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  return o + "\"";
}

json consistency(int lo, int hi, bool agree) { return {{"levels", {lo, hi}}, {"agree", agree}}; }

int resolve_precision(std::uint32_t p, const std::optional<int>& requested) {
  const int n = requested.value_or(default_precision(p));
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "precision must be >= 1");
  prime_power(p, n + 1);  // the stamp needs one extra level
  return n;
}

// Value of G/F at alpha at levels n and n + 1.
struct TwoLevel {
  PadicNumber lo;
  PadicNumber hi;
  bool agree;
};

TwoLevel two_level_eval(const HGParams& a, const PRational& alpha, const FrobeniusSpec& fs, int n) {
  PadicNumber lo = eval_log_hg(a, alpha, fs, n);
  PadicNumber hi = eval_log_hg(a, alpha, fs, n + 1);
  return {lo, hi, hi.truncate(n) == lo};
}

json frobenius_json(const FrobeniusSpec& fs, int n) {
  return {{"tag", fs.tag}, {"c", fs.c.to_string()}, {"c_padic", to_json(fs.c_padic(n))}};
}

}  // namespace

std::string to_csv(const json& report) {
  std::vector<std::map<std::string, std::string>> rows;
  if (report.contains("rows") && report["rows"].is_array()) {
    for (const auto& r : report["rows"]) {
      std::map<std::string, std::string> flat;
      flatten(r, "", flat);
      rows.push_back(std::move(flat));
    }
  } else {
    std::map<std::string, std::string> flat;
    flatten(report, "", flat);
    rows.push_back(std::move(flat));
  }
  std::set<std::string> keys;
  for (const auto& r : rows)
    for (const auto& [k, v] : r) keys.insert(k);
  std::ostringstream os;
  bool first = true;
  for (const auto& k : keys) {
    os << (first ? "" : ",") << csv_escape(k);
    first = false;
  }
  os << "\n";
  for (const auto& r : rows) {
    first = true;
    for (const auto& k : keys) {
      auto it = r.find(k);
      os << (first ? "" : ",") << (it == r.end() ? "" : csv_escape(it->second));
      first = false;
    }
    os << "\n";
  }
  return os.str();
}

std::vector<json> parallel_map(std::size_t count, unsigned jobs, const std::function<json(std::size_t)>& fn) {
  std::vector<json> out(count);
  if (jobs <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) out[i] = fn(i);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(count);
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < jobs && w < count; ++w)
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < count; i = next++) {
          try {
            out[i] = fn(i);
          } catch (...) {
            errors[i] = std::current_exception();
          }
        }
      });
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

long rational_root_factor(int n) {
  switch (n) {
    case 2: return 2;
    case 3: return 3;
    case 4: return 2;
    case 6: return 1;
    default: throw Error(ErrorKind::InvalidArgument, "no rational value of (1 - zeta)(1 - zeta^-1) for n = " + std::to_string(n));
  }
}

json cmd_log_hg(const LogHgOptions& opt) {
  const std::uint32_t p = opt.p;
  require_odd_prime(p);
  const int n = resolve_precision(p, opt.precision);
  HGParams a = opt.a;
  if (!opt.scheme_n.empty()) {
    HGParams from = HGParams::from_scheme(opt.scheme_n, opt.scheme_i);
    if (!a.a.empty() && !(a == from))
      throw Error(ErrorKind::InvalidArgument, "parameters " + a.to_string() + " do not match the scheme data");
    a = from;
  }
  if (a.a.empty()) throw Error(ErrorKind::InvalidArgument, "no parameters given");
  a.require_p_integral(p);
  if (static_cast<int>(p) <= a.d() + 1) throw Error(ErrorKind::SmallPrime, "need p > d + 1");
  check_fiber(a, opt.alpha, p);
  const FrobeniusSpec fs = FrobeniusSpec::fixing(opt.alpha, p);
  const TwoLevel v = two_level_eval(a, opt.alpha, fs, n);

  json report{{"command", "log-hg"},
              {"params", a.to_string()},
              {"alpha", to_json(opt.alpha)},
              {"p", p},
              {"precision", n},
              {"frobenius", frobenius_json(fs, n)},
              {"value", to_json(v.lo)},
              {"consistency", consistency(n, n + 1, v.agree)}};

  if (!opt.scheme_n.empty()) {
    // prod (1 - nu_k^i_k) with nu_k = -1 for n_k = 2, else a Teichmuller n_k-th root of unity
    PadicNumber coeff = PadicNumber::one(p, n);
    json nus = json::array();
    for (std::size_t k = 0; k < opt.scheme_n.size(); ++k) {
      const int nk = opt.scheme_n[k];
      PadicNumber nu = PadicNumber::from_int(-1, p, n);
      if (nk != 2) {
        if ((p - 1) % static_cast<std::uint32_t>(nk) != 0)
          throw Error(ErrorKind::InvalidArgument, "nu_k needs p = 1 mod " + std::to_string(nk));
        // first primitive root g mod p; nu = omega(g)^((p-1)/n_k)
        std::uint32_t g = 2;
        for (;; ++g) {
          bool primitive = true;
          for (std::uint32_t r = 2; r < p - 1 && primitive; ++r)
            if ((p - 1) % r == 0 && is_prime(r) && powmod(g, (p - 1) / r, p) == 1) primitive = false;
          if (primitive) break;
        }
        nu = teichmuller(g, p, n).pow((p - 1) / static_cast<std::uint32_t>(nk));
      }
      nus.push_back(to_json(nu));
      coeff = coeff * (PadicNumber::one(p, n) - nu.pow(static_cast<u64>(opt.scheme_i[k])));
    }
    report["nu"] = nus;
    report["coefficient"] = to_json(coeff);
    report["regulator"] = to_json(coeff * v.lo);
  }
  return report;
}

namespace {

json conjecture_block(const HeckeForm& f, std::uint32_t p, int n, const PadicNumber& value,
                      const std::optional<PRational>& lvalue) {
  json block{{"form", f.name}};
  if (f.bad_prime(p)) {
    block["status"] = "BadReduction";
    return block;
  }
  const std::int64_t ap = f.ap(p);
  block["a_p"] = ap;
  if (ap % static_cast<std::int64_t>(p) == 0) {
    block["status"] = "NotOrdinary";
    return block;
  }
  const PadicNumber alpha = modular_unit_root(f, p, n);
  const PadicNumber alpha_hi = modular_unit_root(f, p, n + 1);
  // 1 - p^2/alpha
  auto euler = [p](const PadicNumber& al) {
    return PadicNumber::one(p, al.precision()) - al.inverse().multiply_by_p_power(2);
  };
  const PadicNumber factor = euler(alpha);
  const PadicNumber product = factor * value;
  block["status"] = "ok";
  block["alpha_p"] = to_json(alpha);
  block["euler_factor"] = to_json(ScaledPadic::from(factor));
  block["product"] = to_json(product);
  block["consistency"] = consistency(n, n + 1, alpha_hi.truncate(n) == alpha && euler(alpha_hi).truncate(n) == factor);
  if (lvalue) {
    // candidate C = L / product
    const ScaledPadic prod = ScaledPadic::from(product);
    json cand{{"lvalue", lvalue->to_string()}};
    if (!lvalue->p_integral(p)) {
      cand["status"] = "NonIntegral";
    } else if (prod.valuation >= n) {
      cand["status"] = "ZeroProduct";
    } else {
      const ScaledPadic L = ScaledPadic::from(reduce(*lvalue, p, n));
      const int prec = std::min(L.unit.precision(), prod.unit.precision());
      PadicNumber unit = L.unit.truncate(prec) / prod.unit.truncate(prec);
      const int val = L.valuation - prod.valuation;
      cand["C"] = to_json(ScaledPadic{unit, val});
      const u64 bound = static_cast<u64>(std::floor(std::sqrt(static_cast<double>(unit.modulus()) / 2.0)));
      if (auto r = rational_reconstruct(unit, bound)) {
        PRational c = *r;
        for (int i = 0; i < std::abs(val); ++i)
          c = val > 0 ? c * PRational(static_cast<long>(p)) : c / PRational(static_cast<long>(p));
        cand["reconstruction"] = c.to_string();
      } else {
        cand["reconstruction"] = nullptr;
      }
      cand["status"] = "candidate";
    }
    block["lvalue_candidate"] = cand;
  }
  return block;
}

}  // namespace

json cmd_k3_regulator(const K3Options& opt) {
  const std::uint32_t p = opt.p;
  require_odd_prime(p);
  if (p < 5) throw Error(ErrorKind::SmallPrime, "need p >= 5");
  const int n = resolve_precision(p, opt.precision);
  const HGParams a = HGParams::parse("1/2,1/2,1/2");
  const bool at_one = opt.a == PRational(1);
  const FrobeniusSpec fs = at_one ? FrobeniusSpec::identity(p) : FrobeniusSpec::fixing(opt.a, p);
  if (!at_one) check_fiber(a, opt.a, p);
  const TwoLevel v = two_level_eval(a, opt.a, fs, n);
  const PadicNumber eight = PadicNumber::from_int(8, p, n);

  json report{{"command", "k3-regulator"},
              {"params", a.to_string()},
              {"a", to_json(opt.a)},
              {"p", p},
              {"precision", n},
              {"frobenius", frobenius_json(fs, n)},
              {"value", to_json(v.lo)},
              {"coefficient", 8},
              {"regulator", to_json(eight * v.lo)},
              {"consistency", consistency(n, n + 1, v.agree)}};

  json conj;
  if (at_one) {
    if (p % 4 != 1) {
      conj = {{"form", "A"}, {"status", "RequiresP1Mod4"}};
    } else {
      conj = conjecture_block(eta_form("A", p + 1), p, n, v.lo, opt.lvalue);
    }
  } else {
    try {
      conj = conjecture_block(form_for_parameter(opt.a, p + 1), p, n, v.lo, opt.lvalue);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NotModular) throw;
      conj = {{"status", "NotModular"}};
    }
  }
  report["conjecture"] = conj;
  return report;
}

json cmd_ell_k3_regulator(const EllK3Options& opt) {
  if (opt.n != 3 && opt.n != 4 && opt.n != 6)
    throw Error(ErrorKind::InvalidArgument, "n must be 3, 4 or 6");
  const std::uint32_t p = opt.p;
  require_odd_prime(p);
  if ((2 * static_cast<std::uint32_t>(opt.n)) % p == 0) throw Error(ErrorKind::SmallPrime, "need p not dividing 2n");
  if (p <= 3) throw Error(ErrorKind::SmallPrime, "need p > 3");
  const int n = resolve_precision(p, opt.precision);
  const HGParams a({PRational(1, opt.n), PRational(opt.n - 1, opt.n), PRational(1, 2)});
  check_fiber(a, opt.a, p);
  const FrobeniusSpec fs = FrobeniusSpec::fixing(opt.a, p);
  const TwoLevel v = two_level_eval(a, opt.a, fs, n);
  const long coeff = 4 * rational_root_factor(opt.n);
  return {{"command", "ell-k3-regulator"},
          {"n", opt.n},
          {"params", a.to_string()},
          {"a", to_json(opt.a)},
          {"p", p},
          {"precision", n},
          {"frobenius", frobenius_json(fs, n)},
          {"value", to_json(v.lo)},
          {"coefficient", coeff},
          {"regulator", to_json(PadicNumber::from_int(coeff, p, n) * v.lo)},
          {"consistency", consistency(n, n + 1, v.agree)}};
}

json cmd_unit_root_check(std::uint32_t p, std::optional<int> precision) {
  require_odd_prime(p);
  const int n = precision.value_or(3);
  prime_power(p, n + 1);
  const HGParams a = HGParams::parse("1/2,1/2");
  const ZnPoly h = h_polynomial(a, p);
  json rows = json::array();
  int sign = 0;
  bool sign_consistent = true, levels = true;
  for (std::uint32_t ah = 2; ah + 2 <= p; ++ah) {
    json row{{"a_hat", ah}};
    CurveCountReport rep;
    try {
      rep = elliptic_trace(curve_gauss2(PRational(static_cast<long>(ah))), p);
    } catch (const Error& e) {
      row["status"] = std::string(to_string(e.kind()));
      rows.push_back(row);
      continue;
    }
    row["count"] = to_json(rep);
    row["hasse"] = h.evaluate(ah);
    if (!rep.ordinary || h.evaluate(ah) == 0) {
      row["status"] = rep.ordinary ? "BadHasse" : "NotOrdinary";
      rows.push_back(row);
      continue;
    }
    const PadicNumber u = unit_root_from_counts(rep, n);
    const PadicNumber e = frobenius_unit_eigenvalue(a, ah, p, 1, n);
    const PadicNumber e_hi = frobenius_unit_eigenvalue(a, ah, p, 1, n + 1);
    levels = levels && e_hi.truncate(n) == e;
    int s = u == e ? 1 : (u == -e ? -1 : 0);
    if (s == 0 || (sign != 0 && s != sign)) sign_consistent = false;
    if (sign == 0) sign = s;
    row["unit_root"] = to_json(u);
    row["eigenvalue"] = to_json(e);
    row["sign"] = s;
    row["status"] = s == 0 ? "mismatch" : "ok";
    rows.push_back(row);
  }
  const bool pass = sign_consistent && sign != 0;
  return {{"command", "unit-root-check"},
          {"p", p},
          {"precision", n},
          {"params", a.to_string()},
          {"epsilon", sign},
          {"status", pass ? "PASS" : "FAIL"},
          {"rows", rows},
          {"consistency", consistency(n, n + 1, levels && pass)}};
}

CongruenceGrid default_congruence_grid() {
  CongruenceGrid g;
  for (const char* s : {"1/2,1/2", "1/3,2/3", "1/2,1/2,1/2", "1/6,5/6,1/2"}) g.params.push_back(HGParams::parse(s));
  g.primes = {5, 7, 13};
  return g;
}

json cmd_congruence_check(const CongruenceGrid& grid) {
  struct Task {
    HGParams a;
    std::uint32_t p;
    bool twisted;
    int n;
  };
  std::vector<Task> tasks;
  for (const auto& a : grid.params)
    for (auto p : grid.primes)
      for (bool tw : {false, true}) {
        if (tw && !grid.twisted_c) continue;
        for (int n = 1; n <= grid.max_level; ++n) tasks.push_back({a, p, tw, n});
      }
  auto rows = parallel_map(tasks.size(), grid.jobs, [&](std::size_t i) -> json {
    const Task& t = tasks[i];
    const FrobeniusSpec fs =
        t.twisted ? FrobeniusSpec::custom(PRational(1 + static_cast<long>(t.p)), t.p) : FrobeniusSpec::identity(t.p);
    const bool dwork = levels_agree(dwork_quotient(t.a, fs, t.n), dwork_quotient(t.a, fs, t.n + 1));
    const TruncationQuotient lq = log_quotient(t.a, fs, t.n);
    const bool logtype = levels_agree(lq, log_quotient(t.a, fs, t.n + 1));
    const bool constant = lq.expand(1)[0] == g_sigma_constant(t.a, fs, t.n);
    return {{"params", t.a.to_string()},
            {"p", t.p},
            {"c", fs.c.to_string()},
            {"n", t.n},
            {"dwork", dwork},
            {"log_type", logtype},
            {"constant_term", constant},
            {"consistency", consistency(t.n, t.n + 1, dwork && logtype && constant)}};
  });
  json out{{"command", "congruence-check"}, {"rows", rows}};
  out["status"] = report_ok(out) ? "PASS" : "FAIL";
  return out;
}

json cmd_eta_ap(const std::string& form, std::uint32_t bound, bool include_zero) {
  const std::size_t terms = static_cast<std::size_t>(bound) + 1;
  HeckeForm f;
  if (form == "A" || form == "B" || form == "C" || form == "D")
    f = eta_form(form, terms);
  else
    f = form_for_parameter(PRational::parse(form), terms);
  // second route: the same expansion with pentagonal factors only
  HeckeForm check = f;
  {
    EtaProduct spec;
    if (f.base == "A") spec.factors = {{4, 6}};
    if (f.base == "B") spec.factors = {{1, 2}, {2, 1}, {4, 1}, {8, 2}};
    if (f.base == "C") spec.factors = {{2, 3}, {6, 3}};
    if (f.base == "D") spec.factors = {{1, 3}, {7, 3}};
    check.expansion = eta_product_expansion(spec, terms, EtaMethod::Pentagonal);
    if (f.twist_discriminant != 1) check.expansion = twist(check.expansion, f.twist_discriminant);
  }
  json ap = json::object();
  for (std::uint32_t p = 2; p <= bound; ++p) {
    if (!is_prime(p)) continue;
    if (f.ap(p) == 0 && !include_zero) continue;
    ap[std::to_string(p)] = f.ap(p);
  }
  return {{"command", "eta-ap"},
          {"form", f.name},
          {"level", f.level},
          {"bound", bound},
          {"ap", ap},
          {"consistency", {{"methods", {"jacobi-cube", "pentagonal"}}, {"agree", check.expansion == f.expansion}}}};
}

json cmd_count(const std::vector<int>& n, const PRational& alpha, std::uint32_t p, int m) {
  const FiniteFieldSpec field{p, m};
  const std::uint64_t count = count_hg_fiber(n, alpha, field);
  // same count with the coordinates in reverse order (a different last coordinate)
  const std::vector<int> rev(n.rbegin(), n.rend());
  const std::uint64_t again = count_hg_fiber(rev, alpha, field);
  return {{"command", "count"},
          {"n", n},
          {"alpha", to_json(alpha)},
          {"p", p},
          {"m", m},
          {"q", field.q()},
          {"count", count},
          {"consistency", {{"orders", {"forward", "reverse"}}, {"agree", count == again}}}};
}

json cmd_dwork_ratio(const HGParams& a, std::uint32_t p, std::optional<int> precision, const PRational& c,
                     std::size_t terms) {
  require_odd_prime(p);
  const int n = resolve_precision(p, precision);
  const FrobeniusSpec fs = c == PRational(1) ? FrobeniusSpec::identity(p) : FrobeniusSpec::custom(c, p);
  const std::size_t order = std::min<std::size_t>(terms, prime_power(p, n));
  const bool agree = levels_agree(dwork_quotient(a, fs, n), dwork_quotient(a, fs, n + 1));
  return {{"command", "dwork-ratio"},
          {"params", a.to_string()},
          {"p", p},
          {"precision", n},
          {"frobenius", frobenius_json(fs, n)},
          {"series", to_json(dwork_ratio(a, fs, n, order))},
          {"consistency", consistency(n, n + 1, agree)}};
}

}  // namespace hgpadic::cli
