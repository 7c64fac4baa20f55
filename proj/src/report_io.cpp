#include "freud/report_io.hpp"

#include <charconv>
#include <cmath>
#include <ostream>

#include <json.hpp>

namespace freud {

std::string fmt_double(double v) {
  char buf[40];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  (void)ec;
  return std::string(buf, ptr);
}

std::string fmt_log_as_decimal(double log_e) {
  if (!std::isfinite(log_e)) return log_e < 0 ? "0" : "inf";
  const double log10v = log_e / M_LN10;
  double e10 = std::floor(log10v);
  double mant = std::pow(10.0, log10v - e10);
  if (mant >= 10.0) {  // rounding spill
    mant /= 10.0;
    e10 += 1.0;
  }
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.15fe%+04d", mant, static_cast<int>(e10));
  return buf;
}

std::string fmt_complex(std::complex<double> z) {
  std::string s = fmt_double(z.real());
  if (z.imag() >= 0.0 || std::isnan(z.imag())) s += "+";
  s += fmt_double(z.imag());
  s += "i";
  return s;
}

std::complex<double> parse_complex(const std::string& s) {
  if (s.size() < 2 || s.back() != 'i')
    throw ArgumentError("complex literal must end in 'i': '" + s + "'");
  // split at the last +/- that is not an exponent sign and not leading
  std::size_t split = std::string::npos;
  for (std::size_t i = s.size() - 1; i >= 1; --i) {
    const char c = s[i];
    if ((c == '+' || c == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') {
      split = i;
      break;
    }
  }
  if (split == std::string::npos)
    throw ArgumentError("complex literal must be RE+IMi: '" + s + "'");
  const std::string re_s = s.substr(0, split);
  const std::string im_s = s.substr(split, s.size() - split - 1);
  try {
    std::size_t p1 = 0, p2 = 0;
    const double re = std::stod(re_s, &p1);
    const double im = im_s == "+"   ? 1.0
                      : im_s == "-" ? -1.0
                                    : std::stod(im_s, &p2);
    if (p1 != re_s.size() || (p2 != 0 && p2 != im_s.size()))
      throw ArgumentError("trailing characters in complex literal: '" + s + "'");
    return {re, im};
  } catch (const ArgumentError&) {
    throw;
  } catch (const std::exception&) {
    throw ArgumentError("malformed complex literal: '" + s + "'");
  }
}

std::vector<int> parse_grid(const std::string& s) {
  const auto c1 = s.find(':');
  const auto c2 = s.find(':', c1 == std::string::npos ? c1 : c1 + 1);
  if (c1 == std::string::npos || c2 == std::string::npos)
    throw ArgumentError("grid spec must be a:b:xK or a:b:+K, got '" + s + "'");
  long a = 0, b = 0, k = 0;
  char op = 0;
  try {
    a = std::stol(s.substr(0, c1));
    b = std::stol(s.substr(c1 + 1, c2 - c1 - 1));
    const std::string step = s.substr(c2 + 1);
    if (step.size() < 2 || (step[0] != 'x' && step[0] != '+'))
      throw ArgumentError("grid step must be xK or +K: '" + s + "'");
    op = step[0];
    k = std::stol(step.substr(1));
  } catch (const ArgumentError&) {
    throw;
  } catch (const std::exception&) {
    throw ArgumentError("malformed grid spec: '" + s + "'");
  }
  if (a < 1 || b < a) throw ArgumentError("grid requires 1 <= a <= b: '" + s + "'");
  if ((op == 'x' && k < 2) || (op == '+' && k < 1))
    throw ArgumentError("grid step out of range: '" + s + "'");
  std::vector<int> g;
  for (long v = a; v <= b; v = (op == 'x') ? v * k : v + k) {
    g.push_back(static_cast<int>(v));
    if (g.size() > 100000) throw ArgumentError("grid too large: '" + s + "'");
  }
  return g;
}

void write_coeff_csv(std::ostream& os, const CoeffTable& t) {
  os << "n,b_n,log_norm_sq\n";
  for (int n = 1; n <= t.max_degree(); ++n)
    os << n << "," << fmt_double(t.b[n]) << "," << fmt_double(t.log_norm_sq[n])
       << "\n";
}

void write_coeff_csv(std::ostream& os, const CoeffTableX& t) {
  const unsigned digits = ext_real::default_precision();
  os << "n,b_n,log_norm_sq\n";
  for (int n = 1; n <= t.max_degree(); ++n)
    os << n << "," << t.b[n].str(digits) << "," << t.log_norm_sq[n].str(digits)
       << "\n";
}

namespace {

struct BalanceRow {
  int n;
  double lambda_n, log_kappa, alpha, log_t0, log_t1, ratio;
};

BalanceRow balance_row(const CoeffTable& table, const LambdaSchedule& schedule,
                       int n) {
  BalanceRow row{};
  row.n = n;
  if (n == 0) {
    row.lambda_n = 0.0;  // kappa_0 is lambda-free
    row.log_kappa = table.log_norm_sq[0];
    row.alpha = 0.0;
    row.log_t0 = table.log_norm_sq[0];
    row.log_t1 = -std::numeric_limits<double>::infinity();
    row.ratio = 0.0;
    return row;
  }
  const double lam = schedule(n);
  row.lambda_n = lam;
  if (n < 3) {
    // S_1 = P_1, S_2 = P_2: t0 = ||P_n||^2, t1 = kappa_n - t0 directly
    const double s_n =
        (n == 1) ? 1.0 + lam / table.b[1] : 1.0 + 4.0 * lam / table.b[2];
    row.log_kappa = std::log(s_n) + table.log_norm_sq[n];
    row.alpha = 0.0;
    row.log_t0 = table.log_norm_sq[n];
    row.log_t1 = std::log(s_n - 1.0) + table.log_norm_sq[n];
    row.ratio = s_n - 1.0;
    return row;
  }
  const SobolevTable st = build_sobolev_table(table, lam, n);
  const BalanceRecord rec = balance_diagnostic(table, schedule, n);
  row.log_kappa = st.log_kappa[n];
  row.alpha = st.alpha[n - 2];
  row.log_t0 = rec.log_t0;
  row.log_t1 = rec.log_t1;
  row.ratio = rec.ratio;
  return row;
}

void write_balance_rows(std::ostream& os, const CoeffTable& table,
                        const LambdaSchedule& schedule,
                        const std::vector<int>& rows) {
  os << "n,lambda_n,kappa_n,alpha_n,t0,t1,ratio\n";
  for (int n : rows) {
    const BalanceRow r = balance_row(table, schedule, n);
    os << r.n << "," << fmt_double(r.lambda_n) << "," << fmt_double(r.log_kappa)
       << "," << fmt_double(r.alpha) << "," << fmt_log_as_decimal(r.log_t0)
       << "," << fmt_log_as_decimal(r.log_t1) << "," << fmt_double(r.ratio)
       << "\n";
  }
}

}  // namespace

void write_sobolev_csv(std::ostream& os, const CoeffTable& table,
                       const LambdaSchedule& schedule, int N) {
  if (N > table.max_degree())
    throw ArgumentError("write_sobolev_csv: N exceeds coefficient table");
  std::vector<int> rows(N + 1);
  for (int n = 0; n <= N; ++n) rows[n] = n;
  write_balance_rows(os, table, schedule, rows);
}

void write_balance_csv(std::ostream& os, const CoeffTable& table,
                       const LambdaSchedule& schedule,
                       const std::vector<int>& grid) {
  write_balance_rows(os, table, schedule, grid);
}

void write_mrs_csv(std::ostream& os, const ExternalField& field,
                   const std::vector<int>& grid, double tol) {
  const MrsNumbers t = mrs_table(field, grid, tol);
  os << "n,a_n\n";
  for (std::size_t i = 0; i < t.n.size(); ++i)
    os << t.n[i] << "," << fmt_double(t.a[i]) << "\n";
}

void write_szego_csv(std::ostream& os, int n,
                     const std::vector<std::complex<double>>& zs) {
  const double a = std::pow(4.0 * n / 3.0, 0.25);
  os << "n,a_n,z,logD_re,logD_im,D_re,D_im\n";
  for (const auto& z : zs) {
    const std::complex<double> lg = szego_log(z, a);
    const std::complex<double> d = std::exp(lg);
    os << n << "," << fmt_double(a) << "," << fmt_complex(z) << ","
       << fmt_double(lg.real()) << "," << fmt_double(lg.imag()) << ","
       << fmt_double(d.real()) << "," << fmt_double(d.imag()) << "\n";
  }
}

std::string report_to_json(const ConvergenceReport& rep) {
  nlohmann::json j;
  j["quantity"] = rep.quantity;
  j["schedule"] = rep.schedule.empty() ? nlohmann::json(nullptr)
                                       : nlohmann::json(rep.schedule);
  j["z"] = rep.z ? nlohmann::json(fmt_complex(*rep.z)) : nlohmann::json(nullptr);
  j["grid"] = rep.grid;
  auto cplx = [](std::complex<double> v) {
    return nlohmann::json{{"re", v.real()}, {"im", v.imag()}};
  };
  nlohmann::json vals = nlohmann::json::array();
  for (const auto& v : rep.values) vals.push_back(cplx(v));
  j["values"] = vals;
  j["extrapolated"] = cplx(rep.extrapolated);
  j["target"] = cplx(rep.target);
  j["deviation_raw"] = rep.deviation_raw;
  j["deviation_extrapolated"] = rep.deviation_extrapolated;
  j["flags"] = rep.flags;
  return j.dump(2) + "\n";
}

}  // namespace freud
