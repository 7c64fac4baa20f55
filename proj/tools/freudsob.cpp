// freudsob: tables, constructions, diagnostics and verification sweeps for
// Freud-Sobolev orthogonal polynomials under varying penalty schedules.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "freud/asymptotics.hpp"
#include "freud/coeffs.hpp"
#include "freud/potential.hpp"
#include "freud/report_io.hpp"
#include "freud/sobolev.hpp"

namespace {

struct GlobalOpts {
  std::string precision;  // resolved: "std" or "ext<digits>"
  unsigned ext_digits = 0;
  int threads = 1;
  std::string out_path;
};

// key = value lines, '#' comments
std::map<std::string, std::string> read_config(const std::string& path) {
  std::map<std::string, std::string> kv;
  std::ifstream in(path);
  if (!in) throw freud::ArgumentError("config: cannot open '" + path + "'");
  std::string line;
  auto trim = [](std::string s) {
    const auto a = s.find_first_not_of(" \t\r");
    const auto b = s.find_last_not_of(" \t\r");
    return (a == std::string::npos) ? std::string() : s.substr(a, b - a + 1);
  };
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const auto eq = line.find('=');
    if (eq == std::string::npos) continue;
    const std::string key = trim(line.substr(0, eq));
    const std::string val = trim(line.substr(eq + 1));
    if (!key.empty()) kv[key] = val;
  }
  return kv;
}

unsigned parse_precision(const std::string& spec) {
  if (spec == "std") return 0;
  if (spec.rfind("ext", 0) == 0) {
    const std::string d = spec.substr(3);
    unsigned digits = 60;
    if (!d.empty()) {
      try {
        digits = static_cast<unsigned>(std::stoul(d));
      } catch (const std::exception&) {
        throw freud::ArgumentError("precision: malformed '" + spec + "'");
      }
    }
    if (digits < 50 || digits > 1000)
      throw freud::ArgumentError("precision: ext digits must be in [50, 1000]");
    return digits;
  }
  throw freud::ArgumentError("precision must be std or ext<digits>, got '" +
                             spec + "'");
}

void emit(const GlobalOpts& g, const std::string& payload) {
  if (g.out_path.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream out(g.out_path, std::ios::binary | std::ios::trunc);
  if (!out) throw freud::ArgumentError("cannot open output '" + g.out_path + "'");
  out << payload;
  if (!out) {
    out.close();
    std::remove(g.out_path.c_str());
    throw freud::NumericError("write failed for '" + g.out_path + "'");
  }
}

double string_tol(int N) { return std::max(1e-11, 1e-14 * N); }

freud::CoeffTable table_for(int N) {
  return freud::solve_string_system<double>(N, string_tol(N));
}

freud::ExternalField field_by_name(const std::string& name) {
  if (name == "freud4") return freud::quartic_field();
  if (name == "hermite") return freud::hermite_field();
  if (name.rfind("power:", 0) == 0) {
    std::stringstream ss(name.substr(6));
    std::string tok;
    std::vector<double> v;
    while (std::getline(ss, tok, ':')) v.push_back(std::stod(tok));
    if (v.empty() || v.size() > 2)
      throw freud::ArgumentError("field: expected power:<m>[:<c>]");
    return freud::power_field(v[0], v.size() == 2 ? v[1] : 1.0);
  }
  throw freud::ArgumentError("field: unknown '" + name +
                             "' (freud4|hermite|power:<m>[:<c>])");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Freud-Sobolev orthogonal polynomials for exp(-x^4): recurrence tables, "
      "Sobolev constructions, MRS numbers, Szego functions and asymptotic "
      "verification sweeps"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand

  std::string precision_flag, config_path, out_path, format_flag;
  int threads_flag = 0;
  app.add_option("--precision", precision_flag, "arithmetic mode: std | ext<digits>");
  app.add_option("--threads", threads_flag, "sweep parallelism cap (default 1)");
  app.add_option("--out", out_path, "output path (default stdout)");
  app.add_option("--format", format_flag, "output format: csv | json");
  app.add_option("--config", config_path, "config file (key = value lines)");

  // coeffs
  auto* c_coeffs = app.add_subcommand("coeffs", "recurrence coefficients CSV");
  int coeffs_n = 0;
  double coeffs_tol = 0.0;
  c_coeffs->add_option("--n", coeffs_n, "table length")->required();
  c_coeffs->add_option("--tol", coeffs_tol, "string-system residual tolerance");

  // sobolev
  auto* c_sob = app.add_subcommand("sobolev", "Sobolev table CSV (per degree)");
  int sob_n = 64;
  std::string sob_schedule = "power:1:-1.5";
  c_sob->add_option("--n", sob_n, "max degree (default 64)");
  c_sob->add_option("--schedule", sob_schedule,
                    "power:<L>:<e> | const:<c> | file:<path>");

  // mrs
  auto* c_mrs = app.add_subcommand("mrs", "Mhaskar-Rakhmanov-Saff numbers CSV");
  std::string mrs_field = "freud4", mrs_grid = "1:8192:x2";
  double mrs_tol = 1e-12;
  c_mrs->add_option("--field", mrs_field, "freud4 | hermite | power:<m>[:<c>]");
  c_mrs->add_option("--grid", mrs_grid, "n grid, a:b:xK or a:b:+K");
  c_mrs->add_option("--tol", mrs_tol, "relative root tolerance");

  // szego
  auto* c_szego = app.add_subcommand("szego", "Szego function values CSV");
  int szego_n = 16;
  std::vector<std::string> szego_z;
  c_szego->add_option("--n", szego_n, "degree (sets a_n = (4n/3)^{1/4})");
  c_szego->add_option("--z", szego_z, "evaluation points RE+IMi (repeatable)")
      ->required();

  // balance
  auto* c_bal = app.add_subcommand("balance", "balance diagnostic CSV over a grid");
  std::string bal_schedule, bal_grid = "64:4096:x2";
  c_bal->add_option("--schedule", bal_schedule, "lambda schedule")->required();
  c_bal->add_option("--grid", bal_grid, "n grid");

  // verify
  auto* c_ver = app.add_subcommand("verify", "convergence verification JSON");
  std::string ver_what, ver_schedule, ver_z, ver_grid;
  c_ver
      ->add_option("what", ver_what,
                   "prop1|theorem1|lemma1|strong|ratio|norms|sninfty")
      ->required();
  c_ver->add_option("--schedule", ver_schedule, "lambda schedule");
  c_ver->add_option("--z", ver_z, "evaluation point RE+IMi");
  c_ver->add_option("--grid", ver_grid, "n grid, a:b:xK");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  try {
    GlobalOpts g;
    std::map<std::string, std::string> cfg;
    if (!config_path.empty()) cfg = read_config(config_path);

    // precedence: flag > environment > config > default
    std::string prec = "std";
    if (cfg.count("precision")) prec = cfg["precision"];
    if (const char* env = std::getenv("FREUDSOB_PRECISION")) prec = env;
    if (!precision_flag.empty()) prec = precision_flag;
    g.ext_digits = parse_precision(prec);
    g.precision = prec;

    g.threads = 1;
    if (cfg.count("threads")) g.threads = std::stoi(cfg["threads"]);
    if (threads_flag > 0) g.threads = threads_flag;
    if (g.threads < 1) throw freud::ArgumentError("threads must be >= 1");
    g.out_path = out_path;

    auto check_format = [&](const char* natural) {
      if (!format_flag.empty() && format_flag != natural)
        throw freud::ArgumentError(std::string("this subcommand emits ") +
                                   natural + ", not " + format_flag);
    };

    std::ostringstream payload;

    if (*c_coeffs) {
      check_format("csv");
      if (coeffs_n < 2) throw freud::ArgumentError("coeffs: --n must be >= 2");
      if (g.ext_digits > 0) {
        freud::PrecisionGuard guard(g.ext_digits);
        freud::ext_real tol = coeffs_tol > 0
                                  ? freud::ext_real(coeffs_tol)
                                  : pow(freud::ext_real(10),
                                        -static_cast<int>(g.ext_digits) + 8);
        const auto t = freud::solve_string_system<freud::ext_real>(coeffs_n, tol);
        freud::write_coeff_csv(payload, t);
      } else {
        const double tol = coeffs_tol > 0 ? coeffs_tol : string_tol(coeffs_n);
        const auto t = freud::solve_string_system<double>(coeffs_n, tol);
        freud::write_coeff_csv(payload, t);
      }
    } else if (*c_sob) {
      check_format("csv");
      if (g.ext_digits > 0)
        throw freud::ArgumentError("sobolev: extended precision not supported here (use coeffs)");
      if (sob_n < 3) throw freud::ArgumentError("sobolev: --n must be >= 3");
      const auto schedule = freud::LambdaSchedule::parse(sob_schedule);
      const auto table = table_for(sob_n);
      freud::write_sobolev_csv(payload, table, schedule, sob_n);
    } else if (*c_mrs) {
      check_format("csv");
      if (g.ext_digits > 0)
        throw freud::ArgumentError("mrs: extended precision not supported here");
      const auto field = field_by_name(mrs_field);
      const auto grid = freud::parse_grid(mrs_grid);
      freud::write_mrs_csv(payload, field, grid, mrs_tol);
    } else if (*c_szego) {
      check_format("csv");
      if (g.ext_digits > 0)
        throw freud::ArgumentError("szego: extended precision not supported here");
      if (szego_n < 1) throw freud::ArgumentError("szego: --n must be >= 1");
      std::vector<std::complex<double>> zs;
      for (const auto& s : szego_z) zs.push_back(freud::parse_complex(s));
      freud::write_szego_csv(payload, szego_n, zs);
    } else if (*c_bal) {
      check_format("csv");
      if (g.ext_digits > 0)
        throw freud::ArgumentError("balance: extended precision not supported here");
      const auto schedule = freud::LambdaSchedule::parse(bal_schedule);
      const auto grid = freud::parse_grid(bal_grid);
      const auto table = table_for(grid.back());
      freud::write_balance_csv(payload, table, schedule, grid);
    } else if (*c_ver) {
      check_format("json");
      if (g.ext_digits > 0)
        throw freud::ArgumentError("verify: sweeps run in std precision");
      freud::SweepOptions sweep{g.threads};

      auto need_schedule = [&]() {
        if (ver_schedule.empty())
          throw freud::ArgumentError("verify " + ver_what + ": --schedule required");
        return freud::LambdaSchedule::parse(ver_schedule);
      };
      auto z_or = [&](const char* dflt) {
        const std::complex<double> z =
            freud::parse_complex(ver_z.empty() ? dflt : ver_z);
        if (z.imag() == 0.0)
          throw freud::ArgumentError("verify " + ver_what +
                                     ": z must have nonzero imaginary part");
        return z;
      };
      auto grid_or = [&](const char* dflt) {
        return freud::parse_grid(ver_grid.empty() ? dflt : ver_grid);
      };

      freud::ConvergenceReport rep;
      if (ver_what == "prop1") {
        const auto grid = grid_or("128:8192:x2");
        rep = freud::verify_prop1(table_for(grid.back()), need_schedule(), grid,
                                  sweep);
      } else if (ver_what == "sninfty") {
        const auto grid = grid_or("128:8192:x2");
        rep = freud::verify_sn_infty(table_for(grid.back()), need_schedule(),
                                     grid, sweep);
      } else if (ver_what == "theorem1") {
        const auto grid = grid_or("128:65536:x2");
        rep = freud::verify_theorem1(table_for(grid.back()), need_schedule(),
                                     z_or("0+2i"), grid, sweep);
      } else if (ver_what == "lemma1") {
        const auto grid = grid_or("128:4096:x2");
        rep = freud::verify_lemma1(table_for(grid.back()), need_schedule(),
                                   z_or("0+2i"), grid, sweep);
      } else if (ver_what == "strong") {
        const auto grid = grid_or("128:2048:x2");
        rep = freud::verify_strong_asymptotics(table_for(grid.back()),
                                               z_or("0+1i"), grid, sweep);
      } else if (ver_what == "ratio") {
        const auto grid = grid_or("128:65536:x2");
        rep = freud::verify_pn_ratio(table_for(grid.back()), z_or("0+2i"), grid,
                                     sweep);
      } else if (ver_what == "norms") {
        const auto grid = grid_or("64:4096:x2");
        rep = freud::verify_norm_ratio(table_for(grid.back()), grid);
      } else {
        throw freud::ArgumentError("verify: unknown quantity '" + ver_what + "'");
      }
      payload << freud::report_to_json(rep);
    }

    emit(g, payload.str());
    return 0;
  } catch (const freud::ArgumentError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
