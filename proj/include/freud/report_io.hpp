#pragma once

// CSV/JSON rendering and the small spec-literal parsers shared by the CLI
// and the tests. All numeric output is full-precision (shortest round-trip)
// and deterministic.

#include <complex>
#include <iosfwd>
#include <string>
#include <vector>

#include "freud/asymptotics.hpp"
#include "freud/coeffs.hpp"
#include "freud/potential.hpp"
#include "freud/sobolev.hpp"

namespace freud {

std::string fmt_double(double v);

// exp(log_e) rendered as m.mmm...e+ddd for arbitrary magnitude (the balance
// terms t0/t1 overflow binary64 at n in the thousands).
std::string fmt_log_as_decimal(double log_e);

// complex literals RE+IMi, no spaces (e.g. 0+2i, 1.5-2e-3i)
std::string fmt_complex(std::complex<double> z);
std::complex<double> parse_complex(const std::string& s);

// grid specs a:b:xK (geometric, inclusive) and a:b:+K (arithmetic)
std::vector<int> parse_grid(const std::string& s);

void write_coeff_csv(std::ostream& os, const CoeffTable& t);
void write_coeff_csv(std::ostream& os, const CoeffTableX& t);

// rows n = 0..N: n,lambda_n,kappa_n,alpha_n,t0,t1,ratio (kappa_n log-scaled,
// alpha_n = alpha_{n-2}(lambda_n), t0/t1 decimal-rendered from logs)
void write_sobolev_csv(std::ostream& os, const CoeffTable& table,
                       const LambdaSchedule& schedule, int N);

// same columns, rows restricted to a grid
void write_balance_csv(std::ostream& os, const CoeffTable& table,
                       const LambdaSchedule& schedule,
                       const std::vector<int>& grid);

void write_mrs_csv(std::ostream& os, const ExternalField& field,
                   const std::vector<int>& grid, double tol);

// rows: z,a_n,logD_re,logD_im,D_re,D_im for the quartic field at degree n
void write_szego_csv(std::ostream& os, int n,
                     const std::vector<std::complex<double>>& zs);

std::string report_to_json(const ConvergenceReport& rep);

}  // namespace freud
