#pragma once

// One scalar abstraction, two arithmetic modes: plain binary64 ("std") and
// MPFR-backed floating point with runtime-selectable decimal digits ("ext").
// Everything numeric in the library is templated on the scalar type; the
// extended mode is used by the oracles.

#include <boost/multiprecision/mpfr.hpp>

#include <cmath>
#include <string>

namespace freud {

using ext_real = boost::multiprecision::mpfr_float;

// RAII guard for the ext_real working precision (decimal digits).
class PrecisionGuard {
 public:
  explicit PrecisionGuard(unsigned digits10)
      : saved_(ext_real::default_precision()) {
    ext_real::default_precision(digits10);
  }
  ~PrecisionGuard() { ext_real::default_precision(saved_); }
  PrecisionGuard(const PrecisionGuard&) = delete;
  PrecisionGuard& operator=(const PrecisionGuard&) = delete;

 private:
  unsigned saved_;
};

inline double to_double(double x) { return x; }
inline double to_double(const ext_real& x) { return x.convert_to<double>(); }

inline double gamma_fn(double x) { return std::tgamma(x); }
inline ext_real gamma_fn(const ext_real& x) { return tgamma(x); }

template <class R>
R scalar_epsilon();
template <>
inline double scalar_epsilon<double>() {
  return std::numeric_limits<double>::epsilon();
}
template <>
inline ext_real scalar_epsilon<ext_real>() {
  ext_real e = pow(ext_real(10), -static_cast<int>(ext_real::default_precision()));
  return e;
}

template <class R>
std::string precision_tag();
template <>
inline std::string precision_tag<double>() {
  return "std";
}
template <>
inline std::string precision_tag<ext_real>() {
  return "ext" + std::to_string(ext_real::default_precision());
}

// Minimal complex pair over any real scalar. std::complex is only specified
// for the builtin floating types, so the extended oracles use this instead.
template <class R>
struct Cplx {
  R re{}, im{};

  Cplx() = default;
  Cplx(R r, R i) : re(std::move(r)), im(std::move(i)) {}
  explicit Cplx(R r) : re(std::move(r)), im(R(0)) {}

  Cplx operator+(const Cplx& o) const { return {re + o.re, im + o.im}; }
  Cplx operator-(const Cplx& o) const { return {re - o.re, im - o.im}; }
  Cplx operator*(const Cplx& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
  Cplx operator*(const R& s) const { return {re * s, im * s}; }
  R abs2() const { return re * re + im * im; }
};

}  // namespace freud
