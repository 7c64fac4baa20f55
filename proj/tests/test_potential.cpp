#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "freud/potential.hpp"
#include "oracle_values.hpp"

using namespace freud;
using cd = std::complex<double>;

TEST_CASE("MRS closed forms and the numeric solver agree") {
  const auto quartic = quartic_field();
  CHECK(mrs_number(quartic, 3.0) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-10));

  const auto hermite = hermite_field();
  CHECK(mrs_number(hermite, 4.0) == doctest::Approx(std::sqrt(8.0)).epsilon(1e-10));

  for (const auto& field : {quartic_field(), hermite_field(), power_field(6.0)}) {
    for (double n : {1.0, 5.0, 1e2, 1e3, 1e4}) {
      CAPTURE(field.name);
      CAPTURE(n);
      CHECK(mrs_number(field, n) ==
            doctest::Approx(field.closed_form_mrs(n)).epsilon(1e-10));
    }
  }
}

TEST_CASE("MRS numbers increase strictly in n") {
  const auto field = quartic_field();
  double prev = 0.0;
  for (int n = 1; n <= 100; ++n) {
    const double a = mrs_number(field, n);
    CHECK(a > prev);
    prev = a;
  }
}

TEST_CASE("mrs_table carries a strictly increasing sequence") {
  const MrsNumbers t = mrs_table(quartic_field(), {1, 2, 4, 8, 16, 32});
  for (std::size_t i = 1; i < t.a.size(); ++i) CHECK(t.a[i] > t.a[i - 1]);
  CHECK(t.a[2] == doctest::Approx(std::sqrt(2.0) * std::pow(4.0, 0.25) /
                                  std::pow(3.0, 0.25))
                      .epsilon(1e-10));  // a_4 = (16/3)^{1/4}
}

TEST_CASE("mrs argument and domain guards") {
  CHECK_THROWS_AS(mrs_number(quartic_field(), 0.0), ArgumentError);
  CHECK_THROWS_AS(mrs_number(quartic_field(), -3.0), ArgumentError);
}

TEST_CASE("phi: values, branch, inverse identity") {
  CHECK(phi(cd(1.25, 0)) == cd(2.0, 0.0));
  CHECK(std::abs(phi(cd(23.0 / 12.0, 0)) - cd(oracle::kPhi23Over12, 0)) < 1e-14);

  std::mt19937 rng(17);
  std::uniform_real_distribution<double> d(-3.0, 3.0);
  for (int trial = 0; trial < 40; ++trial) {
    cd z(d(rng), d(rng));
    if (std::abs(z.imag()) < 1e-3) z += cd(0, 0.5);
    const cd f = phi(z);
    CHECK(std::abs(f) > 1.0);
    CHECK((f.imag() > 0) == (z.imag() > 0));
    const cd inv = f * (z - std::sqrt(z - 1.0) * std::sqrt(z + 1.0));
    CHECK(std::abs(inv - cd(1, 0)) <= 1e-14 * std::abs(f));
  }
  CHECK_THROWS_AS(phi(cd(0.5, 0)), DomainError);
  CHECK_THROWS_AS(phi(cd(-1.0, 0)), DomainError);
  CHECK_NOTHROW(phi(cd(1.5, 0)));
}

TEST_CASE("szego closed form against the quadrature oracle") {
  for (int n : {3, 16, 100}) {
    const double a = std::pow(4.0 * n / 3.0, 0.25);
    for (const cd& z : {cd(0, 2 * a), cd(1.5 * a, a), cd(-0.7 * a, -1.3 * a)}) {
      const cd closed = szego_log(z, a);
      const cd quad = szego_log_quad(z, a, 256);
      CAPTURE(n);
      CAPTURE(z.real());
      CHECK(std::abs(closed - quad) <= 1e-8 * std::max(1.0, std::abs(closed)));
      CHECK(std::abs(szego_fn(z, a) - std::exp(quad)) <=
            1e-8 * std::abs(szego_fn(z, a)));
    }
  }
}

TEST_CASE("szego far field tends to exp(-n/4)") {
  for (int n : {1, 2, 4, 8}) {
    const double a = std::pow(4.0 * n / 3.0, 0.25);
    const cd z = 1e3 * a * cd(1.0, 0.5);
    const cd d = szego_fn(z, a);
    const double want = std::exp(-n / 4.0);
    CAPTURE(n);
    CHECK(std::abs(d - cd(want, 0)) <= 1e-6 * want);
  }
}

TEST_CASE("szego boundary modulus |D(x+ie)|^2 -> W^2(x)") {
  const int n = 16;
  const double a = std::pow(4.0 * n / 3.0, 0.25);
  const double x = a / 2;
  const cd d = szego_fn(cd(x, 1e-6), a);
  const double got = std::norm(d);
  const double want = std::exp(-x * x * x * x);
  CHECK(std::abs(got - want) <= 1e-3 * want);
}

TEST_CASE("szego domain guards") {
  CHECK_THROWS_AS(szego_log(cd(0.1, 0), 1.0), DomainError);
  CHECK_THROWS_AS(szego_log_quad(cd(0.9, 0), 1.0), DomainError);
  CHECK_NOTHROW(szego_log(cd(1.1, 0), 1.0));
}

TEST_CASE("rescaled weight and its limit") {
  CHECK(rescaled_weight(5, 0.0) == 1.0);
  CHECK(rescaled_weight(50000, 0.0) == 1.0);
  CHECK(rescaled_weight_limit(0.99999) ==
        doctest::Approx(oracle::kExpM2Over3).epsilon(1e-4));
  const double t = 0.5;
  CHECK(std::abs(rescaled_weight(10000, t) - rescaled_weight_limit(t)) < 1e-3);
  CHECK_THROWS_AS(rescaled_weight(5, 1.0), ArgumentError);
  CHECK_THROWS_AS(rescaled_weight(0, 0.5), ArgumentError);
}

TEST_CASE("balance exponents: quartic standard and Hermite coherent") {
  const auto q = balance_exponent(quartic_field(), BalanceMode::standard);
  CHECK(q.power_law);
  CHECK(q.gamma == doctest::Approx(0.25).epsilon(1e-7));
  CHECK(q.exponent == doctest::Approx(-1.5).epsilon(1e-7));

  const auto h = balance_exponent(hermite_field(), BalanceMode::coherent_hermite);
  CHECK(h.power_law);
  CHECK(h.gamma == doctest::Approx(0.5).epsilon(1e-7));
  CHECK(std::abs(h.exponent) < 1e-7);

  // general x^m fields: e = 2/m - 2 under the standard balance
  for (double m : {2.0, 4.0, 6.0}) {
    const auto r = balance_exponent(power_field(m), BalanceMode::standard);
    CHECK(r.exponent == doctest::Approx(2.0 / m - 2.0).epsilon(1e-6));
  }
}
