#include <doctest.h>

#include <random>
#include <vector>

#include "freud/errors.hpp"
#include "freud/kernels.hpp"

using namespace freud;

namespace {

std::vector<double> random_vec(std::mt19937& rng, std::size_t n) {
  std::uniform_real_distribution<double> d(-1.0, 1.0);
  std::vector<double> v(n);
  for (auto& x : v) x = d(rng);
  return v;
}

}  // namespace

TEST_CASE("vector backends agree with the scalar reference") {
  std::mt19937 rng(42);
  const kernels::Backend& ref = kernels::scalar_backend();
  std::vector<const kernels::Backend*> variants;
  if (kernels::avx2_backend()) variants.push_back(kernels::avx2_backend());
  if (kernels::neon_backend()) variants.push_back(kernels::neon_backend());

  for (std::size_t n : {1u, 2u, 3u, 4u, 5u, 7u, 8u, 63u, 64u, 1000u, 1001u}) {
    const auto w = random_vec(rng, n), p = random_vec(rng, n),
               q = random_vec(rng, n);
    const double wd = ref.weighted_dot(w.data(), p.data(), q.data(), n);
    const double dd = ref.dot(p.data(), q.data(), n);
    std::vector<double> out_ref(n);
    ref.recurrence_step(out_ref.data(), w.data(), p.data(), q.data(), 0.321, n);

    for (const auto* v : variants) {
      CAPTURE(v->name);
      CAPTURE(n);
      CHECK(v->weighted_dot(w.data(), p.data(), q.data(), n) ==
            doctest::Approx(wd).epsilon(1e-13));
      CHECK(v->dot(p.data(), q.data(), n) == doctest::Approx(dd).epsilon(1e-13));
      std::vector<double> out(n);
      v->recurrence_step(out.data(), w.data(), p.data(), q.data(), 0.321, n);
      // FMA contraction may differ from the scalar rounding by an ulp
      for (std::size_t i = 0; i < n; ++i) {
        const double bound =
            1e-15 * (std::abs(w[i] * p[i]) + std::abs(0.321 * q[i]));
        CHECK(std::abs(out[i] - out_ref[i]) <= bound);
      }
    }
  }
}

TEST_CASE("dispatch is deterministic and forceable") {
  const char* original = kernels::active().name;
  const auto& a = kernels::active();
  const auto& b = kernels::active();
  CHECK(&a == &b);

  kernels::force_backend("scalar");
  CHECK(std::string(kernels::active().name) == "scalar");
  CHECK_THROWS_AS(kernels::force_backend("sve"), ArgumentError);
  kernels::force_backend(original);
}

TEST_CASE("kernel sums are bit-stable across repeated calls") {
  std::mt19937 rng(7);
  const auto w = random_vec(rng, 777), p = random_vec(rng, 777),
             q = random_vec(rng, 777);
  const auto& k = kernels::active();
  const double first = k.weighted_dot(w.data(), p.data(), q.data(), 777);
  for (int i = 0; i < 5; ++i)
    CHECK(k.weighted_dot(w.data(), p.data(), q.data(), 777) == first);
}
