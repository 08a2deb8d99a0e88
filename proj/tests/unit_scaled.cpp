#include <cmath>
#include <random>

#include "doctest.h"
#include "matbeta/scaled.hpp"

using matbeta::LogSigned;
using matbeta::Scaled;

TEST_SUITE_BEGIN("scaled");

TEST_CASE("roundtrip through double") {
  for (double v : {0.0, 1.0, -1.0, 3.25e10, -7.5e-120, 1e299, -1e-299}) {
    CHECK(Scaled::from_double(v).to_double() == v);
  }
}

TEST_CASE("multiplication matches double arithmetic in range") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-30.0, 30.0);
  for (int t = 0; t < 200; ++t) {
    double a = std::exp(u(rng)) * (t % 2 ? 1 : -1);
    double b = std::exp(u(rng));
    Scaled p = Scaled::from_double(a) * Scaled::from_double(b);
    CHECK(p.to_double() == doctest::Approx(a * b).epsilon(1e-15));
  }
}

TEST_CASE("products far beyond double range keep exact logs") {
  Scaled p = Scaled::one();
  for (int i = 0; i < 200; ++i) p *= 1e20;
  CHECK(p.log_abs() == doctest::Approx(4000.0 * std::log(10.0)).epsilon(1e-14));
  CHECK(p.sign() == 1);
  for (int i = 0; i < 500; ++i) p *= -1e-20;
  CHECK(p.log_abs() == doctest::Approx(-6000.0 * std::log(10.0)).epsilon(1e-14));
  CHECK(p.sign() == 1);  // even count of sign flips
}

TEST_CASE("addition aligns exponents") {
  Scaled a(1.0, 1000);
  Scaled b(1.0, 990);
  Scaled s = a + b;
  // 2^1000 + 2^990 = 2^990 * (1024 + 1)
  CHECK(s.log_abs() ==
        doctest::Approx(990.0 * std::log(2.0) + std::log(1025.0)).epsilon(1e-14));

  CHECK((Scaled::zero() + a).log_abs() == doctest::Approx(a.log_abs()));
  CHECK((a + Scaled::zero()).log_abs() == doctest::Approx(a.log_abs()));

  // far-apart magnitudes: the small addend is absorbed
  Scaled tiny(1.0, -5000);
  CHECK((a + tiny).log_abs() == doctest::Approx(a.log_abs()));
}

TEST_CASE("cancellation to zero") {
  Scaled a = Scaled::from_double(3.5);
  Scaled z = a - a;
  CHECK(z.is_zero());
  CHECK(z.sign() == 0);
  CHECK(z.to_double() == 0.0);
}

TEST_CASE("log_abs and sign agree with std::log") {
  for (double v : {2.0, 0.3, 1e-10, 123456.0}) {
    CHECK(Scaled::from_double(v).log_abs() == doctest::Approx(std::log(v)).epsilon(1e-15));
    CHECK(Scaled::from_double(-v).log_abs() == doctest::Approx(std::log(v)).epsilon(1e-15));
    CHECK(Scaled::from_double(-v).sign() == -1);
  }
}

TEST_CASE("abs_less orders by magnitude") {
  CHECK(matbeta::abs_less(Scaled::from_double(2.0), Scaled::from_double(-3.0)));
  CHECK_FALSE(matbeta::abs_less(Scaled::from_double(-3.0), Scaled::from_double(2.0)));
  CHECK(matbeta::abs_less(Scaled::zero(), Scaled::from_double(1e-300)));
  CHECK_FALSE(matbeta::abs_less(Scaled::from_double(1.0), Scaled::zero()));
}

TEST_CASE("LogSigned carries sign and log") {
  LogSigned l = LogSigned::from_scaled(Scaled::from_double(-0.125));
  CHECK(l.sign == -1);
  CHECK(l.value() == doctest::Approx(-0.125).epsilon(1e-15));
  CHECK(LogSigned::from_scaled(Scaled::zero()).value() == 0.0);
}

TEST_SUITE_END();
