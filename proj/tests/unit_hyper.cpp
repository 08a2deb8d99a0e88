#include <cmath>
#include <random>
#include <vector>

#include "doctest.h"
#include "matbeta/errors.hpp"
#include "matbeta/hyper.hpp"

using namespace matbeta;

namespace {

const AlgebraParam kReal{1.0, false};

double scalar_2f1(double a, double b, double c, double x, int kmax = 400) {
  double s = 1.0, t = 1.0;
  for (int k = 0; k < kmax; ++k) {
    t *= (a + k) * (b + k) / ((c + k) * (k + 1)) * x;
    s += t;
  }
  return s;
}

}  // namespace

TEST_SUITE_BEGIN("hyper");

TEST_CASE("0F0 equals exp of the trace") {
  std::mt19937_64 rng(71);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  for (int m : {1, 2, 3}) {
    for (double beta : {1.0, 2.0, 4.0}) {
      std::vector<double> x(m);
      double tr = 0;
      for (auto& v : x) {
        v = u(rng);
        tr += v;
      }
      auto r = hyp_pfq({}, {}, x, AlgebraParam{beta, false});
      CHECK(r.status == SeriesStatus::Converged);
      CHECK(r.value.value() == doctest::Approx(std::exp(tr)).epsilon(1e-11));
    }
  }
}

TEST_CASE("1F0 equals a power of the complementary determinant") {
  std::mt19937_64 rng(73);
  std::uniform_real_distribution<double> u(-0.8, 0.8);
  for (int m : {1, 2, 3}) {
    for (double beta : {1.0, 2.0, 4.0}) {
      std::vector<double> x(m);
      double ld = 0;
      for (auto& v : x) {
        v = u(rng);
        ld += std::log1p(-v);
      }
      double a = 1.0 + 3.0 * std::generate_canonical<double, 53>(rng);
      auto r = hyp_pfq({a}, {}, x, AlgebraParam{beta, false});
      CHECK((r.status == SeriesStatus::Converged ||
             r.status == SeriesStatus::Truncated));
      CHECK(r.value.value() == doctest::Approx(std::exp(-a * ld)).epsilon(1e-9));
    }
  }
}

TEST_CASE("single variable 2F1 matches the scalar series") {
  for (double x : {-0.6, -0.2, 0.3, 0.55}) {
    for (double beta : {1.0, 7.3}) {  // one variable: beta must drop out
      AlgebraParam alg{beta, beta != 1.0};
      auto r = hyp_pfq({0.7, 1.9}, {2.3}, {x}, alg);
      CHECK(r.value.value() ==
            doctest::Approx(scalar_2f1(0.7, 1.9, 2.3, x)).epsilon(1e-11));
    }
  }
}

TEST_CASE("Kummer transform of 1F1 at a two by two argument") {
  std::vector<double> x{0.8, -0.4}, nx{-0.8, 0.4};
  double a = 1.3, c = 2.6;
  for (double beta : {1.0, 2.0}) {
    AlgebraParam alg{beta, false};
    auto lhs = hyp_pfq({a}, {c}, x, alg);
    auto rhs = hyp_pfq({c - a}, {c}, nx, alg);
    CHECK(lhs.status == SeriesStatus::Converged);
    CHECK(lhs.value.value() ==
          doctest::Approx(std::exp(x[0] + x[1]) * rhs.value.value()).epsilon(1e-10));
  }
}

TEST_CASE("Euler transform of 2F1 at a matrix argument") {
  std::vector<double> x{0.35, 0.1, -0.2};
  double a = 0.9, b = 1.4, c = 3.1;
  for (double beta : {1.0, 4.0}) {
    AlgebraParam alg{beta, false};
    auto lhs = hyp_pfq({a, b}, {c}, x, alg);
    auto rhs = hyp_pfq({c - a, c - b}, {c}, x, alg);
    double ld = 0;
    for (double v : x) ld += std::log1p(-v);
    CHECK(lhs.value.value() ==
          doctest::Approx(std::exp((c - a - b) * ld) * rhs.value.value())
              .epsilon(1e-10));
  }
}

TEST_CASE("upper parameter zero terminates at degree zero with sum one") {
  auto r = hyp_pfq({0.0, 1.7}, {2.9}, {0.9, 0.5}, kReal);
  CHECK(r.status == SeriesStatus::Terminated);
  CHECK(r.terminating);
  CHECK(r.termination_degree == 0);
  CHECK(r.degree == 0);
  CHECK(r.tail_estimate == 0.0);
  CHECK(r.value.value() == 1.0);
}

TEST_CASE("negative integer upper parameter gives an exact polynomial") {
  // -3 kills every partition with a first row beyond 3: degree caps at 3*m
  std::vector<double> x{0.7, 0.3};
  auto r = hyp_pfq({-3.0, 1.1}, {2.4}, x, kReal);
  CHECK(r.status == SeriesStatus::Terminated);
  CHECK(r.termination_degree == 6);
  CHECK(r.tail_estimate == 0.0);

  // assemble the same polynomial directly from the table
  auto t = jack_table(x, kReal, 6);
  double sum = 0.0, kfact = 1.0;
  for (int k = 0; k <= 6; ++k) {
    if (k) kfact *= k;
    for (size_t i = 0; i < t.parts[k].size(); ++i) {
      auto pa = gen_pochhammer(-3.0, t.parts[k][i], 1.0);
      auto pb = gen_pochhammer(1.1, t.parts[k][i], 1.0);
      auto pc = gen_pochhammer(2.4, t.parts[k][i], 1.0);
      if (pa.zero) continue;
      sum += pa.value * pb.value / pc.value * t.cvals[k][i].to_double() / kfact;
    }
  }
  CHECK(r.value.value() == doctest::Approx(sum).epsilon(1e-11));

  // the polynomial evaluates beyond the unit disk where the full series
  // would diverge
  auto far = hyp_pfq({-3.0, 1.1}, {2.4}, {5.0, 2.0}, kReal);
  CHECK(far.status == SeriesStatus::Terminated);
  CHECK(far.radius == doctest::Approx(5.0));
}

TEST_CASE("radius beyond one diverges immediately for 2F1") {
  auto r = hyp_pfq({0.7, 1.9}, {2.3}, {1.2, 0.3}, kReal);
  CHECK(r.status == SeriesStatus::Diverged);
  CHECK(r.degree == 0);
  CHECK(r.radius == doctest::Approx(1.2));
  CHECK(r.value.value() == 1.0);  // only the degree zero block entered
}

TEST_CASE("2F0 diverges for any nonzero argument unless it terminates") {
  auto r = hyp_pfq({0.7, 1.9}, {}, {0.05}, kReal);
  CHECK(r.status == SeriesStatus::Diverged);
  CHECK(r.degree == 0);
  auto t = hyp_pfq({-2.0, 1.9}, {}, {0.05}, kReal);
  CHECK(t.status == SeriesStatus::Terminated);
}

TEST_CASE("boundary radius caps convergent status at truncated") {
  // scalar Gauss point x = 1 with c - a - b > 0: the sum converges in
  // truth, but a boundary radius is never promoted past truncated
  auto r = hyp_pfq({0.3, 0.4}, {2.0}, {1.0}, kReal);
  CHECK(r.status == SeriesStatus::Truncated);
  double gauss = std::exp(std::lgamma(2.0) + std::lgamma(2.0 - 0.3 - 0.4) -
                          std::lgamma(2.0 - 0.3) - std::lgamma(2.0 - 0.4));
  CHECK(r.value.value() == doctest::Approx(gauss).epsilon(1e-2));
}

TEST_CASE("growing blocks at boundary radius flag divergence") {
  // terms grow like k^(a+b-c-1) = k^1.5 here
  auto r = hyp_pfq({2.0, 2.0}, {1.5}, {1.0}, kReal);
  CHECK(r.status == SeriesStatus::Diverged);
  CHECK(r.degree >= 10);
  CHECK(r.degree < 200);
}

TEST_CASE("catastrophic cancellation is reported as divergence") {
  // true value of 1F1(1/2; 3/2; -50) is about 0.125, reached through
  // terms near e^50
  auto r = hyp_pfq({0.5}, {1.5}, {-50.0}, kReal);
  CHECK(r.status == SeriesStatus::Diverged);
  CHECK(r.significance_loss > 1e8);
}

TEST_CASE("moderate alternating sums stay converged") {
  // 1F1(1/2; 3/2; -4): loss stays far below the limit
  auto r = hyp_pfq({0.5}, {1.5}, {-4.0}, kReal);
  CHECK(r.status == SeriesStatus::Converged);
  double z = 2.0;  // x = -z^2
  double target = std::sqrt(M_PI) * std::erf(z) / (2.0 * z);
  CHECK(r.value.value() == doctest::Approx(target).epsilon(1e-11));
  CHECK(r.significance_loss < 1e4);
}

TEST_CASE("lower parameter poles are rejected up front") {
  CHECK_THROWS_AS(hyp_pfq({0.7}, {0.0}, {0.3}, kReal), BadLowerParameter);
  CHECK_THROWS_AS(hyp_pfq({0.7}, {-2.0}, {0.3}, kReal), BadLowerParameter);
  // second row factor b - beta/2 = 0 at m = 2
  AlgebraParam two{2.0, false};
  CHECK_THROWS_AS(hyp_pfq({0.7}, {1.0}, {0.3, 0.1}, two), BadLowerParameter);
  // the same b is fine with one variable
  CHECK_NOTHROW(hyp_pfq({0.7}, {1.0}, {0.3}, two));
  // a terminating numerator does not lift the precheck
  CHECK_THROWS_AS(hyp_pfq({-1.0}, {-2.0}, {0.3}, kReal), BadLowerParameter);
}

TEST_CASE("degree cap and stall controls") {
  SeriesControl ctl;
  ctl.max_degree = 7;
  auto r = hyp_pfq({1.5}, {}, {0.9}, kReal, ctl);
  CHECK(r.status == SeriesStatus::Truncated);
  CHECK(r.degree == 7);
  CHECK(r.tail_estimate > 0.0);

  SeriesControl loose;
  loose.rel_tol = 1e-4;
  auto fast = hyp_pfq({1.5}, {}, {0.5}, kReal, loose);
  auto tight = hyp_pfq({1.5}, {}, {0.5}, kReal);
  CHECK(fast.status == SeriesStatus::Converged);
  CHECK(tight.status == SeriesStatus::Converged);
  CHECK(fast.degree < tight.degree);
  CHECK(fast.value.value() == doctest::Approx(std::pow(0.5, -1.5)).epsilon(1e-3));
  CHECK(tight.value.value() == doctest::Approx(std::pow(0.5, -1.5)).epsilon(1e-11));
}

TEST_CASE("slowly decaying tails inside the disk stay accurate") {
  auto r = hyp_pfq({1.5}, {}, {0.9}, kReal);
  CHECK(r.status == SeriesStatus::Truncated);  // no stall within 200 degrees
  CHECK(r.degree == 200);
  CHECK(r.value.value() == doctest::Approx(std::pow(0.1, -1.5)).epsilon(1e-8));
}

TEST_CASE("zero argument sums to one") {
  auto r = hyp_pfq({0.7, 1.9}, {2.3}, {0.0, 0.0}, kReal);
  CHECK(r.status == SeriesStatus::Converged);
  CHECK(r.value.value() == 1.0);
  CHECK(r.radius == 0.0);
}

TEST_SUITE_END();
