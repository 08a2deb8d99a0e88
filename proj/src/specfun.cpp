#include "matbeta/specfun.hpp"

#include <cmath>
#include <string>

#include "matbeta/errors.hpp"

namespace matbeta {

namespace {
constexpr double kLnPi = 1.1447298858494001741;
constexpr double kZeroFactorTol = 1e-12;
}  // namespace

void AlgebraParam::validate() const {
  if (extended) {
    if (!(beta > 0.0)) throw InvalidInput("AlgebraParam: beta must be positive");
    return;
  }
  if (beta != 1.0 && beta != 2.0 && beta != 4.0 && beta != 8.0)
    throw InvalidInput("AlgebraParam: beta must be 1, 2, 4 or 8 (use extended mode otherwise)");
}

double ln_mv_gamma(int m, double beta, double a) {
  if (m < 1) throw InvalidInput("ln_mv_gamma: m must be >= 1");
  double s = 0.25 * m * (m - 1) * beta * kLnPi;
  for (int i = 1; i <= m; ++i) {
    double arg = a - 0.5 * (i - 1) * beta;
    if (!(arg > 0.0))
      throw DomainError("ln_mv_gamma: argument " + std::to_string(arg) +
                            " not positive at factor " + std::to_string(i),
                        i);
    s += std::lgamma(arg);
  }
  return s;
}

double ln_mv_beta(int m, double beta, double a, double b) {
  return ln_mv_gamma(m, beta, a) + ln_mv_gamma(m, beta, b) -
         ln_mv_gamma(m, beta, a + b);
}

Poch gen_pochhammer(double a, const Partition& kappa, double beta) {
  Poch r;
  for (size_t i = 0; i < kappa.size(); ++i) {
    double base = a - 0.5 * static_cast<double>(i) * beta;
    for (int t = 0; t < kappa[i]; ++t) {
      double f = base + t;
      if (std::fabs(f) < kZeroFactorTol) {
        r.zero = true;
        r.value = 0.0;
        return r;
      }
      r.value *= f;
    }
  }
  return r;
}

PochScaled gen_pochhammer_scaled(double a, const Partition& kappa, double beta) {
  PochScaled r;
  for (size_t i = 0; i < kappa.size(); ++i) {
    double base = a - 0.5 * static_cast<double>(i) * beta;
    for (int t = 0; t < kappa[i]; ++t) {
      double f = base + t;
      if (std::fabs(f) < kZeroFactorTol) {
        r.zero = true;
        r.value = Scaled::zero();
        return r;
      }
      r.value *= f;
    }
  }
  return r;
}

}  // namespace matbeta
