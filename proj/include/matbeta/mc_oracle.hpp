#pragma once

#include <cstdint>
#include <random>

#include "matbeta/symmat.hpp"

namespace matbeta {

// Monte Carlo estimation of P(F > Nabla) for the real case (beta = 1),
// used as an independent cross-check of the series evaluators.
struct McConfig {
  long long samples = 200000;
  std::uint64_t seed = 0;
  int m = 1;
  int nu_h = 1;
  int nu_e = 1;
  void validate() const;  // samples >= 1000, nu_e >= m, dims positive
};

struct McEstimate {
  double estimate = 0.0;
  double std_error = 0.0;
  long long hits = 0;
  long long samples = 0;
};

// One draw from the standard Wishart W_m(nu, I).  Bartlett factorization
// for nu >= m; Gaussian outer product (rank nu) otherwise.
SymMatrix sample_wishart(int m, int nu, std::mt19937_64& rng);

// Share of draws of F = S_E^{-1/2} S_H S_E^{-1/2} that exceed nabla in the
// Loewner order.  Work is split into fixed blocks of 10000 samples whose
// generators are seeded independently from cfg.seed, so the result is
// reproducible bit for bit for a given build and independent of any future
// re-blocking.
McEstimate estimate_upper_prob(const McConfig& cfg, const SymMatrix& nabla);

}  // namespace matbeta
