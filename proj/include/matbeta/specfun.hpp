#pragma once

#include "matbeta/partitions.hpp"
#include "matbeta/scaled.hpp"

namespace matbeta {

// Division algebra dimension parameter.  beta in {1,2,4,8} normally;
// extended mode admits any beta > 0.
struct AlgebraParam {
  double beta = 1.0;
  bool extended = false;

  void validate() const;
};

// log of the multivariate gamma function with m factors:
//   pi^(m(m-1) beta / 4) * prod_{i=1..m} Gamma(a - (i-1) beta / 2).
// Every shifted argument must be positive; DomainError carries the first
// offending factor index (1-based) otherwise.
double ln_mv_gamma(int m, double beta, double a);

// log of the multivariate beta function; symmetric in (a, b).
double ln_mv_beta(int m, double beta, double a, double b);

struct Poch {
  double value = 1.0;
  bool zero = false;  // some factor vanished exactly (within 1e-12)
};

struct PochScaled {
  Scaled value = Scaled::one();
  bool zero = false;
};

// Generalized Pochhammer symbol for partition kappa:
//   prod_i ( a - (i-1) beta / 2 )_{kappa_i}
// with ( x )_k the rising factorial.  A factor within 1e-12 of zero sets
// the zero flag and zeroes the value.
Poch gen_pochhammer(double a, const Partition& kappa, double beta);
PochScaled gen_pochhammer_scaled(double a, const Partition& kappa, double beta);

}  // namespace matbeta
