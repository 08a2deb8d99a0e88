#pragma once

#include <string>
#include <vector>

#include "matbeta/jack.hpp"
#include "matbeta/scaled.hpp"
#include "matbeta/specfun.hpp"

namespace matbeta {

enum class SeriesStatus {
  Converged,   // degree blocks fell below rel_tol for stall_window degrees
  Terminated,  // an upper parameter truncates the series exactly
  Truncated,   // degree cap reached before the stall criterion fired
  Diverged,    // outside the convergence domain, or the sum is untrustworthy
};

const char* to_string(SeriesStatus s);

struct SeriesControl {
  int max_degree = 200;
  double rel_tol = 1e-12;
  int stall_window = 3;       // consecutive small degree blocks ending the sum
  int divergence_window = 10; // consecutive growing blocks flagging divergence
  // Ratio of the running peak magnitude to the final sum beyond which the
  // result has lost too many digits to cancellation to be trusted.
  double significance_loss_limit = 1e8;
};

struct SeriesResult {
  LogSigned value;
  SeriesStatus status = SeriesStatus::Truncated;
  int degree = 0;             // highest degree folded into the sum
  double tail_estimate = 0.0; // |last degree block|; exact zero if terminated
  double radius = 0.0;        // max |x_i|
  double significance_loss = 1.0;
  bool terminating = false;
  int termination_degree = -1;
};

// Hypergeometric function of a diagonal matrix argument, pФq type: the
// series over partitions kappa of products of generalized Pochhammer
// symbols in the upper and lower parameter lists times C_kappa(x), summed
// degree by degree.  x holds the argument eigenvalues.
//
// Throws BadLowerParameter when a lower parameter makes some denominator
// Pochhammer vanish at a reachable partition.
SeriesResult hyp_pfq(const std::vector<double>& a, const std::vector<double>& b,
                     const std::vector<double>& x, const AlgebraParam& alg,
                     const SeriesControl& ctl = {});

}  // namespace matbeta
