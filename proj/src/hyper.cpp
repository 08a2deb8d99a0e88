#include "matbeta/hyper.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "matbeta/errors.hpp"

namespace matbeta {

const char* to_string(SeriesStatus s) {
  switch (s) {
    case SeriesStatus::Converged:
      return "converged";
    case SeriesStatus::Terminated:
      return "terminated";
    case SeriesStatus::Truncated:
      return "truncated";
    case SeriesStatus::Diverged:
      return "diverged";
  }
  return "unknown";
}

namespace {

constexpr double kIntSnapTol = 1e-9;
// Degree blocks above this log magnitude abort the sum; no legitimate input
// in range produces blocks near 1e280.
constexpr double kOverflowLogCap = 644.0;

// A lower parameter is unusable when some row factor (b - (i-1) beta/2)
// is a nonpositive integer: the denominator Pochhammer then vanishes at a
// reachable partition.
bool lower_parameter_bad(double b, double beta, int m) {
  for (int i = 1; i <= m; ++i) {
    double v = -b + (i - 1) * beta / 2.0;
    double r = std::round(v);
    if (r >= 0.0 && std::fabs(v - r) <= kIntSnapTol) return true;
  }
  return false;
}

// An upper parameter equal to -n (n a nonnegative integer) zeroes every
// partition with first row longer than n, so total degree tops out at n*m.
int termination_bound(const std::vector<double>& a, int m) {
  int best = -1;
  for (double av : a) {
    double r = std::round(-av);
    if (r >= 0.0 && std::fabs(-av - r) <= kIntSnapTol) {
      int d = static_cast<int>(r) * m;
      if (best < 0 || d < best) best = d;
    }
  }
  return best;
}

}  // namespace

SeriesResult hyp_pfq(const std::vector<double>& a, const std::vector<double>& b,
                     const std::vector<double>& x, const AlgebraParam& alg,
                     const SeriesControl& ctl) {
  alg.validate();
  if (x.empty()) throw InvalidInput("hyp_pfq: empty argument");
  if (ctl.max_degree < 0) throw InvalidInput("hyp_pfq: negative degree cap");
  const int m = static_cast<int>(x.size());
  for (double bv : b)
    if (lower_parameter_bad(bv, alg.beta, m))
      throw BadLowerParameter("hyp_pfq: lower parameter hits a pole");

  SeriesResult res;
  for (double v : x) res.radius = std::max(res.radius, std::fabs(v));
  res.termination_degree = termination_bound(a, m);
  res.terminating = res.termination_degree >= 0;

  // Convergence class drives which safeguards are armed.  Terminating
  // series are polynomials and always convergent.
  const int p = static_cast<int>(a.size()), q = static_cast<int>(b.size());
  enum class Cls { Convergent, Boundary, Divergent };
  Cls cls = Cls::Convergent;
  if (!res.terminating) {
    if (p == q + 1) {
      if (res.radius > 1.0 + 1e-9)
        cls = Cls::Divergent;
      else if (res.radius >= 1.0 - 1e-9)
        cls = Cls::Boundary;
    } else if (p > q + 1 && res.radius > 0.0) {
      cls = Cls::Divergent;
    }
  }

  Scaled S = Scaled::one();  // degree-0 block
  if (cls == Cls::Divergent) {
    res.value = LogSigned::from_scaled(S);
    res.status = SeriesStatus::Diverged;
    return res;
  }

  int kmax = ctl.max_degree;
  if (res.terminating) kmax = std::min(kmax, res.termination_degree);
  if (kmax > kJackDegreeCap)
    throw TruncationCapExceeded("hyp_pfq: degree cap exceeds hard limit");

  const double alpha = 2.0 / alg.beta;
  JackEngine eng(x, alpha, kmax);

  double peak_log = 0.0;       // running max of log|S|, log|D_k|
  double prev_block_log = 0.0; // log of the degree-0 block
  double last_block_log = -std::numeric_limits<double>::infinity();
  int stall = 0, grow = 0;
  int final_k = 0;

  enum class Stop { Exhausted, Stalled, Grew, Overflowed };
  Stop stop = Stop::Exhausted;

  Scaled apow = Scaled::one();
  for (int k = 1; k <= kmax; ++k) {
    eng.extend_to(k);
    apow *= alpha;
    Scaled Dk = Scaled::zero();
    for (const Partition& lam : enumerate_partitions(k, m)) {
      Scaled coef = apow;
      bool zero = false;
      for (double av : a) {
        auto f = gen_pochhammer_scaled(av, lam, alg.beta);
        if (f.zero) {
          zero = true;
          break;
        }
        coef *= f.value;
      }
      if (zero) continue;
      for (double bv : b) {
        auto f = gen_pochhammer_scaled(bv, lam, alg.beta);
        if (f.zero)
          throw BadLowerParameter("hyp_pfq: denominator Pochhammer vanished");
        coef /= f.value;
      }
      coef /= hook_product(lam, alpha);
      coef *= eng.eval_top(lam);
      Dk += coef;
    }
    S += Dk;
    final_k = k;
    const double lS = S.log_abs(), lD = Dk.log_abs();
    peak_log = std::max({peak_log, lS, lD});
    last_block_log = lD;

    if (!S.is_zero() && lD < std::log(ctl.rel_tol) + lS)
      ++stall;
    else
      stall = 0;
    if (stall >= ctl.stall_window) {
      stop = Stop::Stalled;
      break;
    }
    if (cls == Cls::Boundary) {
      if (lD > prev_block_log)
        ++grow;
      else
        grow = 0;
      if (grow >= ctl.divergence_window) {
        stop = Stop::Grew;
        break;
      }
    }
    prev_block_log = lD;
    if (lD > kOverflowLogCap) {
      stop = Stop::Overflowed;
      break;
    }
  }

  res.degree = final_k;
  res.value = LogSigned::from_scaled(S);
  res.tail_estimate =
      final_k == 0 ? 0.0 : std::exp(std::min(last_block_log, 709.0));
  res.significance_loss =
      S.is_zero() ? std::numeric_limits<double>::infinity()
                  : std::exp(std::min(peak_log - S.log_abs(), 709.0));

  const bool ran_out_terminated =
      res.terminating && kmax == res.termination_degree;
  switch (stop) {
    case Stop::Grew:
    case Stop::Overflowed:
      res.status = SeriesStatus::Diverged;
      break;
    case Stop::Stalled:
      if (res.terminating && final_k >= res.termination_degree)
        res.status = SeriesStatus::Terminated;
      else if (cls == Cls::Boundary)
        res.status = SeriesStatus::Truncated;  // boundary sums stay suspect
      else
        res.status = SeriesStatus::Converged;
      break;
    case Stop::Exhausted:
      res.status = ran_out_terminated ? SeriesStatus::Terminated
                                      : SeriesStatus::Truncated;
      break;
  }
  if (res.status == SeriesStatus::Terminated) res.tail_estimate = 0.0;

  // A sum that cancelled away more digits than the tolerance budget is not
  // usable no matter how it stopped.
  if (res.status != SeriesStatus::Diverged &&
      res.significance_loss > ctl.significance_loss_limit)
    res.status = SeriesStatus::Diverged;

  return res;
}

}  // namespace matbeta
