#include "matbeta/jack.hpp"

#include <algorithm>
#include <cmath>

#include "matbeta/errors.hpp"

namespace matbeta {

namespace {
// Dense level storage beyond this budget switches to the map fallback.
constexpr std::int64_t kDenseBytesCap = 512ll << 20;
}  // namespace

Scaled hook_product(const Partition& lam, double alpha) {
  Partition conj = conjugate(lam);
  Scaled p = Scaled::one();
  for (size_t i0 = 0; i0 < lam.size(); ++i0) {
    double i = static_cast<double>(i0 + 1);
    for (int c = 1; c <= lam[i0]; ++c) {
      double colcnt = conj[c - 1];
      double arm = lam[i0] - c;
      double leg = colcnt - i;
      double upper = leg + alpha * (arm + 1.0);
      double lower = leg + 1.0 + alpha * arm;
      p *= upper * lower;
    }
  }
  return p;
}

JackEngine::JackEngine(std::vector<double> x, double alpha, int max_degree,
                       bool force_ranked)
    : m_(static_cast<int>(x.size())), alpha_(alpha), K_(max_degree), x_(std::move(x)) {
  if (m_ < 1) throw InvalidInput("JackEngine: empty variable vector");
  if (!(alpha_ > 0.0)) throw InvalidInput("JackEngine: alpha must be positive");
  if (K_ < 0) throw InvalidInput("JackEngine: negative degree bound");
  if (K_ > kJackDegreeCap)
    throw TruncationCapExceeded("JackEngine: degree bound exceeds hard cap");

  mu_.assign(m_ + 1, 0);

  const int top_stored = std::max(1, m_ - 1);
  std::int64_t bytes = 0;
  std::vector<std::int64_t> sizes(top_stored + 1, 0);
  for (int j = 1; j <= top_stored; ++j) {
    std::int64_t s = 0;
    for (int w = 0; w <= K_; ++w) s += count_partitions(w, j);
    sizes[j] = s;
    bytes += s * 32;  // value + index metadata
  }
  dense_ = !force_ranked && bytes <= kDenseBytesCap;

  if (dense_) {
    vals_.resize(top_stored + 1);
    base_.resize(top_stored + 1);
    last_.resize(top_stored + 1);
    budget_.resize(top_stored + 1);

    // level 1: index of (v) is v
    vals_[1].assign(K_ + 1, Scaled::zero());
    last_[1].resize(K_ + 1);
    budget_[1].resize(K_ + 1);
    for (int v = 0; v <= K_; ++v) {
      last_[1][v] = v;
      budget_[1][v] = K_ - v;
    }
    for (int j = 2; j <= top_stored; ++j) {
      const auto& pl = last_[j - 1];
      const auto& pb = budget_[j - 1];
      base_[j].resize(pl.size());
      last_[j].resize(sizes[j]);
      budget_[j].resize(sizes[j]);
      vals_[j].assign(sizes[j], Scaled::zero());
      std::int64_t acc = 0;
      for (size_t p = 0; p < pl.size(); ++p) {
        int cnt = std::min(pl[p], pb[p]) + 1;
        base_[j][p] = acc;
        for (int v = 0; v < cnt; ++v) {
          last_[j][acc + v] = v;
          budget_[j][acc + v] = pb[p] - v;
        }
        acc += cnt;
      }
    }
    for (int j = 1; j <= top_stored; ++j) vals_[j][0] = Scaled::one();
  } else {
    mvals_.resize(top_stored + 1);
    for (int j = 1; j <= top_stored; ++j) mvals_[j][Partition{}] = Scaled::one();
  }
  built_ = 0;
}

void JackEngine::extend_to(int k) {
  if (k > K_)
    throw TruncationCapExceeded("JackEngine: extend_to beyond configured bound");
  const int top_stored = std::max(1, m_ - 1);
  for (int w = built_ + 1; w <= k; ++w) {
    // level 1 closed form: J_(w)(x1) = J_(w-1)(x1) * x1 * (1 + (w-1) alpha)
    double step = 1.0 + (w - 1) * alpha_;
    if (dense_) {
      vals_[1][w] = vals_[1][w - 1] * (x_[0] * step);
    } else {
      Partition prev = w >= 2 ? Partition{w - 1} : Partition{};
      mvals_[1][Partition{w}] = mvals_[1][prev] * (x_[0] * step);
    }
    for (int j = 2; j <= top_stored; ++j) {
      for (const Partition& lam : enumerate_partitions(w, j)) {
        int ell = static_cast<int>(lam.size());
        Scaled v = eval_level(j, lam.data(), ell);
        if (dense_) {
          vals_[j][index_of(lam.data(), ell, j)] = v;
        } else {
          mvals_[j][lam] = v;
        }
      }
    }
    built_ = w;
  }
}

Scaled JackEngine::eval_top(const Partition& lam) {
  int w = weight(lam);
  if (w > built_) throw TruncationCapExceeded("JackEngine: eval before extend_to");
  int ell = static_cast<int>(lam.size());
  if (ell > m_) return Scaled::zero();
  if (ell == 0) return Scaled::one();
  if (m_ == 1) {
    if (dense_) return vals_[1][lam[0]];
    return mvals_[1].at(lam);
  }
  return eval_level(m_, lam.data(), ell);
}

Scaled JackEngine::eval_level(int j, const int* lam, int ell) {
  if (ell == 0) return Scaled::one();
  if (j == 1) {
    // only lam = (w) reaches here
    if (dense_) return vals_[1][lam[0]];
    return mvals_[1].at(Partition(lam, lam + ell));
  }
  return dense_ ? eval_level_dense(j, lam, ell) : eval_level_ranked(j, lam, ell);
}

// alpha * Pi1 * Pi2 part of the box removal factor at (r, c0): everything
// that depends on the pristine shape only, not on upper-row choices.
double JackEngine::box_factor_static(const int* lam, int ell, int r, int c0) const {
  double f = alpha_;
  for (int i = 1; i <= r; ++i) {
    double li = lam[i - 1];
    f *= (r - i + 1 + alpha_ * (li - c0)) / (r - i + alpha_ * (li - c0 + 1));
  }
  for (int v = ell; v >= r; --v) {
    int locol = (v < ell ? lam[v] : 0) + 1;
    int hicol = lam[v - 1];
    int A = std::max(locol, 1);
    int B = std::min(hicol, c0 - 1);
    if (A <= B)
      f *= (v - r + alpha_ * (c0 - A + 1)) / (v - r + alpha_ * (c0 - B));
  }
  return f;
}

// Full factor for removing box (r, c0); rows above r sit at their current
// mu_ values, rows r and below at the pristine shape.
double JackEngine::box_factor(const int* lam, int ell, int r, int c0) const {
  double f = box_factor_static(lam, ell, r, c0);
  for (int i = 1; i < r; ++i) {
    double mi = mu_[i - 1];
    f *= (r - i + alpha_ * (mi - c0 + 1)) / (r - i + alpha_ * (mi - c0));
  }
  return f;
}

// Shape-only part of the factor for removing all of row j.
Scaled JackEngine::row_last_pre(const int* lam, int j) const {
  Scaled P = Scaled::one();
  int lj = lam[j - 1];
  for (int c0 = 1; c0 <= lj; ++c0) {
    double f = alpha_ * c0;
    for (int i = 1; i <= j; ++i) {
      double li = lam[i - 1];
      f *= (j - i + 1 + alpha_ * (li - c0)) / (j - i + alpha_ * (li - c0 + 1));
    }
    P *= f;
  }
  return P;
}

std::int64_t JackEngine::index_of(const int* lam, int ell, int j) const {
  std::int64_t idx = ell >= 1 ? lam[0] : 0;
  for (int t = 2; t <= j; ++t) idx = base_[t][idx] + (t <= ell ? lam[t - 1] : 0);
  return idx;
}

Scaled JackEngine::prev_level_value(int j, const int* lam, int ell) const {
  // value of lam at level j-1; requires ell <= j-1
  if (dense_) return vals_[j - 1][index_of(lam, ell, j - 1)];
  return mvals_[j - 1].at(Partition(lam, lam + ell));
}

Scaled JackEngine::pow_xj(double xj, int n) const {
  Scaled r = Scaled::one();
  Scaled b = Scaled::from_double(xj);
  while (n > 0) {
    if (n & 1) r *= b;
    b *= b;
    n >>= 1;
  }
  return r;
}

Scaled JackEngine::eval_level_dense(int j, const int* lam, int ell) {
  const double xj = x_[j - 1];
  if (xj == 0.0) {
    if (ell <= j - 1) return prev_level_value(j, lam, ell);
    return Scaled::zero();
  }
  const bool forced = (ell == j);
  const int rmax = forced ? j - 1 : ell;
  const int lamj = forced ? lam[j - 1] : 0;
  const int hi = lam[rmax - 1];
  const int lo = (rmax < ell) ? lam[rmax] : 0;

  // Column-cumulative static factors for the innermost row.  The
  // v-dependent slice of the forced bottom-row correction folds in here,
  // so the run loop below divides nowhere.
  pcum_.assign(hi - lo + 1, Scaled::one());
  {
    Scaled run = Scaled::one();
    for (int v = hi - 1; v >= lo; --v) {
      run *= box_factor_static(lam, ell, rmax, v + 1);
      pcum_[v - lo] = run;
    }
    if (forced) {
      for (int v = lo; v <= hi; ++v)
        pcum_[v - lo] *=
            (1.0 + alpha_ * v) / (1.0 + alpha_ * (v - lamj));
    }
  }

  Scaled root = forced ? row_last_pre(lam, j) : Scaled::one();
  acc_ = Scaled::zero();
  for (int i = 0; i < rmax; ++i) mu_[i] = lam[i];
  walk_row(j, lam, ell, 1, rmax, forced, lamj, 0, root, 0);
  return acc_;
}

void JackEngine::walk_row(int j, const int* lam, int ell, int r, int rmax,
                          bool forced, int lamj, std::int64_t idx_prev,
                          Scaled beta, int removed) {
  if (r == rmax) {
    const int hi = lam[rmax - 1];
    const int lo = (rmax < ell) ? lam[rmax] : 0;
    inner_run(j, lam, ell, rmax, forced, lamj, idx_prev, beta, removed, lo, hi);
    return;
  }
  const int hi_r = lam[r - 1];
  const int lo_r = lam[r];  // r < rmax <= ell, so the next part exists
  for (int v = hi_r;; --v) {
    std::int64_t idx_r = (r == 1) ? v : base_[r][idx_prev] + v;
    walk_row(j, lam, ell, r + 1, rmax, forced, lamj, idx_r, beta,
             removed + (hi_r - v));
    if (v == lo_r) break;
    beta *= box_factor(lam, ell, r, v);
    mu_[r - 1] = v - 1;
  }
  mu_[r - 1] = hi_r;
}

void JackEngine::inner_run(int j, const int* lam, int ell, int rmax,
                           bool forced, int lamj, std::int64_t idx_prev,
                           const Scaled& beta, int removed, int lo, int hi) {
  // Telescoped upper-row factors for the whole run: numerators end up in
  // tnum below, the fixed denominators (at v = hi) divide out once here.
  double t0 = 1.0, forced_run = 1.0;
  for (int i = 1; i < rmax; ++i) {
    double mi = mu_[i - 1];
    t0 *= (rmax - i + alpha_ * (mi - hi));
    if (forced)
      forced_run *= (j - i + alpha_ * mi) / (j - i + alpha_ * (mi - lamj));
  }
  const double xj = x_[j - 1];
  Scaled xrun = beta;
  xrun *= forced_run / t0;
  xrun *= pow_xj(xj, removed + (forced ? lamj : 0));

  const std::int64_t ib = (rmax == 1) ? 0 : base_[rmax][idx_prev];
  if (rmax == j - 1) {
    const Scaled* prev = vals_[j - 1].data();
    for (int v = hi;; --v) {
      double tnum = 1.0;
      for (int i = 1; i < rmax; ++i)
        tnum *= (rmax - i + alpha_ * (mu_[i - 1] - v));
      Scaled term = xrun;
      term *= pcum_[v - lo];
      term *= prev[ib + v];
      term *= tnum;
      acc_ += term;
      if (v == lo) break;
      xrun *= xj;
    }
  } else {
    for (int v = hi;; --v) {
      std::int64_t idx = ib + v;
      for (int t = rmax + 1; t <= j - 1; ++t) idx = base_[t][idx];
      double tnum = 1.0;
      for (int i = 1; i < rmax; ++i)
        tnum *= (rmax - i + alpha_ * (mu_[i - 1] - v));
      Scaled term = xrun;
      term *= pcum_[v - lo];
      term *= vals_[j - 1][idx];
      term *= tnum;
      acc_ += term;
      if (v == lo) break;
      xrun *= xj;
    }
  }
}

Scaled JackEngine::eval_level_ranked(int j, const int* lam, int ell) {
  const double xj = x_[j - 1];
  if (xj == 0.0) {
    if (ell <= j - 1) return prev_level_value(j, lam, ell);
    return Scaled::zero();
  }
  const bool forced = (ell == j);
  const int rmax = forced ? j - 1 : ell;
  Scaled root = forced ? row_last_pre(lam, j) : Scaled::one();
  acc_ = Scaled::zero();
  for (int i = 0; i < rmax; ++i) mu_[i] = lam[i];
  walk_row_ranked(j, lam, ell, 1, rmax, forced, forced ? lam[j - 1] : 0, root, 0);
  return acc_;
}

void JackEngine::walk_row_ranked(int j, const int* lam, int ell, int r,
                                 int rmax, bool forced, int lamj, Scaled beta,
                                 int removed) {
  if (r > rmax) {
    Scaled f = beta;
    if (forced) {
      for (int i = 1; i <= j - 1; ++i) {
        double mi = mu_[i - 1];
        f *= (j - i + alpha_ * mi) / (j - i + alpha_ * (mi - lamj));
      }
      removed += lamj;
    }
    f *= pow_xj(x_[j - 1], removed);
    int len = rmax;
    while (len > 0 && mu_[len - 1] == 0) --len;
    Partition mu(mu_.begin(), mu_.begin() + len);
    f *= mvals_[j - 1].at(mu);
    acc_ += f;
    return;
  }
  const int hi_r = lam[r - 1];
  const int lo_r = (r < ell) ? lam[r] : 0;
  for (int v = hi_r;; --v) {
    walk_row_ranked(j, lam, ell, r + 1, rmax, forced, lamj, beta,
                    removed + (hi_r - v));
    if (v == lo_r) break;
    beta *= box_factor(lam, ell, r, v);
    mu_[r - 1] = v - 1;
  }
  mu_[r - 1] = hi_r;
}

const Scaled& JackTable::c_value(const Partition& kappa) const {
  int w = weight(kappa);
  if (w < 0 || w > max_degree || length(kappa) > m)
    throw InvalidInput("JackTable: partition outside table range");
  const auto& pw = parts[w];
  for (size_t i = 0; i < pw.size(); ++i)
    if (pw[i] == kappa) return cvals[w][i];
  throw InvalidInput("JackTable: partition not found");
}

double JackTable::c_value_double(const Partition& kappa) const {
  return c_value(kappa).to_double();
}

JackTable jack_table(const std::vector<double>& x, const AlgebraParam& alg,
                     int max_degree, int hard_cap) {
  alg.validate();
  if (x.empty()) throw InvalidInput("jack_table: empty point");
  if (max_degree < 0) throw InvalidInput("jack_table: negative degree");
  if (max_degree > hard_cap || hard_cap > kJackDegreeCap)
    throw TruncationCapExceeded("jack_table: requested degree exceeds hard cap");

  JackTable t;
  t.m = static_cast<int>(x.size());
  t.beta = alg.beta;
  t.alpha = 2.0 / alg.beta;
  t.max_degree = max_degree;
  t.parts.resize(max_degree + 1);
  t.cvals.resize(max_degree + 1);

  JackEngine eng(x, t.alpha, max_degree);
  Scaled kfact = Scaled::one();
  Scaled apow = Scaled::one();
  for (int w = 0; w <= max_degree; ++w) {
    eng.extend_to(w);
    if (w > 0) {
      kfact *= static_cast<double>(w);
      apow *= t.alpha;
    }
    t.parts[w] = enumerate_partitions(w, t.m);
    t.cvals[w].reserve(t.parts[w].size());
    for (const Partition& lam : t.parts[w]) {
      Scaled c = apow * kfact * eng.eval_top(lam) / hook_product(lam, t.alpha);
      t.cvals[w].push_back(c);
    }
  }
  return t;
}

double jack_single(const Partition& kappa, const std::vector<double>& x,
                   const AlgebraParam& alg) {
  alg.validate();
  for (size_t i = 1; i < kappa.size(); ++i)
    if (kappa[i] > kappa[i - 1] || kappa[i] <= 0)
      throw InvalidInput("jack_single: not a partition");
  if (!kappa.empty() && kappa[0] <= 0) throw InvalidInput("jack_single: not a partition");
  if (length(kappa) > static_cast<int>(x.size())) return 0.0;
  int w = weight(kappa);
  if (w > kJackDegreeCap)
    throw TruncationCapExceeded("jack_single: degree exceeds hard cap");
  double alpha = 2.0 / alg.beta;
  JackEngine eng(x, alpha, w);
  eng.extend_to(w);
  Scaled kfact = Scaled::one();
  Scaled apow = Scaled::one();
  for (int t = 1; t <= w; ++t) {
    kfact *= static_cast<double>(t);
    apow *= alpha;
  }
  Scaled c = apow * kfact * eng.eval_top(kappa) / hook_product(kappa, alpha);
  return c.to_double();
}

}  // namespace matbeta
