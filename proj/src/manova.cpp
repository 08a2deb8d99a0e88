#include "matbeta/manova.hpp"

#include <algorithm>
#include <cmath>

#include "matbeta/errors.hpp"

namespace matbeta {

namespace {

// Relative cutoff below which an eigenvalue counts as zero for rank and
// positivity decisions on SSP quotients.
constexpr double kRankTol = 1e-10;

SymMatrix sym_of(const Mat& a) { return SymMatrix(a); }

// A^{-1/2} for symmetric positive definite A via its eigendecomposition.
SymMatrix inv_sqrt_pd(const SymMatrix& a, const char* what) {
  EigenDecomposition ed = eigvalsh(a);
  const double top = ed.values.empty() ? 0.0 : ed.values.front();
  Mat s(a.dim(), a.dim());
  for (int k = 0; k < a.dim(); ++k) {
    if (!(ed.values[k] > 1e-12 * std::max(top, 0.0)))
      throw NotPD(std::string(what) + " is not positive definite");
    s.at(k, k) = 1.0 / std::sqrt(ed.values[k]);
  }
  return sym_of(ed.vectors * s * ed.vectors.transpose());
}

}  // namespace

void LinearModel::validate() const {
  if (y.rows <= 0 || y.cols <= 0 || x.rows <= 0 || x.cols <= 0)
    throw ShapeError("linear model: empty Y or X");
  if (x.rows != y.rows)
    throw ShapeError("linear model: Y and X row counts differ");
  const int r = numeric_rank(x);
  if (y.rows < y.cols + r)
    throw InvalidInput(
        "linear model: need n >= m + rank(X) for a nonsingular error SSP");
}

void SSMatrices::validate() const {
  if (s_h.dim() <= 0 || s_h.dim() != s_e.dim())
    throw ShapeError("SSP matrices must be square with equal dimension");
  if (nu_h < 1 || nu_e < 1)
    throw InvalidInput("SSP degrees of freedom must be positive");
}

Mat fit(const LinearModel& model) {
  model.validate();
  return pinv(model.x) * model.y;
}

SSMatrices sums_of_squares(const LinearModel& model,
                           const HypothesisSpec& hyp) {
  model.validate();
  const int n = model.y.rows;
  const int m = model.y.cols;
  const int p = model.x.cols;

  Mat c = hyp.c;
  if (c.rows <= 0 || c.cols != p)
    throw ShapeError("hypothesis: C must have one column per design column");
  const int q = c.rows;
  if (numeric_rank(c) != q)
    throw InvalidInput("hypothesis: C must have full row rank");

  Mat mm = hyp.m;
  if (mm.rows == 0 && mm.cols == 0) mm = Mat::identity(m);
  if (mm.rows != m)
    throw ShapeError("hypothesis: M must have one row per response");
  const int g = mm.cols;
  if (g <= 0 || numeric_rank(mm) != g)
    throw InvalidInput("hypothesis: M must have full column rank");

  Mat h = hyp.h;
  if (h.rows == 0 && h.cols == 0) h = Mat(q, g);
  if (h.rows != q || h.cols != g)
    throw ShapeError("hypothesis: H must be q x g");

  const Mat xp = pinv(model.x);
  const Mat bhat = xp * model.y;
  const Mat d = c * bhat * mm - h;

  // G = C (X'X)^+ C' is singular exactly when some combination of the rows
  // of C is orthogonal to the row space of X.  Singularity is judged against
  // the scale a unit contrast could reach, |C|^2 max eig((X'X)^+), because
  // G's own largest eigenvalue vanishes with it in the fully degenerate case.
  const Mat gram = model.x.transpose() * model.x;
  const Mat gram_pinv = pinv(gram);
  const SymMatrix gmat = sym_of(c * gram_pinv * c.transpose());
  {
    double cnorm2 = 0.0;
    for (int i = 0; i < q; ++i) {
      double row = 0.0;
      for (int j = 0; j < p; ++j) row += c.at(i, j) * c.at(i, j);
      cnorm2 = std::max(cnorm2, row);
    }
    std::vector<double> gp = eigenvalues_desc(sym_of(gram_pinv));
    std::vector<double> ev = eigenvalues_desc(gmat);
    if (!(ev.back() > kRankTol * cnorm2 * std::max(gp.front(), 0.0)))
      throw NotEstimable("hypothesis rows are not estimable under X");
  }

  SSMatrices ss;
  ss.s_h = sym_of(d.transpose() * sym_inv(gmat).to_mat() * d);
  const Mat ym = model.y * mm;
  // (YM)' (I - XX^+) (YM) written as R'R with R the residual, so the error
  // SSP stays positive semidefinite under roundoff.
  const Mat resid = ym - model.x * (xp * ym);
  ss.s_e = sym_of(resid.transpose() * resid);
  ss.nu_h = q;
  ss.nu_e = n - numeric_rank(model.x);
  ss.validate();
  return ss;
}

SymMatrix f_statistic(const SSMatrices& ss) {
  ss.validate();
  const SymMatrix ei = inv_sqrt_pd(ss.s_e, "error SSP");
  return sym_of(ei.to_mat() * ss.s_h.to_mat() * ei.to_mat());
}

SymMatrix u_statistic(const SSMatrices& ss) {
  ss.validate();
  const SymMatrix rh = sqrt_psd(ss.s_h);
  const SymMatrix ti = sym_inv(ss.s_h + ss.s_e);
  return sym_of(rh.to_mat() * ti.to_mat() * rh.to_mat());
}

SwappedParams swap_parameters(int m, int nu_h, int nu_e) {
  if (m < 1 || nu_h < 1 || nu_e < 1)
    throw InvalidInput("swap_parameters: dimensions must be positive");
  SwappedParams out{m, nu_h, nu_e, false};
  if (m > nu_h) {
    out.m = nu_h;
    out.nu_h = m;
    out.nu_e = nu_e + nu_h - m;
    out.swapped = true;
    if (out.nu_e <= 0)
      throw DegenerateDesign(
          "swap_parameters: error df after swapping is not positive");
  }
  return out;
}

CriteriaReport classical_criteria(const SSMatrices& ss) {
  ss.validate();
  CriteriaReport r;
  r.m = ss.s_h.dim();
  r.nu_h = ss.nu_h;
  r.nu_e = ss.nu_e;
  r.s = std::min(r.m, r.nu_h);

  {
    std::vector<double> ev = eigenvalues_desc(ss.s_h);
    double top = 0.0;
    for (double v : ev) top = std::max(top, std::fabs(v));
    for (double v : ev)
      if (std::fabs(v) > kRankTol * top) ++r.rank_sh;
  }

  r.lambda = eigenvalues_desc(f_statistic(ss));
  for (double& l : r.lambda) l = std::max(l, 0.0);
  r.theta.resize(r.lambda.size());
  for (size_t i = 0; i < r.lambda.size(); ++i)
    r.theta[i] = r.lambda[i] / (1.0 + r.lambda[i]);

  r.wilks_lambda = 1.0;
  r.wilks_u = 1.0;
  for (int i = 0; i < r.m; ++i) {
    r.wilks_lambda /= 1.0 + r.lambda[i];
    r.wilks_u *= r.theta[i];
  }
  if (r.rank_sh == r.m) {
    double v = 1.0;
    for (int i = 0; i < r.m; ++i) v *= r.lambda[i];
    r.wilks_v = v;
    r.anderson_lambda_min = r.lambda[r.m - 1];
    r.roy_theta_min = r.theta[r.m - 1];
  }

  double inv_theta = 0.0;
  r.lawley_hotelling = 0.0;
  r.pillai_v = 0.0;
  for (int i = 0; i < r.s; ++i) {
    r.lawley_hotelling += r.lambda[i];
    r.pillai_v += r.theta[i];
    inv_theta += 1.0 / r.theta[i];
  }
  r.pillai_w = r.s - r.pillai_v;
  r.pillai_h = 1.0 / (1.0 + r.lawley_hotelling / r.s);
  r.pillai_r = r.s / inv_theta;
  r.pillai_t = r.pillai_r / (1.0 - r.pillai_r);
  r.roy_lambda_max = r.lambda[0];
  r.roy_theta_max = r.theta[0];
  r.dempster_t = ss.s_h.trace() / ss.s_e.trace();
  return r;
}

PValueResult matrix_p_value(const SSMatrices& ss, const AlgebraParam& alg,
                            const SeriesControl& ctl) {
  ss.validate();
  alg.validate();
  PValueResult out;
  out.m = ss.s_h.dim();
  out.s = std::min(out.m, ss.nu_h);

  if (ss.s_h.max_abs() == 0.0) {
    out.dims = {out.m, ss.nu_h, ss.nu_e, false};
    out.p_value = 1.0;
    out.trivial_zero_sh = true;
    out.probs.consensus = 1.0;
    return out;
  }

  std::vector<double> lambda = eigenvalues_desc(f_statistic(ss));
  out.dims = swap_parameters(out.m, ss.nu_h, ss.nu_e);
  out.params = df_to_params(out.dims.m, out.dims.nu_h, out.dims.nu_e, alg);

  out.spectrum.assign(lambda.begin(), lambda.begin() + out.s);
  for (double l : out.spectrum)
    if (!(l > kRankTol * std::max(lambda.front(), 0.0)))
      throw NotPD(
          "hypothesis SSP has rank below min(m, nu_h); the upper probability "
          "displays need a positive definite argument");

  out.probs = upper_prob_auto(out.spectrum, out.params, ctl);
  out.p_value = out.probs.consensus;
  out.reject_05 = out.p_value < 0.05;
  out.reject_01 = out.p_value < 0.01;
  return out;
}

ManovaResult run_test(const SSMatrices& ss, const AlgebraParam& alg,
                      const SeriesControl& ctl) {
  return ManovaResult{classical_criteria(ss), matrix_p_value(ss, alg, ctl)};
}

ManovaResult cov_equality_test(const SymMatrix& s1, const SymMatrix& s2,
                               int nu1, int nu2, const AlgebraParam& alg,
                               const SeriesControl& ctl) {
  if (s1.dim() != s2.dim())
    throw ShapeError("covariance test: matrices must share a dimension");
  {
    std::vector<double> ev = eigenvalues_desc(s1);
    if (ev.back() < -1e-10 * std::max(std::fabs(ev.front()), 1.0))
      throw NotPSD("covariance test: S_1 must be positive semidefinite");
  }
  SSMatrices ss;
  ss.s_h = s1;
  ss.s_e = s2;
  ss.nu_h = nu1;
  ss.nu_e = nu2;
  return run_test(ss, alg, ctl);
}

}  // namespace matbeta
